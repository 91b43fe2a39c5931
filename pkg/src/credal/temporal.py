"""Temporal discounting: exponential decay of information value.

Each context forgets at its own rate lambda (1/seconds), usually given as
a half-life. At age t a context retains the fraction kappa = exp(-lambda*t)
of its mass; the functions here turn retention vectors into discount-rate
vectors for the discounting operators.

Two mappings from kappa to alpha exist for the conservative/proportional/
optimistic schemes and both are implemented behind `alpha_mode`:

* "postulate" (default): alpha = 1 - kappa, so a singleton's mass is
  multiplied by exactly kappa, honoring the decay law;
* "paper-table": alpha = kappa, the identification used by the published
  worked tables this package reproduces in its golden checks.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .discount import SCHEME_DISCOUNTS, ContextVector
from .errors import (
    DuplicateContextError,
    EmptyContextError,
    FrameMismatchError,
    InfeasibleAlphasError,
    InvalidFractionError,
    KappaOutOfRangeError,
    NegativeTimeError,
    NonPositiveKappaError,
    NonPositiveRateError,
    NonPositiveTimeError,
    NotSingletonCoverError,
)
from .frame import Frame, Subset
from .mass import MassFunction, SubsetLike, coerce_subset

ALPHA_MODES = ("postulate", "paper-table")

DecayPairs = Union[Mapping[SubsetLike, float], Iterable[tuple[SubsetLike, float]]]

# Raw alphas within float dust of the [0, 1] borders are snapped onto them.
_EDGE_DUST = 1e-12


def lambda_from_half_life(t_half: float) -> float:
    """Decay rate from a half-life: ln 2 / t_half."""
    if not t_half > 0.0:
        raise NonPositiveTimeError(f"half-life must be positive, got {t_half!r}")
    return math.log(2.0) / t_half


def lambda_from_fraction_life(n: float, t: float) -> float:
    """Decay rate from "one n-th of the mass is left after t": ln n / t."""
    if not n > 1.0:
        raise InvalidFractionError(f"fraction denominator must exceed 1, got {n!r}")
    if not t > 0.0:
        raise NonPositiveTimeError(f"fraction-life time must be positive, got {t!r}")
    return math.log(n) / t


def _check_contexts(frame: Frame, contexts: tuple[Subset, ...]) -> None:
    seen = set()
    for theta in contexts:
        if theta.frame != frame:
            raise FrameMismatchError("context belongs to a different frame")
        if theta.is_empty:
            raise EmptyContextError("decay contexts must be non-empty")
        if theta.bits in seen:
            raise DuplicateContextError(f"context {theta} listed twice")
        seen.add(theta.bits)


@dataclass(frozen=True)
class DecaySpec:
    """Per-context exponential decay rates (1/seconds)."""

    frame: Frame
    contexts: tuple[Subset, ...]
    rates: tuple[float, ...]

    def __post_init__(self):
        if len(self.contexts) != len(self.rates):
            raise ValueError("contexts and rates differ in length")
        _check_contexts(self.frame, self.contexts)
        for rate in self.rates:
            if not (math.isfinite(rate) and rate > 0.0):
                raise NonPositiveRateError(
                    f"decay rate must be a finite positive real, got {rate!r}"
                )

    @classmethod
    def from_pairs(cls, frame: Frame, pairs: DecayPairs) -> DecaySpec:
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        contexts: list[Subset] = []
        rates: list[float] = []
        for expr, rate in pairs:
            contexts.append(coerce_subset(frame, expr))
            rates.append(float(rate))
        return cls(frame, tuple(contexts), tuple(rates))

    @classmethod
    def from_half_lives(cls, frame: Frame, pairs: DecayPairs) -> DecaySpec:
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        return cls.from_pairs(
            frame, [(expr, lambda_from_half_life(t)) for expr, t in pairs]
        )

    def items(self) -> Iterator[tuple[Subset, float]]:
        return zip(self.contexts, self.rates)

    def __len__(self) -> int:
        return len(self.contexts)


@dataclass(frozen=True)
class KappaVector:
    """Retained fractions kappa in (0, 1] per context, at evaluation time t."""

    frame: Frame
    contexts: tuple[Subset, ...]
    kappas: tuple[float, ...]
    t: float

    def __post_init__(self):
        if len(self.contexts) != len(self.kappas):
            raise ValueError("contexts and kappas differ in length")
        _check_contexts(self.frame, self.contexts)
        if self.t < 0.0:
            raise NegativeTimeError(f"age must be non-negative, got {self.t!r}")
        for kappa in self.kappas:
            if not kappa > 0.0:
                raise NonPositiveKappaError(f"retention {kappa!r} must be positive")
            if kappa > 1.0:
                raise KappaOutOfRangeError(f"retention {kappa!r} exceeds 1")
            if self.t == 0.0 and kappa != 1.0:
                raise KappaOutOfRangeError("at age 0 every retention must be 1")

    def items(self) -> Iterator[tuple[Subset, float]]:
        return zip(self.contexts, self.kappas)

    def __len__(self) -> int:
        return len(self.kappas)


def kappa_at(spec: DecaySpec, t: float) -> KappaVector:
    """Retention vector exp(-lambda * t) at age t."""
    if t < 0.0:
        raise NegativeTimeError(f"age must be non-negative, got {t!r}")
    # exp underflows to 0 near lambda*t ~ 745; keep kappa positive.
    kappas = tuple(
        max(math.exp(-rate * t), sys.float_info.min) for rate in spec.rates
    )
    return KappaVector(spec.frame, spec.contexts, kappas, t)


def contextual_alphas_from_kappa(kappa: KappaVector) -> ContextVector:
    """Solve the contextual-discounting system for discount rates.

    Defined for retention vectors over the K singletons of the frame. The
    closed form is alpha_i = 1 - ((prod of the other kappas) /
    kappa_i^(K-2))^(1/(K-1)), evaluated in log space. Raises
    InfeasibleAlphasError, carrying the raw vector, when any alpha falls
    outside [0, 1]; K = 1 degenerates to alpha = 1 - kappa.
    """
    k = kappa.frame.size
    covered = 0
    for theta in kappa.contexts:
        if not theta.is_singleton:
            raise NotSingletonCoverError(f"context {theta} is not a singleton")
        covered |= theta.bits
    if len(kappa.contexts) != k or covered != kappa.frame.full_bits:
        raise NotSingletonCoverError(
            "retentions must cover every singleton of the frame exactly once"
        )
    if k == 1:
        raw = [1.0 - kappa.kappas[0]]
    else:
        logs = [math.log(v) for v in kappa.kappas]
        shared = math.fsum(logs) / (k - 1)
        raw = [1.0 - math.exp(shared - log_k) for log_k in logs]
    alphas = []
    for a in raw:
        if -_EDGE_DUST <= a < 0.0:
            a = 0.0
        elif 1.0 < a <= 1.0 + _EDGE_DUST:
            a = 1.0
        alphas.append(a)
    if any(not 0.0 <= a <= 1.0 for a in alphas):
        raise InfeasibleAlphasError(raw)
    return ContextVector(kappa.frame, kappa.contexts, tuple(alphas))


def scheme_alphas_from_kappa(kappa: KappaVector) -> ContextVector:
    """Discount rates for the conservative/proportional/optimistic family.

    alpha = 1 - kappa, so each singleton focal mass is retained at exactly
    its decayed fraction.
    """
    return ContextVector(
        kappa.frame, kappa.contexts, tuple(1.0 - v for v in kappa.kappas)
    )


def temporal_discount(
    m: MassFunction,
    spec: DecaySpec,
    t: float,
    scheme: str,
    alpha_mode: str = "postulate",
) -> MassFunction:
    """Age a mass function by t seconds under one of the three new schemes.

    Pipeline: retention vector at t, then the alpha mapping selected by
    `alpha_mode`, then the scheme discount.
    """
    try:
        apply = SCHEME_DISCOUNTS[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}") from None
    if alpha_mode not in ALPHA_MODES:
        raise ValueError(f"unknown alpha mode {alpha_mode!r}")
    kappa = kappa_at(spec, t)
    if alpha_mode == "postulate":
        ctx = scheme_alphas_from_kappa(kappa)
    else:
        ctx = ContextVector(kappa.frame, kappa.contexts, kappa.kappas)
    return apply(m, ctx)
