"""Discounting operators for mass functions.

Five operators live here:

* classical: one rate for the whole source;
* contextual: disjunctive combination with a component mass built from
  per-context simple components (mass moves onto supersets);
* conservative / proportional / optimistic: a set's mass is scaled down by
  every context it intersects / intersects weighted by the overlap ratio /
  is contained in, and everything removed from proper subsets is
  transferred to the full frame.

The full-frame mass of the last three is always the residual
1 - sum over proper subsets, which makes every output a mass function by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    AlphaOutOfRangeError,
    DuplicateContextError,
    EmptyContextError,
    FrameMismatchError,
    NotNormalError,
    NotSingletonError,
    OverlappingContextSetsError,
)
from .frame import Frame, Subset
from .mass import MassFunction, SubsetLike, coerce_subset, drc_combine

ContextPairs = Union[
    Mapping[SubsetLike, float], Iterable[tuple[SubsetLike, float]]
]


@dataclass(frozen=True)
class ContextVector:
    """Distinct non-empty contexts with discount rates in [0, 1].

    Contexts are arbitrary subsets of the frame; they are not required to
    partition it (use :meth:`is_partition` when a caller needs that).
    """

    frame: Frame
    contexts: tuple[Subset, ...]
    alphas: tuple[float, ...]

    def __post_init__(self):
        if len(self.contexts) != len(self.alphas):
            raise ValueError("contexts and alphas differ in length")
        seen = set()
        for theta in self.contexts:
            if theta.frame != self.frame:
                raise FrameMismatchError("context belongs to a different frame")
            if theta.is_empty:
                raise EmptyContextError("no discount rate may target the empty set")
            if theta.bits in seen:
                raise DuplicateContextError(f"context {theta} listed twice")
            seen.add(theta.bits)
        for alpha in self.alphas:
            if not 0.0 <= alpha <= 1.0:
                raise AlphaOutOfRangeError(f"discount rate {alpha!r} outside [0, 1]")

    @classmethod
    def from_pairs(cls, frame: Frame, pairs: ContextPairs) -> ContextVector:
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        contexts: list[Subset] = []
        alphas: list[float] = []
        for expr, alpha in pairs:
            contexts.append(coerce_subset(frame, expr))
            alphas.append(float(alpha))
        return cls(frame, tuple(contexts), tuple(alphas))

    def items(self) -> Iterator[tuple[Subset, float]]:
        return zip(self.contexts, self.alphas)

    def __len__(self) -> int:
        return len(self.contexts)

    def is_partition(self) -> bool:
        """True when the contexts are pairwise disjoint and cover the frame."""
        union = 0
        total = 0
        for theta in self.contexts:
            union |= theta.bits
            total += theta.cardinality
        return union == self.frame.full_bits and total == self.frame.size


def classical_discount(m: MassFunction, alpha: float) -> MassFunction:
    """Scale every proper subset by (1 - alpha); the rest goes to the frame."""
    if not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRangeError(f"discount rate {alpha!r} outside [0, 1]")
    beta = 1.0 - alpha
    full = m.frame.full_bits
    out = {bits: v * beta for bits, v in m.focal_bits() if bits != full}
    out[full] = beta * m.mass_bits(full) + alpha
    return MassFunction._from_bits(m.frame, out)


def contextual_component_mass(ctx: ContextVector) -> MassFunction:
    """The discounting mass: disjunctive combination of the per-context
    simple components {empty -> 1 - alpha, theta -> alpha}.

    Focal sets are unions of contexts, so the fold stays sparse.
    """
    acc: dict[int, float] = {0: 1.0}
    for theta, alpha in ctx.items():
        beta = 1.0 - alpha
        nxt: dict[int, float] = {}
        for bits, v in acc.items():
            nxt[bits] = nxt.get(bits, 0.0) + v * beta
            u = bits | theta.bits
            nxt[u] = nxt.get(u, 0.0) + v * alpha
        acc = nxt
    return MassFunction._from_bits(ctx.frame, acc)


def contextual_discount(m: MassFunction, ctx: ContextVector) -> MassFunction:
    """Contextual discounting: combine disjunctively with the component mass."""
    if m.frame != ctx.frame:
        raise FrameMismatchError("mass function and contexts on different frames")
    return drc_combine(m, contextual_component_mass(ctx))


def contextual_discount_singleton(
    m: MassFunction, ctx: ContextVector, theta: SubsetLike
) -> float:
    """Shortcut for the contextually discounted mass of a singleton.

    For a normal mass function the full combination collapses to
    m({w}) * b_component({w}); equals contextual_discount evaluated there.
    """
    theta = coerce_subset(m.frame, theta)
    if not m.is_normal:
        raise NotNormalError("shortcut requires zero mass on the empty set")
    if not theta.is_singleton:
        raise NotSingletonError(f"{theta} is not a singleton")
    component = contextual_component_mass(ctx)
    return m.mass(theta) * component.implicability(theta)


# -- the conservative / proportional / optimistic family --------------------


def _conservative_factor(bits: int, ctx: ContextVector) -> float:
    f = 1.0
    for theta, alpha in ctx.items():
        if bits & theta.bits:
            f *= 1.0 - alpha
    return f


def _optimistic_factor(bits: int, ctx: ContextVector) -> float:
    f = 1.0
    for theta, alpha in ctx.items():
        if bits & ~theta.bits == 0:
            f *= 1.0 - alpha
    return f


def _proportional_factor(bits: int, ctx: ContextVector) -> float:
    f = 1.0
    size = bits.bit_count()
    for theta, alpha in ctx.items():
        overlap = (bits & theta.bits).bit_count()
        if overlap:
            f *= 1.0 - alpha * overlap / size
    return f


def _scheme_discount(m: MassFunction, ctx: ContextVector, factor) -> MassFunction:
    if m.frame != ctx.frame:
        raise FrameMismatchError("mass function and contexts on different frames")
    full = m.frame.full_bits
    all_beta = 1.0
    for _, alpha in ctx.items():
        all_beta *= 1.0 - alpha
    out: dict[int, float] = {}
    removed = []
    for bits, v in m.focal_bits():
        if bits == full:
            continue
        scaled = v * (all_beta if bits == 0 else factor(bits, ctx))
        out[bits] = scaled
        removed.append(v - scaled)
    # Residual rule: the frame absorbs everything removed from proper
    # subsets, so the output total equals the input total.
    out[full] = m.mass_bits(full) + fsum(removed)
    return MassFunction._from_bits(m.frame, out)


def conservative_discount(m: MassFunction, ctx: ContextVector) -> MassFunction:
    """Discount a set by every context it has elements in common with."""
    return _scheme_discount(m, ctx, _conservative_factor)


def optimistic_discount(m: MassFunction, ctx: ContextVector) -> MassFunction:
    """Discount a set only by the contexts that contain it."""
    return _scheme_discount(m, ctx, _optimistic_factor)


def proportional_discount(m: MassFunction, ctx: ContextVector) -> MassFunction:
    """Discount a set by intersecting contexts, weighted by |A & theta| / |A|."""
    return _scheme_discount(m, ctx, _proportional_factor)


SCHEME_DISCOUNTS = {
    "conservative": conservative_discount,
    "proportional": proportional_discount,
    "optimistic": optimistic_discount,
}


def grouped_discount(
    m: MassFunction, parts: Sequence[ContextVector], scheme: str
) -> MassFunction:
    """Apply one scheme once with the concatenation of several context vectors.

    Requires the parts' context sets to be pairwise disjoint (no context
    listed in two parts); under that condition the result equals applying
    the parts sequentially in any order.
    """
    try:
        apply = SCHEME_DISCOUNTS[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}") from None
    seen: set[int] = set()
    contexts: list[Subset] = []
    alphas: list[float] = []
    for part in parts:
        if part.frame != m.frame:
            raise FrameMismatchError("context vector on a different frame")
        for theta, alpha in part.items():
            if theta.bits in seen:
                raise OverlappingContextSetsError(
                    f"context {theta} appears in more than one part"
                )
            seen.add(theta.bits)
            contexts.append(theta)
            alphas.append(alpha)
    return apply(m, ContextVector(m.frame, tuple(contexts), tuple(alphas)))
