"""Canonical disjunctive decomposition and the weight-scaling discount route.

A strictly subnormal mass function factors uniquely into two-point
components {empty -> v(A), A -> 1 - v(A)}, one per non-empty A, combined
under the disjunctive rule; weights may exceed 1, in which case the
component has a negative entry. Scaling a weight v(theta) by (1 - alpha)
is the same as combining with the simple discount component for theta,
which is what makes this an alternative route to contextual discounting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .errors import (
    FrameMismatchError,
    FrameTooLargeError,
    InvalidWeightError,
    ZeroImplicabilityError,
)
from .frame import MAX_DENSE_SIZE, Frame, Subset
from .lattice import SignedMassVector, mobius_transform, zeta_transform
from .mass import MassFunction, SubsetLike, coerce_subset
from .discount import ContextVector


@dataclass(frozen=True)
class DisjunctiveWeights:
    """Weights v(A) for every non-empty A, as a dense bitmask-keyed mapping."""

    frame: Frame
    weights: Mapping[int, float]

    def __post_init__(self):
        expected = set(range(1, (1 << self.frame.size)))
        if set(self.weights) != expected:
            raise ValueError("weights must cover exactly the non-empty subsets")
        for bits, v in self.weights.items():
            if not np.isfinite(v) or v < 0.0:
                raise InvalidWeightError(
                    f"weight {v!r} on subset mask {bits:#x} is not a finite"
                    " non-negative real"
                )

    @classmethod
    def from_partial(
        cls, frame: Frame, pairs: Mapping[SubsetLike, float]
    ) -> DisjunctiveWeights:
        """Build weights from a sparse mapping; absent subsets default to 1."""
        weights = {bits: 1.0 for bits in range(1, 1 << frame.size)}
        for expr, v in pairs.items():
            subset = coerce_subset(frame, expr)
            if subset.is_empty:
                raise ValueError("the empty set carries no disjunctive weight")
            weights[subset.bits] = float(v)
        return cls(frame, weights)

    def weight(self, subset: SubsetLike) -> float:
        return self.weights[coerce_subset(self.frame, subset).bits]

    def items(self) -> Iterator[tuple[Subset, float]]:
        for bits in sorted(self.weights):
            yield Subset(self.frame, bits), self.weights[bits]

    def scaled(self, ctx: ContextVector) -> DisjunctiveWeights:
        """Scale v(theta) by (1 - alpha_theta) for every context."""
        if ctx.frame != self.frame:
            raise FrameMismatchError("contexts on a different frame")
        weights = dict(self.weights)
        for theta, alpha in ctx.items():
            weights[theta.bits] *= 1.0 - alpha
        return DisjunctiveWeights(self.frame, weights)


def disjunctive_decompose(m: MassFunction) -> DisjunctiveWeights:
    """Weights of the canonical disjunctive decomposition.

    v(A) is the alternating product of implicabilities over the subsets of
    A, computed as a signed Mobius transform of log b over the dense
    lattice. Requires b(B) > 0 everywhere, i.e. a strictly subnormal input.
    """
    if m.frame.size > MAX_DENSE_SIZE:
        raise FrameTooLargeError(
            f"dense decomposition refused above {MAX_DENSE_SIZE} labels"
        )
    b = zeta_transform(m.to_dense())
    nonpos = np.nonzero(b <= 0.0)[0]
    if nonpos.size:
        raise ZeroImplicabilityError(Subset(m.frame, int(nonpos[0])))
    log_v = -mobius_transform(np.log(b))
    v = np.exp(log_v)
    return DisjunctiveWeights(
        m.frame, {bits: float(v[bits]) for bits in range(1, b.size)}
    )


def recompose_weights(w: DisjunctiveWeights) -> MassFunction:
    """Combine all two-point components back into a mass function.

    Works in implicability space, where the disjunctive-rule product is a
    pointwise product: each component contributes v(A) at every index not
    containing A and 1 elsewhere. Zero weights (fully discounted contexts)
    force the implicability to 0 outside their union.
    """
    n = 1 << w.frame.size
    log_w = np.zeros(n)
    zero_union = 0
    for bits, v in w.weights.items():
        if v == 0.0:
            zero_union |= bits
        else:
            log_w[bits] = np.log(v)
    log_b = log_w.sum() - zeta_transform(log_w)
    b = np.exp(log_b)
    if zero_union:
        idx = np.arange(n)
        b[(idx & zero_union) != zero_union] = 0.0
    dense = mobius_transform(b)
    return SignedMassVector(w.frame, dense).to_mass()


def generalized_contextual_discount(m: MassFunction, ctx: ContextVector) -> MassFunction:
    """Contextual discounting through the weight-scaling route.

    Decomposes, scales v(theta) by (1 - alpha_theta), recomposes. Agrees
    with :func:`credal.discount.contextual_discount` whenever the
    decomposition exists.
    """
    if m.frame != ctx.frame:
        raise FrameMismatchError("mass function and contexts on different frames")
    return recompose_weights(disjunctive_decompose(m).scaled(ctx))
