"""Dense transforms over the subset lattice of a frame.

Vectors are indexed by subset bitmask. The zeta transform sums a vector
over all subsets of each index (turning masses into implicabilities); the
Mobius transform inverts it. Both are in-place butterflies, O(K * 2^K).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FrameTooLargeError, NotAMassFunctionError
from .frame import MAX_DENSE_SIZE, Frame
from .mass import MASS_SUM_TOL, MassFunction


def _check_dense(frame: Frame) -> None:
    if frame.size > MAX_DENSE_SIZE:
        raise FrameTooLargeError(
            f"dense lattice transforms refused above {MAX_DENSE_SIZE} labels"
        )


def zeta_transform(values: np.ndarray) -> np.ndarray:
    """out[A] = sum of values[B] over B subset of A."""
    out = np.array(values, dtype=float)
    n = out.size
    bit = 1
    while bit < n:
        mask = (np.arange(n) & bit).astype(bool)
        out[mask] += out[np.nonzero(mask)[0] ^ bit]
        bit <<= 1
    return out


def mobius_transform(values: np.ndarray) -> np.ndarray:
    """Inverse of :func:`zeta_transform`."""
    out = np.array(values, dtype=float)
    n = out.size
    bit = 1
    while bit < n:
        mask = (np.arange(n) & bit).astype(bool)
        out[mask] -= out[np.nonzero(mask)[0] ^ bit]
        bit <<= 1
    return out


@dataclass(frozen=True)
class SignedMassVector:
    """Dense subset-indexed vector whose entries may leave [0, 1].

    Intermediate currency for combining generalized simple components,
    where "masses" can be negative; only conversion back to MassFunction
    re-imposes the mass-function constraints.
    """

    frame: Frame
    values: np.ndarray

    def __post_init__(self):
        _check_dense(self.frame)
        values = np.asarray(self.values, dtype=float)
        if values.shape != (1 << self.frame.size,):
            raise ValueError(
                f"expected {1 << self.frame.size} entries, got {values.shape}"
            )
        if not np.isfinite(values).all():
            raise ValueError("entries must be finite")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_mass(cls, m: MassFunction) -> SignedMassVector:
        return cls(m.frame, m.to_dense())

    def union_combine(self, other: SignedMassVector) -> SignedMassVector:
        """Disjunctive-rule product, via the implicability diagonalization.

        The union convolution of two vectors has implicability equal to the
        pointwise product of their implicabilities, for signed entries too.
        """
        if self.frame != other.frame:
            raise ValueError("vectors on different frames")
        b = zeta_transform(self.values) * zeta_transform(other.values)
        return SignedMassVector(self.frame, mobius_transform(b))

    def to_mass(self, neg_tol: float = 1e-9) -> MassFunction:
        """Convert back to a MassFunction.

        Entries in [-neg_tol, 0) are clamped to 0 (float dust); anything
        lower, or a total away from 1, raises NotAMassFunctionError.
        """
        values = self.values
        low = float(values.min())
        if low < -neg_tol:
            raise NotAMassFunctionError(f"entry {low!r} below -{neg_tol:g}")
        total = float(values.sum())
        if abs(total - 1.0) > MASS_SUM_TOL:
            raise NotAMassFunctionError(f"entries sum to {total!r}")
        masses = {
            int(bits): float(v) for bits, v in enumerate(values) if v > 0.0
        }
        return MassFunction._from_bits(self.frame, masses)
