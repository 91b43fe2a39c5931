"""Mass functions (basic belief assignments) over a finite frame.

Masses are stored sparsely: only focal sets (mass > 0) are kept. Subnormal
mass functions, i.e. positive mass on the empty set, are first-class; no
operation in this package ever renormalizes implicitly.
"""

from __future__ import annotations

from math import fsum
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

from .errors import (
    FrameMismatchError,
    FrameTooLargeError,
    MassOutOfRangeError,
    MassSumNotOneError,
)
from .frame import MAX_DENSE_SIZE, Frame, Subset, format_subset

SubsetLike = Union[Subset, str, Iterable[str]]

#: Construction/validation tolerance for the unit-sum constraint.
MASS_SUM_TOL = 1e-9

# Products and residuals of exact inputs can undershoot 0 by float dust.
_DUST = 1e-12


def coerce_subset(frame: Frame, expr: SubsetLike) -> Subset:
    """Turn a subset expression into a Subset of `frame`.

    Accepted forms: a Subset (frame-checked), "*" for the full frame,
    a single label string, or an iterable of labels (empty iterable = empty
    set).
    """
    if isinstance(expr, Subset):
        if expr.frame != frame:
            raise FrameMismatchError("subset belongs to a different frame")
        return expr
    if isinstance(expr, str):
        if expr == "*":
            return frame.full
        return frame.subset(expr)
    return frame.subset(*expr)


class MassFunction:
    """An immutable sparse mass function. Use :func:`make_mass` to build one."""

    __slots__ = ("frame", "_masses")

    def __init__(self, frame: Frame, assignments: Mapping[SubsetLike, float]):
        masses: dict[int, float] = {}
        for expr, value in assignments.items():
            value = float(value)
            if not 0.0 <= value <= 1.0:
                raise MassOutOfRangeError(f"mass {value!r} outside [0, 1]")
            bits = coerce_subset(frame, expr).bits
            masses[bits] = masses.get(bits, 0.0) + value
        total = fsum(masses.values())
        if abs(total - 1.0) > MASS_SUM_TOL:
            raise MassSumNotOneError(total - 1.0)
        object.__setattr__(self, "frame", frame)
        object.__setattr__(
            self, "_masses", {b: v for b, v in sorted(masses.items()) if v > 0.0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("MassFunction is immutable")

    @classmethod
    def _from_bits(cls, frame: Frame, masses: Mapping[int, float]) -> MassFunction:
        """Internal constructor for operation results.

        Clamps float dust in [-_DUST, 0) to 0 and re-checks the unit sum;
        operations in this package conserve mass to well within tolerance.
        """
        cleaned: dict[int, float] = {}
        for bits, value in masses.items():
            if value <= 0.0:
                if value < -_DUST:
                    raise MassOutOfRangeError(f"negative mass {value!r}")
                continue
            cleaned[bits] = value
        total = fsum(cleaned.values())
        if abs(total - 1.0) > MASS_SUM_TOL:
            raise MassSumNotOneError(total - 1.0)
        self = object.__new__(cls)
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "_masses", dict(sorted(cleaned.items())))
        return self

    # -- queries ------------------------------------------------------

    def mass(self, subset: SubsetLike) -> float:
        return self._masses.get(coerce_subset(self.frame, subset).bits, 0.0)

    def __getitem__(self, subset: SubsetLike) -> float:
        return self.mass(subset)

    def mass_bits(self, bits: int) -> float:
        return self._masses.get(bits, 0.0)

    def focal(self) -> Iterator[tuple[Subset, float]]:
        """Focal sets and masses, in ascending bitmask order."""
        for bits, value in self._masses.items():
            yield Subset(self.frame, bits), value

    def focal_bits(self) -> Iterator[tuple[int, float]]:
        return iter(self._masses.items())

    def __len__(self) -> int:
        return len(self._masses)

    @property
    def is_normal(self) -> bool:
        return 0 not in self._masses

    @property
    def is_subnormal(self) -> bool:
        return not self.is_normal

    @property
    def is_vacuous(self) -> bool:
        return self._masses == {self.frame.full_bits: 1.0}

    def belief(self, subset: SubsetLike) -> float:
        """Total mass of the non-empty subsets of `subset`."""
        a = coerce_subset(self.frame, subset).bits
        return fsum(v for b, v in self._masses.items() if b != 0 and b & ~a == 0)

    def implicability(self, subset: SubsetLike) -> float:
        """Like belief but including the empty set: b(A) = sum of m(B), B subset of A."""
        a = coerce_subset(self.frame, subset).bits
        return fsum(v for b, v in self._masses.items() if b & ~a == 0)

    # -- conversions ---------------------------------------------------

    def to_dense(self) -> np.ndarray:
        """Dense length-2^K vector of masses (ascending bitmask order)."""
        if self.frame.size > MAX_DENSE_SIZE:
            raise FrameTooLargeError(
                f"dense storage refused above {MAX_DENSE_SIZE} labels"
            )
        dense = np.zeros(1 << self.frame.size)
        for bits, value in self._masses.items():
            dense[bits] = value
        return dense

    def allclose(self, other: MassFunction, atol: float = 1e-9) -> bool:
        """Per-subset comparison within an absolute tolerance."""
        if self.frame != other.frame:
            return False
        keys = self._masses.keys() | other._masses.keys()
        return all(
            abs(self._masses.get(b, 0.0) - other._masses.get(b, 0.0)) <= atol
            for b in keys
        )

    def max_deviation(self, other: MassFunction) -> float:
        """Largest per-subset absolute difference against another mass function."""
        if self.frame != other.frame:
            raise FrameMismatchError("mass functions on different frames")
        keys = self._masses.keys() | other._masses.keys()
        return max(
            (abs(self._masses.get(b, 0.0) - other._masses.get(b, 0.0)) for b in keys),
            default=0.0,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self._masses == other._masses

    __hash__ = None

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{format_subset(Subset(self.frame, b))}:{v:g}"
            for b, v in self._masses.items()
        )
        return f"MassFunction({inner})"


def make_mass(frame: Frame, assignments: Mapping[SubsetLike, float]) -> MassFunction:
    """Build a validated mass function from subset-expression assignments.

    Masses must each lie in [0, 1] and sum to 1 within 1e-9; zero entries
    are dropped.
    """
    return MassFunction(frame, assignments)


def vacuous(frame: Frame) -> MassFunction:
    """Total ignorance: all mass on the full frame."""
    return MassFunction._from_bits(frame, {frame.full_bits: 1.0})


def belief_of(m: MassFunction, subset: SubsetLike) -> float:
    return m.belief(subset)


def implicability_of(m: MassFunction, subset: SubsetLike) -> float:
    return m.implicability(subset)


def drc_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Disjunctive rule of combination: masses multiply onto unions.

    Sound when at least one of the two sources is reliable. Implemented by
    pairwise focal-set enumeration, O(F1 * F2).
    """
    if m1.frame != m2.frame:
        raise FrameMismatchError("cannot combine mass functions on different frames")
    if m1.is_vacuous or m2.is_vacuous:
        # every union with the full frame is the full frame, and the other
        # factor's masses total 1, so absorption is exact
        return vacuous(m1.frame)
    out: dict[int, float] = {}
    for b1, v1 in m1.focal_bits():
        for b2, v2 in m2.focal_bits():
            u = b1 | b2
            out[u] = out.get(u, 0.0) + v1 * v2
    return MassFunction._from_bits(m1.frame, out)
