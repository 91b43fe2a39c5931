"""Shared fixtures and oracles for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from credal import ContextVector, Frame, MassFunction, build_frame
from credal.mass import MassFunction as _MF

LABELS = "abcdefgh"


def small_frame(k: int) -> Frame:
    return build_frame(list(LABELS[:k]))


def mass_from_dense(frame: Frame, dense: np.ndarray) -> MassFunction:
    return _MF._from_bits(
        frame, {i: float(v) for i, v in enumerate(dense) if v > 0.0}
    )


def random_mass(
    rng: np.random.Generator,
    frame: Frame,
    *,
    subnormal: bool = False,
    strictly_positive: bool = False,
    max_focal: int | None = None,
) -> MassFunction:
    """Random mass function, normalized so the total is 1 to within a few ulp.

    `subnormal` forces a healthy chunk of mass onto the empty set (needed
    by the decomposition, whose conditioning degrades as m(empty) -> 0).
    `strictly_positive` puts mass on every subset.
    """
    n = 1 << frame.size
    if strictly_positive:
        focal = np.arange(n)
    else:
        count = int(rng.integers(1, max_focal or min(n, 8) + 1))
        focal = rng.choice(n, size=count, replace=False)
    weights = rng.random(focal.size) + 0.05
    dense = np.zeros(n)
    dense[focal] = weights
    if subnormal:
        dense[0] = max(dense[0], 0.15 * dense.sum())
    dense /= dense.sum()
    return mass_from_dense(frame, dense)


def random_context(
    rng: np.random.Generator, frame: Frame, count: int | None = None
) -> ContextVector:
    n = 1 << frame.size
    if count is None:
        count = int(rng.integers(1, min(4, n - 1) + 1))
    bits = rng.choice(np.arange(1, n), size=count, replace=False)
    return ContextVector(
        frame,
        tuple(frame.subset_from_bits(int(b)) for b in bits),
        tuple(float(a) for a in rng.random(count)),
    )


def drc_dense_oracle(d1: np.ndarray, d2: np.ndarray) -> np.ndarray:
    """Naive disjunctive combination: the full double loop over subset pairs."""
    n = d1.size
    out = np.zeros(n)
    idx = np.arange(n)
    np.add.at(out, idx[:, None] | idx[None, :], np.outer(d1, d2))
    return out


def assert_masses(m: MassFunction, expected: dict, tol: float = 1e-9) -> None:
    """Compare a mass function against {subset-expression: value} on all subsets."""
    frame = m.frame
    want = {frame.empty.bits: 0.0}
    for expr, value in expected.items():
        from credal.mass import coerce_subset

        want[coerce_subset(frame, expr).bits] = value
    for bits in range(1 << frame.size):
        got = m.mass_bits(bits)
        exp = want.get(bits, 0.0)
        assert got == pytest.approx(exp, abs=tol), (
            f"subset mask {bits:#x}: got {got!r}, expected {exp!r}"
        )
