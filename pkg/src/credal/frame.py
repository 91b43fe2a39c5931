"""Frames of discernment and bitmask-encoded subsets.

A frame is an ordered sequence of distinct class labels; subsets of the
frame are encoded as unsigned integers where bit i stands for label i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DuplicateLabelError,
    EmptyFrameError,
    EmptyLabelError,
    FrameMismatchError,
    FrameTooLargeError,
    UnknownLabelError,
)

MAX_FRAME_SIZE = 24
# Dense 2^K sweeps (lattice transforms, decompositions) refuse above this.
MAX_DENSE_SIZE = 20


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment. Label order defines bit positions."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.labels, tuple):
            object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) == 0:
            raise EmptyFrameError("a frame needs at least one label")
        if len(self.labels) > MAX_FRAME_SIZE:
            raise FrameTooLargeError(
                f"{len(self.labels)} labels exceed the maximum of {MAX_FRAME_SIZE}"
            )
        seen = set()
        for label in self.labels:
            if not isinstance(label, str) or label == "":
                raise EmptyLabelError("labels must be non-empty strings")
            if label in seen:
                raise DuplicateLabelError(f"duplicate label {label!r}")
            seen.add(label)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_bits(self) -> int:
        return (1 << self.size) - 1

    def bit_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    def subset(self, *labels: str) -> Subset:
        """Build the subset containing exactly the given labels."""
        bits = 0
        for label in labels:
            bits |= 1 << self.bit_of(label)
        return Subset(self, bits)

    def subset_of(self, labels: Iterable[str]) -> Subset:
        return self.subset(*labels)

    def subset_from_bits(self, bits: int) -> Subset:
        return Subset(self, bits)

    @property
    def empty(self) -> Subset:
        return Subset(self, 0)

    @property
    def full(self) -> Subset:
        return Subset(self, self.full_bits)

    def singletons(self) -> tuple[Subset, ...]:
        return tuple(Subset(self, 1 << i) for i in range(self.size))

    def subsets(self) -> Iterator[Subset]:
        """All 2^K subsets in ascending bitmask order."""
        for bits in range(1 << self.size):
            yield Subset(self, bits)

    def __repr__(self) -> str:
        return f"Frame({{{', '.join(self.labels)}}})"


def build_frame(labels: Iterable[str]) -> Frame:
    """Create a frame from an ordered sequence of distinct labels."""
    return Frame(tuple(labels))


@dataclass(frozen=True)
class Subset:
    """A subset of a frame, stored as a bitmask relative to that frame."""

    frame: Frame
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.frame.full_bits:
            raise ValueError(
                f"bits {self.bits:#x} out of range for a {self.frame.size}-label frame"
            )

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(
            label for i, label in enumerate(self.frame.labels) if self.bits >> i & 1
        )

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def is_full(self) -> bool:
        return self.bits == self.frame.full_bits

    @property
    def is_singleton(self) -> bool:
        return self.cardinality == 1

    def _check(self, other: Subset) -> None:
        if self.frame != other.frame:
            raise FrameMismatchError("subsets belong to different frames")

    def __or__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.frame, self.bits | other.bits)

    def __and__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.frame, self.bits & other.bits)

    def __sub__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.frame, self.bits & ~other.bits)

    def complement(self) -> Subset:
        return Subset(self.frame, self.frame.full_bits & ~self.bits)

    def issubset(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def issuperset(self, other: Subset) -> bool:
        return other.issubset(self)

    def isdisjoint(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: str) -> bool:
        return bool(self.bits >> self.frame.bit_of(label) & 1)

    def __repr__(self) -> str:
        return format_subset(self)


def format_subset(subset: Subset) -> str:
    """Human-readable form: the empty-set and full-frame symbols, or {a, b}."""
    if subset.is_empty:
        return "∅"
    if subset.is_full:
        return "Ω"
    return "{" + ",".join(subset.labels) + "}"
