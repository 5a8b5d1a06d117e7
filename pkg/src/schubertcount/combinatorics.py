"""Partitions, compositions, parity classification, and feasibility arithmetic.

Everything here is exact integer combinatorics on immutable values; all
functions are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Tuple


class InvalidLength(ValueError):
    """Sequence has the wrong length for the requested operation."""


class NotInRectangle(ValueError):
    """Partition sticks out of the k x m rectangle."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of non-negative integers.

    Trailing zeros are significant: a length-k and a length-2k partition with
    the same nonzero parts are distinct objects, so rank-k and rank-2k
    contexts never alias.
    """

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"not weakly decreasing: {parts!r}")

    @classmethod
    def constant(cls, value: int, length: int) -> "Partition":
        return cls((value,) * length)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of non-negative integers with a fixed sum."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts!r}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]


@dataclass(frozen=True)
class PartitionParity:
    """Parity class of a 2k-partition: even, odd, or neither.

    An even 2k-partition doubles and duplicates a k-partition beta
    (entries 2*b1, 2*b1, 2*b2, 2*b2, ...); an odd one adds 1 to every entry
    of an even one. ``beta`` is the recovered witness, None for neither.
    """

    kind: str
    beta: Optional[Partition] = None

    @property
    def is_even(self) -> bool:
        return self.kind == "even"

    @property
    def is_odd(self) -> bool:
        return self.kind == "odd"


@dataclass(frozen=True)
class Feasibility:
    """Divisibility data for the zero-dimensionality condition.

    In the complex regime the count lives on a rank-k Grassmannian and needs
    k*m = C(d+k-1, k-1); in the real regime the rank is 2k and the condition
    is 2k*m = C(d+2k-1, 2k-1).  Infeasibility is data, not an error: m is
    simply absent.
    """

    d: int
    k: int
    regime: str
    m: Optional[int]
    odd_degree: Optional[bool] = None

    @property
    def feasible(self) -> bool:
        return self.m is not None


def compositions(d: int, k: int) -> list[Composition]:
    """All k-tuples of non-negative integers summing to d.

    Enumerated in graded lexicographic order (all tuples share grade d, so
    this is descending lexicographic order on the tuples); the cardinality
    is C(d+k-1, k-1).  The order is part of the contract: downstream
    polynomial products consume it and must be reproducible bit-for-bit.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    out: list[Tuple[int, ...]] = []

    def rec(prefix: Tuple[int, ...], rem: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (rem,))
            return
        for v in range(rem, -1, -1):
            rec(prefix + (v,), rem - v, slots - 1)

    rec((), d, k)
    return [Composition(t) for t in out]


def classify_partition(alpha: Partition) -> PartitionParity:
    """Classify a 2k-partition as even (2*beta doubled), odd, or neither."""
    n = len(alpha)
    if n == 0 or n % 2 != 0:
        raise InvalidLength(f"need even positive length, got {n}")
    evens = alpha.parts[0::2]
    odds = alpha.parts[1::2]
    if evens != odds:
        return PartitionParity("neither")
    if all(p % 2 == 0 for p in evens):
        return PartitionParity("even", Partition(tuple(p // 2 for p in evens)))
    if all(p % 2 == 1 for p in evens):
        return PartitionParity("odd", Partition(tuple((p - 1) // 2 for p in evens)))
    return PartitionParity("neither")


def complement(alpha: Partition, m: int, k: int) -> Partition:
    """The partition beta with alpha_i + beta_{k+1-i} = m for all i."""
    if len(alpha) != k:
        raise InvalidLength(f"partition length {len(alpha)} != k={k}")
    if k > 0 and alpha[0] > m:
        raise NotInRectangle(f"{alpha.parts} does not fit in a {k}x{m} rectangle")
    return Partition(tuple(m - alpha[k - 1 - i] for i in range(k)))


def catalan(n: int) -> int:
    """The n-th Catalan number C(2n, n) / (n+1), exactly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def feasibility(d: int, k: int, regime: str) -> Feasibility:
    """Check the zero-dimensionality condition and recover m when it holds."""
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    if regime == "complex":
        total = comb(d + k - 1, k - 1)
        divisor = k
        odd: Optional[bool] = None
    elif regime == "real":
        total = comb(d + 2 * k - 1, 2 * k - 1)
        divisor = 2 * k
        odd = d % 2 == 1
    else:
        raise ValueError(f"unknown regime {regime!r}")
    m = total // divisor if total % divisor == 0 else None
    return Feasibility(d, k, regime, m, odd)
