"""Partitions, Maya diagrams, flips, hooklengths and critical degrees.

A Maya diagram is an infinite set of integers, so it is stored by its
canonical data: the partition ``lam`` and the index ``sigma`` with
``M = M(lam) + sigma`` where ``M(lam) = {lam_i - i : i >= 1}``.  Every
position below ``sigma - len(lam)`` is filled and every position at or
above ``sigma + lam[0]`` is empty, so all set computations reduce to the
finite window in between.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """Non-increasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts, dropping trailing zeros."""
        return cls(tuple(p for p in parts if p != 0))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """``lam_{i+1}`` (0-based); zero past the length."""
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def hooklengths(self) -> list[list[int]]:
        """Grid of hooklengths ``hk(i, j)``, row ``i`` having ``lam_i`` cells."""
        conj = self.conjugate()
        return [
            [self.parts[i] - j + conj[j] - i - 1 for j in range(self.parts[i])]
            for i in range(len(self.parts))
        ]

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


EMPTY = Partition()


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, n):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions(k)


def hook_product(lam: Partition) -> int:
    return prod(h for row in lam.hooklengths() for h in row)


def hook_product_from_maya(lam: Partition) -> int:
    """The hook product rewritten through ``k_i = lam_i - i + len(lam)``.

    ``prod_i k_i! / prod_{i<j} (k_i - k_j)``; always equal to ``hook_product``.
    """
    ell = lam.length
    ks = [lam[i] - (i + 1) + ell for i in range(ell)]
    top = prod(factorial(k) for k in ks)
    bottom = prod(ks[i] - ks[j] for i in range(ell) for j in range(i + 1, ell))
    q, r = divmod(top, bottom)
    if r:
        raise ArithmeticError("hook product is not an integer")
    return q


def d_lambda(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hooklength formula)."""
    return factorial(lam.weight) // hook_product(lam)


@dataclass(frozen=True)
class MayaDiagram:
    """Maya diagram ``M(partition) + sigma``."""

    partition: Partition = EMPTY
    sigma: int = 0

    def __post_init__(self):
        if not isinstance(self.partition, Partition):
            object.__setattr__(self, "partition", Partition(tuple(self.partition)))
        object.__setattr__(self, "sigma", int(self.sigma))

    # -- construction -----------------------------------------------------

    @classmethod
    def trivial(cls) -> "MayaDiagram":
        """The diagram of negative integers."""
        return cls(EMPTY, 0)

    @classmethod
    def from_members(cls, members: Iterable[int], below: int) -> "MayaDiagram":
        """Diagram ``{m < below} ∪ members`` (members may be any integers)."""
        filled = {m for m in members if m >= below}
        k_plus = sum(1 for m in filled if m >= 0) + max(0, below)
        k_minus = sum(1 for m in range(below, 0) if m not in filled) if below < 0 else 0
        sigma = k_plus - k_minus
        desc = sorted(filled, reverse=True)
        lam = []
        for i, m in enumerate(desc, start=1):
            part = m + i - sigma
            if part <= 0:
                break
            lam.append(part)
        # below `below` the parts m + i - sigma stay at zero by the choice of sigma
        return cls(Partition(tuple(lam)), sigma)

    # -- geometry ---------------------------------------------------------

    @property
    def lo(self) -> int:
        """Smallest empty position; everything below is filled."""
        return self.sigma - self.partition.length

    @property
    def hi(self) -> int:
        """One past the largest filled position; everything from here is empty."""
        return self.sigma + self.partition.first

    def __contains__(self, m: int) -> bool:
        j = m - self.sigma
        lam = self.partition
        if j < -lam.length:
            return True
        return j in self._shifted_parts

    @cached_property
    def _shifted_parts(self) -> frozenset[int]:
        return frozenset(p - i for i, p in enumerate(self.partition.parts, start=1))

    def members(self, lo: int, hi: int) -> list[int]:
        """Filled positions in ``[lo, hi]``."""
        return [m for m in range(lo, hi + 1) if m in self]

    def decreasing(self, count: int) -> list[int]:
        """First ``count`` elements ``m_1 > m_2 > ...``."""
        lam = self.partition
        return [lam[i] - (i + 1) + self.sigma for i in range(count)]

    def __add__(self, n: int) -> "MayaDiagram":
        return MayaDiagram(self.partition, self.sigma + int(n))

    def __sub__(self, n: int) -> "MayaDiagram":
        return self + (-int(n))

    def index_set(self) -> frozenset[int]:
        """``K_M``: filled non-negatives together with empty negatives."""
        lo, hi = min(self.lo, 0), max(self.hi, 0)
        return frozenset(m for m in range(lo, hi) if (m in self) != (m < 0))

    def flip(self, k: int) -> "MayaDiagram":
        return multi_flip(self, [k])

    def is_q_core(self, q: int) -> bool:
        """``M ⊂ M + q``."""
        return all((m - q) in self for m in self.members(self.lo, self.hi - 1))

    def to_json(self) -> dict:
        return {"partition": self.partition.to_json(), "sigma": self.sigma}

    @classmethod
    def from_json(cls, data) -> "MayaDiagram":
        return cls(Partition(tuple(data["partition"])), data["sigma"])

    def diagram(self, lo: int | None = None, hi: int | None = None) -> str:
        """Filled/empty picture of the window ``[lo, hi]``."""
        lo = self.lo - 1 if lo is None else lo
        hi = self.hi if hi is None else hi
        return "… " + " ".join("●" if m in self else "○" for m in range(lo, hi + 1)) + " …"

    def __str__(self):
        return f"M{self.partition}{self.sigma:+d}"


def maya_from_partition(lam, sigma: int = 0) -> MayaDiagram:
    if not isinstance(lam, Partition):
        lam = Partition.of(lam)
    return MayaDiagram(lam, sigma)


def as_maya(value) -> MayaDiagram:
    """Accept a MayaDiagram or a Partition (taken with index 0)."""
    if isinstance(value, MayaDiagram):
        return value
    if isinstance(value, Partition):
        return MayaDiagram(value, 0)
    return MayaDiagram(Partition.of(value), 0)


def multi_flip(M: MayaDiagram, K: Iterable[int]) -> MayaDiagram:
    """Toggle membership at every position of ``K``."""
    K = set(K)
    if not K:
        return M
    lo = min(M.lo, min(K))
    hi = max(M.hi, max(K) + 1)
    filled = set(M.members(lo, hi)) ^ K
    return MayaDiagram.from_members(filled, lo)


def maya_from_index_set(K: Iterable[int]) -> MayaDiagram:
    """The diagram ``f_K(Z_-)``."""
    return multi_flip(MayaDiagram.trivial(), K)


def canonical_form(M: MayaDiagram) -> tuple[Partition, int]:
    return M.partition, M.sigma


def index_set(M: MayaDiagram) -> frozenset[int]:
    return M.index_set()


def symmetric_difference(M1: MayaDiagram, M2: MayaDiagram) -> frozenset[int]:
    """The unique ``K`` with ``f_K(M1) = M2``."""
    lo = min(M1.lo, M2.lo)
    hi = max(M1.hi, M2.hi)
    return frozenset(m for m in range(lo, hi) if (m in M1) != (m in M2))


def critical_degrees(lam, q_max: int) -> tuple[frozenset[int], int]:
    """Critical degrees ``q <= q_max`` and the threshold ``lam_1 + len(lam)``."""
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    M = as_maya(lam)
    q_c = M.partition.first + M.partition.length
    return frozenset(q for q in range(1, q_max + 1) if M.is_q_core(q)), q_c


def krein_adler_regular(M: MayaDiagram) -> bool:
    """True iff every finite run of filled positions has even length."""
    run = 0
    for m in range(M.lo, M.hi + 1):
        if m in M:
            run += 1
        else:
            if run % 2:
                return False
            run = 0
    return True


def sorted_index_set(K: Iterable[int]) -> list[int]:
    return sorted(set(K))
