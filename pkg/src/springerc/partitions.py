"""Integer partitions, bipartitions, and symmetric compositions.

Text formats used by the CLI and all golden files:

* partition: comma-separated descending parts, ``2,1,1``; the empty
  partition is ``-`` (a bare ``0`` is accepted as another spelling of it)
* bipartition: two partition strings joined by ``|``, e.g. ``2,1|1``
* symmetric composition: comma-separated entries, ``1,1,0,1,1``

Every enumeration in this module is lexicographic-descending so repeated
runs emit byte-identical tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial


class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", tuple(x for x in parts if x > 0))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts) if self.parts else "-"

    def dual(self) -> "Partition":
        """Transpose of the diagram: column lengths become row lengths."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", "", "0"):
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc
        return cls(parts)


@dataclass(frozen=True)
class Bipartition:
    """An ordered pair of partitions; indexes irreducible characters."""

    first: Partition
    second: Partition

    def size(self) -> int:
        return self.first.size() + self.second.size()

    def dual(self) -> "Bipartition":
        return Bipartition(self.first.dual(), self.second.dual())

    def __str__(self) -> str:
        return f"{self.first}|{self.second}"

    def sort_key(self):
        return (self.first.parts, self.second.parts)

    @classmethod
    def from_string(cls, text: str) -> "Bipartition":
        halves = text.strip().split("|")
        if len(halves) != 2:
            raise ValueError(f"cannot parse bipartition {text!r}")
        return cls(Partition.from_string(halves[0]), Partition.from_string(halves[1]))


@dataclass(frozen=True)
class SymComposition:
    """A length-(2n+1) vector of nonnegative integers with entries[i] = entries[-1-i].

    These index the connected components of the partial flag variety; the
    mirror symmetry together with an even total forces the middle entry to
    be even.
    """

    entries: tuple[int, ...]
    n: int

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != 2 * self.n + 1:
            raise ValueError(f"expected {2 * self.n + 1} entries, got {len(entries)}")
        if any(x < 0 for x in entries):
            raise ValueError(f"negative entry in {entries}")
        if any(entries[i] != entries[-1 - i] for i in range(len(entries))):
            raise ValueError(f"entries not mirror-symmetric: {entries}")
        if sum(entries) % 2:
            raise ValueError(f"total of {entries} is odd")

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)

    def sort_key(self):
        return self.entries

    @classmethod
    def from_string(cls, text: str) -> "SymComposition":
        try:
            entries = tuple(int(tok) for tok in text.strip().split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse composition {text!r}") from exc
        if len(entries) % 2 == 0:
            raise ValueError(f"composition {text!r} must have odd length")
        return cls(entries, (len(entries) - 1) // 2)


@lru_cache(maxsize=None)
def _partitions_desc(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        out.extend((k,) + rest for rest in _partitions_desc(n - k, k))
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in lexicographic-descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions_desc(n, n if n else 1)]


def enumerate_bipartitions(d: int) -> list[Bipartition]:
    """All ordered pairs of partitions of total size d.

    Ordered by decreasing size of the first component, then lexicographic
    descending within each component.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    out = []
    for a in range(d, -1, -1):
        for p in enumerate_partitions(a):
            for q in enumerate_partitions(d - a):
                out.append(Bipartition(p, q))
    return out


def is_type_c(p: Partition) -> bool:
    """True iff |p| is even and every odd part occurs an even number of times.

    Such partitions classify nilpotent orbits of the symplectic Lie algebra
    on a space of dimension |p|.
    """
    if p.size() % 2:
        return False
    return all(m % 2 == 0 for part, m in p.multiplicities().items() if part % 2)


def enumerate_type_c(two_d: int) -> list[Partition]:
    """All type-C partitions of the (even) integer two_d, descending."""
    if two_d % 2:
        raise ValueError(f"{two_d} is odd; type-C partitions have even size")
    return [p for p in enumerate_partitions(two_d) if is_type_c(p)]


def enumerate_sym_compositions(n_param: int, big_d: int) -> list[SymComposition]:
    """All mirror-symmetric compositions of big_d with 2*n_param+1 entries."""
    if big_d % 2:
        raise ValueError(f"total {big_d} must be even")
    if n_param < 0:
        raise ValueError("n_param must be nonnegative")
    half = big_d // 2
    out = []
    for head in itertools.product(range(half + 1), repeat=n_param):
        s = sum(head)
        if s > half:
            continue
        mid = big_d - 2 * s
        out.append(SymComposition(head + (mid,) + head[::-1], n_param))
    out.sort(key=lambda c: c.entries, reverse=True)
    return out


def hook_lengths(p: Partition) -> list[list[int]]:
    """Hook length of every cell, as a list of rows."""
    d = p.dual()
    return [
        [(p[i] - j - 1) + (d[j] - i - 1) + 1 for j in range(p[i])]
        for i in range(len(p))
    ]


def num_standard_tableaux(p: Partition) -> int:
    """Number of standard tableaux of shape p (hook length formula)."""
    prod = 1
    for row in hook_lengths(p):
        for h in row:
            prod *= h
    return factorial(p.size()) // prod


def gl_dim(p: Partition, m: int) -> int:
    """Dimension of the irreducible gl_m module with highest weight p.

    Computed by the hook-content formula; returns 0 when p has more than m
    rows, so sums over bipartitions can include out-of-range labels as
    zero-dimensional terms.
    """
    if len(p) > m:
        return 0
    numer = 1
    for i in range(len(p)):
        for j in range(p[i]):
            numer *= m + j - i
    denom = 1
    for row in hook_lengths(p):
        for h in row:
            denom *= h
    if numer % denom:
        raise ArithmeticError(f"hook-content division not exact for {p}, m={m}")
    return numer // denom


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True iff every prefix sum of a is at most the matching prefix sum of b."""
    if a.size() != b.size():
        raise ValueError(f"dominance needs equal sizes: |{a}|={a.size()}, |{b}|={b.size()}")
    length = max(len(a), len(b))
    sa = sb = 0
    for i in range(length):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def type_c_collapse(p: Partition) -> Partition:
    """The dominance-greatest type-C partition below p.

    Repeatedly fixes the largest odd part value with odd multiplicity by
    moving one box from its last row down to the first lower row where the
    result is still a partition.  Exhaustive search at small sizes confirms
    the output is dominance-maximal among type-C partitions of |p|.
    """
    if p.size() % 2:
        raise ValueError(f"collapse needs even size, got |{p}| = {p.size()}")
    parts = list(p.parts)
    for _ in range(p.size() * p.size() + 1):
        bad = [v for v, m in _multiplicities(parts).items() if v % 2 and m % 2]
        if not bad:
            break
        v = max(bad)
        j = max(i for i, x in enumerate(parts) if x == v)
        parts[j] -= 1
        k = j + 1
        while k < len(parts) and parts[k] + 1 > parts[k - 1]:
            k += 1
        if k == len(parts):
            parts.append(1)
        else:
            parts[k] += 1
        parts = [x for x in parts if x > 0]
    else:
        raise ArithmeticError(f"collapse of {p} did not terminate")
    return Partition(parts)


def _multiplicities(parts) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in parts:
        out[x] = out.get(x, 0) + 1
    return out


def binomial(n: int, k: int) -> int:
    return comb(n, k)
