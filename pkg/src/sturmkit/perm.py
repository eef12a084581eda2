"""Permutations of {1..n}: composition, cycles, conjugacy, counting.

Elements are 1-based throughout.  Canonical cycle form starts each cycle
at its minimum and orders cycles by first element; fixed points are
omitted from the printed form unless asked for.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; images[k-1] = f(k)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles, n: int | None = None) -> "Permutation":
        cycles = [tuple(c) for c in cycles]
        seen: set[int] = set()
        for c in cycles:
            for x in c:
                if x < 1:
                    raise ValueError("elements must be >= 1")
                if x in seen:
                    raise ValueError(f"element {x} appears in two cycles")
                seen.add(x)
        size = max(seen, default=0)
        if n is not None:
            if n < size:
                raise ValueError(f"n = {n} is smaller than the largest element")
            size = n
        images = list(range(1, size + 1))
        for c in cycles:
            for i, x in enumerate(c):
                images[x - 1] = c[(i + 1) % len(c)]
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)


def _same_size(a: Permutation, b: Permutation) -> None:
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")


def compose(f: Permutation, g: Permutation) -> Permutation:
    """(f o g)(x) = f(g(x)): g acts first."""
    _same_size(f, g)
    return Permutation(tuple(f(g(k)) for k in range(1, f.size + 1)))


def inverse(f: Permutation) -> Permutation:
    images = [0] * f.size
    for k in range(1, f.size + 1):
        images[f(k) - 1] = k
    return Permutation(tuple(images))


def power(f: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(f), -k)
    result = Permutation.identity(f.size)
    base = f
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycle_decomposition(
    f: Permutation, include_fixed: bool = True
) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles covering {1..n}, each starting at its minimum,
    sorted by first element."""
    seen = [False] * f.size
    cycles = []
    for start in range(1, f.size + 1):
        if seen[start - 1]:
            continue
        cycle = [start]
        seen[start - 1] = True
        x = f(start)
        while x != start:
            cycle.append(x)
            seen[x - 1] = True
            x = f(x)
        if include_fixed or len(cycle) > 1:
            cycles.append(tuple(cycle))
    return tuple(cycles)


def cycle_type(f: Permutation) -> tuple[int, ...]:
    """Multiset of cycle lengths (fixed points included), sorted ascending."""
    return tuple(sorted(len(c) for c in cycle_decomposition(f)))


def order(f: Permutation) -> int:
    """lcm of the cycle lengths."""
    return math.lcm(*(len(c) for c in cycle_decomposition(f))) if f.size else 1


def parity(f: Permutation) -> int:
    """+1 for even, -1 for odd, via (-1)^(n - #cycles)."""
    return -1 if (f.size - len(cycle_decomposition(f))) % 2 else 1


def are_conjugate(a: Permutation, b: Permutation) -> bool:
    _same_size(a, b)
    return cycle_type(a) == cycle_type(b)


def conjugate_by(a: Permutation, x: Permutation) -> Permutation:
    """x o a o x^-1: relabels every element of a's cycles by its x-image."""
    _same_size(a, x)
    return compose(compose(x, a), inverse(x))


def count_of_type(n: int, t) -> int:
    """Number of permutations of {1..n} with cycle type t.

    n! divided by the product of the lengths and by m! for each length
    occurring m times.
    """
    lengths = sorted(t)
    if sum(lengths) != n:
        raise ValueError(f"cycle type {t} does not sum to {n}")
    if any(v < 1 for v in lengths):
        raise ValueError("cycle lengths must be >= 1")
    denom = 1
    for v in lengths:
        denom *= v
    for mult in Counter(lengths).values():
        denom *= factorial(mult)
    return factorial(n) // denom


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(s: str, n: int | None = None) -> Permutation:
    """Parse cycle notation like "(1 3 10)(2 5 11 4 8 14)".

    Elements are whitespace- or comma-separated; "id" denotes the
    identity (n required).  n defaults to the largest element mentioned.
    """
    s = s.strip()
    if s == "id":
        if n is None:
            raise ValueError("identity needs an explicit size")
        return Permutation.identity(n)
    body = _CYCLE_RE.sub("", s)
    if body.strip():
        raise ValueError(f"cannot parse cycles: {s!r}")
    cycles = []
    for group in _CYCLE_RE.findall(s):
        elems = [int(tok) for tok in re.split(r"[,\s]+", group.strip()) if tok]
        if elems:
            cycles.append(elems)
    if not cycles and n is None:
        raise ValueError(f"cannot parse cycles: {s!r}")
    return Permutation.from_cycles(cycles, n)


def format_cycles(f: Permutation, include_fixed: bool = False) -> str:
    cycles = cycle_decomposition(f, include_fixed=include_fixed)
    if not cycles:
        return "id"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)
