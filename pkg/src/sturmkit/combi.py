"""Inclusion-exclusion, derangements, surjections, Burnside counting.

All counts are exact integers; a Burnside average that fails to divide
evenly is treated as proof of an input bug and aborts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .arith import divisors, euler_phi
from .perm import Permutation, compose, cycle_decomposition, inverse


@dataclass(frozen=True)
class IntersectionSums:
    """M_k = sum over k-subsets S of |intersection of A_j, j in S|; M_0 = |U|."""

    sums: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sums:
            raise ValueError("need at least M_0")
        if any(m < 0 for m in self.sums):
            raise ValueError("intersection sums must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.sums) - 1

    @classmethod
    def from_sets(cls, universe, sets) -> "IntersectionSums":
        """Brute-force M_k for explicit subsets of an explicit universe."""
        universe = set(universe)
        sets = [set(s) & universe for s in sets]
        sums = [len(universe)]
        for k in range(1, len(sets) + 1):
            total = 0
            for chosen in combinations(sets, k):
                inter = set(universe)
                for s in chosen:
                    inter &= s
                total += len(inter)
            sums.append(total)
        return cls(tuple(sums))


def union_size(m: IntersectionSums) -> int:
    """|A_1 u ... u A_n| = M_1 - M_2 + M_3 - ..."""
    total = sum((-1) ** (k + 1) * m.sums[k] for k in range(1, m.n + 1))
    if total < 0:
        raise ValueError("inconsistent intersection sums: negative union")
    return total


def complement_size(m: IntersectionSums) -> int:
    """|U - (A_1 u ... u A_n)| = M_0 - M_1 + M_2 - ..."""
    total = m.sums[0] - union_size(m)
    if total < 0:
        raise ValueError("inconsistent intersection sums: negative complement")
    return total


def bonferroni(m: IntersectionSums, s: int) -> tuple[int, int]:
    """Truncation bracket: lower (cut at M_2s) <= union <= upper (at M_2s+1)."""
    if s < 0 or 2 * s >= m.n:
        raise ValueError("need 0 <= s < n/2")
    lower = sum((-1) ** (k + 1) * m.sums[k] for k in range(1, 2 * s + 1))
    upper = lower + m.sums[2 * s + 1]
    return lower, upper


def exactly_r(m: IntersectionSums, r: int) -> int:
    """Count of elements in exactly r of the subsets."""
    if not 0 <= r <= m.n:
        raise ValueError(f"r must be in 0..{m.n}")
    if r == 0:
        return complement_size(m)
    total = sum(
        (-1) ** (k - r) * comb(k, r) * m.sums[k] for k in range(r, m.n + 1)
    )
    if total < 0:
        raise ValueError("inconsistent intersection sums: negative count")
    return total


def derangements(n: int) -> int:
    """D_n by the recurrence D_n = (n-1)(D_{n-1} + D_{n-2}), D_0 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    prev2, prev1 = 1, 0  # D_0, D_1
    for k in range(2, n + 1):
        prev2, prev1 = prev1, (k - 1) * (prev1 + prev2)
    return prev1


def surjections(k: int, n: int) -> int:
    """Surjections from a k-set onto an n-set: sum (-1)^i C(n,i) (n-i)^k."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    return sum((-1) ** i * comb(n, i) * (n - i) ** k for i in range(n + 1))


def circular_nonadjacent(n: int, k: int) -> int:
    """Ways to pick k pairwise non-adjacent elements from n in a circle.

    (n / (n - k)) * C(n - k, k); zero when k > n/2.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    if 2 * k > n:
        return 0
    num = n * comb(n - k, k)
    if num % (n - k):
        raise AssertionError("circular count formula did not divide evenly")
    return num // (n - k)


class GroupAction:
    """A family of permutations verified closed under composition and inverse.

    Closure is checked at construction, multiplying all pairs and
    inverting all elements; that hypothesis is exactly what Burnside
    counting needs.
    """

    def __init__(self, elements) -> None:
        elems = tuple(elements)
        if not elems:
            raise ValueError("a group action needs at least one element")
        degree = elems[0].size
        if any(g.size != degree for g in elems):
            raise ValueError("all permutations must act on the same points")
        if len(set(elems)) != len(elems):
            raise ValueError("duplicate elements in the family")
        members = set(elems)
        for g in elems:
            if inverse(g) not in members:
                raise ValueError(f"not closed under inverse at {g.images}")
            for h in elems:
                if compose(g, h) not in members:
                    raise ValueError(
                        f"not closed under composition at {g.images} * {h.images}"
                    )
        self.elements = elems
        self.degree = degree

    def __len__(self) -> int:
        return len(self.elements)


def burnside_orbits(action: GroupAction, colors: int) -> int:
    """Orbit count of colorings: average of colors^cycles(g) over the family."""
    if colors < 0:
        raise ValueError("colors must be >= 0")
    total = sum(
        colors ** len(cycle_decomposition(g)) for g in action.elements
    )
    q, rem = divmod(total, len(action))
    if rem:
        raise ArithmeticError(
            "Burnside average is not an integer: the family is not a group"
        )
    return q


def cyclic_group(n: int) -> GroupAction:
    """Rotations of n points on a circle."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return GroupAction(
        Permutation(tuple((i + s) % n + 1 for i in range(n)))
        for s in range(n)
    )


def dihedral_group(n: int) -> GroupAction:
    """Rotations and reflections of n points on a circle (2n elements)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    rotations = [
        Permutation(tuple((i + s) % n + 1 for i in range(n))) for s in range(n)
    ]
    reflections = [
        Permutation(tuple((s - i) % n + 1 for i in range(n))) for s in range(n)
    ]
    return GroupAction(rotations + reflections)


def generate_closure(generators) -> GroupAction:
    """Close a generating set under composition (and hence inverse)."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    seen = {Permutation.identity(gens[0].size)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                w = compose(h, g)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return GroupAction(seen)


def cube_face_rotations() -> GroupAction:
    """The 24 rotations of the cube acting on faces 1..6.

    Faces: 1 = up, 2 = down, 3 = front, 4 = back, 5 = left, 6 = right.
    """
    spin_z = Permutation((1, 2, 6, 5, 3, 4))  # front -> right -> back -> left
    spin_x = Permutation((3, 4, 2, 1, 5, 6))  # up -> front -> down -> back
    action = generate_closure([spin_z, spin_x])
    if len(action) != 24:
        raise AssertionError(f"cube rotations came out as {len(action)} elements")
    return action


def necklaces(n: int, r: int) -> int:
    """Colorings of n beads on a rotating circle: (1/n) sum phi(d) r^(n/d)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    total = sum(euler_phi(d) * r ** (n // d) for d in divisors(n))
    if total % n:
        raise AssertionError("necklace formula did not divide evenly")
    return total // n


def bracelets_odd(n: int, r: int) -> int:
    """Necklaces also identified under reflection, for odd n.

    (necklaces(n, r) + r^((n+1)/2)) / 2: each of the n reflections of an
    odd cycle fixes r^((n+1)/2) colorings.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("bracelets_odd needs odd n >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    total = necklaces(n, r) + r ** ((n + 1) // 2)
    if total % 2:
        raise AssertionError("bracelet formula did not divide evenly")
    return total // 2
