"""Numerical semigroups as canonical finite records.

A numerical semigroup is a subset of the non-negative integers that is
closed under addition, contains 0 and misses only finitely many integers.
The record keeps the unique minimal generating system, the conductor c
(least element with c + N entirely inside) and every member below it;
everything else is a cheap derivation.  Records are immutable and all
operations are pure functions, so instances are safe to share.
"""

from bisect import bisect_left
from dataclasses import dataclass
from functools import reduce
from math import gcd

# Cell guard for the representability table, (multiplicity - 1) * max(gens) + 1.
MAX_TABLE_CELLS = 20_000_000


def _gcd_all(values) -> int:
    return reduce(gcd, values, 0)


def _representable(gens: list[int], size: int) -> bytearray:
    """Coin-problem table: t[n] == 1 iff n is a sum of the given generators."""
    table = bytearray(size)
    table[0] = 1
    for n in range(gens[0], size):
        for g in gens:
            if g > n:
                break
            if table[n - g]:
                table[n] = 1
                break
    return table


@dataclass(frozen=True)
class NumericalSemigroup:
    """Canonical description of a numerical semigroup.

    min_gens        unique minimal generating system a_1 < ... < a_e
    small_elements  every member strictly below the conductor, ascending
    conductor       least c such that every n >= c is a member (0 for N)

    Build instances through from_generators; the fields are trusted to be
    mutually consistent.
    """

    min_gens: tuple[int, ...]
    small_elements: tuple[int, ...]
    conductor: int

    @classmethod
    def from_generators(cls, gens) -> "NumericalSemigroup":
        """Canonical record for the semigroup the given integers generate.

        Redundant generators are dropped, the conductor is computed exactly
        and every element below it is materialized.  Input order and
        duplicates are irrelevant.  Raises ValueError when gcd != 1, since
        the complement is infinite in that case.
        """
        norm = sorted(set(gens))
        if not norm:
            raise ValueError("at least one generator is required")
        if norm[0] <= 0:
            raise ValueError("generators must be positive integers")
        g = _gcd_all(norm)
        if g != 1:
            raise ValueError(f"not a numerical semigroup: gcd of generators is {g}")
        if norm[0] == 1:
            return cls((1,), (), 0)

        a1, top = norm[0], norm[-1]
        # The least member of each residue class mod a1 is a sum of fewer
        # than a1 generators, so the table below is guaranteed to reach it.
        size = (a1 - 1) * top + 1
        if size > MAX_TABLE_CELLS:
            raise ValueError(
                f"generators too large: membership table would need {size} cells"
                f" (limit {MAX_TABLE_CELLS})")
        table = _representable(norm, size)

        # Ascending scan, so the last residue class to appear carries the
        # largest of the least class representatives.
        first_in_class: list[int] = [-1] * a1
        remaining = a1
        max_least = 0
        for n in range(size):
            if table[n] and first_in_class[n % a1] < 0:
                first_in_class[n % a1] = n
                max_least = n
                remaining -= 1
                if remaining == 0:
                    break
        conductor = max_least - a1 + 1
        small = tuple(n for n in range(conductor) if table[n])

        # Minimal generators are a1 plus the least class representatives
        # that do not split as a sum of two nonzero members.
        min_gens = [a1]
        for w in sorted(x for x in first_in_class if x > 0):
            if not any(table[x] and table[w - x] for x in range(a1, w - a1 + 1)):
                min_gens.append(w)
        return cls(tuple(min_gens), small, conductor)

    @property
    def frobenius(self) -> int:
        """Largest integer outside the semigroup (-1 for N)."""
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        """Least nonzero member."""
        return self.min_gens[0]

    @property
    def embedding_dimension(self) -> int:
        """Number of minimal generators."""
        return len(self.min_gens)

    def contains(self, n: int) -> bool:
        """Membership test; negative integers are never members."""
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        i = bisect_left(self.small_elements, n)
        return i < len(self.small_elements) and self.small_elements[i] == n

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def elements_up_to(self, bound: int) -> list[int]:
        """Every member in [0, bound], ascending."""
        if bound < 0:
            return []
        members = [x for x in self.small_elements if x <= bound]
        members.extend(range(self.conductor, bound + 1))
        return members

    def gaps(self) -> tuple[int, ...]:
        """Positive integers outside the semigroup, ascending."""
        small = set(self.small_elements)
        return tuple(n for n in range(1, self.conductor) if n not in small)

    def apery_set(self, s: int) -> tuple[int, ...]:
        """The s least members, one per residue class mod s.

        Requires s to be a nonzero member; the largest entry is always
        frobenius + s.
        """
        if s <= 0 or not self.contains(s):
            raise ValueError(f"{s} is not a nonzero member of the semigroup")
        least: dict[int, int] = {}
        for n in range(self.conductor + s):
            if self.contains(n):
                least.setdefault(n % s, n)
                if len(least) == s:
                    break
        if len(least) != s:
            raise AssertionError("residue class missing below conductor + s")
        return tuple(sorted(least.values()))

    def d_value(self, a: int) -> int:
        """gcd of every member in [1, a]; requires a to be a nonzero member.

        Non-increasing in a, and 1 from the conductor + 1 onwards.
        """
        if a <= 0 or not self.contains(a):
            raise ValueError(f"{a} is not a nonzero member of the semigroup")
        g = 0
        for x in self.elements_up_to(a):
            if x == 0:
                continue
            g = gcd(g, x)
            if g == 1:
                break
        return g

    def is_med(self) -> bool:
        """Embedding dimension equal to multiplicity.

        Cross-checked against the equivalent criterion that the nonzero
        minimal generators fill the whole Apery set of the multiplicity;
        the two must agree.
        """
        by_count = self.embedding_dimension == self.multiplicity
        by_apery = set(self.apery_set(self.multiplicity)) == {0, *self.min_gens[1:]}
        if by_count != by_apery:
            raise AssertionError("maximal-embedding-dimension criteria disagree")
        return by_count

    def is_arf(self) -> bool:
        """Closure under x + y - z for members z <= y <= x.

        Only triples with x below the conductor are checked: for x >= c the
        combination is at least x and therefore a member, so the finite
        window is exact.
        """
        small = self.small_elements
        for ix in range(len(small)):
            x = small[ix]
            for iy in range(ix + 1):
                y = small[iy]
                for iz in range(1, iy):  # z == 0 and z == y are trivially fine
                    if not self.contains(x + y - small[iz]):
                        return False
        return True

    def __repr__(self) -> str:
        return "NumericalSemigroup(<%s>)" % ", ".join(map(str, self.min_gens))

    def __str__(self) -> str:
        return "<%s>" % ",".join(map(str, self.min_gens))
