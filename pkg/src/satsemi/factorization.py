"""Factorizations of semigroup elements over the minimal generators.

Z(s) is the set of exponent vectors (n_1, ..., n_e) with
n_1 a_1 + ... + n_e a_e = s.  Lengths, supports, the distance between two
factorizations, the partition of Z(s) into R-classes (components under
transitive chaining of shared support) and the catenary degrees built on
top of all that live here.
"""

from dataclasses import dataclass

from .core import NumericalSemigroup


@dataclass(frozen=True)
class Factorization:
    """Exponent vector over the minimal generators a_1 < ... < a_e."""

    exps: tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        """1-based indices of the nonzero entries (1 <-> a_1)."""
        return tuple(i + 1 for i, e in enumerate(self.exps) if e)


@dataclass(frozen=True)
class FactorizationSet:
    """Complete Z(s) for one element, lexicographically descending."""

    element: int
    factorizations: tuple[Factorization, ...]

    def __len__(self) -> int:
        return len(self.factorizations)

    def __iter__(self):
        return iter(self.factorizations)

    def lengths(self) -> tuple[int, ...]:
        """Sorted distinct factorization lengths."""
        return tuple(sorted({f.length for f in self.factorizations}))


@dataclass(frozen=True)
class RClassPartition:
    """Z(s) split into R-classes, with each class's minimum length."""

    classes: tuple[tuple[Factorization, ...], ...]
    min_lengths: tuple[int, ...]

    @property
    def m_value(self) -> int:
        """Largest of the per-class minimum lengths."""
        return max(self.min_lengths)


def factorizations(S: NumericalSemigroup, s: int) -> FactorizationSet:
    """All exponent vectors representing s; empty exactly when s is no member.

    Bounded descent over the generators with the leading exponent counted
    down, so the output order is lexicographically descending.
    """
    gens = S.min_gens
    e = len(gens)
    found: list[Factorization] = []
    exps = [0] * e

    def descend(i: int, remaining: int) -> None:
        if i == e - 1:
            q, r = divmod(remaining, gens[i])
            if r == 0:
                exps[i] = q
                found.append(Factorization(tuple(exps)))
                exps[i] = 0
            return
        for k in range(remaining // gens[i], -1, -1):
            exps[i] = k
            descend(i + 1, remaining - k * gens[i])
        exps[i] = 0

    if s >= 0:
        descend(0, s)
    return FactorizationSet(s, tuple(found))


def length_set(S: NumericalSemigroup, s: int) -> tuple[int, ...]:
    """Sorted distinct lengths over Z(s); s must be a member."""
    if not S.contains(s):
        raise ValueError(f"{s} is not a member of the semigroup")
    return factorizations(S, s).lengths()


def distance(x: Factorization, y: Factorization) -> int:
    """max(|x - g|, |y - g|) with g the componentwise minimum of x and y."""
    if len(x.exps) != len(y.exps):
        raise ValueError("factorizations live over different generator lists")
    common = sum(min(a, b) for a, b in zip(x.exps, y.exps))
    return max(x.length, y.length) - common


def r_classes(Z: FactorizationSet) -> RClassPartition:
    """Partition under the transitive closure of "supports intersect".

    Union-find over the pairwise support checks; classes come out in order
    of first appearance, and distinct classes have pairwise disjoint
    supports by construction.
    """
    facs = Z.factorizations
    if not facs:
        raise ValueError("R-classes are defined for nonempty factorization sets")
    parent = list(range(len(facs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    supports = [set(f.support) for f in facs]
    for i in range(len(facs)):
        for j in range(i + 1, len(facs)):
            if supports[i] & supports[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    groups: dict[int, list[Factorization]] = {}
    for i, f in enumerate(facs):
        groups.setdefault(find(i), []).append(f)
    classes = tuple(tuple(g) for g in groups.values())
    return RClassPartition(classes, tuple(min(f.length for f in g) for g in classes))


def _bottleneck(facs) -> int:
    """Smallest N whose distance-at-most-N graph connects all of facs.

    Prim-style minimax tree: always absorb the vertex whose cheapest edge
    into the tree is smallest; the largest edge used is the answer.
    """
    n = len(facs)
    best = [distance(facs[0], f) for f in facs]
    in_tree = [False] * n
    in_tree[0] = True
    worst = 0
    for _ in range(n - 1):
        u = min((i for i in range(n) if not in_tree[i]), key=best.__getitem__)
        worst = max(worst, best[u])
        in_tree[u] = True
        for v in range(n):
            if not in_tree[v]:
                d = distance(facs[u], facs[v])
                if d < best[v]:
                    best[v] = d
    return worst


def element_catenary(S: NumericalSemigroup, s: int) -> int:
    """Least N such that any two factorizations of s are joined by a chain
    with consecutive distances at most N; 0 when Z(s) is a singleton."""
    if not S.contains(s):
        raise ValueError(f"{s} is not a member of the semigroup")
    facs = factorizations(S, s).factorizations
    if len(facs) <= 1:
        return 0
    return _bottleneck(facs)


def betti_candidates(S: NumericalSemigroup) -> tuple[int, ...]:
    """Apery elements of the multiplicity shifted by the other generators.

    A finite superset of every element whose factorizations split into two
    or more R-classes, and always large enough to carry the semigroup's
    catenary degree.
    """
    if S.embedding_dimension < 2:
        return ()
    ap = S.apery_set(S.multiplicity)
    return tuple(sorted({w + a for w in ap if w for a in S.min_gens[1:]}))


def semigroup_catenary(S: NumericalSemigroup) -> int:
    """Largest element catenary degree, computed two ways and cross-checked.

    Route one takes the largest per-class minimum length over candidate
    elements with at least two R-classes; route two takes the largest
    bottleneck chain value over the same candidates.  The routes always
    coincide; a mismatch is an implementation bug, not bad input.
    """
    if S.embedding_dimension < 2:
        return 0
    largest_class_min = 0
    largest_bottleneck = 0
    for s in betti_candidates(S):
        Z = factorizations(S, s)
        part = r_classes(Z)
        if len(part.classes) >= 2:
            largest_class_min = max(largest_class_min, part.m_value)
        if len(Z.factorizations) > 1:
            largest_bottleneck = max(largest_bottleneck, _bottleneck(Z.factorizations))
    if largest_class_min != largest_bottleneck:
        raise AssertionError(
            f"catenary computations disagree: class minima give {largest_class_min},"
            f" chains give {largest_bottleneck}")
    return largest_class_min


def factorizations_with_support(S: NumericalSemigroup, s: int,
                                i: int) -> tuple[Factorization, ...]:
    """The factorizations of s in which generator i appears (i is 1-based)."""
    if not 1 <= i <= S.embedding_dimension:
        raise ValueError(f"generator index {i} out of range 1..{S.embedding_dimension}")
    return tuple(f for f in factorizations(S, s) if f.exps[i - 1])
