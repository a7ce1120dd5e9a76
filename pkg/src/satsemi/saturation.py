"""Saturation of numerical semigroups.

A semigroup is saturated when every nonzero member s can take one more
step of its local period: s + gcd{members <= s} stays inside.  This
module has the test, the smallest saturated semigroup containing a given
set (its SAT-closure), minimal SAT-systems with their gcd chains, and an
exhaustive enumerator of the saturated semigroups with prescribed
multiplicity and conductor that is deliberately independent of the
closure formula, so either can serve as an oracle for the other.
"""

from dataclasses import dataclass
from math import gcd

from .core import NumericalSemigroup, _gcd_all

DEFAULT_MAX_MULTIPLICITY = 10
DEFAULT_MAX_CONDUCTOR = 60


def is_saturated_sequence(d) -> bool:
    """True for a strictly decreasing positive sequence ending in 1 in which
    every term is divisible by its successor.  Empty sequences fail."""
    seq = tuple(d)
    if not seq or seq[-1] != 1 or any(x <= 0 for x in seq):
        return False
    return all(a > b and a % b == 0 for a, b in zip(seq, seq[1:]))


@dataclass(frozen=True)
class SaturatedSequence:
    """Divisor chain d_1 > d_2 > ... > d_k = 1 with d_{i+1} | d_i."""

    d: tuple[int, ...]

    def __post_init__(self):
        if not is_saturated_sequence(self.d):
            raise ValueError(f"not a saturated sequence: {self.d}")


@dataclass(frozen=True)
class SatSystem:
    """Generators of a saturated semigroup at which the running gcd drops.

    gens       n_1 < ... < n_r, members where gcd{members <= n} changes
    gcd_chain  d_i = gcd{n_1, ..., n_i}; strictly decreasing, ends in 1
    """

    gens: tuple[int, ...]
    gcd_chain: tuple[int, ...]

    def __post_init__(self):
        if not self.gens or len(self.gens) != len(self.gcd_chain):
            raise ValueError("gens and gcd_chain must be nonempty and aligned")
        if any(n <= 0 for n in self.gens) or list(self.gens) != sorted(set(self.gens)):
            raise ValueError("gens must be strictly increasing positive integers")
        g = 0
        for n, d in zip(self.gens, self.gcd_chain):
            g2 = gcd(g, n)
            if g2 != d or (g and g2 >= g):
                raise ValueError("gcd_chain does not match gens")
            g = g2
        if g != 1:
            raise ValueError("a SAT-system must have overall gcd 1")


def is_saturated(S: NumericalSemigroup) -> bool:
    """Test s + gcd{members <= s} in S for every nonzero member s up to the
    conductor.

    Beyond the conductor the gcd is 1 and s + 1 is trivially a member, so
    this finite window is exact, not an approximation.
    """
    g = 0
    for s in S.elements_up_to(S.conductor):
        if s == 0:
            continue
        g = gcd(g, s)
        if not S.contains(s + g):
            return False
    return True


def sat_closure(gens) -> NumericalSemigroup:
    """Smallest saturated numerical semigroup containing the given set.

    The input is first thinned to the members where its running gcd drops
    (anything else is already forced in, so dropping it changes nothing).
    With survivors n_1 < ... < n_r and partial gcds d_1 > ... > d_r = 1,
    the closure holds n_j, n_j + d_j, n_j + 2 d_j, ... up to n_{j+1} for
    each j, and everything from n_r on.  The assembled result is verified
    to round-trip through from_generators and to pass the saturation test.
    """
    A = sorted(set(gens))
    if not A:
        raise ValueError("at least one generator is required")
    if A[0] <= 0:
        raise ValueError("generators must be positive integers")
    overall = _gcd_all(A)
    if overall != 1:
        raise ValueError(f"not contained in any numerical semigroup: gcd is {overall}")

    chain: list[int] = []
    chain_gcds: list[int] = []
    g = 0
    for n in A:
        g2 = gcd(g, n)
        if g2 != g:
            chain.append(n)
            chain_gcds.append(g2)
            g = g2

    elements = {0}
    for j in range(len(chain) - 1):
        elements.update(range(chain[j], chain[j + 1], chain_gcds[j]))
    conductor = chain[-1]
    while conductor >= 1 and (conductor - 1) in elements:
        conductor -= 1

    if conductor == 0:
        result = NumericalSemigroup.from_generators([1])
    else:
        small = sorted(x for x in elements if x < conductor)
        mult = small[1] if len(small) > 1 else conductor
        result = NumericalSemigroup.from_generators(
            [x for x in small if x] + list(range(conductor, conductor + mult)))
        if result.conductor != conductor or list(result.small_elements) != small:
            raise AssertionError("saturation closure disagrees with its own element set")
    if not is_saturated(result):
        raise AssertionError("saturation closure produced a non-saturated semigroup")
    return result


def minimal_sat_system(S: NumericalSemigroup) -> SatSystem:
    """The members at which gcd{members <= n} strictly drops, with the chain.

    Defined for saturated semigroups only; sat_closure of the returned
    generators recovers S, and no proper subset of them does.
    """
    if not is_saturated(S):
        raise ValueError("minimal SAT-system defined for saturated semigroups only")
    gens: list[int] = []
    chain: list[int] = []
    g = 0
    n = 0
    while g != 1:  # reaches 1 by conductor + 1 at the latest
        n += 1
        if S.contains(n):
            g2 = gcd(g, n)
            if g2 != g:
                gens.append(n)
                chain.append(g2)
                g = g2
    return SatSystem(tuple(gens), tuple(chain))


def enumerate_saturated(multiplicity: int, conductor: int, *,
                        max_multiplicity: int = DEFAULT_MAX_MULTIPLICITY,
                        max_conductor: int = DEFAULT_MAX_CONDUCTOR,
                        ) -> list[NumericalSemigroup]:
    """Every saturated numerical semigroup with the given multiplicity and
    conductor, found by exhaustive subset search between the two.

    The search walks the positions multiplicity < w < conductor in order,
    growing a candidate member set.  A position may stay out only when no
    two present members sum to it (sums landing below the conductor must
    stay inside), and conductor - 1 is forced out so the conductor is
    exact.  Complete candidates are screened with the saturation test,
    rebuilt through from_generators as a cross-check, and returned sorted
    by element set.  No step relies on the sat_closure formula.
    """
    m, c = multiplicity, conductor
    if m < 2:
        raise ValueError("multiplicity must be at least 2")
    if c < m:
        raise ValueError("conductor below multiplicity is impossible")
    if m > max_multiplicity or c > max_conductor:
        raise ValueError(
            f"enumeration window too large (limits: multiplicity <= {max_multiplicity},"
            f" conductor <= {max_conductor})")
    if c == m + 1:
        return []  # conductor - 1 would be the multiplicity itself

    in_set = bytearray(c)
    in_set[0] = 1
    if m < c:
        in_set[m] = 1
    survivors: list[list[int]] = []

    def saturated_window(members: list[int]) -> bool:
        g = 0
        for s in members[1:]:
            g = gcd(g, s)
            t = s + g
            if t < c and not in_set[t]:
                return False
        return True

    def place(w: int) -> None:
        if w >= c:
            members = [x for x in range(c) if in_set[x]]
            if saturated_window(members):
                survivors.append(members)
            return
        forced = any(in_set[x] and in_set[w - x] for x in range(m, w // 2 + 1))
        if w == c - 1:
            if not forced:
                place(c)
            return
        if not forced:
            place(w + 1)
        in_set[w] = 1
        place(w + 1)
        in_set[w] = 0

    place(m + 1)

    out = []
    for members in sorted(survivors):
        S = NumericalSemigroup.from_generators(
            [x for x in members if x] + list(range(c, c + m)))
        if S.conductor != c or S.multiplicity != m or not is_saturated(S):
            raise AssertionError("enumerated candidate failed re-validation")
        out.append(S)
    return out
