"""Saturated semigroups with prime multiplicity.

For a prime multiplicity p and an admissible conductor c (c >= p and
c not congruent to 1 mod p) there is exactly one saturated numerical
semigroup: the multiples of p below c together with everything from c on.
Its catenary degree has a closed form in the residue i = c mod p and the
quotient h = (c - i) / p:

    2i <= p (this covers i = 0):  2h + 1
    2i >  p:                      2h + 2

The split comes from which multiples of p are sums of two non-multiplicity
generators: the generator residues are {i, ..., p-1} and {1, ..., i-1},
so (2h+1)p is such a sum exactly when some residue pair r, p-r fits inside
[i, p-i], i.e. when 2i <= p, and the longest factorization that stays
disconnected from everything else shrinks by one step of p accordingly.

construct builds the semigroup, closed_form_catenary evaluates the
formula, and verify_range sweeps a (p, h, i) grid cross-checking the
formula against the brute-force catenary degree and the construction
against exhaustive enumeration.
"""

from dataclasses import dataclass
from time import perf_counter

from .core import NumericalSemigroup
from .factorization import semigroup_catenary
from .saturation import (DEFAULT_MAX_CONDUCTOR, DEFAULT_MAX_MULTIPLICITY,
                         enumerate_saturated, is_saturated)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeSatSpec:
    """Admissible pair split as c = p*h + i with i = 0 or 2 <= i <= p - 1."""

    p: int
    c: int
    i: int
    h: int

    @classmethod
    def from_conductor(cls, p: int, c: int) -> "PrimeSatSpec":
        if not _is_prime(p):
            raise ValueError(f"multiplicity {p} is not prime")
        if c < p:
            raise ValueError("conductor below multiplicity impossible")
        i = c % p
        if i == 1:
            raise ValueError(
                f"conductor {c} is congruent to 1 mod {p}: {c - 1} would be a"
                " member, so no semigroup has this conductor and multiplicity")
        return cls(p, c, i, (c - i) // p)


def construct(p: int, c: int) -> NumericalSemigroup:
    """The unique saturated numerical semigroup with prime multiplicity p
    and conductor c.

    Generated by p together with the window [c, c + p) minus its one
    multiple of p.  The result is checked for multiplicity, conductor,
    saturation and maximal embedding dimension before being returned.
    """
    spec = PrimeSatSpec.from_conductor(p, c)
    if spec.i == 0:
        gens = [p, *range(c + 1, c + p)]
    else:
        skip = c + p - spec.i  # the one multiple of p inside [c, c + p)
        gens = [p, *(g for g in range(c, c + p) if g != skip)]
    S = NumericalSemigroup.from_generators(gens)
    if S.multiplicity != p or S.conductor != c or not is_saturated(S) or not S.is_med():
        raise AssertionError(f"construction self-check failed for p={p}, c={c}")
    return S


def closed_form_catenary(p: int, c: int) -> int:
    """Catenary degree of construct(p, c) without touching factorizations.

    2h + 1 when 2i <= p, else 2h + 2.  The boundary 2i == p is reachable
    only for i = 0 (p prime leaves no even split otherwise).
    """
    spec = PrimeSatSpec.from_conductor(p, c)
    return 2 * spec.h + 1 if 2 * spec.i <= p else 2 * spec.h + 2


@dataclass(frozen=True)
class CaseResult:
    """One grid point of a verification sweep."""

    p: int
    c: int
    i: int
    h: int
    min_gens: tuple[int, ...]
    closed_form: int
    brute_force: int
    unique_count: int
    passed: bool
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "p": self.p, "c": self.c, "i": self.i, "h": self.h,
            "min_gens": list(self.min_gens),
            "closed_form": self.closed_form,
            "brute_force": self.brute_force,
            "unique_count": self.unique_count,
            "pass": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass(frozen=True)
class VerificationReport:
    """Sweep outcome: per-case results ordered by (p, c), plus totals."""

    cases: tuple[CaseResult, ...]
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def to_dict(self) -> dict:
        failed = sum(1 for case in self.cases if not case.passed)
        return {
            "cases": [case.to_dict() for case in self.cases],
            "summary": {
                "total": len(self.cases),
                "passed": len(self.cases) - failed,
                "failed": failed,
                "elapsed_ms": round(self.elapsed_ms, 3),
            },
        }


def verify_range(p_list, h_max: int, *,
                 max_multiplicity: int = DEFAULT_MAX_MULTIPLICITY,
                 max_conductor: int = DEFAULT_MAX_CONDUCTOR) -> VerificationReport:
    """Sweep every admissible (p, c) with c = p*h + i and h <= h_max.

    Each case constructs the semigroup (which asserts its own
    postconditions), compares the closed-form catenary degree with the
    brute-force value, and checks through exhaustive enumeration that the
    construction is the only saturated semigroup at its grid point.  Any
    failing case makes the whole report fail.
    """
    primes = sorted(set(p_list))
    if not primes:
        raise ValueError("at least one prime is required")
    for p in primes:
        if not _is_prime(p):
            raise ValueError(f"multiplicity {p} is not prime")
    if h_max < 1:
        raise ValueError("h_max must be at least 1")
    worst_c = max(p * h_max + (p - 1 if p > 2 else 0) for p in primes)
    if max(primes) > max_multiplicity or worst_c > max_conductor:
        raise ValueError(
            f"sweep exceeds desk-scale bounds (multiplicity <= {max_multiplicity},"
            f" conductor <= {max_conductor})")

    t0 = perf_counter()
    cases: list[CaseResult] = []
    for p in primes:
        residues = [0] if p == 2 else [0, *range(2, p)]
        for h in range(1, h_max + 1):
            for i in residues:
                c = p * h + i
                case_t0 = perf_counter()
                S = construct(p, c)
                closed = closed_form_catenary(p, c)
                brute = semigroup_catenary(S)
                found = enumerate_saturated(
                    p, c, max_multiplicity=max_multiplicity,
                    max_conductor=max_conductor)
                ok = closed == brute and len(found) == 1 and found[0] == S
                cases.append(CaseResult(
                    p, c, i, h, S.min_gens, closed, brute, len(found), ok,
                    (perf_counter() - case_t0) * 1000.0))
    cases.sort(key=lambda case: (case.p, case.c))
    return VerificationReport(tuple(cases), (perf_counter() - t0) * 1000.0)
