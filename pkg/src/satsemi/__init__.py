"""Factorization invariants of numerical semigroups.

Canonical records and membership live in core; the saturation test,
SAT-closures and the exhaustive enumerator in saturation; factorizations,
R-classes and catenary degrees in factorization; the prime-multiplicity
family with its closed-form catenary degrees in prime_saturated; cli
wraps it all for the command line.
"""

from .core import NumericalSemigroup
from .factorization import (Factorization, FactorizationSet, RClassPartition,
                            betti_candidates, distance, element_catenary,
                            factorizations, factorizations_with_support,
                            length_set, r_classes, semigroup_catenary)
from .prime_saturated import (CaseResult, PrimeSatSpec, VerificationReport,
                              closed_form_catenary, verify_range)
from .saturation import (SatSystem, SaturatedSequence, enumerate_saturated,
                         is_saturated, is_saturated_sequence,
                         minimal_sat_system, sat_closure)

__all__ = [
    "NumericalSemigroup",
    "Factorization", "FactorizationSet", "RClassPartition",
    "factorizations", "length_set", "distance", "r_classes",
    "element_catenary", "betti_candidates", "semigroup_catenary",
    "factorizations_with_support",
    "SatSystem", "SaturatedSequence", "is_saturated", "sat_closure",
    "minimal_sat_system", "is_saturated_sequence", "enumerate_saturated",
    "PrimeSatSpec", "CaseResult", "VerificationReport",
    "closed_form_catenary", "verify_range",
]
