"""Centralized numerical tolerances.

Every module pulls its thresholds from here so that the accuracy contract
of the whole pipeline can be audited (and tuned) in one place.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # Heisenberg condition: symplectic eigenvalues must be >= 1 - physicality.
    physicality: float = 1e-9
    # Covariance matrices must be symmetric to this entrywise tolerance.
    symmetry: float = 1e-10
    # Exact algebraic identities (symplectic closure, channel composition).
    algebra: float = 1e-12
    # Heralding probabilities below this floor are treated as "no herald";
    # moment extraction is refused because sign cancellation dominates.
    prob_floor: float = 1e-14
    # Allowed Heisenberg violation of a covariance recovered from a signed
    # mixture before it is reported as a cancellation failure.
    moment_physicality: float = 1e-6


TOL = Tolerances()

SCHEMA_VERSION = 1
