"""Exact scattering states of a particle on a chain of rectangular barriers."""

from ._layerwave import (
    Barrier,
    DegenerateError,
    DomainError,
    Lattice,
    LayerwaveError,
    ParseError,
    Scenario,
    Solution,
    Structure,
    ValidationError,
    band_scan,
    bloch_phase,
    cos_beta,
    mirrored,
    oracle_check,
    parse_structure,
    scenario,
    scenario_names,
    serialize_structure,
    solve,
    sweep,
    validate,
    wavenumber,
)

__all__ = [
    "Barrier",
    "DegenerateError",
    "DomainError",
    "Lattice",
    "LayerwaveError",
    "ParseError",
    "Scenario",
    "Solution",
    "Structure",
    "ValidationError",
    "band_scan",
    "bloch_phase",
    "cos_beta",
    "mirrored",
    "oracle_check",
    "parse_structure",
    "scenario",
    "scenario_names",
    "serialize_structure",
    "solve",
    "sweep",
    "validate",
    "wavenumber",
]
