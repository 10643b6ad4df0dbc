"""Exact coadjoint orbits, Kirillov models and Weyl-Pedersen quantization."""

from .errors import OrbitkitError
from .exact import I, ONE, ZERO, ScalarExpr, as_scalar, param, params
from .exact.diffop import DiffOperator, commutator
from .exact.poly import MultiPoly
from .kirillov import DRep, induced_drep, vergne_polarization, verify_drep_brackets
from .lie import LieAlgebra, SymplecticForm, jordan_holder_basis, validate_lie
from .orbits import CoadjointOrbit, is_flat_orbit, jump_indices, orbit_cross_section, prop31_check, prop32_check
from .quantization import coadjoint_vector_fields, find_invariant_ops, quantize_poly, verify_pullback

__all__ = [
    "CoadjointOrbit",
    "DRep",
    "DiffOperator",
    "I",
    "LieAlgebra",
    "MultiPoly",
    "ONE",
    "OrbitkitError",
    "ScalarExpr",
    "SymplecticForm",
    "ZERO",
    "as_scalar",
    "coadjoint_vector_fields",
    "commutator",
    "find_invariant_ops",
    "induced_drep",
    "is_flat_orbit",
    "jordan_holder_basis",
    "jump_indices",
    "orbit_cross_section",
    "param",
    "params",
    "prop31_check",
    "prop32_check",
    "quantize_poly",
    "validate_lie",
    "vergne_polarization",
    "verify_drep_brackets",
    "verify_pullback",
]

__version__ = "0.1.0"
