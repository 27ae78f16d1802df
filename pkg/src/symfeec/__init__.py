"""Exact construction of symmetry-invariant bases for polynomial differential forms on simplices."""

from .errors import FeecError, NotInvariant, NotMonomial
from .extension import ext_full, ext_minus, geometric_decomposition
from .forms import Face, Form, WhitneyForm, dlambda, equals, faces, reduce, whitney, wedge
from .isomorphisms import IsoSpec, iso_I, iso_inverse, iso_J
from .recursion import base_constant_basis, build_A_basis, classify_basis, predict_R_invariance
from .scalar import Cyclo
from .spaces import FormSet, SpaceSpec, basis_B, dimension, spanning_set
from .symmetry import InvarianceCertificate, check_invariance, pullback, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "Cyclo",
    "Face",
    "FeecError",
    "Form",
    "FormSet",
    "InvarianceCertificate",
    "IsoSpec",
    "NotInvariant",
    "NotMonomial",
    "SpaceSpec",
    "WhitneyForm",
    "base_constant_basis",
    "basis_B",
    "build_A_basis",
    "check_invariance",
    "classify_basis",
    "dimension",
    "dlambda",
    "equals",
    "ext_full",
    "ext_minus",
    "faces",
    "geometric_decomposition",
    "iso_I",
    "iso_J",
    "iso_inverse",
    "predict_R_invariance",
    "pullback",
    "reduce",
    "spanning_set",
    "verify_certificate",
    "wedge",
    "whitney",
]
