"""Braid group B3, SL(2,Z) and the automorphisms of the free group of rank two."""
from .amalg import AutAmalgElem, aut_equal, aut_mul, canonicalize
from .autf2 import (
    EndoF2, commutator_condition, compose, is_automorphism, nielsen_decompose, order_aut,
    parse_endo, psi, rho, torsion_class_aut,
)
from .braid3 import BraidWord, braid_equal, conj_min_form, matrix_to_braid, normal_form, parse_braid, sigma
from .errors import B3AutError, ParseError
from .intmat import Mat2, derived_membership, parse_matrix, rewrite_in_f, torsion_class_gl, torsion_class_sl
from .words import FreeWord, parse_word

__version__ = "0.1.0"
