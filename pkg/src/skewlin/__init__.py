"""Exact linear algebra over skew Laurent polynomial rings D[t, t^-1; tau]."""

from .factorize import (
    Factorization,
    GaussFactorization,
    NotElementary,
    birkhoff_factorize,
    bruhat_cell,
    bruhat_factorize,
    gauss_factorize,
    weyl_cell,
)
from .field import Field, RingSpec, make_instance, parse_ring_spec
from .k1 import K1Class, h1_commutator_decompose, k1_class, k1_structure, k1_structure_oracle
from .laurent import SkewLaurent, UnitMonomial, format_poly
from .matrix import GeneratorApp, GroupMatrix, build
from .parse import ParseError, parse_matrix, parse_scalar_poly, parse_script
from .rank2 import degree_chain_check, unipotent_factor_rank2
from .relations import check_relation
from .steinberg import find_universality_constants, k2_element, perfectness_check
from .tits import tits_axiom_check
from .weyl import AffineRoot, WeylElement, reduced_word, weyl_length

__version__ = "0.1.0"
