"""Exact web calculus for type Q permutation supermodules."""

from qwebs.core import (
    GaussianRational,
    Permutation,
    Supertabloid,
    enumerate_compositions,
)
from qwebs.evaluate import MorphismMatrix, eval_web
from qwebs.homspace import hom_basis, hom_dim_oracle, rank_of_family
from qwebs.permod import ModuleVector, base_tabloid, module_basis
from qwebs.relcheck import verify_all
from qwebs.schurq import verify_schur_relations, verify_supercommutation
from qwebs.sergeev import SergeevBasisWord, SergeevElement, word_multiply
from qwebs.web import (
    WebCombination,
    WebExpr,
    WebLayer,
    compose,
    expand_clasp,
    ladder_web,
    sergeev_diagram,
    tabloid_web,
)

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "Permutation",
    "Supertabloid",
    "enumerate_compositions",
    "MorphismMatrix",
    "eval_web",
    "hom_basis",
    "hom_dim_oracle",
    "rank_of_family",
    "ModuleVector",
    "base_tabloid",
    "module_basis",
    "verify_all",
    "verify_schur_relations",
    "verify_supercommutation",
    "SergeevBasisWord",
    "SergeevElement",
    "word_multiply",
    "WebCombination",
    "WebExpr",
    "WebLayer",
    "compose",
    "expand_clasp",
    "ladder_web",
    "sergeev_diagram",
    "tabloid_web",
]
