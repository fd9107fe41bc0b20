"""Chains coalgebras of simplicial sets, cobar constructions and equivariant checks."""

from .coalgebra import chains, chains_equivariant, coalg_fixed_points, grouplikes, points
from .dgcobar import cobar, homology_dims, normalized
from .equivariant import FiniteGroup, GSimplicialSet, OrbitCategory, named_group, subgroups
from .errors import EquicobarError, Inconclusive, InputError, SimplicialError
from .fields import GF, QQ, parse_field
from .fundamental_group import fundamental_group, universal_cover
from .kernels import BACKEND
from .oracles import Verdict, g_equivalence, is_cat_F_equiv, is_F_equiv, is_pi1_F_equiv
from .simplicial import SimplicialMap, SimplicialSet, standard_model

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EquicobarError",
    "FiniteGroup",
    "GF",
    "GSimplicialSet",
    "Inconclusive",
    "InputError",
    "OrbitCategory",
    "QQ",
    "SimplicialError",
    "SimplicialMap",
    "SimplicialSet",
    "Verdict",
    "chains",
    "chains_equivariant",
    "coalg_fixed_points",
    "cobar",
    "fundamental_group",
    "g_equivalence",
    "grouplikes",
    "homology_dims",
    "is_F_equiv",
    "is_cat_F_equiv",
    "is_pi1_F_equiv",
    "named_group",
    "normalized",
    "parse_field",
    "points",
    "standard_model",
    "subgroups",
    "universal_cover",
    "__version__",
]
