"""Permutation groups, graph automorphisms and Jordan-constant tools."""
from .perms import Perm
from .schreier import PermGroup, group_order
from .search import AutomorphismSearch, automorphism_group, search_automorphisms
from .simple import SimplicityCertificate, conjugacy_classes, is_simple, jordan_constant_small
from .jordan import NonJordanReport, embed_symmetric, non_jordan_report

__all__ = [
    "AutomorphismSearch", "NonJordanReport", "Perm", "PermGroup", "SimplicityCertificate",
    "automorphism_group", "conjugacy_classes", "embed_symmetric", "group_order",
    "is_simple", "jordan_constant_small", "non_jordan_report", "search_automorphisms",
]
