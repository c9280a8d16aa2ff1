"""Paired and semipaired dominating sets in near-triangulations."""

from .base import CaseCoverage, PairedDomSet, SemipairedDomSet
from .config import DEFAULT_CONFIG, SolverConfig, load_config
from .errors import TridomError
from .exact_oracle import exact_gamma, exact_gamma_pr, exact_gamma_pr2, exact_report
from .family_f import is_in_family_f
from .graph_core import EdgeRef, NearTriangulation, validate
from .ntri_io import parse_ntri, read_instances
from .paired_solver import PairedSolver, compute_paired
from .semipaired_solver import SemipairedSolver, compute_semipaired

__all__ = [
    "CaseCoverage",
    "DEFAULT_CONFIG",
    "EdgeRef",
    "NearTriangulation",
    "PairedDomSet",
    "PairedSolver",
    "SemipairedDomSet",
    "SemipairedSolver",
    "SolverConfig",
    "TridomError",
    "compute_paired",
    "compute_semipaired",
    "exact_gamma",
    "exact_gamma_pr",
    "exact_gamma_pr2",
    "exact_report",
    "is_in_family_f",
    "load_config",
    "parse_ntri",
    "read_instances",
    "validate",
]
