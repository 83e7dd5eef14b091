"""Persistent homology of complex networks.

Build clique or neighborhood complexes from graphs, filter them by
skeleton or simplex-wise order, reduce the GF(2) boundary matrix, and
report barcodes and (persistent) Betti numbers.
"""

from .graph import Graph, degree_histogram, load_edge_list, save_edge_list
from .complexes import (
    SimplicialComplex,
    clique_complex,
    enumerate_simplices,
    incidence_matrix,
    neighborhood_complex,
    skeleton,
)
from .filtration import Filtration, simplexwise_filtration, skeleton_filtration, validate
from .persistence import (
    Barcode,
    Interval,
    betti_at,
    boundary_matrix,
    intervals,
    persistent_betti,
    reduce,
)
from .oracle import betti_bruteforce, persistent_betti_direct
from .generators import gen_er, gen_exponential, gen_sf_modular

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "load_edge_list",
    "save_edge_list",
    "degree_histogram",
    "SimplicialComplex",
    "clique_complex",
    "neighborhood_complex",
    "skeleton",
    "enumerate_simplices",
    "incidence_matrix",
    "Filtration",
    "skeleton_filtration",
    "simplexwise_filtration",
    "validate",
    "boundary_matrix",
    "reduce",
    "intervals",
    "betti_at",
    "persistent_betti",
    "Barcode",
    "Interval",
    "betti_bruteforce",
    "persistent_betti_direct",
    "gen_er",
    "gen_exponential",
    "gen_sf_modular",
    "__version__",
]
