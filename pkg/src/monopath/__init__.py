"""Monochromatic-path duos, absorbing sets and forbidding arcs in edge-coloured tournaments."""

from .duo import Duo, Embedding, PatternTournament, duo_construct, min_duo, theorem_bound, verify_duo
from .kernels import is_absorbing, min_absorbing, quasi_kernel, quasi_partition_duo
from .model import ColouredTournament, Digraph, SimpleGraph, induced_sub, parse_cdt, serialize_cdt
from .reach import forbidding_edges, mono_reach_any, mono_reach_within, quasi_mono_triangles

__version__ = "0.1.0"
