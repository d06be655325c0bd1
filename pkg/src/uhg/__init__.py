"""uhg: construction, search and exact verification of uniquely hamiltonian
graphs with prescribed degree sets."""

from .graphs import (
    DegreeSet,
    Graph,
    MultiGraph,
    cycle,
    complete,
    degree_set,
    expand_triangle,
    multiply_edge,
    path,
    petersen,
    subdivide_edge,
)
from .codec import decode, encode, load_lines, dump_lines
from .canon import are_isomorphic, canonical_form, canonical_labelling
from .hamilton import (
    HamReport,
    count_ham_cycles,
    count_ham_paths,
    has_unique_ham_path,
    is_uniquely_hamiltonian,
    off_cycle_structure,
)
from .connectivity import find_cut, is_connected, is_k_connected, min_side_2cut
from .trace import ConstructionTrace, TraceStep

__version__ = "0.1.0"
