"""Box-ball systems on permutations, RS tableaux, Greene statistics and Knuth moves."""

from .bbs import (
    BbsState,
    SkewArray,
    configuration_array,
    is_steady,
    soliton_decomposition,
    state_from_permutation,
    steady_state_time,
    step_carrier,
    step_direct,
)
from .core import Partition, Permutation, Tableau, conjugate, dominance_leq, is_standard, row_reading_word
from .greene import GreeneProfile, greene_profile
from .knuth import KnuthMoveLabel, classify_swap, knuth_class_graph, knuth_neighbors
from .rs import RsPair, enumerate_qhat_class, inverse_rs, rs_insert

__all__ = [
    "BbsState",
    "GreeneProfile",
    "KnuthMoveLabel",
    "Partition",
    "Permutation",
    "RsPair",
    "SkewArray",
    "Tableau",
    "classify_swap",
    "configuration_array",
    "conjugate",
    "dominance_leq",
    "enumerate_qhat_class",
    "greene_profile",
    "inverse_rs",
    "is_standard",
    "is_steady",
    "knuth_class_graph",
    "knuth_neighbors",
    "row_reading_word",
    "rs_insert",
    "soliton_decomposition",
    "state_from_permutation",
    "steady_state_time",
    "step_carrier",
    "step_direct",
]
