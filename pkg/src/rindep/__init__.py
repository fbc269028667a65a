"""Distance-r independent sets via witnesses, cowitnesses and the splitter game."""
from ._kernels import BACKEND
from .cowitness import CowitnessCertificate, build_cowitness, build_cowitness_ext, cowitness_size_bound
from .errors import (BudgetExceeded, InputError, InternalInvariantError, NonSparseInputError,
                     ParseError, PromiseViolation, RindepError)
from .generators import FamilySpec, generate, subdivide
from .graph import (CaptureEvidence, Graph, ball, bounded_bfs, captures_pair, captures_set,
                    distances, induced_subgraph, is_r_independent)
from .greedy import GreedyOutcome, greedy_dichotomy
from .io import ParsedGraph, format_edge_list, parse_edge_list, read_edge_list
from .profiles import Profile, captured_region, profile_matrix, set_profile, trace, vertex_profile
from .solvers import LadderTranscript, SolveOutcome, solve_direct, solve_ladder, x_step, y_step
from .splitter import SplitterStrategy, SplitterTrace, play_splitter_game, splitter_respond
from .witness import (WitnessCheckResult, check_witness, conflict_count, refine_to_independent,
                      refine_trace)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BudgetExceeded", "CaptureEvidence", "CowitnessCertificate", "FamilySpec", "Graph",
    "GreedyOutcome", "InputError", "InternalInvariantError", "LadderTranscript", "NonSparseInputError",
    "ParseError", "ParsedGraph", "Profile", "PromiseViolation", "RindepError", "SolveOutcome",
    "SplitterStrategy", "SplitterTrace", "WitnessCheckResult", "ball", "bounded_bfs",
    "build_cowitness", "build_cowitness_ext", "captured_region", "captures_pair", "captures_set",
    "check_witness", "conflict_count", "cowitness_size_bound", "distances", "format_edge_list",
    "generate", "greedy_dichotomy", "induced_subgraph", "is_r_independent", "parse_edge_list",
    "play_splitter_game", "profile_matrix", "read_edge_list", "refine_to_independent",
    "refine_trace", "set_profile", "solve_direct", "solve_ladder", "splitter_respond", "subdivide",
    "trace", "vertex_profile", "x_step", "y_step",
]
