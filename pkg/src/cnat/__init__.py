try:
    from ._version import __version__
except (ImportError, ModuleNotFoundError) as e:
    __version__ = "0.0.0_undefined"

from .core import (Axiom, CellCoord, Cnat, Decomposition, DecompositionError, DotGrid, GridFormatError,
                   PermutationMatrix, ValidationError, VertexRole, compose, decompose, is_cnat,
                   leaf_matrix, parse_grid, serialize_grid, validate)
from .enumeration import (CountByDet, EnumerationLimitError, count_by_det, count_by_split,
                          enumerate_cnats, enumerate_naive, iter_cnats, iter_decompositions)
from .linalg import Sign, cnat_det, cnat_matrix, det_int, interleave_sign, perm_sign
from .sequences import (ParityCount, SeqTable, ab_seq, binomial, d_closed, d_rec, d_rec_reduced,
                        eo_counts, eo_diff_closed, seq_table, t_seq)
from .cache import CountsCache

__all__ = [
    "Axiom", "CellCoord", "Cnat", "Decomposition", "DecompositionError", "DotGrid", "GridFormatError",
    "PermutationMatrix", "ValidationError", "VertexRole", "compose", "decompose", "is_cnat",
    "leaf_matrix", "parse_grid", "serialize_grid", "validate",
    "CountByDet", "EnumerationLimitError", "count_by_det", "count_by_split", "enumerate_cnats",
    "enumerate_naive", "iter_cnats", "iter_decompositions",
    "Sign", "cnat_det", "cnat_matrix", "det_int", "interleave_sign", "perm_sign",
    "ParityCount", "SeqTable", "ab_seq", "binomial", "d_closed", "d_rec", "d_rec_reduced",
    "eo_counts", "eo_diff_closed", "seq_table", "t_seq",
    "CountsCache", "__version__",
]
