"""HOMFLY polynomials of braid closures through the character expansion
H = sum_Q h^Q S*_Q, for braids on up to five strands."""

from .braid import BraidWord, parse_tuple_text, parse_tuples, parse_word_text
from .exactring import LaurentPoly, RFunc, laurent, parse_expr
from .homfly import HomflyResult, homfly, sector_trace
from .partitions import Partition, schur_star

__all__ = [
    "BraidWord",
    "HomflyResult",
    "LaurentPoly",
    "Partition",
    "RFunc",
    "homfly",
    "laurent",
    "parse_expr",
    "parse_tuple_text",
    "parse_tuples",
    "parse_word_text",
    "schur_star",
    "sector_trace",
]

__version__ = "0.1.0"
