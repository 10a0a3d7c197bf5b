"""Detection of induced net subdivisions."""
from .detector import DetectorOutcome, detect_from_candidate, direct_pair, run_full
from .estimator import DoilyDetector
from .frames import (
    CandidatePair,
    Frame,
    StreamStats,
    candidate_stream,
    frame_local_checks,
    frame_of,
    is_frame_in,
    is_star_cutset_centre,
    star_cutset_elimination,
)
from .graph import (
    Graph,
    GraphFormatError,
    from_edge_list,
    parse_edgelist,
    parse_graph6,
    read_graph,
)
from .recognition import (
    DoilyCertificate,
    OracleLimitError,
    OracleReport,
    certificate_for,
    find_doily_upto,
    is_doily,
    oracle_report,
)

__version__ = "0.1.0"

__all__ = [
    "CandidatePair",
    "DetectorOutcome",
    "DoilyCertificate",
    "DoilyDetector",
    "Frame",
    "Graph",
    "GraphFormatError",
    "OracleLimitError",
    "OracleReport",
    "StreamStats",
    "candidate_stream",
    "certificate_for",
    "detect_from_candidate",
    "direct_pair",
    "find_doily_upto",
    "frame_local_checks",
    "frame_of",
    "from_edge_list",
    "is_doily",
    "is_frame_in",
    "is_star_cutset_centre",
    "oracle_report",
    "parse_edgelist",
    "parse_graph6",
    "read_graph",
    "run_full",
    "star_cutset_elimination",
]
