"""Verification engine: lemma regimes, small cases, scans, table checks."""

from .report import FAIL, INDETERMINATE, PASS, VerificationReport
from .tables import (
    ENV_TABLE_PATH,
    J,
    TableEntry,
    delta_J,
    load_tables,
    lookup,
    parse_table_line,
    parse_tables,
    serialize_tables,
    shortening_chain_check,
    verify_tables,
)
from .sizebounds import (
    KNOWN_EXCEPTIONS,
    exception_scan,
    part2_inequality_holds,
    verify_lemma12_part1,
    verify_lemma12_part2,
    verify_lemma12_part3,
)
from .smallcases import (
    OutOfRegimeError,
    remark_matrix,
    verify_lemma14_part1,
    verify_lemma14_part2,
    verify_remark_matrix,
    verify_shortening,
)
from .scan import scan_lemma14_part2

__all__ = [
    "FAIL",
    "INDETERMINATE",
    "PASS",
    "VerificationReport",
    "ENV_TABLE_PATH",
    "J",
    "TableEntry",
    "delta_J",
    "load_tables",
    "lookup",
    "parse_table_line",
    "parse_tables",
    "serialize_tables",
    "shortening_chain_check",
    "verify_tables",
    "KNOWN_EXCEPTIONS",
    "exception_scan",
    "part2_inequality_holds",
    "verify_lemma12_part1",
    "verify_lemma12_part2",
    "verify_lemma12_part3",
    "OutOfRegimeError",
    "remark_matrix",
    "verify_lemma14_part1",
    "verify_lemma14_part2",
    "verify_remark_matrix",
    "verify_shortening",
    "scan_lemma14_part2",
]
