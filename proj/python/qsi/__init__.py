"""Decoding engine and Monte Carlo simulator for CSS LDPC codes."""

from ._core import (
    BitVec,
    CssCode,
    DecodeOutcome,
    PointStats,
    SiOutcome,
    SparseBitMatrix,
    a_priori_llrs,
    code_report_json,
    decode,
    gb_construct,
    in_row_space,
    is_success,
    load_alist,
    load_code,
    mat_vec,
    new_css,
    osd0_decode,
    rank,
    run_experiment,
    si_decode,
    solve,
    write_alist,
)

__all__ = [
    "BitVec",
    "CssCode",
    "DecodeOutcome",
    "PointStats",
    "SiOutcome",
    "SparseBitMatrix",
    "a_priori_llrs",
    "code_report_json",
    "decode",
    "gb_construct",
    "in_row_space",
    "is_success",
    "load_alist",
    "load_code",
    "mat_vec",
    "new_css",
    "osd0_decode",
    "rank",
    "run_experiment",
    "si_decode",
    "solve",
    "write_alist",
]
