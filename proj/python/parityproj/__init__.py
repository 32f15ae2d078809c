"""Euclidean projections onto parity polytopes and ADMM LP decoding."""

from ._core import (
    AlistParseError,
    ParityCheckMatrix,
    __version__,
    awgn_llr,
    bench_iterations_csv,
    bench_ops_csv,
    bench_probability_csv,
    clamp_unit_box,
    cut_search,
    decode,
    is_member,
    load_alist,
    oracle_project,
    oracle_project_capped_simplex,
    parse_alist,
    project,
    project_counted,
    project_hyperplane,
    project_wasson_draper,
    project_zhang_siegel,
)

__all__ = [
    "AlistParseError",
    "ParityCheckMatrix",
    "__version__",
    "awgn_llr",
    "bench_iterations_csv",
    "bench_ops_csv",
    "bench_probability_csv",
    "clamp_unit_box",
    "cut_search",
    "decode",
    "is_member",
    "load_alist",
    "oracle_project",
    "oracle_project_capped_simplex",
    "parse_alist",
    "project",
    "project_counted",
    "project_hyperplane",
    "project_wasson_draper",
    "project_zhang_siegel",
]
