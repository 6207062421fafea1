"""Memetic binary-PSO solver for SAT and MAX-SAT."""

from ._mempso import (
    CnfFormula,
    ConfigError,
    InvalidAssignment,
    OracleRefused,
    ParseError,
    PivotRule,
    RunReport,
    RunStatus,
    brute_force,
    clamp_velocity,
    evaluate,
    generate,
    local_search,
    parse_dimacs,
    read_dimacs,
    sigmoid,
    solve,
    unsatisfied_clauses,
    verify_report,
    write_dimacs,
)

__all__ = [
    "CnfFormula",
    "ConfigError",
    "InvalidAssignment",
    "OracleRefused",
    "ParseError",
    "PivotRule",
    "RunReport",
    "RunStatus",
    "brute_force",
    "clamp_velocity",
    "evaluate",
    "generate",
    "local_search",
    "parse_dimacs",
    "read_dimacs",
    "sigmoid",
    "solve",
    "unsatisfied_clauses",
    "verify_report",
    "write_dimacs",
]

__version__ = "0.1.0"
