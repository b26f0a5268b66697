"""Declarative verification tasks, the runner and the ``verify`` command."""

from .checks import CHECK_FUNCS, CHECK_HELP, Outcome, build_table, run_check
from .main import default_taskfile, main
from .runner import Report, RunOptions, TaskResult, canonical_json, digest_of, run_tasks
from .taskfile import CHECKS, TABLES, TaskFileError, TaskSpec, coeffs_to_poly, parse_taskfile, render_taskfile

__all__ = [
    "CHECKS", "CHECK_FUNCS", "CHECK_HELP", "Outcome", "Report", "RunOptions", "TABLES", "TaskFileError", "TaskResult",
    "TaskSpec", "build_table", "canonical_json", "coeffs_to_poly", "default_taskfile", "digest_of", "main",
    "parse_taskfile", "render_taskfile", "run_check", "run_tasks",
]
