"""``verify`` command line entry point.

Exit codes: 0 every task matched its expectation, 1 some task did not,
2 usage or task-file error.
"""

from __future__ import annotations

import argparse
import sys
from importlib.resources import files
from pathlib import Path

from .checks import CHECK_HELP
from .runner import RunOptions, digest_of, run_tasks
from .taskfile import TaskFileError, parse_taskfile

DEFAULT = "default"


def default_taskfile() -> bytes:
    return files(__package__).joinpath("default_tasks.json").read_bytes()


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Run exact verification tasks from a JSON task file.")
    p.add_argument("taskfile", nargs="?", help=f"task file path, '-' for stdin, or '{DEFAULT}' for the bundled suite")
    p.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (report order is unaffected)")
    p.add_argument("--list-checks", action="store_true", help="list check names and exit")
    p.add_argument("--max-n", type=int, metavar="K", help="skip tasks whose n exceeds K")
    p.add_argument("--max-residuals", type=int, default=5, metavar="K", help="residuals rendered per task")
    p.add_argument("--quiet", action="store_true", help="suppress the per-task summary on stderr")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    if args.list_checks:
        for name, text in CHECK_HELP.items():
            print(f"{name:20s} {text}")
        return 0
    if args.taskfile is None:
        parser.print_usage(sys.stderr)
        print("verify: a task file is required", file=sys.stderr)
        return 2
    if args.jobs < 1 or args.max_residuals < 0:
        print("verify: --jobs must be positive and --max-residuals non-negative", file=sys.stderr)
        return 2
    try:
        if args.taskfile == DEFAULT:
            data = default_taskfile()
        elif args.taskfile == "-":
            data = sys.stdin.buffer.read()
        else:
            data = Path(args.taskfile).read_bytes()
    except OSError as e:
        print(f"verify: {e}", file=sys.stderr)
        return 2
    try:
        specs = parse_taskfile(data)
    except TaskFileError as e:
        print(f"verify: {e}", file=sys.stderr)
        return 2
    report = run_tasks(specs, RunOptions(args.jobs, args.max_residuals, args.max_n), digest_of(data))
    text = report.render()
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if not args.quiet:
        for r in report.results:
            extra = f" ({r.error})" if r.error else (f" [{'; '.join(r.unmet)}]" if r.unmet else "")
            print(f"{r.status.upper():7s} {r.label}: defect {r.defect}, expected {r.expected}{extra}", file=sys.stderr)
        s = report.body()["summary"]
        print(f"{s['pass']} passed, {s['fail']} failed, {s['error']} errors, {s['skipped']} skipped", file=sys.stderr)
    return 0 if report.all_matched else 1


if __name__ == "__main__":
    raise SystemExit(main())
