"""Run task specs and assemble a deterministic report."""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib.metadata import PackageNotFoundError, version

from .checks import run_check
from .taskfile import TaskSpec


def tool_version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0+unknown"


@dataclass(frozen=True)
class TaskResult:
    index: int
    label: str
    check: str
    expected: str
    status: str  # pass | fail | error | skipped
    defect: str  # zero | nonzero | n/a
    residual_count: int
    residuals: list[tuple[str, str]]
    provenance: str
    info: dict
    unmet: tuple[str, ...]
    error: str | None
    elapsed: float = field(compare=False)

    def body(self) -> dict:
        out = {
            "index": self.index,
            "task": self.label,
            "check": self.check,
            "expected": self.expected,
            "status": self.status,
            "defect": self.defect,
            "residual_count": self.residual_count,
            "residuals": [{"at": a, "value": v} for a, v in self.residuals],
            "provenance": self.provenance,
        }
        if self.info:
            out["info"] = self.info
        if self.unmet:
            out["unmet"] = list(self.unmet)
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass(frozen=True)
class RunOptions:
    jobs: int = 1
    max_residuals: int = 5
    max_n: int | None = None


@dataclass(frozen=True)
class Report:
    results: list[TaskResult]
    metadata: dict

    @property
    def all_matched(self) -> bool:
        return all(r.status in ("pass", "skipped") for r in self.results)

    def body(self) -> dict:
        counts = {s: sum(r.status == s for r in self.results) for s in ("pass", "fail", "error", "skipped")}
        return {"tasks": [r.body() for r in self.results], "summary": counts}

    def render_body(self) -> str:
        return canonical_json(self.body())

    def render(self) -> str:
        return json.dumps({"report": self.body(), "metadata": self.metadata}, indent=2, sort_keys=True,
                          ensure_ascii=False) + "\n"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def _run_one(args: tuple[int, TaskSpec, RunOptions]) -> TaskResult:
    index, spec, opts = args
    t0 = time.perf_counter()
    if opts.max_n is not None and spec.n is not None and spec.n > opts.max_n:
        return TaskResult(index, spec.label, spec.check, spec.expected, "skipped", "n/a", 0, [], "", {}, (),
                          f"n = {spec.n} exceeds --max-n {opts.max_n}", 0.0)
    try:
        out = run_check(spec)
    except Exception as e:  # reported per task, the run continues
        return TaskResult(index, spec.label, spec.check, spec.expected, "error", "n/a", 0, [], "", {}, (),
                          f"{type(e).__name__}: {e}", time.perf_counter() - t0)
    zero = not out.residuals
    matched = zero == (spec.expected == "pass") and not out.unmet
    return TaskResult(
        index,
        spec.label,
        spec.check,
        spec.expected,
        "pass" if matched else "fail",
        "zero" if zero else "nonzero",
        len(out.residuals),
        out.residuals[: opts.max_residuals],
        out.provenance,
        out.info,
        out.unmet,
        None,
        time.perf_counter() - t0,
    )


def run_tasks(specs: list[TaskSpec], options: RunOptions | None = None, digest: str = "") -> Report:
    """Execute every spec; results keep task-file order for any job count."""
    opts = options or RunOptions()
    jobs = [(k, s, opts) for k, s in enumerate(specs)]
    t0 = time.perf_counter()
    if opts.jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as ex:
            results = list(ex.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    meta = {
        "tool_version": tool_version(),
        "taskfile_sha256": digest,
        "jobs": opts.jobs,
        "started": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        "total_seconds": round(time.perf_counter() - t0, 4),
        "timings": [{"index": r.index, "seconds": round(r.elapsed, 4)} for r in results],
    }
    return Report(results, meta)


def digest_of(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()
