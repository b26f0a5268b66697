"""Task files: JSON documents with a top-level ``tasks`` array."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from json.decoder import scanstring

from ..exactalg import ParseError, Poly, parse_poly, render

CHECKS = (
    "criterion",
    "schouten-cross",
    "cybe",
    "jacobi",
    "reality",
    "involution",
    "casimir",
    "warunek",
    "minkowski",
    "lorentz",
    "nondegeneracy",
    "lagrangian-section",
    "modification",
    "su-corollary",
    "tangency",
)

TABLES = (
    "slxx",
    "xxpp-mixed1",
    "xxpp-mixed",
    "sp-wr",
    "borel",
    "gl-general",
    "so-general",
    "gl-quadr",
    "so-quadr",
    "su-family",
    "so-reality",
)

FAMILY_CASES = ("sphere", "twisted", "degree4", "custom")

# field -> checks that accept it; "check", "name" and "expected" are always allowed
_ALLOWED = {
    "algebra": {"criterion", "schouten-cross", "cybe", "modification"},
    "n": {"criterion", "schouten-cross", "cybe", "jacobi", "reality", "involution", "casimir", "nondegeneracy",
          "lagrangian-section", "modification", "su-corollary", "tangency"},
    "table": {"jacobi", "casimir", "nondegeneracy", "lagrangian-section"},
    "case": {"jacobi", "casimir", "warunek", "nondegeneracy", "lagrangian-section", "tangency"},
    "sigma": {"jacobi", "casimir", "warunek", "nondegeneracy", "tangency"},
    "h": {"jacobi", "casimir", "warunek", "nondegeneracy", "tangency"},
    "lam": {"jacobi", "nondegeneracy", "lagrangian-section"},
    "a": {"jacobi", "casimir", "warunek", "nondegeneracy", "tangency"},
    "b": {"jacobi", "casimir", "warunek", "nondegeneracy", "tangency"},
    "point": {"criterion", "nondegeneracy"},
    "signature": {"minkowski"},
    "element": {"lorentz"},
    "branch": {"reality", "involution", "cybe", "jacobi"},
    "variant": {"cybe"},
    "span": {"criterion"},
    "det": {"nondegeneracy"},
}

_REQUIRED = {
    "criterion": ("algebra", "n"),
    "schouten-cross": ("algebra", "n"),
    "cybe": ("algebra", "n"),
    "jacobi": ("table",),
    "reality": ("n",),
    "involution": ("n",),
    "casimir": ("n",),
    "warunek": (),
    "minkowski": ("signature",),
    "lorentz": ("element",),
    "nondegeneracy": ("table",),
    "lagrangian-section": ("table",),
    "modification": ("algebra", "n"),
    "su-corollary": ("n",),
    "tangency": ("n",),
}

_ALGEBRAS = {
    "criterion": ("sl", "so", "sp", "su"),
    "schouten-cross": ("sl", "so", "sp", "su"),
    "cybe": ("gl", "so"),
    "modification": ("gl", "so"),
}

N_RANGE = (1, 8)


@dataclass(frozen=True)
class TaskSpec:
    check: str
    name: str | None = None
    algebra: str | None = None
    n: int | None = None
    table: str | None = None
    case: str | None = None
    sigma: str | None = None
    h: str | None = None
    lam: str | None = None
    a: tuple[str, ...] | None = None
    b: tuple[str, ...] | None = None
    point: tuple[str, ...] | None = None
    signature: tuple[int, int] | None = None
    element: str | None = None
    branch: int | None = None
    variant: str | None = None
    span: int | None = None
    det: str | None = None
    expected: str = "pass"

    def to_dict(self) -> dict:
        out = {}
        for k, v in asdict(self).items():
            if v is None or (k == "expected" and v == "pass"):
                continue
            out[k] = list(v) if isinstance(v, tuple) else v
        return out

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        bits = [self.check] + [f"{k}={v}" for k, v in self.to_dict().items() if k not in ("check", "expected")]
        return " ".join(bits)


class TaskFileError(ValueError):
    """Parse or validation error with a location in the document."""

    def __init__(self, message: str, line: int = 0, column: int = 0, path: str = ""):
        self.message, self.line, self.column, self.path = message, line, column, path
        where = f"line {line}, column {column}" if line else "document"
        super().__init__(f"{where}{' at ' + path if path else ''}: {message}")


# -- value positions -------------------------------------------------------------------

_WS = " \t\n\r"


def _skip(s: str, i: int) -> int:
    while i < len(s) and s[i] in _WS:
        i += 1
    return i


def _index(s: str, i: int, path: tuple, out: dict) -> int:
    """Record the offset of every value by path; return the end offset."""
    i = _skip(s, i)
    out[path] = i
    if s[i] == "{":
        i = _skip(s, i + 1)
        if s[i] == "}":
            return i + 1
        while True:
            key, i = scanstring(s, _skip(s, i) + 1)
            i = _skip(s, i) + 1  # colon
            i = _skip(s, _index(s, i, path + (key,), out))
            if s[i] == "}":
                return i + 1
            i += 1
    if s[i] == "[":
        i = _skip(s, i + 1)
        if s[i] == "]":
            return i + 1
        k = 0
        while True:
            i = _skip(s, _index(s, i, path + (k,), out))
            k += 1
            if s[i] == "]":
                return i + 1
            i += 1
    _, end = json.JSONDecoder().raw_decode(s, i)
    return end


def _line_col(s: str, offset: int) -> tuple[int, int]:
    line = s.count("\n", 0, offset) + 1
    col = offset - (s.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _path_str(path: tuple) -> str:
    out = ""
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else p)
    return out


class _Locator:
    def __init__(self, text: str):
        self.text = text
        self.pos: dict = {}
        _index(text, 0, (), self.pos)

    def error(self, message: str, path: tuple) -> TaskFileError:
        probe = path
        while probe not in self.pos and probe:
            probe = probe[:-1]
        line, col = _line_col(self.text, self.pos.get(probe, 0))
        return TaskFileError(message, line, col, _path_str(path))


# -- field validation ----------------------------------------------------------------


def _poly_text(v, where, loc: _Locator) -> str:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise loc.error("expected an integer or a polynomial string", where)
    try:
        p = parse_poly(str(v))
    except (ParseError, ValueError) as e:
        raise loc.error(f"malformed polynomial: {e}", where) from None
    if p.variables:
        raise loc.error(f"coordinates {list(p.variables)} are not allowed here", where)
    return render(p)


def _coeff_list(v, where, loc: _Locator) -> tuple[str, ...]:
    if not isinstance(v, list) or not v:
        raise loc.error("expected a non-empty coefficient list in ascending degree", where)
    return tuple(_poly_text(c, where + (k,), loc) for k, c in enumerate(v))


def _int(v, where, loc: _Locator, lo: int | None = None, hi: int | None = None) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise loc.error("expected an integer", where)
    if (lo is not None and v < lo) or (hi is not None and v > hi):
        raise loc.error(f"{v} is out of range [{lo}, {hi}]", where)
    return v


def _choice(v, options, where, loc: _Locator) -> str:
    if v not in options:
        raise loc.error(f"{v!r} is not one of {list(options)}", where)
    return v


def _task(obj, k: int, loc: _Locator) -> TaskSpec:
    base = ("tasks", k)
    if not isinstance(obj, dict):
        raise loc.error("each task must be an object", base)
    if "check" not in obj:
        raise loc.error("missing field 'check'", base)
    check = _choice(obj["check"], CHECKS, base + ("check",), loc)
    known = {f.name for f in fields(TaskSpec)}
    vals: dict = {"check": check}
    for key, v in obj.items():
        where = base + (key,)
        if key in ("check",):
            continue
        if key not in known:
            raise loc.error(f"unknown field {key!r}", where)
        if key not in ("name", "expected") and check not in _ALLOWED[key]:
            raise loc.error(f"field {key!r} does not apply to check {check!r}", where)
        if key == "name":
            if not isinstance(v, str):
                raise loc.error("expected a string", where)
            vals[key] = v
        elif key == "expected":
            vals[key] = _choice(v, ("pass", "fail"), where, loc)
        elif key == "algebra":
            vals[key] = _choice(v, _ALGEBRAS[check], where, loc)
        elif key == "n":
            vals[key] = _int(v, where, loc, *N_RANGE)
        elif key == "table":
            vals[key] = _choice(v, TABLES, where, loc)
        elif key == "case":
            vals[key] = _choice(v, FAMILY_CASES, where, loc)
        elif key in ("sigma", "h", "lam", "det"):
            vals[key] = _poly_text(v, where, loc)
        elif key in ("a", "b", "point"):
            vals[key] = _coeff_list(v, where, loc)
        elif key == "signature":
            if not isinstance(v, list) or len(v) != 2:
                raise loc.error("expected [p, q]", where)
            vals[key] = (_int(v[0], where + (0,), loc, 0, 8), _int(v[1], where + (1,), loc, 0, 8))
        elif key == "element":
            vals[key] = _choice(v, ("H", "JH"), where, loc)
        elif key == "branch":
            vals[key] = _choice(v, (-1, 1), where, loc)
        elif key == "variant":
            vals[key] = _choice(v, ("w", "r"), where, loc)
        elif key == "span":
            vals[key] = _int(v, where, loc, 0)
    for req in _REQUIRED[check]:
        if req not in vals:
            raise loc.error(f"check {check!r} needs field {req!r}", base)
    if check == "criterion" and vals["algebra"] == "sp":
        pass
    elif "algebra" in vals and vals.get("n", 2) < 2:
        raise loc.error("n must be at least 2 for this algebra", base + ("n",))
    if check == "casimir" and vals.get("table", "su-family") != "su-family":
        raise loc.error("casimir runs on su-family tables", base + ("table",))
    needs_n = vals.get("table") not in (None, "borel")
    if check in ("jacobi", "nondegeneracy", "lagrangian-section") and needs_n and "n" not in vals:
        raise loc.error(f"table {vals['table']!r} needs field 'n'", base)
    if vals.get("case") == "custom" and "a" not in vals:
        raise loc.error("custom case needs 'a' and 'b'", base)
    return TaskSpec(**vals)


def parse_taskfile(data: bytes | str) -> list[TaskSpec]:
    """Validate a task file; raises TaskFileError with line, column and field path."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise TaskFileError(f"not UTF-8: {e.reason}") from None
    else:
        text = data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise TaskFileError(e.msg, e.lineno, e.colno) from None
    loc = _Locator(text)
    if not isinstance(doc, dict) or "tasks" not in doc:
        raise loc.error("expected an object with a 'tasks' array", ())
    if not isinstance(doc["tasks"], list):
        raise loc.error("'tasks' must be an array", ("tasks",))
    return [_task(obj, k, loc) for k, obj in enumerate(doc["tasks"])]


def render_taskfile(specs: list[TaskSpec]) -> str:
    return json.dumps({"tasks": [s.to_dict() for s in specs]}, indent=2, ensure_ascii=False) + "\n"


def coeffs_to_poly(coeffs: tuple[str, ...], var: str = "t") -> Poly:
    t = Poly.gen(var)
    out = Poly.zero((var,))
    for k, c in enumerate(coeffs):
        out = out + parse_poly(c) * t**k
    return out.with_gens((var,))
