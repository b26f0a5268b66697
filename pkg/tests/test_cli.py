import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rphase.cli import (
    CHECKS,
    RunOptions,
    TaskFileError,
    TaskSpec,
    default_taskfile,
    main,
    parse_taskfile,
    render_taskfile,
    run_tasks,
)


def _one(obj) -> TaskSpec:
    (spec,) = parse_taskfile(json.dumps({"tasks": [obj]}).encode())
    return spec


def test_spec_examples():
    assert _one({"check": "criterion", "algebra": "so", "n": 4}) == TaskSpec("criterion", algebra="so", n=4)
    w = _one({"check": "warunek", "a": [0, 1], "b": [5]})
    assert w.a == ("0", "1") and w.b == ("5",) and w.expected == "pass"
    j = _one({"check": "jacobi", "table": "su-family", "case": "sphere", "sigma": -1, "n": 3})
    assert j.sigma == "-1"


@pytest.mark.parametrize(
    "text,needle,path",
    [
        ('{"tasks": [\n {"check": "nope"}]}', '"nope"', "tasks[0].check"),
        ('{"tasks": [{"check": "criterion", "algebra": "so", "n": 0}]}', "0}", "tasks[0].n"),
        ('{"tasks": [{"check": "warunek", "a": [0, "1/"]}]}', '"1/"', "tasks[0].a[1]"),
        ('{"tasks": [{"check": "warunek", "a": [0, "x1"]}]}', '"x1"', "tasks[0].a[1]"),
        ('{"tasks": [{"check": "lorentz", "element": "H", "n": 2}]}', "2}", "tasks[0].n"),
    ],
)
def test_parse_errors_have_positions(text, needle, path):
    with pytest.raises(TaskFileError) as e:
        parse_taskfile(text.encode())
    off = text.index(needle)
    line = text.count("\n", 0, off) + 1
    col = off - (text.rfind("\n", 0, off) + 1) + 1
    assert (e.value.line, e.value.column, e.value.path) == (line, col, path)


def test_malformed_json_position():
    with pytest.raises(TaskFileError) as e:
        parse_taskfile(b'{"tasks": [')
    assert (e.value.line, e.value.column) == (1, 12)


def test_missing_required_field():
    with pytest.raises(TaskFileError, match="needs field 'n'"):
        parse_taskfile(b'{"tasks": [{"check": "reality"}]}')
    with pytest.raises(TaskFileError):
        parse_taskfile(b'{"jobs": []}')


specs = st.one_of(
    st.builds(TaskSpec, st.just("criterion"), algebra=st.sampled_from(["sl", "so", "su"]), n=st.integers(2, 5),
              expected=st.sampled_from(["pass", "fail"]), span=st.none() | st.integers(0, 4)),
    st.builds(TaskSpec, st.just("warunek"), a=st.lists(st.integers(-9, 9).map(str), min_size=1, max_size=4).map(tuple),
              b=st.none() | st.lists(st.integers(-9, 9).map(str), min_size=1, max_size=3).map(tuple)),
    st.builds(TaskSpec, st.just("jacobi"), table=st.just("su-family"), n=st.integers(2, 4),
              case=st.sampled_from(["sphere", "twisted", "degree4"]), sigma=st.sampled_from(["1", "-1", "sigma"]),
              name=st.none() | st.text(max_size=8)),
    st.builds(TaskSpec, st.just("minkowski"), signature=st.tuples(st.integers(0, 4), st.integers(0, 4))),
)


@given(st.lists(specs, max_size=6))
@settings(max_examples=60, deadline=None)
def test_render_parse_roundtrip(items):
    assert parse_taskfile(render_taskfile(items).encode()) == items


def test_expected_fail_semantics():
    report = run_tasks(parse_taskfile(json.dumps({"tasks": [
        {"check": "criterion", "algebra": "su", "n": 3, "expected": "fail"},
        {"check": "criterion", "algebra": "so", "n": 4, "expected": "fail"},
        {"check": "lorentz", "element": "JH", "expected": "fail"},
    ]}).encode()))
    assert [r.status for r in report.results] == ["pass", "fail", "pass"]
    assert "2*i" in report.results[0].info["witness"]


def test_errors_do_not_abort_and_max_n_skips():
    specs = parse_taskfile(json.dumps({"tasks": [
        {"check": "jacobi", "table": "su-family", "case": "degree4", "h": 0, "n": 2},
        {"check": "jacobi", "table": "slxx", "n": 5},
        {"check": "jacobi", "table": "slxx", "n": 2},
    ]}).encode())
    report = run_tasks(specs, RunOptions(max_n=4))
    assert [r.status for r in report.results] == ["error", "skipped", "pass"]
    assert "InvalidFamily" in report.results[0].error


def test_order_preserved_with_jobs():
    specs = parse_taskfile(json.dumps({"tasks": [{"check": "jacobi", "table": "slxx", "n": n} for n in (4, 2, 3)]}).encode())
    a = run_tasks(specs, RunOptions(jobs=3))
    assert [r.index for r in a.results] == [0, 1, 2]
    assert a.render_body() == run_tasks(specs).render_body()


def test_main_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text('{"tasks": [{"check": "criterion", "algebra": "so", "n": 4}]}')
    bad = tmp_path / "bad.json"
    bad.write_text('{"tasks": [{"check": "criterion", "algebra": "so", "n": 4, "expected": "fail"}]}')
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    out = tmp_path / "report.json"
    assert main([str(good), "--out", str(out), "--quiet"]) == 0
    assert json.loads(out.read_text())["report"]["summary"]["pass"] == 1
    assert main([str(bad), "--quiet", "--out", str(out)]) == 1
    assert main([str(broken)]) == 2
    assert main([str(tmp_path / "missing.json")]) == 2
    assert main(["--bogus"]) == 2
    assert main(["--list-checks"]) == 0
    listed = capsys.readouterr().out
    assert all(c in listed for c in CHECKS)


def test_bundled_taskfile_parses():
    specs = parse_taskfile(default_taskfile())
    assert len(specs) > 50
    assert {s.name.split()[0] for s in specs} == {f"C{k}" for k in range(1, 10)}
