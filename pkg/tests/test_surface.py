from __future__ import annotations

import json

import pytest

from levelcanon import IMax, Max, Succ, Var, ZERO, normalize, repr_zero, repr_var
from levelcanon.cli import run_cli
from levelcanon.export import export_framework
from levelcanon.harness import GenConfig, gen_level, harness_names
from levelcanon.parser import NameTable, ParseError, parse_level
from levelcanon.printer import print_level, print_repr, print_repr_json


def _names(*vars_in_order: str) -> NameTable:
    table = NameTable()
    for name in vars_in_order:
        table.intern(name)
    return table


def test_parse_examples():
    names = NameTable()
    t = parse_level("max(imax(x, s(y)), 0)", names)
    assert t == Max(IMax(Var(0), Succ(Var(1))), ZERO)
    assert parse_level("3", names) == Succ(Succ(Succ(ZERO)))
    assert parse_level("  max ( x ,\n y )", NameTable()) == Max(Var(0), Var(1))


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_level("imax(x", NameTable())
    assert err.value.col == 7 and err.value.line == 1
    assert err.value.expected == frozenset({","})
    with pytest.raises(ParseError) as err:
        parse_level("imax(x,", NameTable())
    assert err.value.col == 8
    with pytest.raises(ParseError) as err:
        parse_level("max(x | y)", NameTable())
    assert err.value.col == 7


def test_keywords_are_not_identifiers():
    with pytest.raises(ParseError):
        parse_level("s", NameTable())
    names = NameTable()
    assert parse_level("smax", names) == Var(0)
    assert names.name_of(0) == "smax"


def test_name_table_is_dense_and_bijective():
    names = NameTable()
    parse_level("max(b, max(a, b))", names)
    assert names.id_of("b") == 0 and names.id_of("a") == 1
    assert names.name_of(0) == "b" and names.name_of(1) == "a"
    assert len(names) == 2


def test_print_level_examples():
    names = _names("x")
    assert print_level(ZERO, names) == "0"
    assert print_level(Succ(Var(0)), names) == "s(x)"
    assert print_level(Max(Var(0), IMax(Var(0), ZERO)), names) == "max(x, imax(x, 0))"


def test_print_parse_roundtrip():
    cfg = GenConfig(seed=100, max_size=30)
    names = harness_names(cfg.num_vars)
    for i in range(1000):
        t = gen_level(cfg, i)
        assert parse_level(print_level(t, names), names) == t


def test_print_repr_examples():
    names = _names("x")
    assert print_repr(repr_zero(), names) == "max{}"
    assert print_repr(repr_var(0), names) == "max{A{x}(x)+0}"
    names2 = _names("x", "y")
    r = normalize(Max(Succ(Var(0)), Var(1)))
    assert print_repr(r, names2) == "max{A{x}(x)+1, A{y}(y)+0, B{}+1}"


def test_print_repr_json():
    names = _names("x")
    assert print_repr_json(repr_zero(), names) == '{"atoms":[]}'
    assert print_repr_json(normalize(Succ(ZERO)), names) == \
        '{"atoms":[{"kind":"B","set":[],"shift":1}]}'
    cfg = GenConfig(seed=2, max_size=16)
    harness = harness_names(cfg.num_vars)
    for i in range(200):
        payload = json.loads(print_repr_json(normalize(gen_level(cfg, i)), harness))
        assert isinstance(payload["atoms"], list)


def test_print_repr_injective_on_sample():
    cfg = GenConfig(seed=77, max_size=16)
    names = harness_names(cfg.num_vars)
    by_text = {}
    for i in range(300):
        r = normalize(gen_level(cfg, i))
        text = print_repr(r, names)
        assert by_text.setdefault(text, r) == r
    assert len(by_text) == len(set(by_text.values()))


def test_export_framework():
    out = export_framework()
    assert "zeroL --> maxS nilSL" in out.splitlines()
    assert out == export_framework()  # deterministic bytes
    names = NameTable()
    query = export_framework(parse_level("x", names))
    assert query.rstrip("\n").endswith("varL zeroN")
    assert "leqSL : sublevel -> sublevel -> bool" in query.splitlines()


def test_cli_eq_and_leq(capsys):
    assert run_cli(["eq", "imax(x,x)", "x"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert run_cli(["leq", "s(x)", "x"]) == 1
    assert capsys.readouterr().out == "false\n"


def test_cli_normalize_agrees_on_equivalent_inputs(capsys):
    assert run_cli(["normalize", "max(imax(x,y),imax(y,x))"]) == 0
    first = capsys.readouterr().out
    assert run_cli(["normalize", "max(x,y)"]) == 0
    assert capsys.readouterr().out == first


def test_cli_normalize_json(capsys):
    assert run_cli(["normalize", "s(0)", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "atoms": [{"kind": "B", "set": [], "shift": 1}]}


def test_cli_subst_and_eval(capsys):
    assert run_cli(["subst", "max(imax(x,y), z)", "x=0", "z=2"]) == 0
    assert capsys.readouterr().out == "max{A{y}(y)+0, B{}+2}\n"
    assert run_cli(["eval", "imax(s(y), s(x))", "--val", "x=0,y=1"]) == 0
    assert capsys.readouterr().out == "2\n"
    assert run_cli(["eval", "x", "--val", "y=1"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_rewrite(capsys):
    assert run_cli(["rewrite", "imax(x,x)"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "maxS (consSL (A (consN zeroN nilN) zeroN zeroN) nilSL)"
    assert out[1].startswith("steps: ")
    assert run_cli(["rewrite", "0", "--strategy", "outermost", "--trace"]) == 0
    trace_out = capsys.readouterr().out.splitlines()
    assert trace_out[0].startswith("0\troot\tzeroL --> ")


def test_cli_rewrite_literal_flag_diverges(capsys):
    assert run_cli(["rewrite", "s(x)"]) == 0
    default = capsys.readouterr().out
    assert run_cli(["rewrite", "s(x)", "--paper-literal-rules"]) == 0
    literal = capsys.readouterr().out
    assert default != literal


def test_cli_parse_error_exit_code(capsys):
    assert run_cli(["normalize", "imax(x"]) == 2
    err = capsys.readouterr().err
    assert "column 7" in err
    assert run_cli(["bogus-subcommand"]) == 2
    capsys.readouterr()


def test_cli_export_and_fuzz(capsys):
    assert run_cli(["export"]) == 0
    assert "# rules" in capsys.readouterr().out
    assert run_cli(["fuzz", "--cases", "10", "--size", "10", "--seed", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["cases_run"] == 10 and report["failures"] == []


def test_cli_verdicts_agree_with_the_oracle(capsys):
    from levelcanon import find_counterexample_leq, normalize
    from levelcanon.printer import print_level

    cfg = GenConfig(seed=55, max_size=10)
    names = harness_names(cfg.num_vars)
    for i in range(30):
        t1, t2 = gen_level(cfg, 2 * i), gen_level(cfg, 2 * i + 1)
        shift = max((u.shift for t in (t1, t2) for u in normalize(t).atoms), default=0)
        code = run_cli(["leq", print_level(t1, names), print_level(t2, names)])
        out = capsys.readouterr().out
        witness = find_counterexample_leq(t1, t2, shift + 3)
        assert (code == 0) == (witness is None)
        assert out == ("true\n" if witness is None else "false\n")
