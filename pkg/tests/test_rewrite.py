from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import level_strategy
from levelcanon import IMax, Max, Succ, Var, ZERO, normalize, subst_repr
from levelcanon.harness import GenConfig, gen_level
from levelcanon.rewrite import (
    DEFINED_SYMBOLS, SIGNATURE, DecodeError, ReductionReport, RewriteRule,
    app, builtin_ruleset, check_rule_sorts, check_soundness, decode_repr,
    default_rules, encode_level, encode_nat, encode_repr, infer_sort,
    literal_rules, match, pvar, reduce, rule_dump, sample_confluence,
    subst_template, term_to_str,
)

x, y, a, b = Var(0), Var(1), Var(2), Var(3)
RULES = default_rules()
LITERAL = literal_rules()


def test_match_examples():
    assert match(app("addN", app("nilN"), pvar("x")),
                 app("addN", app("nilN"), app("zeroN"))) == {"x": app("zeroN")}
    assert match(app("succN", pvar("x")), app("zeroN")) is None
    nonlinear = app("maxN", pvar("x"), pvar("x"))
    assert match(nonlinear, app("maxN", app("zeroN"), app("succN", app("zeroN")))) is None
    assert match(nonlinear, app("maxN", app("zeroN"), app("zeroN"))) == {"x": app("zeroN")}


def test_rule_validation():
    with pytest.raises(ValueError):
        RewriteRule(pvar("x"), app("zeroN"))
    with pytest.raises(ValueError):
        RewriteRule(app("not", pvar("x")), pvar("y"))


def test_builtin_ruleset_contents():
    assert builtin_ruleset() == RULES
    assert builtin_ruleset(paper_literal=True) == LITERAL
    assert RewriteRule(app("zeroL"), app("maxS", app("nilSL"))) in RULES
    for ite in ("iteL", "iteNS", "iteSLS"):
        assert RewriteRule(app(ite, app("true"), pvar("u"), pvar("v")), pvar("u")) in RULES
        assert RewriteRule(app(ite, app("false"), pvar("u"), pvar("v")), pvar("v")) in RULES
    assert len(RULES) == 85
    assert len(RULES) > 40
    assert len(LITERAL) == 83


def test_builtin_rules_are_first_order_left_linear_and_sorted():
    for rules in (RULES, LITERAL):
        for rule in rules:
            assert rule.is_left_linear(), rule
            check_rule_sorts(rule, SIGNATURE)
            assert rule.lhs[0] in DEFINED_SYMBOLS


def test_signature_covers_required_symbols():
    required = {
        "true", "false", "and", "or", "not",
        "zeroN", "succN", "plus", "maxN", "leqN", "eqN", "ltN",
        "nilN", "consN", "addN", "unionN", "memN", "subsetN", "eqSetN",
        "ordSetN", "ltSetN", "delN",
        "zeroL", "succL", "maxL", "ruleL", "varL",
        "A", "B", "ordSL", "leqSL", "succSL", "maxHelper", "ruleHelper",
        "ruleSL", "evalS", "evalL", "maxS",
    }
    assert required <= set(SIGNATURE)


def test_encode_shapes():
    assert encode_repr(normalize(ZERO)) == app("maxS", app("nilSL"))
    one_var = encode_repr(normalize(x))
    assert one_var == app(
        "maxS",
        app("consSL",
            app("A", app("consN", app("zeroN"), app("nilN")), app("zeroN"), app("zeroN")),
            app("nilSL")))
    assert encode_level(Max(x, y)) == app("maxL", app("varL", encode_nat(0)),
                                          app("varL", encode_nat(1)))
    assert encode_level(ZERO) == app("zeroL")
    assert encode_level(Succ(ZERO)) == app("succL", app("zeroL"))


def test_encode_repr_injective_on_sample():
    cfg = GenConfig(seed=4, max_size=12)
    seen = {}
    for i in range(300):
        r = normalize(gen_level(cfg, i))
        term = encode_repr(r)
        if term in seen:
            assert seen[term] == r
        seen[term] = r
    assert len(seen) == len({encode_repr(r) for r in seen.values()})


def test_decode_roundtrip_and_shape_errors():
    cfg = GenConfig(seed=9, max_size=14)
    for i in range(300):
        r = normalize(gen_level(cfg, i))
        assert decode_repr(encode_repr(r)) == r
    with pytest.raises(DecodeError):
        decode_repr(app("succL", app("zeroL")))
    with pytest.raises(DecodeError):
        # comparable atoms: not the image of any valid representation
        bad = app("maxS", app("consSL", encode_sub_a(0, 0), app(
            "consSL", encode_sub_a(0, 1), app("nilSL"))))
        decode_repr(bad)


def encode_sub_a(vid: int, shift: int):
    return app("A", app("consN", encode_nat(vid), app("nilN")),
               encode_nat(vid), encode_nat(shift))


def test_reduce_basics():
    report = reduce(app("zeroL"), RULES)
    assert report == ReductionReport(app("maxS", app("nilSL")), 1, False)
    var_report = reduce(encode_level(x), RULES)
    assert var_report.result == encode_repr(normalize(x))
    again = reduce(var_report.result, RULES)
    assert again.steps == 0 and again.result == var_report.result
    tiny = reduce(encode_level(Max(x, y)), RULES, budget=3)
    assert tiny.budget_exhausted and tiny.steps == 3


def test_reduce_rejects_bad_arguments():
    with pytest.raises(ValueError):
        reduce(app("zeroL"), RULES, budget=0)
    with pytest.raises(ValueError):
        reduce(app("zeroL"), RULES, strategy="weird")
    with pytest.raises(ValueError):
        reduce(pvar("u"), RULES)


def test_check_soundness_examples():
    assert check_soundness(IMax(x, x))
    assert check_soundness(Max(IMax(x, y), IMax(y, x)))
    assert check_soundness(ZERO)
    assert check_soundness(Max(Max(IMax(x, a), IMax(x, b)), x))


@given(level_strategy(max_leaves=6))
@settings(max_examples=60, deadline=None)
def test_rewrite_path_matches_normalizer(t):
    assert check_soundness(t)


def test_strategies_agree():
    rng = random.Random(0)
    cfg = GenConfig(seed=21, max_size=10)
    for i in range(15):
        t = gen_level(cfg, i)
        term = encode_level(t)
        results = {reduce(term, RULES, strategy, seed=rng.randrange(100)).result
                   for strategy in ("innermost", "outermost", "random")}
        assert len(results) == 1, t


def test_sample_confluence():
    assert sample_confluence(Max(IMax(x, y), Succ(x)), strategies=5, seed=3)
    assert sample_confluence(ZERO, strategies=2)
    with pytest.raises(ValueError):
        sample_confluence(ZERO, strategies=1)


def test_confluence_runs_record_step_counts():
    from levelcanon.rewrite import confluence_runs
    runs = confluence_runs(Max(Succ(x), IMax(y, x)), strategies=5, seed=1, budget=10**6)
    assert len(runs) == 5
    assert all(run.steps > 0 and not run.budget_exhausted for run in runs)
    assert len({run.result for run in runs}) == 1


def test_intermediate_terms_stay_well_sorted():
    # independent stepping loop over the public matcher, checking sorts at
    # every intermediate term, then comparing against the engine's answer
    def step(term):
        for rule in RULES:
            env = match(rule.lhs, term)
            if env is not None:
                return subst_template(rule.rhs, env)
        if len(term) == 1:
            return None
        for i, child in enumerate(term[1:]):
            stepped = step(child)
            if stepped is not None:
                return term[: i + 1] + (stepped,) + term[i + 2:]
        return None

    for t in (IMax(x, Succ(y)), Max(Succ(x), IMax(y, x)), Succ(IMax(x, ZERO))):
        term = encode_level(t)
        for _ in range(400):
            assert infer_sort(term, SIGNATURE) == "level"
            nxt = step(term)
            if nxt is None:
                break
            term = nxt
        else:
            pytest.fail("reduction did not finish in 400 steps")
        assert term == reduce(encode_level(t), RULES).result


def test_literal_variable_rule_argument_order():
    lit = reduce(encode_level(y), LITERAL).result
    # set {1}, then the displayed (0, id) argument order
    assert lit == app("maxS", app("consSL", app(
        "A", app("consN", encode_nat(1), app("nilN")), encode_nat(0), encode_nat(1)),
        app("nilSL")))
    assert reduce(encode_level(y), RULES).result == encode_repr(normalize(y))


def test_literal_successor_loses_the_constant_floor():
    lit = reduce(encode_level(Succ(x)), LITERAL).result
    assert lit != encode_repr(normalize(Succ(x)))
    assert decode_repr(lit).atoms == normalize(Succ(x)).atoms[:1]


def test_literal_insertion_keeps_a_dominated_atom():
    t = Max(Max(IMax(x, a), IMax(x, b)), x)
    lit = reduce(encode_level(t), LITERAL).result
    assert lit != encode_repr(normalize(t))
    with pytest.raises(DecodeError):
        decode_repr(lit)  # the literal result is not even an antichain


def test_literal_substitution_drops_the_guard_set():
    r = normalize(IMax(y, x))  # contains A({x,y}, y, 0)
    term = app("evalL", encode_repr(r), encode_nat(1), encode_nat(3))  # y := 3
    default_result = reduce(term, RULES).result
    literal_result = reduce(term, LITERAL).result
    assert default_result == encode_repr(subst_repr(r, 1, 3))
    assert literal_result != default_result


def test_rule_dump_format():
    dump = rule_dump(RULES)
    lines = dump.splitlines()
    assert len(lines) == len(RULES)
    assert all(" --> " in line for line in lines)
    assert "zeroL --> maxS nilSL" in lines


def test_term_to_str():
    assert term_to_str(app("zeroL")) == "zeroL"
    assert term_to_str(app("maxL", app("varL", encode_nat(0)), app("zeroL"))) == \
        "maxL (varL zeroN) zeroL"
