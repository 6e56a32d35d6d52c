"""Reduction engine: strategies, budgets and step accounting.

Three redex-selection strategies are supported:

  * ``innermost``  — leftmost-innermost (call-by-value), the default;
  * ``outermost``  — leftmost-outermost;
  * ``random``     — a seeded uniform choice among all redex positions.

The rule set is constructor-based and orthogonal, so all strategies reach the
same normal form; the innermost strategy runs on a fast recursive evaluator,
the others on a generic position-scanning loop.  Step counts are exact rule
applications under tree semantics (no sharing).
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass
from typing import Callable, Optional

from .terms import RTerm, RewriteRule, is_ground, subst_template, PVAR_HEAD

Strategy = str
STRATEGIES = ("innermost", "outermost", "random")


@dataclass(frozen=True)
class ReductionReport:
    result: RTerm
    steps: int
    budget_exhausted: bool


class _BudgetExceeded(Exception):
    pass


_INDEX_CACHE: dict[int, tuple[tuple[RewriteRule, ...], dict]] = {}


def _index_for(rules: tuple[RewriteRule, ...]) -> dict[str, list[RewriteRule]]:
    cached = _INDEX_CACHE.get(id(rules))
    if cached is not None and cached[0] is rules:
        return cached[1]
    index: dict[str, list[RewriteRule]] = {}
    for rule in rules:
        index.setdefault(rule.lhs[0], []).append(rule)
    _INDEX_CACHE[id(rules)] = (rules, index)
    return index


def _match_args(pats: tuple, kids: tuple, env: dict) -> bool:
    for pat, kid in zip(pats, kids):
        stack = [(pat, kid)]
        while stack:
            p, t = stack.pop()
            if p[0] == PVAR_HEAD:
                name = p[1]
                bound = env.get(name)
                if bound is None:
                    env[name] = t
                elif bound != t:
                    return False
            elif p[0] != t[0] or len(p) != len(t):
                return False
            else:
                stack.extend(zip(p[1:], t[1:]))
    return True


def reduce(
    term: RTerm,
    rules: tuple[RewriteRule, ...],
    strategy: Strategy = "innermost",
    budget: int = 1_000_000,
    seed: int = 0,
    trace: Optional[Callable[[int, tuple[int, ...], RewriteRule], None]] = None,
) -> ReductionReport:
    """Reduce a ground term to normal form within a step budget.

    Budget exhaustion is reported, not raised; the result field is only
    meaningful when ``budget_exhausted`` is false, and is then a normal form.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not is_ground(term):
        raise ValueError("reduce requires a ground term")
    if strategy == "innermost" and trace is None:
        return _reduce_innermost(term, rules, budget)
    return _reduce_positional(term, rules, strategy, budget, seed, trace)


def _reduce_innermost(term: RTerm, rules: tuple[RewriteRule, ...], budget: int) -> ReductionReport:
    index = _index_for(rules)
    get_rules = index.get
    steps = 0
    # rewrite chains nest one Python frame per step at a given position;
    # only ever raise the limit so parallel reductions cannot interfere
    if sys.getrecursionlimit() < 100_000:
        sys.setrecursionlimit(100_000)

    def rewrite_head(head: str, kids: tuple) -> RTerm:
        nonlocal steps
        for rule in get_rules(head, ()):
            lhs = rule.lhs
            env: dict = {}
            if len(lhs) == 1 or _match_args(lhs[1:], kids, env):
                if steps >= budget:
                    raise _BudgetExceeded
                steps += 1
                return eval_template(rule.rhs, env)
        return (head, *kids)

    def eval_template(tmpl: RTerm, env: dict) -> RTerm:
        # bound subterms are already normal; only fresh structure is evaluated
        if tmpl[0] == PVAR_HEAD:
            return env[tmpl[1]]
        if len(tmpl) == 1:
            return rewrite_head(tmpl[0], ())
        return rewrite_head(tmpl[0], tuple(eval_template(c, env) for c in tmpl[1:]))

    def nf(t: RTerm) -> RTerm:
        if len(t) == 1:
            return rewrite_head(t[0], ())
        return rewrite_head(t[0], tuple(nf(c) for c in t[1:]))

    try:
        result = nf(term)
        return ReductionReport(result, steps, False)
    except _BudgetExceeded:
        return ReductionReport(term, steps, True)


def _match_at(index, node: RTerm) -> Optional[tuple[dict, RewriteRule]]:
    for rule in index.get(node[0], ()):
        env: dict = {}
        if len(rule.lhs) == 1 or _match_args(rule.lhs[1:], node[1:], env):
            return env, rule
    return None


class _RedexScanner:
    """Position scans with a redex-free cache.

    Rewriting happens in a context, so a subterm that contains no redex can
    never acquire one; such subterms are remembered by object identity (the
    cache doubles as a keepalive so ids are never recycled while cached) and
    skipped by later scans.
    """

    def __init__(self, index):
        self.index = index
        self.clean: dict[int, RTerm] = {}
        self.redexes: dict[int, list[tuple[int, ...]]] = {}

    def first_outermost(self, term: RTerm, path: tuple[int, ...] = ()) -> Optional[tuple[int, ...]]:
        if id(term) in self.clean:
            return None
        if _match_at(self.index, term) is not None:
            return path
        for i, child in enumerate(term[1:]):
            found = self.first_outermost(child, path + (i,))
            if found is not None:
                return found
        self.clean[id(term)] = term
        return None

    def first_innermost(self, term: RTerm, path: tuple[int, ...] = ()) -> Optional[tuple[int, ...]]:
        if id(term) in self.clean:
            return None
        for i, child in enumerate(term[1:]):
            found = self.first_innermost(child, path + (i,))
            if found is not None:
                return found
        if _match_at(self.index, term) is not None:
            return path
        self.clean[id(term)] = term
        return None

    def all_redexes(self, term: RTerm) -> list[tuple[int, ...]]:
        """Redex positions in preorder, memoized per subterm identity."""
        cached = self.redexes.get(id(term))
        if cached is not None:
            return cached
        out: list[tuple[int, ...]] = []
        if _match_at(self.index, term) is not None:
            out.append(())
        for i, child in enumerate(term[1:]):
            out.extend((i,) + p for p in self.all_redexes(child))
        self.redexes[id(term)] = out
        self.clean[id(term)] = term  # keepalive for the id
        return out


def _subterm(term: RTerm, path: tuple[int, ...]) -> RTerm:
    for i in path:
        term = term[i + 1]
    return term


def _replace(term: RTerm, path: tuple[int, ...], new: RTerm) -> RTerm:
    if not path:
        return new
    i = path[0]
    return term[: i + 1] + (_replace(term[i + 1], path[1:], new),) + term[i + 2:]


def _reduce_positional(
    term: RTerm,
    rules: tuple[RewriteRule, ...],
    strategy: Strategy,
    budget: int,
    seed: int,
    trace,
) -> ReductionReport:
    index = _index_for(rules)
    scanner = _RedexScanner(index)
    rng = random.Random(seed)
    steps = 0
    current = term
    while True:
        if strategy == "outermost":
            pos = scanner.first_outermost(current)
        elif strategy == "innermost":
            pos = scanner.first_innermost(current)
        else:
            redexes = scanner.all_redexes(current)
            pos = rng.choice(redexes) if redexes else None
        if pos is None:
            return ReductionReport(current, steps, False)
        if steps >= budget:
            return ReductionReport(current, steps, True)
        env, rule = _match_at(index, _subterm(current, pos))
        if trace is not None:
            trace(steps, pos, rule)
        current = _replace(current, pos, subst_template(rule.rhs, env))
        steps += 1
