from __future__ import annotations

import hypothesis.strategies as st

from levelcanon import IMax, Max, Succ, Var, ZERO


def level_strategy(num_vars: int = 3, max_leaves: int = 10):
    leaves = st.just(ZERO) | st.integers(0, num_vars - 1).map(Var)
    return st.recursive(
        leaves,
        lambda ch: st.builds(Succ, ch) | st.builds(Max, ch, ch) | st.builds(IMax, ch, ch),
        max_leaves=max_leaves,
    )
