"""Sublevels: the atomic building blocks of minimal level representations.

A sublevel is either A(E, x, S) or B(E, S) where E is a sorted variable set,
x a variable and S a shift.  Both evaluate to 0 as soon as some variable of E
is 0; otherwise A(E, x, S) is sigma(x) + S and B(E, S) is S.

Only restricted sublevels are representable here:

  * A(E, x, S) requires x in E,
  * B(E, S) requires S >= 1.

The comparison theorems of the algebra assume these restrictions, so the
constructors enforce them; building an ill-formed atom is a programming
error, not a recoverable condition.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .levels import Valuation, VarId, UnboundVariableError

VarSet = tuple[VarId, ...]  # strictly increasing ids


def _check_varset(elems: VarSet) -> None:
    if any(b <= a for a, b in zip(elems, elems[1:])):
        raise ValueError(f"variable set not strictly increasing: {elems!r}")
    if any(x < 0 for x in elems):
        raise ValueError(f"negative variable id in set: {elems!r}")


def set_insert(elems: VarSet, x: VarId) -> VarSet:
    """E union {x}, keeping the sorted duplicate-free form."""
    i = bisect_left(elems, x)
    if i < len(elems) and elems[i] == x:
        return elems
    return elems[:i] + (x,) + elems[i:]


def set_union(e: VarSet, f: VarSet) -> VarSet:
    if not f:
        return e
    if not e:
        return f
    merged = sorted(set(e) | set(f))
    return tuple(merged)


def set_subset(f: VarSet, e: VarSet) -> bool:
    """True iff every element of f is in e (two-pointer merge scan)."""
    i = 0
    for x in f:
        i = bisect_left(e, x, i)
        if i >= len(e) or e[i] != x:
            return False
    return True


def set_delete(elems: VarSet, x: VarId) -> VarSet:
    i = bisect_left(elems, x)
    if i < len(elems) and elems[i] == x:
        return elems[:i] + elems[i + 1:]
    return elems


def set_lex_leq(e: VarSet, f: VarSet) -> bool:
    """Total order on sets: lexicographic comparison of the sorted id words.

    Python tuple comparison is exactly that order (a strict prefix compares
    before any extension).
    """
    return e <= f


@dataclass(frozen=True)
class SubA:
    varset: VarSet
    var: VarId
    shift: int

    def __post_init__(self):
        _check_varset(self.varset)
        if self.var not in self.varset:
            raise ValueError(f"A-atom variable {self.var} not in its set {self.varset!r}")
        if self.shift < 0:
            raise ValueError("negative shift")


@dataclass(frozen=True)
class SubB:
    varset: VarSet
    shift: int

    def __post_init__(self):
        _check_varset(self.varset)
        if self.shift < 1:
            raise ValueError("B-atom shift must be at least 1")


SubLevel = SubA | SubB


def eval_sub(u: SubLevel, sigma: Valuation) -> int:
    for y in u.varset:
        if y not in sigma:
            raise UnboundVariableError(y)
        if sigma[y] == 0:
            return 0
    if isinstance(u, SubA):
        if u.var not in sigma:
            raise UnboundVariableError(u.var)
        return sigma[u.var] + u.shift
    return u.shift


def leq_sub(u: SubLevel, v: SubLevel) -> bool:
    """Decide u <= v semantically, by the four comparison cases.

    (1) A <= B never holds;
    (2) B(E,S) <= B(F,K)   iff F subset E and S <= K;
    (3) B(E,S) <= A(F,x,K) iff F subset E and S <= K + 1;
    (4) A(E,x,S) <= A(F,y,K) iff F subset E, x = y and S <= K.
    """
    if isinstance(u, SubA):
        if isinstance(v, SubB):
            return False
        return set_subset(v.varset, u.varset) and u.var == v.var and u.shift <= v.shift
    if isinstance(v, SubB):
        return set_subset(v.varset, u.varset) and u.shift <= v.shift
    return set_subset(v.varset, u.varset) and u.shift <= v.shift + 1


def sub_key(u: SubLevel) -> tuple:
    """Sort key for the storage order: all A's before all B's, then
    lexicographic on (set, var, shift) for A and (set, shift) for B."""
    if isinstance(u, SubA):
        return (0, u.varset, u.var, u.shift)
    return (1, u.varset, u.shift)


def ord_sub(u: SubLevel, v: SubLevel) -> int:
    """Total storage order; returns -1, 0 or 1."""
    a, b = sub_key(u), sub_key(v)
    if a < b:
        return -1
    return 0 if a == b else 1


def succ_sub(u: SubLevel) -> SubLevel:
    if isinstance(u, SubA):
        return SubA(u.varset, u.var, u.shift + 1)
    return SubB(u.varset, u.shift + 1)


def imax_sub_pair(u: SubLevel, v: SubLevel) -> tuple[SubLevel, SubLevel]:
    """The two atoms whose max is equivalent to imax(u, v).

    imax(u, v) == max(u[E union F], v) where E is u's set and F is v's set:
    when some variable of F is 0 both sides are 0, and otherwise v is at
    least 1, so the impredicative max degenerates to max while u's extra
    guard variables from F never fire.
    """
    merged = set_union(u.varset, v.varset)
    if isinstance(u, SubA):
        return SubA(merged, u.var, u.shift), v
    return SubB(merged, u.shift), v


def sorted_insert_atom(atoms: tuple[SubLevel, ...], u: SubLevel) -> tuple[SubLevel, ...]:
    """Insert `u` into a key-sorted atom tuple, keeping it sorted."""
    keys = [sub_key(a) for a in atoms]
    i = bisect_left(keys, sub_key(u))
    return atoms[:i] + (u,) + atoms[i:]


__all__ = [
    "VarSet", "SubA", "SubB", "SubLevel",
    "set_insert", "set_union", "set_subset", "set_delete", "set_lex_leq",
    "eval_sub", "leq_sub", "ord_sub", "sub_key", "succ_sub", "imax_sub_pair",
    "sorted_insert_atom",
]
