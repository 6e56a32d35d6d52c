"""Minimal representations of levels and the authoritative decision procedure.

Every level is equivalent to the max of a unique set of pairwise-incomparable
sublevels.  `normalize` computes that set; equality of levels is then literal
equality of atom sets, and `u <= v` holds iff every atom of u's representation
is dominated by some atom of v's.

Two operations deliberately differ from their naive pointwise statements:

  * the successor of a representation is the pointwise shifted atoms PLUS the
    constant atom B({}, 1).  An A-atom vanishes wherever a set variable is 0
    while the successor of the original level is at least 1 there, so the
    constant floor is required (s(x) at x=0 is 1, but A({x},x,1) is 0).
  * inserting an atom drops EVERY existing atom the new one dominates, not
    just the first one found; an inserted atom with a small variable set can
    dominate several incomparable atoms at once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .levels import (
    IMax, Level, Max, Succ, Valuation, Var, VarId, Zero,
)
from .sublevels import (
    SubA, SubB, SubLevel, eval_sub, imax_sub_pair, leq_sub, set_delete,
    sorted_insert_atom, sub_key, succ_sub,
)


class ReprInvariantError(ValueError):
    """A representation failed the sorted-antichain invariant."""


@dataclass(frozen=True)
class Repr:
    """A minimal representation: atoms sorted by the storage order,
    pairwise incomparable, all satisfying the sublevel restrictions."""

    atoms: tuple[SubLevel, ...] = ()

    def __post_init__(self):
        keys = [sub_key(u) for u in self.atoms]
        if any(b <= a for a, b in zip(keys, keys[1:])):
            raise ReprInvariantError(f"atoms not strictly sorted: {self.atoms!r}")
        for i, u in enumerate(self.atoms):
            for v in self.atoms[i + 1:]:
                if leq_sub(u, v) or leq_sub(v, u):
                    raise ReprInvariantError(f"comparable atoms {u!r} and {v!r}")


_ZERO_REPR = Repr(())
_SUCC_FLOOR = SubB((), 1)


def repr_zero() -> Repr:
    """The empty representation: the max of nothing, i.e. level 0."""
    return _ZERO_REPR


def repr_var(x: VarId) -> Repr:
    return Repr((SubA((x,), x, 0),))


def insert_sub(r: Repr, u: SubLevel) -> Repr:
    """Minimal representation of max(r, u)."""
    for v in r.atoms:
        if leq_sub(u, v):
            return r
    kept = tuple(v for v in r.atoms if not leq_sub(v, u))
    return Repr(sorted_insert_atom(kept, u))


def max_repr(r1: Repr, r2: Repr) -> Repr:
    """Minimal representation of max(r1, r2)."""
    out = r1
    for u in r2.atoms:
        out = insert_sub(out, u)
    return out


def succ_repr(r: Repr) -> Repr:
    """Minimal representation of s(r): pointwise shift plus the B({},1) floor.

    Shifting every atom preserves both the storage order and pairwise
    incomparability, so only the floor needs a real insertion.
    """
    bumped = Repr(tuple(succ_sub(u) for u in r.atoms))
    return insert_sub(bumped, _SUCC_FLOOR)


def imax_repr(r1: Repr, r2: Repr) -> Repr:
    """Minimal representation of imax(r1, r2).

    imax(0, t) is t and imax(t, 0) is 0; otherwise imax distributes over the
    max on both sides, reducing to atom pairs.
    """
    if not r1.atoms:
        return r2
    if not r2.atoms:
        return r2
    out = _ZERO_REPR
    for u in r1.atoms:
        for v in r2.atoms:
            a, b = imax_sub_pair(u, v)
            out = insert_sub(insert_sub(out, a), b)
    return out


def normalize(t: Level) -> Repr:
    """The minimal representation of a level."""
    succs = 0
    while isinstance(t, Succ):
        succs += 1
        t = t.child
    match t:
        case Zero():
            out = _ZERO_REPR
        case Var(vid):
            out = repr_var(vid)
        case Max(a, b):
            out = max_repr(normalize(a), normalize(b))
        case IMax(a, b):
            out = imax_repr(normalize(a), normalize(b))
        case _:
            raise TypeError(f"not a level: {t!r}")
    for _ in range(succs):
        out = succ_repr(out)
    return out


def leq_repr(r1: Repr, r2: Repr) -> bool:
    """r1 <= r2 iff every atom of r1 is dominated by some atom of r2."""
    return all(any(leq_sub(u, v) for v in r2.atoms) for u in r1.atoms)


def eq_repr(r1: Repr, r2: Repr) -> bool:
    """Equality of representations is syntactic equality of atom sets."""
    return r1.atoms == r2.atoms


def subst_repr(r: Repr, y: VarId, n: int) -> Repr:
    """Minimal representation of r with variable y set to the constant n.

    Per atom: a zero substitution kills any atom guarding on y; an A-atom on
    the substituted variable becomes the constant atom B(E \\ {y}, S + n);
    every other atom just loses y from its guard set.  The atom images can
    become comparable, so they are re-inserted rather than mapped.
    """
    if n < 0:
        raise ValueError("substituted value must be a natural number")
    out = _ZERO_REPR
    for atom in r.atoms:
        if n == 0 and y in atom.varset:
            continue
        if isinstance(atom, SubA):
            if atom.var == y:
                # n >= 1 here: y is in the atom's set, so n = 0 vanished above.
                image: SubLevel = SubB(set_delete(atom.varset, y), atom.shift + n)
            else:
                image = SubA(set_delete(atom.varset, y), atom.var, atom.shift)
        else:
            image = SubB(set_delete(atom.varset, y), atom.shift)
        out = insert_sub(out, image)
    return out


def eval_repr(r: Repr, sigma: Valuation) -> int:
    """Max of the atom values; 0 for the empty representation."""
    best = 0
    for u in r.atoms:
        val = eval_sub(u, sigma)
        if val > best:
            best = val
    return best
