"""Canonical text and JSON output for levels and representations."""

from __future__ import annotations

import json

from .levels import IMax, Level, Max, Succ, Var, Zero
from .normalize import Repr
from .parser import NameTable
from .sublevels import SubA, SubLevel


def print_level(t: Level, names: NameTable) -> str:
    """Canonical text in the input grammar; parsing it back yields `t`."""
    succs = 0
    while isinstance(t, Succ):
        succs += 1
        t = t.child
    match t:
        case Zero():
            core = "0"
        case Var(vid):
            core = names.name_of(vid)
        case Max(a, b):
            core = f"max({print_level(a, names)}, {print_level(b, names)})"
        case IMax(a, b):
            core = f"imax({print_level(a, names)}, {print_level(b, names)})"
        case _:
            raise TypeError(f"not a level: {t!r}")
    return "s(" * succs + core + ")" * succs


def _atom_str(u: SubLevel, names: NameTable) -> str:
    members = ",".join(names.name_of(v) for v in u.varset)
    if isinstance(u, SubA):
        return f"A{{{members}}}({names.name_of(u.var)})+{u.shift}"
    return f"B{{{members}}}+{u.shift}"


def print_repr(r: Repr, names: NameTable) -> str:
    """`max{atom, ...}` with atoms in storage order; `max{}` when empty."""
    return "max{" + ", ".join(_atom_str(u, names) for u in r.atoms) + "}"


def print_repr_json(r: Repr, names: NameTable) -> str:
    atoms = []
    for u in r.atoms:
        entry: dict = {"kind": "A" if isinstance(u, SubA) else "B",
                       "set": [names.name_of(v) for v in u.varset]}
        if isinstance(u, SubA):
            entry["var"] = names.name_of(u.var)
        entry["shift"] = u.shift
        atoms.append(entry)
    return json.dumps({"atoms": atoms}, separators=(",", ":"))
