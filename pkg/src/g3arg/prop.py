"""Propositional formulas over the two-world frame and their model theory.

Formula nodes are small frozen dataclasses sharing the ``Formula`` marker
base. The connective nodes (Neg, And, Or, Imp) are reused by the predicate
layer, so the evaluator here rejects anything it does not know rather than
guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .threeval import VALUE_ORDER, ThreeVal, World


class EvalError(Exception):
    """A formula was evaluated outside its contract (missing atom, wrong AST)."""


class Formula:
    """Marker base class for every formula node, propositional or predicate."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class UndConst(Formula):
    """The distinguished constant holding at THERE but never at HERE.

    Concrete syntax ``#n``. It is a dedicated node rather than a reserved
    atom name, so user atoms can never collide with it.
    """


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


PropAssignment = Mapping[str, ThreeVal]


def eval_world(w: World, f: Formula, h: PropAssignment) -> bool:
    """Satisfaction of ``f`` at world ``w`` under the atom assignment ``h``.

    Negation and implication quantify over every world at or above ``w``;
    the other connectives are evaluated locally.
    """
    if isinstance(f, Atom):
        try:
            return h[f.name].at(w)
        except KeyError:
            raise EvalError(f"atom {f.name!r} has no assigned value") from None
    if isinstance(f, UndConst):
        return w is World.THERE
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return eval_world(w, f.left, h) and eval_world(w, f.right, h)
    if isinstance(f, Or):
        return eval_world(w, f.left, h) or eval_world(w, f.right, h)
    if isinstance(f, Neg):
        return all(not eval_world(u, f.body, h) for u in w.and_above())
    if isinstance(f, Imp):
        return all(
            not eval_world(u, f.left, h) or eval_world(u, f.right, h)
            for u in w.and_above()
        )
    raise EvalError(f"not a propositional formula node: {f!r}")


def value(f: Formula, h: PropAssignment) -> ThreeVal:
    """The (HERE, THERE) truth profile of ``f`` under ``h``."""
    return ThreeVal.from_pair(
        eval_world(World.HERE, f, h), eval_world(World.THERE, f, h)
    )


def atoms_of(f: Formula) -> set[str]:
    """Names of all atoms occurring in ``f``."""
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, (UndConst, Top, Bot)):
        return set()
    if isinstance(f, Neg):
        return atoms_of(f.body)
    if isinstance(f, (And, Or, Imp)):
        return atoms_of(f.left) | atoms_of(f.right)
    raise EvalError(f"not a propositional formula node: {f!r}")


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Replace atoms by formulas, uniformly and simultaneously."""
    if isinstance(f, Atom):
        return mapping.get(f.name, f)
    if isinstance(f, (UndConst, Top, Bot)):
        return f
    if isinstance(f, Neg):
        return Neg(substitute(f.body, mapping))
    if isinstance(f, And):
        return And(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Or):
        return Or(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Imp):
        return Imp(substitute(f.left, mapping), substitute(f.right, mapping))
    raise EvalError(f"not a propositional formula node: {f!r}")


def replace_und(f: Formula, replacement: Formula) -> Formula:
    """Swap every occurrence of the ``#n`` constant for ``replacement``."""
    if isinstance(f, UndConst):
        return replacement
    if isinstance(f, (Atom, Top, Bot)):
        return f
    if isinstance(f, Neg):
        return Neg(replace_und(f.body, replacement))
    if isinstance(f, And):
        return And(replace_und(f.left, replacement), replace_und(f.right, replacement))
    if isinstance(f, Or):
        return Or(replace_und(f.left, replacement), replace_und(f.right, replacement))
    if isinstance(f, Imp):
        return Imp(replace_und(f.left, replacement), replace_und(f.right, replacement))
    raise EvalError(f"not a propositional formula node: {f!r}")


def conj(parts: Iterable[Formula]) -> Formula:
    """Right-nested conjunction of ``parts``; the empty conjunction is Top."""
    items = list(parts)
    if not items:
        return Top()
    out = items[-1]
    for p in reversed(items[:-1]):
        out = And(p, out)
    return out


def disj(parts: Iterable[Formula]) -> Formula:
    """Right-nested disjunction of ``parts``; the empty disjunction is Bot."""
    items = list(parts)
    if not items:
        return Bot()
    out = items[-1]
    for p in reversed(items[:-1]):
        out = Or(p, out)
    return out


def iff(a: Formula, b: Formula) -> Formula:
    """Biconditional, kept out of the AST: a conjunction of two implications."""
    return And(Imp(a, b), Imp(b, a))


def assignments(atoms: Sequence[str]) -> Iterator[dict[str, ThreeVal]]:
    """All assignments over ``atoms`` in lexicographic FF < FT < TT order.

    The given atom order is respected; pass a sorted sequence for the
    canonical scan.
    """
    names = list(dict.fromkeys(atoms))
    for combo in itertools.product(VALUE_ORDER, repeat=len(names)):
        yield dict(zip(names, combo))


def enumerate_models(
    theory: Iterable[Formula], atoms: Sequence[str]
) -> list[dict[str, ThreeVal]]:
    """Assignments satisfying every theory member at the actual world.

    ``atoms`` must cover every atom of the theory; extra names are allowed
    and simply enlarge the search space.
    """
    formulas = list(theory)
    return [
        h
        for h in assignments(atoms)
        if all(eval_world(World.HERE, f, h) for f in formulas)
    ]


def is_valid(f: Formula) -> tuple[bool, dict[str, ThreeVal] | None]:
    """Decide validity semantically over all assignments to the atoms of ``f``.

    Returns (True, None), or (False, countermodel) with the first falsifying
    assignment in scan order. The ``#n`` constant keeps its fixed profile, so
    formulas containing it are checked with that value pinned.
    """
    names = sorted(atoms_of(f))
    for h in assignments(names):
        if not eval_world(World.HERE, f, h):
            return False, h
    return True, None
