"""Finite-domain predicate formulas over the two-world frame.

The language has one unary predicate ``In``, one binary predicate ``R``,
decided equality, and the connectives shared with the propositional layer.
Domains are constant across both worlds; ``In`` and ``R`` atoms carry
three-valued truth profiles, equality is identity on element names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .prop import (
    And,
    Atom,
    Bot,
    EvalError,
    Formula,
    Imp,
    Neg,
    Or,
    Top,
    UndConst,
    iff,
)
from .threeval import DECIDED_ORDER, VALUE_ORDER, ThreeVal, World


class Term:
    """Marker base for terms; the language has no function symbols."""

    __slots__ = ()


@dataclass(frozen=True)
class Variable(Term):
    name: str


@dataclass(frozen=True)
class Constant(Term):
    name: str


@dataclass(frozen=True)
class InAtom(Formula):
    term: Term


@dataclass(frozen=True)
class RAtom(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class EqAtom(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class StatusRef(Formula):
    """Internal placeholder that evaluates through a named status table.

    Used by the higher-network solver, where the standing of a formula unit
    is an unknown of the search rather than a derived value. Never produced
    by the parsers.
    """

    name: str


@dataclass(frozen=True, eq=True)
class PredInterp:
    """A two-world interpretation: fixed domain, In and R truth profiles."""

    domain: tuple[str, ...]
    in_val: Mapping[str, ThreeVal]
    r_val: Mapping[tuple[str, str], ThreeVal]

    __hash__ = None  # type: ignore[assignment]

    @property
    def r_is_decided(self) -> bool:
        return all(v.decided for v in self.r_val.values())

    @property
    def relation(self) -> frozenset[tuple[str, str]]:
        """The pairs whose R profile is true at the actual world."""
        return frozenset(p for p, v in self.r_val.items() if v.here)


def walk(f: Formula) -> Iterator[Formula]:
    """Yield ``f`` and every formula node beneath it."""
    yield f
    if isinstance(f, Neg):
        yield from walk(f.body)
    elif isinstance(f, (And, Or, Imp)):
        yield from walk(f.left)
        yield from walk(f.right)
    elif isinstance(f, (Forall, Exists)):
        yield from walk(f.body)


def free_vars(f: Formula) -> set[str]:
    if isinstance(f, InAtom):
        return _term_vars(f.term)
    if isinstance(f, (RAtom, EqAtom)):
        return _term_vars(f.left) | _term_vars(f.right)
    if isinstance(f, (Atom, UndConst, Top, Bot, StatusRef)):
        return set()
    if isinstance(f, Neg):
        return free_vars(f.body)
    if isinstance(f, (And, Or, Imp)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.body) - {f.var}
    raise EvalError(f"not a predicate formula node: {f!r}")


def is_closed(f: Formula) -> bool:
    return not free_vars(f)


def _term_vars(t: Term) -> set[str]:
    return {t.name} if isinstance(t, Variable) else set()


def _resolve(t: Term, m: PredInterp, v: Mapping[str, str]) -> str:
    if isinstance(t, Variable):
        try:
            return v[t.name]
        except KeyError:
            raise EvalError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Constant):
        if t.name not in m.domain:
            raise EvalError(f"constant {t.name!r} names no domain element")
        return t.name
    raise EvalError(f"not a term: {t!r}")


def eval_pred(
    w: World,
    f: Formula,
    m: PredInterp,
    v: Mapping[str, str] | None = None,
    statuses: Mapping[str, ThreeVal] | None = None,
) -> bool:
    """Satisfaction of ``f`` at ``w`` in ``m`` under the valuation ``v``.

    Universal quantification ranges over the (constant) domain at every
    world at or above ``w``; existential quantification stays at ``w``.
    """
    if v is None:
        v = {}
    if isinstance(f, InAtom):
        return m.in_val[_resolve(f.term, m, v)].at(w)
    if isinstance(f, RAtom):
        return m.r_val[(_resolve(f.left, m, v), _resolve(f.right, m, v))].at(w)
    if isinstance(f, EqAtom):
        return _resolve(f.left, m, v) == _resolve(f.right, m, v)
    if isinstance(f, StatusRef):
        if statuses is None or f.name not in statuses:
            raise EvalError(f"no status recorded for unit {f.name!r}")
        return statuses[f.name].at(w)
    if isinstance(f, UndConst):
        return w is World.THERE
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return eval_pred(w, f.left, m, v, statuses) and eval_pred(
            w, f.right, m, v, statuses
        )
    if isinstance(f, Or):
        return eval_pred(w, f.left, m, v, statuses) or eval_pred(
            w, f.right, m, v, statuses
        )
    if isinstance(f, Neg):
        return all(
            not eval_pred(u, f.body, m, v, statuses) for u in w.and_above()
        )
    if isinstance(f, Imp):
        return all(
            not eval_pred(u, f.left, m, v, statuses)
            or eval_pred(u, f.right, m, v, statuses)
            for u in w.and_above()
        )
    if isinstance(f, Forall):
        return all(
            eval_pred(u, f.body, m, {**v, f.var: d}, statuses)
            for u in w.and_above()
            for d in m.domain
        )
    if isinstance(f, Exists):
        return any(
            eval_pred(w, f.body, m, {**v, f.var: d}, statuses) for d in m.domain
        )
    raise EvalError(f"not a predicate formula node: {f!r}")


def pred_value(
    f: Formula, m: PredInterp, statuses: Mapping[str, ThreeVal] | None = None
) -> ThreeVal:
    """Truth profile of a closed formula."""
    if not is_closed(f):
        raise EvalError(f"formula has free variables {sorted(free_vars(f))}")
    return ThreeVal.from_pair(
        eval_pred(World.HERE, f, m, None, statuses),
        eval_pred(World.THERE, f, m, None, statuses),
    )


def relation_to_r_val(
    domain: Sequence[str], relation: Iterable[tuple[str, str]]
) -> dict[tuple[str, str], ThreeVal]:
    """Spread a crisp relation over all domain pairs as TT/FF profiles."""
    rel = set(relation)
    return {
        (u, x): (ThreeVal.TT if (u, x) in rel else ThreeVal.FF)
        for u in domain
        for x in domain
    }


def mentions_in(f: Formula) -> bool:
    return any(isinstance(node, InAtom) for node in walk(f))


def enumerate_interps(
    domain: Sequence[str],
    theory: Iterable[Formula],
    *,
    r_decided: bool = False,
    fixed_r: Iterable[tuple[str, str]] | None = None,
) -> list[PredInterp]:
    """All interpretations satisfying every theory member at the actual world.

    R profiles range over all three values unless ``r_decided`` limits them
    to the classical two, or ``fixed_r`` pins the relation outright. In
    profiles always range over all three values. Formulas that never mention
    ``In`` are checked once per R choice, which keeps the free-R scans cheap.
    """
    dom = tuple(domain)
    formulas = list(theory)
    in_dependent = [f for f in formulas if mentions_in(f)]
    in_free = [f for f in formulas if not mentions_in(f)]
    pairs = [(u, x) for u in dom for x in dom]

    if fixed_r is not None:
        r_choices: Iterable[dict[tuple[str, str], ThreeVal]] = [
            relation_to_r_val(dom, fixed_r)
        ]
    else:
        order = DECIDED_ORDER if r_decided else VALUE_ORDER
        r_choices = (
            dict(zip(pairs, combo))
            for combo in itertools.product(order, repeat=len(pairs))
        )

    found: list[PredInterp] = []
    for r_val in r_choices:
        probe = PredInterp(dom, {}, r_val)
        if not all(eval_pred(World.HERE, f, probe) for f in in_free):
            continue
        for combo in itertools.product(VALUE_ORDER, repeat=len(dom)):
            m = PredInterp(dom, dict(zip(dom, combo)), r_val)
            if all(eval_pred(World.HERE, f, m) for f in in_dependent):
                found.append(m)
    return found


def classical_eval(
    f: Formula,
    domain: Sequence[str],
    relation: Iterable[tuple[str, str]],
    v: Mapping[str, str] | None = None,
) -> bool:
    """Single-world classical satisfaction for formulas over R and = only."""
    if v is None:
        v = {}
    rel = relation if isinstance(relation, (set, frozenset)) else set(relation)
    dom = tuple(domain)

    def res(t: Term) -> str:
        if isinstance(t, Variable):
            try:
                return v[t.name]
            except KeyError:
                raise EvalError(f"unbound variable {t.name!r}") from None
        if isinstance(t, Constant):
            if t.name not in dom:
                raise EvalError(f"constant {t.name!r} names no domain element")
            return t.name
        raise EvalError(f"not a term: {t!r}")

    if isinstance(f, RAtom):
        return (res(f.left), res(f.right)) in rel
    if isinstance(f, EqAtom):
        return res(f.left) == res(f.right)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Neg):
        return not classical_eval(f.body, dom, rel, v)
    if isinstance(f, And):
        return classical_eval(f.left, dom, rel, v) and classical_eval(
            f.right, dom, rel, v
        )
    if isinstance(f, Or):
        return classical_eval(f.left, dom, rel, v) or classical_eval(
            f.right, dom, rel, v
        )
    if isinstance(f, Imp):
        return not classical_eval(f.left, dom, rel, v) or classical_eval(
            f.right, dom, rel, v
        )
    if isinstance(f, Forall):
        return all(classical_eval(f.body, dom, rel, {**v, f.var: d}) for d in dom)
    if isinstance(f, Exists):
        return any(classical_eval(f.body, dom, rel, {**v, f.var: d}) for d in dom)
    raise EvalError(
        "classical evaluation accepts formulas over R and = only, "
        f"found {type(f).__name__}"
    )


def attacks_all_others(a: str) -> Formula:
    """a attacks every element other than itself."""
    x = Variable("X")
    return Forall(
        "X", Imp(Neg(EqAtom(x, Constant(a))), RAtom(Constant(a), x))
    )


def attacked_by_all_others(a: str) -> Formula:
    """Every element other than a attacks a."""
    x = Variable("X")
    return Forall(
        "X", Imp(Neg(EqAtom(x, Constant(a))), RAtom(x, Constant(a)))
    )


def same_targets(a: str, b: str) -> Formula:
    """a and b attack exactly the same elements."""
    x = Variable("X")
    return Forall("X", iff(RAtom(Constant(a), x), RAtom(Constant(b), x)))


def attacks_self_attackers(a: str) -> Formula:
    """a attacks exactly the self-attacking elements."""
    x = Variable("X")
    return Forall("X", iff(RAtom(Constant(a), x), RAtom(x, x)))


_META_BUILDERS = {
    "attacks_all_others": attacks_all_others,
    "attacked_by_all_others": attacked_by_all_others,
    "same_targets": same_targets,
    "attacks_self_attackers": attacks_self_attackers,
}


def build_meta(kind: str, *args: str) -> Formula:
    """Construct one of the named quantified attack properties.

    Kinds: attacks_all_others(a), attacked_by_all_others(a),
    same_targets(a, b), attacks_self_attackers(a).
    """
    try:
        builder = _META_BUILDERS[kind]
    except KeyError:
        raise ValueError(
            f"unknown meta formula kind {kind!r}; "
            f"expected one of {sorted(_META_BUILDERS)}"
        ) from None
    return builder(*args)


def ac_normal_form(f: Formula) -> Formula:
    """Canonical form modulo associativity and commutativity of And/Or.

    Chains of the same connective are flattened, the parts normalized and
    sorted structurally, then refolded to the right. Used to compare
    generated clause sets against reference renderings.
    """
    if isinstance(f, (And, Or)):
        kind = type(f)
        parts = sorted((ac_normal_form(p) for p in _spine(kind, f)), key=repr)
        out = parts[-1]
        for p in reversed(parts[:-1]):
            out = kind(p, out)
        return out
    if isinstance(f, Neg):
        return Neg(ac_normal_form(f.body))
    if isinstance(f, Imp):
        return Imp(ac_normal_form(f.left), ac_normal_form(f.right))
    if isinstance(f, Forall):
        return Forall(f.var, ac_normal_form(f.body))
    if isinstance(f, Exists):
        return Exists(f.var, ac_normal_form(f.body))
    return f


def _spine(kind: type, f: Formula) -> Iterator[Formula]:
    if isinstance(f, kind):
        yield from _spine(kind, f.left)  # type: ignore[attr-defined]
        yield from _spine(kind, f.right)  # type: ignore[attr-defined]
    else:
        yield f
