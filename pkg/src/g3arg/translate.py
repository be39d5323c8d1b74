"""Framework-to-theory translations and their verification oracles.

Four routes are covered: the propositional clause theory whose models are
exactly the complete labellings, its two undecidedness-free variants (one
capturing stable labellings classically, one with the marker constant
replaced by its definition), instantiation of arguments by formulas, and
the quantified predicate route with an optional domain diagram that pins
the attack relation only up to renaming.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .af import (
    Framework,
    Label,
    LABEL_TO_VALUE,
    VALUE_TO_LABEL,
    Labelling,
    canonical,
    enumerate_complete,
)
from .prop import (
    And,
    Atom,
    Formula,
    Imp,
    Neg,
    Or,
    UndConst,
    assignments,
    atoms_of,
    conj,
    disj,
    enumerate_models,
    eval_world,
    iff,
    replace_und,
    substitute,
)
from .pred import (
    EqAtom,
    Exists,
    Forall,
    InAtom,
    RAtom,
    Variable,
    enumerate_interps,
)
from .syntax import format_formula
from .threeval import DECIDED_ORDER, ThreeVal, World


@dataclass(frozen=True)
class Theory:
    """A named, ordered clause list with a small routing tag."""

    tag: str
    clauses: tuple[tuple[str, Formula], ...]

    def __post_init__(self) -> None:
        names = [name for name, _ in self.clauses]
        if len(names) != len(set(names)):
            raise ValueError("clause names must be unique")

    def formulas(self) -> list[Formula]:
        return [g for _, g in self.clauses]

    def clause(self, name: str) -> Formula:
        for clause_name, g in self.clauses:
            if clause_name == name:
                return g
        raise KeyError(name)


def serialize_theory(t: Theory) -> str:
    return "\n".join(f"{name}: {format_formula(g)}" for name, g in t.clauses)


def framework_key(f: Framework) -> str:
    arrows = ",".join(f"{u}>{x}" for u, x in sorted(f.attacks))
    return ",".join(f.arguments) + ("|" + arrows if arrows else "|-")


@dataclass(frozen=True)
class CorrespondenceReport:
    """Evidence that a theory's models match a labelling set, or how not."""

    subject: str
    model_count: int
    labelling_count: int
    matched: int
    extra_models: tuple[tuple[tuple[str, str], ...], ...]
    extra_labellings: tuple[tuple[tuple[str, str], ...], ...]

    @property
    def ok(self) -> bool:
        return not self.extra_models and not self.extra_labellings


def _compare(
    subject: str,
    model_side: set[tuple[tuple[str, str], ...]],
    lab_side: set[tuple[tuple[str, str], ...]],
    model_count: int | None = None,
) -> CorrespondenceReport:
    return CorrespondenceReport(
        subject=subject,
        model_count=len(model_side) if model_count is None else model_count,
        labelling_count=len(lab_side),
        matched=len(model_side & lab_side),
        extra_models=tuple(sorted(model_side - lab_side)),
        extra_labellings=tuple(sorted(lab_side - model_side)),
    )


def prop_theory(f: Framework) -> Theory:
    """The four propositional clause families, one group per argument.

    For an argument x with attackers y1..yk:
        a1[x]: x -> (#n | ~y1 & .. & ~yk)
        a2[x]: (~y1 & .. & ~yk) -> (#n | x)
        b1[x]: ~x -> (#n | y1 | .. | yk)
        b2[x]: (y1 | .. | yk) -> (~x | #n)
    The empty conjunction is true, the empty disjunction false, both kept
    literally in the clauses.
    """
    table = f.attacker_table()
    clauses: list[tuple[str, Formula]] = []
    for x in f.arguments:
        ys = table[x]
        all_out = conj([Neg(Atom(y)) for y in ys])
        some_in = disj([Atom(y) for y in ys])
        clauses.append((f"a1[{x}]", Imp(Atom(x), Or(UndConst(), all_out))))
        clauses.append((f"a2[{x}]", Imp(all_out, Or(UndConst(), Atom(x)))))
        clauses.append((f"b1[{x}]", Imp(Neg(Atom(x)), Or(UndConst(), some_in))))
        clauses.append((f"b2[{x}]", Imp(some_in, Or(Neg(Atom(x)), UndConst()))))
    return Theory("prop", tuple(clauses))


def labelling_to_assignment(lab: Mapping[str, Label]) -> dict[str, ThreeVal]:
    return {x: LABEL_TO_VALUE[v] for x, v in lab.items()}


def assignment_to_labelling(h: Mapping[str, ThreeVal]) -> Labelling:
    return {x: VALUE_TO_LABEL[v] for x, v in h.items()}


def verify_prop_theory(f: Framework) -> CorrespondenceReport:
    """Check that the clause theory's models are the complete labellings."""
    models = enumerate_models(prop_theory(f).formulas(), f.arguments)
    model_side = {canonical(assignment_to_labelling(h)) for h in models}
    lab_side = {canonical(lab) for lab in enumerate_complete(f)}
    return _compare(framework_key(f), model_side, lab_side, len(models))


def und_definition(f: Framework) -> Formula:
    """The defined undecidedness marker: every argument is decided."""
    return conj([Or(Atom(x), Neg(Atom(x))) for x in f.arguments])


def und_free_theories(f: Framework) -> tuple[Theory, Theory]:
    """Two marker-free theories.

    The first has classical two-valued models exactly at the stable
    labellings (each argument is equivalent to the conjunction of its
    attackers' negations). The second is the clause theory with the marker
    constant textually replaced by its definition; its models with the
    defined marker undecided cover the non-stable complete labellings.
    """
    table = f.attacker_table()
    stable_clauses = tuple(
        (f"fix[{x}]", iff(Atom(x), conj([Neg(Atom(y)) for y in table[x]])))
        for x in f.arguments
    )
    defn = und_definition(f)
    base = prop_theory(f)
    free_clauses = tuple(
        (name, replace_und(g, defn)) for name, g in base.clauses
    )
    return Theory("stable", stable_clauses), Theory("und-free", free_clauses)


@dataclass(frozen=True)
class UndFreeReport:
    stable: CorrespondenceReport
    non_stable: CorrespondenceReport
    union_ok: bool

    @property
    def ok(self) -> bool:
        return self.stable.ok and self.non_stable.ok and self.union_ok


def verify_und_free(f: Framework) -> UndFreeReport:
    """Check the two-case elimination of the marker constant.

    Stable labellings must equal the two-valued models of the first theory;
    non-stable complete labellings must equal the models of the second
    theory in which the defined marker is undecided; together the two sides
    must rebuild the complete set.
    """
    stable_theory, free_theory = und_free_theories(f)
    defn = und_definition(f)
    subject = framework_key(f)

    stable_models = []
    for combo in itertools.product(DECIDED_ORDER, repeat=len(f.arguments)):
        h = dict(zip(f.arguments, combo))
        if all(eval_world(World.HERE, g, h) for g in stable_theory.formulas()):
            stable_models.append(h)
    stable_side = {canonical(assignment_to_labelling(h)) for h in stable_models}

    partial_models = [
        h
        for h in assignments(f.arguments)
        if all(eval_world(World.HERE, g, h) for g in free_theory.formulas())
        and not eval_world(World.HERE, defn, h)
    ]
    partial_side = {canonical(assignment_to_labelling(h)) for h in partial_models}

    complete = [canonical(lab) for lab in enumerate_complete(f)]
    stable_labs = {
        canonical(lab)
        for lab in enumerate_complete(f)
        if all(v is not Label.UND for v in lab.values())
    }
    non_stable_labs = set(complete) - stable_labs

    return UndFreeReport(
        stable=_compare(subject + " (stable case)", stable_side, stable_labs,
                        len(stable_models)),
        non_stable=_compare(subject + " (undecided case)", partial_side,
                            non_stable_labs, len(partial_models)),
        union_ok=(stable_side | partial_side) == set(complete),
    )


def instantiate(f: Framework, subst: Mapping[str, Formula]) -> Theory:
    """Replace arguments by formulas throughout the clause theory.

    Replacement formulas must be built from fresh atoms; the only argument
    name a replacement may mention is the one it replaces (so the identity
    substitution stays legal).
    """
    unknown = set(subst) - set(f.arguments)
    if unknown:
        raise ValueError(f"substitution for unknown arguments {sorted(unknown)}")
    for x, g in subst.items():
        clash = (atoms_of(g) & set(f.arguments)) - {x}
        if clash:
            raise ValueError(
                f"replacement for {x} reuses argument names {sorted(clash)}"
            )
    base = prop_theory(f)
    mapping = dict(subst)
    return Theory(
        base.tag,
        tuple((name, substitute(g, mapping)) for name, g in base.clauses),
    )


def instantiated_models(
    f: Framework, subst: Mapping[str, Formula]
) -> list[dict[str, ThreeVal]]:
    """Models of the clause theory constrained by the substitution.

    The argument atoms are kept, the replacement formulas' atoms are added,
    and a substituted argument must agree with its replacement at the
    actual world. Requiring agreement at both worlds instead would be
    expressible inside the logic, but it would force replacements that are
    never false up there (such as excluded-middle instances) to rule the
    argument's profile FF out, and the out case would vanish. The
    actual-world reading reproduces the intended extension patterns.
    """
    unknown = set(subst) - set(f.arguments)
    if unknown:
        raise ValueError(f"substitution for unknown arguments {sorted(unknown)}")
    extra = sorted(
        {a for g in subst.values() for a in atoms_of(g)} - set(f.arguments)
    )
    names = list(f.arguments) + extra
    formulas = prop_theory(f).formulas()
    found = []
    for h in assignments(names):
        if not all(eval_world(World.HERE, g, h) for g in formulas):
            continue
        if any(
            h[x].here != eval_world(World.HERE, g, h) for x, g in subst.items()
        ):
            continue
        found.append(h)
    return found


def instantiation_patterns(
    f: Framework, subst: Mapping[str, Formula]
) -> list[Labelling]:
    """Distinct argument-label patterns among the instantiated models."""
    patterns: list[Labelling] = []
    seen = set()
    for h in instantiated_models(f, subst):
        lab = {x: VALUE_TO_LABEL[h[x]] for x in f.arguments}
        key = canonical(lab)
        if key not in seen:
            seen.add(key)
            patterns.append(lab)
    return patterns


def pred_theory() -> Theory:
    """The quantified clause theory; the framework enters via the relation.

    Same four families as the propositional route, stated once with
    quantifiers, plus the axiom that the attack relation is decided.
    """
    x = Variable("X")
    y = Variable("Y")
    all_attackers_out = Forall("Y", Imp(RAtom(y, x), Neg(InAtom(y))))
    some_attacker_in = Exists("Y", And(RAtom(y, x), InAtom(y)))
    clauses = (
        ("a1", Forall("X", Imp(InAtom(x), Or(UndConst(), all_attackers_out)))),
        ("a2", Forall("X", Imp(all_attackers_out, Or(UndConst(), InAtom(x))))),
        ("b1", Forall("X", Imp(Neg(InAtom(x)), Or(UndConst(), some_attacker_in)))),
        ("b2", Forall("X", Imp(some_attacker_in, Or(UndConst(), Neg(InAtom(x)))))),
        ("decided-r", Forall("X", Forall("Y", Or(RAtom(x, y), Neg(RAtom(x, y)))))),
    )
    return Theory("pred", clauses)


def verify_pred_theory(f: Framework) -> CorrespondenceReport:
    """Predicate route with the relation pinned to the framework's attacks."""
    interps = enumerate_interps(
        f.arguments, pred_theory().formulas(), fixed_r=f.attacks
    )
    model_side = {
        canonical({x: VALUE_TO_LABEL[m.in_val[x]] for x in f.arguments})
        for m in interps
    }
    lab_side = {canonical(lab) for lab in enumerate_complete(f)}
    return _compare(framework_key(f), model_side, lab_side, len(interps))


def domain_diagram(f: Framework) -> Formula:
    """One closed formula listing the domain and the attack relation.

    Existentially names every argument, asserts pairwise distinctness, the
    presence of every attack, the absence of every non-attack, and that the
    named elements exhaust the domain. Satisfying relations are exactly the
    renamed copies of the framework's relation. Without the negative
    conjuncts any superset of a renamed copy would slip through, dragging
    in labellings of other frameworks.
    """
    names = f.arguments
    var_of = {name: Variable(f"X{i + 1}") for i, name in enumerate(names)}
    parts: list[Formula] = [
        Neg(EqAtom(var_of[a], var_of[b]))
        for a, b in itertools.combinations(names, 2)
    ]
    pairs = [(u, x) for u in names for x in names]
    parts.extend(
        RAtom(var_of[u], var_of[x]) for u, x in pairs if (u, x) in f.attacks
    )
    parts.extend(
        Neg(RAtom(var_of[u], var_of[x]))
        for u, x in pairs
        if (u, x) not in f.attacks
    )
    y = Variable("Y")
    parts.append(
        Forall("Y", disj([EqAtom(y, var_of[a]) for a in names]))
    )
    body = conj(parts)
    for name in reversed(names):
        body = Exists(var_of[name].name, body)
    return body


@dataclass(frozen=True)
class DiagramReport:
    """Free-relation recovery check, up to renaming of domain elements."""

    subject: str
    interp_count: int
    expected_count: int
    matched: int
    extra_found: tuple
    extra_expected: tuple

    @property
    def ok(self) -> bool:
        return not self.extra_found and not self.extra_expected


def verify_domain_diagram(f: Framework) -> DiagramReport:
    """Scan all decided relations; the diagram must recover the framework.

    The found side collects (relation, labelling) pairs from models of the
    quantified clauses plus the diagram, the relation ranging freely over
    decided values. The expected side is the framework's complete
    labellings pushed through every renaming of the arguments.
    """
    theory = pred_theory().formulas() + [domain_diagram(f)]
    interps = enumerate_interps(f.arguments, theory, r_decided=True)
    found = {
        (
            tuple(sorted(m.relation)),
            canonical({x: VALUE_TO_LABEL[m.in_val[x]] for x in f.arguments}),
        )
        for m in interps
    }
    expected = set()
    complete = enumerate_complete(f)
    for perm in itertools.permutations(f.arguments):
        sigma = dict(zip(f.arguments, perm))
        rel = tuple(sorted((sigma[u], sigma[x]) for u, x in f.attacks))
        for lab in complete:
            expected.add(
                (rel, canonical({sigma[x]: lab[x] for x in f.arguments}))
            )
    return DiagramReport(
        subject=framework_key(f),
        interp_count=len(interps),
        expected_count=len(expected),
        matched=len(found & expected),
        extra_found=tuple(sorted(found - expected)),
        extra_expected=tuple(sorted(expected - found)),
    )
