"""Argumentation networks and their two-world intuitionistic translations.

The package computes complete, stable, grounded and preferred labellings
of finite attack networks, translates networks into clause theories over
the two-world intuitionistic logic with a middle truth value, checks the
translations exhaustively on small instances, and handles attacks on
attacks, relation-constraining axioms, and group or table-driven attacks
by encoding them back into plain networks.
"""

from .threeval import ThreeVal, World
from .af import (
    Framework,
    Label,
    check_complete,
    classify,
    enumerate_complete,
    enumerate_complete_determined,
    restrict,
)
from .prop import (
    And,
    Atom,
    Bot,
    Imp,
    Neg,
    Or,
    Top,
    UndConst,
    enumerate_models,
    eval_world,
    is_valid,
    value,
)
from .pred import (
    Constant,
    EqAtom,
    Exists,
    Forall,
    InAtom,
    PredInterp,
    RAtom,
    StatusRef,
    Variable,
    build_meta,
    classical_eval,
    enumerate_interps,
    eval_pred,
    pred_value,
)
from .syntax import ParseError, format_formula, parse_pred, parse_prop
from .translate import (
    CorrespondenceReport,
    Theory,
    domain_diagram,
    instantiate,
    instantiated_models,
    instantiation_patterns,
    pred_theory,
    prop_theory,
    und_free_theories,
    verify_domain_diagram,
    verify_pred_theory,
    verify_prop_theory,
    verify_und_free,
)
from .meta import (
    GeneralizedModel,
    HigherNetwork,
    SearchSpaceExceeded,
    WffUnit,
    attack_formula,
    solve_higher,
    star_theory,
)
from .aaf import (
    ADFNet,
    AxiomaticFrame,
    ConjunctiveNet,
    DisjunctiveNet,
    EncodingError,
    aaf_extensions,
    adf_two_valued_models,
    encode_adf,
    encode_conjunctive,
    encode_disjunctive,
)
from .document import InputDocument, parse_document, serialize_document

__version__ = "0.1.0"

__all__ = [
    "ADFNet",
    "And",
    "Atom",
    "AxiomaticFrame",
    "Bot",
    "Constant",
    "ConjunctiveNet",
    "CorrespondenceReport",
    "DisjunctiveNet",
    "EncodingError",
    "EqAtom",
    "Exists",
    "Forall",
    "Framework",
    "GeneralizedModel",
    "HigherNetwork",
    "Imp",
    "InAtom",
    "InputDocument",
    "Label",
    "Neg",
    "Or",
    "ParseError",
    "PredInterp",
    "RAtom",
    "SearchSpaceExceeded",
    "StatusRef",
    "Theory",
    "ThreeVal",
    "Top",
    "UndConst",
    "Variable",
    "WffUnit",
    "World",
    "aaf_extensions",
    "adf_two_valued_models",
    "attack_formula",
    "build_meta",
    "check_complete",
    "classical_eval",
    "classify",
    "domain_diagram",
    "encode_adf",
    "encode_conjunctive",
    "encode_disjunctive",
    "enumerate_complete",
    "enumerate_complete_determined",
    "enumerate_interps",
    "enumerate_models",
    "eval_pred",
    "eval_world",
    "format_formula",
    "instantiate",
    "instantiated_models",
    "instantiation_patterns",
    "is_valid",
    "parse_document",
    "parse_pred",
    "parse_prop",
    "pred_theory",
    "pred_value",
    "prop_theory",
    "restrict",
    "serialize_document",
    "solve_higher",
    "star_theory",
    "und_free_theories",
    "value",
    "verify_domain_diagram",
    "verify_pred_theory",
    "verify_prop_theory",
    "verify_und_free",
]
