"""Soft exact match QA evaluation with entity-driven answer set expansion."""

from .entity_types import EntityType, TypedQuestion, classify, rule_type
from .expansion import ExpandedAnswerSet, ExpansionMethod, build_prompt, parse_expansion
from .harness import EvalRecord, ModelPrediction, evaluate, import_evouna, reliability
from .scoring import NormalizationProfile, Verdict, f1, hard_em, normalize, soft_em
from .surface import ParsedDate, ParsedNumber, VariantSet, parse_numeric, rule_expand

__version__ = "0.1.0"

__all__ = [
    "EntityType",
    "TypedQuestion",
    "classify",
    "rule_type",
    "ExpandedAnswerSet",
    "ExpansionMethod",
    "build_prompt",
    "parse_expansion",
    "EvalRecord",
    "ModelPrediction",
    "evaluate",
    "import_evouna",
    "reliability",
    "NormalizationProfile",
    "Verdict",
    "f1",
    "hard_em",
    "normalize",
    "soft_em",
    "ParsedDate",
    "ParsedNumber",
    "VariantSet",
    "parse_numeric",
    "rule_expand",
    "__version__",
]
