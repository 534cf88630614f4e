"""Dataset ingestion, metric runs over (model, question) pairs, and
reliability/breakdown computation against human verdicts."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .client import LLMClient
from .entity_types import EntityType, TypedQuestion
from .errors import (
    MissingHumanLabel,
    SchemaError,
    UnparseableJudgeResponse,
    UnresolvedQuestionId,
)
from . import scoring
from .scoring import NormalizationProfile, Verdict

METRICS = ("soft_em", "hard_em", "f1", "judge")

# EVOUNA column suffix -> display name of the QA model that produced it.
EVOUNA_MODEL_COLUMNS = {
    "fid": "FiD",
    "gpt35": "GPT3.5",
    "chatgpt": "ChatGPT3.5",
    "gpt4": "ChatGPT4",
    "newbing": "BingChat",
}

DEFAULT_RARITY_BUCKETS = ((0, 0), (1, 10), (11, 100), (101, 1000), (1001, None))


@dataclass
class ModelPrediction:
    model_name: str
    text: str
    human_label: bool


@dataclass
class EvalRecord:
    question_id: str
    question: str
    gold: list[str]
    entity_type: EntityType = EntityType.NA
    rarity_docs: Optional[int] = None
    predictions: list[ModelPrediction] = field(default_factory=list)

    def to_json(self) -> str:
        obj = {
            "question_id": self.question_id,
            "question": self.question,
            "gold": self.gold,
            "entity_type": self.entity_type.value,
            "predictions": [
                {"model_name": p.model_name, "text": p.text, "human_label": p.human_label}
                for p in self.predictions
            ],
        }
        if self.rarity_docs is not None:
            obj["rarity_docs"] = self.rarity_docs
        return json.dumps(obj, ensure_ascii=False)

    @classmethod
    def from_obj(cls, obj: dict) -> "EvalRecord":
        tag = EntityType.from_tag(obj.get("entity_type", "N/A"))
        return cls(
            question_id=obj["question_id"],
            question=obj["question"],
            gold=list(obj["gold"]),
            entity_type=tag if tag is not None else EntityType.NA,
            rarity_docs=obj.get("rarity_docs"),
            predictions=[
                ModelPrediction(p["model_name"], p["text"], bool(p["human_label"]))
                for p in obj.get("predictions", [])
            ],
        )


def _decode_label(value) -> Optional[bool]:
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, float)) and value in (0, 1):
        return bool(value)
    if isinstance(value, str):
        lowered = value.strip().lower()
        if lowered in ("yes", "true", "correct", "1"):
            return True
        if lowered in ("no", "false", "incorrect", "0"):
            return False
    return None


def import_evouna(path: str | Path) -> list[EvalRecord]:
    """Adapt an EVOUNA release file to canonical records.

    Expected item shape: {"question": ..., "golden_answer": str|[str],
    "answer_<model>": ..., "judge_<model>": bool-ish, ...} with the model
    suffixes fid/gpt35/chatgpt/gpt4/newbing; unknown answer_*/judge_* pairs
    are kept under their raw suffix. Optional fields: id, rarity_docs.
    """
    path = Path(path)
    raw = path.read_text(encoding="utf-8").strip()
    if not raw:
        raise SchemaError(str(path), "empty file")
    if raw.startswith("["):
        items = json.loads(raw)
    else:
        items = [json.loads(line) for line in raw.splitlines() if line.strip()]
    if not isinstance(items, list):
        raise SchemaError(str(path), "expected a JSON array or JSON lines")
    records = []
    for i, item in enumerate(items):
        if "question" not in item:
            raise SchemaError(str(path), f"item {i} has no question field")
        gold = item.get("golden_answer", item.get("golden_answers", item.get("gold")))
        if gold is None:
            raise SchemaError(str(path), f"item {i} has no golden answer field")
        gold_list = [gold] if isinstance(gold, str) else [str(g) for g in gold]
        qid = str(item.get("id", f"{path.stem}-{i:05d}"))
        predictions = []
        for key in item:
            if not key.startswith("answer_"):
                continue
            suffix = key[len("answer_"):]
            model_name = EVOUNA_MODEL_COLUMNS.get(suffix, suffix)
            label = _decode_label(item.get(f"judge_{suffix}"))
            if label is None:
                raise MissingHumanLabel(qid, model_name)
            predictions.append(ModelPrediction(model_name, str(item[key]), label))
        if not predictions:
            raise SchemaError(str(path), f"item {i} has no answer_*/judge_* columns")
        rarity = item.get("rarity_docs", item.get("relevant_docs"))
        records.append(
            EvalRecord(
                question_id=qid,
                question=str(item["question"]),
                gold=gold_list,
                rarity_docs=int(rarity) if rarity is not None else None,
                predictions=predictions,
            )
        )
    return records


def load_records(path: str | Path) -> list[EvalRecord]:
    records = []
    with Path(path).open(encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(EvalRecord.from_obj(json.loads(line)))
    return records


def save_records(records: list[EvalRecord], path: str | Path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


def records_to_questions(records: list[EvalRecord]) -> list[TypedQuestion]:
    return [
        TypedQuestion(r.question_id, r.question, list(r.gold), r.entity_type)
        for r in records
    ]


def apply_types(records: list[EvalRecord], typed: list[TypedQuestion]):
    by_id = {q.question_id: q for q in typed}
    for r in records:
        q = by_id.get(r.question_id)
        if q is not None and q.entity_type is not None:
            r.entity_type = q.entity_type


@dataclass
class EvaluationResult:
    """Verdicts for every (model, question) pair of one metric run."""

    metric: str
    profile: str
    answer_source: str
    entries: dict[tuple[str, str], Optional[Verdict]] = field(default_factory=dict)
    abstained: int = 0
    ledger: dict = field(default_factory=dict)

    def verdict(self, model_name: str, question_id: str) -> Optional[Verdict]:
        return self.entries.get((model_name, question_id))

    def model_names(self) -> list[str]:
        return sorted({model for model, _ in self.entries})

    def to_jsonl(self, records: list[EvalRecord]) -> str:
        lines = []
        for r in records:
            for p in r.predictions:
                v = self.entries.get((p.model_name, r.question_id))
                obj = {
                    "question_id": r.question_id,
                    "model_name": p.model_name,
                    "metric": self.metric,
                    "correct": None if v is None else v.correct,
                    "matched_answer": None if v is None else v.matched_answer,
                    "detail": None if v is None else v.detail,
                }
                lines.append(json.dumps(obj, ensure_ascii=False))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, path: str | Path, metric: str = "", profile: str = "",
                   answer_source: str = "") -> "EvaluationResult":
        result = cls(metric=metric, profile=profile, answer_source=answer_source)
        with Path(path).open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                obj = json.loads(line)
                key = (obj["model_name"], obj["question_id"])
                if not result.metric:
                    result.metric = obj.get("metric", "")
                if obj["correct"] is None:
                    result.entries[key] = None
                    result.abstained += 1
                else:
                    result.entries[key] = Verdict(
                        bool(obj["correct"]),
                        obj.get("metric", result.metric),
                        obj.get("matched_answer"),
                        obj.get("detail"),
                    )
        return result


def _score_one(
    metric: str,
    prediction: ModelPrediction,
    record: EvalRecord,
    answers: list[str],
    profile: Optional[NormalizationProfile],
    client: Optional[LLMClient],
    f1_threshold: float,
) -> Optional[Verdict]:
    if metric == "soft_em":
        return scoring.soft_em(prediction.text, answers, profile or scoring.DEFAULT_SOFT_PROFILE)
    if metric == "hard_em":
        return scoring.hard_em(prediction.text, answers, profile or scoring.DEFAULT_HARD_PROFILE)
    if metric == "f1":
        return scoring.f1_verdict(
            prediction.text, answers, profile or scoring.DEFAULT_F1_PROFILE, f1_threshold
        )
    if metric == "judge":
        try:
            return scoring.llm_judge(record.question, answers, prediction.text, client)
        except UnparseableJudgeResponse:
            return None
    raise ValueError(f"unknown metric: {metric}")


def evaluate(
    records: list[EvalRecord],
    answer_source: Union[str, dict[str, list[str]]] = "original",
    metric: str = "soft_em",
    profile: Optional[NormalizationProfile] = None,
    client: Optional[LLMClient] = None,
    f1_threshold: float = 1.0,
) -> EvaluationResult:
    """Score every (model, question) pair with one metric.

    answer_source is either the literal "original" or a question_id ->
    expanded answers map; every record must resolve in the map.
    """
    if metric == "judge" and client is None:
        raise ValueError("judge metric needs a configured client")
    source_label = "original" if answer_source == "original" else "expanded"
    used_profile = profile or {
        "soft_em": scoring.DEFAULT_SOFT_PROFILE,
        "hard_em": scoring.DEFAULT_HARD_PROFILE,
        "f1": scoring.DEFAULT_F1_PROFILE,
        "judge": scoring.LIGHT,
    }[metric]
    result = EvaluationResult(
        metric=metric, profile=used_profile.describe(), answer_source=source_label
    )
    for record in records:
        if answer_source == "original":
            answers = record.gold
        else:
            if record.question_id not in answer_source:
                raise UnresolvedQuestionId(record.question_id)
            answers = answer_source[record.question_id]
        for prediction in record.predictions:
            verdict = _score_one(
                metric, prediction, record, answers, profile, client, f1_threshold
            )
            result.entries[(prediction.model_name, record.question_id)] = verdict
            if verdict is None:
                result.abstained += 1
    if client is not None:
        result.ledger = client.ledger.snapshot()
    return result


def _bucket_label(low: int, high: Optional[int]) -> str:
    if high is None:
        return f">{low - 1}"
    if low == high:
        return str(low)
    return f"{low}-{high}"


def _agreement(pairs: list[tuple[bool, bool]]) -> Optional[float]:
    if not pairs:
        return None
    return sum(1 for v, h in pairs if v == h) / len(pairs)


@dataclass
class ReliabilityReport:
    metric: str
    profile: str
    answer_source: str
    per_model: dict[str, float]
    average: float
    entity_groups: dict[str, Optional[float]]
    entity_group_counts: dict[str, int]
    rarity_buckets: dict[str, Optional[float]]
    rarity_bucket_counts: dict[str, int]
    surface_accuracy: dict[str, float]
    human_surface_accuracy: dict[str, float]
    ranking_order_matches_human: bool
    abstained: int
    ledger: dict
    pair_count: int

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "profile": self.profile,
            "answer_source": self.answer_source,
            "per_model": self.per_model,
            "average": self.average,
            "entity_groups": self.entity_groups,
            "entity_group_counts": self.entity_group_counts,
            "rarity_buckets": self.rarity_buckets,
            "rarity_bucket_counts": self.rarity_bucket_counts,
            "surface_accuracy": self.surface_accuracy,
            "human_surface_accuracy": self.human_surface_accuracy,
            "ranking_order_matches_human": self.ranking_order_matches_human,
            "abstained": self.abstained,
            "ledger": self.ledger,
            "pair_count": self.pair_count,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "ReliabilityReport":
        return cls(**{k: obj[k] for k in cls.__dataclass_fields__})


def _entity_group(t: EntityType) -> str:
    if t.numeric():
        return "Numeric"
    if t.non_numeric():
        return "Non-numeric"
    return "N/A"


def _ranking(values: dict[str, float]) -> list[str]:
    return sorted(values, key=lambda m: (-values[m], m))


def surface_accuracy(
    result: EvaluationResult, records: list[EvalRecord]
) -> tuple[dict[str, float], dict[str, float], bool]:
    """Fraction marked correct per model, same for humans, and whether the
    induced model ranking matches the human one (ties broken by name)."""
    metric_pairs: dict[str, list[bool]] = {}
    human_pairs: dict[str, list[bool]] = {}
    for record in records:
        for p in record.predictions:
            v = result.verdict(p.model_name, record.question_id)
            human_pairs.setdefault(p.model_name, []).append(p.human_label)
            if v is not None:
                metric_pairs.setdefault(p.model_name, []).append(v.correct)
    if len(human_pairs) < 2:
        raise ValueError("surface accuracy needs at least two models")
    metric_acc = {
        m: (sum(v) / len(v) if v else 0.0) for m, v in sorted(metric_pairs.items())
    }
    human_acc = {m: sum(v) / len(v) for m, v in sorted(human_pairs.items())}
    order_matches = _ranking(metric_acc) == _ranking(human_acc)
    return metric_acc, human_acc, order_matches


def reliability(
    result: EvaluationResult,
    records: list[EvalRecord],
    rarity_buckets=DEFAULT_RARITY_BUCKETS,
) -> ReliabilityReport:
    """Agreement with human verdicts, overall and broken down by entity
    group and rarity bucket. Abstained verdicts are excluded throughout."""
    per_model_pairs: dict[str, list[tuple[bool, bool]]] = {}
    group_pairs: dict[str, list[tuple[bool, bool]]] = {g: [] for g in ("Numeric", "Non-numeric", "N/A")}
    group_counts: dict[str, int] = {g: 0 for g in group_pairs}
    bucket_pairs: dict[str, list[tuple[bool, bool]]] = {
        _bucket_label(lo, hi): [] for lo, hi in rarity_buckets
    }
    bucket_counts: dict[str, int] = {label: 0 for label in bucket_pairs}

    for record in records:
        group = _entity_group(record.entity_type)
        group_counts[group] += 1
        bucket_label = None
        if record.rarity_docs is not None:
            for lo, hi in rarity_buckets:
                if record.rarity_docs >= lo and (hi is None or record.rarity_docs <= hi):
                    bucket_label = _bucket_label(lo, hi)
                    break
            if bucket_label is not None:
                bucket_counts[bucket_label] += 1
        for p in record.predictions:
            v = result.verdict(p.model_name, record.question_id)
            if v is None:
                continue
            pair = (v.correct, p.human_label)
            per_model_pairs.setdefault(p.model_name, []).append(pair)
            group_pairs[group].append(pair)
            if bucket_label is not None:
                bucket_pairs[bucket_label].append(pair)

    per_model = {
        m: _agreement(pairs) for m, pairs in sorted(per_model_pairs.items())
    }
    per_model = {m: v for m, v in per_model.items() if v is not None}
    average = sum(per_model.values()) / len(per_model) if per_model else 0.0
    metric_acc, human_acc, order_matches = surface_accuracy(result, records)
    return ReliabilityReport(
        metric=result.metric,
        profile=result.profile,
        answer_source=result.answer_source,
        per_model=per_model,
        average=average,
        entity_groups={g: _agreement(p) for g, p in group_pairs.items()},
        entity_group_counts=group_counts,
        rarity_buckets={b: _agreement(p) for b, p in bucket_pairs.items()},
        rarity_bucket_counts=bucket_counts,
        surface_accuracy=metric_acc,
        human_surface_accuracy=human_acc,
        ranking_order_matches_human=order_matches,
        abstained=result.abstained,
        ledger=result.ledger,
        pair_count=sum(len(p) for p in per_model_pairs.values()),
    )
