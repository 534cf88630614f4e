"""Answer-set expansion: prompt construction, response parsing, persistence.

Four methods: "rules" runs the deterministic surface-form generators
offline; the three "inst_*" methods prompt a completion model with zero,
random, or entity-matched few-shot exemplars and merge the parsed response
into the original answer set. Expansion only ever adds answers.
"""

from __future__ import annotations

import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from random import Random
from typing import Optional

from .banks import FewShotBank, get_bank
from .client import CompletionRequest, LLMClient
from .entity_types import EntityType, TypedQuestion
from .errors import ExpandemError, MissingBank, UnsupportedMethod
from .scoring import LIGHT, normalize
from .surface import rule_expand

INSTRUCTION = (
    "You are a given a question and a set of gold-standard reference answers "
    "(split with /) written by experts. Your task is to provide other forms of "
    "gold reference answers that can also be correct for the given question. "
    "Split your answers with /."
)

MAX_EXPANDED_ENTRY_LENGTH = 120
METHOD_NAMES = ("inst_zero", "inst_random", "inst_entity", "rules")


@dataclass(frozen=True)
class ExpansionMethod:
    name: str
    seed: Optional[int] = None

    def __post_init__(self):
        if self.name not in METHOD_NAMES:
            raise ValueError(f"unknown expansion method: {self.name}")
        if self.name == "inst_random" and self.seed is None:
            raise ValueError("inst_random needs an explicit seed")

    @property
    def uses_llm(self) -> bool:
        return self.name.startswith("inst_")

    def describe(self) -> str:
        if self.name == "inst_random":
            return f"inst_random(seed={self.seed})"
        return self.name

    @classmethod
    def parse(cls, text: str, seed: Optional[int] = None) -> "ExpansionMethod":
        name = text.strip().lower().replace("-", "_")
        m = re.fullmatch(r"inst_random\(seed=(\d+)\)", name)
        if m:
            return cls("inst_random", int(m.group(1)))
        if name == "inst_random":
            return cls(name, seed)
        return cls(name)


@dataclass
class ExpandedAnswerSet:
    question_id: str
    original: list[str]
    expanded: list[str]
    method: str
    entity_type: EntityType
    prompt_hash: str
    created_at: str
    notes: Optional[str] = None

    def to_json(self) -> str:
        obj = {
            "question_id": self.question_id,
            "original": self.original,
            "expanded": self.expanded,
            "method": self.method,
            "entity_type": self.entity_type.value,
            "prompt_hash": self.prompt_hash,
            "created_at": self.created_at,
        }
        if self.notes is not None:
            obj["notes"] = self.notes
        return json.dumps(obj, ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "ExpandedAnswerSet":
        obj = json.loads(line)
        entity_type = EntityType.from_tag(obj["entity_type"])
        return cls(
            question_id=obj["question_id"],
            original=list(obj["original"]),
            expanded=list(obj["expanded"]),
            method=obj["method"],
            entity_type=entity_type if entity_type is not None else EntityType.NA,
            prompt_hash=obj["prompt_hash"],
            created_at=obj["created_at"],
            notes=obj.get("notes"),
        )


ESCAPED_SLASH = "\\/"
_SPLIT_RE = re.compile(r"(?<!\\)/")


def join_answers(answers: list[str]) -> str:
    """Join with "/", escaping any literal slash inside an answer."""
    return "/".join(a.replace("/", ESCAPED_SLASH) for a in answers)


def split_answers(text: str) -> list[str]:
    return [p.replace(ESCAPED_SLASH, "/") for p in _SPLIT_RE.split(text)]


def _exemplar_block(question: str, answers: list[str]) -> str:
    return f"Question: {question}\nGold Answers: {join_answers(answers)}"


def build_prompt(
    method: ExpansionMethod,
    entity_type: EntityType,
    question: str,
    original: list[str],
    bank: FewShotBank,
) -> str:
    """Instruction + method-specific exemplars + the target question/answers."""
    if method.name == "rules":
        raise UnsupportedMethod("rules expansion does not build prompts")
    if not original:
        raise ValueError("original answer set is empty")
    blocks = [INSTRUCTION]
    if method.name == "inst_entity":
        exemplars = bank.exemplars_for(entity_type)
        blocks.extend(_exemplar_block(e.question, list(e.expanded_answers)) for e in exemplars)
    elif method.name == "inst_random":
        pool = bank.all_exemplars()
        picked = Random(method.seed).sample(pool, k=min(8, len(pool)))
        blocks.extend(_exemplar_block(e.question, list(e.expanded_answers)) for e in picked)
    blocks.append(_exemplar_block(question, original))
    return "\n\n".join(blocks)


def parse_expansion(response: str, original: Optional[list[str]] = None) -> list[str]:
    """Split a model response into candidate answers.

    Splits on unescaped "/", trims, drops empties and over-long entries,
    dedupes keeping first occurrence, and removes a leading echo of the
    original answer set when the model repeats it before continuing.
    """
    text = response.strip()
    if not text:
        return []
    if "/" not in text and "\n" in text:
        # Prose/list-shaped response: salvage by line before giving up.
        parts = [line.strip(" \t-*") for line in text.splitlines()]
    else:
        parts = split_answers(text)
    seen: set[str] = set()
    out: list[str] = []
    for part in parts:
        entry = part.strip()
        if not entry or len(entry) > MAX_EXPANDED_ENTRY_LENGTH:
            continue
        key = normalize(entry, LIGHT)
        if key in seen:
            continue
        seen.add(key)
        out.append(entry)
    if original:
        echo = [normalize(a, LIGHT) for a in original]
        head = [normalize(e, LIGHT) for e in out[: len(echo)]]
        if head == echo:
            out = out[len(echo):]
    return out


def _merge(original: list[str], extra: list[str]) -> list[str]:
    merged: list[str] = []
    seen: set[str] = set()
    for entry in list(original) + list(extra):
        key = normalize(entry, LIGHT)
        if not key or key in seen:
            continue
        seen.add(key)
        merged.append(entry)
    return merged


def _utc_now() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


def _expand_one(
    q: TypedQuestion,
    method: ExpansionMethod,
    client: Optional[LLMClient],
    bank: FewShotBank,
    cap: int,
    model_name: Optional[str],
) -> ExpandedAnswerSet:
    entity_type = q.entity_type if q.entity_type is not None else EntityType.NA
    if method.name == "rules":
        variants: list[str] = []
        for answer in q.gold_answers:
            variants.extend(rule_expand(answer, entity_type, cap=cap).entries)
        return ExpandedAnswerSet(
            question_id=q.question_id,
            original=list(q.gold_answers),
            expanded=_merge(q.gold_answers, variants),
            method=method.describe(),
            entity_type=entity_type,
            prompt_hash="",
            created_at=_utc_now(),
        )
    assert client is not None
    prompt = build_prompt(method, entity_type, q.question, q.gold_answers, bank)
    req = CompletionRequest(prompt=prompt, model_name=model_name or client.default_model)
    notes = None
    try:
        response = client.complete(req, phase="expansion")
        parsed = parse_expansion(response, original=q.gold_answers)
        if not parsed:
            notes = "empty-expansion"
        elif "/" not in response and "\n" in response.strip():
            notes = "salvaged-line-split"
    except ExpandemError as exc:
        parsed = []
        notes = f"error: {type(exc).__name__}: {exc}"
    return ExpandedAnswerSet(
        question_id=q.question_id,
        original=list(q.gold_answers),
        expanded=_merge(q.gold_answers, parsed),
        method=method.describe(),
        entity_type=entity_type,
        prompt_hash=req.request_hash(),
        created_at=_utc_now(),
        notes=notes,
    )


def expand_dataset(
    dataset: list[TypedQuestion],
    method: ExpansionMethod,
    client: Optional[LLMClient] = None,
    bank: Optional[FewShotBank] = None,
    cap: int = 16,
    model_name: Optional[str] = None,
) -> list[ExpandedAnswerSet]:
    """One ExpandedAnswerSet per question, in dataset order.

    LLM methods issue at most one completion per question (the client cache
    dedupes identical prompts); per-question failures keep the original set
    and carry the error in notes rather than aborting the run.
    """
    if method.uses_llm and client is None:
        raise ValueError(f"{method.describe()} needs a configured client")
    if bank is None:
        bank = get_bank("NQ")
    if method.uses_llm and client.max_concurrency > 1 and len(dataset) > 1:
        with ThreadPoolExecutor(max_workers=client.max_concurrency) as pool:
            results = list(
                pool.map(
                    lambda q: _expand_one(q, method, client, bank, cap, model_name),
                    dataset,
                )
            )
        return results
    return [_expand_one(q, method, client, bank, cap, model_name) for q in dataset]


def save_expanded(sets: list[ExpandedAnswerSet], path: str | Path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        for s in sets:
            fh.write(s.to_json() + "\n")


def load_expanded(path: str | Path) -> list[ExpandedAnswerSet]:
    out = []
    with Path(path).open(encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(ExpandedAnswerSet.from_json(line))
    return out


def expanded_answer_map(sets: list[ExpandedAnswerSet]) -> dict[str, list[str]]:
    return {s.question_id: s.expanded for s in sets}
