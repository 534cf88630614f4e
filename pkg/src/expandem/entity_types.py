"""Entity categories for gold answers and the taggers that assign them.

Answers are sorted into 19 categories: 18 named-entity classes plus N/A as
the catch-all. The category of a question's gold answers decides which
expansion strategy applies downstream. Three taggers are supported: a
built-in rule typer (numeric classes only), a pre-computed external tag
file, and a subprocess sidecar speaking JSON-lines.
"""

from __future__ import annotations

import json
import subprocess
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional

from .errors import (
    DuplicateQuestionId,
    EmptyAnswerSet,
    MalformedLine,
    TaggerUnavailable,
)
from . import patterns


class EntityType(Enum):
    DATE = "DATE"
    CARDINAL = "CARDINAL"
    QUANTITY = "QUANTITY"
    ORDINAL = "ORDINAL"
    MONEY = "MONEY"
    PERCENT = "PERCENT"
    TIME = "TIME"
    PERSON = "PERSON"
    GPE = "GPE"
    ORG = "ORG"
    NORP = "NORP"
    LOC = "LOC"
    WORK_OF_ART = "WORK_OF_ART"
    FAC = "FAC"
    PRODUCT = "PRODUCT"
    EVENT = "EVENT"
    LAW = "LAW"
    LANGUAGE = "LANGUAGE"
    NA = "N/A"

    def numeric(self) -> bool:
        return self in NUMERIC_TYPES

    def non_numeric(self) -> bool:
        return self in NON_NUMERIC_TYPES

    @classmethod
    def from_tag(cls, tag: str) -> Optional["EntityType"]:
        """Decode a tag name; returns None for unknown strings."""
        tag = tag.strip()
        if tag in ("N/A", "NA", "Unknown"):
            return cls.NA
        try:
            return cls[tag]
        except KeyError:
            return None


NUMERIC_TYPES = frozenset(
    {
        EntityType.TIME,
        EntityType.MONEY,
        EntityType.QUANTITY,
        EntityType.PERCENT,
        EntityType.CARDINAL,
        EntityType.DATE,
        EntityType.ORDINAL,
    }
)

NON_NUMERIC_TYPES = frozenset(
    {
        EntityType.PERSON,
        EntityType.GPE,
        EntityType.ORG,
        EntityType.NORP,
        EntityType.LOC,
        EntityType.WORK_OF_ART,
        EntityType.FAC,
        EntityType.PRODUCT,
        EntityType.EVENT,
        EntityType.LAW,
        EntityType.LANGUAGE,
    }
)


@dataclass
class TypedQuestion:
    """One question with its gold answers and (once assigned) entity type."""

    question_id: str
    question: str
    gold_answers: list[str]
    entity_type: Optional[EntityType] = None
    type_source: Optional[str] = None  # "rule" | "external" | "override"


def rule_type(answer: str) -> EntityType:
    """Type a single answer by surface pattern alone.

    Precedence: PERCENT > MONEY > TIME > DATE > ORDINAL > QUANTITY >
    CARDINAL, falling back to NA. Non-numeric classes are never produced
    here; they need the external tagger.
    """
    text = answer.strip()
    if not text:
        return EntityType.NA
    if patterns.PERCENT_RE.match(text):
        return EntityType.PERCENT
    if patterns.MONEY_RE.match(text):
        return EntityType.MONEY
    if patterns.TIME_RE.match(text):
        return EntityType.TIME
    if patterns.DATE_RE.match(text):
        return EntityType.DATE
    if patterns.ORDINAL_RE.match(text):
        return EntityType.ORDINAL
    if patterns.QUANTITY_RE.match(text):
        return EntityType.QUANTITY
    if patterns.CARDINAL_RE.match(text):
        return EntityType.CARDINAL
    return EntityType.NA


def aggregate_tags(tags: list[EntityType]) -> EntityType:
    """Majority vote over per-answer tags; ties go to the first answer's tag."""
    if not tags:
        return EntityType.NA
    counts = Counter(tags)
    best = max(counts.values())
    winners = {t for t, c in counts.items() if c == best}
    for t in tags:
        if t in winners:
            return t
    return EntityType.NA


class RuleTagger:
    """Offline tagger built on rule_type; always available."""

    name = "rule"

    def tag(self, question_id: str, answers: list[str]) -> EntityType:
        return aggregate_tags([rule_type(a) for a in answers])


class ExternalTypeMap:
    """Question-level tags loaded from a JSON-lines sidecar output file."""

    def __init__(self, tags: dict[str, EntityType], unknown_tag_count: int = 0):
        self.tags = tags
        self.unknown_tag_count = unknown_tag_count

    def __getitem__(self, question_id: str) -> EntityType:
        return self.tags[question_id]

    def __contains__(self, question_id: str) -> bool:
        return question_id in self.tags

    def __len__(self) -> int:
        return len(self.tags)


def load_external_types(path: str | Path) -> ExternalTypeMap:
    """Read {question_id, tag} JSON lines into a question -> type map.

    Unknown tag strings map to NA and bump the warning count; duplicate ids
    and malformed lines raise.
    """
    path = Path(path)
    if not path.exists():
        raise TaggerUnavailable(f"external type file not found: {path}")
    tags: dict[str, EntityType] = {}
    unknown = 0
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                qid = obj["question_id"]
                raw_tag = obj["tag"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise MalformedLine(line_no, str(exc)) from exc
            if qid in tags:
                raise DuplicateQuestionId(qid)
            tag = EntityType.from_tag(str(raw_tag))
            if tag is None:
                tag = EntityType.NA
                unknown += 1
            tags[qid] = tag
    return ExternalTypeMap(tags, unknown)


class ExternalTagger:
    """Tagger backed by a pre-computed external type map."""

    name = "external"

    def __init__(self, type_map: ExternalTypeMap):
        self.type_map = type_map
        self.miss_count = 0

    def tag(self, question_id: str, answers: list[str]) -> EntityType:
        if question_id in self.type_map:
            return self.type_map[question_id]
        self.miss_count += 1
        return EntityType.NA


class SidecarTagger:
    """Tagger that pipes answers through a subprocess speaking JSON-lines.

    The sidecar reads {question_id, answers} lines on stdin and writes
    {question_id, tag} lines on stdout, one per well-formed input line.
    """

    name = "external"

    def __init__(self, command: list[str]):
        self.command = command
        self._cache: dict[str, EntityType] = {}

    def tag_batch(self, questions: Iterable[TypedQuestion]) -> dict[str, EntityType]:
        payload = "".join(
            json.dumps({"question_id": q.question_id, "answers": q.gold_answers}) + "\n"
            for q in questions
        )
        try:
            proc = subprocess.run(
                self.command,
                input=payload,
                capture_output=True,
                text=True,
                check=False,
            )
        except (FileNotFoundError, PermissionError) as exc:
            raise TaggerUnavailable(f"sidecar command failed to start: {exc}") from exc
        if proc.returncode != 0:
            raise TaggerUnavailable(
                f"sidecar exited with {proc.returncode}: {proc.stderr.strip()[:200]}"
            )
        out: dict[str, EntityType] = {}
        for line in proc.stdout.splitlines():
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            tag = EntityType.from_tag(str(obj.get("tag", "")))
            out[obj["question_id"]] = tag if tag is not None else EntityType.NA
        self._cache.update(out)
        return out

    def tag(self, question_id: str, answers: list[str]) -> EntityType:
        if question_id not in self._cache:
            self.tag_batch([TypedQuestion(question_id, "", list(answers))])
        if question_id not in self._cache:
            raise TaggerUnavailable(f"sidecar returned no tag for {question_id}")
        return self._cache[question_id]


def classify(question: TypedQuestion, tagger) -> EntityType:
    """Assign one entity type to a question from its gold answers."""
    if not question.gold_answers or not any(a.strip() for a in question.gold_answers):
        raise EmptyAnswerSet(f"question {question.question_id} has no gold answers")
    return tagger.tag(question.question_id, question.gold_answers)


def type_dataset(
    questions: list[TypedQuestion],
    tagger,
    overrides: Optional[ExternalTypeMap] = None,
) -> list[TypedQuestion]:
    """Type every question in place; per-question overrides beat the tagger."""
    if isinstance(tagger, SidecarTagger):
        pending = [
            q for q in questions if overrides is None or q.question_id not in overrides
        ]
        if pending:
            tagger.tag_batch(pending)
    for q in questions:
        if overrides is not None and q.question_id in overrides:
            q.entity_type = overrides[q.question_id]
            q.type_source = "override"
        else:
            q.entity_type = classify(q, tagger)
            q.type_source = tagger.name
    return questions
