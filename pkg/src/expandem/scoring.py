"""Lexical QA metrics (soft EM, hard EM, token F1) and the LLM judge.

Every metric returns a Verdict that names the gold entry it matched, so a
correct/incorrect decision can always be traced back to a specific answer.
"""

from __future__ import annotations

import hashlib
import re
import string
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .client import CompletionRequest, LLMClient
from .errors import EmptyAnswerSet, UnparseableJudgeResponse

_ARTICLES_RE = re.compile(r"\b(a|an|the)\b")
_PUNCT_TABLE = str.maketrans("", "", string.punctuation)


@dataclass(frozen=True)
class NormalizationProfile:
    """How both sides of a comparison are canonicalized before matching.

    mode "light" lowercases and collapses whitespace; "squad" additionally
    strips punctuation and the articles a/an/the. containment selects how
    soft EM looks for a gold answer inside the prediction.
    """

    mode: str = "light"  # "light" | "squad"
    containment: str = "token_boundary"  # "token_boundary" | "substring"

    def describe(self) -> str:
        return f"{self.mode}/{self.containment}"


LIGHT = NormalizationProfile("light", "token_boundary")
SQUAD = NormalizationProfile("squad", "token_boundary")

# Defaults per metric: containment matching wants punctuation kept so that
# e.g. "Jan., 2009" only matches itself; equality/overlap metrics follow the
# usual reading-comprehension normalization.
DEFAULT_SOFT_PROFILE = LIGHT
DEFAULT_HARD_PROFILE = SQUAD
DEFAULT_F1_PROFILE = SQUAD


@dataclass
class Verdict:
    correct: bool
    metric: str
    matched_answer: Optional[str] = None
    detail: Optional[str] = None


def normalize(text: str, profile: NormalizationProfile = LIGHT) -> str:
    out = text.lower()
    if profile.mode == "squad":
        out = out.translate(_PUNCT_TABLE)
        out = _ARTICLES_RE.sub(" ", out)
    return " ".join(out.split())


def tokens(text: str, profile: NormalizationProfile) -> list[str]:
    return normalize(text, profile).split()


def _boundary_contains(haystack: str, needle: str) -> bool:
    """True when needle occurs in haystack starting and ending on a token
    boundary (no alphanumeric character directly adjacent on either side)."""
    start = 0
    while True:
        idx = haystack.find(needle, start)
        if idx < 0:
            return False
        before_ok = idx == 0 or not (haystack[idx - 1].isalnum() and needle[0].isalnum())
        end = idx + len(needle)
        after_ok = end == len(haystack) or not (
            haystack[end].isalnum() and needle[-1].isalnum()
        )
        if before_ok and after_ok:
            return True
        start = idx + 1


def contains(prediction: str, gold: str, profile: NormalizationProfile) -> bool:
    """Containment of a normalized gold answer inside a normalized prediction."""
    pred = normalize(prediction, profile)
    need = normalize(gold, profile)
    if not pred or not need:
        return False
    if profile.containment == "substring":
        return need in pred
    return _boundary_contains(pred, need)


def soft_em(
    prediction: str,
    answers: list[str],
    profile: NormalizationProfile = DEFAULT_SOFT_PROFILE,
) -> Verdict:
    """Correct iff the prediction contains some gold answer."""
    if not answers:
        raise EmptyAnswerSet("soft_em needs at least one gold answer")
    for gold in answers:
        if contains(prediction, gold, profile):
            return Verdict(True, "soft_em", matched_answer=gold)
    return Verdict(False, "soft_em")


def hard_em(
    prediction: str,
    answers: list[str],
    profile: NormalizationProfile = DEFAULT_HARD_PROFILE,
) -> Verdict:
    """Correct iff the normalized prediction equals some normalized gold."""
    if not answers:
        raise EmptyAnswerSet("hard_em needs at least one gold answer")
    pred = normalize(prediction, profile)
    if pred:
        for gold in answers:
            if normalize(gold, profile) == pred:
                return Verdict(True, "hard_em", matched_answer=gold)
    return Verdict(False, "hard_em")


def f1(
    prediction: str,
    answers: list[str],
    profile: NormalizationProfile = DEFAULT_F1_PROFILE,
) -> float:
    """Best token-multiset F1 over the gold answers."""
    if not answers:
        raise EmptyAnswerSet("f1 needs at least one gold answer")
    pred_tokens = tokens(prediction, profile)
    best = 0.0
    for gold in answers:
        gold_tokens = tokens(gold, profile)
        if not pred_tokens or not gold_tokens:
            continue
        overlap = sum((Counter(pred_tokens) & Counter(gold_tokens)).values())
        if overlap == 0:
            continue
        precision = overlap / len(pred_tokens)
        recall = overlap / len(gold_tokens)
        best = max(best, 2 * precision * recall / (precision + recall))
    return best


def f1_verdict(
    prediction: str,
    answers: list[str],
    profile: NormalizationProfile = DEFAULT_F1_PROFILE,
    threshold: float = 1.0,
) -> Verdict:
    """Boolean view of F1 for reliability runs (default: only 1.0 counts)."""
    score = f1(prediction, answers, profile)
    matched = None
    if score >= threshold:
        for gold in answers:
            if f1(prediction, [gold], profile) >= threshold:
                matched = gold
                break
    return Verdict(score >= threshold, "f1_threshold", matched_answer=matched, detail=f"{score:.6f}")


def judge_template() -> str:
    return resources.files("expandem").joinpath("templates/judge.txt").read_text(encoding="utf-8")


def judge_template_hash() -> str:
    return hashlib.sha256(judge_template().encode("utf-8")).hexdigest()


_YES_TOKENS = {"correct", "yes", "true", "right"}
_NO_TOKENS = {"incorrect", "no", "false", "wrong"}


def llm_judge(
    question: str,
    answers: list[str],
    prediction: str,
    client: LLMClient,
    model_name: Optional[str] = None,
) -> Verdict:
    """Ask the completion model to rate the prediction; one call per pair."""
    if not answers:
        raise EmptyAnswerSet("llm_judge needs at least one gold answer")
    prompt = judge_template().format(
        question=question,
        answers=" / ".join(answers),
        prediction=prediction,
    )
    req = CompletionRequest(prompt=prompt, model_name=model_name or client.default_model)
    response = client.complete(req, phase="evaluation")
    word_match = re.search(r"[A-Za-z]+", response)
    word = word_match.group(0).lower() if word_match else ""
    if word in _YES_TOKENS:
        return Verdict(True, "llm_judge", detail=response.strip())
    if word in _NO_TOKENS:
        return Verdict(False, "llm_judge", detail=response.strip())
    raise UnparseableJudgeResponse(response)
