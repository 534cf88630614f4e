from __future__ import annotations

import re

import pytest

from expandem.client import LLMClient, TransportResult
from expandem.entity_types import EntityType
from expandem.harness import EvalRecord, ModelPrediction

# Each worked example: gold answer set, one QA-model prediction that a human
# would accept, and (for non-numeric types) the pinned mock expansion the
# fake LLM returns. Numeric rows flip through the rules expander alone.
WORKED_EXAMPLES = [
    {
        "question_id": "w01",
        "question": "how many episodes are in season 2 of the handmades tale",
        "gold": ["13"],
        "entity_type": EntityType.CARDINAL,
        "prediction": "The Season 2 of the Handmaid's Tale have thirteen episodes.",
    },
    {
        "question_id": "w02",
        "question": "when was ye rishta kya kehlata hai started",
        "gold": ["January 12, 2009"],
        "entity_type": EntityType.DATE,
        "prediction": "The Ye Rishta Kya Kehlata Hai started in 12 Jan., 2009.",
    },
    {
        "question_id": "w03",
        "question": "what's the population of fargo north dakota",
        "gold": ["120,762"],
        "entity_type": EntityType.CARDINAL,
        "prediction": "The population of Fargo, North Dakota is about 120,000.",
    },
    {
        "question_id": "w04",
        "question": "how long is the movie son of god",
        "gold": ["138 minutes"],
        "entity_type": EntityType.TIME,
        "prediction": "The movie Son of God is 2 hours and 18 minutes long.",
    },
    {
        "question_id": "w05",
        "question": "where was the ncaa football championship game played 2018",
        "gold": ["Atlanta, Georgia"],
        "entity_type": EntityType.GPE,
        "prediction": "The 2018 NCAA Football Championship Game was played in Atlanta, GA.",
        "mock_expansion": "Atlanta, GA/Atlanta/Georgia",
    },
    {
        "question_id": "w06",
        "question": "who played lionel in all in the family",
        "gold": ["Michael Evans"],
        "entity_type": EntityType.PERSON,
        "prediction": "Mike Evans played Lionel Jefferson in All in the Family.",
        "mock_expansion": "Mike Evans/Michael Jonas Evans/Evans",
    },
    {
        "question_id": "w07",
        "question": "the pectoralis minor is located deep to which muscle",
        "gold": ["beneath the pectoralis major"],
        "entity_type": EntityType.NA,
        "prediction": "under the pectoralis major muscle",
        "mock_expansion": "under the pectoralis major/the pectoralis major",
    },
    {
        "question_id": "w08",
        "question": "when was the 45th president of the united states born",
        "gold": ["June 14, 1946"],
        "entity_type": EntityType.DATE,
        "prediction": "He was born on 14 June, 1946 in Queens, New York City.",
    },
    {
        "question_id": "w09",
        "question": "who is the 46th president of the united states",
        "gold": ["Joe Biden"],
        "entity_type": EntityType.PERSON,
        "prediction": "Joseph Biden",
        "mock_expansion": "Joseph Biden/Joseph Robinette Biden Jr./Biden",
    },
    {
        "question_id": "w10",
        "question": "when was ye rishta kya kehlata hai first aired",
        "gold": ["January 12, 2009"],
        "entity_type": EntityType.DATE,
        "prediction": "The show started on 12 January 2009 on Star Plus.",
    },
    {
        "question_id": "w11",
        "question": "when did ye rishta kya kehlata hai premiere",
        "gold": ["January 12, 2009"],
        "entity_type": EntityType.DATE,
        "prediction": "It premiered on Jan. 12, 2009.",
    },
    {
        "question_id": "w12",
        "question": "when did ye rishta kya kehlata hai begin",
        "gold": ["January 12, 2009"],
        "entity_type": EntityType.DATE,
        "prediction": "It began airing on January 12th, 2009.",
    },
    {
        "question_id": "w13",
        "question": "what is the runtime of son of god",
        "gold": ["138 minutes"],
        "entity_type": EntityType.TIME,
        "prediction": "The runtime of Son of God is 138 mins.",
    },
    {
        "question_id": "w14",
        "question": "how long does son of god run",
        "gold": ["138 minutes"],
        "entity_type": EntityType.TIME,
        "prediction": "The film runs for 2hrs and 18 mins.",
    },
]

_TARGET_QUESTION_RE = re.compile(r"Question: (.+)\nGold Answers: [^\n]*$")


def target_question(prompt: str) -> str | None:
    """Pull the target question off the end of an expansion prompt."""
    m = _TARGET_QUESTION_RE.search(prompt)
    return m.group(1) if m else None


def canned_transport(by_question: dict[str, str], default: str = "no idea"):
    """Transport stub keyed by the prompt's target question."""

    def transport(req):
        key = target_question(req.prompt)
        text = by_question.get(key, default) if key is not None else default
        return TransportResult(text=text, prompt_tokens=100, completion_tokens=20)

    return transport


def make_mock_client(
    by_question: dict[str, str] | None = None, default: str = "no idea", **kwargs
) -> LLMClient:
    return LLMClient(
        mode="live",
        transport=canned_transport(by_question or {}, default=default),
        **kwargs,
    )


@pytest.fixture
def worked_records() -> list[EvalRecord]:
    # ExampleQA answers with the illustrative sentence; BaselineQA echoes the
    # gold answer so the corpus has a second model for ranking checks.
    return [
        EvalRecord(
            question_id=ex["question_id"],
            question=ex["question"],
            gold=list(ex["gold"]),
            entity_type=ex["entity_type"],
            predictions=[
                ModelPrediction("ExampleQA", ex["prediction"], True),
                ModelPrediction("BaselineQA", ex["gold"][0], True),
            ],
        )
        for ex in WORKED_EXAMPLES
    ]


@pytest.fixture
def mock_expansion_client() -> LLMClient:
    by_question = {
        ex["question"]: ex["mock_expansion"]
        for ex in WORKED_EXAMPLES
        if "mock_expansion" in ex
    }
    return make_mock_client(by_question)
