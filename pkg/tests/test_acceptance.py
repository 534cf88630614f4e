"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with -s to see them while the suite is green)."""

from __future__ import annotations

import json
import random
import re
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import pytest

from conftest import WORKED_EXAMPLES, make_mock_client
from expandem import cli
from expandem.client import TranscriptStore
from expandem.entity_types import EntityType, TypedQuestion
from expandem.expansion import ExpansionMethod, expand_dataset, expanded_answer_map
from expandem.harness import (
    EvalRecord,
    EvaluationResult,
    ModelPrediction,
    evaluate,
    records_to_questions,
    reliability,
    save_records,
    surface_accuracy,
)
from expandem.numwords import number_to_words, words_to_number
from expandem.scoring import (
    LIGHT,
    SQUAD,
    NormalizationProfile,
    Verdict,
    f1,
    hard_em,
    soft_em,
)
from expandem.surface import ParsedDate, expand_date, expand_number, parse_numeric
from expandem.surface import ParsedNumber


@contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE FAIL: {name}")
        raise
    print(f"ACCEPTANCE PASS: {name}")


def test_worked_example_fixture(worked_records, mock_expansion_client):
    """>=12 illustrative items: incorrect with original sets, correct after
    rules (numeric) or pinned mock-LLM (non-numeric) expansion."""
    with criterion("worked-example fixture flips from incorrect to correct"):
        started = time.perf_counter()
        records = worked_records
        assert len(records) >= 12

        original = evaluate(records, metric="soft_em")
        for record in records:
            verdict = original.verdict("ExampleQA", record.question_id)
            assert not verdict.correct, f"{record.question_id} already correct"

        questions = records_to_questions(records)
        numeric = [q for q in questions if q.entity_type.numeric()]
        other = [q for q in questions if not q.entity_type.numeric()]
        expanded_sets = expand_dataset(numeric, ExpansionMethod("rules"))
        expanded_sets += expand_dataset(
            other, ExpansionMethod("inst_entity"), client=mock_expansion_client
        )
        expanded = expanded_answer_map(expanded_sets)
        flipped = evaluate(records, answer_source=expanded, metric="soft_em")
        for record in records:
            verdict = flipped.verdict("ExampleQA", record.question_id)
            assert verdict.correct, f"{record.question_id} did not flip"
            assert verdict.matched_answer in expanded[record.question_id]
        assert time.perf_counter() - started < 1.0


_POOL = [
    "the", "a", "13", "thirteen", "2009", "atlanta", "georgia", "ga", "june",
    "14,", "1946", "jan", "biden", "movie", "minutes", "138", "mins", "about",
    "120,000", "%", "42%", "paris",
]
_PROFILES = [
    LIGHT, SQUAD,
    NormalizationProfile("light", "substring"),
    NormalizationProfile("squad", "substring"),
]


def _phrase(rng: random.Random, n_min=1, n_max=5) -> str:
    return " ".join(rng.choices(_POOL, k=rng.randint(n_min, n_max)))


def test_monotonicity_suite():
    """1,000 randomized (prediction, set, superset) triples: growing the
    answer set never flips correct to incorrect."""
    with criterion("soft/hard EM monotone in the answer set (1000 triples)"):
        rng = random.Random(20240111)
        flips = 0
        correct_seen = 0
        for _ in range(1000):
            answers = [_phrase(rng) for _ in range(rng.randint(1, 3))]
            if rng.random() < 0.5:
                # embed a gold answer so the correct branch is exercised
                prediction = f"{_phrase(rng, 0, 2)} {rng.choice(answers)} {_phrase(rng, 0, 2)}".strip()
            else:
                prediction = _phrase(rng, 1, 6)
            superset = answers + [_phrase(rng) for _ in range(rng.randint(1, 3))]
            profile = rng.choice(_PROFILES)
            for metric in (soft_em, hard_em):
                small = metric(prediction, answers, profile).correct
                large = metric(prediction, superset, profile).correct
                correct_seen += small
                if small and not large:
                    flips += 1
        assert flips == 0
        assert correct_seen > 100  # the suite actually exercised the correct branch


def test_implication_chain():
    """1,000 randomized pairs: hard EM correct => soft EM correct and F1 == 1.0
    under a shared profile."""
    with criterion("hard EM implies soft EM and F1 == 1.0 (1000 pairs)"):
        rng = random.Random(20240222)
        hard_hits = 0
        for _ in range(1000):
            answers = [_phrase(rng) for _ in range(rng.randint(1, 3))]
            if rng.random() < 0.5:
                gold = rng.choice(answers)
                prediction = gold.upper() if rng.random() < 0.5 else f" {gold} "
            else:
                prediction = _phrase(rng, 1, 6)
            profile = rng.choice(_PROFILES)
            if hard_em(prediction, answers, profile).correct:
                hard_hits += 1
                assert soft_em(prediction, answers, profile).correct
                assert f1(prediction, answers, profile) == 1.0
        assert hard_hits > 100


def test_surface_forms_oracle():
    """Exhaustive word round trip, 500 random date round trips, and exact
    duration arithmetic, within 10 seconds."""
    with criterion("surface-forms oracle (words, dates, durations)"):
        started = time.perf_counter()
        for n in range(0, 10000):
            assert words_to_number(number_to_words(n)) == n

        rng = random.Random(20240333)
        checked = 0
        while checked < 500:
            year = rng.choice([None, rng.randint(1000, 2999)])
            month = rng.randint(1, 12)
            shape = rng.choice(["ymd", "ym", "y", "md"])
            if shape == "y" and year is None:
                continue
            import calendar

            if shape in ("ymd", "md"):
                cap = calendar.monthrange(year, month)[1] if year else 28
                day = rng.randint(1, cap)
            else:
                day = None
            d = ParsedDate(
                year if "y" in shape else None,
                month if "m" in shape else None,
                day,
            )
            for variant in expand_date(d):
                parsed = parse_numeric(variant)
                assert isinstance(parsed, ParsedDate), variant
                assert parsed.agrees_with(d), (d, variant)
            checked += 1

        compound = re.compile(r"^(\d+)\s?(?:hours?|hrs?) and (\d+) (?:minutes?|mins?)$")
        for minutes in rng.sample(range(61, 6000), 200) + [138, 152, 61, 90]:
            variants = expand_number(ParsedNumber(Fraction(minutes), "duration", unit="minute"))
            matches = [compound.match(v) for v in variants.entries]
            matches = [m for m in matches if m]
            if minutes % 60 != 0:
                assert matches, minutes
            for m in matches:
                assert 60 * int(m.group(1)) + int(m.group(2)) == minutes
        elapsed = time.perf_counter() - started
        assert elapsed < 10.0, f"oracle took {elapsed:.1f}s"


def test_f1_derived_value():
    """Hand token-count oracle: overlap 3, precision 3/5, recall 3/4 -> 2/3."""
    with criterion("F1 of the contextual-paraphrase example equals 2/3"):
        value = f1(
            "under the pectoralis major muscle",
            ["beneath the pectoralis major"],
            LIGHT,
        )
        assert abs(value - 2 / 3) < 1e-9


def _synthetic_questions(n: int) -> list[TypedQuestion]:
    golds = [
        ("January 12, 2009", EntityType.DATE),
        ("138 minutes", EntityType.TIME),
        ("120,762", EntityType.CARDINAL),
        ("$5 million", EntityType.MONEY),
        ("42%", EntityType.PERCENT),
        ("Gary Oldman", EntityType.PERSON),
    ]
    out = []
    for i in range(n):
        gold, etype = golds[i % len(golds)]
        out.append(TypedQuestion(f"s{i:05d}", f"synthetic question {i}", [gold], etype))
    return out


def _records_from(questions: list[TypedQuestion], models: int = 5) -> list[EvalRecord]:
    records = []
    for q in questions:
        predictions = [
            ModelPrediction(f"model{m}", f"model{m} says {q.gold_answers[0]}", True)
            for m in range(models)
        ]
        records.append(
            EvalRecord(q.question_id, q.question, list(q.gold_answers), q.entity_type,
                       predictions=predictions)
        )
    return records


def test_ledger_claim():
    """One-time expansion cost: 3,020 calls to expand, zero evaluation calls
    across five lexical metric runs; judge evaluation costs 3,020 x 5."""
    with criterion("inference-call ledger: 3020 expansion, 0 lexical, 15100 judge"):
        questions = _synthetic_questions(3020)
        records = _records_from(questions, models=5)

        client = make_mock_client(default="alpha/beta")
        expand_dataset(questions, ExpansionMethod("inst_entity"), client=client)
        assert client.ledger.calls["expansion"] == 3020
        assert client.ledger.calls["evaluation"] == 0

        for metric, profile in (
            ("soft_em", None), ("hard_em", None), ("f1", None),
            ("soft_em", SQUAD), ("f1", LIGHT),
        ):
            evaluate(records, metric=metric, profile=profile)
        assert client.ledger.calls == {"expansion": 3020, "evaluation": 0}

        judge_client = make_mock_client(default="Correct")
        evaluate(records, metric="judge", client=judge_client)
        assert judge_client.ledger.calls["evaluation"] == 3020 * 5
        assert judge_client.ledger.calls["expansion"] == 0


def test_reliability_oracle():
    """20 hand-labeled pairs with pinned verdicts: 17/20 -> 0.85, and the
    ranking-order booleans behave as constructed."""
    with criterion("reliability oracle: 17/20 agreements -> 0.85 + order checks"):
        from test_harness import pinned_records

        records = pinned_records()
        result = evaluate(records, metric="soft_em")
        report = reliability(result, records)
        assert report.per_model == {"modelA": 0.8, "modelB": 0.9}
        assert report.average == pytest.approx(0.85)
        assert report.ranking_order_matches_human is True

        inverted = EvaluationResult("mock", "light", "original")
        for r in records:
            for p in r.predictions:
                inverted.entries[(p.model_name, r.question_id)] = Verdict(
                    p.model_name == "modelA", "mock"
                )
        _, _, order = surface_accuracy(inverted, records)
        assert order is False


def _replay_pipeline(corpus: Path, transcript: Path, workdir: Path) -> Path:
    expanded = workdir / "expanded.jsonl"
    verdicts = workdir / "verdicts.jsonl"
    rel = workdir / "reliability.json"
    report_dir = workdir / "report"
    for argv in (
        ["replay", "--dataset", corpus, "--method", "inst-entity",
         "--transcript", transcript, "--out", expanded],
        ["evaluate", "--dataset", corpus, "--expanded", expanded,
         "--metric", "soft-em", "--out", verdicts],
        ["reliability", "--dataset", corpus, "--verdicts", verdicts,
         "--answer-source", "expanded", "--out", rel],
        ["report", "--reliability", rel, "--dataset", corpus, "--out", report_dir],
    ):
        assert cli.main([str(a) for a in argv]) == 0
    return workdir


def test_replay_determinism(tmp_path, worked_records):
    """The full pipeline in replay mode twice produces byte-identical
    reports (verdicts, reliability, and every rendered report file)."""
    with criterion("replay-mode pipeline is byte-deterministic"):
        corpus = tmp_path / "corpus.jsonl"
        save_records(worked_records, corpus)
        transcript = tmp_path / "transcript.jsonl"
        by_question = {
            ex["question"]: ex.get("mock_expansion", "other form/another form")
            for ex in WORKED_EXAMPLES
        }
        recorder = make_mock_client(by_question, store=TranscriptStore(transcript))
        recorder.mode = "record"
        expand_dataset(
            records_to_questions(worked_records), ExpansionMethod("inst_entity"),
            client=recorder,
        )

        first = _replay_pipeline(corpus, transcript, tmp_path / "run1")
        second = _replay_pipeline(corpus, transcript, tmp_path / "run2")
        compared = 0
        for name in ("verdicts.jsonl", "reliability.json"):
            assert (first / name).read_bytes() == (second / name).read_bytes(), name
            compared += 1
        for path in sorted((first / "report").iterdir()):
            if path.name == "run_config.json":  # records the differing out paths
                continue
            assert path.read_bytes() == (second / "report" / path.name).read_bytes(), path.name
            compared += 1
        assert compared >= 10


def test_scale_smoke():
    """Rules expansion plus soft EM over a 3,020-record synthetic dataset in
    under 60 seconds."""
    with criterion("scale smoke: 3020 records expanded and scored < 60 s"):
        questions = _synthetic_questions(3020)
        records = _records_from(questions, models=5)
        started = time.perf_counter()
        expanded = expanded_answer_map(expand_dataset(questions, ExpansionMethod("rules")))
        result = evaluate(records, answer_source=expanded, metric="soft_em")
        elapsed = time.perf_counter() - started
        assert len(result.entries) == 3020 * 5
        assert all(v.correct for v in result.entries.values())
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


SIDECAR_MAIN = Path(__file__).resolve().parents[1] / "sidecar" / "dist" / "main.js"

# PERSON/GPE/ORG/N-A answers drawn from the shipped few-shot banks.
SIDECAR_FIXTURE = [
    ("Gary Oldman", "PERSON"),
    ("Tom Hanks", "PERSON"),
    ("Ellen Degeneres", "PERSON"),
    ("Atlanta, Georgia", "GPE"),
    ("Toronto, Canada", "GPE"),
    ("Alaska", "GPE"),
    ("New York Yankees", "ORG"),
    ("Red Cross", "ORG"),
    ("FIFA", "ORG"),
    ("beneath the pectoralis major", "N/A"),
]


@pytest.mark.skipif(not SIDECAR_MAIN.exists(), reason="sidecar not built")
def test_sidecar_contract():
    """10-answer fixture tags pin PERSON/GPE/ORG/N-A through the sidecar."""
    with criterion("sidecar contract: 10-answer fixture produces pinned tags"):
        import subprocess

        payload = "".join(
            json.dumps({"question_id": f"s{i}", "answers": [answer]}) + "\n"
            for i, (answer, _) in enumerate(SIDECAR_FIXTURE)
        )
        proc = subprocess.run(
            ["node", str(SIDECAR_MAIN)], input=payload, capture_output=True,
            text=True, timeout=120,
        )
        assert proc.returncode == 0, proc.stderr
        lines = [json.loads(l) for l in proc.stdout.strip().splitlines()]
        assert len(lines) == len(SIDECAR_FIXTURE)
        got = {l["question_id"]: l["tag"] for l in lines}
        for i, (answer, expected) in enumerate(SIDECAR_FIXTURE):
            assert got[f"s{i}"] == expected, (answer, got[f"s{i}"])


def test_primary_suite_passes_without_sidecar(tmp_path, worked_records):
    """Rule-typer fallback keeps the pipeline alive when no sidecar exists."""
    with criterion("sidecar absent: rule-typer fallback typing succeeds"):
        corpus = tmp_path / "corpus.jsonl"
        save_records(worked_records, corpus)
        out = tmp_path / "typed.jsonl"
        code = cli.main([
            "type", "--dataset", str(corpus), "--out", str(out),
            "--tagger", "sidecar", "--sidecar-cmd", "/definitely/not/here",
        ])
        assert code == 0
        assert out.exists()
