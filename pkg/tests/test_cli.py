from __future__ import annotations

import json
from pathlib import Path

import pytest

from conftest import WORKED_EXAMPLES, make_mock_client
from expandem import cli
from expandem.client import TranscriptStore
from expandem.expansion import ExpansionMethod, expand_dataset
from expandem.harness import load_records, records_to_questions, save_records

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def corpus(tmp_path, worked_records) -> Path:
    path = tmp_path / "corpus.jsonl"
    save_records(worked_records, path)
    return path


def run(argv) -> int:
    return cli.main([str(a) for a in argv])


class TestUsage:
    def test_unknown_flag_exits_2(self, capsys):
        assert run(["evaluate", "--no-such-flag"]) == 2

    def test_unknown_subcommand_exits_2(self):
        assert run(["frobnicate"]) == 2

    def test_missing_file_is_data_error(self, tmp_path):
        assert run(["evaluate", "--dataset", tmp_path / "none.jsonl",
                    "--out", tmp_path / "v.jsonl"]) == 3


class TestType:
    def test_rule_typing_evouna(self, tmp_path, capsys):
        out = tmp_path / "typed.jsonl"
        assert run(["type", "--dataset", DATA / "mini_evouna.json", "--out", out]) == 0
        records = load_records(out)
        assert len(records) == 3
        by_id = {r.question_id: r for r in records}
        assert by_id["mini_evouna-00001"].entity_type.value == "CARDINAL"
        assert by_id["nq-0003"].entity_type.value == "DATE"
        assert (out.parent / "run_config.json").exists()

    def test_sidecar_absent_falls_back_to_rule(self, tmp_path, capsys):
        out = tmp_path / "typed.jsonl"
        code = run(["type", "--dataset", DATA / "mini_evouna.json", "--out", out,
                    "--tagger", "sidecar", "--sidecar-cmd", "/nonexistent/sidecar"])
        assert code == 0
        assert "falling back" in capsys.readouterr().err
        assert len(load_records(out)) == 3

    def test_override_file_wins(self, tmp_path):
        overrides = tmp_path / "overrides.jsonl"
        overrides.write_text(
            json.dumps({"question_id": "nq-0003", "tag": "PERSON"}) + "\n", encoding="utf-8"
        )
        out = tmp_path / "typed.jsonl"
        run(["type", "--dataset", DATA / "mini_evouna.json", "--out", out,
             "--overrides", overrides])
        by_id = {r.question_id: r for r in load_records(out)}
        assert by_id["nq-0003"].entity_type.value == "PERSON"

    def test_external_type_file(self, tmp_path):
        types = tmp_path / "types.jsonl"
        types.write_text(
            "\n".join(
                json.dumps({"question_id": qid, "tag": tag})
                for qid, tag in [
                    ("mini_evouna-00000", "PERSON"),
                    ("mini_evouna-00001", "CARDINAL"),
                    ("nq-0003", "DATE"),
                ]
            ) + "\n",
            encoding="utf-8",
        )
        out = tmp_path / "typed.jsonl"
        assert run(["type", "--dataset", DATA / "mini_evouna.json", "--out", out,
                    "--tagger", "external", "--types", types]) == 0
        by_id = {r.question_id: r for r in load_records(out)}
        assert by_id["mini_evouna-00000"].entity_type.value == "PERSON"

    @pytest.mark.skipif(
        not (Path(__file__).resolve().parents[1] / "sidecar" / "dist" / "main.js").exists(),
        reason="sidecar not built",
    )
    def test_sidecar_tagger_end_to_end(self, tmp_path):
        main_js = Path(__file__).resolve().parents[1] / "sidecar" / "dist" / "main.js"
        out = tmp_path / "typed.jsonl"
        code = run(["type", "--dataset", DATA / "mini_evouna.json", "--out", out,
                    "--tagger", "sidecar", "--sidecar-cmd", f"node {main_js}"])
        assert code == 0
        by_id = {r.question_id: r for r in load_records(out)}
        assert by_id["mini_evouna-00000"].entity_type.value == "PERSON"
        assert by_id["nq-0003"].entity_type.value == "DATE"


class TestExpand:
    def test_dry_run_prints_prompts_without_calls(self, corpus, tmp_path, capsys):
        code = run(["expand", "--dataset", corpus, "--method", "inst-entity",
                    "--out", tmp_path / "x.jsonl", "--dry-run"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.count("Question:") >= len(WORKED_EXAMPLES)
        assert "calls = {'expansion': 0, 'evaluation': 0}" in out
        assert not (tmp_path / "x.jsonl").exists()

    def test_rules_expansion(self, corpus, tmp_path, capsys):
        out = tmp_path / "expanded.jsonl"
        assert run(["expand", "--dataset", corpus, "--method", "rules", "--out", out]) == 0
        lines = out.read_text().strip().splitlines()
        assert len(lines) == len(WORKED_EXAMPLES)
        first = json.loads(lines[0])
        assert "thirteen" in first["expanded"]

    def test_replay_uses_recorded_transcript(self, corpus, tmp_path):
        # Record through the API with a canned transport, then replay via CLI.
        transcript = tmp_path / "transcript.jsonl"
        questions = records_to_questions(load_records(corpus))
        by_question = {
            ex["question"]: ex.get("mock_expansion", "alt one/alt two")
            for ex in WORKED_EXAMPLES
        }
        recorder = make_mock_client(by_question, store=TranscriptStore(transcript))
        recorder.mode = "record"
        expand_dataset(questions, ExpansionMethod("inst_entity"), client=recorder)
        assert transcript.exists()

        out = tmp_path / "expanded.jsonl"
        code = run(["replay", "--dataset", corpus, "--method", "inst-entity",
                    "--transcript", transcript, "--out", out])
        assert code == 0
        by_id = {json.loads(l)["question_id"]: json.loads(l)
                 for l in out.read_text().strip().splitlines()}
        assert "Mike Evans" in by_id["w06"]["expanded"]

    def test_replay_miss_is_network_error(self, corpus, tmp_path):
        code = run(["replay", "--dataset", corpus, "--method", "inst-entity",
                    "--transcript", tmp_path / "empty.jsonl", "--out", tmp_path / "x.jsonl"])
        # per-question errors are reported, not fatal: expansion falls back
        assert code == 0
        lines = [json.loads(l) for l in (tmp_path / "x.jsonl").read_text().splitlines()]
        assert all(l["expanded"] == l["original"] for l in lines)
        assert all("ReplayMiss" in (l.get("notes") or "") for l in lines)


class TestScore:
    def test_substring_containment_flag(self, tmp_path):
        predictions = tmp_path / "preds.jsonl"
        answers = tmp_path / "answers.jsonl"
        predictions.write_text(
            json.dumps({"question_id": "q1", "prediction": "released in 2013"}) + "\n",
            encoding="utf-8",
        )
        answers.write_text(
            json.dumps({"question_id": "q1", "answers": ["13"]}) + "\n", encoding="utf-8"
        )
        token_out = tmp_path / "token.jsonl"
        sub_out = tmp_path / "substring.jsonl"
        run(["score", "--predictions", predictions, "--answers", answers,
             "--metric", "soft-em", "--containment", "token", "--out", token_out])
        run(["score", "--predictions", predictions, "--answers", answers,
             "--metric", "soft-em", "--containment", "substring", "--out", sub_out])
        assert json.loads(token_out.read_text())["correct"] is False
        assert json.loads(sub_out.read_text())["correct"] is True

    def test_score_file_pair(self, tmp_path, capsys):
        predictions = tmp_path / "preds.jsonl"
        answers = tmp_path / "answers.jsonl"
        predictions.write_text(
            json.dumps({"question_id": "q1", "prediction": "It has thirteen episodes."}) + "\n",
            encoding="utf-8",
        )
        answers.write_text(
            json.dumps({"question_id": "q1", "answers": ["13", "thirteen"]}) + "\n",
            encoding="utf-8",
        )
        out = tmp_path / "verdicts.jsonl"
        assert run(["score", "--predictions", predictions, "--answers", answers,
                    "--metric", "soft-em", "--out", out]) == 0
        verdict = json.loads(out.read_text())
        assert verdict["correct"] is True
        assert verdict["matched_answer"] == "thirteen"


class TestPipeline:
    def run_pipeline(self, corpus, workdir: Path) -> Path:
        expanded = workdir / "expanded.jsonl"
        verdicts = workdir / "verdicts.jsonl"
        rel = workdir / "reliability.json"
        report_dir = workdir / "report"
        assert run(["expand", "--dataset", corpus, "--method", "rules",
                    "--out", expanded]) == 0
        assert run(["evaluate", "--dataset", corpus, "--expanded", expanded,
                    "--metric", "soft-em", "--out", verdicts]) == 0
        assert run(["reliability", "--dataset", corpus, "--verdicts", verdicts,
                    "--answer-source", "expanded", "--out", rel]) == 0
        assert run(["report", "--reliability", rel, "--dataset", corpus,
                    "--out", report_dir]) == 0
        return report_dir

    def test_full_pipeline_matches_golden(self, corpus, tmp_path):
        report_dir = self.run_pipeline(corpus, tmp_path)
        got = (report_dir / "reliability.csv").read_text(encoding="utf-8")
        assert got == (GOLDEN / "reliability.csv").read_text(encoding="utf-8")
        got_md = (report_dir / "report.md").read_text(encoding="utf-8")
        assert got_md == (GOLDEN / "report.md").read_text(encoding="utf-8")

    def test_pipeline_is_deterministic(self, corpus, tmp_path):
        first = self.run_pipeline(corpus, tmp_path / "run1")
        second = self.run_pipeline(corpus, tmp_path / "run2")
        for path in sorted(first.iterdir()):
            if path.name == "run_config.json":  # records the differing paths
                continue
            assert path.read_bytes() == (second / path.name).read_bytes(), path.name


class TestConfigFile:
    def test_config_overrides_parser_default(self, corpus, tmp_path):
        config = tmp_path / "run.toml"
        config.write_text('method = "rules"\ncap = 2\n', encoding="utf-8")
        out = tmp_path / "expanded.jsonl"
        code = run(["--config", config, "expand", "--dataset", corpus, "--out", out])
        assert code == 0
        for line in out.read_text().splitlines():
            obj = json.loads(line)
            # cap=2 from the config: the source answer plus at most one variant
            assert len(obj["expanded"]) <= 2 * len(obj["original"])

    def test_explicit_flag_beats_config(self, corpus, tmp_path):
        config = tmp_path / "run.toml"
        config.write_text('cap = 2\n', encoding="utf-8")
        out = tmp_path / "expanded.jsonl"
        code = run(["--config", config, "expand", "--dataset", corpus,
                    "--method", "rules", "--cap", "16", "--out", out])
        assert code == 0
        thirteen = next(
            json.loads(l) for l in out.read_text().splitlines()
            if json.loads(l)["question_id"] == "w01"
        )
        assert "thirteen" in thirteen["expanded"]
        assert len(thirteen["expanded"]) > 2

    def test_env_overrides_mode_flag(self, corpus, tmp_path, monkeypatch):
        # EXPANDEM_MODE beats --mode: a forced replay with an empty transcript
        # leaves every question unexpanded instead of trying the network.
        monkeypatch.setenv("EXPANDEM_MODE", "replay")
        out = tmp_path / "expanded.jsonl"
        code = run(["expand", "--dataset", corpus, "--method", "inst-entity",
                    "--mode", "live", "--out", out])
        assert code == 0
        lines = [json.loads(l) for l in out.read_text().splitlines()]
        assert all("ReplayMiss" in (l.get("notes") or "") for l in lines)
