"""Command-line pipeline: type -> expand -> evaluate -> reliability -> report.

Settings resolve in three layers: a TOML config file supplies defaults,
explicit flags override it, and environment variables override both
(EXPANDEM_ENDPOINT / EXPANDEM_API_KEY for the network client, EXPANDEM_MODE
for the client mode). Exit codes: 0 success, 2 usage, 3 data, 4 network.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import banks, expansion, harness, report as report_mod, scoring
from .client import LLMClient, PricingTable, TranscriptStore, estimate_cost
from .entity_types import (
    EntityType,
    ExternalTagger,
    RuleTagger,
    SidecarTagger,
    load_external_types,
    type_dataset,
)
from .errors import (
    EndpointError,
    ExpandemError,
    MissingCredential,
    ReplayMiss,
    TaggerUnavailable,
)

MODE_ENV = "EXPANDEM_MODE"

USAGE_EXIT = 2
DATA_EXIT = 3
NETWORK_EXIT = 4

_NETWORK_ERRORS = (EndpointError, MissingCredential, ReplayMiss)


def _profile_from(args) -> scoring.NormalizationProfile | None:
    mode = getattr(args, "profile", None)
    containment = getattr(args, "containment", None)
    if mode is None and containment is None:
        return None
    return scoring.NormalizationProfile(
        mode or "light",
        "substring" if containment == "substring" else "token_boundary",
    )


def _load_dataset(path: str, fmt: str) -> list[harness.EvalRecord]:
    if fmt == "evouna":
        return harness.import_evouna(path)
    if fmt == "canonical":
        return harness.load_records(path)
    # auto: a JSON array is EVOUNA-shaped, JSON lines are canonical
    with open(path, encoding="utf-8") as fh:
        head = fh.read(64).lstrip()
    return harness.import_evouna(path) if head.startswith("[") else harness.load_records(path)


def _make_client(args) -> LLMClient:
    mode = os.environ.get(MODE_ENV) or getattr(args, "mode", None) or "replay"
    store = TranscriptStore(getattr(args, "transcript", None))
    return LLMClient(
        mode=mode,
        store=store,
        default_model=getattr(args, "model", None) or "default",
    )


def _write_run_config(args, out: Path):
    resolved = {
        k: (str(v) if isinstance(v, Path) else v)
        for k, v in sorted(vars(args).items())
        if k != "func" and v is not None
    }
    target = out if out.is_dir() else out.parent
    target.mkdir(parents=True, exist_ok=True)
    (target / "run_config.json").write_text(
        json.dumps(resolved, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def cmd_type(args) -> int:
    records = _load_dataset(args.dataset, args.format)
    questions = harness.records_to_questions(records)
    overrides = load_external_types(args.overrides) if args.overrides else None
    if args.tagger == "rule":
        tagger = RuleTagger()
    elif args.tagger == "external":
        tagger = ExternalTagger(load_external_types(args.types))
    else:
        tagger = SidecarTagger(args.sidecar_cmd.split())
    try:
        type_dataset(questions, tagger, overrides)
    except TaggerUnavailable as exc:
        print(f"warning: {exc}; falling back to the rule typer", file=sys.stderr)
        type_dataset(questions, RuleTagger(), overrides)
    harness.apply_types(records, questions)
    harness.save_records(records, args.out)
    _write_run_config(args, Path(args.out))
    print(f"typed {len(records)} records -> {args.out}")
    return 0


def _run_expand(args, mode_override: str | None = None) -> int:
    records = harness.load_records(args.dataset)
    questions = harness.records_to_questions(records)
    method = expansion.ExpansionMethod.parse(args.method, seed=args.seed)
    bank = banks.get_bank(args.bank)
    client = None
    if method.uses_llm:
        if mode_override is not None:
            args.mode = mode_override
        client = _make_client(args)
    if args.dry_run:
        for q in questions:
            if method.uses_llm:
                prompt = expansion.build_prompt(
                    method, q.entity_type or EntityType.NA, q.question, q.gold_answers, bank
                )
                print(f"--- {q.question_id}\n{prompt}\n")
            else:
                print(f"--- {q.question_id}\nrules expansion of {q.gold_answers}\n")
        calls = client.ledger.snapshot() if client else {"calls": {"expansion": 0, "evaluation": 0}}
        print(f"dry run: {len(questions)} prompts, calls = {calls['calls']}")
        return 0
    sets = expansion.expand_dataset(
        questions, method, client=client, bank=bank, cap=args.cap, model_name=args.model
    )
    expansion.save_expanded(sets, args.out)
    _write_run_config(args, Path(args.out))
    failed = sum(1 for s in sets if s.notes and s.notes.startswith("error"))
    summary = f"expanded {len(sets)} questions -> {args.out}"
    if client is not None:
        ledger = client.ledger.snapshot()
        summary += f" (calls: {ledger['calls']})"
        if args.pricing:
            cost = estimate_cost(client.ledger, PricingTable.load(args.pricing))
            summary += f" estimated cost ${cost:.2f}"
    if failed:
        summary += f"; {failed} question(s) failed and kept their original sets"
    print(summary)
    return 0


def cmd_expand(args) -> int:
    return _run_expand(args)


def cmd_record(args) -> int:
    return _run_expand(args, mode_override="record")


def cmd_replay(args) -> int:
    return _run_expand(args, mode_override="replay")


def cmd_score(args) -> int:
    answers: dict[str, list[str]] = {}
    with open(args.answers, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            answers[obj["question_id"]] = list(
                obj.get("answers") or obj.get("expanded") or obj.get("gold") or []
            )
    profile = _profile_from(args)
    client = _make_client(args) if args.metric == "judge" else None
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        with open(args.predictions, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                obj = json.loads(line)
                qid = obj["question_id"]
                text = obj.get("prediction", obj.get("text", ""))
                gold = answers.get(qid)
                if gold is None:
                    raise harness.UnresolvedQuestionId(qid)
                record = harness.EvalRecord(qid, obj.get("question", ""), gold)
                prediction = harness.ModelPrediction(obj.get("model_name", "model"), text, False)
                verdict = harness._score_one(
                    args.metric.replace("-", "_"), prediction, record, gold,
                    profile, client, args.f1_threshold,
                )
                out.write(json.dumps(
                    {
                        "question_id": qid,
                        "model_name": prediction.model_name,
                        "metric": args.metric.replace("-", "_"),
                        "correct": None if verdict is None else verdict.correct,
                        "matched_answer": None if verdict is None else verdict.matched_answer,
                        "detail": None if verdict is None else verdict.detail,
                    },
                    ensure_ascii=False,
                ) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def cmd_evaluate(args) -> int:
    records = harness.load_records(args.dataset)
    source = "original"
    if args.expanded:
        source = expansion.expanded_answer_map(expansion.load_expanded(args.expanded))
    client = _make_client(args) if args.metric == "judge" else None
    result = harness.evaluate(
        records,
        answer_source=source,
        metric=args.metric.replace("-", "_"),
        profile=_profile_from(args),
        client=client,
        f1_threshold=args.f1_threshold,
    )
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(result.to_jsonl(records), encoding="utf-8")
    _write_run_config(args, Path(args.out))
    print(
        f"evaluated {len(result.entries)} (model, question) pairs with {result.metric} "
        f"[{result.profile}] -> {args.out}"
    )
    return 0


def cmd_reliability(args) -> int:
    records = harness.load_records(args.dataset)
    result = harness.EvaluationResult.from_jsonl(
        args.verdicts, answer_source=args.answer_source
    )
    rel = harness.reliability(result, records)
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(
        json.dumps(rel.to_dict(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    _write_run_config(args, Path(args.out))
    print(f"reliability avg {rel.average:.4f} over {rel.pair_count} pairs -> {args.out}")
    return 0


def cmd_report(args) -> int:
    reports = []
    question_count = None
    for path in args.reliability:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
        reports.append(harness.ReliabilityReport.from_dict(obj))
    if args.dataset:
        question_count = len(harness.load_records(args.dataset))
    written = report_mod.render_report(
        reports,
        args.out,
        formats=[f.strip() for f in args.formats.split(",")],
        figures=args.figures,
        question_count=args.questions or question_count,
        model_count=args.models,
    )
    _write_run_config(args, Path(args.out))
    for path in written:
        print(path)
    return 0


def _add_client_flags(p: argparse.ArgumentParser):
    p.add_argument("--mode", choices=["live", "record", "replay"], default=None,
                   help="client mode (default replay; EXPANDEM_MODE overrides)")
    p.add_argument("--transcript", default=None, help="transcript JSONL for record/replay")
    p.add_argument("--model", default=None, help="model name sent to the endpoint")


def _add_profile_flags(p: argparse.ArgumentParser):
    p.add_argument("--profile", choices=["light", "squad"], default=None)
    p.add_argument("--containment", choices=["token", "substring"], default=None)
    p.add_argument("--f1-threshold", type=float, default=1.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expandem",
        description="Soft exact match QA evaluation over entity-expanded gold answer sets.",
    )
    parser.add_argument("--config", default=None, help="TOML config supplying flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("type", help="assign entity types to gold answers")
    p.add_argument("--dataset", required=True)
    p.add_argument("--format", choices=["auto", "canonical", "evouna"], default="auto")
    p.add_argument("--tagger", choices=["rule", "external", "sidecar"], default="rule")
    p.add_argument("--types", default=None, help="external type JSONL (tagger=external)")
    p.add_argument("--overrides", default=None, help="per-question override JSONL")
    p.add_argument("--sidecar-cmd", default="node sidecar/dist/main.js",
                   help="command for tagger=sidecar")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_type)

    for name, func in (("expand", cmd_expand), ("record", cmd_record), ("replay", cmd_replay)):
        p = sub.add_parser(name, help=f"{name} answer-set expansion")
        p.add_argument("--dataset", required=True, help="typed canonical JSONL")
        p.add_argument("--method", default="rules",
                       help="rules | inst-zero | inst-random | inst-entity")
        p.add_argument("--seed", type=int, default=None, help="seed for inst-random")
        p.add_argument("--bank", default="nq", help="few-shot bank: nq | tq")
        p.add_argument("--cap", type=int, default=16, help="variant cap per answer")
        p.add_argument("--pricing", default=None, help="pricing table for cost estimates")
        p.add_argument("--dry-run", action="store_true",
                       help="print prompts and call counts without network use")
        p.add_argument("--out", required=True)
        _add_client_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("score", help="score a standalone prediction file")
    p.add_argument("--predictions", required=True,
                   help="JSONL with question_id and prediction/text")
    p.add_argument("--answers", required=True,
                   help="JSONL with question_id and answers/expanded/gold")
    p.add_argument("--metric", choices=["soft-em", "hard-em", "f1", "judge"], required=True)
    p.add_argument("--out", default=None, help="verdict JSONL (default stdout)")
    _add_profile_flags(p)
    _add_client_flags(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("evaluate", help="run one metric over a dataset")
    p.add_argument("--dataset", required=True, help="canonical JSONL")
    p.add_argument("--expanded", default=None, help="expanded answer-set JSONL")
    p.add_argument("--metric", choices=["soft-em", "hard-em", "f1", "judge"],
                   default="soft-em")
    p.add_argument("--out", required=True, help="verdict JSONL")
    _add_profile_flags(p)
    _add_client_flags(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("reliability", help="agreement of verdicts with human labels")
    p.add_argument("--dataset", required=True)
    p.add_argument("--verdicts", required=True)
    p.add_argument("--answer-source", default="original",
                   help="label recorded in the report (original | expanded)")
    p.add_argument("--out", required=True, help="reliability report JSON")
    p.set_defaults(func=cmd_reliability)

    p = sub.add_parser("report", help="render tables and figures from reliability reports")
    p.add_argument("--reliability", nargs="+", required=True,
                   help="one or more reliability report JSON files")
    p.add_argument("--dataset", default=None, help="canonical JSONL (for call counts)")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--formats", default="markdown,csv,json")
    p.add_argument("--figures", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--questions", type=int, default=None)
    p.add_argument("--models", type=int, default=None)
    p.set_defaults(func=cmd_report)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if args.config:
        with open(args.config, "rb") as fh:
            config = tomllib.load(fh)
        explicit = {
            a[2:].split("=", 1)[0].replace("-", "_")
            for a in argv
            if a.startswith("--")
        }
        for key, value in config.items():
            dest = key.replace("-", "_")
            if dest in explicit or not hasattr(args, dest):
                continue  # flags beat the config file
            setattr(args, dest, value)
    return args


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = _apply_config(parser, sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return args.func(args)
    except _NETWORK_ERRORS as exc:
        _report_error(exc)
        return NETWORK_EXIT
    except (ExpandemError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        _report_error(exc)
        return DATA_EXIT
    except ValueError as exc:
        _report_error(exc)
        return USAGE_EXIT


def _report_error(exc: Exception):
    summary = {"error": type(exc).__name__, "detail": str(exc)}
    print(json.dumps(summary, ensure_ascii=False), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
