from __future__ import annotations

import json

import pytest

from expandem.client import (
    CompletionRequest,
    LLMClient,
    PricingTable,
    TranscriptStore,
    TransportResult,
    UsageLedger,
    estimate_cost,
)
from expandem.errors import EndpointError, MissingRate, ReplayMiss


class CountingTransport:
    def __init__(self, replies=None, failures=0, failure_status=500):
        self.calls = 0
        self.replies = replies or {}
        self.failures = failures
        self.failure_status = failure_status

    def __call__(self, req: CompletionRequest) -> TransportResult:
        self.calls += 1
        if self.failures > 0:
            self.failures -= 1
            raise EndpointError(self.failure_status, "synthetic failure")
        return TransportResult(
            text=self.replies.get(req.prompt, f"echo:{req.prompt}"),
            prompt_tokens=len(req.prompt.split()),
            completion_tokens=3,
        )


def make_client(transport, **kwargs) -> LLMClient:
    kwargs.setdefault("mode", "live")
    kwargs.setdefault("backoff_base", 0.0)
    return LLMClient(transport=transport, **kwargs)


class TestRequestHash:
    def test_stable(self):
        a = CompletionRequest("hello", model_name="m")
        b = CompletionRequest("hello", model_name="m")
        assert a.request_hash() == b.request_hash()

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"prompt": "other"},
            {"max_tokens": 100},
            {"temperature": 0.5},
            {"top_p": 0.9},
            {"model_name": "m2"},
        ],
    )
    def test_any_knob_changes_hash(self, kwargs):
        base = CompletionRequest("hello", model_name="m")
        changed = CompletionRequest(**{"prompt": "hello", "model_name": "m", **kwargs})
        assert base.request_hash() != changed.request_hash()

    def test_defaults_match_reference_configuration(self):
        req = CompletionRequest("p")
        assert req.max_tokens == 200
        assert req.temperature == 0
        assert req.top_p == 1


class TestCompleteModes:
    def test_cache_hit_leaves_calls_unchanged(self):
        transport = CountingTransport()
        client = make_client(transport)
        req = CompletionRequest("the prompt")
        first = client.complete(req)
        again = client.complete(req)
        assert first == again
        assert transport.calls == 1
        assert client.ledger.total_calls == 1

    def test_replay_miss(self):
        client = LLMClient(mode="replay")
        with pytest.raises(ReplayMiss):
            client.complete(CompletionRequest("never recorded"))

    def test_record_then_replay(self, tmp_path):
        path = tmp_path / "transcript.jsonl"
        transport = CountingTransport()
        recorder = make_client(transport, mode="record", store=TranscriptStore(path))
        req = CompletionRequest("record me")
        text = recorder.complete(req)
        assert path.exists()

        replayer = LLMClient(mode="replay", store=TranscriptStore(path))
        assert replayer.complete(req) == text
        assert replayer.ledger.total_calls == 0
        assert transport.calls == 1

    def test_live_mode_does_not_persist(self, tmp_path):
        path = tmp_path / "transcript.jsonl"
        client = make_client(CountingTransport(), store=TranscriptStore(path))
        client.complete(CompletionRequest("ephemeral"))
        assert not path.exists()

    def test_replay_output_depends_only_on_hash(self, tmp_path):
        path = tmp_path / "transcript.jsonl"
        store = TranscriptStore(path)
        req = CompletionRequest("fixed")
        store.put(req, TransportResult("pinned response", 5, 2), mode="live")
        client = LLMClient(mode="replay", store=TranscriptStore(path))
        assert client.complete(req) == "pinned response"


class TestRetries:
    def test_transient_5xx_retried(self):
        transport = CountingTransport(failures=2)
        client = make_client(transport, max_attempts=3)
        assert client.complete(CompletionRequest("x")).startswith("echo:")
        assert transport.calls == 3
        assert client.ledger.total_calls == 1  # only the success is recorded

    def test_429_retried(self):
        transport = CountingTransport(failures=1, failure_status=429)
        client = make_client(transport, max_attempts=2)
        client.complete(CompletionRequest("x"))
        assert transport.calls == 2

    def test_gives_up_after_attempt_limit(self):
        transport = CountingTransport(failures=10)
        client = make_client(transport, max_attempts=3)
        with pytest.raises(EndpointError):
            client.complete(CompletionRequest("x"))
        assert transport.calls == 3
        assert client.ledger.total_calls == 0

    def test_non_transient_4xx_not_retried(self):
        transport = CountingTransport(failures=5, failure_status=400)
        client = make_client(transport, max_attempts=3)
        with pytest.raises(EndpointError):
            client.complete(CompletionRequest("x"))
        assert transport.calls == 1


class TestLedger:
    def test_phases_tracked_separately(self):
        client = make_client(CountingTransport())
        client.complete(CompletionRequest("a"), phase="expansion")
        client.complete(CompletionRequest("b"), phase="evaluation")
        client.complete(CompletionRequest("c"), phase="evaluation")
        assert client.ledger.calls == {"expansion": 1, "evaluation": 2}

    def test_token_counters_accumulate(self):
        client = make_client(CountingTransport())
        client.complete(CompletionRequest("one two three"))
        client.complete(CompletionRequest("four five"))
        assert client.ledger.prompt_tokens == 5
        assert client.ledger.completion_tokens == 6


class TestEstimateCost:
    def test_zero_tokens_cost_zero(self):
        assert estimate_cost(UsageLedger(), PricingTable({"m": (1.0, 2.0)})) == 0

    def test_pinned_arithmetic(self):
        # oracle: 1200/1000*0.5 + 400/1000*1.5 = 0.6 + 0.6 = 1.2
        ledger = UsageLedger()
        for _ in range(4):
            ledger.record("expansion", "m", 300, 100)
        pricing = PricingTable({"m": (0.5, 1.5)})
        assert estimate_cost(ledger, pricing) == pytest.approx(1.2)

    def test_missing_rate(self):
        ledger = UsageLedger()
        ledger.record("expansion", "mystery", 10, 10)
        with pytest.raises(MissingRate):
            estimate_cost(ledger, PricingTable({}))

    def test_pricing_file_round_trip(self, tmp_path):
        path = tmp_path / "pricing.cfg"
        path.write_text("# per-1K rates\nm = 0.5, 1.5\n", encoding="utf-8")
        table = PricingTable.load(path)
        assert table.rates == {"m": (0.5, 1.5)}


class TestRateLimiter:
    def test_burst_then_throttle(self):
        import time

        from expandem.client import RateLimiter

        limiter = RateLimiter(rate=200.0, capacity=2)
        started = time.monotonic()
        for _ in range(4):
            limiter.acquire()
        elapsed = time.monotonic() - started
        # two from the bucket, two awaited at 200/s
        assert elapsed >= 0.008

    def test_client_honors_injected_limiter(self):
        from expandem.client import RateLimiter

        transport = CountingTransport()
        client = make_client(transport, rate_limiter=RateLimiter(rate=1000.0, capacity=4))
        for i in range(3):
            client.complete(CompletionRequest(f"p{i}"))
        assert transport.calls == 3


class TestTranscriptStore:
    def test_append_only_and_reload(self, tmp_path):
        path = tmp_path / "t.jsonl"
        store = TranscriptStore(path)
        req = CompletionRequest("p1")
        store.put(req, TransportResult("r1", 1, 1), mode="record")
        store.put(req, TransportResult("overwrite attempt", 1, 1), mode="record")
        reloaded = TranscriptStore(path)
        assert reloaded.get(req.request_hash())["response"] == "r1"
        lines = path.read_text().strip().splitlines()
        assert len(lines) == 1
        entry = json.loads(lines[0])
        assert set(entry) >= {"hash", "request", "response", "timestamp", "mode"}
