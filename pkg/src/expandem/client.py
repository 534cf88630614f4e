"""Completion client with caching, record/replay transcripts, and a usage ledger.

The transport is a plain callable so tests can stub the network entirely;
the default transport posts a single-turn completion request as JSON and
understands both completion-style and chat-style response bodies.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Callable, Optional

import requests

from .errors import EndpointError, MissingCredential, MissingRate, ReplayMiss

ENDPOINT_ENV = "EXPANDEM_ENDPOINT"
API_KEY_ENV = "EXPANDEM_API_KEY"

DEFAULT_MAX_TOKENS = 200
DEFAULT_TEMPERATURE = 0.0
DEFAULT_TOP_P = 1.0

PHASES = ("expansion", "evaluation")


@dataclass(frozen=True)
class CompletionRequest:
    prompt: str
    max_tokens: int = DEFAULT_MAX_TOKENS
    temperature: float = DEFAULT_TEMPERATURE
    top_p: float = DEFAULT_TOP_P
    model_name: str = "default"

    def request_hash(self) -> str:
        """Stable digest over every field; any knob change invalidates reuse."""
        payload = json.dumps(
            {
                "prompt": self.prompt,
                "max_tokens": self.max_tokens,
                "temperature": self.temperature,
                "top_p": self.top_p,
                "model_name": self.model_name,
            },
            sort_keys=True,
            ensure_ascii=False,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass
class TransportResult:
    text: str
    prompt_tokens: int = 0
    completion_tokens: int = 0


@dataclass
class UsageLedger:
    """Monotone counters for network-served requests, split by phase."""

    calls: dict[str, int] = field(default_factory=lambda: {p: 0 for p in PHASES})
    prompt_tokens: int = 0
    completion_tokens: int = 0
    tokens_by_model: dict[str, dict[str, int]] = field(default_factory=dict)

    def record(self, phase: str, model_name: str, prompt_tokens: int, completion_tokens: int):
        self.calls[phase] = self.calls.get(phase, 0) + 1
        self.prompt_tokens += prompt_tokens
        self.completion_tokens += completion_tokens
        per_model = self.tokens_by_model.setdefault(
            model_name, {"prompt_tokens": 0, "completion_tokens": 0}
        )
        per_model["prompt_tokens"] += prompt_tokens
        per_model["completion_tokens"] += completion_tokens

    @property
    def total_calls(self) -> int:
        return sum(self.calls.values())

    def snapshot(self) -> dict:
        return {
            "calls": dict(self.calls),
            "prompt_tokens": self.prompt_tokens,
            "completion_tokens": self.completion_tokens,
        }


@dataclass(frozen=True)
class PricingTable:
    """Per-1K-token input/output rates keyed by model name."""

    rates: dict[str, tuple[float, float]]

    @classmethod
    def load(cls, path: str | Path) -> "PricingTable":
        """Read `model = in_rate, out_rate` lines (# comments allowed)."""
        rates: dict[str, tuple[float, float]] = {}
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            name, _, values = line.partition("=")
            inp, _, out = values.partition(",")
            rates[name.strip()] = (float(inp), float(out))
        return cls(rates)


def estimate_cost(ledger: UsageLedger, pricing: PricingTable) -> float:
    """Linear combination of the ledger's token counters and the rate table."""
    total = 0.0
    for model_name, counts in ledger.tokens_by_model.items():
        if model_name not in pricing.rates:
            raise MissingRate(model_name)
        in_rate, out_rate = pricing.rates[model_name]
        total += counts["prompt_tokens"] / 1000.0 * in_rate
        total += counts["completion_tokens"] / 1000.0 * out_rate
    return total


class TranscriptStore:
    """Append-only map request-hash -> response, persisted as JSON lines."""

    def __init__(self, path: Optional[str | Path] = None):
        self.path = Path(path) if path is not None else None
        self._entries: dict[str, dict] = {}
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    entry = json.loads(line)
                    self._entries[entry["hash"]] = entry

    def __contains__(self, request_hash: str) -> bool:
        return request_hash in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, request_hash: str) -> Optional[dict]:
        return self._entries.get(request_hash)

    def put(self, req: CompletionRequest, result: TransportResult, mode: str = "live", persist: bool = True):
        entry = {
            "hash": req.request_hash(),
            "request": asdict(req),
            "response": result.text,
            "prompt_tokens": result.prompt_tokens,
            "completion_tokens": result.completion_tokens,
            "mode": mode,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        with self._lock:
            if entry["hash"] in self._entries:
                return
            self._entries[entry["hash"]] = entry
            if persist and self.path is not None:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with self.path.open("a", encoding="utf-8") as fh:
                    fh.write(json.dumps(entry, ensure_ascii=False) + "\n")


def _estimate_tokens(text: str) -> int:
    # Crude fallback when the endpoint reports no usage numbers.
    return max(1, len(text) // 4)


def http_transport(req: CompletionRequest, timeout: float = 60.0) -> TransportResult:
    """POST the request to the configured endpoint and decode the response."""
    endpoint = os.environ.get(ENDPOINT_ENV, "")
    api_key = os.environ.get(API_KEY_ENV, "")
    if not endpoint or not api_key:
        raise MissingCredential(
            f"set {ENDPOINT_ENV} and {API_KEY_ENV} for live/record mode"
        )
    body = {
        "model": req.model_name,
        "prompt": req.prompt,
        "max_tokens": req.max_tokens,
        "temperature": req.temperature,
        "top_p": req.top_p,
    }
    resp = requests.post(
        endpoint,
        json=body,
        headers={"Authorization": f"Bearer {api_key}"},
        timeout=timeout,
    )
    if resp.status_code != 200:
        raise EndpointError(resp.status_code, resp.text[:200])
    data = resp.json()
    if "choices" in data:
        choice = data["choices"][0]
        text = choice.get("text")
        if text is None:
            text = choice.get("message", {}).get("content", "")
    else:
        text = data.get("text", "")
    usage = data.get("usage", {})
    return TransportResult(
        text=text,
        prompt_tokens=usage.get("prompt_tokens", _estimate_tokens(req.prompt)),
        completion_tokens=usage.get("completion_tokens", _estimate_tokens(text)),
    )


class RateLimiter:
    """Token bucket: at most `rate` acquisitions per second, burst `capacity`."""

    def __init__(self, rate: float = 8.0, capacity: int = 4):
        self.rate = rate
        self.capacity = capacity
        self._tokens = float(capacity)
        self._updated = time.monotonic()
        self._lock = threading.Lock()

    def acquire(self):
        while True:
            with self._lock:
                now = time.monotonic()
                self._tokens = min(
                    self.capacity, self._tokens + (now - self._updated) * self.rate
                )
                self._updated = now
                if self._tokens >= 1.0:
                    self._tokens -= 1.0
                    return
                wait = (1.0 - self._tokens) / self.rate
            time.sleep(wait)


class LLMClient:
    """Completion client with a transcript cache and per-phase usage ledger.

    Modes: "live" answers from cache or the network, "record" additionally
    persists new responses, "replay" never touches the network and fails on
    unrecorded hashes. Only network round-trips count as ledger calls.
    """

    def __init__(
        self,
        mode: str = "replay",
        store: Optional[TranscriptStore] = None,
        transport: Optional[Callable[[CompletionRequest], TransportResult]] = None,
        default_model: str = "default",
        max_attempts: int = 3,
        backoff_base: float = 0.5,
        max_concurrency: int = 4,
        rate_limiter: Optional[RateLimiter] = None,
    ):
        if mode not in ("live", "record", "replay"):
            raise ValueError(f"unknown client mode: {mode}")
        self.mode = mode
        self.store = store if store is not None else TranscriptStore()
        self.transport = transport or http_transport
        self.default_model = default_model
        self.max_attempts = max_attempts
        self.backoff_base = backoff_base
        self.max_concurrency = max_concurrency
        self.ledger = UsageLedger()
        self._ledger_lock = threading.Lock()
        self._inflight = threading.Semaphore(max_concurrency)
        self._rate = rate_limiter

    def complete(self, req: CompletionRequest, phase: str = "expansion") -> str:
        request_hash = req.request_hash()
        cached = self.store.get(request_hash)
        if cached is not None:
            return cached["response"]
        if self.mode == "replay":
            raise ReplayMiss(request_hash)
        result = self._round_trip(req)
        with self._ledger_lock:
            self.ledger.record(
                phase, req.model_name, result.prompt_tokens, result.completion_tokens
            )
        self.store.put(req, result, mode=self.mode, persist=self.mode == "record")
        return result.text

    def _round_trip(self, req: CompletionRequest) -> TransportResult:
        last_error: Optional[Exception] = None
        with self._inflight:
            for attempt in range(self.max_attempts):
                if self._rate is not None:
                    self._rate.acquire()
                try:
                    return self.transport(req)
                except EndpointError as exc:
                    transient = exc.status == 429 or exc.status >= 500
                    if not transient:
                        raise
                    last_error = exc
                except requests.RequestException as exc:
                    last_error = EndpointError(0, str(exc))
                if attempt + 1 < self.max_attempts:
                    time.sleep(self.backoff_base * (2**attempt))
        assert last_error is not None
        raise last_error
