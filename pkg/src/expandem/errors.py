"""Shared exception types."""

from __future__ import annotations


class ExpandemError(Exception):
    """Base class for all package errors."""


class EmptyAnswerSet(ExpandemError):
    """A gold answer set was empty where at least one answer is required."""


class TaggerUnavailable(ExpandemError):
    """The requested tagger (external file or sidecar) could not be reached."""


class MalformedLine(ExpandemError):
    def __init__(self, line_no: int, detail: str = ""):
        self.line_no = line_no
        super().__init__(f"malformed line {line_no}" + (f": {detail}" if detail else ""))


class DuplicateQuestionId(ExpandemError):
    def __init__(self, question_id: str):
        self.question_id = question_id
        super().__init__(f"duplicate question_id: {question_id}")


class OutOfRange(ExpandemError):
    """Number outside the supported word-conversion range."""


class Unparseable(ExpandemError):
    """Text could not be parsed back into a number."""


class MissingCredential(ExpandemError):
    """Live/record mode requested without endpoint URL or API key configured."""


class EndpointError(ExpandemError):
    def __init__(self, status: int, detail: str = ""):
        self.status = status
        super().__init__(f"endpoint returned {status}" + (f": {detail}" if detail else ""))


class ReplayMiss(ExpandemError):
    def __init__(self, request_hash: str):
        self.request_hash = request_hash
        super().__init__(f"no recorded response for request hash {request_hash}")


class MissingRate(ExpandemError):
    def __init__(self, model_name: str):
        self.model_name = model_name
        super().__init__(f"no pricing entry for model: {model_name}")


class UnsupportedMethod(ExpandemError):
    """Operation does not apply to this expansion method."""


class MissingBank(ExpandemError):
    def __init__(self, tag: str):
        self.tag = tag
        super().__init__(f"few-shot bank has no entry covering entity type {tag}")


class UnparseableJudgeResponse(ExpandemError):
    def __init__(self, response: str):
        self.response = response
        super().__init__(f"judge response is neither correct nor incorrect: {response!r}")


class SchemaError(ExpandemError):
    def __init__(self, path: str, detail: str):
        self.path = path
        self.detail = detail
        super().__init__(f"{path}: {detail}")


class MissingHumanLabel(ExpandemError):
    def __init__(self, question_id: str, model_name: str):
        self.question_id = question_id
        self.model_name = model_name
        super().__init__(f"no human judgement for model {model_name} on question {question_id}")


class UnresolvedQuestionId(ExpandemError):
    def __init__(self, question_id: str):
        self.question_id = question_id
        super().__init__(f"question_id {question_id} not present in the expanded answer source")
