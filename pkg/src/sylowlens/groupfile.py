"""JSON group-file and report formats.

Group file: UTF-8 JSON with fields ``name`` (optional), ``degree``
(required), ``generators`` (required; image arrays, or cycle strings on
input only) and ``metadata`` (optional). Emission canonicalizes cycle
notation to image arrays, so emit(parse(emit(x))) == emit(x) byte for byte.

Report file: UTF-8 JSON with ``report_version: 1``, the verdict list,
summary counts and the equality-instance list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .group import Group
from .perm import MalformedPermutation, Perm, parse_cycle_string
from .theorems import ScanResult
from .verdicts import BoundVerdict

TOOL_NAME = "sylowlens"
TOOL_VERSION = "0.1.0"
REPORT_VERSION = 1


class GroupFileError(ValueError):
    """Malformed group file, with a field-level diagnostic message."""


@dataclass
class GroupSpec:
    """Parsed form of a group file."""

    name: Optional[str]
    degree: int
    generators: list[Perm]
    metadata: dict = field(default_factory=dict)

    def to_group(self) -> Group:
        return Group(self.degree, self.generators, name=self.name)


def parse_group_file(data: Union[bytes, str]) -> GroupSpec:
    """Parse and validate a group-file document."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GroupFileError(f"group file is not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"group file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GroupFileError("group file must be a JSON object")
    if "degree" not in doc:
        raise GroupFileError("missing required field 'degree'")
    degree = doc["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise GroupFileError(f"field 'degree' must be a positive integer, got {degree!r}")
    if "generators" not in doc:
        raise GroupFileError("missing required field 'generators'")
    raw_gens = doc["generators"]
    if not isinstance(raw_gens, list):
        raise GroupFileError("field 'generators' must be a list")
    gens: list[Perm] = []
    for idx, entry in enumerate(raw_gens):
        where = f"generators[{idx}]"
        if isinstance(entry, str):
            try:
                gens.append(parse_cycle_string(entry, degree))
            except MalformedPermutation as exc:
                raise GroupFileError(f"{where}: {exc}") from None
        elif isinstance(entry, list):
            if len(entry) != degree:
                raise GroupFileError(
                    f"{where}: image array has length {len(entry)}, "
                    f"but degree is {degree}"
                )
            try:
                gens.append(Perm(entry))
            except MalformedPermutation as exc:
                raise GroupFileError(f"{where}: {exc}") from None
        else:
            raise GroupFileError(
                f"{where}: expected an image array or a cycle string"
            )
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise GroupFileError("field 'name' must be a string")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise GroupFileError("field 'metadata' must be an object")
    return GroupSpec(name=name, degree=degree, generators=gens,
                     metadata=metadata)


def emit_group_file(spec: GroupSpec) -> bytes:
    """Canonical byte form: fixed key order, image arrays only."""
    doc: dict = {}
    if spec.name is not None:
        doc["name"] = spec.name
    doc["degree"] = spec.degree
    doc["generators"] = [list(g.images) for g in spec.generators]
    if spec.metadata:
        doc["metadata"] = spec.metadata
    return (json.dumps(doc, indent=2, sort_keys=False) + "\n").encode("utf-8")


def group_to_spec(G: Group) -> GroupSpec:
    return GroupSpec(name=G.name, degree=G.degree,
                     generators=list(G.generators))


def load_group(path: str) -> Group:
    """Read a group file from disk; raises GroupFileError on any problem."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc}") from None
    return parse_group_file(data).to_group()


@dataclass
class Report:
    """Serialized scan or check outcome.

    ``summary`` always tallies the full run; the verdict list may be
    truncated on very large scans, in which case ``verdicts_complete`` is
    False (failures and errors are always retained).
    """

    corpus_description: str
    verdicts: list[dict]
    summary: dict
    equality_instances: list[dict] = field(default_factory=list)
    group_skips: list[dict] = field(default_factory=list)
    verdicts_complete: bool = True
    claim_summary: dict = field(default_factory=dict)

    @classmethod
    def from_scan(cls, result: ScanResult) -> "Report":
        stats = result.stats
        summary = {
            "checked": stats.get("checked", 0),
            "held": stats.get("held", 0),
            "failed": stats.get("failed", 0),
            "precondition_failed": stats.get("precondition_failed", 0),
            "errors": stats.get("errors", 0),
        }
        return cls(
            corpus_description=result.corpus_description,
            verdicts=[v.to_json() for v in result.verdicts],
            summary=summary,
            equality_instances=list(result.equality_instances),
            group_skips=list(result.group_skips),
            verdicts_complete=result.verdicts_complete,
            claim_summary=dict(result.claim_stats),
        )

    @classmethod
    def from_verdicts(cls, verdicts: list[BoundVerdict],
                      description: str = "") -> "Report":
        summary = {
            "checked": sum(1 for v in verdicts
                           if v.preconditions_met and v.error is None),
            "held": sum(1 for v in verdicts if v.holds is True),
            "failed": sum(1 for v in verdicts if v.failed),
            "precondition_failed": sum(1 for v in verdicts
                                       if not v.preconditions_met),
            "errors": sum(1 for v in verdicts if v.error is not None),
        }
        equalities = [
            {"claim_id": v.claim_id, "group": v.inputs.get("group"),
             "order": v.inputs.get("order"), "A_order": v.inputs.get("A_order"),
             "B_order": v.inputs.get("B_order"), "p": v.inputs.get("p"),
             "lhs": v.lhs, "rhs": v.rhs, "count": 1}
            for v in verdicts if v.is_equality
        ]
        return cls(corpus_description=description,
                   verdicts=[v.to_json() for v in verdicts],
                   summary=summary, equality_instances=equalities)

    def to_json(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
            "corpus": self.corpus_description,
            "verdicts": self.verdicts,
            "summary": self.summary,
            "claim_summary": self.claim_summary,
            "equality_instances": self.equality_instances,
            "group_skips": self.group_skips,
            "verdicts_complete": self.verdicts_complete,
        }

    def to_bytes(self) -> bytes:
        return (json.dumps(self.to_json(), indent=2) + "\n").encode("utf-8")

    @classmethod
    def from_json(cls, doc: dict) -> "Report":
        if doc.get("report_version") != REPORT_VERSION:
            raise GroupFileError(
                f"unsupported report_version {doc.get('report_version')!r}"
            )
        return cls(
            corpus_description=doc.get("corpus", ""),
            verdicts=doc.get("verdicts", []),
            summary=doc.get("summary", {}),
            equality_instances=doc.get("equality_instances", []),
            group_skips=doc.get("group_skips", []),
            verdicts_complete=doc.get("verdicts_complete", True),
            claim_summary=doc.get("claim_summary", {}),
        )

    @classmethod
    def from_bytes(cls, data: bytes) -> "Report":
        try:
            doc = json.loads(data.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise GroupFileError(f"malformed report: {exc}") from None
        return cls.from_json(doc)

    def recount(self) -> dict:
        """Tally the stored verdict list (matches ``summary`` when complete)."""
        out = {"checked": 0, "held": 0, "failed": 0, "precondition_failed": 0,
               "errors": 0}
        for v in self.verdicts:
            if v.get("error") is not None:
                out["errors"] += 1
            elif not v.get("preconditions_met", True):
                out["precondition_failed"] += 1
            else:
                out["checked"] += 1
                if v.get("holds"):
                    out["held"] += 1
                else:
                    out["failed"] += 1
        return out
