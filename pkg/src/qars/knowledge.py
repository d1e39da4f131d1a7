"""Long-term shared memory: an alias-resolving graph of findings.

Nodes are keyed by canonical token; any alias resolves to exactly one node.
Findings carry a source tier (standards documents outrank advisories, which
outrank preprints and blogs) and an author-cluster token used to judge
independence when deriving consensus confidence.

Write access is single-writer by contract (the orchestrator serializes
workers); reads between mutations are safe.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from .errors import AliasConflictError, UnknownNodeError, ValidationError

if TYPE_CHECKING:
    from .agents import AgentRole

__all__ = [
    "SourceTier",
    "Confidence",
    "Finding",
    "KnowledgeNode",
    "MemoryGraph",
    "consensus_confidence",
    "sanitize_text",
    "load_graph",
    "save_graph",
]


class SourceTier(Enum):
    STANDARD = "Standard"
    ADVISORY = "Advisory"
    PREPRINT = "Preprint"
    BLOG = "Blog"

    @property
    def trust_rank(self) -> int:
        return _TIER_RANK[self]

    @classmethod
    def from_token(cls, token: str) -> "SourceTier":
        try:
            return cls(token)
        except ValueError:
            raise ValidationError(f"unknown source tier: {token!r}") from None


_TIER_RANK = {
    SourceTier.STANDARD: 3,
    SourceTier.ADVISORY: 2,
    SourceTier.PREPRINT: 1,
    SourceTier.BLOG: 0,
}


class Confidence(Enum):
    HIGH = "High"
    MEDIUM = "Medium"
    LOW = "Low"


# Zero-width and bidirectional-control code points stripped on sanitization.
_INVISIBLE_RANGES = (
    (0x200B, 0x200F),
    (0x202A, 0x202E),
    (0x2060, 0x2064),
    (0xFEFF, 0xFEFF),
)
_INVISIBLE = {cp for lo, hi in _INVISIBLE_RANGES for cp in range(lo, hi + 1)}
_STRIP_TABLE = {cp: None for cp in _INVISIBLE}

_INJECTION_PATTERNS = ("ignore previous instructions", "ignore all prior")


def sanitize_text(raw: str) -> str:
    """Strip invisible code points and drop prompt-injection lines.

    Idempotent and never longer than the input. Invisible characters are
    removed before line filtering so a pattern smuggled through zero-width
    joiners is still caught.
    """
    text = raw.replace("\r\n", "\n").replace("\r", "\n")
    text = text.translate(_STRIP_TABLE)
    kept = []
    for line in text.split("\n"):
        lowered = line.casefold()
        if any(pattern in lowered for pattern in _INJECTION_PATTERNS):
            continue
        kept.append(line)
    return "\n".join(kept)


@dataclass(frozen=True)
class Finding:
    """One recorded claim with its provenance."""

    claim: str
    source_id: str
    tier: SourceTier
    author_cluster: str
    recorded_by: "AgentRole"


@dataclass
class KnowledgeNode:
    canonical: str
    aliases: set[str] = field(default_factory=set)
    findings: list[Finding] = field(default_factory=list)


class MemoryGraph:
    """Alias-unique node store; every token resolves to at most one node."""

    def __init__(self) -> None:
        self._nodes: dict[str, KnowledgeNode] = {}
        self._alias_to_canonical: dict[str, str] = {}

    def __len__(self) -> int:
        return len(self._nodes)

    def nodes(self) -> list[KnowledgeNode]:
        return [self._nodes[name] for name in sorted(self._nodes)]

    def resolve(self, token: str) -> KnowledgeNode | None:
        """Node for a canonical name or alias, None when unknown."""
        if token in self._nodes:
            return self._nodes[token]
        canonical = self._alias_to_canonical.get(token)
        if canonical is None:
            return None
        return self._nodes[canonical]

    def upsert_node(self, canonical: str) -> KnowledgeNode:
        """Create or return the node; rejects names shadowing an alias."""
        if not canonical or not canonical.strip():
            raise ValidationError("canonical name must be non-empty")
        existing = self._nodes.get(canonical)
        if existing is not None:
            return existing
        if canonical in self._alias_to_canonical:
            owner = self._alias_to_canonical[canonical]
            raise AliasConflictError(
                f"{canonical!r} is already an alias of {owner!r}"
            )
        node = KnowledgeNode(canonical=canonical)
        self._nodes[canonical] = node
        return node

    def add_alias(self, canonical: str, alias: str) -> KnowledgeNode:
        """Make ``alias`` resolve to the node owning ``canonical``."""
        if not alias or not alias.strip():
            raise ValidationError("alias must be non-empty")
        node = self._nodes.get(canonical)
        if node is None:
            raise UnknownNodeError(f"no node with canonical name {canonical!r}")
        if alias == canonical:
            return node
        if alias in self._nodes:
            raise AliasConflictError(f"{alias!r} is the canonical name of another node")
        owner = self._alias_to_canonical.get(alias)
        if owner is not None:
            if owner == canonical:
                return node
            raise AliasConflictError(f"{alias!r} is already an alias of {owner!r}")
        node.aliases.add(alias)
        self._alias_to_canonical[alias] = canonical
        return node

    def record_finding(self, token: str, finding: Finding) -> KnowledgeNode:
        """Append a finding to the node the token resolves to.

        Claims must already be sanitized and non-empty; arrival order is
        preserved per node.
        """
        node = self.resolve(token)
        if node is None:
            raise UnknownNodeError(f"no node resolves {token!r}")
        if sanitize_text(finding.claim) != finding.claim:
            raise ValidationError("finding claim must be sanitized before recording")
        if not finding.claim.strip():
            raise ValidationError("finding claim must be non-empty")
        node.findings.append(finding)
        return node


def consensus_confidence(findings: list[Finding]) -> Confidence:
    """High on any standards-tier support; Medium needs two independent
    advisory/preprint author clusters; everything else is Low."""
    if not findings:
        raise ValidationError("consensus requires at least one finding")
    if any(f.tier is SourceTier.STANDARD for f in findings):
        return Confidence.HIGH
    clusters = {
        f.author_cluster
        for f in findings
        if f.tier in (SourceTier.ADVISORY, SourceTier.PREPRINT)
    }
    if len(clusters) >= 2:
        return Confidence.MEDIUM
    return Confidence.LOW


def _role_token(role: object) -> str:
    value = getattr(role, "value", role)
    return str(value)


def graph_to_dict(graph: MemoryGraph) -> dict:
    """JSON-ready snapshot with deterministic ordering."""
    return {
        "nodes": [
            {
                "canonical": node.canonical,
                "aliases": sorted(node.aliases),
                "findings": [
                    {
                        "claim": f.claim,
                        "source_id": f.source_id,
                        "tier": f.tier.value,
                        "author_cluster": f.author_cluster,
                        "recorded_by": _role_token(f.recorded_by),
                    }
                    for f in node.findings
                ],
            }
            for node in graph.nodes()
        ]
    }


def graph_from_dict(data: dict) -> MemoryGraph:
    from .agents import AgentRole

    graph = MemoryGraph()
    nodes = data.get("nodes", [])
    for entry in nodes:
        graph.upsert_node(entry["canonical"])
    for entry in nodes:
        for alias in entry.get("aliases", []):
            graph.add_alias(entry["canonical"], alias)
        for f in entry.get("findings", []):
            finding = Finding(
                claim=f["claim"],
                source_id=f["source_id"],
                tier=SourceTier.from_token(f["tier"]),
                author_cluster=f["author_cluster"],
                recorded_by=AgentRole(f["recorded_by"]),
            )
            graph.record_finding(entry["canonical"], finding)
    return graph


def save_graph(graph: MemoryGraph, path: str) -> None:
    """Atomic write: temp file in the same directory, then rename."""
    payload = json.dumps(graph_to_dict(graph), indent=2, sort_keys=False) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".memory-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def load_graph(path: str) -> MemoryGraph:
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseErrorFor(path, exc)
    if not isinstance(data, dict):
        raise ValidationError("memory file must contain a JSON object", source=path)
    return graph_from_dict(data)


def ParseErrorFor(path: str, exc: json.JSONDecodeError):
    from .errors import ParseError

    return ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, source=path)
