"""Edge-list files and the versioned JSON run report."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from .graph import Graph, build_graph

SCHEMA = "mixdim/1"


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class LoadedGraph:
    graph: Graph
    labels: tuple[str, ...] | None = None  # input label of each vertex, labelled files only


def parse_edge_list(text: str) -> LoadedGraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Blank lines and ``#`` comments are skipped.  Integer endpoints are taken
    as 0-based indices; if any endpoint is not an integer the file is read
    as labelled and vertices are numbered in order of first appearance.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty edge list")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"line {lineno}: header must be two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}")
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}")
    tokens = [t for _, toks in body for t in toks]
    labelled = not all(_is_int(t) for t in tokens)
    if not labelled:
        edges = [(int(a), int(b)) for _, (a, b) in body]
        return LoadedGraph(build_graph(n, edges))
    index: dict[str, int] = {}
    for tok in tokens:
        index.setdefault(tok, len(index))
    if len(index) != n:
        raise ParseError(f"header declares {n} vertices, edges name {len(index)} labels")
    edges = [(index[a], index[b]) for _, (a, b) in body]
    return LoadedGraph(build_graph(n, edges), tuple(index))


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def read_edge_list(path: str | Path) -> LoadedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_edge_list(text)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [] if comment is None else [f"# {c}" for c in comment.splitlines()]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_digest(g: Graph) -> str:
    """SHA-256 of the canonical edge list."""
    return "sha256:" + hashlib.sha256(format_edge_list(g).encode()).hexdigest()


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


@dataclass
class RunReport:
    command: list[str]
    input_digest: str | None
    results: dict[str, Any]
    timing: dict[str, float] = field(default_factory=dict)
    stats: dict[str, Any] = field(default_factory=dict)
    schema: str = SCHEMA

    def to_json(self) -> str:
        return dumps(asdict(self))

    def results_json(self) -> str:
        return dumps(self.results)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ParseError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)
