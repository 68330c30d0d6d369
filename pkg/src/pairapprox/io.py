"""Plain-text formats for graphs, digraphs and set systems.

Graph::

    # comment
    4
    0 1
    1 2

Digraph: identical except the header reads ``digraph 4`` and ``u v`` means the
arc ``u -> v``. Set system: header ``num_sets num_elements``, then line ``i``
lists the elements of set ``i`` (a blank line is an empty set).

Vertex labels, when present, are written as ``#@label <id> <text>`` lines so
they survive a round trip while remaining comments to other readers.
"""

from __future__ import annotations

import os
import tempfile

from .graph import Digraph, Graph, SetSystem

__all__ = [
    "ParseError",
    "parse_graph",
    "parse_digraph",
    "parse_setsystem",
    "parse_any",
    "serialize_graph",
    "serialize_digraph",
    "serialize_setsystem",
    "serialize",
    "read_file",
    "write_atomic",
]

_LABEL = "#@label"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {text!r}", lineno) from None


def _parse_pairs(text: str, directed: bool):
    n = None
    labels: dict[int, str] = {}
    pairs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    what = "arc" if directed else "edge"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith(_LABEL):
            parts = raw[len(_LABEL):].strip().split(None, 1)
            if not parts:
                raise ParseError("label line without a vertex id", lineno)
            v = _ints(parts[0], lineno)[0]
            labels[v] = parts[1] if len(parts) > 1 else ""
            continue
        body = _strip(raw)
        if not body:
            continue
        if n is None:
            toks = body.split()
            if directed:
                if len(toks) != 2 or toks[0] != "digraph":
                    raise ParseError("expected header 'digraph <n>'", lineno)
                toks = toks[1:]
            elif toks[0] == "digraph":
                raise ParseError("this is a digraph file; expected a graph header '<n>'", lineno)
            vals = _ints(" ".join(toks), lineno)
            if len(vals) != 1 or vals[0] < 0:
                raise ParseError("header must be a single nonnegative vertex count", lineno)
            n = vals[0]
            continue
        vals = _ints(body, lineno)
        if len(vals) != 2:
            raise ParseError(f"expected '<u> <v>', got {body!r}", lineno)
        u, v = vals
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"{what} ({u}, {v}) has an endpoint outside 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate {what} ({u}, {v}), first seen on line {seen[key]}", lineno)
        seen[key] = lineno
        pairs.append((u, v))
    if n is None:
        raise ParseError("missing header")
    label_list = None
    if labels:
        if any(not 0 <= v < n for v in labels):
            raise ParseError("label for a vertex outside the graph")
        label_list = [labels.get(v, "") for v in range(n)]
    return n, pairs, label_list


def parse_graph(text: str) -> Graph:
    n, pairs, labels = _parse_pairs(text, directed=False)
    return Graph.from_edges(n, pairs, labels)


def parse_digraph(text: str) -> Digraph:
    n, pairs, labels = _parse_pairs(text, directed=True)
    return Digraph.from_arcs(n, pairs, labels)


def parse_setsystem(text: str) -> SetSystem:
    header = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if header is None:
            if not body:
                continue
            vals = _ints(body, lineno)
            if len(vals) != 2 or min(vals) < 0:
                raise ParseError("header must be '<num_sets> <num_elements>'", lineno)
            header = vals
            continue
        if not body and raw.strip().startswith("#"):
            continue
        vals = _ints(body, lineno)
        if len(rows) == header[0]:
            if vals:
                raise ParseError(f"more than {header[0]} set lines", lineno)
            continue
        for e in vals:
            if not 0 <= e < header[1]:
                raise ParseError(f"element {e} outside 0..{header[1] - 1}", lineno)
        if len(set(vals)) != len(vals):
            raise ParseError("element listed twice in one set", lineno)
        rows.append(vals)
    if header is None:
        raise ParseError("missing header")
    return SetSystem(header[0], header[1], rows)


def parse_any(text: str):
    """Dispatch on the header: ``digraph n``, ``a b`` (set system) or ``n``."""
    for raw in text.splitlines():
        if raw.startswith(_LABEL):
            continue
        body = _strip(raw)
        if not body:
            continue
        toks = body.split()
        if toks[0] == "digraph":
            return parse_digraph(text)
        if len(toks) == 2:
            return parse_setsystem(text)
        return parse_graph(text)
    raise ParseError("empty input")


def _label_lines(labels) -> list[str]:
    if labels is None:
        return []
    return [f"{_LABEL} {v} {lab}" for v, lab in enumerate(labels)]


def serialize_graph(g: Graph) -> str:
    lines = [str(g.n)] + _label_lines(g.labels)
    lines += [f"{u} {v}" for u, v in g.edges().tolist()]
    return "\n".join(lines) + "\n"


def serialize_digraph(d: Digraph) -> str:
    lines = [f"digraph {d.n}"] + _label_lines(d.labels)
    lines += [f"{u} {v}" for u, v in d.arcs().tolist()]
    return "\n".join(lines) + "\n"


def serialize_setsystem(s: SetSystem) -> str:
    lines = [f"{s.num_sets} {s.num_elements}"]
    lines += [" ".join(map(str, row)) for row in s.incidence]
    return "\n".join(lines) + "\n"


def serialize(obj) -> str:
    if isinstance(obj, Graph):
        return serialize_graph(obj)
    if isinstance(obj, Digraph):
        return serialize_digraph(obj)
    if isinstance(obj, SetSystem):
        return serialize_setsystem(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def read_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_any(fh.read())


def write_atomic(path, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
