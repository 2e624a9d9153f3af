"""
Line-oriented text formats.

A document is a sequence of records; ``#`` starts a comment line and blank
lines are ignored::

    family alpha n=6 L=0,1,2 H=3,4,6
    graph F0
    partL 0 1 2
    partH 3 4 6
    edge 0 3
    labeling alpha
    charK 2
    map 0 0
    assign 0 1 7
    decomposition K 5 guest P
    rotation 5
    block 0
    map 0 k 3

Product vertices are written as tuples without spaces, e.g. ``(2,6)``.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from typing import Optional

from .decompositions import Decomposition, Host
from .errors import ParseError
from .graph import BipartiteGraph, sort_vertices, vertex_key
from .labelings import BigracefulLabeling, VertexLabeling, normalize_kind
from .products import GammaFamily

__all__ = [
    "GraphRecord",
    "FamilyHeader",
    "Document",
    "parse_vertex",
    "format_vertex",
    "parse_document",
    "parse_graph_file",
    "format_graph",
    "format_labeling",
    "format_family",
    "format_assignment",
    "format_decomposition",
    "family_from_document",
    "decomposition_from_document",
]


@dataclass
class GraphRecord:
    name: str
    graph: BipartiteGraph
    labeling: object = None


@dataclass
class FamilyHeader:
    kind: str
    edge_count: int
    low: frozenset
    high: frozenset


@dataclass
class DecompositionRecord:
    host: Host
    guest: str
    rotation: Optional[int] = None
    blocks: list = field(default_factory=list)


@dataclass
class Document:
    graphs: list = field(default_factory=list)
    family: Optional[FamilyHeader] = None
    assignment: Optional[dict] = None
    decomposition: Optional[DecompositionRecord] = None

    def graph(self, index: int = 0) -> GraphRecord:
        if not self.graphs:
            raise ParseError("no graph in input")
        return self.graphs[index]


def _valid_vertex(v) -> bool:
    if isinstance(v, bool):
        return False
    if isinstance(v, int):
        return v >= 0
    return isinstance(v, tuple) and len(v) > 0 and all(_valid_vertex(c) for c in v)


def parse_vertex(token: str, lineno: Optional[int] = None):
    try:
        v = ast.literal_eval(token)
    except (ValueError, SyntaxError):
        raise ParseError(f"bad vertex {token!r}", lineno) from None
    if not _valid_vertex(v):
        raise ParseError(f"bad vertex {token!r}", lineno)
    return v


def format_vertex(v) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(format_vertex(c) for c in v) + ")"
    return str(v)


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def _int_list(text, lineno):
    if not text:
        return frozenset()
    return frozenset(_int(t, lineno) for t in text.split(","))


class _GraphBuilder:
    def __init__(self, name, lineno):
        self.name = name
        self.lineno = lineno
        self.low, self.high, self.edges = [], [], []
        self.declared = set()
        self.labeling_kind = None
        self.labeling_line = None
        self.maps = {"map": {}, "mapA": {}, "mapB": {}}
        self.charK = None
        self.partA = self.partB = None

    def declare(self, part, tokens, lineno):
        for t in tokens:
            v = parse_vertex(t, lineno)
            if v in self.declared:
                raise ParseError(f"duplicate vertex {t}", lineno)
            self.declared.add(v)
            part.append(v)

    def vertex(self, token, lineno):
        v = parse_vertex(token, lineno)
        if v not in self.declared:
            raise ParseError(f"vertex {token} is not declared in partL/partH", lineno)
        return v

    def add_edge(self, tokens, lineno):
        if len(tokens) != 2:
            raise ParseError("edge takes two vertices", lineno)
        u, v = (self.vertex(t, lineno) for t in tokens)
        if u == v:
            raise ParseError(f"self-loop at {tokens[0]}", lineno)
        if frozenset((u, v)) in {frozenset(e) for e in self.edges}:
            raise ParseError(f"duplicate edge {tokens[0]} {tokens[1]}", lineno)
        self.edges.append((u, v))

    def labeling_entry(self, keyword, tokens, lineno):
        kind = self.labeling_kind
        if kind is None:
            raise ParseError(f"{keyword} outside a labeling block", lineno)
        allowed = {
            "beta": {"map"},
            "alpha": {"map", "charK"},
            "near_alpha": {"map", "partA", "partB"},
            "bigraceful": {"mapA", "mapB", "partA", "partB"},
        }[kind]
        if keyword not in allowed:
            raise ParseError(f"{keyword} is not valid in a {kind} labeling", lineno)
        if keyword == "charK":
            if len(tokens) != 1:
                raise ParseError("charK takes one integer", lineno)
            self.charK = _int(tokens[0], lineno)
        elif keyword in ("partA", "partB"):
            vs = frozenset(self.vertex(t, lineno) for t in tokens)
            if keyword == "partA":
                self.partA = vs
            else:
                self.partB = vs
        else:
            if len(tokens) != 2:
                raise ParseError(f"{keyword} takes a vertex and a value", lineno)
            v = self.vertex(tokens[0], lineno)
            if v in self.maps[keyword]:
                raise ParseError(f"vertex {tokens[0]} labeled twice", lineno)
            self.maps[keyword][v] = _int(tokens[1], lineno)

    def build(self) -> GraphRecord:
        G = BipartiteGraph(frozenset(self.declared), self.edges, self.low, self.high)
        labeling = None
        kind, at = self.labeling_kind, self.labeling_line
        if kind == "bigraceful":
            if self.partA is None or self.partB is None:
                raise ParseError("bigraceful labeling needs partA and partB", at)
            labeling = BigracefulLabeling(self.maps["mapA"], self.maps["mapB"], (self.partA, self.partB))
        elif kind is not None:
            if kind == "alpha" and self.charK is None:
                raise ParseError("alpha labeling needs charK", at)
            if kind == "near_alpha" and (self.partA is None or self.partB is None):
                raise ParseError("near-alpha labeling needs partA and partB", at)
            parts = (self.partA, self.partB) if kind == "near_alpha" else None
            labeling = VertexLabeling(self.maps["map"], kind, characteristic=self.charK, parts=parts)
        return GraphRecord(self.name, G, labeling)


def parse_document(text: str) -> Document:
    """Parse any mix of records. Errors carry the offending line number."""
    doc = Document()
    builder = None
    dec = None

    def close():
        nonlocal builder
        if builder is not None:
            doc.graphs.append(builder.build())
            builder = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *tokens = line.split()
        if keyword == "graph":
            close()
            dec = None
            builder = _GraphBuilder(tokens[0] if tokens else f"G{len(doc.graphs)}", lineno)
        elif keyword in ("partL", "partH"):
            if builder is None or builder.edges or builder.labeling_kind:
                raise ParseError(f"{keyword} must follow a graph line", lineno)
            builder.declare(builder.low if keyword == "partL" else builder.high, tokens, lineno)
        elif keyword == "edge":
            if builder is None or builder.labeling_kind:
                raise ParseError("edge outside a graph block", lineno)
            builder.add_edge(tokens, lineno)
        elif keyword == "labeling":
            if builder is None:
                raise ParseError("labeling outside a graph block", lineno)
            if builder.labeling_kind is not None:
                raise ParseError("second labeling for one graph", lineno)
            if len(tokens) != 1:
                raise ParseError("labeling takes a kind", lineno)
            try:
                builder.labeling_kind = normalize_kind(tokens[0])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            builder.labeling_line = lineno
        elif keyword in ("charK", "partA", "partB", "mapA", "mapB") or (keyword == "map" and dec is None):
            if builder is None:
                raise ParseError(f"{keyword} outside a graph block", lineno)
            builder.labeling_entry(keyword, tokens, lineno)
        elif keyword == "family":
            close()
            if doc.family is not None:
                raise ParseError("second family header", lineno)
            doc.family = _parse_family(tokens, lineno)
        elif keyword == "assign":
            close()
            if len(tokens) != 3:
                raise ParseError("assign takes two vertices and an index", lineno)
            u, v = parse_vertex(tokens[0], lineno), parse_vertex(tokens[1], lineno)
            doc.assignment = doc.assignment or {}
            key = (u, v)
            if key in doc.assignment or (v, u) in doc.assignment:
                raise ParseError(f"edge {tokens[0]} {tokens[1]} assigned twice", lineno)
            doc.assignment[key] = _int(tokens[2], lineno)
        elif keyword == "decomposition":
            close()
            if doc.decomposition is not None:
                raise ParseError("second decomposition", lineno)
            dec = _parse_decomposition_header(tokens, lineno)
            doc.decomposition = dec
        elif keyword == "rotation":
            if dec is None:
                raise ParseError("rotation outside a decomposition", lineno)
            if len(tokens) != 1:
                raise ParseError("rotation takes one integer", lineno)
            dec.rotation = _int(tokens[0], lineno)
        elif keyword == "block":
            if dec is None:
                raise ParseError("block outside a decomposition", lineno)
            if len(tokens) != 1 or _int(tokens[0], lineno) != len(dec.blocks):
                raise ParseError("blocks must be numbered 0, 1, ... in order", lineno)
            dec.blocks.append({})
        elif keyword == "map":
            if not dec.blocks:
                raise ParseError("map before the first block", lineno)
            if len(tokens) != 3:
                raise ParseError("block map takes a guest vertex and a host vertex", lineno)
            g = parse_vertex(tokens[0], lineno)
            if g in dec.blocks[-1]:
                raise ParseError(f"guest vertex {tokens[0]} mapped twice", lineno)
            dec.blocks[-1][g] = _parse_host_vertex(dec.host, tokens[1], tokens[2], lineno)
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    close()
    return doc


def _parse_family(tokens, lineno):
    if not tokens:
        raise ParseError("family header needs a kind", lineno)
    try:
        kind = normalize_kind(tokens[0])
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
    fields = {}
    for t in tokens[1:]:
        key, sep, value = t.partition("=")
        if not sep or key not in ("n", "L", "H"):
            raise ParseError(f"bad family field {t!r}", lineno)
        fields[key] = value
    if set(fields) != {"n", "L", "H"}:
        raise ParseError("family header needs n=, L= and H=", lineno)
    return FamilyHeader(kind, _int(fields["n"], lineno), _int_list(fields["L"], lineno), _int_list(fields["H"], lineno))


def _parse_decomposition_header(tokens, lineno):
    if len(tokens) != 4 or tokens[2] != "guest" or tokens[0] not in ("K", "KNN"):
        raise ParseError("expected: decomposition K <m>|KNN <n> guest <name>", lineno)
    try:
        host = Host(tokens[0], _int(tokens[1], lineno))
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
    return DecompositionRecord(host, tokens[3])


def _parse_host_vertex(host, tag, index, lineno):
    i = _int(index, lineno)
    if host.kind == "K":
        if tag != "k":
            raise ParseError("complete-host vertices are written 'k <i>'", lineno)
        return i
    if tag not in ("x", "y"):
        raise ParseError("bipartite-host vertices are written 'x <i>' or 'y <i>'", lineno)
    return (tag, i)


def parse_graph_file(text: str) -> GraphRecord:
    """The first graph record of a document (with its labeling, if any)."""
    return parse_document(text).graph(0)


def family_from_document(doc: Document) -> GammaFamily:
    if doc.family is None:
        raise ParseError("no family header")
    hdr = doc.family
    high = hdr.high
    if hdr.kind == "bigraceful":
        high = frozenset(hdr.edge_count + y for y in hdr.high)
    return GammaFamily(tuple(r.graph for r in doc.graphs), hdr.low, high, hdr.edge_count, hdr.kind)


def decomposition_from_document(doc: Document) -> Decomposition:
    rec = doc.decomposition
    if rec is None:
        raise ParseError("no decomposition record")
    guests = [g for g in doc.graphs if g.name == rec.guest]
    if len(guests) != 1:
        raise ParseError(f"guest graph {rec.guest!r} not found exactly once")
    if rec.rotation is None:
        raise ParseError("decomposition has no rotation line")
    return Decomposition(rec.host, guests[0].graph, tuple(rec.blocks), rec.rotation)


# -- serialization -----------------------------------------------------------


def _vs(vertices) -> str:
    return " ".join(format_vertex(v) for v in sort_vertices(vertices))


def format_graph(name: str, G: BipartiteGraph, labeling=None) -> str:
    lines = [f"graph {name}", f"partL {_vs(G.part_low)}".rstrip(), f"partH {_vs(G.part_high)}".rstrip()]
    for u, v in G.sorted_edges():
        lines.append(f"edge {format_vertex(u)} {format_vertex(v)}")
    text = "\n".join(lines) + "\n"
    if labeling is not None:
        text += format_labeling(labeling)
    return text


def format_labeling(labeling) -> str:
    kind = labeling.kind
    lines = [f"labeling {kind}"]
    if kind == "bigraceful":
        A, B = labeling.parts
        lines += [f"partA {_vs(A)}".rstrip(), f"partB {_vs(B)}".rstrip()]
        lines += [f"mapA {format_vertex(v)} {labeling.f_A[v]}" for v in sort_vertices(labeling.f_A)]
        lines += [f"mapB {format_vertex(v)} {labeling.f_B[v]}" for v in sort_vertices(labeling.f_B)]
    else:
        if kind == "alpha":
            lines.append(f"charK {labeling.characteristic}")
        if kind == "near_alpha":
            A, B = labeling.parts
            lines += [f"partA {_vs(A)}".rstrip(), f"partB {_vs(B)}".rstrip()]
        f = labeling.assignment
        lines += [f"map {format_vertex(v)} {f[v]}" for v in sort_vertices(f)]
    return "\n".join(lines) + "\n"


def format_family(family: GammaFamily, prefix: str = "F") -> str:
    low = ",".join(str(v) for v in sorted(family.low))
    high = ",".join(str(v) for v in sorted(family.high_labels()))
    header = f"family {family.kind} n={family.edge_count} L={low} H={high}\n"
    blocks = [format_graph(f"{prefix}{i}", F) for i, F in enumerate(family.members)]
    return header + "".join("\n" + b for b in blocks)


def format_assignment(h: dict) -> str:
    items = sorted(h.items(), key=lambda kv: (vertex_key(kv[0][0]), vertex_key(kv[0][1])))
    return "".join(f"assign {format_vertex(u)} {format_vertex(v)} {i}\n" for (u, v), i in items)


def _format_host_vertex(v) -> str:
    if isinstance(v, tuple):
        return f"{v[0]} {v[1]}"
    return f"k {v}"


def format_decomposition(dec: Decomposition, guest_name: str = "G") -> str:
    lines = [f"decomposition {dec.host.kind} {dec.host.order} guest {guest_name}", f"rotation {dec.rotation}"]
    for j, block in enumerate(dec.base_blocks):
        lines.append(f"block {j}")
        lines += [f"map {format_vertex(g)} {_format_host_vertex(block[g])}" for g in sort_vertices(block)]
    return format_graph(guest_name, dec.guest) + "\n".join(lines) + "\n"
