"""Text formats.

Graph file::

    # comment
    p graph <n> <m>
    <u> <v>          (m lines, 0-based ids)

Representation file, one line per vertex with ascending elements::

    <v>: <e1> <e2> ...

Target file: vertex ids separated by whitespace.  CNF files are DIMACS
(``p cnf <vars> <clauses>``, clauses terminated by ``0``); a comment line
``c mode: nae`` marks a not-all-equal instance.
"""

from __future__ import annotations

from .graph import Graph
from .reductions import CnfInstance, SatMode
from .representation import Representation


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _content_lines(text: str, comment: str = "#"):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith(comment):
            yield no, line


def _ints(parts, no):
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(parts)!r}", no) from None


def parse_graph(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("missing 'p graph <n> <m>' header")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 4 or parts[:2] != ["p", "graph"]:
        raise FormatError("malformed header, expected 'p graph <n> <m>'", no)
    n, m = _ints(parts[2:], no)
    if n < 0 or m < 0:
        raise FormatError("negative count in header", no)
    edges = set()
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("edge line needs exactly two vertex ids", no)
        u, v = _ints(parts, no)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", no)
        for w in (u, v):
            if not 0 <= w < n:
                raise FormatError(f"vertex id {w} out of range 0..{n - 1}", no)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise FormatError(f"duplicate edge {u} {v}", no)
        edges.add(key)
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    out = [f"p graph {g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


def parse_representation(text: str) -> Representation:
    sets = {}
    for no, line in _content_lines(text):
        head, sep, tail = line.partition(":")
        if not sep:
            raise FormatError("expected '<vertex>: <elements>'", no)
        (v,) = _ints([head.strip()], no)
        if v < 0:
            raise FormatError(f"negative vertex id {v}", no)
        if v in sets:
            raise FormatError(f"duplicate line for vertex {v}", no)
        elems = _ints(tail.split(), no)
        if not elems:
            raise FormatError(f"vertex {v} has an empty set", no)
        if any(e < 0 for e in elems):
            raise FormatError("element ids must be nonnegative", no)
        if elems != sorted(set(elems)):
            raise FormatError("elements must be strictly ascending", no)
        sets[v] = frozenset(elems)
    n = len(sets)
    missing = sorted(set(range(n)) - sets.keys())
    if missing:
        raise FormatError(f"no set for vertex {missing[0]} (vertices must be 0..n-1)")
    return Representation(tuple(sets[v] for v in range(n)))


def format_representation(r: Representation) -> str:
    return "".join(f"{v}: {' '.join(map(str, sorted(s)))}\n" for v, s in enumerate(r.sets))


def parse_targets(text: str) -> frozenset:
    out = set()
    for no, line in _content_lines(text):
        out.update(_ints(line.replace(",", " ").split(), no))
    return frozenset(out)


def format_targets(a) -> str:
    return " ".join(map(str, sorted(a))) + "\n"


def parse_dimacs(text: str) -> CnfInstance:
    mode = SatMode.STANDARD
    header = None
    lits = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("c"):
            body = line[1:].strip().lower().replace(" ", "")
            if body == "mode:nae":
                mode = SatMode.NAE
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise FormatError("malformed header, expected 'p cnf <vars> <clauses>'", no)
            header = tuple(_ints(parts[2:], no))
            continue
        if header is None:
            raise FormatError("clause before 'p cnf' header", no)
        lits.extend((no, x) for x in _ints(line.split(), no))
    if header is None:
        raise FormatError("missing 'p cnf' header")
    clauses, cur = [], []
    for no, x in lits:
        if x == 0:
            if len(cur) != 3:
                raise FormatError(f"clause has {len(cur)} literals, expected 3", no)
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        raise FormatError("last clause is not terminated by 0")
    nv, nc = header
    if nc != len(clauses):
        raise FormatError(f"header declares {nc} clauses, found {len(clauses)}")
    try:
        return CnfInstance(nv, tuple(clauses), mode)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_dimacs(f: CnfInstance) -> str:
    out = []
    if f.mode is SatMode.NAE:
        out.append("c mode: nae")
    out.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    out += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(out) + "\n"
