# yclaw/formats.py
"""graph6, edge-list and DOT codecs.

graph6 packing and unpacking is done by networkx; this module adds the
checks networkx leaves out (byte offsets of bad input, size-prefix form,
zero padding) and maps failures to GraphFormatError.
"""
from __future__ import annotations

from collections.abc import Iterator

import networkx as nx

from yclaw.graph import Graph, GraphValueError

HEADER = b">>graph6<<"


class GraphFormatError(ValueError):
    """Raised on malformed graph input; ``offset`` is a byte offset or line number."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


# ------------------------- graph6 -------------------------


def _ascii(text: bytes | str) -> bytes:
    if not isinstance(text, str):
        return bytes(text)
    try:
        return text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError(f"non-ascii character {text[exc.start]!r}", exc.start) from None


def emit_graph6(g: Graph) -> bytes:
    """Encode g as graph6 without header or trailing newline."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n")


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header and newline)."""
    data = _ascii(text)
    base = 0
    if data.startswith(HEADER):
        data = data[len(HEADER) :]
        base = len(HEADER)
    data = data.rstrip(b"\r\n")
    n = _check_graph6(data, base)
    h = nx.from_graph6_bytes(data)
    return Graph.from_edges(n, sorted(tuple(sorted(e)) for e in h.edges))


def _check_graph6(data: bytes, base: int) -> int:
    """Validate a headerless graph6 body and return its vertex count."""
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"non-printable or out-of-range byte {byte!r}", base + i)
    if not data:
        raise GraphFormatError("missing size byte", base)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 36-bit size field", base)
        n, pos = _unpack(data[2:8]), 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 18-bit size field", base)
        n, pos = _unpack(data[1:4]), 4
        if n < 63:
            raise GraphFormatError(f"size {n} must use the one-byte form", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphFormatError(
            f"expected {need} data bytes for n={n}, found {len(body)}", base + pos
        )
    if need:
        pad = 6 * need - nbits
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise GraphFormatError("nonzero padding bits", base + pos + need - 1)
    return n


def _unpack(chunk: bytes) -> int:
    value = 0
    for byte in chunk:
        value = value << 6 | (byte - 63)
    return value


def parse_graphs(text: bytes | str) -> Iterator[Graph]:
    """Yield one graph per non-empty graph6 line."""
    data = _ascii(text)
    for line in data.splitlines():
        if line.strip():
            yield parse_graph6(line.strip())


# ------------------------- edge list -------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by m lines ``"u v"``; blank lines are ignored."""
    lines = [(no, line.split()) for no, line in enumerate(text.splitlines(), 1) if line.strip()]
    if not lines:
        raise GraphFormatError("missing 'n m' header", 1)
    no, head = lines[0]
    n, m = _ints(head, no, 2)
    if n < 0 or m < 0:
        raise GraphFormatError("negative size in header", no)
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}", no)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for no, tokens in body:
        u, v = _ints(tokens, no, 2)
        try:
            Graph.from_edges(n, [(u, v)])
        except GraphValueError as exc:
            raise GraphFormatError(str(exc), no) from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u}-{v}", no)
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _ints(tokens: list[str], line_no: int, count: int) -> list[int]:
    if len(tokens) != count:
        raise GraphFormatError(f"expected {count} integers, got {len(tokens)} tokens", line_no)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {tokens}", line_no) from None


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}", *(f"{u} {v}" for u, v in g.edges)]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT text with one node statement per vertex and one edge statement per edge."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(data: bytes, fmt: str = "auto") -> Graph:
    """Decode a single graph in ``graph6``, ``edges`` or sniffed (``auto``) format."""
    if fmt == "auto":
        first = data.strip().split(b"\n", 1)[0]
        fmt = "edges" if len(first.split()) == 2 else "graph6"
    if fmt == "edges":
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError("invalid utf-8", exc.start) from None
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(data.strip())
    raise GraphFormatError(f"unknown format {fmt!r}", 0)
