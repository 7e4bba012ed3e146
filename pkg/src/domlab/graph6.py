"""Bit-exact reader and writer for the graph6 one-line format.

A line is a size header followed by the upper triangle of the adjacency
matrix in column-major order -- x(0,1), x(0,2), x(1,2), x(0,3), ... --
packed six bits per byte, each byte offset by 63, the final byte padded
with zero bits.  The header is a single byte n+63 for n <= 62, or '~'
followed by three bytes carrying an 18-bit big-endian value for larger n.
Every byte of a valid line lies in 63..126.  The optional '>>graph6<<'
prefix is accepted and stripped.
"""

from __future__ import annotations

from .graphs import Graph

HEADER_PREFIX = ">>graph6<<"
MAX_N = 258047  # largest size expressible in the 4-byte header form


class Graph6ParseError(ValueError):
    """Malformed graph6 input; `offset` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = text.rstrip("\r\n")
    if line.startswith(HEADER_PREFIX):
        line = line[len(HEADER_PREFIX):]
    if not line:
        raise Graph6ParseError("empty graph6 line", 0)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"character {ch!r} outside graph6 range 63..126", i)
    n, pos = _parse_size(line)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = line[pos:]
    if len(payload) < nbytes:
        raise Graph6ParseError(
            f"truncated bit vector: need {nbytes} payload bytes, found {len(payload)}",
            len(line),
        )
    if len(payload) > nbytes:
        raise Graph6ParseError("trailing data after bit vector", pos + nbytes)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            group = ord(payload[bit // 6]) - 63
            if (group >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    return Graph.from_edges(n, edges)


def _parse_size(line: str) -> tuple[int, int]:
    code = ord(line[0]) - 63
    if code < 63:
        return code, 1
    if len(line) >= 2 and line[1] == "~":
        raise Graph6ParseError("8-byte size header not supported", 1)
    if len(line) < 4:
        raise Graph6ParseError("truncated size header", len(line))
    n = 0
    for i in (1, 2, 3):
        n = (n << 6) | (ord(line[i]) - 63)
    return n, 4


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as one canonical graph6 line (zero padding)."""
    n = g.n
    if n > MAX_N:
        raise ValueError(f"graph6 encoding supports at most {MAX_N} vertices, got {n}")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [
            "~",
            chr(((n >> 12) & 63) + 63),
            chr(((n >> 6) & 63) + 63),
            chr((n & 63) + 63),
        ]
    group = 0
    nbits = 0
    for j in range(1, n):
        row = set(g.adj[j])
        for i in range(j):
            group = (group << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def read_graph6_lines(path: str) -> list[str]:
    """Graph6 lines from a corpus file; blank and '#' comment lines skipped."""
    lines = []
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            lines.append(line)
    return lines
