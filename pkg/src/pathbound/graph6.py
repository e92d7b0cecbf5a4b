"""Bit-exact graph6 encoding and parsing for graphs on up to 64 vertices.

Format: a size prefix (one byte 63+n for n <= 62, else '~' plus three
bytes carrying an 18-bit big-endian value), then the upper triangle of the
adjacency matrix in column-major order -- x(0,1), x(0,2), x(1,2),
x(0,3), ... -- packed big-endian six bits per byte, each byte offset by
63, zero-padded to a byte boundary.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 record; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        # long size form: '~' then 18 bits in three sextets
        out = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    s = line.rstrip("\n")
    if not s:
        raise Graph6Error("empty record", 0)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", off)
    if s[0] != "~":
        n = ord(s[0]) - 63
        body_at = 1
    else:
        if len(s) < 4:
            raise Graph6Error("truncated long size form", len(s))
        if s[1] == "~":
            raise Graph6Error("8-byte size form exceeds the 64-vertex cap", 1)
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body_at = 4
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside [1, {MAX_VERTICES}]", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - body_at < nbytes:
        raise Graph6Error(f"record too short: need {nbytes} body bytes", len(s))
    if len(s) - body_at > nbytes:
        raise Graph6Error("trailing garbage after edge data", body_at + nbytes)
    adj = [0] * n
    bit = 0
    i, j = 0, 1
    for k in range(nbytes):
        word = ord(s[body_at + k]) - 63
        for sh in range(5, -1, -1):
            if bit < nbits:
                if word >> sh & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                bit += 1
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif word >> sh & 1:
                raise Graph6Error("nonzero padding bits", body_at + k)
    return Graph(n, tuple(adj))
