"""Bit-exact graph6 / sparse6 text encoding, plus the header-comment
convention that carries designated vertices (s, t, v, d, strength) in files.

Format reference: McKay's formats.txt.  Simple graphs use graph6, multigraphs
use sparse6.  One graph per LF-terminated line.  Metadata lines look like

    >>s=0,t=9,v=10,strength=strong<<

and apply to every following graph line until the next metadata line.
"""

from __future__ import annotations

from typing import Iterable

from .errors import GraphFormatError
from .graphs import Graph, MultiGraph


# ---------------------------------------------------------------------------
# Size field N(n)
# ---------------------------------------------------------------------------


def _encode_n(n: int) -> list[int]:
    if n < 0:
        raise GraphFormatError(f"negative vertex count {n}")
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> (6 * i)) & 63) + 63 for i in (2, 1, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> (6 * i)) & 63) + 63 for i in (5, 4, 3, 2, 1, 0)]
    raise GraphFormatError(f"vertex count {n} exceeds format limit")


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    """Return (n, next_pos); pos indexes into the raw line bytes."""
    if pos >= len(data):
        raise GraphFormatError("truncated size field", pos)
    c = data[pos] - 63
    if c < 0 or c > 63:
        raise GraphFormatError(f"invalid byte {data[pos]}", pos)
    if c != 63:
        return c, pos + 1
    if pos + 1 < len(data) and data[pos + 1] - 63 == 63:
        chunk = data[pos + 2 : pos + 8]
        if len(chunk) < 6:
            raise GraphFormatError("truncated size field", pos)
        n = 0
        for b in chunk:
            n = (n << 6) | _val(b, pos)
        return n, pos + 8
    chunk = data[pos + 1 : pos + 4]
    if len(chunk) < 3:
        raise GraphFormatError("truncated size field", pos)
    n = 0
    for b in chunk:
        n = (n << 6) | _val(b, pos)
    return n, pos + 4


def _val(byte: int, offset: int) -> int:
    v = byte - 63
    if v < 0 or v > 63:
        raise GraphFormatError(f"invalid byte {byte}", offset)
    return v


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            bits.append((col >> u) & 1)
    out = _encode_n(g.n)
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        out.append(
            (group[0] << 5 | group[1] << 4 | group[2] << 3
             | group[3] << 2 | group[4] << 1 | group[5]) + 63
        )
    return "".join(chr(b) for b in out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    n, pos = _decode_n(data, 0)
    if n < 1:
        raise GraphFormatError("graph6 line with zero vertices", 0)
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    body = data[pos : pos + nbytes]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"graph6 body too short: need {nbytes} bytes, have {len(body)}", pos
        )
    if pos + nbytes != len(data):
        raise GraphFormatError("trailing bytes after graph6 body", pos + nbytes)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = _val(body[idx // 6], pos + idx // 6)
            if (byte >> (5 - idx % 6)) & 1:
                edges.append((u, v))
            idx += 1
    # padding bits must be zero
    while idx < 6 * nbytes:
        byte = _val(body[idx // 6], pos + idx // 6)
        if (byte >> (5 - idx % 6)) & 1:
            raise GraphFormatError("nonzero padding in graph6 body", pos + idx // 6)
        idx += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# sparse6
# ---------------------------------------------------------------------------


def _k_for(n: int) -> int:
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def encode_sparse6(g: MultiGraph) -> str:
    n = g.n
    k = _k_for(n)
    edge_list: list[tuple[int, int]] = []
    for (u, v), m in sorted(g.mult.items(), key=lambda e: (max(e[0]), min(e[0]))):
        edge_list += [(max(u, v), min(u, v))] * m
    bits: list[int] = []

    def enc(x: int) -> None:
        for i in range(k - 1, -1, -1):
            bits.append((x >> i) & 1)

    curv = 0
    for v, u in edge_list:
        if v == curv:
            bits.append(0)
            enc(u)
        elif v == curv + 1:
            curv += 1
            bits.append(1)
            enc(u)
        else:
            curv = v
            bits.append(1)
            enc(v)
            bits.append(0)
            enc(u)
    # Pad with 1s.  If n = 2^k (k < 6), k+ padding bits after an encoding that
    # never reached vertex n-1 would decode as an extra edge, so a lone 0 bit
    # is inserted first.
    if k < 6 and n == (1 << k) and (-len(bits)) % 6 >= k and curv < n - 1:
        bits.append(0)
    bits += [1] * ((-len(bits)) % 6)
    out = [58] + _encode_n(n)  # ':' == chr(58)
    for i in range(0, len(bits), 6):
        b = bits[i : i + 6]
        out.append((b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5]) + 63)
    return "".join(chr(b) for b in out)


def decode_sparse6(text: str) -> MultiGraph:
    s = text.strip()
    if s.startswith(">>sparse6<<"):
        s = s[len(">>sparse6<<"):]
    if not s.startswith(":"):
        raise GraphFormatError("sparse6 line must start with ':'", 0)
    data = s.encode("ascii")
    n, pos = _decode_n(data, 1)
    if n < 1:
        raise GraphFormatError("sparse6 line with zero vertices", 1)
    k = _k_for(n)
    vals = [_val(b, pos + i) for i, b in enumerate(data[pos:])]
    nbits = 6 * len(vals)

    def bit(i: int) -> int:
        return (vals[i // 6] >> (5 - i % 6)) & 1

    edges = []
    v = 0
    i = 0
    while i + 1 + k <= nbits:
        b = bit(i)
        x = 0
        for j in range(i + 1, i + 1 + k):
            x = (x << 1) | bit(j)
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    return MultiGraph(n, edges)


# ---------------------------------------------------------------------------
# Dispatch + headers
# ---------------------------------------------------------------------------


def encode(g: Graph | MultiGraph) -> str:
    """graph6 for simple graphs, sparse6 for multigraphs."""
    if isinstance(g, Graph):
        return encode_graph6(g)
    return encode_sparse6(g)


def decode(text: str) -> Graph | MultiGraph:
    s = text.strip()
    if s.startswith(">>sparse6<<") or s.startswith(":"):
        return decode_sparse6(s)
    return decode_graph6(s)


def format_header(**fields) -> str:
    inner = ",".join(f"{k}={v}" for k, v in fields.items() if v is not None)
    return f">>{inner}<<"


def parse_header(line: str) -> dict[str, str]:
    s = line.strip()
    if not (s.startswith(">>") and s.endswith("<<")):
        raise GraphFormatError("not a header comment line", 0)
    inner = s[2:-2]
    out: dict[str, str] = {}
    if not inner:
        return out
    for part in inner.split(","):
        if "=" not in part:
            # bare tokens like the standard '>>graph6<<' marker
            out[part] = ""
            continue
        key, val = part.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def is_header(line: str) -> bool:
    s = line.strip()
    return s.startswith(">>") and s.endswith("<<")


def dump_lines(graphs: Iterable[tuple[Graph | MultiGraph, dict | None]]) -> str:
    """Serialize (graph, meta) pairs; meta dicts become header lines."""
    out = []
    last_header = None
    for g, meta in graphs:
        if meta:
            header = format_header(**meta)
            if header != last_header:
                out.append(header)
                last_header = header
        out.append(encode(g))
    return "\n".join(out) + "\n" if out else ""


def load_lines(text: str) -> list[tuple[Graph | MultiGraph, dict[str, str]]]:
    """Parse a graph file; header comments attach to all following graphs."""
    result = []
    meta: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if is_header(line):
            fields = parse_header(line)
            if fields.keys() <= {"graph6", "sparse6"}:
                continue  # plain format markers carry no metadata
            meta = fields
            continue
        try:
            g = decode(line)
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}", exc.offset) from exc
        result.append((g, dict(meta)))
    return result
