"""Simple undirected graphs, generators for the special families, and the
potential-crossing machinery |Q|, q(s,t) and the |Q|=0 predicate.

Vertices are labeled 1..n. Graphs are immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

FAMILIES = (
    "complete",
    "complete_bipartite",
    "cycle",
    "one_regular",
    "star",
    "quasi_star",
    "linear_tree",
    "star_plus_isolated",
)


class GraphFormatError(ValueError):
    """Malformed graph input (edge-list text, graph6, arrangement file)."""


class BudgetError(RuntimeError):
    """A computation was refused because it exceeds its configured budget."""


@dataclass(frozen=True)
class DegreeStats:
    """Edge count and the second moment of degree <k^2> (exact)."""

    m: int
    second_moment: Fraction


@dataclass(frozen=True)
class QZeroWitness:
    """Outcome of the |Q|=0 structural test.

    `family` is "star_with_isolated" or "triangle_with_isolated" when
    `is_zero`, else None.
    """

    is_zero: bool
    family: str | None = None

    def __bool__(self) -> bool:
        return self.is_zero


class Graph:
    """Immutable simple undirected graph with 1-based vertex labels.

    Attributes:
        n: number of vertices.
        edges: tuple of (u, v) pairs with u < v, sorted.
        adj: neighbor sets indexed by vertex (index 0 unused).
        degrees: degree of each vertex (index 0 unused).
    """

    __slots__ = ("n", "edges", "adj", "degrees", "_adj_masks", "_q_pairs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{u}) not allowed")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            seen.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "degrees", tuple(len(s) for s in adj))
        object.__setattr__(self, "_adj_masks", None)
        object.__setattr__(self, "_q_pairs", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit v set iff v is a neighbor)."""
        masks = object.__getattribute__(self, "_adj_masks")
        if masks is None:
            masks = tuple(
                sum(1 << w for w in self.adj[v]) if v else 0
                for v in range(self.n + 1)
            )
            object.__setattr__(self, "_adj_masks", masks)
        return masks

    def q_pairs(self) -> tuple[tuple[int, int, int, int], ...]:
        """The set Q as a sorted tuple of (s, t, u, v) with (s,t) < (u,v).

        Each entry is an unordered pair {st, uv} of independent edges.
        Computed once and cached.
        """
        pairs = object.__getattribute__(self, "_q_pairs")
        if pairs is None:
            es = self.edges
            out = []
            for i in range(len(es)):
                s, t = es[i]
                for j in range(i + 1, len(es)):
                    u, v = es[j]
                    if s != u and s != v and t != u and t != v:
                        out.append((s, t, u, v))
            pairs = tuple(out)
            object.__setattr__(self, "_q_pairs", pairs)
        return pairs


def from_edge_list(n: int, pairs: Sequence[tuple[int, int]]) -> Graph:
    """Build a Graph from vertex-pair list, deduplicating unordered pairs."""
    for idx, (u, v) in enumerate(pairs):
        if u == v:
            raise ValueError(f"pair #{idx} is a self-loop ({u},{v})")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"pair #{idx} ({u},{v}) out of range 1..{n}")
    return Graph(n, pairs)


def degree_stats(g: Graph) -> DegreeStats:
    sq = sum(k * k for k in g.degrees)
    return DegreeStats(m=g.m, second_moment=Fraction(sq, g.n) if g.n else Fraction(0))


def size_q(g: Graph) -> int:
    """|Q|: the number of unordered pairs of independent edges.

    Uses |Q| = (m(m+1) - sum k^2) / 2; the numerator is always even.
    """
    m = g.m
    num = m * (m + 1) - sum(k * k for k in g.degrees)
    assert num % 2 == 0, "m(m+1) - sum(k^2) must be even"
    q = num // 2
    assert q >= 0
    return q


def q_edge(g: Graph, s: int, t: int) -> int:
    """q(s,t) = m - k_s - k_t + 1: edges sharing no endpoint with {s,t}."""
    if not g.has_edge(s, t):
        raise ValueError(f"({s},{t}) is not an edge")
    return g.m - g.degrees[s] - g.degrees[t] + 1


def is_q_zero(g: Graph) -> QZeroWitness:
    """Structural test for |Q| = 0.

    True exactly for star(lambda) + isolated vertices (including the
    edgeless and single-edge cases) and for a triangle + isolated vertices.
    """
    m = g.m
    if m == 0:
        return QZeroWitness(True, "star_with_isolated")
    linked = sorted({v for e in g.edges for v in e})
    if m == 3 and len(linked) == 3:
        a, b, c = linked
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            return QZeroWitness(True, "triangle_with_isolated")
    # star: some vertex lies on every edge
    candidates = set(g.edges[0])
    for u, v in g.edges:
        candidates &= {u, v}
        if not candidates:
            break
    if candidates:
        return QZeroWitness(True, "star_with_isolated")
    return QZeroWitness(False, None)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 + G2 with g2's labels shifted by g1.n."""
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    return Graph(g1.n + g2.n, edges)


def gen_family(
    family: str, n: int, n2: int | None = None, lam: int | None = None
) -> Graph:
    """Canonical labeled instance of one of the special families.

    complete_bipartite takes partition sizes (n, n2); star_plus_isolated
    takes the star size via `lam` and total vertices via `n`.
    """
    if family == "complete":
        if n < 1:
            raise ValueError("complete requires n >= 1")
        return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])
    if family == "complete_bipartite":
        if n2 is None:
            raise ValueError("complete_bipartite requires n2")
        if n < 1 or n2 < 1:
            raise ValueError("complete_bipartite requires n1, n2 >= 1")
        return Graph(
            n + n2,
            [(u, v) for u in range(1, n + 1) for v in range(n + 1, n + n2 + 1)],
        )
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle requires n >= 3")
        return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])
    if family == "one_regular":
        if n < 2 or n % 2:
            raise ValueError("one_regular requires even n >= 2")
        return Graph(n, [(i, i + 1) for i in range(1, n + 1, 2)])
    if family == "star":
        if n < 1:
            raise ValueError("star requires n >= 1")
        return Graph(n, [(1, v) for v in range(2, n + 1)])
    if family == "quasi_star":
        if n < 4:
            raise ValueError("quasi_star requires n >= 4")
        # hub 1 with leaves 2..n-1; vertex n hangs off vertex 2
        return Graph(n, [(1, v) for v in range(2, n)] + [(2, n)])
    if family == "linear_tree":
        if n < 1:
            raise ValueError("linear_tree requires n >= 1")
        return Graph(n, [(i, i + 1) for i in range(1, n)])
    if family == "star_plus_isolated":
        if lam is None:
            raise ValueError("star_plus_isolated requires lam (star size)")
        if not 0 <= lam <= n:
            raise ValueError(f"star size {lam} must be within 0..{n}")
        return Graph(n, [(1, v) for v in range(2, lam + 1)])
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with each pair included independently with probability p.

    Deterministic given the seed: PCG64 stream, one uniform draw per vertex
    pair in lexicographic order (documented in the README).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be within [0,1], got {p}")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    npairs = n * (n - 1) // 2
    draws = rng.random(npairs)
    edges = []
    k = 0
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if draws[k] < p:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def from_pruefer(code: Sequence[int]) -> Graph:
    """Decode a Pruefer sequence into the labeled tree on n = len(code)+2
    vertices; iterating all n^(n-2) codes yields every labeled tree once."""
    n = len(code) + 2
    if n < 2:
        raise ValueError("Pruefer decoding needs n >= 2")
    for x in code:
        if not 1 <= x <= n:
            raise ValueError(f"label {x} out of range 1..{n}")
    degree = [1] * (n + 1)
    degree[0] = 0
    for x in code:
        degree[x] += 1
    import heapq

    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


# --- graph6 codec (n <= 62) ---------------------------------------------

_G6_HEADER = ">>graph6<<"


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6-encoded line (standard format, n <= 62)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise GraphFormatError("graph6 with n > 62 is not supported")
    if not 63 <= first <= 126:
        raise GraphFormatError(f"invalid graph6 size character {s[0]!r}")
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise GraphFormatError(
            f"truncated graph6 string: need {need} data characters, got {len(body)}"
        )
    if len(body) > need:
        raise GraphFormatError("trailing characters after graph6 data")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphFormatError(f"invalid graph6 data character {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(2, n + 1):  # column-major upper triangle, 1-based
        for u in range(1, v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (n <= 62)."""
    n = g.n
    if n > 62:
        raise ValueError("graph6 encoding only supported for n <= 62")
    bits = []
    for v in range(2, n + 1):
        for u in range(1, v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# --- edge-list text format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format: `n m` header then m `u v` lines.

    Lines starting with `#` are ignored. Raises GraphFormatError with the
    offending line number on malformed input.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("empty edge-list input")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers in header") from None
    if len(rows) - 1 != m:
        raise GraphFormatError(
            f"header declares {m} edges but {len(rows) - 1} edge lines found"
        )
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop ({u},{v})")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}")
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
