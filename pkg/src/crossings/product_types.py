"""The nine-type classification of Q x Q, the brute-force frequency oracle,
the fast one-pass frequency formulas, and independent graphette censuses.

An element of Q is an unordered pair {st, uv} of independent edges. Ordered
pairs of Q elements fall into nine types, keyed by tau (shared edges), phi
(total pairwise vertex intersections) and, at (tau, phi) = (0, 2), whether
one edge meets both edges of the counterpart pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import BudgetError, Graph

# Fixed serialization order for the nine product types.
PRODUCT_TYPES = ("00", "24", "13", "12", "04", "03", "021", "022", "01")

# Number of distinct vertices in each type's representative configuration.
TYPE_VERTEX_COUNT = {
    "00": 8,
    "24": 4,
    "13": 5,
    "12": 6,
    "04": 4,
    "03": 5,
    "021": 6,
    "022": 6,
    "01": 7,
}

# Graphette shape and multiplier for f_w = a_w * n_G(F_w).
GRAPHETTE_SHAPES = {
    "00": "L2+L2+L2+L2",
    "24": "L2+L2",
    "13": "L3+L2",
    "12": "L2+L2+L2",
    "04": "C4",
    "03": "L5",
    "021": "L4+L2",
    "022": "L3+L3",
    "01": "L3+L2+L2",
}
GRAPHETTE_MULTIPLIERS = {
    "00": 6,
    "24": 1,
    "13": 2,
    "12": 6,
    "04": 2,
    "03": 2,
    "021": 2,
    "022": 4,
    "01": 4,
}


@dataclass(frozen=True)
class FreqVector:
    """Counts f_w of ordered Q x Q pairs per product type."""

    f00: int = 0
    f24: int = 0
    f13: int = 0
    f12: int = 0
    f04: int = 0
    f03: int = 0
    f021: int = 0
    f022: int = 0
    f01: int = 0

    def __getitem__(self, code: str) -> int:
        return getattr(self, "f" + code)

    def total(self) -> int:
        return sum(self.as_tuple())

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, "f" + c) for c in PRODUCT_TYPES)

    def as_dict(self) -> dict[str, int]:
        return {c: getattr(self, "f" + c) for c in PRODUCT_TYPES}

    @classmethod
    def from_dict(cls, counts: dict[str, int]) -> "FreqVector":
        unknown = set(counts) - set(PRODUCT_TYPES)
        if unknown:
            raise ValueError(f"unknown product types {sorted(unknown)}")
        return cls(**{"f" + c: counts.get(c, 0) for c in PRODUCT_TYPES})


def classify(q1, q2) -> str:
    """Product type of an ordered pair of Q elements.

    Each argument is a pair of edges ((s,t),(u,v)); the edges within each
    pair must be vertex-disjoint.
    """
    (e1a, e1b), (e2a, e2b) = q1, q2
    f1a, f1b = frozenset(e1a), frozenset(e1b)
    f2a, f2b = frozenset(e2a), frozenset(e2b)
    if len(f1a) != 2 or len(f1b) != 2 or len(f2a) != 2 or len(f2b) != 2:
        raise ValueError("edges must have two distinct endpoints")
    if f1a & f1b or f2a & f2b:
        raise ValueError("each argument must be a pair of independent edges")
    return _classify_sets(f1a, f1b, f2a, f2b)


def _classify_sets(a1, a2, b1, b2) -> str:
    x13 = len(a1 & b1)
    x14 = len(a1 & b2)
    x23 = len(a2 & b1)
    x24 = len(a2 & b2)
    phi = x13 + x14 + x23 + x24
    tau = (a1 == b1 or a1 == b2) + (a2 == b1 or a2 == b2)
    if tau == 2:
        return "24"
    if tau == 1:
        return "13" if phi == 3 else "12"
    if phi != 2:
        return f"0{phi}"
    # (0,2): type 021 iff some single edge meets both edges of the other pair
    if (x13 and x14) or (x23 and x24) or (x13 and x23) or (x14 and x24):
        return "021"
    return "022"


def _classify_masks(a1, a2, b1, b2) -> str:
    # same classification on vertex bitmasks; used by the brute-force loop
    x13 = (a1 & b1).bit_count()
    x14 = (a1 & b2).bit_count()
    x23 = (a2 & b1).bit_count()
    x24 = (a2 & b2).bit_count()
    phi = x13 + x14 + x23 + x24
    tau = (a1 == b1 or a1 == b2) + (a2 == b1 or a2 == b2)
    if tau == 2:
        return "24"
    if tau == 1:
        return "13" if phi == 3 else "12"
    if phi != 2:
        return f"0{phi}"
    if (x13 and x14) or (x23 and x24) or (x13 and x23) or (x14 and x24):
        return "021"
    return "022"


def freq_brute(g: Graph, q_budget: int = 50_000) -> FreqVector:
    """Classify all of Q x Q directly (the oracle path).

    Ordered semantics: the diagonal counts once, every unordered off-diagonal
    pair twice. Refuses when |Q| exceeds `q_budget`.
    """
    q = g.q_pairs()
    nq = len(q)
    if nq > q_budget:
        raise BudgetError(
            f"|Q| = {nq} exceeds budget {q_budget}: refusing |Q|^2 = {nq * nq} "
            "classifications"
        )
    masks = [
        ((1 << s) | (1 << t), (1 << u) | (1 << v)) for s, t, u, v in q
    ]
    counts = dict.fromkeys(PRODUCT_TYPES, 0)
    counts["24"] = nq
    for i in range(nq):
        a1, a2 = masks[i]
        for j in range(i + 1, nq):
            b1, b2 = masks[j]
            counts[_classify_masks(a1, a2, b1, b2)] += 2
    return FreqVector.from_dict(counts)


def freq_fast(g: Graph) -> FreqVector:
    """All nine f_w in one pass over Q using closed local quantities.

    Per element {st,uv}: neighbor counts off {s,t,u,v}, surviving edge count
    |E(G_-stuv)|, pairwise common-neighbor counts, and |Q(G_-stuv)| from the
    usual |Q| identity applied to the vertex-deleted graph. f00 is computed
    both directly and by subtraction from |Q|^2; the two must agree.
    """
    q = g.q_pairs()
    nq = len(q)
    deg = g.degrees
    am = g.adjacency_masks()
    m = g.m
    total_sq = sum(k * k for k in deg)
    # neighbor-degree sums: ND[x] = sum of deg(w) over w adjacent to x
    nd = [0] * (g.n + 1)
    for x in range(1, g.n + 1):
        nd[x] = sum(deg[w] for w in g.adj[x])

    f13 = f12 = f04 = f03 = f021 = f022 = f01 = f00 = 0
    for s, t, u, v in q:
        ms, mt, mu, mv = am[s], am[t], am[u], am[v]
        loc_mask = (1 << s) | (1 << t) | (1 << u) | (1 << v)
        a_su = (ms >> u) & 1
        a_sv = (ms >> v) & 1
        a_tu = (mt >> u) & 1
        a_tv = (mt >> v) & 1
        x_adj = a_su + a_sv + a_tu + a_tv

        ks, kt, ku, kv = deg[s], deg[t], deg[u], deg[v]
        gs = ks - 1 - a_su - a_sv
        gt = kt - 1 - a_tu - a_tv
        gu = ku - 1 - a_su - a_tu
        gv = kv - 1 - a_sv - a_tv
        gsum = gs + gt + gu + gv

        e_del = m - (ks + kt + ku + kv) + 2 + x_adj

        f13 += gsum
        f12 += 2 * e_del
        f04 += a_su * a_tv + a_sv * a_tu
        f03 += (
            a_su * (gt + gv)
            + a_sv * (gt + gu)
            + a_tu * (gs + gv)
            + a_tv * (gs + gu)
        )

        # common neighbors outside {s,t,u,v} for all six vertex pairs
        def common(mx, my):
            inter = mx & my
            return inter.bit_count() - (inter & loc_mask).bit_count()

        c_st = common(ms, mt)
        c_su = common(ms, mu)
        c_sv = common(ms, mv)
        c_tu = common(mt, mu)
        c_tv = common(mt, mv)
        c_uv = common(mu, mv)

        f021 += (gs * gt - c_st) + (gu * gv - c_uv) + x_adj * e_del
        f022 += (
            (gs * gu - c_su)
            + (gs * gv - c_sv)
            + (gt * gu - c_tu)
            + (gt * gv - c_tv)
        )

        # sum over w outside {s,t,u,v} of delta_w * k_w and delta_w^2,
        # where delta_w counts adjacencies from w into {s,t,u,v}
        sum_dk = (
            (nd[s] - kt - a_su * ku - a_sv * kv)
            + (nd[t] - ks - a_tu * ku - a_tv * kv)
            + (nd[u] - kv - a_su * ks - a_tu * kt)
            + (nd[v] - ku - a_sv * ks - a_tv * kt)
        )
        sum_d2 = gsum + 2 * (c_st + c_su + c_sv + c_tu + c_tv + c_uv)

        f01 += e_del * gsum - (sum_dk - sum_d2)

        sq_del = total_sq - (ks * ks + kt * kt + ku * ku + kv * kv)
        sq_del -= 2 * sum_dk - sum_d2
        num = e_del * (e_del + 1) - sq_del
        assert num % 2 == 0
        f00 += num // 2

    f24 = nq
    rest = f24 + f13 + f12 + f04 + f03 + f021 + f022 + f01
    f00_sub = nq * nq - rest
    if f00 != f00_sub:
        raise AssertionError(
            f"internal inconsistency: f00 direct {f00} != by subtraction {f00_sub}"
        )
    return FreqVector(
        f00=f00, f24=f24, f13=f13, f12=f12, f04=f04, f03=f03,
        f021=f021, f022=f022, f01=f01,
    )


# --- graphette census (independent subgraph counting) ---------------------


def count_graphette(g: Graph, shape: str) -> int:
    """Count subgraphs of the given shape by direct enumeration.

    Shapes: L2+L2, L3+L2, L2+L2+L2, C4, L5, L4+L2, L3+L3, L3+L2+L2,
    L2+L2+L2+L2. Counts are unlabeled-subgraph counts (each subgraph once),
    independent of the frequency formulas.
    """
    if shape == "L2+L2":
        return _count_matchings(g, 2)
    if shape == "L2+L2+L2":
        return _count_matchings(g, 3)
    if shape == "L2+L2+L2+L2":
        return _count_matchings(g, 4)
    if shape == "C4":
        return _count_c4(g)
    if shape == "L5":
        return _count_paths(g, 5)
    if shape == "L3+L2":
        return _count_p3_plus_edges(g, 1)
    if shape == "L3+L2+L2":
        return _count_p3_plus_edges(g, 2)
    if shape == "L3+L3":
        return _count_p3_pairs(g)
    if shape == "L4+L2":
        return _count_p4_plus_edge(g)
    raise ValueError(f"unknown graphette shape {shape!r}")


def _edge_masks(g: Graph) -> list[int]:
    return [(1 << u) | (1 << v) for u, v in g.edges]


def _count_matchings(g: Graph, k: int) -> int:
    """Number of k-subsets of pairwise vertex-disjoint edges."""
    masks = _edge_masks(g)
    nm = len(masks)
    count = 0

    def rec(start: int, used: int, depth: int):
        nonlocal count
        if depth == k:
            count += 1
            return
        for j in range(start, nm - (k - depth) + 1):
            mj = masks[j]
            if not mj & used:
                rec(j + 1, used | mj, depth + 1)

    rec(0, 0, 0)
    return count


def _p3_list(g: Graph) -> list[int]:
    """Vertex masks of all 3-vertex paths (one per unordered leaf pair)."""
    out = []
    for c in g.vertices():
        nbrs = sorted(g.adj[c])
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                out.append((1 << nbrs[i]) | (1 << c) | (1 << nbrs[j]))
    return out


def _count_p3_plus_edges(g: Graph, extra: int) -> int:
    """P3 together with `extra` further pairwise-disjoint edges."""
    masks = _edge_masks(g)
    total = 0
    for p3 in _p3_list(g):
        free = [mk for mk in masks if not mk & p3]
        if extra == 1:
            total += len(free)
        else:
            for i in range(len(free)):
                for j in range(i + 1, len(free)):
                    if not free[i] & free[j]:
                        total += 1
    return total


def _count_p3_pairs(g: Graph) -> int:
    p3s = _p3_list(g)
    total = 0
    for i in range(len(p3s)):
        for j in range(i + 1, len(p3s)):
            if not p3s[i] & p3s[j]:
                total += 1
    return total


def _count_paths(g: Graph, k: int) -> int:
    """Number of k-vertex paths; each path is reached from both ends."""
    count = 0

    def extend(last: int, used: int, depth: int):
        nonlocal count
        if depth == k:
            count += 1
            return
        for w in g.adj[last]:
            bit = 1 << w
            if not used & bit:
                extend(w, used | bit, depth + 1)

    for v in g.vertices():
        extend(v, 1 << v, 1)
    assert count % 2 == 0
    return count // 2


def _p4_list(g: Graph) -> list[int]:
    """Vertex masks of all 4-vertex paths (each path once)."""
    seen = []
    for a in g.vertices():
        for b in g.adj[a]:
            for c in g.adj[b]:
                if c == a:
                    continue
                for d in g.adj[c]:
                    if d == a or d == b:
                        continue
                    if a < d:  # canonical direction kills the reverse walk
                        seen.append(
                            ((1 << a) | (1 << b) | (1 << c) | (1 << d))
                        )
    return seen


def _count_p4_plus_edge(g: Graph) -> int:
    masks = _edge_masks(g)
    total = 0
    for p4 in _p4_list(g):
        total += sum(1 for mk in masks if not mk & p4)
    return total


def _count_c4(g: Graph) -> int:
    """4-cycles via antipodal pairs: each C4 has two vertex pairs at
    distance two, so sum binom(common_neighbors, 2) over pairs, halved."""
    total = 0
    for u in g.vertices():
        for v in range(u + 1, g.n + 1):
            c = len(g.adj[u] & g.adj[v])
            total += c * (c - 1) // 2
    assert total % 2 == 0
    return total // 2
