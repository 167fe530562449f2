"""Cross-validation battery: every computation path checked against the
others over tree enumerations, graph6 corpora, special families and
Erdos-Renyi ensembles.

All theoretical comparisons are exact rational equalities; tolerances exist
only for Monte Carlo spot checks and are recorded in the failure detail.
Only public operations are used, keeping each side of a comparison
independent of the other's internals.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from . import moments
from .closed_forms import FamilySpec, closed_freq, closed_variance
from .estimator import exhaustive_moments, monte_carlo_moments
from .graphs import (
    BudgetError,
    Graph,
    erdos_renyi,
    from_graph6,
    from_pruefer,
    gen_family,
    is_q_zero,
    q_edge,
    size_q,
)
from .product_types import (
    GRAPHETTE_MULTIPLIERS,
    GRAPHETTE_SHAPES,
    PRODUCT_TYPES,
    count_graphette,
    freq_brute,
    freq_fast,
)

DEFAULT_EXHAUSTIVE_LIMIT = 10
DEFAULT_CENSUS_Q_LIMIT = 20_000
MC_SPOT_REL_TOL = 0.1


@dataclass
class ValidationReport:
    corpus: str
    graphs_checked: int = 0
    checks: list[str] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def success(self) -> bool:
        return not self.failures

    def fail(self, witness: str, check: str, detail: str):
        self.failures.append({"witness": witness, "check": check, "detail": detail})

    def skip(self, witness: str, check: str, detail: str):
        self.skipped.append({"witness": witness, "check": check, "detail": detail})

    def finish(self, started: float) -> "ValidationReport":
        self.failures.sort(key=lambda f: (f["witness"], f["check"]))
        self.elapsed_seconds = time.perf_counter() - started
        return self

    def to_json(self) -> str:
        return json.dumps(
            {
                "corpus": self.corpus,
                "graphs_checked": self.graphs_checked,
                "checks": self.checks,
                "failures": self.failures,
                "skipped": self.skipped,
                "elapsed_seconds": round(self.elapsed_seconds, 3),
                "success": self.success,
            },
            indent=2,
        )


def _is_acyclic(g: Graph) -> bool:
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _tree_form_variance(fv) -> Fraction:
    # acyclic graphs: the f04 term drops out of the general expression
    return Fraction(1, 9) * (
        2 * fv["24"]
        + Fraction(fv["022"], 20)
        + Fraction(fv["12"], 5)
        + Fraction(fv["13"], 2)
        - (Fraction(fv["021"], 10) + Fraction(fv["03"], 4))
    )


def _general_form_variance(fv) -> Fraction:
    return Fraction(1, 9) * (
        2 * fv["24"]
        + Fraction(fv["022"], 20)
        + Fraction(fv["12"], 5)
        + Fraction(fv["13"], 2)
        - (Fraction(fv["021"], 10) + fv["04"] + Fraction(fv["03"], 4))
    )


CORE_CHECKS = [
    "size_q_formula_vs_enumeration",
    "q_edge_sum",
    "q_zero_predicate",
    "freq_fast_vs_brute",
    "freq_sum_is_q_squared",
    "freq_parity",
    "variance_nonnegative",
    "acyclic_f04_zero",
    "acyclic_variance_form",
    "exhaustive_mean_vs_theory",
    "exhaustive_variance_vs_theory",
]


def check_graph(
    g: Graph,
    witness: str,
    report: ValidationReport,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
    q_budget: int = 50_000,
):
    """Run the core cross-check battery on one graph."""
    q = size_q(g)
    if q != len(g.q_pairs()):
        report.fail(
            witness, "size_q_formula_vs_enumeration",
            f"formula {q} != enumerated {len(g.q_pairs())}",
        )
    edge_sum = sum(q_edge(g, u, v) for u, v in g.edges)
    if edge_sum != 2 * q:
        report.fail(witness, "q_edge_sum", f"sum q(s,t) = {edge_sum} != 2|Q| = {2 * q}")
    wz = is_q_zero(g)
    if wz.is_zero != (q == 0):
        report.fail(
            witness, "q_zero_predicate",
            f"is_q_zero = {wz.is_zero} but |Q| = {q}",
        )

    fv = freq_fast(g)
    try:
        fb = freq_brute(g, q_budget=q_budget)
        if fv != fb:
            report.fail(
                witness, "freq_fast_vs_brute",
                f"fast {fv.as_tuple()} != brute {fb.as_tuple()}",
            )
    except BudgetError as exc:
        report.skip(witness, "freq_fast_vs_brute", str(exc))

    if fv.total() != q * q:
        report.fail(
            witness, "freq_sum_is_q_squared",
            f"sum f = {fv.total()} != |Q|^2 = {q * q}",
        )
    if fv["24"] != q:
        report.fail(witness, "freq_parity", f"f24 = {fv['24']} != |Q| = {q}")
    for code in PRODUCT_TYPES:
        if code != "24" and fv[code] % 2:
            report.fail(witness, "freq_parity", f"f{code} = {fv[code]} is odd")

    var = moments.variance_from_freq(fv)
    if var < 0:
        report.fail(witness, "variance_nonnegative", f"Var = {var}")

    if _is_acyclic(g):
        if fv["04"] != 0:
            report.fail(witness, "acyclic_f04_zero", f"f04 = {fv['04']}")
        if _tree_form_variance(fv) != _general_form_variance(fv):
            report.fail(
                witness, "acyclic_variance_form",
                "tree-form variance differs from general form",
            )

    if g.n <= exhaustive_limit:
        rep = exhaustive_moments(g, limit=exhaustive_limit)
        if rep.mean != moments.expectation_rla(g):
            report.fail(
                witness, "exhaustive_mean_vs_theory",
                f"enumerated {rep.mean} != |Q|/3 = {moments.expectation_rla(g)}",
            )
        if rep.variance != var:
            report.fail(
                witness, "exhaustive_variance_vs_theory",
                f"enumerated {rep.variance} != theoretical {var}",
            )


def validate_trees(
    n_max: int, exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT
) -> ValidationReport:
    """All labeled trees up to n_max vertices via Pruefer codes (lex order)."""
    if n_max > 9:
        raise ValueError(f"n_max = {n_max} too large: n^(n-2) trees is prohibitive")
    started = time.perf_counter()
    report = ValidationReport(corpus=f"labeled-trees-n<={n_max}", checks=CORE_CHECKS)
    for n in range(2, n_max + 1):
        for code in product(range(1, n + 1), repeat=n - 2):
            g = from_pruefer(code)
            check_graph(g, f"tree-n{n}-pruefer{code}", report,
                        exhaustive_limit=exhaustive_limit)
            report.graphs_checked += 1
    return report.finish(started)


def validate_graph6_corpus(
    path: str,
    limit: int | None = None,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> ValidationReport:
    """Battery over a graph6 file, one graph per line."""
    started = time.perf_counter()
    report = ValidationReport(corpus=f"graph6:{path}", checks=CORE_CHECKS)
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if limit is not None and report.graphs_checked >= limit:
                break
            g = from_graph6(line)
            check_graph(g, f"line{lineno}:{line}", report,
                        exhaustive_limit=exhaustive_limit)
            report.graphs_checked += 1
    return report.finish(started)


def validate_families(
    n_max: int = 40,
    bipartite_max: int = 10,
    mc_samples: int = 20_000,
    seed: int = 0,
) -> ValidationReport:
    """Closed forms vs the general path for all special families.

    Exact equality of frequency vectors and variances across the size range;
    one Monte Carlo spot check per family at the largest size (relative
    tolerance recorded in the check detail).
    """
    started = time.perf_counter()
    report = ValidationReport(
        corpus=f"families-n<={n_max}",
        checks=["closed_freq_vs_fast", "closed_variance_vs_general", "mc_spot"],
    )

    def check_spec(spec: FamilySpec, g: Graph, witness: str):
        fv = freq_fast(g)
        cf = closed_freq(spec)
        if fv != cf:
            report.fail(
                witness, "closed_freq_vs_fast",
                f"closed {cf.as_tuple()} != fast {fv.as_tuple()}",
            )
        cv = closed_variance(spec)
        gv = moments.variance_from_freq(fv)
        if cv != gv or cv != moments.variance_from_freq(cf):
            report.fail(
                witness, "closed_variance_vs_general",
                f"closed {cv} != general {gv}",
            )
        report.graphs_checked += 1

    singles = ("complete", "cycle", "one_regular", "quasi_star", "linear_tree", "star")
    starts = {"complete": 1, "cycle": 3, "one_regular": 2,
              "quasi_star": 4, "linear_tree": 1, "star": 1}
    for family in singles:
        for n in range(starts[family], n_max + 1):
            if family == "one_regular" and n % 2:
                continue
            check_spec(FamilySpec(family, n), gen_family(family, n), f"{family}-{n}")
    for n1 in range(1, bipartite_max + 1):
        for n2 in range(n1, bipartite_max + 1):
            spec = FamilySpec("complete_bipartite", n1=n1, n2=n2)
            g = gen_family("complete_bipartite", n1, n2=n2)
            check_spec(spec, g, f"complete_bipartite-{n1}x{n2}")

    for family in ("cycle", "linear_tree", "quasi_star", "one_regular"):
        n = n_max if (family != "one_regular" or n_max % 2 == 0) else n_max - 1
        if n < max(starts[family], 5):
            continue
        spec = FamilySpec(family, n)
        theory = closed_variance(spec)
        rep = monte_carlo_moments(gen_family(family, n), samples=mc_samples, seed=seed)
        if theory > 0:
            rel = abs(rep.variance - float(theory)) / float(theory)
            if rel > MC_SPOT_REL_TOL:
                report.fail(
                    f"{family}-{n}", "mc_spot",
                    f"relative error {rel:.4f} above tolerance {MC_SPOT_REL_TOL} "
                    f"(T={mc_samples}, seed={seed})",
                )
    return report.finish(started)


def validate_er(n: int, p: float, trials: int, seed: int,
                census_q_limit: int = DEFAULT_CENSUS_Q_LIMIT) -> ValidationReport:
    """Erdos-Renyi battery: oracle equivalence plus graphette identities.

    Trial t uses the derived graph seed SeedSequence([seed, t]).
    """
    if not 0 < p <= 1:
        raise ValueError("p must be within (0, 1]")
    started = time.perf_counter()
    report = ValidationReport(
        corpus=f"erdos-renyi-n{n}-p{p}-trials{trials}",
        checks=CORE_CHECKS + ["graphette_identities"],
    )
    for t in range(trials):
        gseed = int(np.random.SeedSequence([seed, t]).generate_state(1)[0])
        g = erdos_renyi(n, p, gseed)
        witness = f"er-n{n}-p{p}-trial{t}"
        check_graph(g, witness, report)
        report.graphs_checked += 1
        if size_q(g) > census_q_limit:
            report.skip(witness, "graphette_identities",
                        f"|Q| = {size_q(g)} above census budget {census_q_limit}")
            continue
        fv = freq_fast(g)
        for code in PRODUCT_TYPES:
            expected = GRAPHETTE_MULTIPLIERS[code] * count_graphette(
                g, GRAPHETTE_SHAPES[code]
            )
            if fv[code] != expected:
                report.fail(
                    witness, "graphette_identities",
                    f"f{code} = {fv[code]} != "
                    f"{GRAPHETTE_MULTIPLIERS[code]} * n_G({GRAPHETTE_SHAPES[code]}) "
                    f"= {expected}",
                )
    return report.finish(started)
