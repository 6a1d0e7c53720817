"""Verification suites: the headline numbers, family properties and randomized sweeps.

Every entry is named, compared against its expected value and collected into
a BoundReport. Exact searches run under the suite budget; a search that runs
out is reported as SKIPPED(budget), never as PASS.
"""

import random
from collections import Counter
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import networkx as nx
from loguru import logger

from app.config import settings
from app.models.report import BoundEntry, BoundReport, Relation
from app.services.budget import BudgetExceededError, SearchBudget
from app.services.chi import InconsistentBoundError, chromatic_number, clique_number
from app.services.coloring import (
    color_exact_distance_even,
    color_exact_distance_odd,
    signature_coloring,
    verify_proper,
)
from app.services.decomp import (
    BoundFormula,
    FlatnessProfile,
    check_decomposition,
    check_flat,
    contract,
    eval_bound_formula,
    flatbound_order,
    peel_shortest_paths,
)
from app.services.families import Family, FamilySpec, build_g5, generate, load_g4, validate_g4
from app.services.graph_core import (
    ALL_ODD,
    BIPARTITE,
    Graph,
    UnionMode,
    exact_distance_graph,
    exact_power_graph,
    from_networkx,
    induced_subgraph,
    is_bipartite,
    max_degree,
    neighbourhood,
    odd_girth,
    odd_union_graph,
    union,
)
from app.services.orderings import (
    AccessKind,
    LinearOrder,
    access_set_by_paths,
    access_sets,
    eval_colnum,
    exact_colnum,
    treedepth_exact,
    weak_access_distance,
)

from .corpus import random_bipartite_graphs, random_graphs, random_order, random_tree, sweep_orders, sweep_rng
from .models import SuiteName, SuiteSpec

logger = logger.bind(name=__name__)


class _Tally:
    """Violation counters for one sweep, emitted as ``<name> == 0`` entries."""

    def __init__(self, names: Iterable[str]) -> None:
        self.counts: Counter = Counter({name: 0 for name in names})
        self.skipped: Counter = Counter()

    def record(self, name: str, ok: bool, context: str) -> None:
        if not ok:
            self.counts[name] += 1
            logger.debug(f"{name}: violation on {context}")

    def skip(self, name: str) -> None:
        self.skipped[name] += 1

    def entries(self) -> List[BoundEntry]:
        result = [BoundEntry.compare(name, 0, count) for name, count in self.counts.items()]
        result.extend(
            BoundEntry.skipped(f"{name}_skipped", 0, count) for name, count in self.skipped.items() if count
        )
        return result


class _ColoringTargets:
    """Derived graphs of one sweep graph, built once and shared by every order."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.girth = odd_girth(g)
        self.delta = max_degree(g)
        self._exact: Dict[int, Graph] = {}
        self._odd: Dict[Tuple[int, UnionMode], Graph] = {}

    def exact(self, p: int) -> Graph:
        if p not in self._exact:
            self._exact[p] = exact_distance_graph(self.g, p)
        return self._exact[p]

    def odd_union(self, p: int, mode: UnionMode) -> Graph:
        if (p, mode) not in self._odd:
            self._odd[(p, mode)] = odd_union_graph(self.g, p, mode)
        return self._odd[(p, mode)]


class SuiteRunner:
    """Runs one suite under a SuiteSpec and collects its BoundReport."""

    def __init__(self, spec: SuiteSpec) -> None:
        self.spec = spec
        self.sweeps = settings.sweeps
        self._suites: Dict[SuiteName, Callable[[BoundReport], None]] = {
            SuiteName.PAPER_TABLE: self._paper_table,
            SuiteName.FAMILY_PROPERTIES: self._family_properties,
            SuiteName.COLORING_PROPERTIES: self._coloring_properties,
            SuiteName.ORDER_SANDWICH: self._order_sandwich,
            SuiteName.DECOMP_CHECKS: self._decomp_checks,
        }

    def run(self) -> BoundReport:
        report = BoundReport(suite=self.spec.name.value, seed=self.spec.seed)
        logger.info(f"Running suite {self.spec.name.value} (seed {self.spec.seed})")
        self._suites[self.spec.name](report)
        counts = report.counts()
        logger.info(
            f"Suite {self.spec.name.value}: {counts['PASS']} passed, "
            f"{counts['FAIL']} failed, {counts['SKIPPED']} skipped"
        )
        return report

    def _budget(self, default_ms: int) -> SearchBudget:
        return SearchBudget.from_ms(self.spec.budget_ms, default_ms)

    # oracle wrappers

    def _chi(
        self,
        name: str,
        expected: int,
        h: Graph,
        relation: Relation = Relation.EQ,
        lower_bound: Optional[int] = None,
    ) -> BoundEntry:
        try:
            result = chromatic_number(
                h,
                budget=self._budget(settings.search.chi_time_limit_ms),
                lower_bound=lower_bound,
                lower_bound_source="apex-pair",
            )
        except InconsistentBoundError as e:
            return BoundEntry.check(name, False, expected, f"lb {e.lower_bound} > ub {e.upper_bound}", str(e))
        if not result.exact:
            return BoundEntry.skipped(name, expected, str(result))
        logger.debug(f"{name}: chi = {result.value} (lower bound from {result.lower_bound_source})")
        return BoundEntry.compare(name, expected, result.value, relation)

    def _omega(self, name: str, expected: int, h: Graph) -> BoundEntry:
        result = clique_number(h, budget=self._budget(settings.search.clique_time_limit_ms))
        if not result.exact:
            return BoundEntry.skipped(name, expected, str(result))
        return BoundEntry.compare(name, expected, result.value, Relation.GE)

    def _exact_colnum(self, g: Graph, kind: AccessKind) -> Optional[int]:
        try:
            value, _ = exact_colnum(g, kind, self._budget(settings.search.colnum_time_limit_ms))
        except BudgetExceededError:
            return None
        return value

    # PAPER_TABLE

    def _paper_table(self, report: BoundReport) -> None:
        chi_budget = self._budget(settings.search.chi_time_limit_ms)
        g4 = load_g4()
        report.extend(validate_g4(g4, chi_budget))
        report.add(self._chi("chi_g4_d3", 5, exact_distance_graph(g4.graph, 3), lower_bound=g4.chi3_lower_bound))

        outerplanar = eval_bound_formula(BoundFormula.TREEWIDTH_DCOL, {"t": 2, "k": 5})
        report.add(self._chi("chi_g4_d3_outerplanar_bound", outerplanar, exact_distance_graph(g4.graph, 3),
                             Relation.LE, g4.chi3_lower_bound))

        g5 = build_g5(g4.graph, g4.chi3_lower_bound)
        report.add(BoundEntry.compare("g5_vertices", 4 * g4.graph.n + 5, g5.graph.n))
        report.add(BoundEntry.compare("g5_certified_lower_bound", 7, g5.chi3_lower_bound or 0))
        report.add(self._chi("chi_g5_d3", 7, exact_distance_graph(g5.graph, 3), lower_bound=g5.chi3_lower_bound))

        table = [
            ("bound_planar_p3", BoundFormula.PLANAR_DCOL, {"k": 5}, 143),
            ("bound_outerplanar_p3", BoundFormula.TREEWIDTH_DCOL, {"t": 2, "k": 5}, 13),
            ("bound_genus1_p3", BoundFormula.GENUS_DCOL, {"g": 1, "k": 5}, 165),
            ("bound_planar_wcol2", BoundFormula.PLANAR_WCOL, {"k": 2}, 30),
            ("bound_planar_wcol_p3", BoundFormula.PLANAR_WCOL, {"k": 5}, 231),
        ]
        for name, formula, params, expected in table:
            report.add(BoundEntry.compare(name, expected, eval_bound_formula(formula, params)))

    # FAMILY_PROPERTIES

    def _family_properties(self, report: BoundReport) -> None:
        for i, k in ((1, 2), (1, 5), (2, 3)):
            self._lik(report, i, k)
        for n, p in ((3, 3), (4, 3), (3, 5)):
            out = generate(FamilySpec(Family.SNP, {"n": n, "p": p}))
            report.add(self._chi(f"snp_{n}_{p}_chi_dp", n, exact_distance_graph(out.graph, p)))
            wcol = eval_colnum(out.graph, out.prescribed_order, AccessKind.weak(p - 1))
            report.add(BoundEntry.compare(f"snp_{n}_{p}_wcol", p + 1, wcol, Relation.LE))
        for k, p in ((4, 3), (4, 5)):
            out = generate(FamilySpec(Family.AKP, {"k": k, "p": p}))
            report.add(BoundEntry.compare(f"akp_{k}_{p}_odd_girth", p, odd_girth(out.graph) or 0))
            report.add(self._omega(f"akp_{k}_{p}_omega_pp", k, exact_power_graph(out.graph, p)))
            wcol = eval_colnum(out.graph, out.prescribed_order, AccessKind.weak(p))
            # for p = 3 the ends reach each apex directly, so 3 is the floor
            report.add(BoundEntry.compare(f"akp_{k}_{p}_wcol", max(p - 1, 3), wcol, Relation.LE))
        for delta in (3, 4):
            tree = generate(FamilySpec(Family.REG_TREE, {"k": delta, "r": 2})).graph
            sharp2, sharp4 = exact_power_graph(tree, 2), exact_power_graph(tree, 4)
            report.add(self._chi(f"tree_{delta}_chi_p2", delta, sharp2))
            report.add(self._chi(f"tree_{delta}_chi_p4", delta, sharp4))
            report.add(self._chi(f"tree_{delta}_chi_p2_p4", delta * (delta - 1) + 1, union(sharp2, sharp4)))
        for p in (4, 5):
            k = 3
            out = generate(FamilySpec(Family.GKP, {"k": k, "p": p}))
            report.add(self._omega(f"gkp_{k}_{p}_omega_pp", k * (k - 1) ** (p // 2 - 1),
                                   exact_power_graph(out.graph, p)))
            degree_bound = 2 * k if p % 2 == 0 else 3 * k
            report.add(BoundEntry.compare(f"gkp_{k}_{p}_max_degree", degree_bound, max_degree(out.graph), Relation.LE))

    def _lik(self, report: BoundReport, i: int, k: int) -> None:
        out = generate(FamilySpec(Family.LIK, {"i": i, "k": k}))
        h = exact_distance_graph(out.graph, i + 2)
        prefix = f"lik_{i}_{k}"
        report.add(BoundEntry.compare(f"{prefix}_vertices", 4 + 6 * (i - 1) + 4 * k, out.graph.n))
        pendant = induced_subgraph(h, out.groups["pendant"])
        report.add(BoundEntry.compare(f"{prefix}_pendant_edges_d{i + 2}", 6 * k * k, pendant.m))
        if i in (1, 2):
            expected = 6 * k * k if i == 1 else 6 * k * k + 12 * k + 3
            report.add(BoundEntry.compare(f"{prefix}_edges_d{i + 2}", expected, h.m))

    # COLORING_PROPERTIES

    def _coloring_properties(self, report: BoundReport) -> None:
        tally = _Tally([
            "odd_coloring_improper", "odd_coloring_palette_over_dcol", "odd_dcol_over_wcol",
            "even_coloring_improper", "even_coloring_palette_over_bound",
            "signature_improper_distance", "signature_improper_path", "signature_palette_over_bound",
        ])
        rng = sweep_rng(self.spec.seed, "coloring")
        corpus = random_graphs(rng, self.sweeps.coloring_graphs, self.sweeps.coloring_max_vertices,
                               self.sweeps.densities)
        for label, g in corpus:
            targets = _ColoringTargets(g)
            for order_name, L in sweep_orders(g, rng):
                context = f"{label}/{order_name}"
                for p in (1, 3, 5):
                    self._odd_case(tally, targets, L, p, context)
                    self._signature_case(tally, targets, L, p, context)
                for p in (2, 4):
                    c = color_exact_distance_even(g, L, p)
                    tally.record("even_coloring_improper", bool(verify_proper(targets.exact(p), c)), context)
                    bound = eval_colnum(g, L, AccessKind.distance(2 * p)) * max(targets.delta, 1)
                    tally.record("even_coloring_palette_over_bound", c.palette_size <= bound, context)
        report.add_all(tally.entries())
        self._bipartite_parity(report)

    @staticmethod
    def _odd_case(tally: _Tally, targets: "_ColoringTargets", L: LinearOrder, p: int, context: str) -> None:
        g = targets.g
        c = color_exact_distance_odd(g, L, p)
        tally.record("odd_coloring_improper", bool(verify_proper(targets.exact(p), c)), context)
        dcol = eval_colnum(g, L, AccessKind.distance(2 * p - 1))
        wcol = eval_colnum(g, L, AccessKind.weak(2 * p - 1))
        tally.record("odd_coloring_palette_over_dcol", c.palette_size <= dcol, context)
        tally.record("odd_dcol_over_wcol", dcol <= wcol, context)

    @staticmethod
    def _signature_case(tally: _Tally, targets: "_ColoringTargets", L: LinearOrder, p: int, context: str) -> None:
        g = targets.g
        c = signature_coloring(g, L, p)
        proper = verify_proper(targets.odd_union(p, UnionMode.DISTANCE), c)
        tally.record("signature_improper_distance", bool(proper), context)
        if targets.girth is BIPARTITE or targets.girth >= p + 1:
            proper = verify_proper(targets.odd_union(p, UnionMode.PATH), c)
            tally.record("signature_improper_path", bool(proper), context)
        q = eval_colnum(g, L, AccessKind.weak(p))
        bound = eval_bound_formula(BoundFormula.SIGNATURE_COUNT, {"p": p, "q": q})
        tally.record("signature_palette_over_bound", c.palette_size <= bound, context)

    def _bipartite_parity(self, report: BoundReport) -> None:
        tally = _Tally(["bipartite_odd_union_not_bipartite", "bipartite_odd_union_chi_over_2"])
        rng = sweep_rng(self.spec.seed, "bipartite")
        for index, g in enumerate(random_bipartite_graphs(rng, self.sweeps.bipartite_graphs, 7, 0.4)):
            h = odd_union_graph(g, ALL_ODD, UnionMode.DISTANCE)
            tally.record("bipartite_odd_union_not_bipartite", is_bipartite(h), f"bipartite{index}")
            result = chromatic_number(h, budget=self._budget(settings.search.chi_time_limit_ms))
            if result.exact:
                tally.record("bipartite_odd_union_chi_over_2", result.value <= 2, f"bipartite{index}")
            else:
                tally.skip("bipartite_odd_union_chi_over_2")
        report.add_all(tally.entries())

    # ORDER_SANDWICH

    def _order_sandwich(self, report: BoundReport) -> None:
        tally = _Tally([
            "sandwich_strong_not_in_distance", "sandwich_distance_not_in_weak", "sandwich_half_weak_not_in_distance",
            "monotone_radius_weak", "monotone_radius_strong", "evaluator_matches_path_enumeration",
            "two_weak_access",
        ])
        rng = sweep_rng(self.spec.seed, "sandwich")
        max_radius = self.sweeps.sandwich_max_radius
        corpus = random_graphs(rng, self.sweeps.sandwich_graphs, self.sweeps.sandwich_max_vertices,
                               self.sweeps.densities, min_vertices=1)
        for index, (label, g) in enumerate(corpus):
            L = random_order(rng, g.n)
            previous: Dict[str, Dict[int, frozenset]] = {}
            for k in range(1, max_radius + 1):
                Q = access_sets(g, L, AccessKind.weak(k))
                R = access_sets(g, L, AccessKind.strong(k))
                D = access_sets(g, L, AccessKind.distance(k))
                half = access_sets(g, L, AccessKind.weak(k // 2 + 1))
                context = f"{label}/k{k}"
                for y in g.vertices:
                    tally.record("sandwich_strong_not_in_distance", R[y] <= D[y], context)
                    tally.record("sandwich_distance_not_in_weak", D[y] <= Q[y], context)
                    tally.record("sandwich_half_weak_not_in_distance", half[y] <= D[y], context)
                    if previous:
                        tally.record("monotone_radius_weak", previous["Q"][y] <= Q[y], context)
                        tally.record("monotone_radius_strong", previous["R"][y] <= R[y], context)
                previous = {"Q": Q, "R": R}
                if index % 5 == 0:
                    for kind, sets in ((AccessKind.weak(k), Q), (AccessKind.strong(k), R), (AccessKind.distance(k), D)):
                        for y in g.vertices:
                            tally.record("evaluator_matches_path_enumeration",
                                         access_set_by_paths(g, L, kind, y) == sets[y], f"{context}/{kind}")
            if index % 5 == 0:
                self._two_weak_access(tally, g, L, label)
        report.add_all(tally.entries())
        self._kierstead_yang(report)
        self._infinity_identities(report)

    @staticmethod
    def _two_weak_access(tally: _Tally, g: Graph, L: LinearOrder, label: str) -> None:
        for y in g.vertices:
            reach = {x: weak_access_distance(g, L, y, x) for x in g.vertices}
            reach = {x: d for x, d in reach.items() if d is not None}
            for x, k in reach.items():
                for z, ell in reach.items():
                    if x == z:
                        continue
                    low, high = (x, z) if L.less(x, z) else (z, x)
                    d = weak_access_distance(g, L, high, low)
                    tally.record("two_weak_access", d is not None and d <= k + ell, f"{label}/y{y}")

    def _kierstead_yang(self, report: BoundReport) -> None:
        tally = _Tally(["kierstead_yang"])
        rng = sweep_rng(self.spec.seed, "kierstead-yang")
        corpus = random_graphs(rng, self.sweeps.kierstead_yang_graphs, self.sweeps.kierstead_yang_max_vertices,
                               self.sweeps.densities)
        for label, g in corpus:
            for k in range(1, self.sweeps.sandwich_max_radius + 1):
                wcol = self._exact_colnum(g, AccessKind.weak(k))
                col = self._exact_colnum(g, AccessKind.strong(k))
                if wcol is None or col is None:
                    tally.skip("kierstead_yang")
                    continue
                bound = eval_bound_formula(BoundFormula.KIERSTEAD_YANG, {"col": col, "k": k})
                tally.record("kierstead_yang", wcol <= bound, f"{label}/k{k}")
        report.add_all(tally.entries())

    def _infinity_identities(self, report: BoundReport) -> None:
        # (name, graph, tree-width, tree-depth) from closed forms
        instances: List[Tuple[str, Graph, int, int]] = []
        for n in range(2, 8):
            instances.append((f"path_{n}", generate(FamilySpec(Family.PATH, {"n": n})).graph, 1, n.bit_length()))
        for n in range(3, 7):
            instances.append((f"cycle_{n}", generate(FamilySpec(Family.CYCLE, {"n": n})).graph, 2,
                              1 + (n - 1).bit_length()))
        for n in range(2, 6):
            instances.append((f"complete_{n}", generate(FamilySpec(Family.COMPLETE, {"n": n})).graph, n - 1, n))
        for name, g, tw, td in instances:
            col_inf = self._exact_colnum(g, AccessKind.strong())
            wcol_inf = self._exact_colnum(g, AccessKind.weak())
            report.add(BoundEntry.skipped(f"col_inf_{name}", tw + 1) if col_inf is None
                       else BoundEntry.compare(f"col_inf_{name}", tw + 1, col_inf))
            report.add(BoundEntry.skipped(f"wcol_inf_{name}", td) if wcol_inf is None
                       else BoundEntry.compare(f"wcol_inf_{name}", td, wcol_inf))
            try:
                depth = treedepth_exact(g, self._budget(settings.search.treedepth_time_limit_ms))
                report.add(BoundEntry.compare(f"td_{name}", td, depth))
            except BudgetExceededError:
                report.add(BoundEntry.skipped(f"td_{name}", td))

    # DECOMP_CHECKS

    def _decomp_checks(self, report: BoundReport) -> None:
        rng = sweep_rng(self.spec.seed, "decomp")
        instances: List[Tuple[str, Graph]] = [
            (f"path_{n}", generate(FamilySpec(Family.PATH, {"n": n})).graph) for n in (2, 5, 9)
        ]
        instances.append(("tree_3_2", generate(FamilySpec(Family.REG_TREE, {"k": 3, "r": 2})).graph))
        instances.extend((f"random_tree_{i}", random_tree(rng, rng.randint(4, 12))) for i in range(3))
        instances.extend((f"wheel_{n}", from_networkx(nx.wheel_graph(n))) for n in (5, 7))
        instances.append(("triangulated_grid", from_networkx(nx.triangular_lattice_graph(2, 3))))
        for name, g in instances:
            self._decomp_pipeline(report, name, g)
        self._optimal_paths(report, rng)
        self._grohe(report, rng)

    @staticmethod
    def _decomp_pipeline(report: BoundReport, name: str, g: Graph, k_max: int = 5) -> None:
        d = peel_shortest_paths(g)
        result = check_decomposition(g, d)
        t = result.width
        f = FlatnessProfile.linear(2, 1)
        prefix = f"decomp_{name}"
        report.add(BoundEntry.check(f"{prefix}_connected", result.connected))
        flat = check_flat(g, d, f, k_max)
        report.add(BoundEntry.check(f"{prefix}_flat", flat.flat, reason=str(flat.violation)))
        contracted = contract(g, d)
        col_inf = eval_colnum(contracted, LinearOrder.identity(contracted.n), AccessKind.strong())
        report.add(BoundEntry.compare(f"{prefix}_contracted_col_inf", t + 1, col_inf, Relation.LE))
        L = flatbound_order(g, d)
        for k in range(1, k_max + 1):
            bound = eval_bound_formula(BoundFormula.FLAT_DCOL, {"t": t, "k": k, "f": f(k)})
            dcol = eval_colnum(g, L, AccessKind.distance(k))
            report.add(BoundEntry.compare(f"{prefix}_flatbound_dcol{k}", bound, dcol, Relation.LE))

    def _optimal_paths(self, report: BoundReport, rng: random.Random) -> None:
        tally = _Tally(["optimal_path_ball"])
        corpus = random_graphs(rng, 100, self.sweeps.coloring_max_vertices, self.sweeps.densities)
        for label, g in corpus:
            u, v = rng.sample(list(g.vertices), 2)
            if not nx.has_path(g.nx_graph, u, v):
                continue
            path = set(nx.shortest_path(g.nx_graph, u, v))
            for y in g.vertices:
                for k in range(self.sweeps.sandwich_max_radius + 1):
                    ball = neighbourhood(g, y, k, closed=True)
                    tally.record("optimal_path_ball", len(ball & path) <= 2 * k + 1, f"{label}/y{y}/k{k}")
        report.add_all(tally.entries())

    def _grohe(self, report: BoundReport, rng: random.Random) -> None:
        tally = _Tally(["grohe_weak_from_strong_inf"])
        graphs = [g for _, g in random_graphs(rng, 100, self.sweeps.sandwich_max_vertices, self.sweeps.densities)]
        graphs.extend(random_tree(rng, rng.randint(3, 12)) for _ in range(20))
        for index, g in enumerate(graphs):
            L = random_order(rng, g.n)
            t = eval_colnum(g, L, AccessKind.strong()) - 1
            for k in range(1, self.sweeps.sandwich_max_radius + 1):
                largest = eval_colnum(g, L, AccessKind.weak(k)) - 1
                bound = eval_bound_formula(BoundFormula.GROHE_WCOL, {"t": t, "k": k})
                tally.record("grohe_weak_from_strong_inf", largest <= bound, f"graph{index}/k{k}")
        report.add_all(tally.entries())


def run_suite(spec: SuiteSpec) -> BoundReport:
    """Run the named suite.

    Args:
        spec: Suite, per-search budget and seed

    Returns:
        BoundReport whose entries carry PASS, FAIL or SKIPPED(budget)
    """
    return SuiteRunner(spec).run()
