"""
CLI subcommands.

Each command takes the parsed arguments, builds a report dictionary
(src/state.py), prints it, and returns the exit code. Library errors are
mapped to exit codes by with_error_handling. Covers are re-verified here
before anything is printed or written.
"""
import sys
import time
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Optional

from ..config import Config
from ..enhanced_logging import MetricsLogger, get_metrics_logger
from ..families.registry import build_family, check_claims, parse_family_spec
from ..graph.core import Graph, twin_edges
from ..graph.elimination import dfs_elimination_forest
from ..graph.io import format_edge_list, read_edge_list, to_dot, write_edge_list
from ..acyclic.pipeline import run_acyclic_routes
from ..acyclic.split import cover_f1_acyclic, optimal_acyclic_coloring
from ..logger import get_logger
from ..oracle.arboricity import nash_williams_arboricity
from ..oracle.coloring import exact_acyclic_chromatic
from ..oracle.cover import ExactResult, ForestCover, require_valid_cover, verify_cover
from ..oracle.fk import bound_f_k, exact_f_k
from ..oracle.treedepth import exact_tree_depth
from ..state import BoundedValue, CoverReport, FkReport, GenReport, GraphInfo, StatsReport, VerifyReport
from ..treedepth.coloring import cover_td_by_levels, low_td_composition
from ..treedepth.cover import cover_td, td_cover_bound
from ..treedepth.trees import underlying_tree
from ..treewidth.cover import cover_f1_tw, cover_f2_tw
from ..treewidth.elimination import exact_treewidth, min_fill_order, minor_min_width
from ..tw2.cover import cover_2valid_tw2
from ..utils.budget import SearchBudget
from ..utils.error_handler import BudgetExhausted, InputError, PreconditionError, VerificationError, with_error_handling
from ..validity.witness import k_valid_edges
from .render import emit

logger = get_logger(__name__)

METHODS = ("tw2", "tw", "td", "acyclic", "main")


# =========================================================================
# Run context
# =========================================================================

@dataclass
class RunContext:
    """Configuration and sinks shared by one command invocation."""
    config: Config
    as_json: bool = False
    metrics: Optional[MetricsLogger] = None

    @classmethod
    def from_args(cls, args) -> "RunContext":
        config: Config = args.config
        return cls(
            config=config,
            as_json=bool(getattr(args, "json", False)),
            metrics=get_metrics_logger(config.logging.log_dir),
        )

    def budget(self, name: str) -> Optional[SearchBudget]:
        """A fresh budget per solver call, or None when no limit is configured."""
        search = self.config.search
        if search.budget_ms is None and search.max_nodes is None:
            return None
        return SearchBudget(time_ms=search.budget_ms, max_nodes=search.max_nodes, operation_name=name)

    def load(self, source: str) -> tuple[Graph, GraphInfo]:
        """Read an edge-list file, or build `@family:p1,p2`."""
        if source.startswith("@"):
            g = build_family(source)
        else:
            g = read_edge_list(source, max_vertices=self.config.search.max_vertices)
        logger.info(f"loaded {source}: {g!r}")
        return g, {"source": source, "graph_hash": g.graph_hash, "n": g.n, "m": g.m}

    def record(self, component: str, g: Graph, started: float, outcome: str, k=None, value=None) -> None:
        if self.metrics is not None:
            duration = (time.monotonic() - started) * 1000.0
            self.metrics.log_solver_run(component, g.graph_hash, duration, outcome, k=k, value=value)


def _bounded(result: ExactResult) -> BoundedValue:
    return {"value": result.value, "lower": result.lower, "upper": result.upper, "proof": result.proof}


def _elapsed(started: float) -> float:
    return round((time.monotonic() - started) * 1000.0, 3)


def _write_outputs(args, g: Graph, cover: Optional[ForestCover], name: str) -> None:
    if cover is None:
        return
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(cover.to_json() + "\n", encoding="utf-8")
        logger.info(f"cover written to {out}")
    dot = getattr(args, "dot", None)
    if dot:
        Path(dot).write_text(to_dot(g, cover.masks(), name=name), encoding="utf-8")
        logger.info(f"DOT written to {dot}")


# =========================================================================
# fk
# =========================================================================

@with_error_handling("fk")
def cmd_fk(args) -> int:
    ctx = RunContext.from_args(args)
    g, info = ctx.load(args.input)
    k = args.k
    started = time.monotonic()

    if args.bound_only:
        result = bound_f_k(g, k, ctx.budget("bound_f_k"))
    else:
        cap = ctx.config.search.exact_cap_for(k)
        if g.n > cap:
            raise PreconditionError(
                f"exact f_{k} is limited to {cap} vertices; use --bound-only",
                {"n": g.n, "cap": cap},
            )
        result = exact_f_k(g, k, ctx.budget("exact_f_k"))

    cover = result.certificate
    if cover is not None:
        cover = require_valid_cover(g, cover, "fk")
    report: FkReport = {
        "command": "fk",
        "graph": info,
        "k": k,
        "mode": "bound-only" if args.bound_only else "exact",
        "valid_edges": len(k_valid_edges(g, k)),
        "result": _bounded(result),
        "cover": cover.model_dump(mode="json") if cover is not None else None,
        "duration_ms": _elapsed(started),
    }
    emit(report, ctx.as_json)
    _write_outputs(args, g, cover, "fk")
    ctx.record("fk", g, started, result.proof, k=k, value=result.value)

    if not args.bound_only and not result.is_exact:
        raise BudgetExhausted("exact f_k search ran out of budget", lower=result.lower, upper=result.upper)
    return 0


# =========================================================================
# cover
# =========================================================================

def _require_k(method: str, k: int, allowed: tuple[int, ...]) -> None:
    if k not in allowed:
        raise PreconditionError(
            f"method {method} builds covers for k in {list(allowed)}, got k={k}", {"method": method}
        )


def _treewidth_for(g: Graph, t: Optional[int], ctx: RunContext) -> int:
    if t is not None:
        return t
    result = exact_treewidth(g, ctx.budget("exact_treewidth"))
    return result.value if result.is_exact else result.upper


def _build_cover(args, g: Graph, ctx: RunContext) -> tuple[ForestCover, int, dict]:
    """Run the requested construction; returns (cover, bound, parameters)."""
    method, k = args.method, args.k

    if method == "tw2":
        _require_k(method, k, (2,))
        return cover_2valid_tw2(g), 3, {}

    if method == "tw":
        _require_k(method, k, (1, 2))
        t = _treewidth_for(g, args.t, ctx)
        if k == 1:
            return cover_f1_tw(g, t, ctx.budget("cover_f1_tw")), comb(t + 1, 2), {"t": t}
        if args.t is None:
            t = max(t, 2)
        return cover_f2_tw(g, t, ctx.budget("cover_f2_tw")), 3 * comb(t + 1, 3), {"t": t}

    if method == "td":
        d = args.d if args.d is not None else g.n
        tree = underlying_tree(g, d, ctx.budget("underlying_tree"))
        if tree is None:
            raise PreconditionError(f"graph has no underlying tree of depth at most {d}", {"d": d})
        depth = tree.depth
        params = {"d": depth, "root": tree.root}
        if args.levels and depth > k + 1:
            cover = cover_td_by_levels(g, tree, k, ctx.budget("cover_td_by_levels"))
            return cover, td_cover_bound(k, k + 1) * comb(depth, k + 1), params | {"levels": True}
        bound = comb(depth, 2) if k == 1 else td_cover_bound(k, depth)
        return cover_td(g, tree, k, ctx.budget("cover_td")), bound, params

    if method == "acyclic":
        _require_k(method, k, (1, 2))
        if k == 1:
            coloring = optimal_acyclic_coloring(g, ctx.budget("acyclic_coloring"), "cover --method acyclic")
            x = coloring.num_colors
            return cover_f1_acyclic(g, coloring=coloring), comb(x, 2), {"x": x}
        results = run_acyclic_routes(g, args.route, ctx.budget("acyclic_routes"))
        best = min(results, key=lambda r: len(r.cover))
        params = {"route": best.route, "x": best.x, "contracted_colors": best.contracted_colors}
        return best.cover, best.bound, params

    if method == "main":
        cover, q, bound = low_td_composition(g, k, ctx.budget("low_td_composition"))
        return cover, bound, {"q": q}

    raise InputError(f"unknown method {method!r}", {"methods": list(METHODS)})


@with_error_handling("cover")
def cmd_cover(args) -> int:
    ctx = RunContext.from_args(args)
    g, info = ctx.load(args.input)
    k = args.k
    started = time.monotonic()

    cover, bound, params = _build_cover(args, g, ctx)
    cover = require_valid_cover(g, cover, f"cover --method {args.method}")
    ctx.record(f"cover:{args.method}", g, started, "verified", k=k, value=len(cover))

    optimum: Optional[BoundedValue] = None
    if args.compare and g.n <= ctx.config.search.exact_cap_for(k):
        exact = exact_f_k(g, k, ctx.budget("exact_f_k"))
        optimum = _bounded(exact)
        if exact.is_exact and len(cover) < exact.value:
            raise VerificationError(
                f"cover with {len(cover)} forests beats the exact optimum {exact.value}",
                {"method": args.method},
            )

    report: CoverReport = {
        "command": "cover",
        "graph": info,
        "k": k,
        "method": args.method,
        "parameters": params,
        "size": len(cover),
        "bound": bound,
        "within_bound": len(cover) <= bound,
        "optimum": optimum,
        "cover": cover.model_dump(mode="json"),
        "duration_ms": _elapsed(started),
    }
    emit(report, ctx.as_json)
    _write_outputs(args, g, cover, f"cover_{args.method}")
    if len(cover) > bound:
        raise VerificationError(f"{len(cover)} forests exceed the method bound {bound}")
    return 0


# =========================================================================
# stats
# =========================================================================

def _skipped(lower: Optional[int], upper: Optional[int], cap: int) -> BoundedValue:
    if lower is not None and lower == upper:
        return {"value": lower, "lower": lower, "upper": upper, "proof": "bound-met"}
    return {"value": None, "lower": lower, "upper": upper, "proof": "skipped", "note": f"n above {cap}"}


@with_error_handling("stats")
def cmd_stats(args) -> int:
    ctx = RunContext.from_args(args)
    g, info = ctx.load(args.input)
    search = ctx.config.search
    started = time.monotonic()

    if g.n <= search.treewidth_max_vertices:
        treewidth = _bounded(exact_treewidth(g, ctx.budget("exact_treewidth")))
    else:
        treewidth = _skipped(minor_min_width(g), min_fill_order(g)[0], search.treewidth_max_vertices)

    small = g.n <= search.exact_max_vertices
    if small:
        tree_depth = _bounded(exact_tree_depth(g, ctx.budget("exact_tree_depth")))
        acyclic = _bounded(exact_acyclic_chromatic(g, ctx.budget("exact_acyclic_chromatic")))
        arboricity: BoundedValue = {"value": nash_williams_arboricity(g), "proof": "exhausted"}
        arboricity["lower"] = arboricity["upper"] = arboricity["value"]
    else:
        tw_lower = treewidth.get("lower") or 0
        tree_depth = _skipped(tw_lower + 1 if g.n else 0, dfs_elimination_forest(g).depth, search.exact_max_vertices)
        acyclic = _skipped(min(g.n, 2) if g.m else min(g.n, 1), g.n, search.exact_max_vertices)
        density = -(-g.m // (g.n - 1)) if g.n > 1 else 0
        arboricity = _skipped(density, None, search.exact_max_vertices)

    counts: dict[str, int] = {}
    for k in range(1, args.k_max + 1):
        counts[str(k)] = len(k_valid_edges(g, k))
        if counts[str(k)] == 0:
            break

    report: StatsReport = {
        "command": "stats",
        "graph": info,
        "treewidth": treewidth,
        "tree_depth": tree_depth,
        "acyclic_chromatic": acyclic,
        "arboricity": arboricity,
        "twin_edges": [list(e) for e in twin_edges(g)],
        "valid_edge_counts": counts,
        "duration_ms": _elapsed(started),
    }
    emit(report, ctx.as_json)
    ctx.record("stats", g, started, "done")
    return 0


# =========================================================================
# gen
# =========================================================================

@with_error_handling("gen")
def cmd_gen(args) -> int:
    ctx = RunContext.from_args(args)
    spec = parse_family_spec(f"{args.family}:{','.join(args.params)}")
    g = spec.build()
    info: GraphInfo = {"source": f"@{spec}", "graph_hash": g.graph_hash, "n": g.n, "m": g.m}

    if args.out:
        write_edge_list(g, args.out, comment=f"family {spec}")
    else:
        sys.stdout.write(format_edge_list(g, comment=f"family {spec}"))
    if args.dot:
        reference = spec.reference_cover()
        forests = reference.masks() if reference is not None else None
        Path(args.dot).write_text(to_dot(g, forests, name=spec.name.replace("-", "_")), encoding="utf-8")

    report: GenReport = {"command": "gen", "family": str(spec), "graph": info, "output": args.out}
    failed = []
    if args.check:
        results = check_claims(spec, ctx.budget("check_claims"))
        report["claims"] = [
            {"claim": r.claim.describe(), "mode": r.claim.mode, "observed": r.observed, "holds": r.holds}
            for r in results
        ]
        failed = [r.claim.describe() for r in results if r.holds is False]
    if args.out or args.check:
        emit(report, ctx.as_json, None if args.out else sys.stderr)
    if failed:
        raise VerificationError(f"{len(failed)} claim(s) of {spec} do not hold", {"claims": failed})
    return 0


# =========================================================================
# verify
# =========================================================================

@with_error_handling("verify")
def cmd_verify(args) -> int:
    ctx = RunContext.from_args(args)
    g, info = ctx.load(args.input)
    try:
        text = Path(args.cover).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {args.cover}: {e.strerror}") from None
    cover = ForestCover.from_json(text)
    verdict = verify_cover(g, cover)

    report: VerifyReport = {
        "command": "verify",
        "graph": info,
        "k": cover.k,
        "forests": len(cover),
        "valid": verdict.valid,
        "violations": list(verdict.violations),
        "uncovered": [list(e) for e in verdict.uncovered],
    }
    emit(report, ctx.as_json)
    if not verdict.valid:
        raise VerificationError("cover is invalid", {"first violation": verdict.first_violation})
    return 0
