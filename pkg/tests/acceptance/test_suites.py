"""
Randomized acceptance suites over generated instances

Every suite draws from the seeded `rng` fixture; pass --seed to vary it.
"""

from itertools import combinations
from math import comb

import pytest

from src.acyclic.pipeline import run_acyclic_routes
from src.acyclic.split import cover_f1_acyclic
from src.families.random_graphs import random_gnp, random_partial_2tree, random_planar_graph, random_td_graph
from src.graph.core import is_induced_forest
from src.oracle.coloring import check_acyclic_sandwich, exact_acyclic_chromatic
from src.oracle.cover import ForestCover, verify_cover
from src.oracle.distinguishing import check_dis_bound
from src.oracle.fk import exact_f_k
from src.treedepth.almost import almost_k_valid_edges
from src.treedepth.coloring import low_td_composition
from src.treedepth.cover import cover_td
from src.treedepth.trees import underlying_tree
from src.treewidth.cover import cover_f1_tw, cover_f2_tw
from src.treewidth.elimination import exact_treewidth
from src.tw2.completion import has_treewidth_at_most_two
from src.tw2.coloring import check_good_coloring, good_coloring
from src.tw2.cover import cover_2valid_tw2

pytestmark = pytest.mark.slow


class TestGoodColoringSuite:
    """Test good colorings of random connected partial 2-trees"""

    def test_200_instances(self, rng):
        """Should satisfy all three conditions on every instance"""
        failures = []
        for i in range(200):
            g = random_partial_2tree(rng.randint(5, 14), rng, keep=rng.uniform(0.2, 0.9))
            problems = check_good_coloring(g, good_coloring(g).colors)
            if problems:
                failures.append((i, g.edges, problems))
        assert failures == []


class TestTreeDepthSuite:
    """Test tree-depth covers on random graphs with a shallow underlying tree"""

    def test_100_instances(self, rng):
        """Should verify within (2k)^d with almost-valid counts in range"""
        checked = 0
        for i in range(100):
            d = (2, 3, 4)[i % 3]
            k = (2, 3)[i // 3 % 2]
            star = d >= 3 and rng.random() < 0.3
            g, tree = random_td_graph(rng.randint(d + 1, 10), d, rng, star_rooted=star)
            cover = cover_td(g, tree, k)
            assert verify_cover(g, cover).valid, (d, k, g.edges)
            assert len(cover) <= (2 * k) ** tree.depth
            report = almost_k_valid_edges(g, tree, k)
            assert len(report.edges) <= (2 * k) ** (tree.depth - 1) - 1
            assert report.within_bounds
            checked += 1
        assert checked == 100


class TestPlanarPipelineSuite:
    """Test the acyclic-coloring pipeline on small planar graphs"""

    def test_50_instances(self, rng):
        """Should verify both routes and respect the pipeline bound"""
        for _ in range(50):
            g = random_planar_graph(rng.randint(4, 12), rng)
            x = exact_acyclic_chromatic(g).value
            assert x <= 5
            for result in run_acyclic_routes(g, "best"):
                assert verify_cover(g, result.cover).valid
                assert len(result.cover) <= result.bound
                x_max = max([x, *result.contracted_colors])
                assert len(result.cover) <= comb(x_max, 2) * (3 * comb(x_max, 2) + 1)


def _constructive_covers(g, k):
    """Every construction whose precondition holds on g, by name."""
    t = max(exact_treewidth(g).value, 2)
    covers = {
        "tw": cover_f1_tw(g, t) if k == 1 else cover_f2_tw(g, t),
        "td": cover_td(g, underlying_tree(g, g.n), k),
    }
    if k == 1:
        covers["acyclic"] = cover_f1_acyclic(g)
    else:
        covers["acyclic"] = min((r.cover for r in run_acyclic_routes(g)), key=len)
        if has_treewidth_at_most_two(g):
            covers["tw2"] = cover_2valid_tw2(g)
    if g.n <= 7:
        covers["main"] = low_td_composition(g, k)[0]
    return covers


class TestCrossOracleSuite:
    """Test every construction against the exact oracle"""

    def test_100_instances(self, rng):
        """Should never beat the optimum and always verify"""
        done = 0
        while done < 100:
            g = random_gnp(rng.randint(3, 9), rng.uniform(0.25, 0.6), rng)
            if g.m == 0:
                continue
            k = 1 + done % 2
            optimum = exact_f_k(g, k).value
            for name, cover in _constructive_covers(g, k).items():
                assert verify_cover(g, cover).valid, (name, g.edges)
                assert len(cover) >= optimum, (name, g.edges)
            assert check_acyclic_sandwich(g).holds
            done += 1


def _strong_forests(g):
    """Vertex sets inducing forests whose components all have at least two edges."""
    out = []
    for mask in range(1, 1 << g.n):
        check = is_induced_forest(g, mask)
        if check and all(info.edge_count >= 2 for info in check.components):
            out.append(mask)
    return out


def _full_cover(g):
    """A cover of every edge by at most two 2-strong forests, or None."""
    forests = _strong_forests(g)
    edges = set(g.edges)
    for m in (1, 2):
        for chosen in combinations(forests, m):
            if set().union(*(g.edges_within(f) for f in chosen)) == edges:
                return ForestCover.from_masks(g, 2, chosen)
    return None


class TestDistinguishingSuite:
    """Test the labeling bound from covers of every edge"""

    def test_30_instances(self, rng):
        """Should stay below the product of the numbers"""
        found = 0
        for _ in range(3000):
            if found == 30:
                break
            g = random_gnp(rng.randint(3, 6), rng.uniform(0.3, 0.7), rng)
            if g.m == 0:
                continue
            cover = _full_cover(g)
            if cover is None:
                continue
            numbers = [5] if len(cover) == 1 else [4, 5]
            verdict = check_dis_bound(g, cover, numbers)
            assert verdict.holds, (g.edges, verdict)
            found += 1
        assert found == 30
