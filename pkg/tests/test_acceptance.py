"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line
that is printed in the terminal summary.

Set CIRCPW_FULL=1 to give the exhaustive n = 10 dichotomy attempt its full
fifteen minute allowance (by default it gets one minute).
"""
import math
import os
import random
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from circpw.bounds import lemma2_bound, lemma2_decompose, thm1_bound, thm1_decompose
from circpw.corpus import (
    all_graphs,
    biconnected_graphs,
    certificate,
    is_biconnected,
    random_biconnected,
    random_block_glued,
    random_graph,
    random_tree,
    sample_triconnected,
    triconnected_graphs,
)
from circpw.decomposition import validate
from circpw.gadgets import (
    cbt_plus_dominants,
    hub_forest,
    named,
    outerplanar_family,
    proposition1_check,
)
from circpw.graph import Graph, vertex_connectivity
from circpw.oracles import (
    circumference,
    exact_pathwidth,
    exact_treedepth,
    longest_path_edges,
    max_long_cycle_packing,
    minor_contains,
    transversal_number,
)
from circpw.packing import bbr_bound, min_hitting_set, pipeline_params, thm2_pipeline
from circpw.trees import cbt, extract_cbt_minor, leaf_distance, rooted_pw_map
import reference as ref

FULL = os.environ.get("CIRCPW_FULL") == "1"
ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


@contextmanager
def criterion(key: str, title: str):
    notes: list[str] = []
    start = time.monotonic()
    try:
        yield notes
    except BaseException as exc:
        msg = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
        ACCEPTANCE_RESULTS[key] = ("FAIL", f"{title}: {msg[:200]}")
        raise
    detail = "; ".join(notes)
    ACCEPTANCE_RESULTS[key] = ("PASS", f"{title}: {detail} ({time.monotonic() - start:.1f}s)")


def _twoconnected_corpus():
    exhaustive = [g for n in range(3, 9) for g in biconnected_graphs(n)]
    rng = random.Random(20240601)
    sampled = [random_biconnected(rng.randint(3, 12), rng, rng.choice((0.05, 0.15, 0.3)))
               for _ in range(200)]
    return exhaustive, sampled


_CORPUS_2C = None


def twoconnected_corpus():
    global _CORPUS_2C
    if _CORPUS_2C is None:
        _CORPUS_2C = _twoconnected_corpus()
    return _CORPUS_2C


# -- 1 ----------------------------------------------------------------------------

def test_criterion_01_thm1_bound():
    with criterion("1", "DFS-tree decomposition within floor(t/2)(t-1)") as notes:
        start = time.monotonic()
        exhaustive, sampled = twoconnected_corpus()
        violations = []
        for g in exhaustive + sampled:
            t = circumference(g)
            cert = thm1_decompose(g, t)
            if not validate(g, cert.decomposition).valid:
                violations.append((g, "invalid"))
            elif cert.width > (t // 2) * (t - 1):
                violations.append((g, cert.width))
        elapsed = time.monotonic() - start
        notes.append(f"{len(exhaustive)} exhaustive n<=8 + {len(sampled)} sampled n<=12")
        notes.append(f"{len(violations)} violations")
        assert not violations, violations[:3]
        assert elapsed < 300, f"took {elapsed:.0f}s"


# -- 2 ----------------------------------------------------------------------------

def test_criterion_02_dfs_internals():
    with criterion("2", "DFS spans <= t-1, height <= bound, treedepth <= height+1") as notes:
        exhaustive, sampled = twoconnected_corpus()
        bad = []
        for g in exhaustive + sampled:
            t = circumference(g)
            cert = thm1_decompose(g, t)
            # second route: an independent recursive DFS with the same
            # neighbour order
            height = ref.dfs_heights(g)
            spans = [abs(height[u] - height[v]) for u, v in g.edges()]
            if max(spans) > t - 1 or cert.max_span != max(spans):
                bad.append((g, "span"))
            if max(height.values()) != cert.dfs_height or cert.dfs_height > thm1_bound(t):
                bad.append((g, "height"))
            if exact_treedepth(g) > cert.dfs_height + 1:
                bad.append((g, "treedepth"))
        notes.append(f"{len(exhaustive) + len(sampled)} graphs, {len(bad)} violations")
        assert not bad, bad[:3]


# -- 3 ----------------------------------------------------------------------------

def test_criterion_03_block_composition():
    with criterion("3", "block-cut composition within (m+3)(n+1)-3") as notes:
        rng = random.Random(31337)
        bad = []
        sizes = []
        for _ in range(200):
            g = random_block_glued(rng.randint(1, 40), rng)
            res = lemma2_decompose(g)
            sizes.append(g.n)
            limit = (res.m + 3) * (res.n + 1) - 3
            if not validate(g, res.decomposition).valid or res.decomposition.width > limit:
                bad.append(g)
            assert res.bound == limit == lemma2_bound(res.m, res.n)
        notes.append(f"200 graphs, n in [{min(sizes)}, {max(sizes)}], {len(bad)} violations")
        assert not bad


# -- 4 ----------------------------------------------------------------------------

def _level_order_distance(a: int, b: int) -> int:
    d = 0
    while a != b:
        if a > b:
            a = (a - 1) // 2
        else:
            b = (b - 1) // 2
        d += 1
    return d


def test_criterion_04_leaf_distance():
    with criterion("4", "leaf distance >= 2 log2(b-a+1), equality cases") as notes:
        pairs = 0
        for h in range(1, 9):
            t = cbt(h)
            for a in range(1, 2 ** h + 1):
                for b in range(a, 2 ** h + 1):
                    d = leaf_distance(t, a, b)
                    assert d == _level_order_distance(t.leaf(a), t.leaf(b))
                    assert d >= math.ceil(2 * math.log2(b - a + 1) - 1e-9), (h, a, b)
                    pairs += 1
            for a in range(1, 2 ** h + 1, 2):
                assert leaf_distance(t, a, a + 1) == 2 == 2 * math.log2(2)
            assert leaf_distance(t, 1, 2 ** h) == 2 * h == 2 * math.log2(2 ** h)
        notes.append(f"{pairs} leaf pairs for h <= 8, equality at siblings and extremes")


# -- 5 ----------------------------------------------------------------------------

def test_criterion_05_cbt_extraction():
    with criterion("5", "cbt minor extraction at R(root)-1; pw(tree) <= R(root)") as notes:
        rng = random.Random(5150)
        small = 0
        for _ in range(500):
            t = random_tree(rng.randint(2, 60), rng)
            root = rng.randrange(t.n)
            pw = rooted_pw_map(t, root)
            q = pw[root] - 1
            model = extract_cbt_minor(t, root, q, pw)
            assert model.problems(t) == []
            assert model.pattern == cbt(q).graph
            if t.n <= 16:
                small += 1
                assert exact_pathwidth(t) <= pw[root]
        # a second pool restricted to n <= 16 so the pathwidth check sees
        # every size in range
        for _ in range(300):
            t = random_tree(rng.randint(1, 16), rng)
            root = rng.randrange(t.n)
            assert exact_pathwidth(t) <= rooted_pw_map(t, root)[root]
            small += 1
        notes.append(f"500 extractions valid; {small} pathwidth checks with n <= 16")


# -- 6 ----------------------------------------------------------------------------

def test_criterion_06_cbt_pathwidth():
    with criterion("6", "pw(cbt(h)) = ceil(h/2), pw with d dominants = ceil(h/2)+d") as notes:
        for h in (1, 2, 3):
            assert exact_pathwidth(cbt(h).graph) == math.ceil(h / 2)
            for d in (0, 1, 2):
                assert exact_pathwidth(cbt_plus_dominants(h, d)) == math.ceil(h / 2) + d
        notes.append("all 3 + 9 values exact")


# -- 7 ----------------------------------------------------------------------------

def test_criterion_07_closed_forms():
    with criterion("7", "closed-form values") as notes:
        assert bbr_bound(2, 3) == 9
        assert bbr_bound(3, 3) == 96
        p = pipeline_params(2, 3, 9)
        assert (p.i, p.j) == (4, 5)
        notes.append("bbr(2,3)=9, bbr(3,3)=96, (i,j)=(4,5)")


# -- 8 ----------------------------------------------------------------------------

def _dichotomy_check(g: Graph) -> list[str]:
    issues = []
    for t in (3, 4):
        out = thm2_pipeline(g, 2, t)
        out.verify(g)
        if len(max_long_cycle_packing(g, t)) < 2:
            if out.branch != "decomposition":
                issues.append(f"t={t}: packing branch without 2 disjoint long cycles")
            elif out.decomposition.width > out.budget:
                issues.append(f"t={t}: width over budget")
            else:
                m = out.trace["m"]
                limit = (m + 3) * (out.params.depth + 1) - 3 + len(out.hitting_set)
                if out.budget != limit:
                    issues.append(f"t={t}: budget {out.budget} != {limit}")
    return issues


def test_criterion_08_dichotomy_attained_scope():
    with criterion("8a", "dichotomy, exhaustive n<=9 + sampled n=10") as notes:
        start = time.monotonic()
        counts = {}
        bad = []
        for n in range(4, 10):
            graphs = triconnected_graphs(n)
            counts[n] = len(graphs)
            for g in graphs:
                issues = _dichotomy_check(g)
                if issues:
                    bad.append((g, issues))
        sample = sample_triconnected(10, 400, random.Random(1010))
        for g in sample:
            issues = _dichotomy_check(g)
            if issues:
                bad.append((g, issues))
        elapsed = time.monotonic() - start
        notes.append(f"exhaustive counts {counts}, {len(sample)} sampled at n=10")
        notes.append(f"{len(bad)} violations")
        assert not bad, bad[:3]
        assert elapsed < 900, f"took {elapsed:.0f}s"


def _extend_streaming(graphs, min_degree, deadline):
    """Yields graphs on one more vertex, up to isomorphism, while watching
    the clock."""
    seen = set()
    for g in graphs:
        n = g.n
        base = list(g.edges())
        for size in range(min_degree, n + 1):
            for nbrs in combinations(range(n), size):
                if time.monotonic() > deadline:
                    raise TimeoutError
                h = Graph(n + 1, base + [(v, n) for v in nbrs])
                c = certificate(h)
                if c not in seen:
                    seen.add(c)
                    yield h


@pytest.mark.xfail(strict=True, reason="exhaustive enumeration of 3-connected graphs on 10 "
                   "vertices (millions of graphs) does not fit the time cap on one CPU")
def test_criterion_08_dichotomy_exhaustive_n10():
    allowance = 900 if FULL else 60
    with criterion("8b", "dichotomy, exhaustive n=10") as notes:
        deadline = time.monotonic() + allowance
        done = 0
        try:
            connected8 = [g for g in all_graphs(8) if g.is_connected()]
            two9 = (g for g in _extend_streaming(connected8, 2, deadline) if is_biconnected(g))
            for g in _extend_streaming(two9, 3, deadline):
                if vertex_connectivity(g) >= 3:
                    assert not _dichotomy_check(g)
                    done += 1
        except TimeoutError:
            notes.append(f"{done} graphs checked before the cap")
            raise AssertionError(f"enumeration unfinished after {allowance}s; "
                                 f"{done} graphs checked, 0 violations") from None
        notes.append(f"{done} graphs")


# -- 9 ----------------------------------------------------------------------------

def test_criterion_09_packing_branch():
    with criterion("9", "packing branch end to end on the hub gadget") as notes:
        g, hubs = hub_forest(4, 2, "edge")
        out = thm2_pipeline(g, 2, 3, h_override=hubs)
        assert out.branch == "packing"
        assert out.params.depth == 3
        assert out.trace["forest_R"] >= out.params.depth + 1
        out.packing.verify(g)
        cycles = out.packing.cycles
        assert len(cycles) == 2 and all(len(c) >= 3 for c in cycles)
        assert not set(cycles[0]) & set(cycles[1])
        notes.append(f"cycle lengths {[len(c) for c in cycles]}")


# -- 10 ---------------------------------------------------------------------------

def test_criterion_10_hitting_set_bound():
    with criterion("10", "hitting set <= bbr_bound when packing < k") as notes:
        rng = random.Random(1000)
        corpus = [g for n in range(0, 9) for g in all_graphs(n)]
        for n in (9, 10):
            for _ in range(400):
                corpus.append(random_graph(n, rng.choice((0.2, 0.35, 0.5, 0.7)), rng))
        checked = 0
        bad = []
        for g in corpus:
            for k, t in ((2, 3), (2, 4), (3, 3), (3, 4)):
                if len(max_long_cycle_packing(g, t)) < k:
                    checked += 1
                    if len(min_hitting_set(g, t)) > bbr_bound(k, t):
                        bad.append((g, k, t))
        notes.append(f"{len(corpus)} graphs (exhaustive n<=8, 800 sampled n=9,10), "
                     f"{checked} (g,k,t) cases, {len(bad)} violations")
        assert not bad


# -- 11 ---------------------------------------------------------------------------

def test_criterion_11_small_graph_facts():
    with criterion("11", "Q, outerplanar family, Lovasz, proposition certificates") as notes:
        q = named("Q")
        assert transversal_number(q) == 2
        for name in ("K4", "K23", "K3uK3"):
            assert minor_contains(q, named(name)) is None
        for i in range(3):
            g = outerplanar_family(i)
            assert minor_contains(g, named("K4")) is None
            assert minor_contains(g, named("K23")) is None
        patterns = [named("K4"), named("K3uK3"), q]
        graphs = [g for n in range(0, 8) for g in all_graphs(n)]
        for g in graphs:
            small_tau = transversal_number(g) <= 1
            free = all(minor_contains(g, p) is None for p in patterns)
            assert small_tau == free, sorted(g.edges())
        for name in ("K3uK3", "Q"):
            for h in (1, 2):
                cert = proposition1_check(named(name), h)
                assert cert.facts["minor_absent"] and cert.facts["tau"] == 1
        notes.append(f"Lovasz equivalence on all {len(graphs)} graphs with n <= 7")


# -- 12 ---------------------------------------------------------------------------

def test_criterion_12_dirac():
    with criterion("12", "circumference^2 > 2 * longest path on 2-connected graphs") as notes:
        exhaustive, sampled = twoconnected_corpus()
        for g in exhaustive + sampled:
            t, p = circumference(g), longest_path_edges(g)
            assert t * t > 2 * p, sorted(g.edges())
        notes.append(f"{len(exhaustive) + len(sampled)} graphs")
