import math

import networkx as nx
import pytest

from circpw.corpus import is_biconnected
from circpw.errors import BudgetError, PreconditionError
from circpw.gadgets import (
    GadgetSpec,
    cbt_plus_dominants,
    disjoint_cycles,
    hub_forest,
    named,
    outerplanar_family,
    proposition1_certificate,
    proposition1_check,
)
from circpw.graph import complete_graph, path_graph, vertex_connectivity
from circpw.oracles import circumference, exact_pathwidth, minor_contains, transversal_number
import reference as ref


def test_cbt_plus_dominants_examples():
    assert sorted(cbt_plus_dominants(1, 0).edges()) == [(0, 1), (0, 2)]
    g = cbt_plus_dominants(2, 1)
    assert vertex_connectivity(g) >= 2 and exact_pathwidth(g) == 2
    assert exact_pathwidth(cbt_plus_dominants(3, 2)) == 4


@pytest.mark.parametrize("h", [1, 2, 3])
@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_dominant_connectivity(h, d):
    g = cbt_plus_dominants(h, d)
    assert vertex_connectivity(g) == d + 1
    assert nx.node_connectivity(ref.to_nx(g)) == d + 1


@pytest.mark.parametrize("h", [1, 2, 3])
@pytest.mark.parametrize("d", [0, 1, 2])
def test_dominant_pathwidth(h, d):
    assert exact_pathwidth(cbt_plus_dominants(h, d)) == math.ceil(h / 2) + d


@pytest.mark.parametrize("h", [2, 3])
@pytest.mark.parametrize("d", [0, 1, 2])
def test_dominant_transversal(h, d):
    assert transversal_number(cbt_plus_dominants(h, d)) == d


def test_outerplanar_family():
    assert outerplanar_family(0) == complete_graph(3)
    for i in range(5):
        g = outerplanar_family(i)
        assert g.n == 3 * 2 ** i
        assert is_biconnected(g)
    for i in range(3):
        g = outerplanar_family(i)
        assert minor_contains(g, named("K4")) is None
        assert minor_contains(g, named("K23")) is None
    with pytest.raises(BudgetError):
        outerplanar_family(7)


def test_disjoint_cycles():
    assert disjoint_cycles(3, 1) == complete_graph(3)
    assert transversal_number(disjoint_cycles(3, 2)) == 2
    g = disjoint_cycles(4, 2)
    assert g.n == 8 and circumference(g) == 4


def test_q_graph():
    q = named("Q")
    assert q.n == 6 and q.m == 9
    assert transversal_number(q) == 2
    for name in ("K4", "K23", "K3uK3"):
        assert minor_contains(q, named(name)) is None
    assert not ref.has_minor_brute(q, named("K4"))


def test_named_rejects_unknown():
    with pytest.raises(ValueError):
        named("dodecahedron")
    assert transversal_number(named("K3uK3")) == 2


def test_gadget_spec():
    assert GadgetSpec("cbt_dominants", (2, 1)).build() == cbt_plus_dominants(2, 1)
    assert GadgetSpec("hub_forest", (2, 2)).build() == hub_forest(2, 2)[0]
    assert GadgetSpec("Q").build() == named("Q")
    with pytest.raises(ValueError):
        GadgetSpec("Q", (1,)).build()
    with pytest.raises(ValueError):
        GadgetSpec("nothing").build()


def test_hub_forest_triangle_blocks():
    g, hubs = hub_forest(2, 2, "triangle")
    rest, _ = g.remove_vertices(hubs)
    assert circumference(rest) == 3
    assert vertex_connectivity(g) >= 3


def test_proposition1_examples():
    g, text = proposition1_certificate(complete_graph(3), 2)
    assert g.is_forest() and "dominant" in text
    for name in ("K3uK3", "Q"):
        for h in (1, 2):
            cert = proposition1_check(named(name), h)
            assert cert.facts == {"connectivity": 2, "tau": 1, "minor_absent": True}
            assert cert.graph == cbt_plus_dominants(h, 1)
    with pytest.raises(PreconditionError):
        proposition1_check(path_graph(3), 2)
    with pytest.raises(PreconditionError):
        proposition1_check(named("Q"), 0)
