import pytest
from hypothesis import given
from hypothesis import strategies as st

from circpw.decomposition import (
    BROKEN_INTERVAL,
    MISSING_VERTEX,
    UNCOVERED_EDGE,
    PathDecomposition,
    add_to_every_bag,
    concatenate,
    forest_closure_decomposition,
    is_normalised,
    normalise,
    normalise_bags,
    validate,
    width,
)
from circpw.errors import PreconditionError
from circpw.graph import Graph, RootedForest, cycle_graph, path_graph
from circpw.oracles import ordering_to_decomposition
from conftest import graphs


def kinds(report):
    return sorted(v.kind for v in report.violations)


def test_validate_each_violation_kind():
    g = path_graph(3)
    assert validate(g, PathDecomposition([{0, 1}, {1, 2}])).valid
    assert kinds(validate(g, PathDecomposition([{0, 1}]))) == [MISSING_VERTEX]
    assert kinds(validate(g, PathDecomposition([{0, 1}, {2}]))) == [UNCOVERED_EDGE]
    broken = validate(g, PathDecomposition([{0, 1}, {1, 2}, {0}]))
    assert kinds(broken) == [BROKEN_INTERVAL]
    assert broken.violations[0].bags == (0, 2)


def test_validate_rejects_foreign_vertices():
    with pytest.raises(ValueError):
        validate(path_graph(2), PathDecomposition([{0, 1, 7}]))


def test_width_of_empty_is_an_error():
    with pytest.raises(ValueError):
        width(PathDecomposition([]))
    assert PathDecomposition([set()]).width == -1


def test_normalise_examples():
    assert normalise_bags([frozenset({0, 1, 2})]) == [{0}, {0, 1}, {0, 1, 2}]
    assert normalise_bags([frozenset({0, 1}), frozenset({1, 2})]) == [{0}, {0, 1}, {1, 2}]
    with pytest.raises(PreconditionError):
        normalise(path_graph(3), PathDecomposition([{0, 1}]))


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_normalise_preserves_validity_and_width(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    d = ordering_to_decomposition(g, order) if g.n else PathDecomposition([set()])
    nd = normalise(g, d) if g.n else d
    assert validate(g, nd).valid
    assert nd.width == d.width
    assert is_normalised(nd)


def test_forest_closure_decomposition():
    f = RootedForest((None, 0, 1, 0, None))
    d = forest_closure_decomposition(f)
    assert [sorted(b) for b in d.bags] == [[0], [0, 1], [0, 1, 2], [0, 3], [4]]
    assert d.width == f.height
    assert validate(f.closure(), d).valid


def test_json_round_trip():
    d = PathDecomposition([{2, 0}, {2, 1}])
    text = d.to_json(meta={"t": 3})
    assert '"width": 1' in text
    assert PathDecomposition.from_json(text) == d
    with pytest.raises(ValueError):
        PathDecomposition.from_dict({"bags": [[0, "x"]]})


def test_concatenate_and_add():
    a = PathDecomposition([{0}])
    b = PathDecomposition([{1}])
    assert concatenate(a, b).bags == (frozenset({0}), frozenset({1}))
    assert add_to_every_bag(a, {5}).bags == (frozenset({0, 5}),)
    g = cycle_graph(4)
    d = add_to_every_bag(PathDecomposition([{1, 2}, {2, 3}]), {0})
    assert validate(g, d).valid and d.width == 2


def test_relabel_and_canonical():
    d = PathDecomposition([{0}, set(), {1}])
    assert len(d.canonical()) == 2
    assert d.relabel([5, 6]).bags[2] == frozenset({6})


def test_empty_graph_validates_anything_empty():
    assert validate(Graph(0, []), PathDecomposition([set()])).valid
