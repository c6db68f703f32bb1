import pytest

import quasitree as qt


def test_graph_basics():
    g = qt.Graph(3, [(0, 1), (1, 2)])
    assert (g.n, g.m) == (3, 2)
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.neighbours(1) == [0, 2]
    assert qt.Graph.from_text(g.to_text()) == g
    assert qt.generate("path", n=3) == g


def test_bad_graphs_raise():
    with pytest.raises(qt.QuasitreeError):
        qt.Graph(2, [(0, 0)])
    with pytest.raises(qt.QuasitreeError):
        qt.generate("petersen")


def test_treedec():
    g = qt.generate("grid", n=3)
    d = qt.heuristic_treedec(g)
    assert qt.validate_treedec(g, d)["valid"]
    assert d.width >= qt.treewidth_exact(g) == 3
    assert qt.TreeDecomposition.from_json(d.to_json()).bags == d.bags


def test_kst_free_build():
    g = qt.generate("partial-ktree", n=40, k=2, seed=1)
    d = qt.heuristic_treedec(g)
    k = d.width + 1
    q = qt.build_kst_free(g, d, s=1, t=g.n, rho=0, k=k, root_set=[0, 5])
    report = qt.validate_qtp(g, q)
    assert report["valid"] and report["clean"]
    assert report["quasiness"] == 0
    assert 0 in q.bags[q.root] and 5 in q.bags[q.root]
    assert qt.weight(g, q) <= 12 * k - 1
    assert qt.validate_treedec(g, qt.to_treedec(g, q))["valid"]
    assert qt.QuasiTreePartition.from_json(q.to_json()) == q


def test_precondition_violation_carries_a_set():
    g = qt.generate("kst-star", s=2, t=6)
    d = qt.heuristic_treedec(g)
    assert qt.find_kst_star(g, 2, 6) is not None
    # The builder may or may not trip over the pattern; when it does, it says where.
    try:
        qt.build_kst_free(g, d, s=2, t=1, rho=d.width, k=d.width + 1)
    except qt.PreconditionViolation as e:
        assert isinstance(e.args[1], list) and e.args[1]


def test_excluded_build_and_refusal():
    tree = qt.generate("tree", n=60, seed=3)
    q = qt.build_excluded(tree, qt.heuristic_treedec(tree), s=1, a=3, b=3, rho=0, k=2, clean=False)
    assert qt.validate_qtp(tree, q, s_heavy=2)["quasiness"] == 0

    # The apex and the long path form a skewered star.
    fan = qt.generate("fan", n=200)
    with pytest.raises(qt.PatternPresent) as info:
        qt.build_excluded(fan, qt.heuristic_treedec(fan), s=1, a=2, b=2, rho=0, k=3)
    assert info.value.args[1]["kind"]


def test_detectors():
    assert qt.c_bound(2, 3, 2) == 7
    w = qt.find_kst(qt.generate("kst", s=2, t=3), 2, 3)
    assert w["x"] == [0, 1]
    assert qt.find_kst(qt.generate("cycle", n=6), 2, 2) is None
    sk = qt.extension_or_skewer(qt.generate("skewered", s=2, b=3), [0, 1], 2, 3)
    assert sk["kind"] == "skewered"
    assert qt.rho(qt.generate("cycle", n=6), max_branch=3)["value"] == 2


def test_colourings():
    g = qt.generate("grid", n=4)
    q = qt.build_degeneracy(g)
    r = qt.validate_qtp(g, q)["quasiness"]
    lists = [list(range(r + 2))] * g.n
    f = qt.colour_fractional(g, q, lists, ell=1)
    report = qt.validate_colouring(g, f, lists)
    assert report["list_ok"]
    assert report["set_size"] == 1
    with pytest.raises(qt.QuasitreeError):
        qt.colour_fractional(g, q, [[0]] * g.n)
