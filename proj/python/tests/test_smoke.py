import math

import numpy as np
import pytest

import netgame
from netgame import generators as gen


def test_graph_loading():
    g = netgame.load_edge_list("0 1\n1 0\n0 1\n3 3\n3 4\n")
    assert g.node_count == 4
    assert g.edge_count == 2
    assert g.label(2) == "3"
    assert g.neighbors(0) == [1]
    with pytest.raises(netgame.ParseError):
        netgame.load_edge_list("0 1\nlonely\n")


def test_census_and_moments():
    c = netgame.census(gen.petersen())
    assert (c.quadrangles, c.pentagons) == (0, 12)
    assert c.pentagons_per_node == [6] * 10
    m = netgame.moments(gen.complete(3))
    assert m.m == pytest.approx([1, 0, 2, 2, 6, 10])
    assert list(m.walks) == netgame.closed_walk_counts(gen.complete(3))[:1] + [0, 6, 6, 18, 30]


def test_walks_match_matrix_powers():
    g = gen.erdos_renyi(12, 0.4, 3)
    a = g.adjacency_matrix()
    walks = netgame.closed_walk_counts(g)
    for k in range(1, 6):
        assert walks[k] == round(np.trace(np.linalg.matrix_power(a, k)))


def test_bounds():
    m = netgame.moments(gen.cycle(5))
    b = netgame.bounds(m, 2)
    assert b.alpha == pytest.approx(2 * math.cos(4 * math.pi / 5), abs=1e-9)
    assert b.beta == pytest.approx(2.0, abs=1e-9)
    bis = netgame.bounds(m, 2, "bisect")
    assert abs(bis.alpha - b.alpha) < 1e-6
    assert bis.method == "psd-bisection"
    k5 = netgame.bounds(netgame.moments(gen.complete(5)), 2)
    assert k5.degenerate and (k5.alpha, k5.beta) == pytest.approx((-1, 4))
    even, odd = netgame.hankel_matrices(netgame.moments(gen.complete(3)), 1)
    np.testing.assert_allclose(even, [[1, 0], [0, 2]])
    np.testing.assert_allclose(odd, [[0, 2], [2, 2]])


def test_sandwich_against_numpy():
    g = gen.social_mix(300, 2)
    ev = np.linalg.eigvalsh(g.adjacency_matrix())
    lo, hi = netgame.extreme_eigenvalues(g)
    assert (lo, hi) == pytest.approx((ev[0], ev[-1]))
    m = netgame.moments(g)
    b1, b2 = netgame.bounds(m, 1), netgame.bounds(m, 2)
    assert lo - 1e-6 <= b2.alpha <= b1.alpha + 1e-9
    assert b1.beta - 1e-9 <= b2.beta <= hi + 1e-6


def test_equilibria():
    dyad = gen.path(2)
    eqs = netgame.enumerate_equilibria(dyad, 1.5)
    assert len(eqs) == 3
    assert [e["stable"] for e in eqs] == [True, True, False]
    assert eqs[2]["x"] == pytest.approx([0.4, 0.4])
    assert netgame.interior_equilibrium(dyad, 0.5) == pytest.approx([2 / 3, 2 / 3])
    assert netgame.uniqueness_certificate(dyad, 0.9)["status"] == "UniqueByLambdaMin"
    with pytest.raises(ValueError):
        netgame.interior_equilibrium(dyad, 1.5)
    d = netgame.best_response_dynamics(dyad, 0.5, [0.0, 0.0])
    assert d["converged"] and d["limit"] == pytest.approx([2 / 3, 2 / 3], abs=1e-7)


def test_experiment_csv_is_deterministic():
    g = gen.social_mix(1000, 4)
    a = netgame.experiment_csv(g, 10, 2, 5)
    b = netgame.experiment_csv(g, 10, 2, 5, threads=2)
    assert a == b
    assert a.count("\n") == 11
