from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from errors import EmptySetError, InvalidInputError, UnsupportedOracleError
from generators import DEFAULT_CATALOG, make_oracle, power_graph
from graph_core import VertexSet, ball
from graph_space import ball_isomorphic
from group_bridge import (
    CosetSet,
    bridge_report,
    coset_set,
    folner_star_ratio,
    h_G_estimate,
    measure,
    modular_ratio,
    orbit_connectivity_check,
    quasitransitive_reduce,
    right_translate_power,
    word_ball_check,
)
from isoperimetry import r_boundary_ratio
from utils import random_connected_set, random_vertex_set


def union_of_balls(oracle, X, r):
    covered = set()
    for x in X:
        covered.update(ball(oracle, x, r).vertices)
    return covered


def test_bridge_on_tree_ball(tree3):
    U = coset_set(tree3, ball(tree3, 'e', 3).vertices)
    report = bridge_report(U, 1)
    assert (report.measure_before, report.measure_after) == (22, 46)
    assert report.folner_star_ratio == Fraction(12, 11)
    assert report.root == 'e'


def test_bridge_zero_translation_is_identity(grid2):
    U = coset_set(grid2, ['(0,0)', '(3,3)'])
    assert right_translate_power(U, 0) == U
    assert bridge_report(U, 0).folner_star_ratio == 0


@pytest.mark.parametrize('spec', DEFAULT_CATALOG)
def test_translation_matches_union_of_balls(spec):
    oracle = make_oracle(spec)
    rng = np.random.default_rng(7)
    rep = oracle.orbit_representatives[0]
    for i in range(100):
        size = int(rng.integers(1, 9))
        if i % 2:
            X = random_vertex_set(oracle, rep, size, 3, rng)
        else:
            X = random_connected_set(oracle, rep, size, rng)
        r = int(rng.integers(1, 4))
        U = coset_set(oracle, X)
        translated = right_translate_power(U, r)
        assert translated.X.members == union_of_balls(oracle, X, r)
        assert folner_star_ratio(U, r) == r_boundary_ratio(oracle, U.X, r)


def test_translation_powers_compose(tree3):
    U = coset_set(tree3, ['e', '01'])
    twice = right_translate_power(right_translate_power(U, 1), 2)
    assert twice == right_translate_power(U, 3)


def test_coset_set_contract(grid2):
    with pytest.raises(EmptySetError):
        coset_set(grid2, [])
    with pytest.raises(InvalidInputError):
        coset_set(grid2, ['(0, 0)'])
    U = coset_set(grid2, ['(0,0)'])
    with pytest.raises(InvalidInputError):
        folner_star_ratio(U, 0)
    with pytest.raises(InvalidInputError):
        right_translate_power(U, -1)


def test_coset_set_resolves_its_graph_from_the_spec():
    U = CosetSet(graph='grid:d=2', root='(0,0)', X=VertexSet.of(['(0,0)']))
    assert measure(right_translate_power(U, 1)) == 5


@pytest.mark.parametrize('spec', ['grid:d=2', 'tree:d=3', 'lamplighter', 'bs:m=2'])
def test_word_balls_are_metric_balls(spec):
    oracle = make_oracle(spec)
    for n in range(4):
        result = word_ball_check(oracle, n)
        assert result.verified
        assert result.size == ball(oracle, oracle.identity, n).size


def test_word_balls_need_multiplication(grandfather):
    with pytest.raises(UnsupportedOracleError):
        word_ball_check(grandfather, 2)


@pytest.mark.parametrize('spec', ['grid:d=2', 'grid:d=3', 'tree:d=3', 'tree:d=4', 'lamplighter'])
def test_unimodular_examples_have_ratio_one(spec):
    oracle = make_oracle(spec)
    x = oracle.orbit_representatives[0]
    near = ball(oracle, x, 2)
    for y, d in zip(near.vertices, near.dist_from_root):
        for radius in range(max(d, 1), 4):
            estimate = modular_ratio(oracle, x, y, radius)
            assert estimate.m_xy == estimate.m_yx, (y, radius)


def test_grandfather_is_not_unimodular(grandfather):
    toward_child = modular_ratio(grandfather, '(0,0)', '(1,0)', 2)
    assert (toward_child.m_xy, toward_child.m_yx) == (2, 1)
    assert toward_child.ratio == 2
    assert modular_ratio(grandfather, '(0,0)', '(-1,0)', 2).ratio == Fraction(1, 2)


def test_modular_ratio_contract(grid2):
    with pytest.raises(InvalidInputError):
        modular_ratio(grid2, '(0,0)', '(3,0)', 2)
    with pytest.raises(InvalidInputError):
        modular_ratio(grid2, '(0,0)', '(1,0)', 0)


def test_reduce_subdivided_tree():
    result = quasitransitive_reduce(make_oracle('subdiv(tree:d=3)'), 0)
    rep = result.reduced.orbit_representatives[0]
    assert rep == 'oe'
    assert len(result.reduced.neighbors(rep)) == 9
    assert result.connected
    assert result.distortion_ok()
    # tree distance t becomes 2t, and reduced steps cover two tree edges
    assert all(d_red == -(-d_orig // 4) for d_orig, d_red in result.distortion_window)


def test_reduce_subdivided_line():
    result = quasitransitive_reduce(make_oracle('subdiv(grid:d=1)'), 0)
    assert len(result.reduced.neighbors('o(0)')) == 4
    assert result.reduced.neighbors('o(0)') == ('o(-1)', 'o(-2)', 'o(1)', 'o(2)')
    assert result.distortion_ok()


def test_reduce_transitive_graph_is_its_square(grid2):
    result = quasitransitive_reduce(grid2, 0, window=3)
    assert result.reduced.spec == 'reduce(grid:d=2,orbit=0)'
    assert ball_isomorphic(result.reduced, power_graph('grid:d=2', 2), 3).isomorphic


def test_reduce_rejects_bad_orbit():
    with pytest.raises(InvalidInputError):
        quasitransitive_reduce(make_oracle('subdiv(tree:d=3)'), 2)


def test_reduced_oracle_only_accepts_its_orbit():
    reduced = quasitransitive_reduce(make_oracle('subdiv(tree:d=3)'), 0, window=2).reduced
    with pytest.raises(InvalidInputError):
        reduced.validate('m["0","e"]')


def test_h_g_estimate(tree3, grid2):
    estimate = h_G_estimate([tree3, grid2], 4)
    assert estimate.value == Fraction(3, 2)
    assert estimate.argmin == 'tree:d=3'
    assert estimate.values == [('tree:d=3', Fraction(3, 2)), ('grid:d=2', Fraction(2))]


def test_h_g_estimate_contract(grid2):
    with pytest.raises(InvalidInputError):
        h_G_estimate([], 2)
    with pytest.raises(InvalidInputError):
        h_G_estimate([make_oracle('subdiv(tree:d=3)')], 2)


def test_orbit_connectivity():
    sub = orbit_connectivity_check(make_oracle('subdiv(tree:d=3)'), 4)
    assert [c.status for c in sub] == ['disconnected', 'disconnected']
    assert sub[0].witness is not None

    pair = orbit_connectivity_check(make_oracle('union(grid:d=2,grid:d=2)'), 3)
    assert [c.status for c in pair] == ['connected_evidence', 'connected_evidence']


def test_orbit_connectivity_needs_a_window(grid2):
    with pytest.raises(InvalidInputError):
        orbit_connectivity_check(grid2, 0)
