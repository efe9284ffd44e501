from __future__ import annotations

import pytest

from errors import InvalidInputError, ResourceError, StructuralError
from generators import DEFAULT_CATALOG, make_oracle
from graph_core import (
    GraphOracle,
    VertexSet,
    audit_oracle,
    ball,
    edge_boundary,
    exterior_boundary,
    graph_distance_between,
    is_two_connected,
    r_neighborhood,
)


class ForwardOnlyLine(GraphOracle):
    """Broken oracle: n -> n+1 without the reverse edge"""

    def parse(self, v):
        return int(v)

    def format(self, coords):
        return str(coords)

    def _raw_neighbors(self, v):
        return [str(int(v) + 1)]

    @property
    def orbit_representatives(self):
        return ('0',)


BLOCK = ['(0,0)', '(0,1)', '(1,0)', '(1,1)']


def test_ball_radius_zero_is_single_vertex(grid2):
    b = ball(grid2, '(0,0)', 0)
    assert b.vertices == ('(0,0)',)
    assert b.num_edges == 0
    assert b.dist_from_root == (0,)


def test_ball_radius_one_is_star(grid2):
    b = ball(grid2, '(0,0)', 1)
    assert b.size == 5
    assert b.num_edges == 4
    assert b.shell(1) == ['(-1,0)', '(0,-1)', '(0,1)', '(1,0)']


def test_tree_ball_counts(tree3):
    b = ball(tree3, 'e', 2)
    assert b.size == 10
    assert b.num_edges == 9
    assert [len(b.shell(d)) for d in range(3)] == [1, 3, 6]


def test_ball_serializes_with_local_indices(grid2):
    data = ball(grid2, '(0,0)', 1).to_dict()
    assert data['root'] == '(0,0)'
    assert data['radius'] == 1
    assert data['vertices'][0] == '(0,0)'
    assert sorted(data['edges']) == [[0, 1], [0, 2], [0, 3], [0, 4]]
    assert data['dist'] == [0, 1, 1, 1, 1]


def test_ball_rejects_noncanonical_root(grid2):
    with pytest.raises(InvalidInputError):
        ball(grid2, '(0, 0)', 1)


def test_ball_respects_vertex_cap(grid2):
    with pytest.raises(ResourceError) as excinfo:
        ball(grid2, '(0,0)', 5, cap=20)
    assert excinfo.value.exit_code == 5


def test_ball_detects_asymmetric_oracle():
    with pytest.raises(StructuralError):
        ball(ForwardOnlyLine(), '0', 1)


def test_audit_collects_findings_when_not_strict():
    report = audit_oracle(ForwardOnlyLine(), radius=2, strict=False)
    assert not report.ok
    assert any('asymmetric' in finding for finding in report.findings)


@pytest.mark.parametrize('spec', DEFAULT_CATALOG)
def test_catalog_passes_audit(spec):
    report = audit_oracle(make_oracle(spec))
    assert report.ok
    assert report.vertices_checked > 1


def test_exterior_boundary_cases(grid2):
    assert exterior_boundary(grid2, VertexSet.of([])).size == 0
    singleton = exterior_boundary(grid2, VertexSet.of(['(0,0)']))
    assert singleton.sorted_members() == ['(-1,0)', '(0,-1)', '(0,1)', '(1,0)']
    assert exterior_boundary(grid2, VertexSet.of(BLOCK)).size == 8


def test_cached_boundary_matches_recomputation(grid2):
    A = VertexSet.of(BLOCK).with_boundary(grid2)
    assert A.cached_boundary == exterior_boundary(grid2, A).members
    assert A == VertexSet.of(BLOCK)


def test_r_neighborhood_sizes(grid2):
    X = VertexSet.of(['(0,0)'])
    closed, boundary = r_neighborhood(grid2, X, 0)
    assert closed == X and boundary.size == 0
    assert r_neighborhood(grid2, X, 1)[0].size == 5
    closed, boundary = r_neighborhood(grid2, X, 2)
    assert closed.size == 13
    assert boundary.size == 12


def test_r_neighborhood_nests(tree3):
    X = VertexSet.of(['e', '01'])
    for r in range(3):
        for s in range(3):
            inner, _ = r_neighborhood(tree3, X, r)
            assert r_neighborhood(tree3, inner, s)[0] == r_neighborhood(tree3, X, r + s)[0]
            assert inner.members <= r_neighborhood(tree3, X, r + 1)[0].members


def test_ball_matches_neighborhood_of_root(lamplighter):
    for r in range(4):
        closed, _ = r_neighborhood(lamplighter, VertexSet.of(['[]@0']), r)
        assert set(ball(lamplighter, '[]@0', r).vertices) == closed.members


def test_edge_boundary(grid2, tree3):
    assert edge_boundary(grid2, VertexSet.of(['(0,0)'])) == 4
    assert edge_boundary(grid2, VertexSet.of(BLOCK)) == 8
    assert edge_boundary(tree3, VertexSet.of(['e', '1'])) == 4


@pytest.mark.parametrize('members', [BLOCK, ['(0,0)', '(2,0)', '(2,1)'], ['(0,0)', '(1,1)', '(3,0)']])
def test_boundary_sandwich(grid2, members):
    A = VertexSet.of(members)
    vertex = exterior_boundary(grid2, A).size
    assert vertex <= edge_boundary(grid2, A) <= grid2.degree_bound * vertex


def test_far_apart_parts_have_disjoint_boundaries(grid2):
    A1 = VertexSet.of(BLOCK)
    A2 = VertexSet.of(['(5,0)', '(6,0)'])
    union = VertexSet(A1.members | A2.members)
    b1, b2 = exterior_boundary(grid2, A1).members, exterior_boundary(grid2, A2).members
    assert not b1 & b2
    assert exterior_boundary(grid2, union).members == b1 | b2


def test_graph_distance_between(grid2, tree3):
    assert graph_distance_between(grid2, '(0,0)', '(0,0)', 5) == 0
    assert graph_distance_between(grid2, '(0,0)', '(2,3)', 10) == 5
    assert graph_distance_between(grid2, '(0,0)', '(2,3)', 4) is None
    assert graph_distance_between(tree3, 'e', '01', 10) == 2


def test_distance_across_components_exceeds_cap():
    union = make_oracle('union(tree:d=3,grid:d=2)')
    assert graph_distance_between(union, '0|e', '1|(0,0)', 6) is None


def test_two_connectivity(grid2):
    assert is_two_connected(grid2, VertexSet.of(['(0,0)', '(1,1)', '(3,1)']))
    assert not is_two_connected(grid2, VertexSet.of(['(0,0)', '(3,0)']))
    assert is_two_connected(grid2, VertexSet.of(['(0,0)', '(2,0)']))
