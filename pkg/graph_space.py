"""
Rooted-ball comparison and the 2^{-n} metric on transitive graphs

Two rooted balls are compared by joint color refinement (initial color
(is_root, distance), refined by the multiset of (edge kind, neighbor color))
followed by VF2 matching on the refined colors. When they differ, the
certificate names the first cheap invariant that separates them.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

import config
from errors import InvalidInputError
from graph_core import ball
from isoperimetry import iso_profile
from logger_config import setup_logger
from utils import random_walk_vertices

logger = setup_logger('GraphSpace')


class Verdict(Enum):
    ISOMORPHIC = 'isomorphic'
    NOT_ISOMORPHIC = 'not_isomorphic'


class Stability(Enum):
    VERIFIED = 'verified'
    INAPPLICABLE = 'inapplicable'
    VIOLATED = 'violated'


@dataclass(frozen=True)
class LocalInvariant:
    """A computable ball invariant that takes different values on the two balls"""
    name: str
    value1: object
    value2: object

    def to_dict(self):
        return {'name': self.name, 'value1': _jsonable(self.value1), 'value2': _jsonable(self.value2)}


def _jsonable(value):
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class BallCertificate:
    radius: int
    verdict: Verdict
    root1: str
    root2: str
    mapping: Optional[Dict[str, str]] = None
    invariant: Optional[LocalInvariant] = None

    @property
    def isomorphic(self):
        return self.verdict == Verdict.ISOMORPHIC


@dataclass(frozen=True)
class GraphDistance:
    distance: Fraction
    exact: bool
    first_difference_radius: Optional[int] = None
    invariant: Optional[LocalInvariant] = None


@dataclass
class StabilityResult:
    verdict: Stability
    n: int
    radius: int
    j1: Optional[Fraction] = None
    j2: Optional[Fraction] = None


@dataclass
class NestingResult:
    verdicts: List[Verdict]

    @property
    def monotone(self):
        seen_difference = False
        for verdict in self.verdicts:
            if verdict == Verdict.NOT_ISOMORPHIC:
                seen_difference = True
            elif seen_difference:
                return False
        return True


@dataclass
class TransitivityEvidence:
    spec: str
    radius: int
    samples: List[str]
    failures: List[str] = field(default_factory=list)

    @property
    def consistent(self):
        return not self.failures


# ============================================================================
# BALL GRAPHS & REFINEMENT
# ============================================================================

def ball_graph(oracle, root, n, cap=None):
    """
    B(root, n) as a networkx DiGraph with both edge directions

    Nodes are local ball indices with attributes enc, dist, is_root; edges
    carry the oracle's edge kind so oriented graphs keep their orientation.

    Returns:
        tuple: (FiniteBall, nx.DiGraph)
    """
    window = ball(oracle, root, n, cap=cap)
    G = nx.DiGraph()
    for i, (v, d) in enumerate(zip(window.vertices, window.dist_from_root)):
        G.add_node(i, enc=v, dist=d, is_root=(i == 0))
    for i, nbrs in enumerate(window.adjacency):
        for j in nbrs:
            G.add_edge(i, j, kind=oracle.edge_kind(window.vertices[i], window.vertices[j]))
    return window, G


def _initial_colors(G):
    return {v: (int(data['is_root']), data['dist']) for v, data in G.nodes(data=True)}


def refine_jointly(graphs, initial):
    """
    Iterate colors to a common stable partition across several graphs

    Colors are relabelled against one shared palette every round, so equal
    integers mean equal refinement histories in any of the graphs.

    Args:
        graphs: List of nx.DiGraph with a 'kind' edge attribute
        initial: List of {node: sortable color}, one per graph

    Returns:
        list: {node: int color} per graph
    """
    palette = sorted({c for colors in initial for c in colors.values()})
    index = {c: i for i, c in enumerate(palette)}
    colors = [{v: index[c] for v, c in col.items()} for col in initial]
    classes = len(palette)

    while True:
        signatures = []
        for G, col in zip(graphs, colors):
            signatures.append({
                v: (col[v], tuple(sorted((G.edges[v, u]['kind'], col[u]) for u in G.successors(v))))
                for v in G.nodes
            })
        palette = sorted({s for sig in signatures for s in sig.values()})
        index = {s: i for i, s in enumerate(palette)}
        colors = [{v: index[s] for v, s in sig.items()} for sig in signatures]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def _color_histogram(colors):
    return tuple(sorted(Counter(colors.values()).items()))


def four_cycle_count(window):
    """Number of 4-cycles in the ball: Σ over unordered pairs of C(common neighbors, 2), halved"""
    total = 0
    for u in range(window.size):
        common = Counter()
        for v in window.adjacency[u]:
            for w in window.adjacency[v]:
                if w > u:
                    common[w] += 1
        total += sum(c * (c - 1) // 2 for c in common.values())
    return total // 2


def _shell_sizes(window):
    return tuple(len(window.shell(d)) for d in range(window.radius + 1))


def _shell_degrees(window):
    shells = [[] for _ in range(window.radius + 1)]
    for d, nbrs in zip(window.dist_from_root, window.adjacency):
        shells[d].append(len(nbrs))
    return tuple(tuple(sorted(s)) for s in shells)


INVARIANTS = (
    ('root_degree', lambda w, G: len(w.adjacency[0])),
    ('four_cycles', lambda w, G: four_cycle_count(w)),
    ('shell_sizes', lambda w, G: _shell_sizes(w)),
    ('shell_degrees', lambda w, G: _shell_degrees(w)),
)


def _matcher(G1, G2, colors1, colors2):
    for v, c in colors1.items():
        G1.nodes[v]['color'] = c
    for v, c in colors2.items():
        G2.nodes[v]['color'] = c
    return DiGraphMatcher(
        G1, G2,
        node_match=lambda a, b: a['color'] == b['color'],
        edge_match=lambda a, b: a['kind'] == b['kind'],
    )


# ============================================================================
# BALL ISOMORPHISM
# ============================================================================

def _root_of(oracle, root):
    if root is not None:
        return root
    if not oracle.is_transitive:
        raise InvalidInputError(f"{oracle.describe()} is not transitive; pass an explicit root")
    return oracle.orbit_representatives[0]


def ball_isomorphic(g1, g2, n, root1=None, root2=None, cap=None) -> BallCertificate:
    """
    Decide root-preserving isomorphism of B(root1, n) in g1 and B(root2, n) in g2

    Args:
        g1, g2: GraphOracles (roots default to the representative of a transitive oracle)
        n: Radius (>= 0)

    Returns:
        BallCertificate with a vertex bijection or a distinguishing invariant
    """
    if n < 0:
        raise InvalidInputError(f"radius must be non-negative, got {n}")
    root1, root2 = _root_of(g1, root1), _root_of(g2, root2)
    w1, G1 = ball_graph(g1, root1, n, cap)
    w2, G2 = ball_graph(g2, root2, n, cap)

    def differ(name, a, b):
        logger.debug(f"Balls of radius {n} differ on {name}: {a} vs {b}")
        return BallCertificate(n, Verdict.NOT_ISOMORPHIC, root1, root2,
                               invariant=LocalInvariant(name, a, b))

    for name, compute in INVARIANTS:
        a, b = compute(w1, G1), compute(w2, G2)
        if a != b:
            return differ(name, a, b)

    colors1, colors2 = refine_jointly([G1, G2], [_initial_colors(G1), _initial_colors(G2)])
    hist1, hist2 = _color_histogram(colors1), _color_histogram(colors2)
    if hist1 != hist2:
        return differ('refinement_signature', hist1, hist2)

    matcher = _matcher(G1, G2, colors1, colors2)
    if not matcher.is_isomorphic():
        return differ('exhaustive_search', True, False)

    mapping = {w1.vertices[i]: w2.vertices[j] for i, j in matcher.mapping.items()}
    return BallCertificate(n, Verdict.ISOMORPHIC, root1, root2, mapping=mapping)


def verify_certificate(g1, g2, cert: BallCertificate, cap=None) -> bool:
    """Re-check a certificate from scratch against both oracles"""
    w1, G1 = ball_graph(g1, cert.root1, cert.radius, cap)
    w2, G2 = ball_graph(g2, cert.root2, cert.radius, cap)

    if cert.isomorphic:
        mapping = cert.mapping or {}
        if set(mapping) != set(w1.vertices) or set(mapping.values()) != set(w2.vertices):
            return False
        if mapping.get(cert.root1) != cert.root2:
            return False
        for v, image in mapping.items():
            i, j = w1.index[v], w2.index[image]
            if w1.dist_from_root[i] != w2.dist_from_root[j]:
                return False
            mapped = {w2.index[mapping[w1.vertices[k]]] for k in w1.adjacency[i]}
            if mapped != set(w2.adjacency[j]):
                return False
            for k in w1.adjacency[i]:
                if G1.edges[i, k]['kind'] != G2.edges[j, w2.index[mapping[w1.vertices[k]]]]['kind']:
                    return False
        return True

    name = cert.invariant.name
    for inv_name, compute in INVARIANTS:
        if inv_name == name:
            return compute(w1, G1) != compute(w2, G2)
    colors1, colors2 = refine_jointly([G1, G2], [_initial_colors(G1), _initial_colors(G2)])
    if name == 'refinement_signature':
        return _color_histogram(colors1) != _color_histogram(colors2)
    return not _matcher(G1, G2, colors1, colors2).is_isomorphic()


def stabilizer_orbit(oracle, x, y, radius, cap=None):
    """
    Images of y under automorphisms of the induced ball B(x, radius) that fix x

    Automorphisms must preserve edge kinds. Each candidate w with y's stable
    color is tested by individualizing y and w and matching the two copies.

    Returns:
        list: sorted encodings in the orbit of y
    """
    window, G = ball_graph(oracle, x, radius, cap)
    if y not in window.index:
        raise InvalidInputError(f"{y} lies outside B({x}, {radius})")
    target = window.index[y]
    base = refine_jointly([G], [_initial_colors(G)])[0]

    orbit = []
    for cand in sorted(v for v, c in base.items() if c == base[target]):
        if cand == target:
            orbit.append(window.vertices[cand])
            continue
        marked1 = {v: (0 if v == target else 1, c) for v, c in base.items()}
        marked2 = {v: (0 if v == cand else 1, c) for v, c in base.items()}
        H = G.copy()
        colors1, colors2 = refine_jointly([G, H], [marked1, marked2])
        if _color_histogram(colors1) != _color_histogram(colors2):
            continue
        if _matcher(G, H, colors1, colors2).is_isomorphic():
            orbit.append(window.vertices[cand])
    return sorted(orbit)


# ============================================================================
# METRIC
# ============================================================================

def graph_distance(g1, g2, n_max, cap=None) -> GraphDistance:
    """
    2^{-n} distance from rooted-ball comparisons up to radius n_max

    If the balls first differ at radius m the distance is exactly 2^{-(m-1)};
    if they agree through n_max only the upper bound 2^{-n_max} is known.
    """
    if n_max < 1:
        raise InvalidInputError(f"n_max must be at least 1, got {n_max}")
    for m in range(1, n_max + 1):
        cert = ball_isomorphic(g1, g2, m, cap=cap)
        if not cert.isomorphic:
            logger.info(f"📏 {g1.describe()} vs {g2.describe()}: first difference at radius {m}")
            return GraphDistance(Fraction(1, 2 ** (m - 1)), True, m, cert.invariant)
    return GraphDistance(Fraction(1, 2 ** n_max), False)


def distance_matrix(oracles, n_max, cap=None):
    """Pairwise graph_distance; the diagonal is the horizon bound 2^{-n_max}"""
    size = len(oracles)
    matrix = [[None] * size for _ in range(size)]
    for i in range(size):
        matrix[i][i] = GraphDistance(Fraction(1, 2 ** n_max), False)
    for i, j in combinations(range(size), 2):
        matrix[i][j] = matrix[j][i] = graph_distance(oracles[i], oracles[j], n_max, cap=cap)
    return matrix


def nesting_check(g1, g2, n_max, cap=None) -> NestingResult:
    """Ball verdicts at every radius 0..n_max; isomorphism must be downward closed"""
    verdicts = [ball_isomorphic(g1, g2, r, cap=cap).verdict for r in range(n_max + 1)]
    result = NestingResult(verdicts)
    if not result.monotone:
        logger.error(f"❌ Non-monotone ball verdicts for {g1.describe()} vs {g2.describe()}: "
                     f"{[v.value for v in verdicts]}")
    return result


def profile_stability_check(g1, g2, n, cap=None, prune=None, jobs=None) -> StabilityResult:
    """
    j(n) must agree whenever the radius-(2n+1) balls are isomorphic

    Returns:
        StabilityResult: inapplicable if the balls differ, else verified or violated
    """
    if n < 1:
        raise InvalidInputError(f"n must be at least 1, got {n}")
    radius = 2 * n + 1
    cert = ball_isomorphic(g1, g2, radius, cap=cap)
    if not cert.isomorphic:
        return StabilityResult(Stability.INAPPLICABLE, n, radius)

    j1 = iso_profile(g1, n, prune=prune, jobs=jobs, cap=cap).j(n)
    j2 = iso_profile(g2, n, prune=prune, jobs=jobs, cap=cap).j(n)
    if j1 != j2:
        logger.error(f"❌ Stability violated: j({n}) = {j1} in {g1.describe()} but {j2} in {g2.describe()}")
        return StabilityResult(Stability.VIOLATED, n, radius, j1, j2)
    return StabilityResult(Stability.VERIFIED, n, radius, j1, j2)


def transitivity_evidence(oracle, radius=None, samples=None, seed=None, cap=None) -> TransitivityEvidence:
    """
    Compare B(v, radius) with B(rep, radius) for seeded random-walk vertices v

    Agreement is evidence only; a mismatch proves the oracle is not transitive
    on its declared orbits.
    """
    radius = config.TRANSITIVITY_RADIUS if radius is None else radius
    samples = config.TRANSITIVITY_SAMPLES if samples is None else samples
    seed = config.DEFAULT_SEED if seed is None else seed

    reps = oracle.orbit_representatives
    start = reps[0]
    vertices = random_walk_vertices(oracle, start, samples, steps=2 * radius + 1, seed=seed)
    evidence = TransitivityEvidence(spec=oracle.describe(), radius=radius, samples=vertices)
    for v in vertices:
        rep = reps[oracle.orbit_label(v)]
        cert = ball_isomorphic(oracle, oracle, radius, root1=rep, root2=v, cap=cap)
        if not cert.isomorphic:
            evidence.failures.append(v)
    if evidence.failures:
        logger.warning(f"⚠️ {oracle.describe()}: {len(evidence.failures)} sampled balls differ from their orbit's")
    return evidence
