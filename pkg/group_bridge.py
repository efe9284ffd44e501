"""
Group <-> graph dictionary for groups acting properly and transitively on a graph

A compact open set G_{o->X} = {g : g·o ∈ X} is represented by the finite vertex
set X. With the Haar measure normalized by μ(G_o) = 1:

    μ(G_{o->X}) = |X|
    G_{o->X} S^r = G_{o->[X]_r}   where S = {g : d(g·o, o) <= 1}

so right-Følner ratios μ(US^r \\ U)/μ(U) become vertex boundary ratios
|∂_r X|/|X|. Only right translation is modeled: left products SU do not
localize on the orbit, so left-Følner quantities have no counterpart here.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import config
from errors import EmptySetError, InvalidInputError, UnsupportedOracleError
from generators import oracle_for
from graph_core import CayleyOracle, GraphOracle, VertexSet, ball, graph_distance_between, r_neighborhood
from graph_space import stabilizer_orbit
from isoperimetry import iso_profile
from logger_config import setup_logger

logger = setup_logger('GroupBridge')


# ============================================================================
# COSET-MEASURE CALCULUS
# ============================================================================

@dataclass(frozen=True)
class CosetSet:
    """G_{o->X} for the basepoint o = root; measure normalized by μ(G_o) = 1"""
    graph: str
    root: str
    X: VertexSet
    oracle: Optional[GraphOracle] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.X.members:
            raise EmptySetError("a coset set needs a non-empty vertex set X")

    @property
    def resolved_oracle(self):
        return self.oracle if self.oracle is not None else oracle_for(self.graph)


@dataclass(frozen=True)
class BridgeReport:
    graph: str
    root: str
    X: List[str]
    r: int
    measure_before: int
    measure_after: int
    folner_star_ratio: Fraction


def coset_set(oracle, X, root=None) -> CosetSet:
    """Build G_{o->X} on an oracle; o defaults to the first orbit representative"""
    root = oracle.orbit_representatives[0] if root is None else root
    oracle.validate(root)
    members = VertexSet.of(oracle.validate(v) for v in X)
    return CosetSet(graph=oracle.describe(), root=root, X=members, oracle=oracle)


def measure(U: CosetSet) -> int:
    return len(U.X)


def right_translate_power(U: CosetSet, r, cap=None) -> CosetSet:
    """U·S^r, i.e. G_{o->[X]_r}"""
    if r < 0:
        raise InvalidInputError(f"r must be non-negative, got {r}")
    closed, _ = r_neighborhood(U.resolved_oracle, U.X, r, cap=cap)
    return CosetSet(graph=U.graph, root=U.root, X=closed, oracle=U.oracle)


def folner_star_ratio(U: CosetSet, r, cap=None) -> Fraction:
    """μ(US^r \\ U)/μ(U) = (|[X]_r| - |X|)/|X|"""
    if r < 1:
        raise InvalidInputError(f"r must be at least 1, got {r}")
    after = measure(right_translate_power(U, r, cap=cap))
    return Fraction(after - measure(U), measure(U))


def bridge_report(U: CosetSet, r, cap=None) -> BridgeReport:
    """Measures before and after right translation by S^r; r = 0 gives ratio 0"""
    translated = right_translate_power(U, r, cap=cap)
    before, after = measure(U), measure(translated)
    return BridgeReport(
        graph=U.graph,
        root=U.root,
        X=U.X.sorted_members(),
        r=r,
        measure_before=before,
        measure_after=after,
        folner_star_ratio=Fraction(after - before, before),
    )


# ============================================================================
# WORD BALLS
# ============================================================================

@dataclass
class WordBallResult:
    n: int
    verified: bool
    size: int
    counterexample: Optional[str] = None


def word_ball_check(oracle, n, cap=None) -> WordBallResult:
    """
    Check {g : d(g·o, o) <= n} = S^n with S = B(e, 1), products taken with the group law

    Raises:
        UnsupportedOracleError: the oracle exposes no multiplication
    """
    if not isinstance(oracle, CayleyOracle):
        raise UnsupportedOracleError(f"{oracle.describe()} is not a Cayley oracle")
    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}")

    metric_ball = set(ball(oracle, oracle.identity, n, cap=cap).vertices)
    S = ball(oracle, oracle.identity, 1, cap=cap).vertices
    words = {oracle.identity}
    for _ in range(n):
        words = {oracle.multiply(g, s) for g in words for s in S}

    difference = sorted(words ^ metric_ball)
    if difference:
        logger.error(f"❌ Word ball S^{n} differs from B(e, {n}) in {oracle.describe()} at {difference[0]}")
        return WordBallResult(n, False, len(metric_ball), difference[0])
    return WordBallResult(n, True, len(metric_ball))


# ============================================================================
# MODULAR DIAGNOSTICS
# ============================================================================

@dataclass(frozen=True)
class ModularEstimate:
    x: str
    y: str
    radius: int
    m_xy: int
    m_yx: int

    @property
    def ratio(self):
        return Fraction(self.m_xy, self.m_yx)


def modular_ratio(oracle, x, y, radius, cap=None) -> ModularEstimate:
    """
    Stabilizer-orbit sizes m_xy = |Aut(B(x, radius))_x · y| and m_yx, at one radius

    A ratio other than 1 is evidence that the local automorphism groups are
    not unimodular; ratio 1 is consistency evidence only.
    """
    if radius < 1:
        raise InvalidInputError(f"radius must be at least 1, got {radius}")
    if graph_distance_between(oracle, x, y, max(radius, 1)) is None:
        raise InvalidInputError(f"d({x}, {y}) exceeds the radius {radius}")
    m_xy = len(stabilizer_orbit(oracle, x, y, radius, cap=cap))
    m_yx = len(stabilizer_orbit(oracle, y, x, radius, cap=cap))
    estimate = ModularEstimate(x, y, radius, m_xy, m_yx)
    logger.debug(f"Modular ratio {x} -> {y} at radius {radius}: {m_xy}/{m_yx}")
    return estimate


# ============================================================================
# QUASITRANSITIVE REDUCTION
# ============================================================================

class OrbitReductionOracle(GraphOracle):
    """One orbit of a quasitransitive graph, u ~ v iff 1 <= d(u, v) <= 2 * num_orbits"""

    def __init__(self, base, orbit_index):
        self.base = base
        self.orbit_index = orbit_index
        self.reach = 2 * base.num_orbits
        bound = None
        if base.degree_bound is not None:
            D = base.degree_bound
            bound = sum(D * max(D - 1, 1) ** (i - 1) for i in range(1, self.reach + 1))
        super().__init__(num_orbits=1, degree_bound=bound)
        self.spec = f"reduce({base.describe()},orbit={orbit_index})"

    def parse(self, v):
        self.base.validate(v)
        if self.base.orbit_label(v) != self.orbit_index:
            raise ValueError(f"vertex is not in orbit {self.orbit_index}")
        return v

    def format(self, coords):
        return coords

    def _raw_neighbors(self, v):
        seen = {v}
        frontier = [v]
        found = []
        for _ in range(self.reach):
            nxt = []
            for x in frontier:
                for w in self.base.neighbors(x):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
                        if self.base.orbit_label(w) == self.orbit_index:
                            found.append(w)
            frontier = nxt
        return found

    @property
    def orbit_representatives(self):
        return (self.base.orbit_representatives[self.orbit_index],)


@dataclass
class ReductionResult:
    reduced: OrbitReductionOracle
    orbit_index: int
    n_orbits: int
    distortion_window: List[Tuple[int, int]]
    connected: bool

    def distortion_ok(self, factor=None, offset=None):
        """d_reduced <= d_original <= factor·d_reduced + offset on every sample"""
        factor = 2 * self.n_orbits if factor is None else factor
        offset = 2 * self.n_orbits if offset is None else offset
        return all(d_red <= d_orig <= factor * d_red + offset for d_orig, d_red in self.distortion_window)


def _bfs_distances(oracle, source, targets, max_depth):
    """BFS from source, stopping once every target has a distance"""
    dist = {source: 0}
    pending = set(targets) - {source}
    queue = deque([source])
    while queue and pending:
        v = queue.popleft()
        if dist[v] == max_depth:
            continue
        for w in oracle.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                pending.discard(w)
                queue.append(w)
    return {t: dist.get(t) for t in targets}


def quasitransitive_reduce(oracle, orbit_index, window=None, cap=None) -> ReductionResult:
    """
    Transitive graph on one orbit with edges for original distances in [1, 2·num_orbits]

    Distortion samples (d_original, d_reduced) are taken for every orbit vertex
    of B(rep, window) in the original graph.
    """
    if not 0 <= orbit_index < oracle.num_orbits:
        raise InvalidInputError(
            f"orbit index {orbit_index} outside [0, {oracle.num_orbits}) for {oracle.describe()}"
        )
    window = config.DISTORTION_WINDOW if window is None else window
    reduced = OrbitReductionOracle(oracle, orbit_index)
    rep = reduced.orbit_representatives[0]

    around = ball(oracle, rep, window, cap=cap)
    orbit_vertices = [v for v in around.vertices if oracle.orbit_label(v) == orbit_index]
    reduced_dist = _bfs_distances(reduced, rep, orbit_vertices, max_depth=window)

    samples = []
    connected = True
    for v in orbit_vertices:
        d_red = reduced_dist[v]
        if d_red is None:
            connected = False
            continue
        samples.append((around.dist_from_root[around.index[v]], d_red))

    logger.info(f"Reduced {oracle.describe()} to orbit {orbit_index}: degree {len(reduced.neighbors(rep))}, "
                f"{len(samples)} distortion samples, connected={connected}")
    return ReductionResult(reduced, orbit_index, oracle.num_orbits, samples, connected)


# ============================================================================
# ESTIMATORS
# ============================================================================

@dataclass
class HGEstimate:
    value: Fraction
    argmin: str
    values: List[Tuple[str, Fraction]]


def h_G_estimate(oracles, n, prune=None, jobs=None, cap=None) -> HGEstimate:
    """
    min_Γ j_Γ(n) over a caller-supplied sample of graphs with proper transitive G-actions

    Membership of each graph in that class is the caller's assertion. Ties keep
    the first graph in input order.
    """
    if not oracles:
        raise InvalidInputError("h_G estimate needs at least one graph")
    values = []
    for oracle in oracles:
        if not oracle.is_transitive:
            raise InvalidInputError(f"{oracle.describe()} is not transitive")
        values.append((oracle.describe(), iso_profile(oracle, n, prune=prune, jobs=jobs, cap=cap).j(n)))
    spec, value = min(values, key=lambda item: item[1])
    logger.info(f"h_G estimate at n={n}: {value} from {spec}")
    return HGEstimate(value=value, argmin=spec, values=values)


@dataclass(frozen=True)
class OrbitConnectivity:
    orbit: int
    connected_evidence: bool
    witness: Optional[str] = None

    @property
    def status(self):
        return 'connected_evidence' if self.connected_evidence else 'disconnected'


def orbit_connectivity_check(oracle, window, cap=None) -> List[OrbitConnectivity]:
    """
    Per orbit: is every orbit vertex of B(rep, window) reachable from rep inside
    the subgraph induced by the orbit on B(rep, window + 2)?

    A disconnected verdict is decisive; connected evidence is window-limited.
    """
    if window < 1:
        raise InvalidInputError(f"window must be at least 1, got {window}")
    results = []
    for orbit, rep in enumerate(oracle.orbit_representatives):
        outer = ball(oracle, rep, window + 2, cap=cap)
        allowed = {v for v in outer.vertices if oracle.orbit_label(v) == orbit}
        reached = {rep}
        stack = [rep]
        while stack:
            v = stack.pop()
            for w in oracle.neighbors(v):
                if w in allowed and w not in reached:
                    reached.add(w)
                    stack.append(w)
        inner = [v for v, d in zip(outer.vertices, outer.dist_from_root)
                 if d <= window and v in allowed]
        missing = sorted(v for v in inner if v not in reached)
        results.append(OrbitConnectivity(orbit, not missing, missing[0] if missing else None))
    return results
