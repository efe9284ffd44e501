"""
Graph oracles over canonical vertex encodings, finite windows, and boundary primitives

An infinite locally finite graph is never materialized. A GraphOracle answers
neighbor queries for canonical string encodings; every finite computation works
on a window (FiniteBall) or on an explicit finite vertex set (VertexSet).
"""

from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import config
from errors import InvalidInputError, ResourceError, StructuralError
from logger_config import setup_logger

logger = setup_logger('GraphCore')

Vertex = str

NEIGHBOR_CACHE_SIZE = 1 << 18


class GraphOracle(ABC):
    """
    Infinite locally finite graph given by a neighbor function

    Subclasses implement `parse`, `format` and `_raw_neighbors`; the base class
    canonicalizes, sorts and caches neighbor lists. Oracles are pure: the cache
    never changes an answer, only how fast it arrives.
    """

    spec = None  # canonical spec string, set by generators.make_oracle
    oriented = False

    def __init__(self, num_orbits=1, degree_bound=None):
        self.num_orbits = num_orbits
        self.degree_bound = degree_bound
        self._cached_neighbors = lru_cache(maxsize=NEIGHBOR_CACHE_SIZE)(self._sorted_neighbors)

    # ------------------------------------------------------------------
    # Encoding
    # ------------------------------------------------------------------

    @abstractmethod
    def parse(self, v):
        """Decode an encoding into the family's native coordinates (raises ValueError)"""

    @abstractmethod
    def format(self, coords):
        """Encode native coordinates canonically"""

    @abstractmethod
    def _raw_neighbors(self, v):
        """Neighbor encodings of a validated vertex, any order"""

    def validate(self, v):
        """
        Check that v is a canonical encoding of a vertex of this graph

        Returns:
            str: v itself
        """
        try:
            canonical = self.format(self.parse(v))
        except (ValueError, TypeError, KeyError, IndexError) as e:
            raise InvalidInputError(f"'{v}' is not a vertex of {self.describe()}: {e}")
        if canonical != v:
            raise InvalidInputError(
                f"'{v}' is not canonical for {self.describe()} (canonical form '{canonical}')"
            )
        return v

    # ------------------------------------------------------------------
    # Adjacency & orbits
    # ------------------------------------------------------------------

    def _sorted_neighbors(self, v):
        self.validate(v)
        return tuple(sorted(self._raw_neighbors(v)))

    def neighbors(self, v) -> Tuple[Vertex, ...]:
        return self._cached_neighbors(v)

    def orbit_label(self, v):
        return 0

    @property
    @abstractmethod
    def orbit_representatives(self) -> Tuple[Vertex, ...]:
        """One vertex per orbit; representatives[i] has orbit label i"""

    @property
    def is_transitive(self):
        return self.num_orbits == 1

    def edge_kind(self, u, v):
        """Label of the ordered edge (u, v); oriented graphs use it to encode an end"""
        return ''

    def describe(self):
        return self.spec or type(self).__name__


class CayleyOracle(GraphOracle):
    """
    Cayley graph oracle: vertices are group elements, edges are g ~ g·s

    Exposes the group law so that word-ball computations can run through
    multiplication instead of the neighbor function.
    """

    @property
    @abstractmethod
    def identity(self) -> Vertex:
        pass

    @property
    @abstractmethod
    def generators(self) -> Tuple[Vertex, ...]:
        """Symmetric generating set, as vertex encodings"""

    @abstractmethod
    def multiply(self, g, h) -> Vertex:
        pass

    @property
    def orbit_representatives(self):
        return (self.identity,)


# ============================================================================
# FINITE WINDOWS
# ============================================================================

@dataclass(frozen=True)
class VertexSet:
    """Finite vertex set; cached_boundary, when present, is its exterior boundary"""
    members: FrozenSet[Vertex]
    cached_boundary: Optional[FrozenSet[Vertex]] = field(default=None, compare=False)

    @classmethod
    def of(cls, vertices: Iterable[Vertex]):
        return cls(frozenset(vertices))

    @property
    def size(self):
        return len(self.members)

    def sorted_members(self) -> List[Vertex]:
        return sorted(self.members)

    def with_boundary(self, oracle):
        if self.cached_boundary is not None:
            return self
        return VertexSet(self.members, exterior_boundary(oracle, self).members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, v):
        return v in self.members


@dataclass(frozen=True)
class FiniteBall:
    """
    Induced subgraph on B(root, radius)

    Vertices are ordered by (distance from root, encoding); adjacency is given
    on these local indices.
    """
    root: Vertex
    radius: int
    vertices: Tuple[Vertex, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    dist_from_root: Tuple[int, ...]
    index: Dict[Vertex, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'index', {v: i for i, v in enumerate(self.vertices)})

    @property
    def size(self):
        return len(self.vertices)

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j]

    @property
    def num_edges(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def shell(self, d) -> List[Vertex]:
        return [v for v, dv in zip(self.vertices, self.dist_from_root) if dv == d]

    def vertex_set(self):
        return VertexSet.of(self.vertices)

    def to_dict(self):
        return {
            'root': self.root,
            'radius': self.radius,
            'vertices': list(self.vertices),
            'edges': [[i, j] for i, j in self.edges()],
            'dist': list(self.dist_from_root),
        }


def _cap(cap):
    return config.get_vertex_cap() if cap is None else cap


def ball(oracle, root, r, cap=None, check_symmetry=True) -> FiniteBall:
    """
    Materialize B(root, r) by BFS

    Args:
        oracle: GraphOracle
        root: Center encoding
        r: Radius (>= 0)
        cap: Vertex cap (config default if None)
        check_symmetry: Verify u ∈ N(v) ⇔ v ∈ N(u) inside the ball

    Returns:
        FiniteBall with exact distances
    """
    if r < 0:
        raise InvalidInputError(f"ball radius must be non-negative, got {r}")
    cap = _cap(cap)
    oracle.validate(root)

    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        d = dist[v]
        if d == r:
            continue
        for w in oracle.neighbors(v):
            if w not in dist:
                dist[w] = d + 1
                if len(dist) > cap:
                    raise ResourceError(
                        f"B({root}, {r}) in {oracle.describe()} exceeds the vertex cap {cap:,}",
                        {'cap': cap, 'radius': r},
                    )
                queue.append(w)

    order = sorted(dist, key=lambda v: (dist[v], v))
    index = {v: i for i, v in enumerate(order)}
    neighbor_sets = {v: oracle.neighbors(v) for v in order}

    adjacency = []
    for v in order:
        local = []
        for w in neighbor_sets[v]:
            j = index.get(w)
            if j is None:
                continue
            if check_symmetry and v not in neighbor_sets[w]:
                raise StructuralError(
                    f"asymmetric adjacency in {oracle.describe()}: {w} ∈ N({v}) but {v} ∉ N({w})",
                    {'u': v, 'v': w},
                )
            local.append(j)
        adjacency.append(tuple(sorted(local)))

    logger.debug(f"Ball B({root}, {r}) in {oracle.describe()}: {len(order)} vertices")
    return FiniteBall(
        root=root,
        radius=r,
        vertices=tuple(order),
        adjacency=tuple(adjacency),
        dist_from_root=tuple(dist[v] for v in order),
    )


def exterior_boundary(oracle, A: VertexSet) -> VertexSet:
    """∂A: vertices outside A with a neighbor in A"""
    members = A.members
    boundary = set()
    for v in members:
        for w in oracle.neighbors(v):
            if w not in members:
                boundary.add(w)
    return VertexSet(frozenset(boundary))


def r_neighborhood(oracle, X: VertexSet, r, cap=None):
    """
    [X]_r and ∂_r X = [X]_r \\ X by multi-source BFS

    Returns:
        tuple: (closed VertexSet, boundary_r VertexSet)
    """
    if r < 0:
        raise InvalidInputError(f"neighborhood radius must be non-negative, got {r}")
    cap = _cap(cap)
    seen = set(X.members)
    if len(seen) > cap:
        raise ResourceError(f"|X| = {len(seen):,} exceeds the vertex cap {cap:,}")
    frontier = sorted(seen)
    for _ in range(r):
        nxt = []
        for v in frontier:
            for w in oracle.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if len(seen) > cap:
            raise ResourceError(
                f"[X]_{r} in {oracle.describe()} exceeds the vertex cap {cap:,}",
                {'cap': cap, 'radius': r},
            )
        if not nxt:
            break
        frontier = nxt
    closed = VertexSet(frozenset(seen))
    return closed, VertexSet(closed.members - X.members)


def edge_boundary(oracle, A: VertexSet) -> int:
    """Number of edges with exactly one endpoint in A"""
    members = A.members
    return sum(1 for v in members for w in oracle.neighbors(v) if w not in members)


def graph_distance_between(oracle, u, v, cap, vertex_cap=None) -> Optional[int]:
    """
    BFS distance d(u, v)

    Returns:
        int distance if it is at most cap, otherwise None ("exceeds cap",
        which is also the answer across components)
    """
    if cap < 1:
        raise InvalidInputError(f"distance cap must be positive, got {cap}")
    oracle.validate(u)
    oracle.validate(v)
    if u == v:
        return 0
    vertex_cap = _cap(vertex_cap)
    seen = {u}
    frontier = [u]
    for d in range(1, cap + 1):
        nxt = []
        for x in frontier:
            for w in oracle.neighbors(x):
                if w == v:
                    return d
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if len(seen) > vertex_cap:
            raise ResourceError(f"distance search in {oracle.describe()} exceeds the vertex cap {vertex_cap:,}")
        if not nxt:
            return None
        frontier = nxt
    return None


def is_two_connected(oracle, A: VertexSet) -> bool:
    """Every two members joined by a chain with consecutive distances ≤ 2"""
    members = A.members
    if not members:
        return True
    start = min(members)
    reached = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        near = set(oracle.neighbors(v))
        for w in list(near):
            near.update(oracle.neighbors(w))
        for w in near:
            if w in members and w not in reached:
                reached.add(w)
                stack.append(w)
    return len(reached) == len(members)


# ============================================================================
# AUDITS
# ============================================================================

@dataclass
class AuditReport:
    spec: str
    radius: int
    vertices_checked: int = 0
    findings: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.findings


def audit_oracle(oracle, radius=None, strict=True, cap=None) -> AuditReport:
    """
    Check symmetry, loops, duplicates, sorting, degree bound and orbit labels on B(rep, radius)

    Args:
        oracle: GraphOracle
        radius: Window radius (config.AUDIT_RADIUS if None)
        strict: Raise StructuralError on the first finding

    Returns:
        AuditReport
    """
    radius = config.AUDIT_RADIUS if radius is None else radius
    report = AuditReport(spec=oracle.describe(), radius=radius)

    def finding(message, **details):
        if strict:
            raise StructuralError(message, details)
        report.findings.append(message)

    reps = oracle.orbit_representatives
    labels = [oracle.orbit_label(rep) for rep in reps]
    if sorted(labels) != list(range(oracle.num_orbits)) or len(reps) != oracle.num_orbits:
        finding(f"representatives carry labels {labels}, expected 0..{oracle.num_orbits - 1}")

    checked = set()
    for rep in reps:
        window = ball(oracle, rep, radius, cap=cap, check_symmetry=False)
        for v in window.vertices:
            if v in checked:
                continue
            checked.add(v)
            nbrs = oracle.neighbors(v)
            if v in nbrs:
                finding(f"self-loop at {v}", vertex=v)
            if len(set(nbrs)) != len(nbrs):
                finding(f"duplicate neighbors at {v}", vertex=v)
            if list(nbrs) != sorted(nbrs):
                finding(f"unsorted neighbors at {v}", vertex=v)
            if oracle.degree_bound is not None and len(nbrs) > oracle.degree_bound:
                finding(f"degree {len(nbrs)} at {v} exceeds bound {oracle.degree_bound}", vertex=v)
            label = oracle.orbit_label(v)
            if not 0 <= label < oracle.num_orbits:
                finding(f"orbit label {label} at {v} outside [0, {oracle.num_orbits})", vertex=v)
            for w in nbrs:
                if v not in oracle.neighbors(w):
                    finding(f"asymmetric adjacency: {w} ∈ N({v}) but {v} ∉ N({w})", u=v, v=w)

    report.vertices_checked = len(checked)
    if report.ok:
        logger.debug(f"✅ Audit passed for {report.spec} on {len(checked)} vertices")
    else:
        logger.warning(f"⚠️ Audit of {report.spec}: {len(report.findings)} findings")
    return report
