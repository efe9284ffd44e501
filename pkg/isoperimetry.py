"""
Exact vertex isoperimetric profiles, Cheeger bounds and Følner ratios

j(n) = min |∂A|/|A| over non-empty A with |A| <= n. The minimum is attained on
2-connected sets (consecutive members at distance <= 2), and after translating
by the action it contains an orbit representative. A 2-connected set of size k
through rep lies in B(rep, 2(k-1)), so the search for sizes up to n_max runs on
the window B(rep, 2(n_max-1)+1): the inner part holds every candidate member,
the outer shell only ever shows up as boundary.

Candidate sets are enumerated once each as connected sets of the distance-2
graph containing rep (include/exclude reverse search). Branch-and-bound drops
a subtree only when no superset in it can tie or beat the current prefix-min
incumbent at any size, so both j and the lexicographically least witness are
identical with pruning on or off and for any worker count.
"""

import itertools
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from multiprocessing import Pool
from typing import List, NamedTuple, Optional, Tuple

import config
from errors import EmptySetError, InvalidInputError, UnsupportedShapeError
from graph_core import VertexSet, ball, edge_boundary, exterior_boundary, r_neighborhood
from logger_config import log_search_stats, log_witness, setup_logger

logger = setup_logger('Isoperimetry')

# per-vertex search states
FREE, EXT, IN, EXCL, OUTER = range(5)


# ============================================================================
# RESULT TYPES
# ============================================================================

@dataclass(frozen=True)
class ProfileEntry:
    n: int
    j: Fraction
    witness: VertexSet
    edge_boundary: int

    @property
    def witness_list(self):
        return self.witness.sorted_members()


@dataclass
class IsoProfile:
    """Table n -> (j(n), witness); entries[i].n == i + 1"""
    entries: List[ProfileEntry]
    root_set: List[str]
    graph: Optional[str] = None
    stats: dict = field(default_factory=dict, compare=False)

    def j(self, n):
        return self.entries[n - 1].j

    def witness(self, n):
        return self.entries[n - 1].witness

    @property
    def n_max(self):
        return len(self.entries)


class CheegerBounds(NamedTuple):
    upper: Fraction
    certified_at: int


class Shape(Enum):
    METRIC_BALLS = 'metric_balls'
    BOXES = 'boxes'


@dataclass
class FolnerSearch:
    """Outcome of a shape-restricted Følner search; found is None when no ratio reached eps"""
    found: Optional[Tuple[VertexSet, Fraction]]
    trace: List[Tuple[int, Fraction]]
    found_at: Optional[int] = None


@dataclass
class PigeonholeResult:
    total_ratio: Fraction
    part_ratios: List[Tuple[int, Fraction]]

    @property
    def min_part_ratio(self):
        return min(ratio for _, ratio in self.part_ratios)

    @property
    def holds(self):
        return self.min_part_ratio <= self.total_ratio


# ============================================================================
# SEARCH WINDOW
# ============================================================================

@dataclass(frozen=True)
class _Window:
    """Plain-tuple view of B(rep, 2(n_max-1)+1); local index 0 is rep"""
    vertices: Tuple[str, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    reach2: Tuple[Tuple[int, ...], ...]
    outer: Tuple[bool, ...]
    rank: Tuple[int, ...]
    by_rank: Tuple[str, ...]

    def encode(self, key):
        return [self.by_rank[r] for r in key]


def _prepare_window(oracle, rep, n_max, cap=None):
    inner = 2 * (n_max - 1)
    window = ball(oracle, rep, inner + 1, cap=cap)
    adjacency = window.adjacency
    outer = tuple(d > inner for d in window.dist_from_root)

    reach2 = []
    for i, nbrs in enumerate(adjacency):
        if outer[i]:
            reach2.append(())
            continue
        near = set()
        for j in nbrs:
            if not outer[j]:
                near.add(j)
            for k in adjacency[j]:
                if not outer[k]:
                    near.add(k)
        near.discard(i)
        reach2.append(tuple(sorted(near)))

    order = sorted(range(window.size), key=lambda i: window.vertices[i])
    rank = [0] * window.size
    for r, i in enumerate(order):
        rank[i] = r

    logger.debug(f"PROFILE window B({rep}, {inner + 1}): {window.size:,} vertices, "
                 f"{sum(1 for o in outer if not o):,} candidates")
    return _Window(
        vertices=window.vertices,
        adjacency=adjacency,
        reach2=tuple(reach2),
        outer=outer,
        rank=tuple(rank),
        by_rank=tuple(window.vertices[i] for i in order),
    )


# ============================================================================
# BRANCH-AND-BOUND ENUMERATION
# ============================================================================

class _BranchSearch:
    """
    Include/exclude enumeration of connected sets of the distance-2 graph through rep

    State is kept incrementally: touch[w] counts members adjacent to w,
    `boundary` is |∂S| and `committed` counts boundary vertices that can never
    join S in this subtree (excluded or outside the candidate region).
    """

    def __init__(self, window, n_max, prune, limits):
        self.w = window
        self.n_max = n_max
        self.prune = prune
        size = len(window.vertices)
        self.state = [OUTER if o else FREE for o in window.outer]
        self.touch = [0] * size
        self.members = []
        self.boundary = 0
        self.committed = 0
        # limits[k] = (num, den) of the incumbent prefix-min ratio at size k
        self.limit_num = [None] * (n_max + 1)
        self.limit_den = [None] * (n_max + 1)
        for k, ratio in enumerate(limits):
            if ratio is not None:
                self.limit_num[k] = ratio.numerator
                self.limit_den[k] = ratio.denominator
        self.best_boundary = [None] * (n_max + 1)
        self.best_key = [None] * (n_max + 1)
        self.nodes = 0
        self.pruned = 0

    def include(self, v):
        state, touch = self.state, self.touch
        state[v] = IN
        self.members.append(v)
        if touch[v]:
            self.boundary -= 1
        for u in self.w.adjacency[v]:
            if state[u] == IN:
                continue
            touch[u] += 1
            if touch[u] == 1:
                self.boundary += 1
                if state[u] >= EXCL:
                    self.committed += 1

    def remove(self, v):
        state, touch = self.state, self.touch
        for u in self.w.adjacency[v]:
            if state[u] == IN:
                continue
            if touch[u] == 1:
                self.boundary -= 1
                if state[u] >= EXCL:
                    self.committed -= 1
            touch[u] -= 1
        self.members.pop()
        state[v] = EXT
        if touch[v]:
            self.boundary += 1

    def exclude(self, v):
        self.state[v] = EXCL
        if self.touch[v]:
            self.committed += 1

    def unexclude(self, v):
        if self.touch[v]:
            self.committed -= 1
        self.state[v] = EXT

    def open_neighbors(self, v):
        added = []
        state = self.state
        for u in self.w.reach2[v]:
            if state[u] == FREE:
                state[u] = EXT
                added.append(u)
        return added

    def close(self, added):
        for u in added:
            self.state[u] = FREE

    def record(self):
        s = len(self.members)
        b = self.boundary
        best = self.best_boundary[s]
        if best is not None and b > best:
            return
        key = tuple(sorted(self.w.rank[i] for i in self.members))
        if best is None or b < best or key < self.best_key[s]:
            self.best_boundary[s] = b
            self.best_key[s] = key
            self._tighten(s, b)

    def _tighten(self, s, b):
        for k in range(s, self.n_max + 1):
            num, den = self.limit_num[k], self.limit_den[k]
            if num is None or b * den < num * s:
                self.limit_num[k], self.limit_den[k] = b, s

    def hopeless(self):
        """No superset in this subtree can reach the incumbent at any size"""
        s = len(self.members)
        committed = self.committed
        open_boundary = self.boundary - committed
        for k in range(s + 1, self.n_max + 1):
            num = self.limit_num[k]
            if num is None:
                return False
            lower = committed + max(0, open_boundary - (k - s))
            if lower * self.limit_den[k] <= num * k:
                return False
        return True

    def extend(self, ext):
        self.nodes += 1
        self.record()
        if len(self.members) == self.n_max:
            return
        for i, v in enumerate(ext):
            if self.prune and self.hopeless():
                self.pruned += 1
                for u in ext[:i]:
                    self.unexclude(u)
                return
            added = self.open_neighbors(v)
            self.include(v)
            self.extend(ext[i + 1:] + added)
            self.remove(v)
            self.close(added)
            self.exclude(v)
        for u in ext:
            self.unexclude(u)

    def start(self, branch=None):
        """Run from S = {rep}; branch i includes root_ext[i] with root_ext[:i] excluded"""
        self.include(0)
        root_ext = self.open_neighbors(0)
        if branch is None:
            self.extend(root_ext)
            return
        for u in root_ext[:branch]:
            self.exclude(u)
        v = root_ext[branch]
        added = self.open_neighbors(v)
        self.include(v)
        self.extend(root_ext[branch + 1:] + added)

    def results(self):
        out = {}
        for s in range(1, self.n_max + 1):
            if self.best_key[s] is not None:
                out[s] = (self.best_boundary[s], self.w.encode(self.best_key[s]))
        return out


_worker_context = {}


def _init_worker(window, n_max, prune, limits):
    _worker_context.update(window=window, n_max=n_max, prune=prune, limits=limits)


def _explore_branch(branch):
    """Pool task: one root-level branch of the enumeration"""
    ctx = _worker_context
    search = _BranchSearch(ctx['window'], ctx['n_max'], ctx['prune'], ctx['limits'])
    search.start(branch)
    return search.results(), search.nodes, search.pruned


# ============================================================================
# PROFILE
# ============================================================================

def _merge(best, candidates):
    """best[s] = (boundary, witness encodings) minimal for size s"""
    for s, (b, witness) in candidates.items():
        cur = best.get(s)
        if cur is None or (b, witness) < cur:
            best[s] = (b, witness)


def _limits_from(best, n_max):
    limits = [None] * (n_max + 1)
    current = None
    for k in range(1, n_max + 1):
        if k in best:
            ratio = Fraction(best[k][0], k)
            if current is None or ratio < current:
                current = ratio
        limits[k] = current
    return limits


def _seed_sets(oracle, rep, window, n_max):
    """BFS prefixes and greedy growth from rep: connected, so valid candidates"""
    seeds = {}
    for k in range(1, min(n_max, len(window.vertices)) + 1):
        prefix = VertexSet.of(window.vertices[:k])
        _merge(seeds, {k: (len(exterior_boundary(oracle, prefix)), prefix.sorted_members())})

    members = {rep}
    boundary = set(oracle.neighbors(rep))
    _merge(seeds, {1: (len(boundary), [rep])})
    while len(members) < n_max and boundary:
        scored = []
        for v in sorted(boundary):
            grown = (boundary | set(oracle.neighbors(v))) - members - {v}
            scored.append((len(grown), v, grown))
        size, v, grown = min(scored, key=lambda t: (t[0], t[1]))
        members.add(v)
        boundary = grown
        _merge(seeds, {len(members): (size, sorted(members))})
    return seeds


def iso_profile(oracle, n_max, prune=None, jobs=None, cap=None) -> IsoProfile:
    """
    Exact isoperimetric profile j(1..n_max) with lexicographically least witnesses

    Args:
        oracle: GraphOracle with declared orbit representatives
        n_max: Largest set size (>= 1)
        prune: Branch-and-bound on/off (config.PRUNE if None)
        jobs: Worker processes (config default if None); results never depend on it
        cap: Vertex cap for the search windows

    Returns:
        IsoProfile
    """
    if n_max < 1:
        raise InvalidInputError(f"n_max must be at least 1, got {n_max}")
    reps = list(oracle.orbit_representatives)
    if not reps:
        raise InvalidInputError(f"{oracle.describe()} declares no orbit representatives")
    prune = config.PRUNE if prune is None else prune
    jobs = config.get_jobs() if jobs is None else jobs

    started = time.time()
    logger.info(f"PROFILE start {oracle.describe()} n_max={n_max} prune={prune} jobs={jobs}")

    best = {}
    nodes = pruned = 0
    for rep in reps:
        window = _prepare_window(oracle, rep, n_max, cap)
        _merge(best, _seed_sets(oracle, rep, window, n_max))
        limits = _limits_from(best, n_max)

        if jobs > 1:
            root_branches = len(window.reach2[0])
            with Pool(processes=jobs, initializer=_init_worker,
                      initargs=(window, n_max, prune, limits)) as pool:
                outcomes = pool.map(_explore_branch, range(root_branches))
            for found, branch_nodes, branch_pruned in outcomes:
                _merge(best, found)
                nodes += branch_nodes
                pruned += branch_pruned
            nodes += 1
        else:
            search = _BranchSearch(window, n_max, prune, limits)
            search.start()
            _merge(best, search.results())
            nodes += search.nodes
            pruned += search.pruned

    entries = []
    current = None
    for n in range(1, n_max + 1):
        if n in best:
            b, witness = best[n]
            candidate = (Fraction(b, n), witness)
            if current is None or candidate < current:
                current = candidate
        j, witness = current
        witness_set = VertexSet.of(witness).with_boundary(oracle)
        entries.append(ProfileEntry(n=n, j=j, witness=witness_set,
                                    edge_boundary=edge_boundary(oracle, witness_set)))
        log_witness(logger, n, j, witness)

    elapsed = time.time() - started
    log_search_stats(logger, nodes, pruned, elapsed)
    return IsoProfile(
        entries=entries,
        root_set=reps,
        graph=oracle.spec,
        stats={'nodes': nodes, 'pruned': pruned},
    )


def brute_force_profile(oracle, n_max, radius=None, cap=None) -> IsoProfile:
    """
    Reference profile: every subset of B(rep, radius) containing rep, no connectivity filter

    Exponential in the window size; meant for small n and as an independent
    check of iso_profile.

    Args:
        radius: Window radius (2 * n_max if None)
    """
    if n_max < 1:
        raise InvalidInputError(f"n_max must be at least 1, got {n_max}")
    radius = 2 * n_max if radius is None else radius
    best = {}
    for rep in oracle.orbit_representatives:
        window = ball(oracle, rep, radius, cap=cap)
        others = window.vertices[1:]
        for k in range(1, n_max + 1):
            for combo in itertools.combinations(others, k - 1):
                A = VertexSet(frozenset((rep,) + combo))
                b = len(exterior_boundary(oracle, A))
                cur = best.get(k)
                if cur is None or b < cur[0] or (b == cur[0] and A.sorted_members() < cur[1]):
                    best[k] = (b, A.sorted_members())

    entries = []
    current = None
    for n in range(1, n_max + 1):
        b, witness = best[n]
        candidate = (Fraction(b, n), witness)
        if current is None or candidate < current:
            current = candidate
        witness_set = VertexSet.of(current[1])
        entries.append(ProfileEntry(n, current[0], witness_set, edge_boundary(oracle, witness_set)))
    return IsoProfile(entries=entries, root_set=list(oracle.orbit_representatives), graph=oracle.spec)


def cheeger_bounds(profile: IsoProfile) -> CheegerBounds:
    """Upper bound min_n j(n) for h; no lower bound is claimed from a finite window"""
    if not profile.entries:
        raise InvalidInputError("profile has no entries")
    upper = min(entry.j for entry in profile.entries)
    return CheegerBounds(upper=upper, certified_at=profile.entries[-1].n)


# ============================================================================
# FØLNER RATIOS
# ============================================================================

def boundary_ratio(oracle, F: VertexSet) -> Fraction:
    if not F.members:
        raise EmptySetError("boundary ratio of the empty set is undefined")
    return Fraction(len(exterior_boundary(oracle, F)), len(F))


def r_boundary_ratio(oracle, F: VertexSet, r, cap=None) -> Fraction:
    """|∂_r F| / |F| exactly"""
    if not F.members:
        raise EmptySetError("r-boundary ratio of the empty set is undefined")
    if r < 1:
        raise InvalidInputError(f"r must be at least 1, got {r}")
    _, boundary_r = r_neighborhood(oracle, F, r, cap=cap)
    return Fraction(len(boundary_r), len(F))


def shape_family(oracle, shape, k, cap=None) -> VertexSet:
    """F_k for a shape family: B(rep, k), or the side-k box [0, k)^d on grids"""
    shape = Shape(shape)
    if shape == Shape.METRIC_BALLS:
        rep = oracle.orbit_representatives[0]
        return ball(oracle, rep, k, cap=cap).vertex_set()
    box = getattr(oracle, 'box', None)
    if box is None:
        raise UnsupportedShapeError(f"{oracle.describe()} has no box shapes", {'shape': shape.value})
    return VertexSet.of(box(k))


def folner_witness(oracle, eps, shape=Shape.METRIC_BALLS, k_max=10, cap=None) -> FolnerSearch:
    """
    First F_k (k = 1..k_max) along a shape family with |∂F_k|/|F_k| <= eps

    Args:
        oracle: GraphOracle
        eps: Positive rational threshold
        shape: Shape.METRIC_BALLS or Shape.BOXES
        k_max: Largest shape index

    Returns:
        FolnerSearch with the witness or, if none, the full trace
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidInputError(f"eps must be positive, got {eps}")
    shape = Shape(shape)
    trace = []
    for k in range(1, k_max + 1):
        F = shape_family(oracle, shape, k, cap=cap)
        ratio = boundary_ratio(oracle, F)
        trace.append((k, ratio))
        logger.debug(f"Følner {shape.value} k={k}: |F|={len(F)} ratio={ratio}")
        if ratio <= eps:
            logger.info(f"✅ Følner witness in {oracle.describe()} at k={k}, ratio {ratio}")
            return FolnerSearch(found=(F, ratio), trace=trace, found_at=k)
    logger.info(f"No Følner witness in {oracle.describe()} up to k={k_max} at eps={eps}")
    return FolnerSearch(found=None, trace=trace)


def r_amenability_trace(oracle, r, shape=Shape.METRIC_BALLS, k_max=10, cap=None):
    """(k, |∂_r F_k|/|F_k|) along a shape family"""
    return [(k, r_boundary_ratio(oracle, shape_family(oracle, shape, k, cap=cap), r, cap=cap))
            for k in range(1, k_max + 1)]


def pigeonhole_check(oracle, F: VertexSet) -> PigeonholeResult:
    """
    Compare |∂F|/|F| with the per-component ratios of F on a disjoint union

    The union of finite sets cannot beat its best part: min_i |∂F_i|/|F_i| <= |∂F|/|F|.
    """
    component = getattr(oracle, 'component', None)
    if component is None:
        raise InvalidInputError(f"{oracle.describe()} is not a disjoint union")
    total = boundary_ratio(oracle, F)
    parts = {}
    for v in F.members:
        parts.setdefault(component(v), set()).add(v)
    part_ratios = [(i, boundary_ratio(oracle, VertexSet(frozenset(vs)))) for i, vs in sorted(parts.items())]
    return PigeonholeResult(total_ratio=total, part_ratios=part_ratios)
