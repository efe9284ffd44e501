"""Exact-arithmetic formatting and seeded sampling helpers"""
from fractions import Fraction

import numpy as np


def format_ratio(value):
    """
    Render an exact ratio as "p/q" (always with a denominator)

    Args:
        value: Fraction or int

    Returns:
        str: e.g. "2/1", "20/41", "0/1"
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_dyadic(value):
    """Render a dyadic distance as str(Fraction): "1", "1/2", "1/64" """
    return str(Fraction(value))


def parse_ratio(text):
    """
    Parse "p/q", an integer or a decimal into an exact Fraction

    Raises:
        ValueError: text is not a rational number
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"'{text}' is not a rational number") from e


def make_rng(seed):
    return np.random.default_rng(seed)


def random_walk_vertices(oracle, start, count, steps, seed):
    """
    Endpoints of seeded random walks from start

    Args:
        oracle: GraphOracle
        start: Starting vertex
        count: Number of walks
        steps: Walk length
        seed: Seed for numpy's default_rng

    Returns:
        list: count vertex encodings (may repeat)
    """
    rng = make_rng(seed)
    out = []
    for _ in range(count):
        v = start
        for _ in range(steps):
            nbrs = oracle.neighbors(v)
            if not nbrs:
                break
            v = nbrs[int(rng.integers(len(nbrs)))]
        out.append(v)
    return out


def random_connected_set(oracle, root, size, rng):
    """
    Grow a random connected set from root by repeatedly adding a random frontier vertex

    Args:
        oracle: GraphOracle
        root: First member
        size: Target size (>= 1)
        rng: numpy Generator

    Returns:
        list: sorted member encodings (fewer than size only if the component is smaller)
    """
    members = {root}
    frontier = set(oracle.neighbors(root))
    while len(members) < size and frontier:
        candidates = sorted(frontier)
        v = candidates[int(rng.integers(len(candidates)))]
        members.add(v)
        frontier.discard(v)
        frontier.update(w for w in oracle.neighbors(v) if w not in members)
    return sorted(members)


def random_vertex_set(oracle, root, size, radius, rng, cap=None):
    """Uniform sample of `size` vertices from B(root, radius), not necessarily connected"""
    from graph_core import ball

    window = ball(oracle, root, radius, cap=cap)
    size = min(size, window.size)
    picks = rng.choice(window.size, size=size, replace=False)
    return sorted(window.vertices[int(i)] for i in picks)
