"""
Serialization of results into command payloads

Every number leaves as an exact string: ratios as "p/q", distances as dyadic
str(Fraction). Payloads are plain dicts; `to_json` renders them canonically
(sorted keys, compact separators) so identical results give identical bytes.
"""
import json

import pandas as pd

from utils import format_dyadic, format_ratio


def to_json(payload):
    return json.dumps(payload, sort_keys=True, separators=(',', ':'), ensure_ascii=False)


def profile_payload(profile):
    """{graph, root_set, entries: [{n, j, witness, boundary, edge_boundary}]}"""
    return {
        'graph': profile.graph,
        'root_set': list(profile.root_set),
        'entries': [
            {
                'n': entry.n,
                'j': format_ratio(entry.j),
                'witness': entry.witness_list,
                'boundary': entry.j.numerator * len(entry.witness) // entry.j.denominator,
                'edge_boundary': entry.edge_boundary,
            }
            for entry in profile.entries
        ],
    }


def profile_frame(profile):
    """Profile as a DataFrame with columns n, p, q (j = p/q)"""
    return pd.DataFrame(
        [(entry.n, entry.j.numerator, entry.j.denominator) for entry in profile.entries],
        columns=['n', 'p', 'q'],
    )


def profile_csv(profile):
    return profile_frame(profile).to_csv(index=False, lineterminator='\n')


def distance_payload(g1, g2, n_max, result):
    payload = {
        'graphs': [g1, g2],
        'n_max': n_max,
        'distance': format_dyadic(result.distance),
        'exact': result.exact,
    }
    if result.first_difference_radius is not None:
        payload['first_difference_radius'] = result.first_difference_radius
    if result.invariant is not None:
        payload['invariant'] = result.invariant.to_dict()
    return payload


def distance_matrix_payload(specs, n_max, matrix):
    return {
        'graphs': list(specs),
        'n_max': n_max,
        'matrix': [[format_dyadic(cell.distance) for cell in row] for row in matrix],
        'exact': [[cell.exact for cell in row] for row in matrix],
    }


def bridge_payload(report):
    return {
        'graph': report.graph,
        'root': report.root,
        'X': list(report.X),
        'r': report.r,
        'measure_before': report.measure_before,
        'measure_after': report.measure_after,
        'folner_star_ratio': format_ratio(report.folner_star_ratio),
    }


def modular_payload(graph, estimate):
    return {
        'graph': graph,
        'x': estimate.x,
        'y': estimate.y,
        'radius': estimate.radius,
        'm_xy': estimate.m_xy,
        'm_yx': estimate.m_yx,
        'ratio': format_ratio(estimate.ratio),
    }


def distortion_frame(result):
    return pd.DataFrame(result.distortion_window, columns=['d_original', 'd_reduced'])


def reduction_payload(graph, result):
    frame = distortion_frame(result)
    rep = result.reduced.orbit_representatives[0]
    distinct = frame.drop_duplicates().sort_values(['d_original', 'd_reduced'])
    return {
        'graph': graph,
        'orbit_index': result.orbit_index,
        'n_orbits': result.n_orbits,
        'representative': rep,
        'reduced_degree': len(result.reduced.neighbors(rep)),
        'connected': result.connected,
        'distortion_ok': result.distortion_ok(),
        'samples': len(frame),
        'distortion_window': [[int(a), int(b)] for a, b in distinct.itertuples(index=False)],
    }


def word_ball_payload(graph, result):
    payload = {
        'graph': graph,
        'n': result.n,
        'verified': result.verified,
        'size': result.size,
    }
    if result.counterexample is not None:
        payload['counterexample'] = result.counterexample
    return payload


def stability_payload(g1, g2, result):
    payload = {
        'graphs': [g1, g2],
        'n': result.n,
        'radius': result.radius,
        'verdict': result.verdict.value,
    }
    if result.j1 is not None:
        payload['j1'] = format_ratio(result.j1)
        payload['j2'] = format_ratio(result.j2)
    return payload


def folner_payload(graph, eps, shape, k_max, search):
    payload = {
        'graph': graph,
        'eps': format_ratio(eps),
        'shape': shape.value,
        'k_max': k_max,
        'found': search.found is not None,
        'trace': [{'k': k, 'ratio': format_ratio(ratio)} for k, ratio in search.trace],
    }
    if search.found is not None:
        witness, ratio = search.found
        payload['k'] = search.found_at
        payload['size'] = len(witness)
        payload['ratio'] = format_ratio(ratio)
    return payload


def h_g_payload(n, estimate):
    return {
        'n': n,
        'value': format_ratio(estimate.value),
        'argmin': estimate.argmin,
        'values': [{'graph': spec, 'j': format_ratio(j)} for spec, j in estimate.values],
    }


def catalog_payload(entries):
    return {'entries': entries}
