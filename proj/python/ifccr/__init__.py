"""Thin convenience layer over the _ifccr extension: JSON-string reports are
decoded into plain dicts; everything else is re-exported unchanged."""

import json as _json

try:
    from . import _ifccr as _core  # installed layout
except ImportError:
    import _ifccr as _core  # build-tree layout (extension on PYTHONPATH)

ChannelParams = _core.ChannelParams
LinearScheme = _core.LinearScheme
RateRegion = _core.RateRegion
RegimeError = _core.RegimeError
RegionError = _core.RegionError

bound_labels = _core.bound_labels
capacity_mixed_regime = _core.capacity_mixed_regime
capacity_no_interference = _core.capacity_no_interference
closed_bound_values = _core.closed_bound_values
deterministic_thm1 = _core.deterministic_thm1
eval_term = _core.eval_term
example1_scheme = _core.example1_scheme
example2_scheme = _core.example2_scheme
new_params = _core.new_params
outer_bound_closed = _core.outer_bound_closed
outer_bound_rank = _core.outer_bound_rank
rank = _core.rank
rank_bound_values = _core.rank_bound_values
swap_users = _core.swap_users
transmit = _core.transmit


def decode_check(params, scheme):
    return _json.loads(_core.decode_check(params, scheme))


def brute_force_decode_check(params, scheme, max_total_bits=12):
    return _json.loads(_core.brute_force_decode_check(params, scheme, max_total_bits))


def simulate_scheme(params, scheme, trials=1000, seed=1):
    return _json.loads(_core.simulate_scheme(params, scheme, trials, seed))


def search_linear_schemes(params, kmax=2, m_cap=3, budget_ms=60000):
    return _json.loads(_core.search_linear_schemes(params, kmax, m_cap, budget_ms))


def region_dict(region):
    return _json.loads(region.to_json())
