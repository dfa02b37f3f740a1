"""Partitions, abaci and level-rank duality checks."""

import json

from ._core import (
    LimitError,
    TheoremViolation,
    act_on_charged,
    act_on_charges,
    beta_set,
    big_upsilon,
    big_upsilon_ml,
    chi,
    conjugate,
    effective_charge,
    enum_partitions,
    hc_series,
    hook_lengths,
    is_core,
    m_core,
    m_quotient,
    parse_partition,
    render_abacus,
    series_intersection,
)
from . import _core


def block_key(components, charges, e):
    return json.loads(_core.block_key(components, charges, e))


def verify_duality(n, l, lam, m, mu, shift_bound=4, w_l=None, w_m=None):
    """Report for one pair of cuspidal data, as a dict."""
    return json.loads(_core.verify_duality_json(n, l, lam, m, mu, shift_bound, w_l, w_m))


def verify_uglov(l, m, k_max, window):
    """Summary of the Uglov-data check, with an "instances" list."""
    return json.loads(_core.verify_uglov_json(l, m, k_max, window))
