import pytest

import ifccr


def test_params_and_channel():
    p = ifccr.new_params(2, 1, 1, 2, 2, 2)
    assert p.m == 2
    assert ifccr.swap_users(ifccr.swap_users(p)) == p
    y1, y2 = ifccr.transmit(p, "10", "01", "11")
    assert (y1, y2) == ("10", "11")
    with pytest.raises(ValueError):
        ifccr.new_params(-1, 0, 0, 0, 0, 0)


def test_rank_and_entropy_terms():
    assert ifccr.rank(["10", "01", "11"]) == 2
    p = ifccr.new_params(5, 1, 1, 5, 3, 3)
    assert ifccr.eval_term(p, "H(Y1|X2)") == 5
    assert ifccr.eval_term(p, "H(Y1|X1,Xc,X2)") == 0


def test_bounds_agree():
    p = ifccr.new_params(2, 1, 1, 2, 2, 2)
    assert ifccr.closed_bound_values(p) == ifccr.rank_bound_values(p)
    assert ifccr.closed_bound_values(p) == [2, 2, 4, 4, 6, 8, 8]
    assert ifccr.bound_labels() == ["5a", "5b", "5c", "5d", "5e", "5f", "5g"]


def test_region_pentagon():
    p = ifccr.new_params(4, 0, 0, 2, 3, 6)
    r = ifccr.outer_bound_closed(p)
    assert r.vertices() == [("0", "0"), ("4", "0"), ("4", "3"), ("1", "6"), ("0", "6")]
    cap = ifccr.capacity_no_interference(p)
    assert cap is not None and r.equals(cap)
    assert r.contains("7/2", "1")
    assert not r.contains("5", "0")
    assert r.mirrored().vertices()[1] == ("6", "0")
    assert ifccr.RateRegion.from_json(r.to_json()).equals(r)
    assert r.to_svg().startswith("<svg")


def test_schemes_and_simulation():
    p = ifccr.new_params(5, 1, 1, 5, 3, 3)
    s = ifccr.example1_scheme(p)
    assert (s.k1, s.k2) == (5, 5)
    rep = ifccr.decode_check(p, s)
    assert rep["rx1_ok"] and rep["rx2_ok"]
    sim = ifccr.simulate_scheme(p, s, trials=500, seed=3)
    assert sim["trials"] == 500 and sim["errors"] == 0
    assert ifccr.LinearScheme.from_json(s.to_json()).to_json() == s.to_json()
    with pytest.raises(ifccr.RegimeError):
        ifccr.example1_scheme(ifccr.new_params(4, 0, 0, 2, 3, 6))


def test_example2_corners():
    p = ifccr.new_params(4, 0, 0, 2, 3, 6)
    one = ifccr.example2_scheme(p, corner=1)
    two = ifccr.example2_scheme(p, corner=2)
    assert (one.k1, one.k2) == (4, 3)
    assert (two.k1, two.k2) == (1, 6)


def test_oracle():
    p = ifccr.new_params(1, 0, 0, 1, 1, 1)
    res = ifccr.search_linear_schemes(p, kmax=1)
    assert res["achievable"] == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert not res["incomplete"]
    assert res["gap"]["soundness_violations"] == []
    assert res["gap"]["all_corners_achieved"]
