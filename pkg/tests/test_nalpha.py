import json

import numpy as np
import pytest

from conftest import join_corpus
from cliquetheta.closed_forms import clique_theta_poly, interesting_factor_theta
from cliquetheta.graphs import CliqueTheta, build, cycle_graph, join_complete
from cliquetheta.nalpha import (
    ApproxResult,
    Budget,
    EmptySearch,
    approximate_root,
    cloud_to_csv,
    match_roots,
    nalpha_witness,
    scale_spec,
    shifted_poly_by_join,
    verify_scaling_exact,
    verify_scaling_numeric,
)
from cliquetheta.oracle import chromatic_poly_oracle
from cliquetheta.poly import X, evaluate, falling_factorial
from cliquetheta.roots import find_roots

C4_SPEC = CliqueTheta(1, ((1,), (1,)), 1)
C4_ROOT = complex(1.5, 3 ** 0.5 / 2)


@pytest.mark.parametrize(
    "spec, p, expected",
    [
        (C4_SPEC, 1, C4_SPEC),
        (C4_SPEC, 2, CliqueTheta(1, ((2,), (2,)), 2)),
        (CliqueTheta(1, ((1, 2), (3,)), 2), 3, CliqueTheta(1, ((3, 6), (9,)), 6)),
    ],
)
def test_scale_spec(spec, p, expected):
    assert scale_spec(spec, p) == expected


def test_scale_spec_needs_j1():
    with pytest.raises(ValueError):
        scale_spec(CliqueTheta(2, ((1,),), 1), 2)


def test_c4_scaling_identity():
    report = verify_scaling_exact(C4_SPEC, 2)
    assert report.holds
    assert report.degree == 2
    assert report.lhs == 4 * X ** 2 - 12 * X + 12 == 4 * (X ** 2 - 3 * X + 3)


@pytest.mark.parametrize("spec", [C4_SPEC, CliqueTheta(1, ((2, 1), (3,), (1,)), 2)])
def test_scale_one_is_trivial(spec):
    assert verify_scaling_exact(spec, 1).holds


def test_scaling_identity_checked_pointwise():
    spec = CliqueTheta(1, ((1, 1), (1,)), 1)
    report = verify_scaling_exact(spec, 3)
    assert report.holds and report.degree == 3
    f1 = interesting_factor_theta(spec)
    f3 = interesting_factor_theta(scale_spec(spec, 3))
    for x in range(1, 6):
        assert evaluate(f3, 3 * x) == 3 ** 3 * evaluate(f1, x)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_scaling_numeric_c4(p):
    ok, worst = verify_scaling_numeric(C4_SPEC, p)
    assert ok and worst < 1e-8


def test_match_roots_uses_each_root_once():
    assert match_roots([1.0, 1.0], [1.0, 5.0], 1e-9) == (False, 4.0)
    assert match_roots([1.0], [], 1e-9)[0] is False


@pytest.mark.parametrize("n", [1, 2, 3])
def test_join_shift_matches_oracle(n):
    for g in join_corpus():
        assert shifted_poly_by_join(chromatic_poly_oracle(g), n) == chromatic_poly_oracle(join_complete(g, n))


def test_join_shift_examples():
    assert shifted_poly_by_join(X, 1) == falling_factorial(2)
    assert shifted_poly_by_join(falling_factorial(2), 2) == falling_factorial(4)
    c4 = chromatic_poly_oracle(cycle_graph(4))
    assert shifted_poly_by_join(c4, 1) == chromatic_poly_oracle(join_complete(cycle_graph(4), 1))


def test_join_shifts_roots():
    c4 = chromatic_poly_oracle(cycle_graph(4))
    shifted = find_roots(shifted_poly_by_join(c4, 2)).non_integer
    assert np.allclose(np.sort_complex(shifted), np.sort_complex(find_roots(c4).non_integer + 2))


def test_witness_scaled_c4():
    w = nalpha_witness(C4_SPEC, 0, 2)
    roots = find_roots(w.poly).non_integer
    assert match_roots([2 * C4_ROOT, 2 * C4_ROOT.conjugate()], roots, 1e-8)[0]


def test_witness_joined_c4():
    w = nalpha_witness(C4_SPEC, 2, 1)
    assert w.join_order == 2
    roots = find_roots(w.poly).non_integer
    assert match_roots([C4_ROOT + 2, C4_ROOT.conjugate() + 2], roots, 1e-8)[0]
    assert w.poly == chromatic_poly_oracle(join_complete(build(C4_SPEC), 2))


def test_witness_identity_case():
    spec = CliqueTheta(1, ((1, 1), (2,), (1,)), 1)
    w = nalpha_witness(spec, 0, 1)
    assert w.poly == clique_theta_poly(spec)


def test_witness_join_order_must_be_even():
    with pytest.raises(ValueError):
        nalpha_witness(C4_SPEC, 1, 1)


# approximator


def test_exact_hit_on_c4_root():
    r = approximate_root(C4_ROOT)
    assert r.error < 1e-9
    assert not r.routed_through_disc
    assert r.verify()


def test_scaled_root_needs_scaling_budget():
    target = complex(3, 3 ** 0.5)
    r = approximate_root(target, budget=Budget(p_max=2))
    assert r.error < 1e-9 and r.scale_p == 2
    assert r.realised_spec() == CliqueTheta(1, ((2,), (2,)), 2)
    assert r.verify()


def test_disc_target_routes_through_join():
    r = approximate_root(complex(1.0, 0.3))
    assert r.routed_through_disc and r.join_order == 2
    beta = r.achieved_root - 2
    base_roots = find_roots(clique_theta_poly(r.witness)).non_integer
    assert np.min(np.abs(base_roots - beta)) < 1e-9
    assert r.verify()


def test_disc_boundary_point_is_not_routed():
    # |z - 1| == 1 is outside the open disc
    assert not approximate_root(complex(1.0, 1.0), budget=Budget(4, 4)).routed_through_disc


def test_forbidden_interval_target_is_best_effort():
    r = approximate_root(complex(0.5, 0.0), budget=Budget(6, 6))
    assert r.error > 0.1
    assert r.verify()


def test_error_monotone_in_budget():
    target = complex(2.5, 1.0)
    budgets = [Budget(2, 2), Budget(3, 3), Budget(5, 4), Budget(6, 6), Budget(8, 8), Budget(6, 6, 2)]
    errors = {b: approximate_root(target, budget=b).error for b in budgets}
    for a in budgets:
        for b in budgets:
            if b.dominates(a):
                assert errors[b] <= errors[a]


def test_nonuniform_extension_never_hurts():
    target = complex(2.5, 1.0)
    plain = approximate_root(target, budget=Budget(4, 4))
    wider = approximate_root(target, budget=Budget(4, 4, nonuniform_total=12))
    assert wider.error <= plain.error
    assert wider.verify()


def test_empty_budget():
    with pytest.raises(EmptySearch):
        approximate_root(1 + 1j, budget=Budget(1, 5))


def test_bad_eps():
    with pytest.raises(ValueError):
        approximate_root(1 + 1j, eps=0)


def test_result_json_and_error_field():
    r = approximate_root(complex(2.5, 1.0), budget=Budget(4, 4))
    obj = json.loads(r.to_json())
    assert set(obj) == {"target", "achieved", "error", "witness", "join_order", "scale_p", "residual"}
    assert obj["error"] == pytest.approx(abs(complex(*obj["achieved"]) - complex(*obj["target"])))
    assert obj["witness"]["family"] == "clique_theta"
    assert r.residual < 1e-10


def test_error_recomputed_from_fields():
    r = ApproxResult(1 + 1j, 2 + 1j, C4_SPEC, 0, 1, 0.0)
    assert r.error == 1.0


def test_cloud():
    cloud = []
    approximate_root(complex(1.0, 0.3), budget=Budget(3, 3), cloud=cloud)
    # interesting factor of a theta has degree sum(m_i - 1), none of its roots integral
    assert len(cloud) == sum(n * (m - 1) for n in (2, 3) for m in (2, 3))
    text = cloud_to_csv(cloud)
    lines = text.strip().splitlines()
    assert lines[0] == "path_lengths,scale_p,join_order,re,im"
    assert all(line.split(",")[2] == "2" for line in lines[1:])


@pytest.mark.parametrize("S, k", [(((1,), (1,)), 1), (((1, 1), (1,)), 1), (((2,), (1,)), 2)])
def test_scaling_fails_with_nontrivial_left_clique(S, k):
    # blowing up T(2, S, k) by 2 does not carry the roots along
    base = CliqueTheta(2, S, k)
    scaled = CliqueTheta(4, tuple(tuple(2 * a for a in s) for s in S), 2 * k)
    alphas = find_roots(chromatic_poly_oracle(build(base))).non_integer
    betas = find_roots(chromatic_poly_oracle(build(scaled))).non_integer
    ok, worst = match_roots(2 * alphas, betas, 1e-8)
    assert not ok and worst > 0.1
