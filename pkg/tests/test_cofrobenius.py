from fractions import Fraction

import pytest

from hopfcheck.cofrobenius import (
    PreconditionError,
    check_radford_s4,
    check_s2_inner_witness,
    cofrobenius_checks,
    cofrobenius_data,
    coinner_from_integral_twist_findim,
    integral_twist_from_coinner_findim,
    left_integrals,
    modular_element_checks,
)
from hopfcheck.hopf import Functional2
from hopfcheck.linalg import Matrix
from hopfcheck.scalars import QQ

ONE = Fraction(1)
ZERO = Fraction(0)


def test_integral_space_is_one_dimensional(c2, c4, sweedler):
    for algebra in (c2, c4, sweedler):
        assert len(left_integrals(algebra)) == 1


def test_sweedler_integral_values(sweedler, sweedler_data):
    data = sweedler_data
    assert data.lam.values == (ZERO, ZERO, ZERO, ONE)
    assert data.a == sweedler.basis_element(1)
    assert data.a_inv == data.a
    assert data.alpha.values == (ONE, -ONE, ZERO, ZERO)
    assert data.alpha_inv == data.alpha
    # chi fixes 1 and gx, negates g and x
    assert data.chi.rows == Matrix.from_rows(
        QQ, [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]).rows
    x = sweedler.basis_element(2)
    assert data.chi_of(x) == -x


def test_group_algebra_modular_data_is_trivial(c2, c4):
    for algebra in (c2, c4):
        data = cofrobenius_data(algebra)
        # the integral picks out the identity coefficient
        assert data.lam.values[0] == ONE
        assert all(v == ZERO for v in data.lam.values[1:])
        assert data.a == algebra.unit_element
        assert data.alpha == algebra.counit_functional
        assert data.chi == Matrix.identity(QQ, algebra.dim)


def test_full_battery_passes(c2, sweedler, sweedler_data):
    for r in cofrobenius_checks(sweedler, sweedler_data):
        assert r.ok, r
    for r in cofrobenius_checks(c2, cofrobenius_data(c2)):
        assert r.ok, r


def test_radford_s4_three_ways(sweedler, sweedler_data):
    results = check_radford_s4(sweedler, sweedler_data)
    names = {r.name for r in results}
    assert names == {"radford.s4_matches_hit_form",
                     "radford.s4_matches_expanded_form",
                     "radford.inner_forms_agree"}
    assert all(r.ok for r in results)


def test_wrong_modular_element_is_caught(sweedler, sweedler_data):
    ops = sweedler.basis_ops()
    unit = sweedler.unit_element.lc()
    results = modular_element_checks(ops, sweedler_data.lam.as_fn(), unit, unit)
    by_name = {r.name: r for r in results}
    law = by_name["integral.modular_element_law"]
    assert not law.ok and law.witness == "at gx"
    twist = by_name["integral.s2_twist_law"]
    assert not twist.ok and twist.witness == "at gx"
    # the unit really is grouplike and self-inverse, so those checks stay green
    assert by_name["integral.modular_element_grouplike"].ok
    assert by_name["integral.modular_element_inverse"].ok


def test_s2_witness_with_modular_element(sweedler, sweedler_data):
    results = check_s2_inner_witness(sweedler, sweedler_data, sweedler_data.a)
    assert [r.name for r in results] == [
        "s2_witness.invertible",
        "s2_witness.implements_s2",
        "s2_witness.nakayama_product",
        "s2_witness.nakayama_modular_product",
        "s2_witness.modular_value_agreement",
    ]
    assert all(r.ok for r in results)


def test_s2_witness_rejects_bad_candidates(sweedler, sweedler_data):
    x = sweedler.basis_element(2)
    results = check_s2_inner_witness(sweedler, sweedler_data, x)
    assert len(results) == 1 and not results[0].ok
    assert results[0].name == "s2_witness.invertible"
    # the unit is invertible but does not conjugate to S^2
    results = check_s2_inner_witness(sweedler, sweedler_data, sweedler.unit_element)
    by_name = {r.name: r for r in results}
    bad = by_name["s2_witness.implements_s2"]
    assert not bad.ok and bad.witness == "at x"


def test_integral_twist_roundtrip(sweedler, sweedler_data):
    data = sweedler_data
    rho, tau, forward = integral_twist_from_coinner_findim(sweedler, data, data.alpha)
    assert all(r.ok for r in forward)
    rho_p, tau_pp, backward = coinner_from_integral_twist_findim(sweedler, data, rho, tau)
    assert all(r.ok for r in backward)
    # both extracted functionals collapse to the modular character here
    assert rho_p == data.alpha
    assert tau_pp == data.alpha


def test_integral_twist_rejects_non_coinner_omega(sweedler, sweedler_data):
    with pytest.raises(PreconditionError, match="does not realize"):
        integral_twist_from_coinner_findim(sweedler, sweedler_data,
                                           sweedler.counit_functional)


def test_extraction_refuses_perturbed_pair(sweedler, sweedler_data):
    data = sweedler_data
    rho, tau, _ = integral_twist_from_coinner_findim(sweedler, data, data.alpha)
    rows = [list(r) for r in tau.rows]
    rows[1][0] = rows[1][0] + ONE
    with pytest.raises(PreconditionError,
                       match=r"twisted product formula fails at \(g, x\)"):
        coinner_from_integral_twist_findim(sweedler, data, rho, Functional2(sweedler, rows))
