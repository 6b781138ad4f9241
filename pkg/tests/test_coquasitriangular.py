from fractions import Fraction

import pytest

from hopfcheck.cofrobenius import cofrobenius_data
from hopfcheck.coquasitriangular import (
    alpha_beta_g,
    braiding_from_matrix,
    check_braided_modular_corollary,
    check_modular_convolution_identity,
    cqt_functionals,
    dualize_qt,
    flip_inverse_braiding,
    grouplike_homomorphism_checks,
    verify_cqt,
)
from hopfcheck.hopf import NotInvertibleError

ONE = Fraction(1)


def trivial_rows(n):
    return [[ONE] * n for _ in range(n)]


def test_trivial_braiding_on_group_algebra(c2):
    br, inv = braiding_from_matrix(c2, trivial_rows(2))
    assert inv.rows == ((ONE, ONE), (ONE, ONE))
    for c in verify_cqt(c2, br):
        assert c.ok, c
    data, checks = cqt_functionals(c2, br)
    assert all(c.ok for c in checks)
    assert data.u == c2.counit_functional
    assert data.v == c2.counit_functional
    cd = cofrobenius_data(c2)
    for c in check_modular_convolution_identity(c2, cd, br, data):
        assert c.ok, c
    results = check_braided_modular_corollary(c2, cd, br, data)
    by_name = {c.name: c for c in results}
    # the group algebra is unimodular, so the specialization actually runs
    assert by_name["braided_modular.unimodular_u_inv_v_eq_alpha"].status == "pass"
    assert all(c.ok for c in results)


def test_sign_braiding_on_group_algebra(c2):
    br, _ = braiding_from_matrix(c2, [[ONE, ONE], [ONE, -ONE]])
    for c in verify_cqt(c2, br):
        assert c.ok, c
    data, checks = cqt_functionals(c2, br)
    assert all(c.ok for c in checks)
    assert data.u.values == (ONE, -ONE)


def test_dualized_sweedler_bridge(sweedler, sweedler_r):
    dual, br, checks = dualize_qt(sweedler, sweedler_r)
    assert all(c.ok for c in checks)
    for c in verify_cqt(dual, br):
        assert c.ok, c
    data, fn_checks = cqt_functionals(dual, br)
    assert all(c.ok for c in fn_checks)
    # the braided functionals evaluate on the dual as the Drinfeld element g
    assert data.u.values == (Fraction(0), ONE, Fraction(0), Fraction(0))
    assert data.v.values == data.u.values


def test_dual_modular_chain(sweedler, sweedler_r):
    dual, br, _ = dualize_qt(sweedler, sweedler_r)
    dd = cofrobenius_data(dual)
    data, _ = cqt_functionals(dual, br)
    for c in check_modular_convolution_identity(dual, dd, br, data):
        assert c.ok, c
    results = check_braided_modular_corollary(dual, dd, br, data)
    by_name = {c.name: c for c in results}
    assert by_name["braided_modular.unimodular_u_inv_v_eq_alpha"].status == "skipped"
    assert all(c.ok for c in results)
    flipped, flip_checks = flip_inverse_braiding(dual, dd, br, data)
    assert all(c.ok for c in flip_checks)


def test_grouplike_witnesses_on_dual(sweedler, sweedler_r):
    dual, br, _ = dualize_qt(sweedler, sweedler_r)
    dd = cofrobenius_data(dual)
    (alpha_a, beta_a), checks = alpha_beta_g(dual, br, dd.a, name="a")
    assert all(c.ok for c in checks)
    assert alpha_a == beta_a
    ops = dual.basis_ops()
    grouplikes = {"a": (dd.a.lc(), dd.a_inv.lc()),
                  "e": (dual.unit_element.lc(), dual.unit_element.lc())}
    for c in grouplike_homomorphism_checks(ops, br, grouplikes):
        assert c.ok, c


def test_braiding_matrix_without_inverse_is_rejected(c2):
    with pytest.raises(NotInvertibleError, match="no convolution inverse"):
        braiding_from_matrix(c2, [[ONE, Fraction(0)], [Fraction(0), ONE]])


def test_corrupted_braiding_fails_multiplicativity(c2):
    br, _ = braiding_from_matrix(c2, [[ONE, ONE], [ONE, Fraction(2)]])
    results = {c.name: c for c in verify_cqt(c2, br)}
    bad = results["cqt.multiplicative_first_argument"]
    assert not bad.ok
    assert bad.witness == "at (g, g, g)"
