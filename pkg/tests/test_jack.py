from fractions import Fraction
from itertools import product

import pytest

from src.combinatorics import (
    Composition,
    KappaAffine,
    bounded_compositions,
    compositions_up_to,
    hook_product,
    triangle_greater,
)
from src.core import FactorizationError, InfeasibleBoundsError, UncertifiedPairError
from src.jack import (
    KAPPA_FIELD,
    JackEngine,
    KappaPoly,
    MultiPoly,
    commute_check,
    divided_difference,
    divided_difference_by_division,
    kappa,
    knop_sahi_ok,
    knop_sahi_report,
    linear_factors,
    monomial_count,
    monomial_image,
    processing_order,
    split,
    trailing_coeff_ok,
    u_apply,
    xi_eigenvalue,
    xi_specialization_match,
    zeta,
)
from src.jack.kappa import from_affine, hook_product_element, lcm_of_denominators
from src.jack.zeta import check_feasible

C = Composition.of

SMALL = [alpha for N in (1, 2, 3, 4) for w in range(5) for alpha in bounded_compositions(w, N)]
SMALL.append(C(1, 0, 0, 0, 0))

TRAILING = [a for a in compositions_up_to(5, 5) if a.weight > 0 and a.length + a.weight <= 5]


@pytest.fixture(scope="module")
def engine():
    return JackEngine()


def test_kappa_poly():
    assert KappaPoly((1, 0, 0)).coefficients == (Fraction(1),)
    assert KappaPoly().is_zero() and KappaPoly().degree == -1
    p = KappaPoly((3, 2))
    assert p(Fraction(-3, 2)) == 0
    assert str(p) == "2*κ + 3"
    content, primitive = KappaPoly((Fraction(-1, 2), Fraction(-1, 3))).primitive()
    assert primitive == KappaPoly((3, 2)) and content == Fraction(-1, 6)
    assert KappaPoly((4, 6)).primitive() == (Fraction(2), KappaPoly((2, 3)))
    assert KappaPoly((Fraction(-3, 4),)).primitive() == (Fraction(-3, 4), KappaPoly((1,)))
    assert KappaPoly().primitive() == (Fraction(0), KappaPoly())


@pytest.mark.parametrize("t", [KappaAffine(1, 1), KappaAffine(1, 0), KappaAffine(0, 1), KappaAffine(2, Fraction(1, 2))])
def test_hook_product_matches_field_product(t):
    for alpha in compositions_up_to(5, 4):
        numer, denom = split(hook_product_element(alpha, t))
        assert denom == KappaPoly((1,))
        assert numer.coefficients == hook_product(alpha, t)


def test_split_normalizes():
    value = (2 * kappa + 2) / (4 * kappa)
    numer, denom = split(value)
    assert denom == KappaPoly((0, 1))
    assert numer == KappaPoly((Fraction(1, 2), Fraction(1, 2)))
    assert split(numer.to_element() / denom.to_element()) == (numer, denom)


@pytest.mark.parametrize("value", [kappa / (kappa + 1), (3 * kappa - 2) / (kappa**2 + 5), 7 * kappa])
def test_field_inverse(value):
    assert value * (1 / value) == KAPPA_FIELD.one


def test_linear_factors():
    assert linear_factors(KappaPoly((6, 5, 1))) == {(1, 2): 1, (1, 3): 1}
    assert linear_factors(KappaPoly((9, 12, 4))) == {(2, 3): 2}
    with pytest.raises(FactorizationError):
        linear_factors(KappaPoly((1, 0, 1)))
    with pytest.raises(FactorizationError):
        linear_factors(KappaPoly())


def test_lcm_of_denominators():
    values = [1 / (kappa + 1), kappa / (kappa + 1) ** 2, 1 / (2 * kappa + 3), KAPPA_FIELD.one]
    lcm, poles = lcm_of_denominators(values)
    assert poles == {(1, 1): 2, (2, 3): 1}
    assert lcm == KappaPoly((3, 8, 7, 2))


def test_multipoly_arithmetic():
    x1 = MultiPoly.monomial((1, 0))
    x2 = MultiPoly.monomial((0, 1))
    p = x1 + x2.scale(kappa)
    assert len(p) == 2 and p.degree() == 1 and p.is_homogeneous()
    assert p - p == MultiPoly(2)
    assert not (p - p)
    assert p[(0, 1)] == kappa
    assert [e for e, _ in p] == [(1, 0), (0, 1)]
    with pytest.raises(ValueError):
        p + MultiPoly.monomial((1, 0, 0))
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})


def test_u_apply_small_cases():
    x1 = MultiPoly.monomial((1, 0))
    assert u_apply(1, x1, 2) == MultiPoly(2, {(1, 0): kappa + 2, (0, 1): kappa})
    assert u_apply(2, x1, 2) == MultiPoly(2, {(1, 0): 1, (0, 1): -kappa})
    for N in (1, 2, 3):
        one = MultiPoly.constant(N)
        for i in range(1, N + 1):
            eigenvalue = from_affine(xi_eigenvalue(Composition((0,) * N), i, N))
            assert u_apply(i, one, N) == one.scale(eigenvalue)
    with pytest.raises(ValueError):
        u_apply(1, x1, 3)
    with pytest.raises(IndexError):
        monomial_image(3, (1, 0))


def test_xi_eigenvalue():
    assert xi_eigenvalue(C(1, 0), 1, 2) == KappaAffine(1, 2)
    assert xi_eigenvalue(C(1, 0), 2, 2) == KappaAffine(0, 1)


@pytest.mark.parametrize("alpha", [a for a in SMALL if a.N <= 3])
def test_triangularity(alpha):
    for i in range(1, alpha.N + 1):
        for target, value in monomial_image(i, alpha.parts):
            if target == alpha.parts:
                assert value == xi_eigenvalue(alpha, i, alpha.N)
            else:
                assert triangle_greater(alpha, Composition(target))
                assert value in (KappaAffine(1, 0), KappaAffine(-1, 0))


@pytest.mark.parametrize("exponent", [a.parts for w in range(5) for a in bounded_compositions(w, 3)])
def test_divided_difference_closed_form(exponent):
    for i, j in product(range(1, 4), range(1, 4)):
        if i != j:
            assert divided_difference(i, j, exponent) == divided_difference_by_division(i, j, exponent, 3)


@pytest.mark.parametrize("exponent", [(2, 0, 1), (0, 1, 1), (1, 2, 0, 0), (0, 0, 2, 1)])
def test_operators_commute(exponent):
    N = len(exponent)
    p = MultiPoly.monomial(exponent) + MultiPoly.constant(N).scale(kappa)
    for i, j in product(range(1, N + 1), range(1, N + 1)):
        assert commute_check(i, j, p, N)


def test_zeta_single_box():
    z = zeta(C(1, 0), 2)
    assert z == MultiPoly(2, {(1, 0): 1, (0, 1): kappa / (kappa + 1)})
    table = z.to_dict()
    assert table["1,0"] == {"numerator": ["1"], "denominator": ["1"]}
    assert table["0,1"] == {"numerator": ["0", "1"], "denominator": ["1", "1"]}


def test_zeta_one_variable():
    assert zeta(C(3), 1) == MultiPoly.monomial((3,))
    assert processing_order(C(3), 1) == [C(3)]


@pytest.mark.parametrize("alpha", SMALL)
def test_zeta_is_eigenfunction(alpha, engine):
    z = engine.zeta(alpha, alpha.N)
    assert z[alpha.parts] == KAPPA_FIELD.one
    for exponent, _ in z:
        assert exponent == alpha.parts or triangle_greater(alpha, Composition(exponent))
    for i in range(1, alpha.N + 1):
        assert u_apply(i, z, alpha.N) == z.scale(from_affine(xi_eigenvalue(alpha, i, alpha.N)))


@pytest.mark.parametrize("alpha", SMALL)
def test_knop_sahi(alpha, engine):
    report = engine.report(alpha, alpha.N)
    assert report.knop_sahi_ok
    assert set(report.pole_factors) <= set(report.hook_factors)
    assert report.unpartnered_poles() == []
    assert report.trailing_coeff_ok in (True, None)


def test_knop_sahi_report_without_partners():
    report = knop_sahi_report(C(1), 1)
    assert report.pole_factors == {}
    assert report.knop_sahi_ok
    assert report.trailing_coeff_ok is None

    report = knop_sahi_report(C(2, 0), 2)
    assert report.knop_sahi_ok
    assert report.pole_partners == {}
    assert set(report.pole_factors) <= set(report.hook_factors)


def test_report_single_box(engine):
    report = engine.report(C(1, 0), 2)
    assert report.pole_factors == {(1, 1): 1}
    assert report.denominator_lcm == KappaPoly((1, 1))
    assert report.knop_sahi_ok and report.trailing_coeff_ok
    assert report.pole_partners == {(1, 1): [C(0, 1)]}
    record = report.to_dict()
    assert record["pole_factors"] == [{"m": 1, "n": 1, "multiplicity": 1}]
    assert record["pole_partners"] == {"1,1": [[0, 1]]}


def test_report_no_poles(engine):
    report = engine.report(C(1), 1)
    assert report.pole_factors == {}
    assert report.denominator_lcm == KappaPoly((1,))
    assert report.trailing_coeff_ok is None


@pytest.mark.parametrize("alpha", TRAILING)
def test_trailing_coefficient(alpha, engine):
    z = engine.zeta(alpha, alpha.length + alpha.weight)
    assert trailing_coeff_ok(alpha, z)
    assert knop_sahi_ok(alpha, z)


def test_feasibility(engine):
    assert monomial_count(2, 3) == 6
    assert monomial_count(0, 0) == 1
    with pytest.raises(InfeasibleBoundsError):
        check_feasible(C(2, 2), 3, cap=5)
    with pytest.raises(InfeasibleBoundsError):
        zeta(C(1, 1), 1)
    with pytest.raises(InfeasibleBoundsError):
        JackEngine(feasibility_cap=3).zeta(C(3), 3)
    assert engine.zeta(C(1, 0), 2) is engine.zeta(C(1, 0), 2)


def test_xi_specialization(nine_row_alpha, nine_row_beta):
    assert xi_specialization_match(nine_row_alpha, nine_row_beta, 4, 3)
    assert xi_specialization_match(C(1, 0), C(0, 1), 1, 1)
    with pytest.raises(UncertifiedPairError):
        xi_specialization_match(C(1, 0), C(0, 1), 1, 2)
