import pytest
from math import comb
from hypothesis import given, settings, strategies as st

from perimeter.errors import DomainError
from perimeter.series import (
    P,
    Q,
    T,
    X,
    Y,
    Polynomial,
    RationalExpr,
    TruncatedSeries,
    delta_binomial,
    delta_series,
    difference_identity_check,
    dist_even_expr,
    dist_even_nested_expr,
    expand,
    gf_dif,
    gf_dist_even_bivariate,
    gf_mod,
    gf_rep_even,
    gf_rep_even_expr,
    gf_signed_rep,
    joint_dif_mod,
    parse_assignment,
    series_geq,
    sum_series_dif,
    sum_series_mod,
)

from oracles import dif, even, mod_prime, partitions_with_perimeter, rep

ORDER = 10


def _by_perimeter(weight, order=ORDER):
    out = [Polynomial()]
    for n in range(1, order + 1):
        acc = Polynomial()
        for lam in partitions_with_perimeter(n):
            acc = acc + weight(lam)
        out.append(acc)
    return out


def _by_shape(weight, order, order_y):
    rows = [[Polynomial() for _ in range(order_y + 1)] for _ in range(order + 1)]
    for n in range(1, order + order_y):
        for lam in partitions_with_perimeter(n):
            b, a = len(lam), lam[0]
            if b <= order and a <= order_y:
                rows[b][a] = rows[b][a] + weight(lam)
    return rows


# -- polynomial ring ------------------------------------------------------------

monomials = st.tuples(*[st.integers(0, 2)] * 5)
polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=4).map(Polynomial)


@given(polys, polys, polys)
def test_polynomial_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == Polynomial()
    assert a * 1 == a


@given(polys, st.integers(-3, 3), st.integers(-3, 3))
def test_substitution_is_a_homomorphism(a, p, q):
    b = a * a + 3 * a
    assert b.subs(p=p, q=q) == a.subs(p=p, q=q) * a.subs(p=p, q=q) + 3 * a.subs(p=p, q=q)


@given(polys, polys)
def test_derivative_product_rule(a, b):
    assert (a * b).diff("t") == a.diff("t") * b + a * b.diff("t")


def test_polynomial_display_and_access():
    f = (1 + P) ** 2 - Q
    assert str(f) == "1 + 2*p - q + p^2"
    assert f.coefficient(p=1) == 2
    assert f.degree("p") == 2
    assert Polynomial(7) == 7
    assert hash(Polynomial(7)) == hash(7)
    with pytest.raises(DomainError):
        Polynomial.var("z")
    with pytest.raises(DomainError):
        P.constant()


def test_split_xy():
    f = 3 * X * Y**2 * P + X * Y**2 * Q + 2
    parts = f.split_xy()
    assert parts[(1, 2)] == 3 * P + Q
    assert parts[(0, 0)] == 2


# -- series arithmetic ---------------------------------------------------------

int_lists = st.lists(st.integers(-9, 9), min_size=6, max_size=6)


@given(int_lists, int_lists, int_lists)
def test_series_ring_laws(a, b, c):
    A, B, C = (TruncatedSeries(v) for v in (a, b, c))
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert (A + B) - B == A


@given(int_lists)
def test_expand_inverts_multiplication(a):
    # multiplying by 1 - x and dividing again recovers the series
    s = TruncatedSeries(a)
    den = TruncatedSeries([1, -1], order=5)
    num = s * den
    poly = Polynomial()
    for i, c in enumerate(num.coefficients()):
        poly = poly + c * X**i
    assert expand(RationalExpr(poly, 1 - X), 5) == s


def test_geometric_and_fibonacci():
    assert expand(RationalExpr(1, 1 - 2 * X), 6).to_ints() == [1, 2, 4, 8, 16, 32, 64]
    assert expand(RationalExpr(X, 1 - X - X**2), 8).to_ints() == [0, 1, 1, 2, 3, 5, 8, 13, 21]
    assert expand(RationalExpr(1, -1 + X), 3).to_ints() == [-1, -1, -1, -1]


def test_non_unit_denominator_rejected():
    with pytest.raises(DomainError):
        RationalExpr(1, 2 - X)
    with pytest.raises(DomainError):
        RationalExpr(1, P - X)


def test_y_needs_order_y():
    with pytest.raises(DomainError):
        expand(RationalExpr(Y, 1 - X), 3)


def test_bivariate_indexing():
    s = expand(RationalExpr(1, (1 - X) * (1 - Y)), 3, 2)
    assert s[3, 2] == 1
    with pytest.raises(IndexError):
        s[4, 0]
    with pytest.raises(IndexError):
        s[1]


def test_binomial_comparison():
    for d in (1, 3, 6):
        big = expand(RationalExpr(X, (1 - X) ** d), 30)
        small = expand(RationalExpr(X**d, (1 - X) ** d), 30)
        assert series_geq(big, small)
    assert not series_geq(small, big)


def test_series_geq():
    a = TruncatedSeries([1, 2, 3])
    b = TruncatedSeries([1, 1, 3])
    assert series_geq(a, b)
    assert not series_geq(b, a)


# -- generating functions against enumeration --------------------------------------


def test_rep_even_series():
    got = gf_rep_even(ORDER).coefficients()
    expect = _by_perimeter(lambda lam: P ** rep(lam) * Q ** even(lam))
    assert got == expect


def test_rep_even_specializations():
    s = gf_rep_even(ORDER)
    assert s.subs(p=1, q=1).to_ints() == [0] + [2 ** (n - 1) for n in range(1, ORDER + 1)]
    assert str(s.subs(q=1)[5]) == "5 + 5*p + 4*p^2 + p^3 + p^4"


@pytest.mark.parametrize("d", range(1, 5))
def test_mod_and_dif_series(d):
    assert gf_mod(d, ORDER).coefficients() == _by_perimeter(lambda lam: T ** mod_prime(lam, d))
    assert gf_dif(d, ORDER).coefficients() == _by_perimeter(lambda lam: T ** dif(lam, d))


@pytest.mark.parametrize("d", range(1, 5))
def test_total_series(d):
    totals_mod = [0] + [sum(mod_prime(lam, d) for lam in partitions_with_perimeter(n))
                        for n in range(1, ORDER + 1)]
    totals_dif = [0] + [sum(dif(lam, d) for lam in partitions_with_perimeter(n))
                        for n in range(1, ORDER + 1)]
    assert sum_series_mod(d, ORDER).to_ints() == totals_mod
    assert sum_series_dif(d, ORDER).to_ints() == totals_dif
    assert gf_mod(d, ORDER).derivative_at("t").to_ints() == totals_mod


@pytest.mark.parametrize("d", range(1, 4))
def test_bivariate_mod_and_dif(d):
    mod = _by_shape(lambda lam: T ** sum(1 for a in lam if a % (d + 1) == 1), 6, 6)
    assert gf_mod(d, 6, 6).coefficients() == mod
    assert gf_dif(d, 6, 6).coefficients() == _by_shape(lambda lam: T ** dif(lam, d), 6, 6)


def test_dist_even_bivariate():
    got = gf_dist_even_bivariate(7, 7).coefficients()
    expect = _by_shape(lambda lam: P ** len(set(lam)) * Q ** even(lam), 7, 7)
    assert got == expect


def test_nested_form_equals_single_fraction():
    assert expand(dist_even_nested_expr(), 9, 9) == expand(dist_even_expr(), 9, 9)


def test_signed_rep_series():
    expect = _by_perimeter(lambda lam: (-1) ** len(lam) * P ** rep(lam))
    assert gf_signed_rep(ORDER).coefficients() == expect


# -- positivity ---------------------------------------------------------------


def test_delta_leading_coefficients():
    assert delta_series(2, 6).to_ints() == [0, 1, 2, 3, 5, 10, 21]
    assert delta_series(3, 6).to_ints()[1:] == [2, 6, 12, 20, 32, 56]
    assert delta_series(4, 6).to_ints()[1:] == [3, 11, 27, 54, 95, 156]
    assert delta_series(1, 30).to_ints() == [0] * 31


def test_delta_zero_vanishes():
    # both terms are 1/(1-2x) when d = 0
    assert delta_series(0, 12).to_ints() == [0] * 13


@pytest.mark.parametrize("d", [2, 3, 4])
def test_delta_binomial_forms(d):
    s = delta_series(d, 40).to_ints()
    assert [delta_binomial(d, n) for n in range(1, 41)] == s[1:]


def test_delta_binomial_two_is_a_plain_sum():
    assert all(
        delta_binomial(2, n) == sum(comb(n, k) for k in range(1, n + 1, 3))
        for n in range(1, 30)
    )


def test_delta_binomial_other_d_rejected():
    with pytest.raises(DomainError):
        delta_binomial(5, 3)


@pytest.mark.parametrize("d", range(0, 9))
def test_delta_nonnegative(d):
    assert delta_series(d, 150).is_nonnegative()


@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_difference_identity(d):
    assert difference_identity_check(d, 40)


def test_parse_assignment():
    assert parse_assignment("p=1, q=-2") == {"p": 1, "q": -2}
    assert parse_assignment("") == {}
    for bad in ("x=1", "p", "p=a"):
        with pytest.raises(DomainError):
            parse_assignment(bad)


@settings(max_examples=20)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_substitution_commutes_with_expansion(p, q):
    e = gf_rep_even_expr()
    direct = expand(RationalExpr(e.numerator.subs(p=p, q=q), e.denominator.subs(p=p, q=q)), 7)
    assert gf_rep_even(7).subs(p=p, q=q) == direct


def _marginal(poly, index):
    out = {}
    for e, c in poly.terms():
        out[e[index]] = out.get(e[index], 0) + c
    return out


def test_joint_dif_mod_marginals():
    d = 2
    joint = joint_dif_mod(d, 9)
    dif_series = gf_dif(d, 9)
    mod_series = gf_mod(d, 9)
    for n in range(1, 10):
        # p carries dif_d, q carries mod'_d, t carries the single statistic
        assert _marginal(joint[n], 0) == _marginal(dif_series[n], 2)
        assert _marginal(joint[n], 1) == _marginal(mod_series[n], 2)
    assert joint.subs(p=1, q=1).to_ints() == [0] + [2 ** (n - 1) for n in range(1, 10)]
