"""Core arithmetic tests: support-set semantics, canonical form, text/JSON."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolpoly.poly import (
    Poly,
    PolyParseError,
    VariableMismatchError,
    format_poly,
    parse_poly,
    product,
    iter_supports_univariate,
    simplex_monomials,
)


def oracle_mul(s1, s2):
    """Classical term-by-term expansion with integer coefficient counting.

    Counts multiplicities the way one would over Z[x], then keeps every
    exponent with a positive count; over the Boolean coefficients that is
    exactly the product support.  Independent of Poly's set arithmetic.
    """
    counts = {}
    for a in s1:
        for b in s2:
            counts[a + b] = counts.get(a + b, 0) + 1
    return tuple(sorted(e for e, c in counts.items() if c > 0))


def P(text, nvars=None):
    return parse_poly(text, nvars)


# ---------------------------------------------------------------------------
# addition
# ---------------------------------------------------------------------------

def test_add_is_idempotent_on_example():
    assert P("1+x") + P("1+x") == P("1+x")


def test_add_unions_supports():
    assert P("1+x^2") + P("x^2+x^3") == P("1+x^2+x^3")


def test_add_absorption_pattern():
    # 1+x^a absorbed into 1+x^a+x^m
    a, m = 2, 5
    f = Poly((0, a))
    g = Poly((0, a, m))
    assert f + g == g


def test_add_variable_mismatch():
    with pytest.raises(VariableMismatchError):
        Poly((0,), 1) + Poly(((0, 0),), 2)


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------

def test_mul_non_ufd_factorization():
    lhs = P("1+x+x^3") * P("1+x^2+x^3")
    rhs = P("1+x") * P("1+x^2") * P("1+x^3")
    assert lhs == rhs


def test_mul_binomial_sixth_power():
    lhs = P("1+x^2+x^3") * P("1+x+x^3")
    assert lhs == P("1+x") ** 6


def test_mul_by_zero():
    f = P("1+x^2+x^3")
    assert f * Poly.zero() == Poly.zero()


def test_mul_matches_bruteforce_oracle_exhaustively():
    supports = list(iter_supports_univariate(6))
    polys = [Poly(s) for s in supports]
    for f in polys:
        for g in polys:
            assert (f * g).support == oracle_mul(f.support, g.support)


# ---------------------------------------------------------------------------
# powers
# ---------------------------------------------------------------------------

def test_pow_binomial_cube():
    # repeated Minkowski sum by hand: {0,1}+{0,1}+{0,1} = {0,1,2,3}
    assert Poly((0, 1)) ** 3 == Poly((0, 1, 2, 3))


def test_pow_zero_exponent():
    assert P("x^2+x^5") ** 0 == Poly.one()


def test_binomial_power_absorbs_unit_supported_factor():
    # f*(1+x)^N = (1+x)^(2N) whenever 1 is in Supp(f) and deg f = N
    f = P("1+x^2+x^5")
    n = f.degree()
    assert n == 5
    assert f * (P("1+x") ** n) == P("1+x") ** (2 * n)


def test_binomial_power_absorption_sweep():
    one_x = Poly((0, 1))
    for n in range(1, 9):
        middles = list(iter_supports_univariate(n - 1)) + [()]
        for mid in middles:
            f = Poly((0, n) + tuple(e for e in mid if 0 < e < n))
            assert f * one_x ** n == one_x ** (2 * n)


# ---------------------------------------------------------------------------
# degree and leading-exponent test
# ---------------------------------------------------------------------------

def test_degree():
    assert P("1+x^2+x^3").degree() == 3


def test_penultimate_in_support():
    assert P("1+x^2+x^3").penultimate_in_support()
    assert not P("1+x^3").penultimate_in_support()
    assert not Poly.one().penultimate_in_support()


def test_degree_of_zero_is_an_error():
    with pytest.raises(ValueError):
        Poly.zero().degree()
    with pytest.raises(ValueError):
        Poly.zero(2).total_degree()


# ---------------------------------------------------------------------------
# canonical form, parsing, formatting
# ---------------------------------------------------------------------------

def test_constructor_canonicalizes():
    assert Poly((3, 1, 1, 0)).support == (0, 1, 3)


def test_parse_accepts_unsorted_and_duplicated_terms():
    assert P("x^3+1+x^3+x") == P("1+x+x^3")


def test_parse_multivariate():
    f = P("x1^2*x2+1")
    assert f.nvars == 2
    assert f.support == ((0, 0), (2, 1))


def test_parse_xy_aliases():
    assert P("x+y") == P("x1+x2")
    assert P("x*y^2").support == ((1, 2),)


def test_parse_zero_and_one():
    assert P("0") == Poly.zero()
    assert P("1") == Poly.one()


def test_parse_errors_carry_position():
    with pytest.raises(PolyParseError) as e:
        parse_poly("1+x^2+")
    assert e.value.position == 6
    with pytest.raises(PolyParseError):
        parse_poly("1+zebra")
    with pytest.raises(PolyParseError):
        parse_poly("")


def test_format_round_trip():
    for text in ["0", "1", "x", "1+x^2+x^3", "x1*x2^2+x2"]:
        p = parse_poly(text)
        assert parse_poly(format_poly(p), p.nvars) == p


def test_format_multivariate():
    assert format_poly(Poly(((0, 0), (2, 1)), 2)) == "1+x1^2*x2"


def test_json_round_trip():
    for p in [Poly.zero(), P("1+x^2"), P("x*y+1")]:
        assert Poly.from_json_dict(p.to_json_dict()) == p


# ---------------------------------------------------------------------------
# algebraic laws (property-based)
# ---------------------------------------------------------------------------

supports = st.frozensets(st.integers(0, 12), max_size=8)
polys = supports.map(lambda s: Poly(tuple(s)))


@given(polys)
def test_add_idempotent(f):
    assert f + f == f


@given(polys, polys)
def test_add_commutative(f, g):
    assert f + g == g + f


@given(polys, polys, polys)
def test_add_associative(f, g, h):
    assert (f + g) + h == f + (g + h)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_mul_distributes_over_add(f, g, h):
    assert f * (g + h) == f * g + f * h


@given(polys, polys)
def test_operations_return_canonical_support(f, g):
    for p in [f + g, f * g]:
        assert list(p.support) == sorted(set(p.support))


@given(polys, polys)
def test_degree_additive_for_nonzero(f, g):
    if not f.is_zero() and not g.is_zero():
        assert (f * g).degree() == f.degree() + g.degree()


# ---------------------------------------------------------------------------
# enumeration helpers
# ---------------------------------------------------------------------------

def test_iter_supports_univariate_counts_and_order():
    sup = list(iter_supports_univariate(3))
    assert len(sup) == 15
    assert sup == sorted(sup)
    assert len(set(sup)) == 15


def test_simplex_monomials():
    assert simplex_monomials(2, 1) == [0, 1, 2]
    m = simplex_monomials(2, 2)
    assert m == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


def test_product_helper():
    assert product([]) == Poly.one()
    assert product([P("1+x"), P("1+x^2")]) == P("1+x") * P("1+x^2")
