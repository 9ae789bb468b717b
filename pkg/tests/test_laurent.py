"""Unit and property tests for the exact Laurent-polynomial kernel."""

import json
import math

import pytest
from hypothesis import assume, given, strategies as st

from c2n3.laurent import (
    ONE,
    UNIT_MONOMIAL,
    ZERO,
    LaurentPoly,
    Monomial,
    RationalExpr,
    mono,
)
from oracles import as_dict, naive_add, naive_mul, naive_neg, naive_pow

exponents = st.integers(min_value=-3, max_value=3)
monomials = st.tuples(exponents, exponents, exponents)
coefficients = st.integers(min_value=-9, max_value=9)
polys = st.dictionaries(monomials, coefficients, max_size=5).map(LaurentPoly)

# terms polynomial in x with nonnegative x-exponents, for substitution tests
monomials_x_nonneg = st.tuples(
    st.integers(-2, 2), st.integers(-2, 2), st.integers(0, 2)
)
polys_x_nonneg = st.dictionaries(monomials_x_nonneg, coefficients, max_size=4).map(
    LaurentPoly
)

moduli = st.floats(min_value=0.5, max_value=2.0, allow_nan=False)
angles = st.floats(min_value=0.0, max_value=2.0 * math.pi, allow_nan=False)
unit_band_complex = st.builds(
    lambda r, t: complex(r * math.cos(t), r * math.sin(t)), moduli, angles
)
assignments = st.fixed_dictionaries(
    {"L": unit_band_complex, "M": unit_band_complex, "x": unit_band_complex}
)

# fixed cubics shared by several tests, written out term by term
P_PLUS2 = (
    mono(-1, m=4, x=3)
    + mono(-2, m=6, x=2) + mono(1, m=4, x=2) + mono(-2, m=2, x=2)
    + mono(-1, m=8, x=1) + mono(1, m=6, x=1) + mono(-2, m=4, x=1)
    + mono(1, m=2, x=1) + mono(-1, x=1)
    + mono(1, m=4)
)
Q_CUBIC = (
    mono(-1, m=4, x=3)
    + mono(-2, m=6, x=2) + mono(2, m=4, x=2) + mono(-2, m=2, x=2)
    + mono(-1, m=8, x=1) + mono(2, m=6, x=1) + mono(-3, m=4, x=1)
    + mono(2, m=2, x=1) + mono(-1, x=1)
    + mono(2, m=4)
)
P_MINUS2 = (
    mono(1, m=2, x=2)
    + mono(1, m=4, x=1) + mono(-1, m=2, x=1) + mono(1, x=1)
    + mono(1, m=2)
)


def test_monomial_order_is_lexicographic():
    ms = [Monomial(1, 0, 0), Monomial(0, 2, 0), Monomial(0, 0, 3), Monomial(0, 2, -1)]
    assert sorted(ms) == [
        Monomial(0, 0, 3),
        Monomial(0, 2, -1),
        Monomial(0, 2, 0),
        Monomial(1, 0, 0),
    ]


def test_constructor_canonicalizes():
    assert LaurentPoly({(0, 0, 0): 0}) == ZERO
    assert LaurentPoly([((1, 0, 0), 2), ((1, 0, 0), -2)]) == ZERO
    assert LaurentPoly({(0, 1, 0): 3}) == mono(3, m=1)


def test_constructor_rejects_non_integers():
    with pytest.raises(TypeError):
        LaurentPoly({(0, 0, 0): 1.5})
    with pytest.raises(TypeError):
        LaurentPoly({(0, 0.5, 0): 1})
    with pytest.raises(TypeError):
        LaurentPoly({(0, 0, 0): True})


def test_add_examples():
    assert mono(1, m=2) + mono(1, x=1) + mono(-1, x=1) == mono(1, m=2)
    p = mono(3, l=1, m=-2) + mono(1, x=2)
    assert p + ZERO == p
    assert ONE + ONE == mono(2)


def test_mul_examples():
    lhs = (ONE + mono(1, l=1, m=1)) * (ONE - mono(1, l=1, m=1))
    assert lhs == ONE - mono(1, l=2, m=2)
    assert mono(1, m=-2) * mono(1, m=2) == ONE


def test_mul_matches_oracle_on_recursion_step():
    lhs = as_dict(Q_CUBIC * P_PLUS2 - mono(1, m=8))
    rhs = naive_add(naive_mul(as_dict(Q_CUBIC), as_dict(P_PLUS2)),
                    naive_neg({(0, 8, 0): 1}))
    assert lhs == rhs


def test_square_of_base_matches_hand_expansion():
    base = mono(1, m=2) + mono(1, m=-2) + mono(1, x=1) - 1
    expected = {
        (0, 4, 0): 1,
        (0, -4, 0): 1,
        (0, 0, 2): 1,
        (0, 0, 0): 3,
        (0, 2, 1): 2,
        (0, 2, 0): -2,
        (0, -2, 1): 2,
        (0, -2, 0): -2,
        (0, 0, 1): -2,
    }
    assert as_dict(base**2) == expected
    assert as_dict(base**2) == naive_pow(as_dict(base), 2)
    assert len(base**2) == 9


def test_pow_examples():
    x = mono(1, x=1)
    assert x**2 == mono(1, x=2)
    p = mono(2, l=1) + mono(-1, m=-1)
    assert p**0 == ONE
    assert p**3 == p * p * p


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        (ONE + mono(1, x=1)) ** -1


@given(p=polys, q=polys)
def test_add_and_mul_match_naive_oracle(p, q):
    assert as_dict(p + q) == naive_add(as_dict(p), as_dict(q))
    assert as_dict(p * q) == naive_mul(as_dict(p), as_dict(q))


@given(p=polys, q=polys, r=polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(p=polys, q=polys)
def test_canonical_form_has_no_zero_terms_and_is_sorted(p, q):
    product = p * q
    assert all(c != 0 for _, c in product.terms())
    keys = [m for m, _ in product.terms()]
    assert keys == sorted(keys)


def test_int_coercion():
    p = mono(1, m=2)
    assert p - 1 == mono(1, m=2) + mono(-1)
    assert 1 - p == mono(1) + mono(-1, m=2)
    assert 2 * p == mono(2, m=2)
    assert p * 0 == ZERO


def test_coeff_examples():
    p = ONE + mono(1, l=1, m=4)
    assert p.coeff("L", 1) == mono(1, m=4)
    assert p.coeff("L", 0) == ONE
    assert p.coeff("L", 2) == ZERO
    assert P_PLUS2.coeff("x", 3) == mono(-1, m=4)


@given(p=polys)
def test_coeff_reconstructs_polynomial(p):
    assume(not p.is_zero())
    for var, kw in (("L", "l"), ("M", "m"), ("x", "x")):
        total = ZERO
        for k in range(p.min_exp(var), p.degree(var) + 1):
            total = total + p.coeff(var, k) * mono(1, **{kw: k})
        assert total == p


def test_substitute_examples():
    num = ONE + mono(1, l=1, m=6)
    den = mono(1, m=2) + mono(1, l=1)
    r = RationalExpr(num, den)
    assert mono(1, x=1).substitute("x", r, 1) == num
    assert ONE.substitute("x", r, 3) == den**3
    assert ZERO.substitute("x", r, 2) == ZERO


def test_substitute_rejects_bad_inputs():
    r = RationalExpr(ONE, mono(1, m=2))
    with pytest.raises(ValueError):
        mono(1, x=-1).substitute("x", r, 2)
    with pytest.raises(ValueError):
        mono(1, x=3).substitute("x", r, 2)
    with pytest.raises(ValueError):
        mono(1, x=1).substitute("x", r, -1)
    with pytest.raises(ValueError):
        mono(1, x=1).substitute("y", r, 1)


def test_rational_expr_rejects_zero_denominator():
    with pytest.raises(ValueError):
        RationalExpr(ONE, ZERO)


@given(p=polys_x_nonneg, num=polys, den=polys, extra=st.integers(0, 2))
def test_substitute_matches_brute_force(p, num, den, extra):
    assume(not den.is_zero())
    degree = 0 if p.is_zero() else p.degree("x")
    clear = degree + extra
    lhs = as_dict(p.substitute("x", RationalExpr(num, den), clear))
    rhs: dict = {}
    for k in range(degree + 1):
        part = naive_mul(as_dict(p.coeff("x", k)), naive_pow(as_dict(num), k))
        part = naive_mul(part, naive_pow(as_dict(den), clear - k))
        rhs = naive_add(rhs, part)
    assert lhs == rhs


def test_normalize_unit_examples():
    p = mono(1, m=-2) + mono(1, l=1)  # M^-2 * (1 + L*M^2)
    q, unit, sign = p.normalize_unit()
    assert (q, unit, sign) == (ONE + mono(1, l=1, m=2), Monomial(0, -2, 0), 1)

    q, unit, sign = mono(-1, m=4, x=1).normalize_unit()
    assert (q, unit, sign) == (ONE, Monomial(0, 4, 1), -1)

    with pytest.raises(ValueError):
        ZERO.normalize_unit()


@given(p=polys)
def test_normalize_unit_reconstructs_and_is_idempotent(p):
    assume(not p.is_zero())
    q, unit, sign = p.normalize_unit()
    assert mono(sign, l=unit.expL, m=unit.expM, x=unit.expX) * q == p
    assert q.min_exp("L") == 0 and q.min_exp("M") == 0 and q.min_exp("x") == 0
    again, unit2, sign2 = q.normalize_unit()
    assert (again, unit2, sign2) == (q, UNIT_MONOMIAL, 1)


def test_eval_examples():
    assert P_MINUS2.eval_numeric({"x": 1, "M": 1}) == pytest.approx(3)
    assert Q_CUBIC.eval_numeric({"x": 0, "M": 1}) == pytest.approx(2)
    assert ONE.eval_numeric({}) == 1
    assert ZERO.eval_numeric({}) == 0


def test_eval_error_cases():
    p = mono(1, m=-2) + mono(1, x=1)
    with pytest.raises(ZeroDivisionError):
        p.eval_numeric({"M": 0, "x": 1})
    with pytest.raises(KeyError):
        p.eval_numeric({"M": 2})
    # unused variables may be omitted entirely
    assert mono(1, m=2).eval_numeric({"M": 2}) == pytest.approx(4)


def _term_magnitude_sum(p, assign):
    total = 0.0
    for m, c in p.terms():
        total += (
            abs(c)
            * abs(assign["L"]) ** m.expL
            * abs(assign["M"]) ** m.expM
            * abs(assign["x"]) ** m.expX
        )
    return total


@given(p=polys, q=polys, assign=assignments)
def test_eval_is_multiplicative(p, q, assign):
    lhs = (p * q).eval_numeric(assign)
    rhs = p.eval_numeric(assign) * q.eval_numeric(assign)
    scale = max(1.0, _term_magnitude_sum(p, assign) * _term_magnitude_sum(q, assign))
    assert abs(lhs - rhs) <= 1e-10 * scale


def test_json_fixed_strings():
    assert ONE.to_json() == '{"terms":[{"l":0,"m":0,"x":0,"c":"1"}]}'
    assert mono(1, m=-2).to_json() == '{"terms":[{"l":0,"m":-2,"x":0,"c":"1"}]}'
    assert ZERO.to_json() == '{"terms":[]}'


@given(p=polys)
def test_json_round_trip(p):
    text = p.to_json()
    back = LaurentPoly.from_json(text)
    assert back == p
    assert back.to_json() == text


@pytest.mark.parametrize(
    "payload",
    [
        '{"terms":[{"l":0,"m":0,"x":0,"c":"1"},{"l":0,"m":0,"x":0,"c":"2"}]}',
        '{"terms":[{"l":0,"m":0,"x":0,"c":"0"}]}',
        '{"terms":[{"l":0.5,"m":0,"x":0,"c":"1"}]}',
        '{"terms":[{"l":true,"m":0,"x":0,"c":"1"}]}',
        '{"terms":[{"l":0,"m":0,"x":0,"c":"1.5"}]}',
        '{"terms":[{"l":0,"m":0,"x":0,"c":1}]}',
        '{"terms":[{"l":0,"m":0,"c":"1"}]}',
        '{"terms":[{"l":0,"m":0,"x":0,"c":"1","extra":0}]}',
        '{"terms":{}}',
        '{"poly":[]}',
        '[1,2]',
        'not json',
    ],
)
def test_json_parse_rejects_malformed(payload):
    with pytest.raises(ValueError):
        LaurentPoly.from_json(payload)


def test_text_and_latex_fixed_strings():
    p = (
        mono(1, l=2, m=4) + mono(-1, l=1, m=8) + mono(1, l=1, m=6)
        + mono(2, l=1, m=4) + mono(1, l=1, m=2) + mono(-1, l=1) + mono(1, m=4)
    )
    assert p.to_text() == "L^2*M^4 - L*M^8 + L*M^6 + 2*L*M^4 + L*M^2 - L + M^4"
    assert p.to_latex() == "L^{2} M^{4} - L M^{8} + L M^{6} + 2 L M^{4} + L M^{2} - L + M^{4}"
    assert ZERO.to_text() == "0"
    assert LaurentPoly.from_text("0") == ZERO
    assert mono(-3, m=-2).to_text() == "-3*M^-2"
    assert mono(-3, m=-2).to_latex() == "-3 M^{-2}"


@given(p=polys)
def test_text_and_latex_round_trip(p):
    assert LaurentPoly.from_text(p.to_text()) == p
    assert LaurentPoly.from_latex(p.to_latex()) == p


@pytest.mark.parametrize("text", ["", "L +", "2**L", "L^", "y^2", "3*L 4", "1..2"])
def test_text_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        LaurentPoly.from_text(text)
