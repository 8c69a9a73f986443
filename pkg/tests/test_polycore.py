import itertools
import math
from fractions import Fraction

import pytest
import sympy

from app.core.exceptions import BudgetExceededError, MalformedInputError
from app.models.polynomial import Polynomial
from app.services.param_service import build_symbolic_F
from app.services.polycore import (
    binomial_poly,
    denominator_lcm,
    falling_factorial,
    falling_factorial_identity,
    format_poly,
    integer_valued_witness,
    is_integer_valued,
    parse_poly,
    poly_add,
    poly_compose,
    poly_const,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_pow,
    poly_scale,
    poly_sub,
    poly_var,
    stirling_first,
)
from tests.conftest import random_poly

X = Polynomial.variable(1, 0)
x2, y2 = Polynomial.variables(2)


def to_sympy(p: Polynomial, symbols):
    expr = sympy.Integer(0)
    for mono, coeff in p.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for sym, e in zip(symbols, mono):
            term *= sym ** e
        expr += term
    return expr


def from_sympy(expr, symbols) -> dict:
    poly = sympy.Poly(sympy.expand(expr), *symbols)
    return {
        tuple(m): Fraction(int(c.p), int(c.q))
        for m, c in poly.as_dict().items()
        if c != 0
    }


# ============================================
# poly_add / poly_mul / poly_eval examples
# ============================================
def test_add_inverse_is_zero():
    assert poly_add(X, -X).is_zero()


def test_add_disjoint_support():
    assert poly_add(X ** 2 + 1, X) == X ** 2 + X + 1


def test_add_halves_reduce_to_integer():
    half = X.scale(Fraction(1, 2))
    total = poly_add(half, half)
    assert total == X
    assert total.terms[(1,)].denominator == 1


def test_mul_difference_of_squares():
    assert poly_mul(x2 + y2, x2 - y2) == x2 ** 2 - y2 ** 2


def test_mul_by_zero():
    assert poly_mul(x2 * y2 + 3, Polynomial.zero(2)).is_zero()


def test_mul_binomial():
    assert poly_mul(X + 1, X + 1) == X ** 2 + 2 * X + 1


@pytest.mark.parametrize(
    "op", [poly_add, poly_mul], ids=["add", "mul"]
)
def test_arity_mismatch_rejected(op):
    with pytest.raises(MalformedInputError):
        op(X, x2)


def test_eval_examples():
    assert poly_eval(x2 ** 2 + y2 ** 2, [3, 4]) == 25
    assert poly_eval(X / 2, [3]) == Fraction(3, 2)
    assert poly_eval(Polynomial.zero(3), [7, -1, 2]) == 0


def test_eval_length_mismatch():
    with pytest.raises(MalformedInputError):
        poly_eval(x2 + y2, [1, 2, 3])


def test_derived_operations():
    y = poly_var(2, 1)
    assert poly_sub(x2, y) == x2 - y2
    assert poly_neg(poly_const(2, 3)) == -3
    assert poly_scale(x2 + y, Fraction(2, 3)) == (2 * x2 + 2 * y2) / 3
    assert poly_pow(x2 - y, 3) == x2 ** 3 - 3 * x2 ** 2 * y2 + 3 * x2 * y2 ** 2 - y2 ** 3
    assert poly_pow(x2, 0) == 1


def test_zero_polynomial_degree():
    assert Polynomial.zero(2).degree() == -1
    assert (x2 ** 3 * y2).degree() == 4


def test_terms_never_hold_zero():
    p = Polynomial(2, {(1, 0): 3, (0, 1): 0})
    assert dict(p.terms) == {(1, 0): Fraction(3)}


# ============================================
# Ring axioms and evaluation homomorphism
# ============================================
@pytest.mark.parametrize("arity", [1, 2, 3, 4])
def test_ring_axioms(rng, arity):
    for _ in range(25):
        p, q, r = (random_poly(rng, arity) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


@pytest.mark.parametrize("arity", [1, 2, 4])
def test_eval_is_homomorphism(rng, arity):
    for _ in range(25):
        p, q = random_poly(rng, arity), random_poly(rng, arity)
        point = [rng.randint(-6, 6) for _ in range(arity)]
        assert poly_eval(p * q, point) == poly_eval(p, point) * poly_eval(q, point)
        assert poly_eval(p + q, point) == poly_eval(p, point) + poly_eval(q, point)


@pytest.mark.parametrize("arity", [1, 2, 3])
def test_mul_agrees_with_sympy(rng, arity):
    symbols = sympy.symbols(f"s0:{arity}")
    for _ in range(15):
        p, q = random_poly(rng, arity), random_poly(rng, arity)
        expected = from_sympy(to_sympy(p, symbols) * to_sympy(q, symbols), symbols)
        assert dict((p * q).terms) == expected


def test_compose_substitutes_variables():
    a, b = Polynomial.variables(2)
    p = Polynomial.variable(3, 0) * Polynomial.variable(3, 1) + Polynomial.variable(3, 2) ** 2
    assert poly_compose(p, [a + b, a - b, b]) == a ** 2


def test_compose_rejects_mixed_arity():
    with pytest.raises(MalformedInputError):
        poly_compose(x2 + y2, [X, x2])


# ============================================
# denominator_lcm / is_integer_valued
# ============================================
def test_denominator_lcm_examples():
    assert denominator_lcm(x2 / 2 + y2 / 3) == 6
    assert denominator_lcm(X ** 2 + 1) == 1
    f, _, _ = build_symbolic_F()
    assert denominator_lcm(f) == 2


def test_denominator_lcm_clears_denominators(rng):
    for _ in range(30):
        p = random_poly(rng, 3)
        assert denominator_lcm(p.scale(denominator_lcm(p))) == 1


def test_integer_valued_examples():
    assert is_integer_valued(X * (X - 1) / 2)
    assert not is_integer_valued(X / 2)
    assert integer_valued_witness(X / 2) == (1,)


def test_four_variable_triple_is_integer_valued():
    assert [is_integer_valued(p) for p in build_symbolic_F()] == [True, True, True]


def test_residue_budget_enforced():
    p = Polynomial(3, {(1, 1, 1): Fraction(1, 7)})
    with pytest.raises(BudgetExceededError):
        is_integer_valued(p, residue_budget=100)


def _brute_force_integer_valued(p: Polynomial) -> bool:
    d = denominator_lcm(p)
    box = range(-2 * d, 2 * d + 1)
    return all(poly_eval(p, point).denominator == 1 for point in itertools.product(box, repeat=p.arity))


@pytest.mark.parametrize("arity", [1, 2])
def test_integer_valued_matches_brute_force(rng, arity):
    candidates = [random_poly(rng, arity, max_degree=3, max_terms=3, max_den=4) for _ in range(20)]
    candidates += [binomial_poly(k) for k in range(1, 6)] if arity == 1 else [
        poly_compose(binomial_poly(2), [x2 + y2]),
        poly_compose(binomial_poly(3), [x2 - 2 * y2]) + x2 / 3,
    ]
    for p in candidates:
        if denominator_lcm(p) ** arity > 10 ** 4:
            continue
        assert is_integer_valued(p) == _brute_force_integer_valued(p)


# ============================================
# Falling factorial identity
# ============================================
@pytest.mark.parametrize("k", [1, 3, 10])
def test_falling_factorial_identity_examples(k):
    assert falling_factorial_identity(k)


def test_falling_factorial_k3_expansion():
    assert falling_factorial(3) == X ** 3 - 3 * X ** 2 + 2 * X
    assert falling_factorial(3) == binomial_poly(3).scale(6)


def test_falling_factorial_identity_up_to_20():
    assert all(falling_factorial_identity(k) for k in range(1, 21))


def test_falling_factorial_budget():
    with pytest.raises(BudgetExceededError):
        falling_factorial_identity(21)
    with pytest.raises(MalformedInputError):
        falling_factorial_identity(0)


@pytest.mark.parametrize("k", [1, 4, 8, 12])
def test_binomial_poly_agrees_with_sympy(k):
    s = sympy.Symbol("s")
    expected = from_sympy(sympy.expand_func(sympy.binomial(s, k)), [s])
    assert dict(binomial_poly(k).terms) == expected


def test_stirling_row():
    # x(x-1)(x-2)(x-3) = x^4 - 6x^3 + 11x^2 - 6x
    assert stirling_first(4) == [0, -6, 11, -6, 1]
    assert sum(abs(s) for s in stirling_first(7)) == math.factorial(7)


# ============================================
# Text format
# ============================================
def test_format_examples():
    assert format_poly(Polynomial.zero(2)) == "0"
    assert format_poly(x2 ** 2 / 2 - 3 * y2 + 1) == "1/2 * x1^2 - 3 * x2 + 1"
    assert format_poly(-x2 * y2, ["a", "b"]) == "-1 * a * b"


def test_format_uses_graded_lex_order():
    p = x2 + y2 ** 2 + x2 ** 2 + x2 * y2 + 1
    assert format_poly(p, ["x", "y"]) == "1 * x^2 + 1 * x * y + 1 * y^2 + 1 * x + 1"


def test_parse_format_round_trip(rng):
    names = ["x", "y", "z", "w"]
    for _ in range(40):
        p = random_poly(rng, 4)
        text = format_poly(p, names)
        assert parse_poly(text, names) == p
        assert format_poly(parse_poly(text, names), names) == text


def test_parse_general_expressions():
    names = ["x", "y"]
    assert parse_poly("(x + y)^2 - 2*x*y", names) == x2 ** 2 + y2 ** 2
    assert parse_poly("x**2/4 - -y", names) == x2 ** 2 / 4 + y2
    assert parse_poly("3/6", names) == Polynomial.constant(2, Fraction(1, 2))


@pytest.mark.parametrize(
    "text",
    ["", "x +", "(x", "x / y", "x / 0", "x ^ y", "q + 1", "x $ 2"],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(MalformedInputError):
        parse_poly(text, ["x", "y"])


def test_constants_hash_like_their_scalar():
    three = Polynomial.constant(1, 3)
    half = Polynomial.constant(2, Fraction(1, 2))
    assert three == 3 and hash(three) == hash(3)
    assert three in {3}
    assert half in {Fraction(1, 2)}
    assert Polynomial.zero(3) in {0}
    assert X not in {3}
