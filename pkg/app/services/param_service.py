"""
Forward parametrization maps

Numeric maps work on Python ints with integer-only intermediates: the
halving in T is done with an exact-divisibility check, never through
rationals. Symbolic maps build the same triples as polynomials by
substituting the linear/quadratic parameter maps into T, so that the
displayed formulas (transcribed separately in displayed_F /
displayed_positive) can be compared against an independent construction.

    T(a, b, c)       = (c(a^2 - b^2)/2, cab, c(a^2 + b^2)/2)
    sigma(x,y,z,w)   = (y + zw, z - yw, 2x - xw)
    sigma+(x,y,z,w)  = (y + (1+w)z, y, x + (1-w)^2 x)
"""
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from app.core.exceptions import PreconditionError
from app.models.polynomial import Polynomial
from app.models.triples import (
    AdmissibleABC,
    ParamPoint4,
    PositiveParams,
    PositivePythTriple,
    PythTriple,
    RationalTriple,
)
from app.services.polycore import parse_poly, poly_compose

PolyTriple = Tuple[Polynomial, Polynomial, Polynomial]

PARAM_NAMES = ("x", "y", "z", "w")
ABC_NAMES = ("a", "b", "c")


# ============================================
# Classical forms
# ============================================
def t1(a: int, b: int) -> PythTriple:
    """(a^2 - b^2, 2ab, a^2 + b^2)"""
    return PythTriple(a * a - b * b, 2 * a * b, a * a + b * b)


def t2(a: int, b: int) -> PythTriple:
    """(2ab, a^2 - b^2, a^2 + b^2)"""
    return PythTriple(2 * a * b, a * a - b * b, a * a + b * b)


def classical_forms(a: int, b: int, c: int) -> Tuple[PythTriple, PythTriple]:
    """c * t1(a, b) and c * t2(a, b): the two integer-coefficient families"""
    return t1(a, b).scaled(c), t2(a, b).scaled(c)


# ============================================
# The T-map
# ============================================
def t_map(a: int, b: int, c: int) -> RationalTriple:
    return RationalTriple(
        Fraction(c * (a * a - b * b), 2),
        Fraction(c * a * b),
        Fraction(c * (a * a + b * b), 2),
    )


def _t_integral(a: int, b: int, c: int) -> Tuple[int, int, int]:
    # caller guarantees c even or a = b mod 2, so both halvings are exact
    x2 = c * (a * a - b * b)
    z2 = c * (a * a + b * b)
    if x2 & 1 or z2 & 1:
        raise PreconditionError(f"T({a}, {b}, {c}) is not integral")
    return x2 >> 1, c * a * b, z2 >> 1


def t_map_integral(abc: AdmissibleABC) -> PythTriple:
    return PythTriple(*_t_integral(abc.a, abc.b, abc.c))


# ============================================
# Parametrization of all Pythagorean triples
# ============================================
def sigma(point: ParamPoint4) -> AdmissibleABC:
    """(y + zw, z - yw, 2x - xw): w even gives c even, w odd gives a = b mod 2"""
    x, y, z, w = point.x, point.y, point.z, point.w
    return AdmissibleABC(y + z * w, z - y * w, 2 * x - x * w)


def eval_F_raw(x: int, y: int, z: int, w: int) -> Tuple[int, int, int]:
    """eval_F on bare ints, without building value objects; used by the sweeps"""
    a = y + z * w
    b = z - y * w
    c = 2 * x - x * w
    return _t_integral(a, b, c)


def eval_F(point: ParamPoint4) -> PythTriple:
    return t_map_integral(sigma(point))


# ============================================
# Parametrization of positive triples
# ============================================
def sigma_positive(x: int, y: int, z: int, w: int) -> AdmissibleABC:
    """
    (y + (1+w)z, y, x + (1-w)^2 x) for x, y, z >= 1 and w >= 0.

    Always a > b > 0 and c > 0. Admissible because for w even, 1 + (1-w)^2
    is even so c is even; for w odd, a - b = (1+w)z is even.
    """
    params = PositiveParams(x, y, z, w)
    return AdmissibleABC(
        params.y + (1 + params.w) * params.z,
        params.y,
        params.x + (1 - params.w) ** 2 * params.x,
    )


def eval_positive(x: int, y: int, z: int, w: int) -> PositivePythTriple:
    return PositivePythTriple.from_triple(t_map_integral(sigma_positive(x, y, z, w)))


def _sum_squares(values: Sequence[int], name: str) -> int:
    if len(values) != 4:
        raise PreconditionError(f"{name} needs exactly 4 integers, got {len(values)}", bound=name)
    return sum(v * v for v in values)


def eval_positive_16(
    ws: Sequence[int], xs: Sequence[int], ys: Sequence[int], zs: Sequence[int]
) -> PositivePythTriple:
    """Positive parametrization with 16 unconstrained integer parameters"""
    return eval_positive(
        _sum_squares(xs, "xs") + 1,
        _sum_squares(ys, "ys") + 1,
        _sum_squares(zs, "zs") + 1,
        _sum_squares(ws, "ws"),
    )


# ============================================
# Symbolic construction
# ============================================
@lru_cache(maxsize=None)
def symbolic_T() -> PolyTriple:
    """T as polynomials in (a, b, c)"""
    a, b, c = Polynomial.variables(3)
    return (
        c * (a ** 2 - b ** 2) / 2,
        c * a * b,
        c * (a ** 2 + b ** 2) / 2,
    )


def _substitute_into_T(subs: Sequence[Polynomial]) -> PolyTriple:
    f, g, h = (poly_compose(component, subs) for component in symbolic_T())
    return f, g, h


@lru_cache(maxsize=None)
def build_symbolic_F() -> PolyTriple:
    """(f, g, h) in Q[x, y, z, w] from sigma substituted into T"""
    x, y, z, w = Polynomial.variables(4)
    return _substitute_into_T([y + z * w, z - y * w, 2 * x - x * w])


@lru_cache(maxsize=None)
def build_symbolic_positive() -> PolyTriple:
    """The positive parametrization in Q[x, y, z, w], from sigma+ substituted into T"""
    x, y, z, w = Polynomial.variables(4)
    return _substitute_into_T([y + (1 + w) * z, y, x + (1 - w) ** 2 * x])


@lru_cache(maxsize=None)
def build_symbolic_classical() -> Tuple[PolyTriple, PolyTriple]:
    """c * t1(a, b) and c * t2(a, b) in Z[a, b, c]"""
    a, b, c = Polynomial.variables(3)
    first = (c * (a ** 2 - b ** 2), 2 * c * a * b, c * (a ** 2 + b ** 2))
    second = (first[1], first[0], first[2])
    return first, second


# Displayed formulas, transcribed verbatim for golden comparison.
DISPLAYED_F = (
    "((2*x - x*w)*((y + z*w)^2 - (z - y*w)^2))/2",
    "(2*x - x*w)*(y + z*w)*(z - y*w)",
    "((2*x - x*w)*((y + z*w)^2 + (z - y*w)^2))/2",
)

DISPLAYED_POSITIVE = (
    "((x + (1 - w)^2*x)*((y + (1 + w)*z)^2 - y^2))/2",
    "(x + (1 - w)^2*x)*(y + (1 + w)*z)*y",
    "((x + (1 - w)^2*x)*((y + (1 + w)*z)^2 + y^2))/2",
)


def displayed_F() -> PolyTriple:
    f, g, h = (parse_poly(text, PARAM_NAMES) for text in DISPLAYED_F)
    return f, g, h


def displayed_positive() -> PolyTriple:
    f, g, h = (parse_poly(text, PARAM_NAMES) for text in DISPLAYED_POSITIVE)
    return f, g, h
