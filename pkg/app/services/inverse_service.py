"""
Constructive preimages

Given any Pythagorean triple, produce parameters that map to it. The
parametrization is many-to-one; every function here returns one fixed
representative (w in {0, 1}, w = 0 whenever c is even).
"""
import math
from typing import Optional, Tuple

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, PreconditionError, PythParamError
from app.models.enums import TripleForm
from app.models.triples import (
    AdmissibleABC,
    EuclidParams,
    FourSquares,
    ParamPoint4,
    PositiveParams,
    PositivePythTriple,
    PrimitiveDecomposition,
    PythTriple,
    SixteenParams,
)
from app.services.arith import exact_sqrt, gcd_all, sign
from app.services.param_service import t1, t2


def primitive_decompose(t: PythTriple) -> PrimitiveDecomposition:
    """t = sign(z) * gcd(|x|, |y|, |z|) * primitive, primitive.z > 0"""
    if t.as_tuple() == (0, 0, 0):
        raise PreconditionError("the zero triple has no primitive decomposition")
    # nonzero triple forces z != 0
    s = sign(t.z)
    d = gcd_all(t.as_tuple())
    unit = s * d
    primitive = PythTriple(t.x // unit, t.y // unit, t.z // unit)
    return PrimitiveDecomposition(sign=s, scale=d, primitive=primitive)


def euclid_params(p: PythTriple) -> EuclidParams:
    """
    (a, b, form) with t1(a, b) = p (x odd) or t2(a, b) = p (x even).

    a is the non-negative root of (z + odd leg) / 2; b takes the sign of
    the even leg. A zero root (odd leg = -z) is the degenerate case and
    maps to (0, 1).
    """
    if p.z <= 0 or gcd_all(p.as_tuple()) != 1:
        raise PreconditionError(f"euclid_params needs a primitive triple with z > 0, got {p}")

    if p.x % 2:
        odd, even, form, build = p.x, p.y, TripleForm.T1, t1
    else:
        odd, even, form, build = p.y, p.x, TripleForm.T2, t2

    half = (p.z + odd) // 2
    if half == 0:
        a, b = 0, 1
    else:
        root = exact_sqrt(half)
        if root is None or even % (2 * root):
            raise PreconditionError(f"{p} is not of the form {form.value}")
        a, b = root, even // (2 * root)

    if build(a, b).as_tuple() != p.as_tuple():
        raise PreconditionError(f"{p} is not of the form {form.value}")
    return EuclidParams(a=a, b=b, form=form)


def admissible_abc(t: PythTriple) -> AdmissibleABC:
    """Admissible (a, b, c) with T(a, b, c) = t"""
    if t.as_tuple() == (0, 0, 0):
        return AdmissibleABC(0, 0, 0)
    decomposition = primitive_decompose(t)
    unit = decomposition.sign * decomposition.scale
    params = euclid_params(decomposition.primitive)
    if params.form is TripleForm.T1:
        return AdmissibleABC(params.a, params.b, 2 * unit)
    # 2 t2(p, q) = t1(p + q, p - q)
    return AdmissibleABC(params.a + params.b, params.a - params.b, unit)


def invert_sigma(abc: AdmissibleABC) -> ParamPoint4:
    """A point with sigma(point) = abc, taking w = 0 for c even and w = 1 otherwise"""
    a, b, c = abc.as_tuple()
    if c % 2 == 0:
        return ParamPoint4(c // 2, a, b, 0)
    return ParamPoint4(c, (a - b) // 2, (a + b) // 2, 1)


def preimage(t: PythTriple) -> ParamPoint4:
    """A point with eval_F(point) = t"""
    return invert_sigma(admissible_abc(t))


def four_square(n: int, budget: Optional[int] = None) -> FourSquares:
    """
    First (w1, w2, w3, w4) with sum of squares n, each coordinate tried
    from its largest feasible value downwards.
    """
    limit = budget if budget is not None else settings.FOUR_SQUARE_BUDGET
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}", bound="n")
    if n > limit:
        raise BudgetExceededError("four-square", n, limit)

    for w1 in range(math.isqrt(n), -1, -1):
        r1 = n - w1 * w1
        for w2 in range(math.isqrt(r1), -1, -1):
            r2 = r1 - w2 * w2
            for w3 in range(math.isqrt(r2), -1, -1):
                w4 = exact_sqrt(r2 - w3 * w3)
                if w4 is not None:
                    return FourSquares(w1, w2, w3, w4, target=n)
    # unreachable by Lagrange's four-square theorem
    raise PythParamError(f"no four-square decomposition found for {n}")


def _positive_abc(t: PositivePythTriple) -> Tuple[int, int, int]:
    a, b, c = admissible_abc(t).as_tuple()
    # positive legs give p > q > 0 in either form, hence a > b > 0 and c > 0
    if not (a > b > 0 and c > 0):
        raise PythParamError(f"unexpected non-positive parameters ({a}, {b}, {c}) for {t}")
    return a, b, c


def preimage_positive(t: PythTriple) -> PositiveParams:
    """(x, y, z, w) with x, y, z >= 1, w >= 0 and eval_positive(...) = t"""
    t = PositivePythTriple.from_triple(t)
    a, b, c = _positive_abc(t)
    if c % 2 == 0:
        return PositiveParams(x=c // 2, y=b, z=a - b, w=0)
    return PositiveParams(x=c, y=b, z=(a - b) // 2, w=1)


def preimage_positive_16(t: PythTriple, budget: Optional[int] = None) -> SixteenParams:
    """16 integers with eval_positive_16(...) = t"""
    params = preimage_positive(t)
    return SixteenParams(
        ws=four_square(params.w, budget).as_tuple(),
        xs=four_square(params.x - 1, budget).as_tuple(),
        ys=four_square(params.y - 1, budget).as_tuple(),
        zs=four_square(params.z - 1, budget).as_tuple(),
    )
