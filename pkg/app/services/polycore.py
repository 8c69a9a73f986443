"""
Polynomial core: exact arithmetic, integer-valuedness, text format

The arithmetic lives on app.models.polynomial.Polynomial; the functions
here are the operation surface the rest of the package calls, plus the
decision procedure for integer-valued polynomials and the textual
polynomial format used by the CLI and the golden tests.
"""
import itertools
import logging
import math
import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, MalformedInputError
from app.models.polynomial import Monomial, Polynomial, Scalar

logger = logging.getLogger(__name__)


# ============================================
# Arithmetic
# ============================================
def _same_arity(p: Polynomial, q: Polynomial) -> None:
    if p.arity != q.arity:
        raise MalformedInputError(f"arity mismatch: {p.arity} vs {q.arity}")


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    _same_arity(p, q)
    return p + q


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    _same_arity(p, q)
    return p - q


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _same_arity(p, q)
    return p * q


def poly_scale(p: Polynomial, factor: Scalar) -> Polynomial:
    return p.scale(factor)


def poly_pow(p: Polynomial, exponent: int) -> Polynomial:
    return p ** exponent


def poly_const(arity: int, value: Scalar) -> Polynomial:
    return Polynomial.constant(arity, value)


def poly_var(arity: int, index: int) -> Polynomial:
    return Polynomial.variable(arity, index)


def poly_eval(p: Polynomial, point: Sequence[int]) -> Fraction:
    """Exact value of p at an integer point"""
    return p.evaluate(point)


def degree(p: Polynomial) -> int:
    return p.degree()


def poly_compose(p: Polynomial, subs: Sequence[Polynomial]) -> Polynomial:
    """
    Substitute subs[i] for variable i of p.

    All substitutes share one arity m, which becomes the result's arity.
    """
    if len(subs) != p.arity:
        raise MalformedInputError(
            f"need {p.arity} substitutes, got {len(subs)}"
        )
    if not subs:
        raise MalformedInputError("no substitutes given")
    target = subs[0].arity
    for sub in subs[1:]:
        if sub.arity != target:
            raise MalformedInputError(f"substitutes mix arities {target} and {sub.arity}")

    powers: Dict[Tuple[int, int], Polynomial] = {}
    result = Polynomial.zero(target)
    for mono, coeff in p.terms.items():
        term = Polynomial.constant(target, coeff)
        for i, e in enumerate(mono):
            if not e:
                continue
            key = (i, e)
            if key not in powers:
                powers[key] = subs[i] ** e
            term = term * powers[key]
        result = result + term
    return result


# ============================================
# Integer-valuedness
# ============================================
def denominator_lcm(p: Polynomial) -> int:
    """Least d >= 1 with d * p having integer coefficients"""
    d = 1
    for coeff in p.terms.values():
        d = math.lcm(d, coeff.denominator)
    return d


def integer_valued_witness(
    p: Polynomial, residue_budget: Optional[int] = None
) -> Optional[Tuple[int, ...]]:
    """
    First point of {0..d-1}^arity where p is not an integer, or None.

    With g = d * p integral, g(a) mod d depends only on a mod d, so the
    residue box decides integer-valuedness on all of Z^arity.
    """
    budget = residue_budget if residue_budget is not None else settings.RESIDUE_BOX_BUDGET
    d = denominator_lcm(p)
    if d == 1:
        return None
    box = d ** p.arity
    if box > budget:
        raise BudgetExceededError("residue-box", box, budget)

    scaled = [(mono, int(coeff * d)) for mono, coeff in p.terms.items()]
    logger.debug(f"Residue check: d={d}, arity={p.arity}, {box} points, {len(scaled)} terms")
    for point in itertools.product(range(d), repeat=p.arity):
        total = 0
        for mono, coeff in scaled:
            value = coeff
            for a, e in zip(point, mono):
                if e:
                    value = value * pow(a, e, d)
            total += value
        if total % d:
            return point
    return None


def is_integer_valued(p: Polynomial, residue_budget: Optional[int] = None) -> bool:
    return integer_valued_witness(p, residue_budget) is None


# ============================================
# Falling factorials and binomial polynomials
# ============================================
def _check_k(k: int, budget: Optional[int]) -> None:
    limit = budget if budget is not None else settings.FALLING_FACTORIAL_BUDGET
    if not isinstance(k, int) or k < 1:
        raise MalformedInputError(f"k must be a positive integer, got {k!r}")
    if k > limit:
        raise BudgetExceededError("falling-factorial", k, limit)


def falling_factorial(k: int) -> Polynomial:
    """x(x-1)...(x-k+1) as a product of linear factors"""
    x = Polynomial.variable(1, 0)
    result = Polynomial.constant(1, 1)
    for i in range(k):
        result = result * (x - i)
    return result


def stirling_first(k: int) -> List[int]:
    """Signed Stirling numbers s(k, j) for j = 0..k"""
    row = [1]
    for n in range(k):
        nxt = [0] * (len(row) + 1)
        for j, s in enumerate(row):
            nxt[j + 1] += s
            nxt[j] -= n * s
        row = nxt
    return row


def binomial_poly(k: int) -> Polynomial:
    """C(x, k) expanded through the Stirling numbers, independent of the product"""
    kfact = math.factorial(k)
    return Polynomial(
        1, {(j,): Fraction(s, kfact) for j, s in enumerate(stirling_first(k)) if s}
    )


def falling_factorial_identity(k: int, budget: Optional[int] = None) -> bool:
    """x(x-1)...(x-k+1) == k! * C(x, k) as canonical polynomials"""
    _check_k(k, budget)
    return falling_factorial(k) == binomial_poly(k).scale(math.factorial(k))


# ============================================
# Text format
# ============================================
def default_names(arity: int) -> List[str]:
    return [f"x{i + 1}" for i in range(arity)]


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return " * ".join(factors)


def format_poly(p: Polynomial, names: Optional[Sequence[str]] = None) -> str:
    """
    Canonical text: terms in descending graded lex order, each written as
    `c * x^e * ...` with c a reduced rational; the zero polynomial is `0`.
    """
    names = list(names) if names is not None else default_names(p.arity)
    if len(names) != p.arity:
        raise MalformedInputError(f"need {p.arity} variable names, got {len(names)}")
    if p.is_zero():
        return "0"

    out = []
    for i, (mono, coeff) in enumerate(p.sorted_terms()):
        body = _format_rational(abs(coeff))
        vars_part = _format_monomial(mono, names)
        if vars_part:
            body = f"{body} * {vars_part}"
        if i == 0:
            out.append(f"-{body}" if coeff < 0 else body)
        else:
            out.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> List[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match or match.end() == pos:
            raise MalformedInputError(f"unexpected character at offset {pos}: {text[pos:pos + 10]!r}")
        tokens.append(match.group(match.lastindex))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent over + - * / ^ ( ) with rational constants"""

    def __init__(self, text: str, names: Sequence[str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.arity = len(names)
        self.variables = {
            name: Polynomial.variable(self.arity, i) for i, name in enumerate(names)
        }

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise MalformedInputError("unexpected end of polynomial text")
        self.pos += 1
        return token

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise MalformedInputError("empty polynomial text")
        result = self.expr()
        if self.peek() is not None:
            raise MalformedInputError(f"unexpected token {self.peek()!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op == "*":
                result = result * rhs
            else:
                if rhs.degree() > 0:
                    raise MalformedInputError("division is only allowed by constants")
                if rhs.is_zero():
                    raise MalformedInputError("division by zero")
                result = result / rhs.terms[(0,) * self.arity]
        return result

    def factor(self) -> Polynomial:
        if self.peek() in ("-", "+"):
            op = self.take()
            operand = self.factor()
            return -operand if op == "-" else operand
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            exponent = self.take()
            if not exponent.isdigit():
                raise MalformedInputError(f"exponent must be a non-negative integer, got {exponent!r}")
            base = base ** int(exponent)
        return base

    def atom(self) -> Polynomial:
        token = self.take()
        if token.isdigit():
            return Polynomial.constant(self.arity, int(token))
        if token == "(":
            inner = self.expr()
            if self.take() != ")":
                raise MalformedInputError("missing closing parenthesis")
            return inner
        if token in self.variables:
            return self.variables[token]
        raise MalformedInputError(f"unknown symbol {token!r}")


def parse_poly(text: str, names: Sequence[str]) -> Polynomial:
    """Parse the text format (and general +, -, *, /const, ^, parentheses)"""
    if not names:
        raise MalformedInputError("at least one variable name is required")
    return _Parser(text, names).parse()
