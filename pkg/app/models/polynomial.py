"""
Exact multivariate polynomials over the rationals

A Polynomial is an immutable map from exponent vectors (monomials) to
nonzero Fractions, with a fixed number of variables. Every operation
returns a canonical result, so structural equality is polynomial equality.
"""
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from app.core.exceptions import MalformedInputError

# Coefficient domain: always stored reduced with a positive denominator.
ExactRational = Fraction
Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


def grlex_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """Graded lexicographic sort key: total degree first, then exponents"""
    return (sum(monomial), monomial)


class Polynomial:
    """Multivariate polynomial with Fraction coefficients and fixed arity"""

    __slots__ = ("_arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if not isinstance(arity, int) or arity < 1:
            raise MalformedInputError(f"arity must be a positive integer, got {arity!r}")
        clean: Dict[Monomial, Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            mono = tuple(exponents)
            if len(mono) != arity:
                raise MalformedInputError(
                    f"monomial {mono} has {len(mono)} exponents, arity is {arity}"
                )
            if any(not isinstance(e, int) or e < 0 for e in mono):
                raise MalformedInputError(f"exponents must be non-negative integers: {mono}")
            clean[mono] = clean.get(mono, Fraction(0)) + Fraction(coeff)
        self._arity = arity
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, arity: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # terms must already be validated; zero coefficients are dropped here
        poly = cls.__new__(cls)
        poly._arity = arity
        poly._terms = {m: c for m, c in terms.items() if c}
        poly._hash = None
        return poly

    # ============================================
    # Constructors
    # ============================================
    @classmethod
    def zero(cls, arity: int) -> "Polynomial":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value: Scalar) -> "Polynomial":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, arity: int, index: int) -> "Polynomial":
        """The polynomial x_index (0-based)"""
        if not 0 <= index < arity:
            raise MalformedInputError(f"variable index {index} out of range for arity {arity}")
        mono = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, {mono: 1})

    @classmethod
    def variables(cls, arity: int) -> List["Polynomial"]:
        return [cls.variable(arity, i) for i in range(arity)]

    # ============================================
    # Accessors
    # ============================================
    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending graded lexicographic order"""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    # ============================================
    # Arithmetic
    # ============================================
    def _check_arity(self, other: "Polynomial") -> None:
        if other._arity != self._arity:
            raise MalformedInputError(
                f"arity mismatch: {self._arity} vs {other._arity}"
            )

    def _coerce(self, other: object) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            self._check_arity(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._arity, other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Polynomial._from_clean(self._arity, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_clean(self._arity, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial._from_clean(self._arity, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_arity(other)
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Polynomial._from_clean(self._arity, terms)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise MalformedInputError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = Polynomial.constant(self._arity, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ============================================
    # Evaluation
    # ============================================
    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a point with integer (or rational) coordinates"""
        if len(point) != self._arity:
            raise MalformedInputError(
                f"point has {len(point)} coordinates, arity is {self._arity}"
            )
        powers: List[Dict[int, Scalar]] = [{0: 1} for _ in range(self._arity)]
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value: Scalar = coeff
            for i, e in enumerate(mono):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        cache[e] = point[i] ** e
                    value = value * cache[e]
            total += value
        return total

    __call__ = evaluate

    # ============================================
    # Equality
    # ============================================
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._arity == other._arity and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self._arity, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            # constants compare equal to their scalar, so they hash like it
            if self.degree() <= 0:
                self._hash = hash(self._terms.get((0,) * self._arity, 0))
            else:
                self._hash = hash((self._arity, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from app.services.polycore import format_poly

        return f"Polynomial({self._arity}, {format_poly(self)!r})"
