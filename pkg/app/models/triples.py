"""
Value types of the parametrization

All types are frozen dataclasses that check their invariant on
construction and raise the matching PreconditionError subclass.
"""
from dataclasses import astuple, dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from app.core.exceptions import NotAdmissibleError, NotPythagoreanError, PreconditionError
from app.models.enums import TripleForm


def _require_int(name: str, value: object) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise PreconditionError(f"{name} must be an integer, got {value!r}", bound=name)


@dataclass(frozen=True, eq=False)
class PythTriple:
    """Integer triple with x^2 + y^2 = z^2; zero and negative entries allowed"""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            _require_int(name, getattr(self, name))
        if self.x * self.x + self.y * self.y != self.z * self.z:
            raise NotPythagoreanError(self.x, self.y, self.z)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def is_positive(self) -> bool:
        return self.x > 0 and self.y > 0 and self.z > 0

    def scaled(self, factor: int) -> "PythTriple":
        return PythTriple(factor * self.x, factor * self.y, factor * self.z)

    # positive and plain triples with the same coordinates are equal
    def __eq__(self, other: object) -> bool:
        if isinstance(other, PythTriple):
            return self.as_tuple() == other.as_tuple()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


@dataclass(frozen=True, eq=False)
class PositivePythTriple(PythTriple):
    """Pythagorean triple with all three coordinates >= 1"""

    def __post_init__(self) -> None:
        super().__post_init__()
        for name in ("x", "y", "z"):
            if getattr(self, name) <= 0:
                raise PreconditionError(
                    f"{name} must be >= 1 in a positive triple", bound=name
                )

    @classmethod
    def from_triple(cls, triple: PythTriple) -> "PositivePythTriple":
        return cls(triple.x, triple.y, triple.z)


@dataclass(frozen=True)
class ParamPoint4:
    """Argument (x, y, z, w) of the four-variable parametrization"""

    x: int
    y: int
    z: int
    w: int

    def __post_init__(self) -> None:
        for name in ("x", "y", "z", "w"):
            _require_int(name, getattr(self, name))

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return astuple(self)

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z}, {self.w})"


@dataclass(frozen=True)
class PositiveParams:
    """Argument (x, y, z, w) of the positive parametrization: x, y, z >= 1, w >= 0"""

    x: int
    y: int
    z: int
    w: int

    def __post_init__(self) -> None:
        for name in ("x", "y", "z", "w"):
            _require_int(name, getattr(self, name))
        for name in ("x", "y", "z"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be >= 1", bound=name)
        if self.w < 0:
            raise PreconditionError("w must be >= 0", bound="w")

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return astuple(self)

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z}, {self.w})"


@dataclass(frozen=True)
class AdmissibleABC:
    """(a, b, c) with c even or a = b mod 2: exactly where T(a, b, c) is integral"""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            _require_int(name, getattr(self, name))
        if self.c % 2 != 0 and (self.a - self.b) % 2 != 0:
            raise NotAdmissibleError(self.a, self.b, self.c)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class RationalTriple:
    """Rational solution of x^2 + y^2 = z^2"""

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self) -> None:
        if self.x * self.x + self.y * self.y != self.z * self.z:
            raise PreconditionError(f"not a rational solution: ({self.x}, {self.y}, {self.z})")

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in (self.x, self.y, self.z))

    def to_integer_triple(self) -> PythTriple:
        if not self.is_integral():
            raise PreconditionError(f"triple ({self.x}, {self.y}, {self.z}) is not integral")
        return PythTriple(int(self.x), int(self.y), int(self.z))


@dataclass(frozen=True)
class PrimitiveDecomposition:
    """triple = sign * scale * primitive, gcd(primitive) = 1, primitive.z > 0"""

    sign: int
    scale: int
    primitive: PythTriple

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise PreconditionError(f"sign must be +1 or -1, got {self.sign}", bound="sign")
        if self.scale < 1:
            raise PreconditionError(f"scale must be >= 1, got {self.scale}", bound="scale")
        if self.primitive.z <= 0:
            raise PreconditionError("primitive triple needs z > 0", bound="z")

    def recompose(self) -> PythTriple:
        return self.primitive.scaled(self.sign * self.scale)


@dataclass(frozen=True)
class EuclidParams:
    """(a, b) with t1(a, b) or t2(a, b) equal to a primitive triple"""

    a: int
    b: int
    form: TripleForm


@dataclass(frozen=True)
class FourSquares:
    """w1^2 + w2^2 + w3^2 + w4^2 = target"""

    w1: int
    w2: int
    w3: int
    w4: int
    target: int

    def __post_init__(self) -> None:
        if self.w1 ** 2 + self.w2 ** 2 + self.w3 ** 2 + self.w4 ** 2 != self.target:
            raise PreconditionError(f"squares do not sum to {self.target}")

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.w1, self.w2, self.w3, self.w4)

    def __str__(self) -> str:
        return f"({self.w1}, {self.w2}, {self.w3}, {self.w4})"


@dataclass(frozen=True)
class SixteenParams:
    """Integer arguments of the 16-parameter positive parametrization"""

    ws: Tuple[int, int, int, int]
    xs: Tuple[int, int, int, int]
    ys: Tuple[int, int, int, int]
    zs: Tuple[int, int, int, int]

    def __post_init__(self) -> None:
        for name in ("ws", "xs", "ys", "zs"):
            values = tuple(getattr(self, name))
            object.__setattr__(self, name, values)
            if len(values) != 4:
                raise PreconditionError(f"{name} needs exactly 4 integers", bound=name)
            for v in values:
                _require_int(name, v)

    @classmethod
    def from_flat(cls, values: Sequence[int]) -> "SixteenParams":
        if len(values) != 16:
            raise PreconditionError(f"expected 16 integers, got {len(values)}")
        values = tuple(values)
        return cls(values[0:4], values[4:8], values[8:12], values[12:16])

    def flat(self) -> Tuple[int, ...]:
        return self.ws + self.xs + self.ys + self.zs

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.flat()) + ")"
