"""
Exception hierarchy

Verification failures are report data, not exceptions. Everything raised
here is either bad input or a refused (over-budget) computation.
"""
from typing import Optional


class PythParamError(Exception):
    """Root of all PythParam errors"""


class MalformedInputError(PythParamError, ValueError):
    """Arity or length mismatch, unparsable polynomial text"""


class PreconditionError(PythParamError, ValueError):
    """A domain precondition does not hold"""

    def __init__(self, message: str, bound: Optional[str] = None):
        super().__init__(message)
        self.bound = bound


class NotPythagoreanError(PreconditionError):
    """Input triple does not satisfy x^2 + y^2 = z^2"""

    def __init__(self, x: int, y: int, z: int):
        super().__init__(f"not a Pythagorean triple: ({x}, {y}, {z})")
        self.triple = (x, y, z)


class NotAdmissibleError(PreconditionError):
    """(a, b, c) has c odd and a, b of different parity"""

    def __init__(self, a: int, b: int, c: int):
        super().__init__(
            f"not admissible: ({a}, {b}, {c}) needs c even or a = b mod 2"
        )
        self.abc = (a, b, c)


class BudgetExceededError(PythParamError):
    """A configured budget refuses the requested computation"""

    def __init__(self, budget: str, requested: int, limit: int):
        super().__init__(f"{budget} budget exceeded: {requested} > {limit}")
        self.budget = budget
        self.requested = requested
        self.limit = limit
