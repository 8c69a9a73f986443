"""
Exact integer helpers
"""
import math
from functools import reduce
from typing import Iterable, Optional


def exact_sqrt(n: int) -> Optional[int]:
    """Non-negative integer root of n if n is a perfect square, else None"""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, (abs(v) for v in values), 0)


def sign(n: int) -> int:
    return (n > 0) - (n < 0)
