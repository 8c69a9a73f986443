"""
Enums for domain models
"""
import enum


class TripleForm(str, enum.Enum):
    """Which classical form a primitive triple was recovered from"""
    T1 = "T1"    # (a^2 - b^2, 2ab, a^2 + b^2)
    T2 = "T2"    # (2ab, a^2 - b^2, a^2 + b^2)


class VerificationMode(str, enum.Enum):
    """Kind of verification run"""
    SURJECTIVITY = "surjectivity"
    IMAGE_BOX = "image-box"
    SYMBOLIC = "symbolic"
    POSITIVE_SURJECTIVITY = "positive-surjectivity"
    CLASSICAL = "classical"
    FALLING_FACTORIAL = "falling-factorial"


class OutputFormat(str, enum.Enum):
    """CLI output format"""
    HUMAN = "human"
    STRUCTURED = "structured"   # newline-delimited JSON records


class TableFormat(str, enum.Enum):
    """Record layout for enumerate"""
    TUPLE = "tuple"     # (x, y, z)
    CSV = "csv"         # x,y,z
