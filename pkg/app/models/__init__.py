"""
Domain models for PythParam
"""
from app.models.enums import OutputFormat, TableFormat, TripleForm, VerificationMode
from app.models.polynomial import ExactRational, Monomial, Polynomial, grlex_key
from app.models.triples import (
    AdmissibleABC,
    EuclidParams,
    FourSquares,
    ParamPoint4,
    PositiveParams,
    PositivePythTriple,
    PrimitiveDecomposition,
    PythTriple,
    RationalTriple,
    SixteenParams,
)

__all__ = [
    # Enums
    "TripleForm", "VerificationMode", "OutputFormat", "TableFormat",

    # Polynomials
    "ExactRational", "Monomial", "Polynomial", "grlex_key",

    # Triples and parameters
    "PythTriple", "PositivePythTriple", "ParamPoint4", "PositiveParams",
    "AdmissibleABC", "RationalTriple", "PrimitiveDecomposition",
    "EuclidParams", "FourSquares", "SixteenParams",
]
