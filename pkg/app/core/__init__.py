# Core module - config, exceptions, logging
from app.core.config import settings, get_settings
from app.core.exceptions import (
    BudgetExceededError,
    MalformedInputError,
    NotAdmissibleError,
    NotPythagoreanError,
    PreconditionError,
    PythParamError,
)
