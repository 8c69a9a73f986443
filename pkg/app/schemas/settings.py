"""
Run configuration schemas
"""
from typing import Optional

from pydantic import BaseModel, PositiveInt

from app.core.config import Settings
from app.models.enums import OutputFormat


class Budgets(BaseModel):
    """Guardrails for exhaustive computations; all must be positive"""

    residue_box: PositiveInt
    four_square: PositiveInt
    enumerate: PositiveInt
    image_radius: PositiveInt
    falling_factorial: PositiveInt
    sweep_seconds: PositiveInt

    @classmethod
    def from_settings(cls, settings: Settings) -> "Budgets":
        return cls(
            residue_box=settings.RESIDUE_BOX_BUDGET,
            four_square=settings.FOUR_SQUARE_BUDGET,
            enumerate=settings.ENUMERATE_BUDGET,
            image_radius=settings.IMAGE_RADIUS_BUDGET,
            falling_factorial=settings.FALLING_FACTORIAL_BUDGET,
            sweep_seconds=settings.SWEEP_TIME_LIMIT_SECONDS,
        )


class CliConfig(BaseModel):
    """Resolved command line: subcommand, output format, worker count, budgets"""

    command: str
    output: OutputFormat = OutputFormat.HUMAN
    jobs: PositiveInt = 1
    include_timing: bool = True
    stride: Optional[PositiveInt] = None
    budgets: Budgets
