"""Runtime configuration.

Values come from environment variables (optionally loaded from a ``.env``
file) and are gathered into a frozen pydantic model. CLI options override
them per invocation.
"""

from __future__ import annotations

import os
from pathlib import Path

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

load_dotenv()

ENV_PREFIX = "ARRANGEMENT_LATTICE_"

PROJECT_ROOT = Path(__file__).parent.parent.parent
DEFAULT_SURVEY_PLAN = PROJECT_ROOT / "config" / "survey_plan.yaml"


class Settings(BaseModel):
    """Tunable knobs of the pipeline."""

    model_config = ConfigDict(frozen=True)

    log_level: str = Field("INFO", description="Root log level used by the CLI")
    coefficient_bound: int = Field(1000, ge=1, description="Bound on generated numerators and denominators")
    retry_budget: int = Field(10000, ge=1, description="Generator attempts before giving up")
    oracle_samples: int = Field(1000, ge=1, description="Random orientation assignments for the flip oracle")
    exhaustive_limit: int = Field(10, ge=0, description="Largest bounded-chamber count checked exhaustively")


def get_settings() -> Settings:
    """Read settings from the environment.

    Returns:
        Settings with environment overrides applied
    """
    overrides: dict[str, str] = {}
    for name in Settings.model_fields:
        value = os.getenv(f"{ENV_PREFIX}{name.upper()}")
        if value:
            overrides[name] = value
    return Settings.model_validate(overrides)


class SurveyCase(BaseModel):
    """One (N, p) entry of a survey plan."""

    n_lines: int = Field(..., ge=3)
    parallel_pairs: int = Field(0, ge=0)
    trials: int = Field(10, ge=1)


def load_survey_plan(path: Path | None = None) -> list[SurveyCase]:
    """Load survey cases from a YAML plan.

    Args:
        path: Plan file; defaults to ``config/survey_plan.yaml``

    Returns:
        Survey cases in file order

    Raises:
        FileNotFoundError: If the plan file does not exist
    """
    plan_path = path or DEFAULT_SURVEY_PLAN
    with plan_path.open(encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    return [SurveyCase.model_validate(case) for case in data.get("cases", [])]
