"""
Run configuration

Values come from (lowest to highest precedence) the defaults below, a .env
file / process environment, and command-line flags.
"""

import logging
import os
from dataclasses import asdict, dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from .errors import ValidationError
from .polycore import format_rational, to_rational

logger = logging.getLogger(__name__)

ENV_PREFIX = "HYPERSIEVE_"


class OutputFormat(str, Enum):
    """Report rendering"""
    HUMAN = "human"
    JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    """Search and reporting knobs shared by every subcommand"""
    degree_budget: int = 8
    trials: int = 500
    seed: int = 0
    tol: Fraction = Fraction(1, 1024)
    output: OutputFormat = OutputFormat.HUMAN
    jobs: int = 1

    def validate(self) -> 'RunConfig':
        if self.degree_budget < 1:
            raise ValidationError(f"degree budget must be >= 1, got {self.degree_budget}")
        if self.trials < 0:
            raise ValidationError(f"trials must be >= 0, got {self.trials}")
        if self.tol <= 0:
            raise ValidationError(f"tol must be > 0, got {self.tol}")
        if self.jobs < 1:
            raise ValidationError(f"jobs must be >= 1, got {self.jobs}")
        return self

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> 'RunConfig':
        """Defaults overridden by HYPERSIEVE_* variables (a .env file is loaded first)."""
        load_dotenv(dotenv_path)
        config = cls()
        overrides: Dict[str, Any] = {}

        for name in ("degree_budget", "trials", "seed", "jobs"):
            raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
            if raw is not None and raw.strip():
                try:
                    overrides[name] = int(raw)
                except ValueError:
                    raise ValidationError(f"{ENV_PREFIX}{name.upper()} must be an integer, got {raw!r}")

        raw_tol = os.getenv(f"{ENV_PREFIX}TOL")
        if raw_tol:
            overrides["tol"] = to_rational(raw_tol)

        raw_output = os.getenv(f"{ENV_PREFIX}OUTPUT")
        if raw_output:
            try:
                overrides["output"] = OutputFormat(raw_output.strip().lower())
            except ValueError:
                raise ValidationError(f"{ENV_PREFIX}OUTPUT must be 'human' or 'json', got {raw_output!r}")

        if overrides:
            logger.debug(f"Environment overrides: {sorted(overrides)}")
        return replace(config, **overrides).validate()

    def with_overrides(self, **values: Any) -> 'RunConfig':
        """Apply non-None overrides (typically parsed CLI flags)."""
        present = {k: v for k, v in values.items() if v is not None}
        if "tol" in present:
            present["tol"] = to_rational(present["tol"])
        if "output" in present:
            present["output"] = OutputFormat(present["output"])
        return replace(self, **present).validate()

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["tol"] = format_rational(self.tol)
        data["output"] = self.output.value
        return data
