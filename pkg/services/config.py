"""
Config - resource caps, trial counts and oracle settings
Environment overrides: LCTFORGE_DEGREE_CAP, LCTFORGE_TRIALS
"""
import logging
import os
from typing import Mapping, Optional

from pydantic import BaseModel, ConfigDict, PositiveInt

from core.ideal_ops import DEFAULT_COEFFICIENT_BOUND, DEFAULT_POWER_CAP
from core.standard_basis import DEFAULT_DEGREE_CAP
from invariants.convergence import DEFAULT_CHANGE_BOUND, DEFAULT_TMAX_CAP

logger = logging.getLogger(__name__)

ENV_DEGREE_CAP = "LCTFORGE_DEGREE_CAP"
ENV_TRIALS = "LCTFORGE_TRIALS"


class OracleConfig(BaseModel):
    """All knobs of a run; every field is a positive integer."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    grid: PositiveInt = 16
    trials: PositiveInt = 3
    coefficient_bound: PositiveInt = DEFAULT_COEFFICIENT_BOUND
    degree_cap: PositiveInt = DEFAULT_DEGREE_CAP
    power_cap: PositiveInt = DEFAULT_POWER_CAP
    tmax_cap: PositiveInt = DEFAULT_TMAX_CAP
    change_bound: PositiveInt = DEFAULT_CHANGE_BOUND

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None, **overrides) -> "OracleConfig":
        """Defaults, then environment, then explicit overrides (None values ignored)."""
        environ = os.environ if environ is None else environ
        values = {}
        if environ.get(ENV_DEGREE_CAP):
            values["degree_cap"] = environ[ENV_DEGREE_CAP]
        if environ.get(ENV_TRIALS):
            values["trials"] = environ[ENV_TRIALS]
        values.update({k: v for k, v in overrides.items() if v is not None})
        config = cls.model_validate(values)
        logger.debug("Config: %s", config.model_dump())
        return config
