from functools import lru_cache
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

RouteName = Literal["closed", "table", "reflect", "integral"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_prefix="RELSIG_", extra="ignore")

    # Formula used by `convert` when --route is not given.
    default_route: RouteName = "table"

    # Brute-force caps. Boland's double sum costs 2^n, the permutation oracle n!.
    oracle_max_components: int = 12
    permutation_max_components: int = 8
    enumeration_max_components: int = 5

    # `verify` runs the oracle cross-checks only up to this many components.
    verify_max_components: int = 8

    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    return Settings()
