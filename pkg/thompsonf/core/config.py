from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class CliConfig(BaseSettings):
    """
    Runtime configuration loaded from environment variables (prefix `THOMPSONF_`).

    Centralized defaults for the command line and for the iterative operations
    of the library. Command-line flags override these per invocation.

    Attributes:
        OUTPUT_FORMAT (str): Report format, "text" or "json" (default: "text").
        SEED (Optional[int]): Seed for the pseudo-random y0 completion (default: None).
        ITERATION_CAP (int): Maximum number of iterations `push_to_end` may take (default: 10**6).
        LOG_LEVEL (str): Level of the `thompsonf` logger (default: "WARNING").
        MAX_ENUMERATION_INDEX (int): Largest index accepted by subgroup enumeration (default: 10**4).
    """
    model_config = SettingsConfigDict(env_prefix="THOMPSONF_", extra="ignore")

    OUTPUT_FORMAT: Literal["text", "json"] = "text"
    SEED: Optional[int] = None
    ITERATION_CAP: int = Field(10**6, gt=0)
    LOG_LEVEL: str = "WARNING"
    MAX_ENUMERATION_INDEX: int = Field(10**4, gt=0)


settings = CliConfig()
