"""
Configuration

Features:
1. Environment variables (optionally from a .env file)
2. Type conversion and range validation via pydantic
3. Defaults sized for desk-scale exact search
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from .logger import get_logger

logger = get_logger(__name__)


class SearchConfig(BaseModel):
    """Graph size caps and search budgets"""
    max_vertices: int = Field(default=64, ge=1, le=4096)
    exact_max_vertices: int = Field(default=16, ge=1, le=64)
    exact_small_k_max_vertices: int = Field(default=20, ge=1, le=64)
    treewidth_max_vertices: int = Field(default=18, ge=1, le=64)
    budget_ms: Optional[int] = Field(default=None, ge=1)
    max_nodes: Optional[int] = Field(default=None, ge=1)

    @field_validator('budget_ms', 'max_nodes', mode='before')
    @classmethod
    def empty_string_to_none(cls, v):
        if v == "" or v is None:
            return None
        return int(v)

    def exact_cap_for(self, k: int) -> int:
        """Vertex cap for exact f_k: larger for small k where candidate families stay small."""
        return self.exact_small_k_max_vertices if k <= 3 else self.exact_max_vertices


class LoggingConfig(BaseModel):
    """Logging configuration"""
    level: str = Field(default="WARNING")
    structured: bool = Field(default=True)
    log_dir: Optional[str] = None

    @field_validator('level')
    @classmethod
    def validate_log_level(cls, v):
        valid_levels = ['TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL']
        v = v.upper()
        if v not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v

    @field_validator('log_dir', mode='before')
    @classmethod
    def empty_dir_to_none(cls, v):
        return v or None


class Config(BaseModel):
    """Complete configuration"""
    search: SearchConfig = Field(default_factory=SearchConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    def with_overrides(self, **search_overrides) -> "Config":
        """Return a copy with non-None search fields replaced (CLI flags win over env)."""
        updates = {key: value for key, value in search_overrides.items() if value is not None}
        if not updates:
            return self
        search = self.search.model_copy(update=updates)
        return self.model_copy(update={"search": SearchConfig.model_validate(search.model_dump())})


def load_config(env_file: str = ".env") -> Config:
    """
    Load configuration from the environment.

    Args:
        env_file: Path of an optional .env file

    Returns:
        Config object

    Raises:
        pydantic.ValidationError: a variable is present but invalid
    """
    if Path(env_file).exists():
        load_dotenv(env_file)
    else:
        logger.debug(f"{env_file} not found. Using environment variables.")

    return Config(
        search=SearchConfig(
            max_vertices=int(os.getenv("ARBOR_MAX_VERTICES", "64")),
            exact_max_vertices=int(os.getenv("ARBOR_EXACT_MAX_VERTICES", "16")),
            exact_small_k_max_vertices=int(os.getenv("ARBOR_EXACT_SMALL_K_MAX_VERTICES", "20")),
            treewidth_max_vertices=int(os.getenv("ARBOR_TREEWIDTH_MAX_VERTICES", "18")),
            budget_ms=os.getenv("ARBOR_BUDGET_MS"),
            max_nodes=os.getenv("ARBOR_MAX_NODES"),
        ),
        logging=LoggingConfig(
            level=os.getenv("ARBOR_LOG_LEVEL", "WARNING"),
            structured=os.getenv("ARBOR_LOG_STRUCTURED", "true").lower() == "true",
            log_dir=os.getenv("ARBOR_LOG_DIR"),
        ),
    )

