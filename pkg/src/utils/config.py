"""Configuration management using Pydantic models.

This module handles loading and validation of configuration from YAML files
and environment variables. Every section has working defaults, so the
library runs without a config file; the CLI overrides individual values
from its flags.
"""

from pathlib import Path
from typing import List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class FieldConfig(BaseModel):
    """Finite field configuration."""

    default_p: int = Field(default=3, ge=3, le=13, description="Default characteristic")
    default_m: Optional[int] = Field(
        default=None, ge=1, le=12, description="Extension degree (None means 2r)"
    )

    @field_validator('default_p')
    @classmethod
    def odd_characteristic(cls, v: int) -> int:
        """Reject even characteristics early."""
        if v % 2 == 0:
            raise ValueError(f"Characteristic must be odd, got {v}")
        return v


class AlgebraConfig(BaseModel):
    """Normal-form arithmetic configuration."""

    word_bound: int = Field(default=12, ge=1, le=32, description="Maximum rewriting-oracle word length")
    degree_cap_factor: int = Field(
        default=2, ge=1, le=8, description="y-degree cap as a multiple of p*q"
    )
    memo_enabled: bool = Field(default=True, description="Memoize delta powers per context")


class RepsConfig(BaseModel):
    """Representation theory configuration."""

    exhaustive_limit: int = Field(
        default=1_000_000, ge=1, description="Largest |F|^d searched exhaustively for invariant lines"
    )
    random_vectors: int = Field(default=8, ge=0, le=256, description="Extra random spin vectors")


class HomologyConfig(BaseModel):
    """Resolution and Ext configuration."""

    i_max: int = Field(default=6, ge=0, le=32, description="Highest Ext degree computed")
    weyl_truncation: int = Field(default=4, ge=1, le=12, description="PBW degree bound for Weyl checks")


class ComputeConfig(BaseModel):
    """Worker pool and randomness configuration."""

    jobs: Optional[int] = Field(default=None, ge=1, le=256, description="Worker threads (None means cpu count)")
    seed: int = Field(default=0, ge=0, description="Seed for randomized checks")


class VerifySuiteConfig(BaseModel):
    """Acceptance-suite sample sizes."""

    oracle_words: int = Field(default=10_000, ge=1, description="Random words per oracle parameter set")
    word_length: int = Field(default=8, ge=1, le=12, description="Maximum random word length")
    random_lambdas: int = Field(default=20, ge=1, description="Random parameters per characteristic")
    random_pairs: int = Field(default=1_000, ge=1, description="Random pairs for derivation checks")
    idempotent_samples: int = Field(default=1_000, ge=1, description="Random elements for the idempotent check")
    quick_divisor: int = Field(default=50, ge=1, description="Sample divisor for the quick suite")


class LogFilesConfig(BaseModel):
    """Log files configuration."""

    main: Optional[str] = Field(default=None, description="Main log file")
    error: Optional[str] = Field(default=None, description="Error log file")
    debug: Optional[str] = Field(default=None, description="Debug log file")


class LoggingConfig(BaseModel):
    """Logging configuration."""

    level: str = Field(default="WARNING", pattern="^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$", description="Log level")
    format: str = Field(default="text", pattern="^(json|text)$", description="Log format")

    files: LogFilesConfig = Field(default_factory=LogFilesConfig)

    # Log rotation
    max_file_size_mb: int = Field(default=50, ge=1, le=1000, description="Max log file size")
    backup_count: int = Field(default=10, ge=1, le=100, description="Number of backup files")

    # Structured logging fields
    include_fields: List[str] = Field(
        default=["timestamp", "level", "module", "message", "data", "correlation_id"],
        description="Fields to include in structured logs"
    )


class Config(BaseModel):
    """Main configuration model containing all settings."""
    model_config = ConfigDict(extra='ignore')

    scalars: FieldConfig = Field(default_factory=FieldConfig)
    algebra: AlgebraConfig = Field(default_factory=AlgebraConfig)
    reps: RepsConfig = Field(default_factory=RepsConfig)
    homology: HomologyConfig = Field(default_factory=HomologyConfig)
    compute: ComputeConfig = Field(default_factory=ComputeConfig)
    verify: VerifySuiteConfig = Field(default_factory=VerifySuiteConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


class EnvironmentConfig(BaseSettings):
    """Environment overrides loaded from the process environment and .env."""

    log_level: Optional[str] = Field(default=None, description="Log level override")
    jobs: Optional[int] = Field(default=None, ge=1, description="Worker count override")
    config: Optional[str] = Field(default=None, description="Config file path override")

    model_config = SettingsConfigDict(
        env_prefix="ORE_SRA_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )


def load_config(config_path: Union[str, Path] = "configs/config.yaml") -> Config:
    """Load configuration from YAML file with validation.

    Args:
        config_path: Path to the configuration YAML file

    Returns:
        Validated Config object

    Raises:
        FileNotFoundError: If config file doesn't exist
        ValueError: If config validation fails
    """
    config_file = Path(config_path)

    if not config_file.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_file}")

    try:
        with open(config_file, 'r', encoding='utf-8') as f:
            config_data = yaml.safe_load(f) or {}

        return Config(**config_data)

    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML in config file: {e}")
    except Exception as e:
        raise ValueError(f"Configuration validation failed: {e}")


def load_environment_config() -> EnvironmentConfig:
    """Load environment overrides.

    Returns:
        EnvironmentConfig object

    Raises:
        ValueError: If an override has an invalid value
    """
    try:
        return EnvironmentConfig()
    except Exception as e:
        raise ValueError(f"Environment configuration failed: {e}")


def get_project_root() -> Path:
    """Get the project root directory.

    Returns:
        Path object pointing to project root
    """
    current = Path(__file__).parent
    while current.parent != current:
        if (current / "pyproject.toml").exists():
            return current
        current = current.parent

    return Path.cwd()


def ensure_directories(config: Config) -> None:
    """Create the parent directories of all configured log files.

    Args:
        config: Configuration object containing paths
    """
    files = config.logging.files
    for path in (files.main, files.error, files.debug):
        if path:
            Path(path).parent.mkdir(parents=True, exist_ok=True)


def apply_environment(config: Config, env: EnvironmentConfig) -> Config:
    """Overlay environment overrides onto a loaded configuration.

    Args:
        config: Configuration loaded from file or defaults
        env: Environment overrides

    Returns:
        Updated copy of the configuration
    """
    updated = config.model_copy(deep=True)
    if env.log_level:
        updated.logging.level = env.log_level.upper()
    if env.jobs:
        updated.compute.jobs = env.jobs
    return updated


# Global configuration instance (lazy loaded)
_config_instance: Optional[Config] = None
_env_config_instance: Optional[EnvironmentConfig] = None


def _default_config_path() -> Path:
    override = get_env_config().config
    if override:
        return Path(override)
    return get_project_root() / "configs" / "config.yaml"


def get_config() -> Config:
    """Get the global configuration instance (singleton pattern).

    Falls back to built-in defaults when no config file is present.

    Returns:
        Global Config instance
    """
    global _config_instance

    if _config_instance is None:
        path = _default_config_path()
        config = load_config(path) if path.exists() else Config()
        _config_instance = apply_environment(config, get_env_config())
        ensure_directories(_config_instance)

    return _config_instance


def get_env_config() -> EnvironmentConfig:
    """Get the global environment configuration instance (singleton pattern).

    Returns:
        Global EnvironmentConfig instance
    """
    global _env_config_instance

    if _env_config_instance is None:
        _env_config_instance = load_environment_config()

    return _env_config_instance


def reload_config(config_path: Union[str, Path] = "configs/config.yaml") -> Config:
    """Reload configuration from file.

    Args:
        config_path: Path to the configuration YAML file

    Returns:
        New Config instance
    """
    global _config_instance
    _config_instance = apply_environment(load_config(config_path), get_env_config())
    ensure_directories(_config_instance)
    return _config_instance
