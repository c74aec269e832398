"""Utility modules for ore-sra."""

from .config import Config, get_config, load_config
from .errors import (
    CheckFailure,
    FieldError,
    OreAlgebraError,
    ParameterMismatchError,
    ParseError,
    PreconditionError,
    ResourceBoundError,
)
from .logging import get_algebra_logger, get_logger, setup_logging

__all__ = [
    "Config",
    "get_config",
    "load_config",
    "setup_logging",
    "get_logger",
    "get_algebra_logger",
    "OreAlgebraError",
    "FieldError",
    "ParameterMismatchError",
    "ParseError",
    "PreconditionError",
    "ResourceBoundError",
    "CheckFailure",
]
