"""Logging for ore-sra.

Records go to stderr (stdout carries command results) and optionally to
rotating files, formatted either as JSON lines or as text with a trailing
data payload. Each record may carry a ``data`` dict and the correlation ID
bound in structlog's context variables, so tasks of a parameter sweep that
run on worker threads log under their own ID.
"""

import json
import logging
import logging.handlers
import sys
import time
import uuid
from contextlib import contextmanager
from datetime import datetime, timezone
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, TypeVar, cast

import structlog

from .config import LoggingConfig

F = TypeVar("F", bound=Callable[..., Any])

_CORRELATION_KEY = "correlation_id"

# LogRecord attributes that are not user payload
_RECORD_ATTRS = frozenset(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"data", "message", "asctime"}

# Slower calls than this are reported by log_performance
SLOW_CALL_MS = 10.0


# Correlation IDs

def new_correlation_id() -> str:
    return uuid.uuid4().hex[:8]


def get_correlation_id() -> Optional[str]:
    """Correlation ID bound to the current context, if any."""
    return cast(Optional[str], structlog.contextvars.get_contextvars().get(_CORRELATION_KEY))


@contextmanager
def correlation_context(correlation_id: Optional[str] = None) -> Iterator[str]:
    """Bind a correlation ID (a fresh one by default) for the enclosed block.

    The enclosing ID, if any, is restored on exit.
    """
    previous = get_correlation_id()
    current = correlation_id or new_correlation_id()
    structlog.contextvars.bind_contextvars(**{_CORRELATION_KEY: current})
    try:
        yield current
    finally:
        if previous is None:
            structlog.contextvars.unbind_contextvars(_CORRELATION_KEY)
        else:
            structlog.contextvars.bind_contextvars(**{_CORRELATION_KEY: previous})


# Formatters

class StructuredFormatter(logging.Formatter):
    """One JSON object per record, restricted to ``include_fields``.

    Extra attributes passed through ``extra=`` are always appended.
    """

    def __init__(self, include_fields: List[str]):
        super().__init__()
        self.include_fields = set(include_fields)

    def _fields(self, record: logging.LogRecord) -> Dict[str, Any]:
        return {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "module": record.name,
            "message": record.getMessage(),
            "correlation_id": get_correlation_id(),
            "data": getattr(record, "data", None),
        }

    def format(self, record: logging.LogRecord) -> str:
        entry = {
            key: value
            for key, value in self._fields(record).items()
            if key in self.include_fields and value is not None
        }
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        entry.update((k, v) for k, v in vars(record).items() if k not in _RECORD_ATTRS)
        return json.dumps(entry, ensure_ascii=False, default=str)


class TextFormatter(logging.Formatter):
    """``time [LEVEL] name: message | Data: {...}``, prefixed with the correlation ID."""

    def __init__(self) -> None:
        super().__init__("%(asctime)s [%(levelname)8s] %(name)s: %(message)s", datefmt="%Y-%m-%d %H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        correlation_id = get_correlation_id()
        if correlation_id:
            line = f"[{correlation_id}] {line}"
        data = getattr(record, "data", None)
        if data:
            line += " | Data: " + json.dumps(data, ensure_ascii=False, default=str)
        return line


# Handlers

def _formatter(config: LoggingConfig) -> logging.Formatter:
    return StructuredFormatter(config.include_fields) if config.format == "json" else TextFormatter()


def _rotating_file(path: str, level: str, config: LoggingConfig) -> logging.Handler:
    log_path = Path(path)
    log_path.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.handlers.RotatingFileHandler(
        log_path,
        maxBytes=config.max_file_size_mb * 1024 * 1024,
        backupCount=config.backup_count,
        encoding="utf-8",
    )
    handler.setLevel(level)
    return handler


def setup_logging(config: Optional[LoggingConfig] = None) -> None:
    """Replace the root handlers according to ``config``.

    The debug file is only opened when the level is DEBUG.
    """
    if config is None:
        from .config import get_config

        config = get_config().logging

    level = config.level.upper()
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(level)
    handlers: List[logging.Handler] = [console]

    file_levels = {"main": level, "error": "ERROR", "debug": "DEBUG"}
    for name, file_level in file_levels.items():
        path = getattr(config.files, name)
        if not path or (name == "debug" and level != "DEBUG"):
            continue
        handlers.append(_rotating_file(path, file_level, config))

    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(level)
    for handler in handlers:
        handler.setFormatter(_formatter(config))
        root.addHandler(handler)


# Loggers

class AlgebraLogger:
    """``logging.Logger`` wrapper taking a structured ``data`` payload."""

    def __init__(self, name: str):
        self.logger = logging.getLogger(name)

    def log(self, level: int, message: str, data: Optional[Dict[str, Any]] = None, **extra: Any) -> None:
        if data:
            extra["data"] = data
        self.logger.log(level, message, extra=extra)

    def debug(self, message: str, data: Optional[Dict[str, Any]] = None, **extra: Any) -> None:
        self.log(logging.DEBUG, message, data, **extra)

    def info(self, message: str, data: Optional[Dict[str, Any]] = None, **extra: Any) -> None:
        self.log(logging.INFO, message, data, **extra)

    def warning(self, message: str, data: Optional[Dict[str, Any]] = None, **extra: Any) -> None:
        self.log(logging.WARNING, message, data, **extra)

    def error(self, message: str, data: Optional[Dict[str, Any]] = None, **extra: Any) -> None:
        self.log(logging.ERROR, message, data, **extra)

    def critical(self, message: str, data: Optional[Dict[str, Any]] = None, **extra: Any) -> None:
        self.log(logging.CRITICAL, message, data, **extra)

    def check(self, name: str, passed: bool, details: Optional[Dict[str, Any]] = None) -> None:
        """Record the outcome of an identity check; failures surface at WARNING."""
        payload = {"check": name, "passed": passed, **(details or {})}
        if passed:
            self.debug(f"Check {name} passed", data=payload)
        else:
            self.warning(f"Check {name} failed", data=payload)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def get_algebra_logger(name: str) -> AlgebraLogger:
    return AlgebraLogger(name)


def log_performance(func: F) -> F:
    """Log the wall time of ``func`` at DEBUG.

    Calls faster than SLOW_CALL_MS are not logged; failures are logged at
    ERROR with their duration and re-raised. Outside DEBUG the call is not
    timed at all.
    """
    perf_logger = get_algebra_logger(f"performance.{func.__module__}")

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        if not logging.getLogger().isEnabledFor(logging.DEBUG):
            return func(*args, **kwargs)

        start = time.perf_counter()

        def elapsed() -> float:
            return round((time.perf_counter() - start) * 1000, 2)

        try:
            result = func(*args, **kwargs)
        except Exception as e:
            perf_logger.error(
                f"{func.__name__} failed",
                data={"function": func.__qualname__, "duration_ms": elapsed(), "error": str(e)},
            )
            raise
        duration_ms = elapsed()
        if duration_ms > SLOW_CALL_MS:
            perf_logger.debug(f"{func.__name__} done", data={"function": func.__qualname__, "duration_ms": duration_ms})
        return result

    return cast(F, wrapper)
