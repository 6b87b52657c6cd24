"""
Configuración de logging centralizada y thread-safe para múltiples procesos.
"""
import os
import sys
import logging
import threading
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from src.core.config import settings

# Los módulos de la librería usan logging.getLogger(__name__) bajo este paquete
PACKAGE_LOGGER = "src"

# Global state
_logger_initialized = False
_logger_lock = threading.Lock()
_app_logger: Optional[logging.Logger] = None

_FORMAT = "[%(asctime)s] %(levelname)s in %(name)s [%(process)d:%(thread)d]: %(message)s"


class SafeRotatingFileHandler(RotatingFileHandler):
    """
    Rotating file handler that never crashes the run.
    Rotation or write failures are reported on stderr and the record is dropped.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._lock = threading.Lock()

    def doRollover(self):
        with self._lock:
            try:
                super().doRollover()
            except OSError as e:
                print(f"Warning: Could not rotate log file {self.baseFilename}: {e}", file=sys.stderr)

    def emit(self, record):
        try:
            super().emit(record)
        except OSError as e:
            print(f"Warning: Could not write to log file {self.baseFilename}: {e}", file=sys.stderr)


def _file_handler() -> Optional[logging.Handler]:
    log_path = Path(settings.log_file)
    try:
        log_path.parent.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        print(f"Warning: Could not create log directory {log_path.parent}: {e}", file=sys.stderr)
        return None
    handler = SafeRotatingFileHandler(
        str(log_path),
        maxBytes=settings.log_max_bytes,
        backupCount=settings.log_backup_count,
        encoding="utf-8",
        delay=True,
    )
    handler.setFormatter(logging.Formatter(_FORMAT))
    return handler


def get_app_logger() -> logging.Logger:
    """
    Get the centralized application logger.
    Configures the package logger only once per process.
    """
    global _logger_initialized, _app_logger

    with _logger_lock:
        if _logger_initialized and _app_logger:
            return _app_logger

        _app_logger = logging.getLogger(PACKAGE_LOGGER)
        _app_logger.setLevel(getattr(logging, settings.log_level))

        if settings.log_to_file and not _app_logger.handlers:
            handler = _file_handler()
            if handler is not None:
                _app_logger.addHandler(handler)

        _app_logger.propagate = False
        _logger_initialized = True

        _app_logger.info(f"{settings.app_name} logger initialized - PID: {os.getpid()}")
        return _app_logger


def enable_console_logging(level: str = "DEBUG") -> logging.Handler:
    """Adds a stderr handler to the application logger (verbose CLI mode)."""
    app_logger = get_app_logger()
    for handler in app_logger.handlers:
        if getattr(handler, "_ccseq_console", False):
            return handler
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    handler.setLevel(getattr(logging, level))
    handler._ccseq_console = True
    app_logger.addHandler(handler)
    app_logger.setLevel(min(app_logger.level, handler.level))
    return handler
