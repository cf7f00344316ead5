"""
Logger Module

Small helper around the standard logging package. Reports go to stdout as JSON,
so log records always go to stderr, and optionally to a dated file under logs/.
"""

import logging
import sys
from datetime import datetime
from pathlib import Path

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
LOG_DIR = Path(__file__).resolve().parent.parent / "logs"

_configured_files = set()


def setup_logger(name, save_file=False, level=None, log_dir=None):
    """
    Get a module logger with a stderr handler attached to the package root.

    Args:
        name (str): Logger name, normally __name__
        save_file (bool): Also write records to logs/<date>.log
        level (str|int): Optional level for the project root logger
        log_dir (str|Path): Directory for the log file (defaults to logs/)

    Returns:
        logging.Logger: Configured logger
    """
    root = logging.getLogger("blocker")
    if not any(getattr(h, "_blocker_stream", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._blocker_stream = True
        root.addHandler(handler)
        root.setLevel(logging.WARNING)
        root.propagate = False

    if level is not None:
        root.setLevel(level.upper() if isinstance(level, str) else level)

    if save_file:
        directory = Path(log_dir) if log_dir is not None else LOG_DIR
        directory.mkdir(parents=True, exist_ok=True)
        log_path = directory / f"{datetime.now().strftime('%Y-%m-%d')}.log"
        if str(log_path) not in _configured_files:
            file_handler = logging.FileHandler(log_path, encoding="utf-8")
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            root.addHandler(file_handler)
            _configured_files.add(str(log_path))

    # everything hangs under the "blocker" root so one call configures all modules
    return logging.getLogger(f"blocker.{name}")
