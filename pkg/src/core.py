from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from src import config

if TYPE_CHECKING:
    from pathlib import Path

LOG_FORMAT = "%(asctime)s - %(levelname)s [%(filename)s:%(lineno)s - %(funcName)s()] %(message)s"


class Core:
    # stdout carries results and run() reports errors on stderr, so logs only go to the file
    _handler: logging.Handler | None = None
    _previous_level: int | None = None

    @classmethod
    def init(cls, log_file: Path | None = None) -> Path:
        log_file = log_file if log_file is not None else config.LOG_FILE
        log_file.parent.mkdir(parents=True, exist_ok=True)

        cls.shutdown()
        root = logging.getLogger()
        cls._previous_level = root.level
        root.setLevel(config.LOG_LEVEL)

        handler = logging.FileHandler(log_file, encoding="utf-8")
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        cls._handler = handler

        return log_file

    @classmethod
    def shutdown(cls) -> None:
        if cls._handler is None:
            return

        root = logging.getLogger()
        root.removeHandler(cls._handler)
        cls._handler.close()
        cls._handler = None
        if cls._previous_level is not None:
            root.setLevel(cls._previous_level)
            cls._previous_level = None
