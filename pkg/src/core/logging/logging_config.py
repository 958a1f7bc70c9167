import logging
from logging.config import fileConfig
from pathlib import Path

from src.core.config.settings import settings


def configure_logging(config_path: str | None = None) -> None:
    """Loads the ini logging configuration, falling back to a basic console setup."""
    path = Path(config_path or settings.LOGGING_CONFIG)
    if path.is_file():
        fileConfig(path, disable_existing_loggers=False)
        return
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        format="%(levelname)-5.5s [%(name)s] %(message)s",
    )
