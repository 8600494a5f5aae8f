import logging
import os
import sys
from logging.handlers import RotatingFileHandler


LOG_FORMAT = "[%(asctime)s] %(levelname)s in %(module)s [%(process)d]: %(message)s"


def get_logger(name="nodal_kstab", config=None):
    logger = logging.getLogger(name)

    # Drop handlers from a previous initialisation
    if logger.hasHandlers():
        logger.handlers.clear()

    if config is None:
        config = {}

    LOG_LEVEL = str(config.get("LOG_LEVEL", os.getenv("LOG_LEVEL", "WARNING"))).upper()
    LOG_DIR = config.get("LOG_DIR", os.getenv("LOG_DIR"))
    LOG_FILE = config.get("LOG_FILE", os.getenv("LOG_FILE", "nodal_kstab.log"))
    LOG_MAX_BYTES = int(config.get("LOG_MAX_BYTES", os.getenv("LOG_MAX_BYTES", 10 * 1024 * 1024)))
    LOG_BACKUP_COUNT = int(config.get("LOG_BACKUP_COUNT", os.getenv("LOG_BACKUP_COUNT", 5)))

    formatter = logging.Formatter(LOG_FORMAT)

    # File handler only when a log directory is configured; stdout carries reports
    if LOG_DIR:
        try:
            os.makedirs(LOG_DIR, exist_ok=True)
            file_handler = RotatingFileHandler(
                os.path.join(LOG_DIR, LOG_FILE),
                maxBytes=LOG_MAX_BYTES,
                backupCount=LOG_BACKUP_COUNT,
                encoding="utf-8",
            )
            file_handler.setLevel(LOG_LEVEL)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except Exception as e:
            print(f"[LOGGER INIT] Could not add file handler: {e}", file=sys.stderr)

    try:
        console_handler = logging.StreamHandler(sys.__stderr__)
        console_handler.setLevel(LOG_LEVEL)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)
    except Exception as e:
        print(f"[LOGGER INIT] Could not add console handler: {e}", file=sys.stderr)

    logger.setLevel(LOG_LEVEL)
    logger.propagate = False

    return logger


def set_level(level, root="nodal_kstab"):
    """Apply ``level`` to every already-created logger (and its handlers) under ``root``."""
    level = str(level).upper()
    for name, logger in list(logging.Logger.manager.loggerDict.items()):
        if isinstance(logger, logging.Logger) and (name == root or name.startswith(root + ".")):
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)
