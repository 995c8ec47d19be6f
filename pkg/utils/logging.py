import logging
from config.settings import settings


def setup_logging(level: str = None):
    """Configura el logging raíz; en debug incluye timestamp y módulo"""
    if settings.debug:
        resolved = logging.DEBUG
    else:
        resolved = getattr(logging, (level or settings.logs.level).upper(), logging.INFO)
    logging.basicConfig(
        level=resolved,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        if settings.debug
        else "%(levelname)s - %(message)s",
    )
    for noisy in ["numexpr"]:
        logging.getLogger(noisy).setLevel(logging.WARNING)
