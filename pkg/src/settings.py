import logging
import os

from dotenv import load_dotenv

from src.metric import DEFAULT_VERTEX_BUDGET, SuffixArrayMethod

load_dotenv()

logger = logging.getLogger(__name__)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", name, raw)
        return default
    if value < 1:
        logger.warning("ignoring %s=%r: must be positive", name, raw)
        return default
    return value


def _method_env(name: str, default: SuffixArrayMethod) -> SuffixArrayMethod:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return SuffixArrayMethod(raw.strip().lower())
    except ValueError:
        logger.warning("ignoring %s=%r: expected doubling or sais", name, raw)
        return default


VERTEX_BUDGET = _int_env("ISOWORD_VERTEX_BUDGET", DEFAULT_VERTEX_BUDGET)
SUFFIX_ARRAY_METHOD = _method_env("ISOWORD_SUFFIX_ARRAY", SuffixArrayMethod.doubling)
LOG_LEVEL = os.getenv("ISOWORD_LOG_LEVEL", "WARNING").upper()
