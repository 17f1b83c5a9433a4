import sys
from loguru import logger
from config.config import LOG_CONFIG

logger.remove()
logger.add(sys.stderr, level=LOG_CONFIG["level"])
if LOG_CONFIG["file"]:
    logger.add(LOG_CONFIG["file"], rotation=LOG_CONFIG["rotation"], level="DEBUG")
