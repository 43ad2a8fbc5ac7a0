"""
Configuration & Environment Setup
=================================
Centralized configuration for the degenerate Fubini polynomial toolkit.
"""

import os
import sys
import logging
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

LOG_LEVEL = os.getenv("FUBINI_LOG_LEVEL", "INFO").upper()
LOG_FILE = os.getenv("FUBINI_LOG_FILE", "logs/fubini.log")

# stdout carries CLI payloads, so log records go to stderr
_handlers = [logging.StreamHandler(sys.stderr)]
if LOG_FILE:
    log_dir = os.path.dirname(LOG_FILE)
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
    _handlers.append(logging.FileHandler(LOG_FILE, encoding='utf-8'))

# Logger setup
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=_handlers
)
logger = logging.getLogger(__name__)

# MCP Server bind address
MCP_FUBINI_HOST = os.getenv("MCP_FUBINI_HOST", "127.0.0.1")
MCP_FUBINI_PORT = int(os.getenv("MCP_FUBINI_PORT", "8003"))


class Config:
    """Configuration management"""

    # Series engine
    SERIES_ORDER = int(os.getenv("FUBINI_SERIES_ORDER", "12"))

    # Largest table index accepted by the CLI, the MCP tools and the suite
    N_MAX_CEILING = int(os.getenv("FUBINI_N_MAX_CEILING", "12"))

    # Largest n accepted by the stirling and bell commands
    COMBINATORICS_N_CEILING = int(os.getenv("FUBINI_COMBINATORICS_N_CEILING", "200"))

    # Seed for the randomized scaling-law checks
    DEFAULT_SEED = int(os.getenv("FUBINI_SEED", "42"))

    @classmethod
    def validate(cls) -> bool:
        ok = True
        if cls.SERIES_ORDER < 0:
            logger.warning(f"⚠️ FUBINI_SERIES_ORDER={cls.SERIES_ORDER} is negative, series defaults will fail.")
            ok = False
        if cls.N_MAX_CEILING < 0:
            logger.warning(f"⚠️ FUBINI_N_MAX_CEILING={cls.N_MAX_CEILING} is negative, every table request will be rejected.")
            ok = False
        if cls.COMBINATORICS_N_CEILING < 0:
            logger.warning(f"⚠️ FUBINI_COMBINATORICS_N_CEILING={cls.COMBINATORICS_N_CEILING} is negative, every stirling and bell request will be rejected.")
            ok = False
        if cls.N_MAX_CEILING > 24:
            logger.warning(f"⚠️ FUBINI_N_MAX_CEILING={cls.N_MAX_CEILING}: large tables grow quickly in size and time.")
        return ok
