"""k-strong induced arboricity: exact solvers, constructions and a CLI."""
from loguru import logger

# Library modules stay silent until setup_enhanced_logging() configures sinks.
logger.disable(__name__)
