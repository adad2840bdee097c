from loguru import logger

# Sinks are configured once by setup_enhanced_logging(); library code only binds.
# Format fields used there:
# <green>{time}</green> : Time
# <level>{level}</level> : Lvl
# <cyan>{extra[name]}</cyan> : Bound name (module)


def get_logger(name: str):
    """
    Returns a loguru logger bound with the specific module name.

    Solver modules call this once at import time:
        logger = get_logger(__name__)
    """
    return logger.bind(name=name)
