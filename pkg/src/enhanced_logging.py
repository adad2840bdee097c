"""
Logging setup

Features:
1. Colored console output on stderr
2. Structured (JSON lines) or plain file logs with rotation
3. Separate error log
4. Solver run metrics as JSON lines
"""

import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[name]} | {message}"


def setup_enhanced_logging(
    log_dir: Optional[str] = None,
    console_level: str = "WARNING",
    file_level: str = "DEBUG",
    structured: bool = True,
) -> None:
    """
    Configure loguru sinks for a CLI run.

    Args:
        log_dir: Directory for file logs; None disables file sinks
        console_level: Level for the stderr sink
        file_level: Level for the general file sink
        structured: Write the general file as JSON lines
    """
    logger.remove()
    logger.configure(extra={"name": "arbor"})
    logger.enable("src")

    logger.add(sys.stderr, level=console_level.upper(), format=CONSOLE_FORMAT, colorize=True)

    if log_dir is None:
        return

    log_path = Path(log_dir)
    log_path.mkdir(parents=True, exist_ok=True)
    stamp = datetime.now().strftime('%Y%m%d')

    if structured:
        logger.add(
            log_path / f"arbor_{stamp}.jsonl",
            level=file_level.upper(),
            serialize=True,
            rotation="00:00",
            retention=30,
            encoding="utf-8",
        )
    else:
        logger.add(
            log_path / f"arbor_{stamp}.log",
            level=file_level.upper(),
            format=FILE_FORMAT,
            rotation="00:00",
            retention=30,
            encoding="utf-8",
        )

    logger.add(
        log_path / "errors.log",
        level="ERROR",
        format=FILE_FORMAT + "\n{exception}",
        rotation="10 MB",
        retention=5,
        encoding="utf-8",
    )

    logger.bind(name=__name__).info(f"Logging initialized: {log_dir}")


class MetricsLogger:
    """
    Solver metrics recorder

    Appends one JSON object per solver run to metrics.jsonl.
    """

    def __init__(self, log_dir: str = "./logs/metrics"):
        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(parents=True, exist_ok=True)
        self.metrics_file = self.log_dir / "metrics.jsonl"

    def log_solver_run(
        self,
        component: str,
        graph_hash: str,
        duration_ms: float,
        outcome: str,
        k: Optional[int] = None,
        value: Optional[int] = None,
    ):
        """Record one solver or cover invocation."""
        metric = {
            "timestamp": datetime.now().isoformat(),
            "type": "solver_run",
            "component": component,
            "graph_hash": graph_hash,
            "k": k,
            "value": value,
            "outcome": outcome,
            "duration_ms": round(duration_ms, 3),
        }
        self._append(metric)

    def _append(self, data: dict):
        with open(self.metrics_file, 'a', encoding='utf-8') as f:
            f.write(json.dumps(data, ensure_ascii=False) + '\n')


# Global instance
_metrics_logger: Optional[MetricsLogger] = None


def get_metrics_logger(log_dir: Optional[str] = None) -> Optional[MetricsLogger]:
    """
    Metrics recorder for the process; None until a log directory is known.
    """
    global _metrics_logger
    if _metrics_logger is None and log_dir is not None:
        _metrics_logger = MetricsLogger(str(Path(log_dir) / "metrics"))
    return _metrics_logger
