"""
Command-line interface: fk, cover, stats, gen and verify
"""
from .app import build_parser, main
from .commands import METHODS, RunContext, cmd_cover, cmd_fk, cmd_gen, cmd_stats, cmd_verify

__all__ = [
    'METHODS',
    'RunContext',
    'build_parser',
    'cmd_cover',
    'cmd_fk',
    'cmd_gen',
    'cmd_stats',
    'cmd_verify',
    'main',
]
