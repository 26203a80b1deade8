"""
Command-line interface
"""
from app.cli.main import build_parser, main

__all__ = [
    'build_parser',
    'main',
]
