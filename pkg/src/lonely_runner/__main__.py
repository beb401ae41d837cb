"""``python -m lonely_runner`` entry point."""

from .cli import run

run()
