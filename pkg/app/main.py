"""Command-line entry point: the ``exactdist`` command group."""

import sys
from typing import Optional

import click
from loguru import logger

from app.cli.commands import COMMANDS
from app.config import settings

LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {extra[name]} - {message}"


def configure_logging(level: str) -> None:
    """Send logs to stderr only; stdout carries command output."""
    logger.remove()
    logger.configure(extra={"name": settings.PROJECT_NAME})
    logger.add(sys.stderr, level=level.upper(), format=LOG_FORMAT)


@click.group()
@click.version_option(settings.VERSION, prog_name=settings.PROJECT_NAME)
@click.option("--log-level", type=click.Choice(["TRACE", "DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Log level (default from settings).")
def cli(log_level: Optional[str]) -> None:
    """Exact distance graphs, generalised colouring numbers and their verification."""
    configure_logging(log_level or settings.LOG_LEVEL)


for command in COMMANDS:
    cli.add_command(command)


if __name__ == "__main__":
    cli()
