# thompsonf/middleware/logging.py
import logging
import time

import click

from ..core.config import settings

ARGV_KEY = "thompsonf.argv"

# Configure the package logger once; module loggers propagate to it
logger = logging.getLogger("thompsonf")
if not logger.handlers:
    handler = logging.StreamHandler()
    formatter = logging.Formatter(
        "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
    )
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    logger.setLevel(settings.LOG_LEVEL.upper())

cli_logger = logging.getLogger("thompsonf.cli")


def add_logging_middleware(group: click.Group) -> None:
    """
    Log every command invocation with its arguments, exit status and duration.

    Wraps the root group's `parse_args` to record the raw arguments and its
    `invoke` to time the command.

    Args:
        group (click.Group): Root command group.

    Returns:
        None
    """
    parse_args = group.parse_args
    invoke = group.invoke

    def recording_parse_args(ctx: click.Context, args):
        ctx.meta[ARGV_KEY] = list(args)
        return parse_args(ctx, args)

    def logged_invoke(ctx: click.Context):
        start_time = time.time()
        command = " ".join([ctx.info_name or group.name, *ctx.meta.get(ARGV_KEY, [])])
        cli_logger.info(f"INCOMING | {command}")
        status = 0
        try:
            return invoke(ctx)
        except click.exceptions.Exit as exc:
            status = exc.exit_code
            raise
        except Exception as exc:
            status = getattr(exc, "exit_code", 1)
            raise
        finally:
            process_time = (time.time() - start_time) * 1000
            cli_logger.info(
                f"OUTGOING | {command} | "
                f"Status: {status} | "
                f"Duration: {process_time:.2f}ms"
            )

    group.parse_args = recording_parse_args
    group.invoke = logged_invoke
