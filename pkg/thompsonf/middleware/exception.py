# thompsonf/middleware/exception.py
import logging

import click

from ..core.exceptions import ThompsonError

logger = logging.getLogger("thompsonf.exception")


def add_exception_middleware(group: click.Group) -> None:
    """
    Turn errors escaping a command into a message on stderr and an exit code.

    Library errors exit with their own `exit_code` (2 for input errors, 3 for
    mathematical ones). Anything else is logged with its traceback and exits
    with 1. click's own usage errors pass through unchanged. Must be added
    after the logging middleware so it wraps it.

    Args:
        group (click.Group): Root command group.

    Returns:
        None
    """
    invoke = group.invoke

    def guarded_invoke(ctx: click.Context):
        try:
            return invoke(ctx)
        except (click.exceptions.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except ThompsonError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(exc.exit_code)
        except Exception as exc:
            # Log the full traceback
            logger.exception(f"UNHANDLED EXCEPTION | {ctx.info_name} | {exc}")
            click.echo("error: internal error", err=True)
            ctx.exit(1)

    group.invoke = guarded_invoke
