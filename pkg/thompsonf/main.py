# main.py
import click

from .api.commands import element, kab, subgroup
from .core.config import settings
from .middleware import add_exception_middleware, add_logging_middleware


@click.group(
    name="thompsonf",
    help="Thompson's group F: exact elements, rectangular subgroups and finite-index subgroup classification.",
    context_settings={"help_option_names": ["-h", "--help"]},
)
@click.option(
    "--format", "output_format", type=click.Choice(["text", "json"]), default=None,
    help="Report format (default from THOMPSONF_OUTPUT_FORMAT, else text).",
)
@click.pass_context
def cli(ctx: click.Context, output_format):
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format or settings.OUTPUT_FORMAT


# Include command groups
cli.add_command(element)
cli.add_command(subgroup)
cli.add_command(kab)

add_logging_middleware(cli)
add_exception_middleware(cli)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
