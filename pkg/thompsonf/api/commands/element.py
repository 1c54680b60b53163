from typing import Optional

import click

from ...crud.elements import save_element
from ...dependencies.inputs import ELEMENT, resolve_environment
from ...models.dyadic import parse_rational
from ...models.plmap import PLMap
from ...schemas.element import ElementOut, OrbitalsOut, PhiOut, ValueOut
from ...services import plmap as pl
from ...services import thompson
from ...utils.output import emit

breaks_option = click.option(
    "--breaks", "f", type=ELEMENT, required=True,
    help='Element as interior breaks "(1/4,1/2);(1/2,3/4)", "identity" or "@file.json".',
)
other_option = click.option(
    "--other", "g", type=ELEMENT, required=True,
    help="Second element, same forms as --breaks.",
)
save_option = click.option(
    "--save", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Also write the result to this element file.",
)


def _emit_element(ctx: click.Context, f: PLMap, save: Optional[str]) -> None:
    if save:
        save_element(f, save)
    emit(ElementOut.from_map(f), ctx.obj["format"])


@click.group(help="Single elements of F: evaluation, products, slopes and orbitals.")
def element():
    pass


@element.command("eval")
@breaks_option
@click.option("--at", "t", required=True, help="Point of [0, 1] as p/q.")
@click.pass_context
def eval_(ctx, f, t):
    """Image of a point."""
    emit(ValueOut(value=str(pl.evaluate(f, parse_rational(t)))), ctx.obj["format"])


@element.command()
@breaks_option
@other_option
@save_option
@click.pass_context
def compose(ctx, f, g, save):
    """Word-order product: apply --breaks, then --other."""
    _emit_element(ctx, pl.compose(f, g), save)


@element.command()
@breaks_option
@save_option
@click.pass_context
def inverse(ctx, f, save):
    """Inverse element."""
    _emit_element(ctx, pl.inverse(f), save)


@element.command()
@breaks_option
@other_option
@save_option
@click.pass_context
def conjugate(ctx, f, g, save):
    """f^g = g^-1 f g for f = --breaks, g = --other."""
    _emit_element(ctx, pl.conjugate(f, g), save)


@element.command()
@breaks_option
@other_option
@save_option
@click.pass_context
def commutator(ctx, f, g, save):
    """[f, g] = f g f^-1 g^-1."""
    _emit_element(ctx, pl.commutator(f, g), save)


@element.command()
@breaks_option
@click.pass_context
def phi(ctx, f):
    """Slope exponents at 0 and 1."""
    emit(PhiOut(phi=tuple(thompson.phi(f))), ctx.obj["format"])


@element.command()
@breaks_option
@click.pass_context
def orbitals(ctx, f):
    """Orbitals with exact endpoints."""
    emit(OrbitalsOut.from_orbitals(pl.orbitals(f)), ctx.obj["format"])


@element.command()
@breaks_option
@save_option
@click.pass_context
def rev(ctx, f, save):
    """Conjugate by t -> 1 - t."""
    _emit_element(ctx, pl.rev(f), save)


@element.command()
@click.argument("text")
@click.option("--env", "env_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON file of named elements added to x0..x5, f0, f1, g0, g1.")
@save_option
@click.pass_context
def word(ctx, text, env_path, save):
    """Parse and evaluate a group word such as "[x0 x1^-1, x1^x0]"."""
    env = resolve_environment(env_path)
    _emit_element(ctx, thompson.eval_word(thompson.parse_word(text), env), save)


@element.command()
@click.option("--index", "n", type=int, required=True, help="Generator index n >= 0.")
@save_option
@click.pass_context
def x(ctx, n, save):
    """Generator x_n of the infinite presentation."""
    _emit_element(ctx, thompson.x_n(n), save)
