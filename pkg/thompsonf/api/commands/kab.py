import click

from ...core.config import settings
from ...core.exceptions import CertificateFailedError
from ...schemas.element import ElementOut
from ...schemas.kab import KabOut
from ...services import thompson
from ...utils.output import emit


@click.command()
@click.argument("a", type=click.IntRange(min=1))
@click.argument("b", type=click.IntRange(min=1))
@click.option("--seed", type=int, default=None, help="Seed for the connector completion of y0.")
@click.pass_context
def kab(ctx, a, b, seed):
    """Generators y0, y1 of K(A,B) with their exact certificate.

    Exits with status 3 when a certificate check fails.
    """
    seed = settings.SEED if seed is None else seed
    y0, y1 = thompson.kab_generators(a, b, seed=seed)
    c, by_y0, by_shift = thompson.kab_derived_elements(y0, y1)
    certificate = thompson.verify_kab_certificate(a, b, y0, y1)
    emit(KabOut(
        y0=ElementOut.from_map(y0),
        y1=ElementOut.from_map(y1),
        commutator=ElementOut.from_map(c),
        commutator_by_y0=ElementOut.from_map(by_y0),
        commutator_by_y0_y1_inverse=ElementOut.from_map(by_shift),
        certificate=certificate,
    ), ctx.obj["format"])
    if not certificate.certified:
        raise CertificateFailedError(certificate.failed_groups())
