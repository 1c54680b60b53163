import click

from ...dependencies.inputs import SUBGROUP
from ...models.plmap import PLMap
from ...schemas.subgroup import ClassificationOut, EnumerationOut, SubgroupAnalysis
from ...services import classify
from ...services import lattice as lt
from ...utils.output import emit


def _build(spec) -> classify.FIFSubgroup:
    if spec and isinstance(spec[0], PLMap):
        return classify.from_f_generators(spec)
    return classify.from_phi_pairs(spec)


@click.group(help="Finite-index subgroups <F', generators> of F.")
def subgroup():
    pass


@subgroup.command()
@click.argument("spec", type=SUBGROUP)
@click.pass_context
def analyze(ctx, spec):
    """Index, Inner, Outer, residue and quotient generator of a subgroup.

    SPEC is a phi-pair list such as "(3,7);(5,11)" or "@a.json,b.json".
    """
    sub = _build(spec)
    lat = sub.lattice
    generator, _ = lt.cyclic_quotient_generator(lat)
    report = SubgroupAnalysis(
        lattice=lat,
        index=lt.index(lat),
        inner=lt.inner_rect(lat),
        outer=lt.outer_rect(lat),
        residue=lt.residue(lat),
        quotient_generator=generator,
        iso_to_F=classify.is_isomorphic_to_F(sub),
    )
    emit(report, ctx.obj["format"])


@subgroup.command()
@click.argument("spec", type=SUBGROUP)
@click.pass_context
def extension(ctx, spec):
    """Inner(H), the cyclic quotient H / Inner(H) and [F : H]."""
    emit(classify.extension_summary(_build(spec)), ctx.obj["format"])


@subgroup.command("iso-check")
@click.argument("first", type=SUBGROUP)
@click.argument("second", type=SUBGROUP)
@click.pass_context
def iso_check(ctx, first, second):
    """Decide whether two subgroups are isomorphic."""
    emit(classify.are_isomorphic(_build(first), _build(second)), ctx.obj["format"])


@subgroup.command()
@click.argument("a", type=click.IntRange(min=1))
@click.argument("b", type=click.IntRange(min=1))
@click.pass_context
def quotient(ctx, a, b):
    """Structure of F / K(a,b)."""
    emit(classify.quotient_by_rectangular(a, b), ctx.obj["format"])


@subgroup.command("enumerate")
@click.option("--index", "n", type=click.IntRange(min=1), required=True)
@click.pass_context
def enumerate_(ctx, n):
    """All subgroups of index n as canonical triples."""
    subgroups = lt.enumerate_index(n)
    emit(EnumerationOut(index=n, count=len(subgroups), subgroups=subgroups), ctx.obj["format"])


@subgroup.command("classify")
@click.option("--index", "n", type=click.IntRange(min=1), required=True)
@click.pass_context
def classify_(ctx, n):
    """Isomorphism classes of the index-n subgroups."""
    classes = classify.classify_index(n)
    emit(ClassificationOut(index=n, class_count=len(classes), classes=classes), ctx.obj["format"])
