import logging
from dataclasses import dataclass, field
from itertools import groupby
from typing import List, Sequence, Tuple, Union

from ..core.exceptions import InputError
from ..models.lattice import LatticeSubgroup, RectPair
from ..models.plmap import PLMap
from ..schemas.subgroup import ExtensionSummary, IsoVerdict, QuotientStructure, Witness
from . import lattice as lt
from .thompson import phi

logger = logging.getLogger(__name__)

Vector = Tuple[int, int]


@dataclass(frozen=True)
class FIFSubgroup:
    """
    Finite-index subgroup H of F, stored as its phi-image lattice.

    H is always phi^-1(lattice): it contains F' and is normal in F. Two
    instances are equal exactly when their lattices are.

    Attributes:
        lattice (LatticeSubgroup): phi(H) in canonical form.
        provenance (tuple): Elements and/or phi-pairs H was built from.
    """
    lattice: LatticeSubgroup
    provenance: Tuple[Union[PLMap, Vector], ...] = field(default=(), compare=False)

    @property
    def index(self) -> int:
        return lt.index(self.lattice)


def from_phi_pairs(pairs: Sequence[Vector]) -> FIFSubgroup:
    """
    The subgroup <F', f_1, ..., f_k> given the phi-images of the f_i.

    Raises:
        NotFiniteIndexError: If the pairs span a rank < 2 subgroup of Z^2.
    """
    pairs = tuple((int(x), int(y)) for x, y in pairs)
    return FIFSubgroup(lt.from_generators(pairs), pairs)


def from_f_generators(gens: Sequence[PLMap]) -> FIFSubgroup:
    """
    The subgroup <F', gens>.

    Raises:
        NotFiniteIndexError: If the phi-images of `gens` span a rank < 2 subgroup,
            in which case <F', gens> has infinite index in F.
    """
    gens = tuple(gens)
    return FIFSubgroup(lt.from_generators([tuple(phi(g)) for g in gens]), gens)


def full_group() -> FIFSubgroup:
    return FIFSubgroup(LatticeSubgroup(g=1, h=0, m=1))


def rectangular(a: int, b: int) -> FIFSubgroup:
    """K(a,b) as a finite-index subgroup."""
    return FIFSubgroup(lt.rect_lattice(RectPair(a=a, b=b)))


def is_isomorphic_to_F(sub: FIFSubgroup) -> bool:
    """H is isomorphic to F iff H is rectangular, i.e. its residue is 1."""
    return lt.residue(sub.lattice) == 1


def are_isomorphic(first: FIFSubgroup, second: FIFSubgroup) -> IsoVerdict:
    """
    Decide whether two finite-index subgroups of F are isomorphic.

    They are exactly when their tau-rescaled lattices are equal, or equal
    after swapping the coordinates of the second.

    Returns:
        IsoVerdict: Verdict, the comparison that succeeded and both scaled lattices.
    """
    scaled = lt.tau_rescale(first.lattice)
    other = lt.tau_rescale(second.lattice)
    if lt.equals(scaled, other):
        witness = Witness.tau
    elif lt.equals(scaled, lt.rev_lattice(other)):
        witness = Witness.tau_and_rev
    else:
        witness = Witness.none
    return IsoVerdict(isomorphic=witness is not Witness.none, witness=witness, scaled_forms=(scaled, other))


def extension_summary(sub: FIFSubgroup) -> ExtensionSummary:
    """Inner rectangle, cyclic quotient and index of H."""
    lat = sub.lattice
    generator, order = lt.cyclic_quotient_generator(lat)
    return ExtensionSummary(
        inner=lt.inner_rect(lat),
        quotient_order=order,
        quotient_generator=generator,
        index_in_F=lt.index(lat),
        iso_to_F=order == 1,
    )


def quotient_by_rectangular(a: int, b: int) -> QuotientStructure:
    """
    F / K(a,b) = Z_a x Z_b.

    Raises:
        InputError: If a or b is not positive.
    """
    if a < 1 or b < 1:
        raise InputError(f"rectangle parameters must be positive, got ({a}, {b})")
    return QuotientStructure(factors=(a, b), order=a * b)


def class_key(lat: LatticeSubgroup) -> Tuple[int, int, int]:
    """Complete isomorphism invariant: the smaller of the tau-rescaled triple and its swap."""
    scaled = lt.tau_rescale(lat)
    return min(scaled.triple, lt.rev_lattice(scaled).triple)


def classify_index(n: int) -> List[List[LatticeSubgroup]]:
    """
    Partition the index-n subgroups of F into isomorphism classes.

    Classes are ordered by their key, members by their canonical triple.

    Raises:
        BadInputError: If n is out of the enumeration range.
    """
    keyed = sorted((class_key(lat), lat.triple, lat) for lat in lt.enumerate_index(n))
    classes = [[lat for _, _, lat in members] for _, members in groupby(keyed, key=lambda item: item[0])]
    logger.info("index %d: %d subgroups in %d classes", n, len(keyed), len(classes))
    return classes
