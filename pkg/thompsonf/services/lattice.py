import logging
import re
from math import gcd, lcm
from typing import Iterable, List, Tuple

from pydantic import ValidationError

from ..core.config import settings
from ..core.exceptions import BadInputError, FormatError, NotFiniteIndexError
from ..models.lattice import LatticeSubgroup, RectPair

logger = logging.getLogger(__name__)

Vector = Tuple[int, int]

_TRIPLE_TEXT = re.compile(r"^\s*g\s*=\s*(\d+)\s+h\s*=\s*(\d+)\s+m\s*=\s*(\d+)\s*$")


def _egcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (d, s, t) with s*a + t*b == d and |d| == gcd(a, b)."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def from_generators(vs: Iterable[Vector]) -> LatticeSubgroup:
    """
    Canonical triangular form of the subgroup of Z^2 generated by `vs`.

    Each generator is folded into a running basis {(gx, gy), (0, m)} by an
    extended-gcd step on the first coordinates; the leftover second
    coordinate is absorbed into m.

    Args:
        vs (Iterable[tuple]): Integer pairs.

    Returns:
        LatticeSubgroup: The canonical (g, h, m).

    Raises:
        NotFiniteIndexError: If the generators span a subgroup of rank < 2.
    """
    vs = [(int(x), int(y)) for x, y in vs]
    gx, gy, m = 0, 0, 0
    for x, y in vs:
        if x == 0:
            m = gcd(m, y)
        elif gx == 0:
            gx, gy = x, y
        else:
            d, s, t = _egcd(gx, x)
            m = gcd(m, (x // d) * gy - (gx // d) * y)
            gx, gy = d, s * gy + t * y
    if gx < 0:
        gx, gy = -gx, -gy
    if gx == 0 or m == 0:
        raise NotFiniteIndexError(vs)
    return LatticeSubgroup(g=gx, h=gy % m, m=m)


def rect_lattice(rect: RectPair) -> LatticeSubgroup:
    return LatticeSubgroup(g=rect.a, h=0, m=rect.b)


def contains(lat: LatticeSubgroup, v: Vector) -> bool:
    """
    Membership test against the triangular basis (g, h), (0, m).

    Args:
        lat (LatticeSubgroup): Canonical lattice.
        v (Vector): Integer pair.

    Returns:
        bool: True iff v lies in the lattice.
    """
    x, y = v
    return x % lat.g == 0 and (y - (x // lat.g) * lat.h) % lat.m == 0


def index(lat: LatticeSubgroup) -> int:
    """[Z^2 : L] = g * m."""
    return lat.g * lat.m


def inner_rect(lat: LatticeSubgroup) -> RectPair:
    """
    Largest rectangular lattice <(a, 0), (0, b)> inside L.

    a is the least positive with (a, 0) in L, b the least positive with (0, b) in L.
    """
    return RectPair(a=lat.g * lat.m // gcd(lat.h, lat.m), b=lat.m)


def outer_rect(lat: LatticeSubgroup) -> RectPair:
    """Smallest rectangular lattice containing L: the gcds of the member coordinates."""
    return RectPair(a=lat.g, b=gcd(lat.h, lat.m))


def residue(lat: LatticeSubgroup) -> int:
    """Order of the cyclic group L / inner_rect(L)."""
    return lat.m // gcd(lat.h, lat.m)


def cyclic_quotient_generator(lat: LatticeSubgroup) -> Tuple[Vector, int]:
    """
    Generator of the image of L in Z_a x Z_b, (a, b) = inner_rect(L), and its order.

    The image is cyclic, generated by the class of (g, h); its order equals residue(L).
    """
    a, b = inner_rect(lat).pair
    vx, vy = lat.g % a, lat.h % b
    return (vx, vy), lcm(a // gcd(a, vx), b // gcd(b, vy))


def tau_rescale(lat: LatticeSubgroup) -> LatticeSubgroup:
    """Divide every member by outer_rect(L) coordinatewise and canonicalize."""
    a, b = outer_rect(lat).pair
    return from_generators([(lat.g // a, lat.h // b), (0, lat.m // b)])


def rev_lattice(lat: LatticeSubgroup) -> LatticeSubgroup:
    """Swap the coordinates of every member."""
    return from_generators([(lat.h, lat.g), (lat.m, 0)])


def equals(first: LatticeSubgroup, second: LatticeSubgroup) -> bool:
    """
    Equality as subgroups of Z^2.

    Args:
        first (LatticeSubgroup): Canonical lattice.
        second (LatticeSubgroup): Canonical lattice.

    Returns:
        bool: True iff the canonical triples agree.
    """
    return first.triple == second.triple


def enumerate_index(n: int) -> List[LatticeSubgroup]:
    """
    Every subgroup of Z^2 of index n, as canonical triples sorted lexicographically.

    The count is the divisor sum sigma(n).

    Raises:
        BadInputError: If n < 1 or n exceeds `settings.MAX_ENUMERATION_INDEX`.
    """
    if n < 1:
        raise BadInputError(f"index must be positive, got {n}")
    if n > settings.MAX_ENUMERATION_INDEX:
        raise BadInputError(
            f"index {n} exceeds the enumeration limit {settings.MAX_ENUMERATION_INDEX} "
            f"(set THOMPSONF_MAX_ENUMERATION_INDEX to raise it)"
        )
    result = [
        LatticeSubgroup(g=g, h=h, m=n // g)
        for g in range(1, n + 1) if n % g == 0
        for h in range(n // g)
    ]
    logger.debug("enumerated %d subgroups of index %d", len(result), n)
    return result


def members_in_box(lat: LatticeSubgroup, radius: int) -> List[Vector]:
    """Members of L in [-radius, radius]^2, row by row."""
    return [
        (x, y)
        for x in range(-radius, radius + 1)
        for y in range(-radius, radius + 1)
        if contains(lat, (x, y))
    ]


def to_text(lat: LatticeSubgroup) -> str:
    return str(lat)


def from_text(text: str) -> LatticeSubgroup:
    """
    Parse the canonical text form "g=1 h=1 m=2".

    Raises:
        FormatError: If the text is malformed or the triple is not canonical.
    """
    match = _TRIPLE_TEXT.match(text)
    if not match:
        raise FormatError(f"'{text}' is not of the form 'g=<int> h=<int> m=<int>'")
    g, h, m = (int(part) for part in match.groups())
    try:
        return LatticeSubgroup(g=g, h=h, m=m)
    except ValidationError as exc:
        raise FormatError(f"'{text}' is not a canonical triple: {exc.errors()[0]['msg']}") from exc
