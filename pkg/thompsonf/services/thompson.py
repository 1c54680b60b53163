import logging
import random
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..core.exceptions import (
    InputError,
    NegativeIndexError,
    NotInCommutatorSubgroupError,
    NotInRectangularError,
    SupportOutOfRangeError,
)
from ..models.dyadic import Dyadic, slope_exponent
from ..models.phi import PhiImage
from ..models.plmap import Orbital, PLMap, Point
from ..schemas.kab import CertificateCheck, CertificateReport
from . import plmap as pl
from .words import eval_word, parse_word  # noqa: F401  re-exported word API

logger = logging.getLogger(__name__)

BOX_LO = Dyadic(3, 8)
BOX_HI = Dyadic(7, 8)
LEFT_HINGE = (Dyadic(1, 8), Dyadic(3, 8))
RIGHT_HINGE = (Dyadic(5, 8), Dyadic(7, 8))


# ---------- generators ----------
@lru_cache(maxsize=None)
def standard_generators() -> Tuple[PLMap, PLMap]:
    """Return (f0, f1), the two generators of the finite presentation."""
    f0 = pl.from_breaks([(Dyadic(1, 4), Dyadic(1, 2)), (Dyadic(1, 2), Dyadic(3, 4))])
    f1 = pl.from_breaks([(Dyadic(1, 2), Dyadic(1, 2)), (Dyadic(5, 8), Dyadic(3, 4)), (Dyadic(3, 4), Dyadic(7, 8))])
    return f0, f1


@lru_cache(maxsize=64)
def x_n(n: int) -> PLMap:
    """
    Generator x_n of the infinite presentation.

    x0 = f0, x1 = f1 and x_n = f1 conjugated by f0^(n-1) for n >= 2.

    Raises:
        NegativeIndexError: If n < 0.
    """
    if n < 0:
        raise NegativeIndexError(f"generator index must be non-negative, got {n}")
    f0, f1 = standard_generators()
    if n == 0:
        return f0
    if n == 1:
        return f1
    return pl.conjugate(f1, pl.power(f0, n - 1))


@lru_cache(maxsize=None)
def g0_g1() -> Tuple[PLMap, PLMap]:
    """Return (g0, g1), supported in [3/8, 7/8] and mapped onto generators of F by `omega_rescale`."""
    g0 = pl.from_breaks([
        (Dyadic(3, 8), Dyadic(3, 8)), (Dyadic(1, 2), Dyadic(5, 8)),
        (Dyadic(5, 8), Dyadic(3, 4)), (Dyadic(7, 8), Dyadic(7, 8)),
    ])
    g1 = pl.from_breaks([
        (Dyadic(3, 8), Dyadic(3, 8)), (Dyadic(7, 16), Dyadic(1, 2)),
        (Dyadic(1, 2), Dyadic(9, 16)), (Dyadic(5, 8), Dyadic(5, 8)),
    ])
    return g0, g1


def standard_environment(depth: int = 6) -> Dict[str, PLMap]:
    """
    Name table for `eval_word`: x0 .. x{depth-1}, f0, f1, g0 and g1.

    Args:
        depth (int): Number of infinite-presentation generators to bind.

    Returns:
        dict: Mapping of generator names to elements.
    """
    f0, f1 = standard_generators()
    g0, g1 = g0_g1()
    env = {f"x{i}": x_n(i) for i in range(depth)}
    env.update(f0=f0, f1=f1, g0=g0, g1=g1)
    return env


# ---------- slope homomorphism ----------
def phi(f: PLMap) -> PhiImage:
    """
    Slope homomorphism: (log2 f'(0), log2 f'(1)).

    Args:
        f (PLMap): Element of F.

    Returns:
        PhiImage: Exponents of the first and last segment slopes.
    """
    (x0, y0), (x1, y1) = f.breaks[0], f.breaks[1]
    (u0, v0), (u1, v1) = f.breaks[-2], f.breaks[-1]
    return PhiImage(slope_exponent(x1 - x0, y1 - y0), slope_exponent(u1 - u0, v1 - v0))


def in_commutator_subgroup(f: PLMap) -> bool:
    return phi(f) == (0, 0)


def _check_rectangle(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise InputError(f"rectangle parameters must be positive, got ({a}, {b})")


def in_rectangular(f: PLMap, a: int, b: int) -> bool:
    """
    Membership in K(a,b): a divides the first and b the second exponent of phi(f).

    Raises:
        InputError: If a or b is not positive.
    """
    _check_rectangle(a, b)
    e0, e1 = phi(f)
    return e0 % a == 0 and e1 % b == 0


def coset_of(f: PLMap, a: int, b: int) -> Tuple[int, int]:
    """Class of f in F/K(a,b) = Z_a x Z_b."""
    _check_rectangle(a, b)
    e0, e1 = phi(f)
    return e0 % a, e1 % b


# ---------- the box [3/8, 7/8] ----------
def omega_rescale(f: PLMap) -> PLMap:
    """
    Conjugate an element supported in [3/8, 7/8] onto [0, 1] via t -> (8t - 3)/4.

    Raises:
        SupportOutOfRangeError: If f moves a point outside [3/8, 7/8].
    """
    if not pl.is_supported_in(f, BOX_LO, BOX_HI):
        raise SupportOutOfRangeError(f"support of {f} is not contained in [3/8, 7/8]")
    inside = [(x, y) for x, y in f.breaks if BOX_LO < x < BOX_HI]
    points = [(BOX_LO, BOX_LO), *inside, (BOX_HI, BOX_HI)]
    return PLMap.canonical([((8 * x - 3) / 4, (8 * y - 3) / 4) for x, y in points])


def omega_unscale(f: PLMap) -> PLMap:
    """Inverse of `omega_rescale`: place f in the box [3/8, 7/8] via t -> (4t + 3)/8."""
    scaled = [((4 * x + 3) / 8, (4 * y + 3) / 8) for x, y in f.breaks]
    return PLMap.canonical([(pl.ZERO, pl.ZERO), *scaled, (pl.ONE, pl.ONE)])


# ---------- generators of K(a,b) ----------
def _left_anchor(level: int) -> Point:
    if level == 1:
        return Dyadic(1, 16), Dyadic(1, 8)
    return Dyadic(1, 4 ** level), Dyadic(1, 2 ** level)


def _connector_waypoints(level: int, rng: Optional[random.Random]) -> List[Point]:
    """
    Waypoints from the slope-2^level anchor up to (1/8, 3/8).

    Consecutive waypoints satisfy x_k < x_{k+1} <= y_k < y_{k+1}, so any increasing
    interpolation through them lies strictly above the diagonal.

    This replaces a quarter/three-quarter choice of two connector points
    followed by repair of breakpoints on or below the diagonal: every waypoint
    here is above the diagonal by construction, so no repair pass exists. The
    unseeded chain doubles (x, y) -> (y, 2y); a seed jitters each step and
    inserts one extra point per step.
    """
    x, y = _left_anchor(level)
    points = [(x, y)]
    eighth = Dyadic(1, 8)
    while y < eighth:
        if rng is None:
            x, y = y, 2 * y
        else:
            x = y - (y - x) * Dyadic(rng.randint(0, 3), 8)
            y = y * rng.choice((Dyadic(3, 2), Dyadic(2)))
        points.append((x, y))
    points.append(LEFT_HINGE)
    if rng is None:
        return points

    staircase = [points[0]]
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        staircase.append((x0 + (x1 - x0) * Dyadic(rng.randint(1, 3), 4), y0 + (y1 - y0) * Dyadic(rng.randint(1, 3), 4)))
        staircase.append((x1, y1))
    return staircase


def kab_generators(a: int, b: int, seed: Optional[int] = None) -> Tuple[PLMap, PLMap]:
    """
    Build generators y0, y1 of the rectangular subgroup K(a,b).

    y0 has slope 2^a near 0, slope 2^-b near 1, passes through (1/8, 3/8) and
    (5/8, 7/8) with slope 1 in between, and lies strictly above the diagonal.
    The two connector regions are filled deterministically, or pseudo-randomly
    when a seed is given. y1 is the identity on [0, 3/8], t -> 2t - 3/8 on
    [3/8, 5/8] and agrees with y0 on [5/8, 1].

    Args:
        a (int): Exponent of the slope at 0, at least 1.
        b (int): Exponent of the slope at 1, at least 1.
        seed (Optional[int]): Seed for the connector completion.

    Returns:
        tuple: (y0, y1).

    Raises:
        InputError: If a or b is not positive.
    """
    _check_rectangle(a, b)
    rng = random.Random(seed) if seed is not None else None
    left = _connector_waypoints(a, rng)
    right = [(1 - y, 1 - x) for x, y in reversed(_connector_waypoints(b, rng))]
    waypoints = left + right
    logger.debug("y0 waypoints for (%d, %d): %s", a, b, waypoints)
    y0 = pl.dyadic_interpolator([x for x, _ in waypoints], [y for _, y in waypoints])

    tail = [p for p in y0.breaks if p[0] > RIGHT_HINGE[0]]
    y1 = PLMap.canonical([(pl.ZERO, pl.ZERO), (BOX_LO, BOX_LO), RIGHT_HINGE, *tail])
    return y0, y1


def kab_derived_elements(y0: PLMap, y1: PLMap) -> Tuple[PLMap, PLMap, PLMap]:
    """Return [y0, y1], [y0, y1]^y0 and [y0, y1]^(y0 y1^-1)."""
    c = pl.commutator(y0, y1)
    return c, pl.conjugate(c, y0), pl.conjugate(c, pl.compose(y0, pl.inverse(y1)))


def _check(group: str, name: str, passed: bool, observed) -> CertificateCheck:
    return CertificateCheck(group=group, name=name, passed=passed, detail=None if passed else f"observed {observed}")


def verify_kab_certificate(a: int, b: int, y0: PLMap, y1: PLMap) -> CertificateReport:
    """
    Check exactly every premise from which <y0, y1> = K(a,b) = F follows.

    Groups of checks:
        membership: phi(y0) = (a, -b) and phi(y1) = (0, -b).
        support_commutation: Supp(y0 y1^-1) = (0, 5/8), y0 = y1 on [5/8, 1],
            both relators of the two-generator presentation hold for (y0, y1),
            and y0, y1 do not commute (witness 1/4).
        commutator_identities: [y0, y1]^y0 = g0 and [y0, y1]^(y0 y1^-1) = g1.
        above_diagonal: y0 moves every point of (0, 1) to the right.

    Returns:
        CertificateReport: Every check with its outcome; `certified` iff all pass.
    """
    _check_rectangle(a, b)
    g0, g1 = g0_g1()
    quarter = Dyadic(1, 4)
    checks: List[CertificateCheck] = []

    phi0, phi1 = phi(y0), phi(y1)
    checks.append(_check("membership", f"phi(y0) = ({a}, {-b})", phi0 == (a, -b), phi0))
    checks.append(_check("membership", f"phi(y1) = (0, {-b})", phi1 == (0, -b), phi1))

    y1_inv = pl.inverse(y1)
    shift = pl.compose(y0, y1_inv)
    shift_orbs = pl.orbitals(shift)
    checks.append(_check(
        "support_commutation", "Supp(y0 y1^-1) = (0, 5/8)",
        shift_orbs == [Orbital(pl.ZERO, RIGHT_HINGE[0])], [str(o) for o in shift_orbs],
    ))
    checks.append(_check(
        "support_commutation", "y0 = y1 on [5/8, 1]",
        pl.support_equals(y0, y1, RIGHT_HINGE[0], pl.ONE), "disagreement",
    ))
    for k in (1, 2):
        relator = pl.commutator(shift, pl.conjugate(y1, pl.power(y0, k)))
        checks.append(_check(
            "support_commutation", f"[y0 y1^-1, y1^(y0^{k})] = 1", relator.is_identity(), relator,
        ))
    c = pl.commutator(y0, y1)
    image = pl.evaluate(c, quarter)
    checks.append(_check("support_commutation", "1/4 [y0, y1] != 1/4", image != quarter, image))

    _, by_y0, by_shift = kab_derived_elements(y0, y1)
    checks.append(_check("commutator_identities", "[y0, y1]^y0 = g0", by_y0 == g0, by_y0))
    checks.append(_check("commutator_identities", "[y0, y1]^(y0 y1^-1) = g1", by_shift == g1, by_shift))

    y0_orbs = pl.orbitals(y0)
    half = Dyadic(1, 2)
    above = y0_orbs == [Orbital(pl.ZERO, pl.ONE)] and pl.evaluate(y0, half) > half
    checks.append(_check("above_diagonal", "y0(t) > t on (0, 1)", above, [str(o) for o in y0_orbs]))

    report = CertificateReport(a=a, b=b, checks=checks, certified=all(ch.passed for ch in checks))
    logger.info("K(%d,%d) certificate: %s", a, b, "pass" if report.certified else f"failed {report.failed_groups()}")
    return report


# ---------- working inside K(a,b) ----------
def reduce_to_commutator_subgroup(w: PLMap, a: int, b: int, y0: PLMap, y1: PLMap) -> Tuple[int, int, PLMap]:
    """
    Strip the phi-part of w in K(a,b) using the generators y0, y1.

    For phi(w) = (a n, b m) returns n, k = m + n and the residual
    w y0^-n y1^k, which lies in F'.

    Raises:
        NotInRectangularError: If w is not in K(a,b).
    """
    if not in_rectangular(w, a, b):
        raise NotInRectangularError(f"phi(w) = {phi(w)} is not in ({a}Z, {b}Z)")
    e0, e1 = phi(w)
    n, k = e0 // a, e1 // b + e0 // a
    residual = pl.product(w, pl.power(y0, -n), pl.power(y1, k))
    return n, k, residual


def conjugate_into_box(h: PLMap, y0: PLMap, y1: PLMap) -> Tuple[int, int, PLMap]:
    """
    Conjugate h in F' by y0^n y1^m so that its support lies in (3/8, 7/8).

    The left end of the support is pushed to the right of 3/8 along y0, then the
    right end is pushed below 7/8 along y1, which fixes 3/8.

    Returns:
        tuple: (n, m, h^(y0^n y1^m)).

    Raises:
        NotInCommutatorSubgroupError: If phi(h) != (0, 0).
        IterationCapExceededError: If a push does not terminate within the cap.
    """
    if not in_commutator_subgroup(h):
        raise NotInCommutatorSubgroupError(f"phi(h) = {phi(h)} is not (0, 0)")
    hull = pl.support_hull(h)
    if hull is None:
        return 0, 0, h
    c, d = hull
    n = pl.push_to_end(y0, Orbital(pl.ZERO, pl.ONE), c, RIGHT_HINGE[0], end="hi")
    y0n = pl.power(y0, n)
    m = pl.push_to_end(y1, Orbital(BOX_LO, pl.ONE), pl.evaluate(y0n, d), Dyadic(1, 2), end="lo")
    conjugated = pl.conjugate(h, pl.compose(y0n, pl.power(y1, m)))
    logger.debug("conjugated into box with n=%d, m=%d", n, m)
    return n, m, conjugated
