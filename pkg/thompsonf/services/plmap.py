import logging
from fractions import Fraction
from typing import Iterable, List, Literal, Optional, Sequence, Tuple

from ..core.config import settings
from ..core.exceptions import (
    BadInputError,
    CoordinateOutOfRangeError,
    InputError,
    IterationCapExceededError,
    NotDyadicError,
    NotInOrbitalError,
    NotMonotoneError,
    NotPowerOfTwoError,
    OutOfRangeError,
    SlopeNotPowerOfTwoError,
)
from ..models.dyadic import Dyadic, Number, as_exact, is_power_of_two, slope_exponent
from ..models.plmap import Orbital, PLMap, Point

logger = logging.getLogger(__name__)

ZERO = Dyadic(0)
ONE = Dyadic(1)


def identity() -> PLMap:
    """Return the identity element, breaks [(0, 0), (1, 1)]."""
    return PLMap(((ZERO, ZERO), (ONE, ONE)))


def from_breaks(points: Iterable[Tuple[Number, Number]]) -> PLMap:
    """
    Validate and canonicalize a break list.

    The endpoints (0, 0) and (1, 1) are added when absent; points may be given
    in any order and are sorted by x.

    Args:
        points (Iterable[tuple]): (x, y) pairs of dyadic coordinates.

    Returns:
        PLMap: The canonical element.

    Raises:
        NotDyadicError: If a coordinate is not in Z[1/2].
        CoordinateOutOfRangeError: If a coordinate lies outside [0, 1].
        NotMonotoneError: If x or y values are not strictly increasing.
        SlopeNotPowerOfTwoError: If a segment slope is not an integral power of two.
    """
    pts = {(Dyadic(x), Dyadic(y)) for x, y in points}
    for x, y in pts:
        if not (0 <= x <= 1 and 0 <= y <= 1):
            raise CoordinateOutOfRangeError(f"break ({x}, {y}) lies outside the unit square")
    pts |= {(ZERO, ZERO), (ONE, ONE)}
    ordered = sorted(pts)
    for (x0, y0), (x1, y1) in zip(ordered, ordered[1:]):
        if not (x0 < x1 and y0 < y1):
            raise NotMonotoneError(f"breaks ({x0}, {y0}) and ({x1}, {y1}) are not strictly increasing")
        try:
            slope_exponent(x1 - x0, y1 - y0)
        except NotPowerOfTwoError as exc:
            raise SlopeNotPowerOfTwoError(
                f"segment ({x0}, {y0})-({x1}, {y1}): {exc}"
            ) from exc
    return PLMap.canonical(ordered)


def evaluate(f: PLMap, t: Number) -> Fraction:
    """
    Image of t under f (written t·f in word order).

    Returns a Dyadic whenever t is dyadic.

    Raises:
        OutOfRangeError: If t lies outside [0, 1].
    """
    if not 0 <= t <= 1:
        raise OutOfRangeError(f"{t} lies outside [0, 1]")
    i = f.segment_index(t)
    (x0, y0), (x1, y1) = f.breaks[i], f.breaks[i + 1]
    return as_exact(y0 + (t - x0) * (y1 - y0) / (x1 - x0))


def inverse(f: PLMap) -> PLMap:
    """
    Inverse map, obtained by swapping the coordinates of every break.

    Args:
        f (PLMap): The map.

    Returns:
        PLMap: f⁻¹, again in canonical form.
    """
    return PLMap(tuple((y, x) for x, y in f.breaks))


def compose(f: PLMap, g: PLMap) -> PLMap:
    """
    Word-order product fg: apply f, then g.

    The composite is affine between consecutive points of the union of f's
    break abscissae and the f-preimages of g's break abscissae.
    """
    f_inv = inverse(f)
    xs = set(f.xs) | {evaluate(f_inv, x) for x in g.xs}
    return PLMap.canonical([(x, evaluate(g, evaluate(f, x))) for x in sorted(xs)])


def product(*maps: PLMap) -> PLMap:
    """Word-order product of any number of maps."""
    result = identity()
    for f in maps:
        result = compose(result, f)
    return result


def conjugate(f: PLMap, g: PLMap) -> PLMap:
    """f^g = g⁻¹fg in word order."""
    return product(inverse(g), f, g)


def commutator(f: PLMap, g: PLMap) -> PLMap:
    """[f, g] = f g f⁻¹ g⁻¹ in word order."""
    return product(f, g, inverse(f), inverse(g))


def power(f: PLMap, n: int) -> PLMap:
    """
    fⁿ by repeated squaring; negative n powers the inverse.

    Args:
        f (PLMap): The map.
        n (int): Any integer exponent.

    Returns:
        PLMap: The identity for n = 0, otherwise fⁿ.
    """
    if n < 0:
        f, n = inverse(f), -n
    result, base = identity(), f
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def rev(f: PLMap) -> PLMap:
    """Conjugate f by t ↦ 1 − t: breaks (1 − x, 1 − y) in reversed order."""
    return PLMap(tuple((ONE - x, ONE - y) for x, y in reversed(f.breaks)))


def right_slope(f: PLMap, t: Number) -> Fraction:
    """Slope of f immediately to the right of t (0 <= t < 1)."""
    i = f.segment_index(t)
    (x0, y0), (x1, y1) = f.breaks[i], f.breaks[i + 1]
    return Fraction(y1 - y0) / (x1 - x0)


def left_slope(f: PLMap, t: Number) -> Fraction:
    """Slope of f immediately to the left of t (0 < t <= 1)."""
    i = f.segment_index(t)
    if f.breaks[i][0] == t:
        i -= 1
    (x0, y0), (x1, y1) = f.breaks[i], f.breaks[i + 1]
    return Fraction(y1 - y0) / (x1 - x0)


def _fixed_point_candidates(f: PLMap) -> List[Fraction]:
    candidates = set(f.xs)
    for (x0, y0), (x1, y1) in f.segments():
        d0, d1 = y0 - x0, y1 - x1
        if d0 * d1 < 0:
            # displacement is affine on the segment, so it has exactly one zero
            candidates.add(as_exact(x0 + d0 * (x1 - x0) / (d0 - d1)))
    return sorted(candidates)


def orbitals(f: PLMap) -> List[Orbital]:
    """
    Maximal open intervals on which f moves every point, left to right.

    Fixed points inside a segment y = sx + c with s != 1 are solved exactly
    as x = c / (1 − s) and may be non-dyadic.
    """
    result: List[Orbital] = []
    lo: Optional[Fraction] = None
    points = _fixed_point_candidates(f)
    for p, q in zip(points, points[1:]):
        mid = (p + q) / 2
        moving = evaluate(f, mid) != mid
        if lo is not None and (not moving or evaluate(f, p) == p):
            result.append(Orbital(lo, p))
            lo = None
        if moving and lo is None:
            lo = p
    if lo is not None:
        result.append(Orbital(lo, ONE))
    return result


def support_hull(f: PLMap) -> Optional[Tuple[Fraction, Fraction]]:
    """Smallest closed interval containing Supp(f), or None for the identity."""
    orbs = orbitals(f)
    if not orbs:
        return None
    return orbs[0].lo, orbs[-1].hi


def is_supported_in(f: PLMap, lo: Number, hi: Number) -> bool:
    return all(lo <= orb.lo and orb.hi <= hi for orb in orbitals(f))


def support_equals(f: PLMap, g: PLMap, lo: Number, hi: Number) -> bool:
    """
    True iff f and g agree at every point of [lo, hi].

    Both maps are affine between consecutive points of the union of their break
    abscissae, so agreement on that grid decides agreement on the interval.
    """
    if not lo < hi:
        raise InputError(f"empty interval [{lo}, {hi}]")
    grid = {lo, hi} | {x for x in f.xs + g.xs if lo < x < hi}
    return all(evaluate(f, x) == evaluate(g, x) for x in grid)


def push_to_end(
    f: PLMap,
    orb: Orbital,
    c: Number,
    eps: Number,
    end: Literal["lo", "hi"] = "lo",
    cap: Optional[int] = None,
) -> int:
    """
    Find n with c·fⁿ within eps of an end of the orbital `orb` of f.

    With `end="lo"` the result satisfies lo < c·fⁿ < lo + eps, with `end="hi"`
    it satisfies hi − eps < c·fⁿ < hi. Iterates f or f⁻¹, whichever moves c
    towards the requested end.

    Args:
        f (PLMap): The map.
        orb (Orbital): An orbital of f containing c.
        c (Number): Start point.
        eps (Number): Positive tolerance.
        end (str): Which end to approach.
        cap (Optional[int]): Iteration bound; defaults to `settings.ITERATION_CAP`.

    Returns:
        int: The signed exponent n.

    Raises:
        InputError: If eps is not positive or cap is below 1.
        NotInOrbitalError: If orb is not an orbital of f or c is not inside it.
        IterationCapExceededError: If the bound is hit first.
    """
    if eps <= 0:
        raise InputError(f"eps must be positive, got {eps}")
    if orb not in orbitals(f):
        raise NotInOrbitalError(f"{orb} is not an orbital of the map")
    if c not in orb:
        raise NotInOrbitalError(f"{c} does not lie in the orbital {orb}")
    cap = settings.ITERATION_CAP if cap is None else cap
    if cap < 1:
        raise InputError(f"iteration cap must be at least 1, got {cap}")

    def reached(t: Fraction) -> bool:
        if end == "lo":
            return orb.lo < t < orb.lo + eps
        return orb.hi - eps < t < orb.hi

    if reached(c):
        return 0
    goes_down = evaluate(f, c) < c
    forward = goes_down if end == "lo" else not goes_down
    step, sign = (f, 1) if forward else (inverse(f), -1)
    t = c
    for n in range(1, cap + 1):
        t = evaluate(step, t)
        if reached(t):
            logger.debug("push_to_end reached %s end of %s after %d steps", end, orb, n)
            return sign * n
    raise IterationCapExceededError(f"no power of the map within {cap} steps brings {c} near {end} of {orb}")


def _standard_pieces(lo: Dyadic, hi: Dyadic) -> List[Dyadic]:
    """Lengths of the greedy decomposition of [lo, hi] into standard dyadic intervals."""
    lengths: List[Dyadic] = []
    t = lo
    while t < hi:
        length = ONE if t.denominator == 1 else Dyadic(1, t.denominator)
        while t + length > hi:
            length = length / 2
        lengths.append(length)
        t = t + length
    return lengths


def _split_largest(lengths: List[Dyadic]) -> None:
    i = lengths.index(max(lengths))
    half = lengths[i] / 2
    lengths[i:i + 1] = [half, half]


def _interpolate_interval(x0: Dyadic, x1: Dyadic, y0: Dyadic, y1: Dyadic) -> List[Point]:
    ratio = Fraction(y1 - y0) / (x1 - x0)
    if is_power_of_two(ratio.numerator) and is_power_of_two(ratio.denominator):
        return [(x1, y1)]
    source, target = _standard_pieces(x0, x1), _standard_pieces(y0, y1)
    while len(source) != len(target):
        _split_largest(source if len(source) < len(target) else target)
    points, x, y = [], x0, y0
    for dx, dy in zip(source, target):
        x, y = x + dx, y + dy
        points.append((x, y))
    return points


def dyadic_interpolator(xs: Sequence[Number], ys: Sequence[Number]) -> PLMap:
    """
    Construct an element of F sending each xs[i] to ys[i].

    Between consecutive constraints, the source and target intervals are cut
    into standard dyadic pieces (the larger pieces of the shorter list are
    halved until both lists have the same length) and matched pieces are mapped
    affinely. Intervals whose length ratio is already a power of two map by a
    single affine segment, so xs == ys yields the identity.

    Raises:
        BadInputError: If the lists differ in length, are not strictly increasing,
            contain non-dyadic values or leave the open interval (0, 1).
    """
    if len(xs) != len(ys):
        raise BadInputError(f"{len(xs)} source points but {len(ys)} target points")
    try:
        xs = [Dyadic(x) for x in xs]
        ys = [Dyadic(y) for y in ys]
    except NotDyadicError as exc:
        raise BadInputError(str(exc)) from exc
    for values in (xs, ys):
        if any(not 0 < v < 1 for v in values):
            raise BadInputError("constraint points must lie in the open interval (0, 1)")
        if any(a >= b for a, b in zip(values, values[1:])):
            raise BadInputError("constraint points must be strictly increasing")
    sources, targets = [ZERO, *xs, ONE], [ZERO, *ys, ONE]
    points: List[Point] = [(ZERO, ZERO)]
    for i in range(len(sources) - 1):
        points.extend(_interpolate_interval(sources[i], sources[i + 1], targets[i], targets[i + 1]))
    logger.debug("interpolated %d constraints with %d breaks", len(xs), len(points))
    return PLMap.canonical(points)
