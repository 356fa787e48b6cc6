"""Singular integral affine polygons and their fractional integral points.

The central object is a two-dimensional integral affine manifold of polygonal
type, drawn in a single chart where every branch cut runs straight downward
from its focus-focus singularity.  In this chart the region is bounded by two
piecewise-linear graphs over a global horizontal coordinate eta:

* the *top* polyline, which is straight across every singularity (no slope
  jumps), and
* the *bottom* polyline, whose slope jumps by exactly the singularity
  multiplicity at each singularity position (the jump is what the downward
  branch cut absorbs; the facet is straight in the intrinsic affine
  structure).

Corners of the region may occur only at the two eta-extremes; an extreme may
instead carry a vertical boundary facet.

All coordinates are exact rationals (`fractions.Fraction`); no floating point
enters any predicate.  Everything here is an immutable value and every
operation is a pure function.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

RatLike = Union[Fraction, int, str]


def rat(value: RatLike) -> Fraction:
    """Parse an exact rational from an int, Fraction, or "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Encode a rational losslessly as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalPoint:
    """A point of the polygon in the downward-cut chart coordinates (eta, xi)."""

    eta: Fraction
    xi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eta", rat(self.eta))
        object.__setattr__(self, "xi", rat(self.xi))


@dataclass(frozen=True)
class Singularity:
    """A focus-focus singularity on the vertical line eta = eta_pos.

    `multiplicity` is the number of simple focus-focus points merged at this
    position (1 in every instance drawn from the source geometry).
    """

    eta_pos: Fraction
    xi_pos: Fraction
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "eta_pos", rat(self.eta_pos))
        object.__setattr__(self, "xi_pos", rat(self.xi_pos))
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise ValueError("multiplicity must be a positive integer")


@dataclass(frozen=True)
class BoundaryPolyline:
    """A piecewise-linear graph over eta given by its vertices.

    Vertices must be strictly increasing in eta.  The facet slopes are exact
    rationals, derived from consecutive vertices.
    """

    vertices: tuple[RationalPoint, ...]

    def __post_init__(self):
        verts = tuple(
            v if isinstance(v, RationalPoint) else RationalPoint(*v)
            for v in self.vertices
        )
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise ValueError("polyline needs at least two vertices")
        for u, v in zip(verts, verts[1:]):
            if not u.eta < v.eta:
                raise ValueError("polyline vertices must be strictly increasing in eta")

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(
            (v.xi - u.xi) / (v.eta - u.eta)
            for u, v in zip(self.vertices, self.vertices[1:])
        )

    @property
    def eta_min(self) -> Fraction:
        return self.vertices[0].eta

    @property
    def eta_max(self) -> Fraction:
        return self.vertices[-1].eta

    def value(self, eta: Fraction) -> Fraction:
        """Evaluate the graph at eta (must lie within the eta-range)."""
        eta = rat(eta)
        if not (self.eta_min <= eta <= self.eta_max):
            raise ValueError(f"eta={eta} outside polyline range")
        for u, v in zip(self.vertices, self.vertices[1:]):
            if u.eta <= eta <= v.eta:
                return u.xi + (v.xi - u.xi) * (eta - u.eta) / (v.eta - u.eta)
        raise AssertionError("unreachable")

    def slope_left(self, eta: Fraction) -> Fraction:
        """Slope of the facet immediately left of eta (eta interior)."""
        eta = rat(eta)
        for (u, v), s in zip(zip(self.vertices, self.vertices[1:]), self.slopes):
            if u.eta < eta <= v.eta:
                return s
        raise ValueError(f"no facet left of eta={eta}")

    def slope_right(self, eta: Fraction) -> Fraction:
        """Slope of the facet immediately right of eta (eta interior)."""
        eta = rat(eta)
        for (u, v), s in zip(zip(self.vertices, self.vertices[1:]), self.slopes):
            if u.eta <= eta < v.eta:
                return s
        raise ValueError(f"no facet right of eta={eta}")


@dataclass(frozen=True)
class AffinePolygon:
    """A polygonal singular integral affine manifold in the downward-cut chart.

    `left_corner` / `right_corner` record whether the eta-extreme is a corner
    (top and bottom meet) or a vertical boundary facet (positive fiber
    length).
    """

    eta_min: Fraction
    eta_max: Fraction
    singularities: tuple[Singularity, ...]
    top: BoundaryPolyline
    bottom: BoundaryPolyline
    left_corner: bool = True
    right_corner: bool = True

    def __post_init__(self):
        object.__setattr__(self, "eta_min", rat(self.eta_min))
        object.__setattr__(self, "eta_max", rat(self.eta_max))
        sings = tuple(sorted(self.singularities, key=lambda s: s.eta_pos))
        object.__setattr__(self, "singularities", sings)

    def fiber(self, eta: Fraction) -> tuple[Fraction, Fraction]:
        """The (bottom, top) xi-interval over eta."""
        return self.bottom.value(eta), self.top.value(eta)

    def contains(self, point: RationalPoint) -> bool:
        """Exact membership in the closed region (boundary points count)."""
        if not (self.eta_min <= point.eta <= self.eta_max):
            return False
        lo, hi = self.fiber(point.eta)
        return lo <= point.xi <= hi


@dataclass(frozen=True)
class FractionalPoint:
    """A (1/d)-integral point of the polygon: column index a, depth index i.

    The column sits at eta = a/d; the depth counts (1/d)-steps downward from
    the topmost (1/d)-integral height in that column.  For the projective
    plane instance (top boundary at xi = 0) the embedded coordinates are
    (a/d, -i/d).  The denominator d = 0 is reserved for the unit point
    q_{0,0} by convention, so that the graded ring of formal sums has a unit.
    """

    a: int
    i: int
    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("denominator must be nonnegative")
        if self.d == 0 and (self.a, self.i) != (0, 0):
            raise ValueError("denominator 0 is reserved for the unit point q_{0,0}")


def _slope_jumps(line: BoundaryPolyline) -> dict[Fraction, Fraction]:
    """Map interior vertex eta -> slope jump (right slope minus left slope)."""
    jumps: dict[Fraction, Fraction] = {}
    for vertex, s_left, s_right in zip(line.vertices[1:-1], line.slopes, line.slopes[1:]):
        if s_right != s_left:
            jumps[vertex.eta] = s_right - s_left
    return jumps


def validate(polygon: AffinePolygon) -> list[str]:
    """Check every axiom; return one message per violation (empty = valid)."""
    errs: list[str] = []
    if not polygon.eta_min < polygon.eta_max:
        errs.append(f"eta range is empty: [{polygon.eta_min}, {polygon.eta_max}]")
        return errs
    for name, line in (("top", polygon.top), ("bottom", polygon.bottom)):
        if line.eta_min != polygon.eta_min or line.eta_max != polygon.eta_max:
            errs.append(
                f"{name} polyline spans [{line.eta_min}, {line.eta_max}], "
                f"expected [{polygon.eta_min}, {polygon.eta_max}]"
            )
    if errs:
        return errs

    sing_eta = {s.eta_pos: s for s in polygon.singularities}
    if len(sing_eta) != len(polygon.singularities):
        errs.append("two singularities share an eta position")

    for s in polygon.singularities:
        if not (polygon.eta_min < s.eta_pos < polygon.eta_max):
            errs.append(f"singularity at eta={s.eta_pos} not strictly interior")
            continue
        lo, hi = polygon.fiber(s.eta_pos)
        if not (lo < s.xi_pos < hi):
            errs.append(
                f"singularity at eta={s.eta_pos} has xi={s.xi_pos} outside the "
                f"open fiber ({lo}, {hi})"
            )

    # Top must be straight everywhere in this chart; the bottom absorbs the
    # shear: slope jump +multiplicity exactly at each singularity position.
    for eta, jump in _slope_jumps(polygon.top).items():
        if eta in sing_eta:
            errs.append(
                f"top boundary jumps by {jump} at the singularity eta={eta} "
                "(monodromy inconsistency: top must stay straight)"
            )
        else:
            errs.append(f"interior corner on the top boundary at eta={eta}")
    bottom_jumps = _slope_jumps(polygon.bottom)
    for eta, jump in bottom_jumps.items():
        if eta in sing_eta:
            want = Fraction(sing_eta[eta].multiplicity)
            if jump != want:
                errs.append(
                    f"bottom slope jump at eta={eta} is {jump}, expected "
                    f"+{want} (monodromy inconsistency)"
                )
        else:
            errs.append(f"interior corner on the bottom boundary at eta={eta}")
    for s in polygon.singularities:
        if polygon.eta_min < s.eta_pos < polygon.eta_max and s.eta_pos not in bottom_jumps:
            errs.append(
                f"bottom slope jump at eta={s.eta_pos} is 0, expected "
                f"+{s.multiplicity} (monodromy inconsistency)"
            )

    # Nonempty interior fibers: the gap is piecewise linear, so positivity at
    # every breakpoint of the combined partition implies positivity throughout.
    breaks = sorted(
        {v.eta for v in polygon.top.vertices} | {v.eta for v in polygon.bottom.vertices}
    )
    for eta in breaks:
        lo, hi = polygon.fiber(eta)
        interior = polygon.eta_min < eta < polygon.eta_max
        if interior and not lo < hi:
            errs.append(f"bottom meets top at interior eta={eta}")
        if not interior and lo > hi:
            errs.append(f"bottom above top at eta={eta}")

    for flag, eta, side in (
        (polygon.left_corner, polygon.eta_min, "left"),
        (polygon.right_corner, polygon.eta_max, "right"),
    ):
        lo, hi = polygon.fiber(eta)
        if flag and lo != hi:
            errs.append(f"{side} extreme flagged as corner but fiber has length {hi - lo}")
        if not flag and not lo < hi:
            errs.append(f"{side} extreme flagged as vertical facet but fiber is empty")
    return errs


def cp2_model(singularity_xi: RatLike = Fraction(-1, 4)) -> AffinePolygon:
    """The bigon mirror to the projective plane, scaled to top length 2.

    eta runs over [-1, 1]; the top boundary is xi = 0; the bottom runs from
    (-1, 0) down to (0, -1/2) and back up to (1, 0); one simple singularity
    sits at eta = 0.  Its height on the invariant line is a free parameter in
    (-1/2, 0); no enumeration output depends on it.
    """
    xi = rat(singularity_xi)
    if not Fraction(-1, 2) < xi < 0:
        raise ValueError("singularity_xi must lie strictly between -1/2 and 0")
    return AffinePolygon(
        eta_min=Fraction(-1),
        eta_max=Fraction(1),
        singularities=(Singularity(Fraction(0), xi, 1),),
        top=BoundaryPolyline((RationalPoint(-1, 0), RationalPoint(1, 0))),
        bottom=BoundaryPolyline(
            (RationalPoint(-1, 0), RationalPoint(0, Fraction(-1, 2)), RationalPoint(1, 0))
        ),
        left_corner=True,
        right_corner=True,
    )


def dp6_model(widths: Sequence[int] = (1, 1, 1)) -> AffinePolygon:
    """A four-sided instance with two vertical facets and two singularities.

    `widths` are the three affine widths (left facet to first singularity,
    between the singularities, second singularity to right facet); they are
    free positive-integer parameters.  The top boundary is flat at xi = 0 and
    the bottom has slopes -1, 0, +1, so each singularity absorbs a unit slope
    jump.  The left vertical facet has length h and the right one h + w1 - w3
    with h chosen to keep both positive.
    """
    w1, w2, w3 = (int(w) for w in widths)
    if min(w1, w2, w3) < 1:
        raise ValueError("widths must be positive integers")
    h = max(1, w3 - w1 + 1)
    total = w1 + w2 + w3
    bottom = BoundaryPolyline(
        (
            RationalPoint(0, -h),
            RationalPoint(w1, -h - w1),
            RationalPoint(w1 + w2, -h - w1),
            RationalPoint(total, -h - w1 + w3),
        )
    )
    sings = tuple(
        Singularity(Fraction(eta), (bottom.value(eta) + 0) / 2, 1)
        for eta in (w1, w1 + w2)
    )
    return AffinePolygon(
        eta_min=Fraction(0),
        eta_max=Fraction(total),
        singularities=sings,
        top=BoundaryPolyline((RationalPoint(0, 0), RationalPoint(total, 0))),
        bottom=bottom,
        left_corner=False,
        right_corner=False,
    )


def column_range(polygon: AffinePolygon, d: int, a: int) -> tuple[Fraction, int]:
    """Topmost (1/d)-integral height and point count in the column eta = a/d.

    Returns (xi_top_lattice, count); count = 0 when the column misses the
    region.
    """
    eta = Fraction(a, d)
    if not (polygon.eta_min <= eta <= polygon.eta_max):
        return Fraction(0), 0
    lo, hi = polygon.fiber(eta)
    b_hi = math.floor(hi * d)
    b_lo = math.ceil(lo * d)
    if b_hi < b_lo:
        return Fraction(0), 0
    return Fraction(b_hi, d), b_hi - b_lo + 1


def fractional_points(polygon: AffinePolygon, d: int) -> list[FractionalPoint]:
    """All points of the region with both chart coordinates in (1/d)Z.

    Enumerated column-by-column at eta = a/d, each column indexed by depth
    from its topmost lattice height; sorted by (a, i).  Points on the closed
    boundary count as members.  d = 0 yields the single unit point.
    """
    if d < 0:
        raise ValueError("denominator must be nonnegative")
    if d == 0:
        return [FractionalPoint(0, 0, 0)]
    points: list[FractionalPoint] = []
    a_lo = math.ceil(polygon.eta_min * d)
    a_hi = math.floor(polygon.eta_max * d)
    for a in range(a_lo, a_hi + 1):
        _, count = column_range(polygon, d, a)
        points.extend(FractionalPoint(a, i, d) for i in range(count))
    return points


def embed(polygon: AffinePolygon, point: FractionalPoint) -> RationalPoint:
    """Chart coordinates of a fractional point: (a/d, top_lattice - i/d)."""
    if point.d == 0:
        raise ValueError("the unit point has no embedding")
    xi_top, count = column_range(polygon, point.d, point.a)
    if not 0 <= point.i < count:
        raise ValueError(f"{point} does not lie in the region")
    return RationalPoint(Fraction(point.a, point.d), xi_top - Fraction(point.i, point.d))


def count_points(polygon: AffinePolygon, d: int) -> int:
    """Brute-force membership count over the whole (1/d)-lattice bounding box.

    Independent oracle for `fractional_points`: every candidate (a/d, b/d) in
    the bounding box is tested directly against the boundary polylines.
    """
    if d < 0:
        raise ValueError("denominator must be nonnegative")
    if d == 0:
        return 1
    xi_values = [v.xi for v in polygon.top.vertices] + [v.xi for v in polygon.bottom.vertices]
    b_lo = math.ceil(min(xi_values) * d)
    b_hi = math.floor(max(xi_values) * d)
    total = 0
    for a in range(math.ceil(polygon.eta_min * d), math.floor(polygon.eta_max * d) + 1):
        for b in range(b_lo, b_hi + 1):
            if polygon.contains(RationalPoint(Fraction(a, d), Fraction(b, d))):
                total += 1
    return total


def monodromy_shear(s: Singularity, turns: int = 1) -> tuple[tuple[int, int], tuple[int, int]]:
    """Tangent-space monodromy around the singularity, counterclockwise^turns."""
    return ((1, 0), (s.multiplicity * turns, 1))


# -- JSON instance schema -----------------------------------------------------
#
# {eta_min, eta_max, singularities: [{eta, xi, mult}], top: [[eta, xi], ...],
#  bottom: [[eta, xi], ...], corners: {left: bool, right: bool}}
# with all rationals encoded as "p/q" strings.


def polygon_to_json(polygon: AffinePolygon) -> dict:
    return {
        "eta_min": rat_str(polygon.eta_min),
        "eta_max": rat_str(polygon.eta_max),
        "singularities": [
            {"eta": rat_str(s.eta_pos), "xi": rat_str(s.xi_pos), "mult": s.multiplicity}
            for s in polygon.singularities
        ],
        "top": [[rat_str(v.eta), rat_str(v.xi)] for v in polygon.top.vertices],
        "bottom": [[rat_str(v.eta), rat_str(v.xi)] for v in polygon.bottom.vertices],
        "corners": {"left": polygon.left_corner, "right": polygon.right_corner},
    }


def polygon_from_json(data: dict) -> AffinePolygon:
    return AffinePolygon(
        eta_min=rat(data["eta_min"]),
        eta_max=rat(data["eta_max"]),
        singularities=tuple(
            Singularity(rat(s["eta"]), rat(s["xi"]), int(s.get("mult", 1)))
            for s in data["singularities"]
        ),
        top=BoundaryPolyline(tuple(RationalPoint(rat(e), rat(x)) for e, x in data["top"])),
        bottom=BoundaryPolyline(
            tuple(RationalPoint(rat(e), rat(x)) for e, x in data["bottom"])
        ),
        left_corner=bool(data["corners"]["left"]),
        right_corner=bool(data["corners"]["right"]),
    )


def load_polygon(path: str) -> AffinePolygon:
    with open(path, "r", encoding="utf-8") as fh:
        return polygon_from_json(json.load(fh))


def save_polygon(polygon: AffinePolygon, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(polygon_to_json(polygon), fh, indent=2)
        fh.write("\n")
