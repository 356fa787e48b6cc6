"""Degree-zero morphism spaces and their triangle product.

A basis vector is a fractional point of the polygon read as a morphism from
level d1 to level d2 with denominator n = d2 - d1.  The product of two basis
vectors is the integer formal sum

    mu2(q_{b,j}, q_{a,i}) = sum_{s=0}^{k} C(k, s) * q_{a+b, i+j+s}

where k counts how many times the triangle spanned by the three section paths
covers the critical lines.  For the projective-plane instance k has the
closed form min(|a|, |b|) when the columns have opposite signs and 0
otherwise; for a general polygon it is computed geometrically by
`critical_cover`, one count per singularity.

The geometric rule: lift the three section paths to the universal cover of
the base annulus as straight graphs over eta (a path of level n drops with
slope -n; the reference lift sits at height 0, so the level-n side through
q_{a,i} is y = a - n*eta and the outgoing side is y = a + b - (n+m)*eta).
Critical values sit at the half-integer heights of each singularity line
eta = c; the count k_c is the number of half-integers strictly inside the
triangle's vertical cross-section there.  The cross-section endpoints are
integers whenever n*c and (n+m)*c are (hence for instances with integer
singularity positions), which keeps the half-integer count unambiguous.

All coefficients are arbitrary-precision integers; every sign is positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from .affine import AffinePolygon, FractionalPoint, column_range


@dataclass(frozen=True)
class BasisVector:
    """A morphism generator from level d1 to level d2 (d2 - d1 = point.d)."""

    d1: int
    d2: int
    point: FractionalPoint

    def __post_init__(self):
        if self.d2 - self.d1 != self.point.d:
            raise ValueError("denominator must equal d2 - d1")

    @property
    def a(self) -> int:
        return self.point.a

    @property
    def i(self) -> int:
        return self.point.i

    @property
    def n(self) -> int:
        return self.point.d

    def is_unit(self) -> bool:
        return self.point.d == 0


def basis_vector(d1: int, d2: int, a: int, i: int) -> BasisVector:
    return BasisVector(d1, d2, FractionalPoint(a, i, d2 - d1))


def unit(d: int = 0) -> BasisVector:
    """The identity morphism at level d."""
    return BasisVector(d, d, FractionalPoint(0, 0, 0))


@dataclass(frozen=True)
class FormalSum:
    """Integer combination of basis vectors sharing (d1, d2), keyed by (a, i)."""

    d1: int
    d2: int
    terms: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def from_dict(d1: int, d2: int, coeffs: Mapping[tuple[int, int], int]) -> "FormalSum":
        terms = tuple(sorted((k, c) for k, c in coeffs.items() if c != 0))
        return FormalSum(d1, d2, terms)

    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def coefficient(self, a: int, i: int) -> int:
        return self.coeffs().get((a, i), 0)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if (self.d1, self.d2) != (other.d1, other.d2):
            raise ValueError("cannot add sums with different (d1, d2)")
        acc = self.coeffs()
        for key, c in other.terms:
            acc[key] = acc.get(key, 0) + c
        return FormalSum.from_dict(self.d1, self.d2, acc)

    def scale(self, c: int) -> "FormalSum":
        return FormalSum.from_dict(self.d1, self.d2, {k: c * v for k, v in self.terms})

    def basis_vectors(self) -> list[tuple[BasisVector, int]]:
        return [
            (BasisVector(self.d1, self.d2, FractionalPoint(a, i, self.d2 - self.d1)), c)
            for (a, i), c in self.terms
        ]


def sum_to_json(s: FormalSum) -> dict:
    return {
        "d1": s.d1,
        "d2": s.d2,
        "terms": [{"a": a, "i": i, "c": c} for (a, i), c in s.terms],
    }


def sum_from_json(data: dict) -> FormalSum:
    return FormalSum.from_dict(
        int(data["d1"]),
        int(data["d2"]),
        {(int(t["a"]), int(t["i"])): int(t["c"]) for t in data["terms"]},
    )


def index_range(
    d1: int, d2: int, polygon: Optional[AffinePolygon] = None
) -> set[tuple[int, int]]:
    """Admissible (column, depth) pairs for morphisms d1 -> d2.

    With no polygon given, the projective-plane instance is assumed:
    a in {-n..n}, i in {0..floor((n - |a|)/2)} for n = d2 - d1.
    """
    n = d2 - d1
    if n == 0:
        return {(0, 0)}
    if n < 0:
        raise ValueError("index_range requires d2 >= d1")
    if polygon is None:
        return {
            (a, i) for a in range(-n, n + 1) for i in range((n - abs(a)) // 2 + 1)
        }
    from .affine import fractional_points

    return {(p.a, p.i) for p in fractional_points(polygon, n)}


def k_value_cp2(a: int, b: int) -> int:
    """Critical-line covering count for the projective-plane instance."""
    if (a >= 0 and b >= 0) or (a <= 0 and b <= 0):
        return 0
    return min(abs(a), abs(b))


@dataclass(frozen=True)
class CriticalCover:
    """Per-singularity covering counts of one composable pair of morphisms."""

    k_list: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.k_list)


def _count_integers_strictly_between(lo: Fraction, hi: Fraction) -> int:
    if hi <= lo:
        return 0
    return max(0, (math.ceil(hi) - 1) - (math.floor(lo) + 1) + 1)


def _cross_section(
    vertices: list[tuple[Fraction, Fraction]], eta: Fraction
) -> Optional[tuple[Fraction, Fraction]]:
    """Vertical cross-section [y_min, y_max] of a (possibly flat) triangle."""
    ys: list[Fraction] = []
    for (e0, y0), (e1, y1) in zip(vertices, vertices[1:] + vertices[:1]):
        if min(e0, e1) <= eta <= max(e0, e1):
            if e0 == e1:
                ys.extend((y0, y1))
            else:
                ys.append(y0 + (y1 - y0) * (eta - e0) / (e1 - e0))
    if not ys:
        return None
    return min(ys), max(ys)


def critical_cover(
    polygon: AffinePolygon, a: int, b: int, n: int, m: int
) -> CriticalCover:
    """Per-singularity covering counts for inputs in columns a/n and b/m.

    Works on the universal-cover triangle with vertices (a/n, 0),
    (b/m, a - n*b/m), ((a+b)/(n+m), 0).  At each singularity line the
    cross-section endpoints must be integers; instances with non-integer
    n*c or (n+m)*c are rejected rather than counted ambiguously.
    """
    if n <= 0 or m <= 0:
        raise ValueError("both denominators must be positive")
    for col, den in ((a, n), (b, m)):
        if column_range(polygon, den, col)[1] == 0:
            raise ValueError(f"column {col} not admissible for denominator {den}")
    vertices = [
        (Fraction(a, n), Fraction(0)),
        (Fraction(b, m), Fraction(a) - Fraction(n * b, m)),
        (Fraction(a + b, n + m), Fraction(0)),
    ]
    ks: list[int] = []
    for s in polygon.singularities:
        section = _cross_section(vertices, s.eta_pos)
        if section is None:
            ks.append(0)
            continue
        lo, hi = section
        if lo.denominator != 1 or hi.denominator != 1:
            raise ValueError(
                f"cross-section endpoints at eta={s.eta_pos} are not integers "
                f"({lo}, {hi}); singularity positions must be (1/n)- and "
                "(1/(n+m))-integral"
            )
        # Critical values sit at half-integer heights; count them strictly
        # inside, once per merged focus-focus point.
        count = _count_integers_strictly_between(lo - Fraction(1, 2), hi - Fraction(1, 2))
        ks.append(s.multiplicity * count)
    return CriticalCover(tuple(ks))


def _k_for(polygon: Optional[AffinePolygon], a: int, b: int, n: int, m: int) -> int:
    if polygon is None:
        return k_value_cp2(a, b)
    return critical_cover(polygon, a, b, n, m).total


def mu2(
    q2: BasisVector, q1: BasisVector, polygon: Optional[AffinePolygon] = None
) -> FormalSum:
    """Triangle product mu2(q2, q1) of composable degree-zero morphisms.

    q1 goes d1 -> d2 and q2 goes d2 -> d3.  All coefficients are positive
    binomials; the output column is a + b.
    """
    if q1.d2 != q2.d1:
        raise ValueError(
            f"not composable: q1 ends at level {q1.d2}, q2 starts at {q2.d1}"
        )
    _check_admissible(q1, polygon)
    _check_admissible(q2, polygon)
    d1, d3 = q1.d1, q2.d2
    if q1.is_unit():
        return FormalSum.from_dict(d1, d3, {(q2.a, q2.i): 1})
    if q2.is_unit():
        return FormalSum.from_dict(d1, d3, {(q1.a, q1.i): 1})
    k = _k_for(polygon, q1.a, q2.a, q1.n, q2.n)
    out_range = index_range(d1, d3, polygon)
    coeffs: dict[tuple[int, int], int] = {}
    for s in range(k + 1):
        key = (q1.a + q2.a, q1.i + q2.i + s)
        if key not in out_range:
            raise ArithmeticError(
                f"product term q_({key[0]},{key[1]}) at denominator {d3 - d1} "
                "is not admissible; instance violates closure"
            )
        coeffs[key] = math.comb(k, s)
    return FormalSum.from_dict(d1, d3, coeffs)


def _check_admissible(q: BasisVector, polygon: Optional[AffinePolygon]) -> None:
    if q.is_unit():
        return
    if (q.a, q.i) not in index_range(q.d1, q.d2, polygon):
        raise ValueError(f"q_({q.a},{q.i}) is not admissible for levels {q.d1}->{q.d2}")


SumLike = Union[BasisVector, FormalSum]


def _as_sum(x: SumLike) -> FormalSum:
    if isinstance(x, BasisVector):
        return FormalSum.from_dict(x.d1, x.d2, {(x.a, x.i): 1})
    return x


def ring_product(
    x: SumLike, y: SumLike, polygon: Optional[AffinePolygon] = None
) -> FormalSum:
    """Bilinear ring product x * y = mu2(y, x) (all morphisms have degree 0,
    so the usual sign (-1)^{|x|} is trivially +1)."""
    xs, ys = _as_sum(x), _as_sum(y)
    if xs.d2 != ys.d1:
        raise ValueError(f"not composable: x ends at level {xs.d2}, y starts at {ys.d1}")
    out = FormalSum.from_dict(xs.d1, ys.d2, {})
    for qx, cx in xs.basis_vectors():
        for qy, cy in ys.basis_vectors():
            out = out + mu2(qy, qx, polygon).scale(cx * cy)
    return out
