"""Triangle products: closed-form counts, the geometric covering rule, and
the algebra laws of the product."""

import math
from fractions import Fraction

import pytest

from affinefloer import affine, floer
from affinefloer.floer import basis_vector, index_range, k_value_cp2, mu2, ring_product, unit


def test_index_range_examples():
    assert index_range(0, 1) == {(-1, 0), (0, 0), (1, 0)}
    assert {i for (a, i) in index_range(0, 2) if a == 0} == {0, 1}
    assert index_range(3, 4) == index_range(0, 1)
    assert index_range(2, 2) == {(0, 0)}
    with pytest.raises(ValueError):
        index_range(2, 1)


def test_k_value_examples():
    assert k_value_cp2(-1, 2) == 1
    assert k_value_cp2(1, 2) == 0
    assert k_value_cp2(0, -7) == 0
    assert k_value_cp2(-3, 3) == 3


def test_mu2_worked_examples():
    # x * z = y^2 + p
    out = mu2(basis_vector(1, 2, 1, 0), basis_vector(0, 1, -1, 0))
    assert out.coeffs() == {(0, 0): 1, (0, 1): 1}
    # x^2 * z^2 = y^4 + 2 y^2 p + p^2
    out = mu2(basis_vector(2, 4, 2, 0), basis_vector(0, 2, -2, 0))
    assert out.coeffs() == {(0, 0): 1, (0, 1): 2, (0, 2): 1}
    # y * y = y^2
    out = mu2(basis_vector(1, 2, 0, 0), basis_vector(0, 1, 0, 0))
    assert out.coeffs() == {(0, 0): 1}


def test_mu2_rejects_non_composable_and_inadmissible():
    with pytest.raises(ValueError):
        mu2(basis_vector(2, 3, 0, 0), basis_vector(0, 1, 0, 0))
    with pytest.raises(ValueError):
        mu2(basis_vector(1, 2, 0, 0), basis_vector(0, 1, 2, 0))


def test_unit_laws():
    q = basis_vector(0, 3, 2, 0)
    assert mu2(unit(3), q).coeffs() == {(2, 0): 1}
    assert mu2(q, unit(0)).coeffs() == {(2, 0): 1}
    assert ring_product(unit(0), q) == ring_product(q, unit(3))


def test_ring_product_convention_and_bilinearity():
    x = basis_vector(0, 1, -1, 0)
    z = basis_vector(1, 2, 1, 0)
    assert ring_product(x, z).coeffs() == {(0, 0): 1, (0, 1): 1}
    two_x = floer.FormalSum.from_dict(0, 1, {(-1, 0): 2})
    three_z = floer.FormalSum.from_dict(1, 2, {(1, 0): 3})
    assert ring_product(two_x, three_z) == ring_product(x, z).scale(6)


def test_column_grading():
    for n in range(1, 5):
        for m in range(1, 5):
            for (a, i) in index_range(0, n):
                for (b, j) in index_range(n, n + m):
                    out = mu2(basis_vector(n, n + m, b, j), basis_vector(0, n, a, i))
                    assert all(col == a + b for (col, _), _ in out.terms)


def test_closure_outputs_admissible():
    for n in range(1, 9):
        for m in range(1, 9):
            out_range = index_range(0, n + m)
            for (a, i) in index_range(0, n):
                for (b, j) in index_range(n, n + m):
                    out = mu2(basis_vector(n, n + m, b, j), basis_vector(0, n, a, i))
                    assert set(out.coeffs()) <= out_range


def test_coefficient_symmetry_under_swapping_inputs():
    for n in range(1, 5):
        for m in range(1, 5):
            for (a, i) in index_range(0, n):
                for (b, j) in index_range(n, n + m):
                    lhs = mu2(basis_vector(n, n + m, b, j), basis_vector(0, n, a, i))
                    rhs = mu2(basis_vector(m, n + m, a, i), basis_vector(0, m, b, j))
                    assert [c for _, c in lhs.terms] == [c for _, c in rhs.terms]


def test_critical_cover_matches_closed_form_on_cp2():
    m = affine.cp2_model()
    for n in range(1, 9):
        for mm in range(1, 9):
            for a in range(-min(n, 8), min(n, 8) + 1):
                for b in range(-min(mm, 8), min(mm, 8) + 1):
                    cover = floer.critical_cover(m, a, b, n, mm)
                    assert len(cover.k_list) == 1
                    assert cover.total == k_value_cp2(a, b)


def _orient(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _recount_cover(polygon, a, b, n, m):
    """Independent oracle: count half-integer heights whose point on each
    singular line is strictly interior to the section triangle, by
    orientation sign tests."""
    verts = [
        (Fraction(a, n), Fraction(0)),
        (Fraction(b, m), Fraction(a) - Fraction(n * b, m)),
        (Fraction(a + b, n + m), Fraction(0)),
    ]
    ys = [v[1] for v in verts]
    counts = []
    for s in polygon.singularities:
        eta = s.eta_pos
        count = 0
        twice_lo = 2 * math.floor(min(ys)) - 3
        twice_hi = 2 * math.ceil(max(ys)) + 3
        for twice in range(twice_lo, twice_hi + 1, 2):
            point = (eta, Fraction(twice, 2))
            signs = [
                _orient(verts[t], verts[(t + 1) % 3], point) for t in range(3)
            ]
            if all(sg > 0 for sg in signs) or all(sg < 0 for sg in signs):
                count += 1
        counts.append(s.multiplicity * count)
    return tuple(counts)


def test_critical_cover_dp6_against_interior_point_recount():
    d6 = affine.dp6_model()
    for n in range(1, 3):
        for m in range(1, 3):
            for a in range(0, 3 * n + 1):
                for b in range(0, 3 * m + 1):
                    cover = floer.critical_cover(d6, a, b, n, m)
                    assert cover.k_list == _recount_cover(d6, a, b, n, m)


def test_critical_cover_dp6_spans_both_singularities():
    d6 = affine.dp6_model()
    assert floer.critical_cover(d6, 0, 9, 3, 3).k_list == (3, 3)
    out = mu2(basis_vector(3, 6, 9, 0), basis_vector(0, 3, 0, 0), d6)
    assert [c for _, c in out.terms] == [1, 6, 15, 20, 15, 6, 1]


def test_critical_cover_rejects_non_integral_positions():
    from dataclasses import replace

    m = affine.cp2_model()
    shifted = replace(
        m, singularities=(replace(m.singularities[0], eta_pos=Fraction(1, 3)),)
    )
    with pytest.raises(ValueError, match="integers"):
        floer.critical_cover(shifted, -1, 1, 1, 1)


def test_explicit_cp2_polygon_agrees_with_closed_form_path():
    m = affine.cp2_model()
    for n in range(1, 4):
        for mm in range(1, 4):
            for (a, i) in index_range(0, n):
                for (b, j) in index_range(n, n + mm):
                    q2 = basis_vector(n, n + mm, b, j)
                    q1 = basis_vector(0, n, a, i)
                    assert mu2(q2, q1, m) == mu2(q2, q1)


def test_dp6_rejects_columns_outside_range():
    d6 = affine.dp6_model()
    with pytest.raises(ValueError):
        mu2(basis_vector(1, 2, 0, 0), basis_vector(0, 1, -1, 0), d6)


def test_dp6_products_close():
    d6 = affine.dp6_model()
    for n in range(1, 4):
        for m in range(1, 4):
            for (a, i) in sorted(index_range(0, n, d6)):
                for (b, j) in sorted(index_range(n, n + m, d6)):
                    mu2(basis_vector(n, n + m, b, j), basis_vector(0, n, a, i), d6)


def test_associativity_small():
    for n1, n2, n3 in ((1, 1, 1), (1, 2, 1), (2, 1, 2)):
        for (a1, i1) in index_range(0, n1):
            q1 = basis_vector(0, n1, a1, i1)
            for (a2, i2) in index_range(n1, n1 + n2):
                q2 = basis_vector(n1, n1 + n2, a2, i2)
                left = ring_product(q1, q2)
                for (a3, i3) in index_range(n1 + n2, n1 + n2 + n3):
                    q3 = basis_vector(n1 + n2, n1 + n2 + n3, a3, i3)
                    assert ring_product(left, q3) == ring_product(q1, ring_product(q2, q3))


def test_formal_sum_json_round_trip():
    out = mu2(basis_vector(2, 4, 2, 0), basis_vector(0, 2, -2, 0))
    data = floer.sum_to_json(out)
    assert data == {
        "d1": 0,
        "d2": 4,
        "terms": [
            {"a": 0, "i": 0, "c": 1},
            {"a": 0, "i": 1, "c": 2},
            {"a": 0, "i": 2, "c": 1},
        ],
    }
    assert floer.sum_from_json(data) == out
