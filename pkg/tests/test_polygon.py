"""Polygon-side tests: diagonals, angulations, rotation, distances, fan reduction.

Frozen values were computed by hand from the definitions before the module was
written; they pin the clockwise-numbering and rotation conventions.
"""

import math
import random

import pytest

from angulate.polygon import (
    angulation_from_json,
    angulation_to_json,
    angulation_to_svg,
    cells,
    distance,
    distance_table,
    enumerate_angulations,
    fan_angulation,
    intersects,
    is_fan,
    is_m_diagonal,
    make_angulation,
    random_angulation,
    reduce_to_fan,
    replay_rotations,
    rotate,
    rotated_diagonal,
    rotation_order_sweep,
    undo_reduction,
    union_polygon,
)

# 12-gon, m=2: the central-square 4-angulation and a fan-distance worked case.
DODECA_SQUARE = ((2, 5), (2, 11), (5, 8), (8, 11))
DODECA_A = ((1, 4), (4, 11), (5, 10), (7, 10))
DODECA_A_ROT = ((1, 4), (1, 10), (5, 10), (7, 10))

SMALL_GRID = [(2, 1), (4, 1), (2, 2), (3, 2), (2, 3), (3, 3)]


def grid_angulations():
    for n, m in SMALL_GRID:
        for ang in enumerate_angulations(n, m):
            yield n, m, ang


def test_is_m_diagonal_dodecagon():
    assert is_m_diagonal(5, 2, (1, 4))
    assert is_m_diagonal(5, 2, (4, 1))
    assert is_m_diagonal(5, 2, (2, 11))
    assert is_m_diagonal(5, 2, (4, 11))
    assert not is_m_diagonal(5, 2, (1, 3))
    assert not is_m_diagonal(5, 2, (2, 4))


def test_is_m_diagonal_hexagon():
    assert is_m_diagonal(2, 2, (1, 4))
    assert is_m_diagonal(2, 2, (2, 5))
    assert is_m_diagonal(2, 2, (3, 6))
    assert not is_m_diagonal(2, 2, (1, 3))


def test_is_m_diagonal_rejects_edges():
    assert not is_m_diagonal(5, 2, (1, 2))
    assert not is_m_diagonal(5, 2, (1, 12))
    assert not is_m_diagonal(4, 1, (6, 1))


def test_is_m_diagonal_triangulation_case():
    # m=1: every non-edge chord qualifies.
    for i in range(1, 7):
        for j in range(i + 1, 7):
            expected = 2 <= j - i <= 4
            assert is_m_diagonal(4, 1, (i, j)) == expected


def test_is_m_diagonal_range_errors():
    with pytest.raises(ValueError):
        is_m_diagonal(5, 2, (0, 4))
    with pytest.raises(ValueError):
        is_m_diagonal(5, 2, (1, 13))
    with pytest.raises(ValueError):
        is_m_diagonal(5, 2, (3, 3))


def test_intersects_cases():
    assert intersects((1, 4), (2, 5))
    assert not intersects((1, 4), (4, 7))
    assert not intersects((2, 5), (8, 11))
    assert not intersects((2, 11), (5, 8))
    assert intersects((2, 7), (5, 10))


def test_intersects_symmetry():
    pairs = [((1, 4), (2, 5)), ((1, 4), (4, 7)), ((2, 11), (5, 8))]
    for a, b in pairs:
        assert intersects(a, b) == intersects(b, a)


def test_make_angulation_normalizes():
    ang = make_angulation(5, 2, [(11, 2), (5, 2), (8, 5), (11, 8)])
    assert ang.diagonals == DODECA_SQUARE
    assert ang.size == 12


def test_make_angulation_rejects_bad_input():
    with pytest.raises(ValueError):
        make_angulation(5, 2, [(2, 5), (5, 8), (8, 11)])  # too few
    with pytest.raises(ValueError):
        make_angulation(5, 2, [(2, 5), (5, 8), (8, 11), (2, 11), (1, 4)])  # too many
    with pytest.raises(ValueError):
        make_angulation(5, 2, [(2, 5), (5, 8), (8, 11), (4, 1)])  # (1,4) crosses (2,5)
    with pytest.raises(ValueError):
        make_angulation(5, 2, [(2, 5), (5, 8), (8, 11), (2, 4)])  # not an m-diagonal
    with pytest.raises(ValueError):
        make_angulation(5, 2, [(2, 5), (2, 5), (5, 8), (8, 11)])  # duplicate
    with pytest.raises(ValueError):
        make_angulation(1, 2, [(1, 3)])  # n=1 admits no diagonals
    with pytest.raises(ValueError):
        make_angulation(0, 2, [])


def test_single_cell_polygon():
    ang = make_angulation(1, 3, [])
    assert ang.diagonals == ()
    cs = cells(ang)
    assert len(cs) == 1
    assert cs[0].vertices == (1, 2, 3, 4, 5)
    assert all(kind == "edge" for _, _, kind in cs[0].sides)


def test_cells_hexagon_single_split():
    ang = make_angulation(2, 2, [(1, 4)])
    cs = cells(ang)
    assert [c.vertices for c in cs] == [(1, 2, 3, 4), (1, 4, 5, 6)]
    assert cs[0].sides == ((1, 2, "edge"), (2, 3, "edge"), (3, 4, "edge"), (1, 4, "diagonal"))
    assert cs[1].sides == ((1, 4, "diagonal"), (4, 5, "edge"), (5, 6, "edge"), (1, 6, "edge"))


def test_cells_dodecagon_central_square():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    assert [c.vertices for c in cells(ang)] == [
        (1, 2, 11, 12),
        (2, 3, 4, 5),
        (2, 5, 8, 11),
        (5, 6, 7, 8),
        (8, 9, 10, 11),
    ]


def test_cells_dodecagon_worked_pair():
    before = make_angulation(5, 2, DODECA_A)
    after = make_angulation(5, 2, DODECA_A_ROT)
    assert [c.vertices for c in cells(before)] == [
        (1, 2, 3, 4),
        (1, 4, 11, 12),
        (4, 5, 10, 11),
        (5, 6, 7, 10),
        (7, 8, 9, 10),
    ]
    assert [c.vertices for c in cells(after)] == [
        (1, 2, 3, 4),
        (1, 4, 5, 10),
        (1, 10, 11, 12),
        (5, 6, 7, 10),
        (7, 8, 9, 10),
    ]


def test_cells_fan_all_touch_base_vertex():
    for n, m in SMALL_GRID:
        for cell in cells(fan_angulation(n, m)):
            assert 1 in cell.vertices


def test_cells_shape_invariants():
    for n, m, ang in grid_angulations():
        cs = cells(ang)
        assert len(cs) == n
        seen = {}
        for cell in cs:
            assert len(cell.vertices) == m + 2
            assert len(cell.sides) == m + 2
            assert cell.vertices[0] == min(cell.vertices)
            for a, b, kind in cell.sides:
                seen.setdefault((a, b), []).append(kind)
        for (a, b), kinds in seen.items():
            if (a, b) in ang.diagonals:
                assert kinds == ["diagonal", "diagonal"]
            else:
                assert kinds == ["edge"]
        boundary = {(i, i + 1) for i in range(1, ang.size)} | {(1, ang.size)}
        assert boundary <= set(seen)


def test_union_polygon_hexagon():
    ang = make_angulation(2, 2, [(1, 4)])
    assert union_polygon(ang, (1, 4)).vertices == (1, 2, 3, 4, 5, 6)


def test_union_polygon_dodecagon():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    assert union_polygon(ang, (2, 5)).vertices == (2, 3, 4, 5, 8, 11)
    assert union_polygon(ang, (2, 11)).vertices == (1, 2, 5, 8, 11, 12)


def test_union_polygon_pentagon_fan():
    ang = fan_angulation(3, 1)
    assert ang.diagonals == ((1, 3), (1, 4))
    assert union_polygon(ang, (1, 3)).vertices == (1, 2, 3, 4)


def test_union_polygon_size_invariant():
    for n, m, ang in grid_angulations():
        for d in ang.diagonals:
            u = union_polygon(ang, d)
            assert len(u.vertices) == 2 * m + 2
            assert {d} <= set(u.cell_pair[0].boundary()) & set(u.cell_pair[1].boundary())


def test_union_polygon_requires_member():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    with pytest.raises(ValueError):
        union_polygon(ang, (1, 4))


def test_rotated_diagonal_hexagon_orbit():
    ang = make_angulation(2, 2, [(1, 4)])
    assert rotated_diagonal(ang, (1, 4)) == (3, 6)
    ang = make_angulation(2, 2, [(3, 6)])
    assert rotated_diagonal(ang, (3, 6)) == (2, 5)
    ang = make_angulation(2, 2, [(2, 5)])
    assert rotated_diagonal(ang, (2, 5)) == (1, 4)


def test_rotate_square():
    ang = make_angulation(2, 1, [(1, 3)])
    assert rotate(ang, (1, 3)).diagonals == ((2, 4),)


def test_rotate_central_square():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    assert rotate(ang, (2, 11)).diagonals == ((1, 8), (2, 5), (5, 8), (8, 11))


def test_rotate_dodecagon_worked_step():
    ang = make_angulation(5, 2, DODECA_A)
    assert rotated_diagonal(ang, (4, 11)) == (1, 10)
    assert rotate(ang, (4, 11)).diagonals == DODECA_A_ROT


def test_rotate_requires_member():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    with pytest.raises(ValueError):
        rotate(ang, (1, 8))


def test_rotate_order_with_tracking():
    for n, m, ang in grid_angulations():
        for start in ang.diagonals:
            cur, d, visited = ang, start, []
            for _ in range(m + 1):
                d2 = rotated_diagonal(cur, d)
                cur = rotate(cur, d)
                visited.append(cur.diagonals)
                d = d2
            assert cur == ang
            assert len(set(visited)) == m + 1


def test_rotate_times_matches_single_steps():
    ang = make_angulation(5, 2, DODECA_A)
    step1 = rotate(ang, (4, 11))
    step2 = rotate(step1, (1, 10))
    assert rotate(ang, (4, 11), times=2) == step2
    assert rotate(ang, (4, 11), times=0) == ang
    assert rotate(ang, (4, 11), times=3) == ang


def test_rotation_order_sweep_counts():
    for n, m in [(4, 1), (5, 1), (3, 2), (4, 2), (2, 3), (3, 3)]:
        angs = enumerate_angulations(n, m)
        checked, failures = rotation_order_sweep(n, m, angulations=angs)
        assert checked == len(angs) * (n - 1)
        assert failures == []


def test_rotation_order_sweep_matches_plain_rotation():
    for n, m in [(6, 1), (4, 2), (3, 3)]:
        for ang in enumerate_angulations(n, m):
            _, failures = rotation_order_sweep(n, m, angulations=[ang])
            plain = all(rotate(ang, d, m + 1) == ang for d in ang.diagonals)
            assert plain and failures == []


def test_distance_fan_is_zero():
    for n, m in SMALL_GRID:
        fan = fan_angulation(n, m)
        assert all(distance(fan, d) == 0 for d in fan.diagonals)


def test_distance_dodecagon_worked_values():
    ang = make_angulation(5, 2, DODECA_A_ROT)
    assert distance(ang, (1, 4)) == 0
    assert distance(ang, (1, 10)) == 0
    assert distance(ang, (5, 10)) == 1
    assert distance(ang, (7, 10)) == 2


def test_distance_central_square():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    assert distance_table(ang) == {(2, 11): 1, (2, 5): 2, (5, 8): 2, (8, 11): 2}


def test_distance_hexagon_orbit():
    assert distance(make_angulation(2, 2, [(1, 4)]), (1, 4)) == 0
    assert distance(make_angulation(2, 2, [(2, 5)]), (2, 5)) == 1
    assert distance(make_angulation(2, 2, [(3, 6)]), (3, 6)) == 1


def test_distance_table_total_and_grounded():
    for n, m, ang in grid_angulations():
        table = distance_table(ang)
        assert set(table) == set(ang.diagonals)
        for d, dist in table.items():
            if 1 in d:
                assert dist == 0
            else:
                assert dist >= 1
            assert dist <= n - 1


def test_distance_requires_member():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    with pytest.raises(ValueError):
        distance(ang, (1, 8))


def test_reduce_fan_is_fixed_point():
    for n, m in SMALL_GRID:
        assert reduce_to_fan(fan_angulation(n, m)) == ()


def test_reduce_hexagon_single_burst():
    ang = make_angulation(2, 2, [(3, 6)])
    bursts = reduce_to_fan(ang)
    assert len(bursts) == 1
    assert bursts[0].diagonal == (3, 6)
    assert bursts[0].exponent == 2
    assert bursts[0].image == (1, 4)


def test_reduce_central_square():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    bursts = reduce_to_fan(ang)
    assert 1 <= len(bursts) <= 4
    assert replay_rotations(ang, [(b.diagonal, b.exponent) for b in bursts]) == fan_angulation(5, 2)
    assert undo_reduction(5, 2, bursts) == ang


def test_reduce_grid_roundtrip():
    for n, m, ang in grid_angulations():
        bursts = reduce_to_fan(ang)
        assert len(bursts) <= n - 1
        assert all(1 <= b.exponent <= m for b in bursts)
        assert all(1 in b.image for b in bursts)
        assert replay_rotations(ang, [(b.diagonal, b.exponent) for b in bursts]) == fan_angulation(n, m)
        assert undo_reduction(n, m, bursts) == ang


def test_is_fan():
    assert is_fan(fan_angulation(4, 2))
    assert not is_fan(make_angulation(5, 2, DODECA_SQUARE))


def test_fan_shape():
    assert fan_angulation(5, 2).diagonals == ((1, 4), (1, 6), (1, 8), (1, 10))
    assert fan_angulation(4, 1).diagonals == ((1, 3), (1, 4), (1, 5))
    assert fan_angulation(1, 3).diagonals == ()


def test_enumerate_hexagon_quadrangulations():
    angs = enumerate_angulations(2, 2)
    assert [a.diagonals for a in angs] == [((1, 4),), ((2, 5),), ((3, 6),)]


def test_enumerate_octagon_with_m3():
    angs = enumerate_angulations(2, 3)
    assert [a.diagonals for a in angs] == [((1, 5),), ((2, 6),), ((3, 7),), ((4, 8),)]


def test_enumerate_counts():
    assert len(enumerate_angulations(1, 2)) == 1
    assert len(enumerate_angulations(4, 1)) == 14
    assert len(enumerate_angulations(3, 2)) == 12
    assert len(enumerate_angulations(4, 2)) == 55
    assert len(enumerate_angulations(3, 3)) == 22


def test_enumerate_matches_closed_form():
    # count = C((m+1)n, n-1) / n
    for n, m in SMALL_GRID + [(5, 1), (6, 1)]:
        expected = math.comb((m + 1) * n, n - 1) // n
        assert len(enumerate_angulations(n, m)) == expected


def test_enumerate_results_distinct_and_sorted():
    angs = enumerate_angulations(4, 2)
    keys = [a.diagonals for a in angs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_enumerate_closed_under_rotation():
    for n, m in [(2, 2), (4, 1), (3, 2)]:
        universe = {a.diagonals for a in enumerate_angulations(n, m)}
        for diag_set in universe:
            ang = make_angulation(n, m, diag_set)
            for d in ang.diagonals:
                assert rotate(ang, d).diagonals in universe


def test_enumerate_closed_under_polygon_spin():
    for n, m in [(2, 2), (4, 1), (3, 2)]:
        size = n * m + 2
        universe = {a.diagonals for a in enumerate_angulations(n, m)}
        for diag_set in universe:
            spun = [(i % size + 1, j % size + 1) for i, j in diag_set]
            assert make_angulation(n, m, spun).diagonals in universe


def test_enumerate_size_guard():
    with pytest.raises(ValueError):
        enumerate_angulations(20, 1)


def test_random_angulation_deterministic():
    a = random_angulation(5, 2, steps=40, seed=11)
    b = random_angulation(5, 2, steps=40, seed=11)
    assert a == b
    assert len(a.diagonals) == 4


def test_random_angulation_varies_with_seed():
    results = {random_angulation(6, 2, steps=60, seed=s).diagonals for s in range(12)}
    assert len(results) > 1


def test_random_angulation_valid_on_larger_polygons():
    for n, m, steps in [(8, 1, 50), (6, 2, 50), (4, 3, 50), (12, 2, 30)]:
        ang = random_angulation(n, m, steps=steps, seed=3)
        assert make_angulation(n, m, ang.diagonals) == ang


def test_random_angulation_trivial_polygon():
    assert random_angulation(1, 2, steps=10, seed=0).diagonals == ()


def test_json_round_trip():
    ang = make_angulation(5, 2, DODECA_A)
    assert angulation_from_json(angulation_to_json(ang)) == ang


def test_json_shape():
    ang = make_angulation(2, 2, [(4, 1)])
    assert angulation_to_json(ang) == {"n": 2, "m": 2, "diagonals": [[1, 4]]}


def test_json_rejects_malformed():
    good = angulation_to_json(make_angulation(5, 2, DODECA_SQUARE))
    breakers = [
        lambda d: d.pop("n"),
        lambda d: d.pop("diagonals"),
        lambda d: d.update(m="2"),
        lambda d: d.update(n=True),
        lambda d: d.update(diagonals=[[1, 4]]),
        lambda d: d.update(diagonals="nope"),
        lambda d: d.update(diagonals=[[1, 4, 5]] + d["diagonals"][1:]),
        lambda d: d["diagonals"].append([2, 4]),
    ]
    for breaker in breakers:
        data = {"n": good["n"], "m": good["m"], "diagonals": [list(p) for p in good["diagonals"]]}
        breaker(data)
        with pytest.raises(ValueError):
            angulation_from_json(data)


def test_svg_deterministic():
    ang = make_angulation(5, 2, DODECA_SQUARE)
    assert angulation_to_svg(ang) == angulation_to_svg(ang)


def test_svg_structure():
    svg = angulation_to_svg(make_angulation(2, 2, [(1, 4)]))
    assert svg.startswith("<svg ")
    assert svg.count("<line ") == 1
    assert svg.count("<text ") == 6
    assert 'points="0.0000,-1.0000 0.8660,-0.5000' in svg
    assert svg.rstrip().endswith("</svg>")


def test_svg_separates_angulations():
    a = angulation_to_svg(make_angulation(2, 2, [(1, 4)]))
    b = angulation_to_svg(make_angulation(2, 2, [(2, 5)]))
    assert a != b
