"""Regular polygons cut into (m+2)-sided cells, and the rotation move on them.

The polygon for parameters (n, m) has nm+2 vertices, numbered 1..nm+2
clockwise.  A chord (i, j) is admissible when it can appear in a decomposition
into (m+2)-gons, which forces j - i == 1 (mod m) with both arcs of compatible
length.  An angulation is a maximal set of pairwise non-crossing admissible
chords; it always has n - 1 of them and cuts the polygon into n cells.

The rotation move at a diagonal d turns d one notch counterclockwise inside
the hexagon-like union of its two cells, leaving every other diagonal alone.
Applied m+1 times at the tracked image it returns to the start.  Vertex 1 is
the base point for distances and for the reduction to the fan.
"""

import dataclasses
import itertools
import math
import random

__all__ = [
    "Angulation",
    "Cell",
    "RotationBurst",
    "UnionPolygon",
    "angulation_from_json",
    "angulation_to_json",
    "angulation_to_svg",
    "cells",
    "distance",
    "distance_table",
    "enumerate_angulations",
    "fan_angulation",
    "intersects",
    "is_fan",
    "is_m_diagonal",
    "make_angulation",
    "random_angulation",
    "reduce_to_fan",
    "replay_rotations",
    "rotate",
    "rotated_diagonal",
    "undo_reduction",
    "union_polygon",
]

ENUMERATION_VERTEX_LIMIT = 20


def _check_params(n, m):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")


def _normalize(pair):
    i, j = pair
    if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
        raise ValueError(f"diagonal endpoints must be integers, got {pair!r}")
    if i == j:
        raise ValueError(f"degenerate diagonal {pair!r}")
    return (i, j) if i < j else (j, i)


def is_m_diagonal(n, m, pair):
    """Whether the chord can occur in an (m+2)-angulation of the (nm+2)-gon."""
    _check_params(n, m)
    i, j = _normalize(pair)
    size = n * m + 2
    if not (1 <= i <= size and 1 <= j <= size):
        raise ValueError(f"endpoints {pair!r} outside 1..{size}")
    gap = j - i
    return (gap - 1) % m == 0 and m + 1 <= gap <= (n - 1) * m + 1


def intersects(d1, d2):
    """Strict crossing test; shared endpoints and nesting do not count."""
    i1, j1 = _normalize(d1)
    i2, j2 = _normalize(d2)
    return i1 < i2 < j1 < j2 or i2 < i1 < j2 < j1


@dataclasses.dataclass(frozen=True)
class Angulation:
    """A full (m+2)-angulation; diagonals normalized (i < j) and sorted."""

    n: int
    m: int
    diagonals: tuple

    @property
    def size(self):
        return self.n * self.m + 2


@dataclasses.dataclass(frozen=True)
class Cell:
    """One (m+2)-gon of the decomposition.

    vertices are in clockwise cyclic order starting at the smallest label;
    sides[t] joins vertices[t] to vertices[t+1] (cyclically) and is tagged
    "edge" or "diagonal".
    """

    vertices: tuple
    sides: tuple

    def boundary(self):
        return tuple((a, b) for a, b, _ in self.sides)


@dataclasses.dataclass(frozen=True)
class UnionPolygon:
    """The (2m+2)-gon formed by the two cells on either side of a diagonal."""

    vertices: tuple
    cell_pair: tuple


@dataclasses.dataclass(frozen=True)
class RotationBurst:
    """`exponent` single rotations at `diagonal`, ending on `image`."""

    diagonal: tuple
    exponent: int
    image: tuple


def make_angulation(n, m, diagonals):
    _check_params(n, m)
    normalized = []
    for pair in diagonals:
        d = _normalize(pair)
        if not is_m_diagonal(n, m, d):
            raise ValueError(f"{d!r} is not an m-diagonal for n={n}, m={m}")
        normalized.append(d)
    normalized.sort()
    for d, prev in zip(normalized[1:], normalized):
        if d == prev:
            raise ValueError(f"duplicate diagonal {d!r}")
    if len(normalized) != n - 1:
        raise ValueError(f"expected {n - 1} diagonals, got {len(normalized)}")
    for a, b in itertools.combinations(normalized, 2):
        if intersects(a, b):
            raise ValueError(f"diagonals {a!r} and {b!r} cross")
    return Angulation(n, m, tuple(normalized))


def fan_angulation(n, m):
    """All diagonals from vertex 1: {(1, jm+2) : j = 1..n-1}."""
    _check_params(n, m)
    return Angulation(n, m, tuple((1, j * m + 2) for j in range(1, n)))


def is_fan(ang):
    return all(1 in d for d in ang.diagonals)


def _cell_from(region, size):
    start = region.index(min(region))
    vs = tuple(region[start:] + region[:start])
    sides = []
    for t, v in enumerate(vs):
        w = vs[(t + 1) % len(vs)]
        a, b = (v, w) if v < w else (w, v)
        kind = "edge" if b - a == 1 or (a, b) == (1, size) else "diagonal"
        sides.append((a, b, kind))
    return Cell(vs, tuple(sides))


def _split_region(region, diags, size, out):
    if not diags:
        out.append(_cell_from(region, size))
        return
    a, b = diags[0]
    ia, ib = sorted((region.index(a), region.index(b)))
    first = region[ia : ib + 1]
    second = region[ib:] + region[: ia + 1]
    inner = set(first[1:-1])
    first_diags, second_diags = [], []
    for d in diags[1:]:
        # classify by an endpoint off the cut; non-crossing keeps both together
        probe = d[0] if d[0] != region[ia] and d[0] != region[ib] else d[1]
        (first_diags if probe in inner else second_diags).append(d)
    _split_region(first, first_diags, size, out)
    _split_region(second, second_diags, size, out)


def cells(ang):
    """The n cells, sorted by vertex tuple."""
    out = []
    _split_region(list(range(1, ang.size + 1)), list(ang.diagonals), ang.size, out)
    out.sort(key=lambda c: c.vertices)
    return tuple(out)


def union_polygon(ang, diagonal):
    d = _normalize(diagonal)
    if d not in ang.diagonals:
        raise ValueError(f"{d!r} is not in the angulation")
    pair = tuple(c for c in cells(ang) if d in c.boundary())
    merged = tuple(sorted(set(pair[0].vertices) | set(pair[1].vertices)))
    return UnionPolygon(merged, pair)


def rotated_diagonal(ang, diagonal):
    """One counterclockwise notch inside the union polygon of the diagonal."""
    d = _normalize(diagonal)
    verts = union_polygon(ang, d).vertices
    k = len(verts)
    i = verts.index(d[0])
    if verts[i + ang.m + 1] != d[1]:
        raise RuntimeError(f"diagonal {d!r} does not halve its union polygon")
    return _normalize((verts[(i - 1) % k], verts[(i + ang.m) % k]))


def rotate(ang, diagonal, times=1):
    """Replace the diagonal by its rotation, `times` single steps, tracking the image."""
    if times < 0:
        raise ValueError("times must be >= 0")
    d = _normalize(diagonal)
    if d not in ang.diagonals:
        raise ValueError(f"{d!r} is not in the angulation")
    for _ in range(times):
        image = rotated_diagonal(ang, d)
        rest = [x for x in ang.diagonals if x != d]
        ang = make_angulation(ang.n, ang.m, rest + [image])
        d = image
    return ang


def replay_rotations(ang, steps):
    for diagonal, times in steps:
        ang = rotate(ang, diagonal, times)
    return ang


def rotation_order_sweep(n, m, angulations=None):
    """rotate(ang, d, m+1) == ang over every (angulation, diagonal) pair.

    Tracks only the diagonal's two neighbouring cells: after a step the
    image's neighbours are exactly the two fresh halves of its union
    polygon, so the orbit never needs the rest of the decomposition.
    Exhaustive sweeps near the size cap stay cheap that way.  Returns
    (pairs checked, failing pairs).
    """
    if angulations is None:
        angulations = enumerate_angulations(n, m)
    period = m + 1
    span = 2 * m + 2
    checked = 0
    failures = []
    for ang in angulations:
        cell_list = [cell.vertices for cell in cells(ang)]
        side_cells = {}
        for idx, verts in enumerate(cell_list):
            k = len(verts)
            for t in range(k):
                a, b = verts[t], verts[(t + 1) % k]
                pair = (a, b) if a < b else (b, a)
                side_cells.setdefault(pair, []).append(idx)
        for d0 in ang.diagonals:
            i1, i2 = side_cells[d0]
            start = frozenset((cell_list[i1], cell_list[i2]))
            one, two = cell_list[i1], cell_list[i2]
            d = d0
            ok = True
            for _ in range(period):
                union = tuple(sorted(set(one) | set(two)))
                if len(union) != span:
                    ok = False
                    break
                i = union.index(d[0])
                if union[(i + m + 1) % span] != d[1]:
                    ok = False
                    break
                image = (union[(i - 1) % span], union[(i + m) % span])
                if image[0] > image[1]:
                    image = (image[1], image[0])
                ix = union.index(image[0])
                one = union[ix : ix + m + 2]
                two = tuple(sorted(union[ix + m + 1 :] + union[: ix + 1]))
                d = image
            checked += 1
            if not ok or d != d0 or frozenset((one, two)) != start:
                failures.append((ang.diagonals, d0))
    return checked, failures


def _union_vertex_map(ang):
    side_cells = {}
    for cell in cells(ang):
        for pair in cell.boundary():
            side_cells.setdefault(pair, []).append(cell)
    table = {}
    for d in ang.diagonals:
        a, b = side_cells[d]
        table[d] = tuple(sorted(set(a.vertices) | set(b.vertices)))
    return table


def distance_table(ang):
    """Distance of every diagonal from vertex 1, by breadth-first layering."""
    unions = _union_vertex_map(ang)
    table = {d: 0 for d in ang.diagonals if 1 in d}
    for d in ang.diagonals:
        if d not in table and 1 in unions[d]:
            table[d] = 1
    layer = 1
    while len(table) < len(ang.diagonals):
        frontier = [d for d, dist in table.items() if dist == layer]
        reached = set()
        for d in frontier:
            verts = unions[d]
            k = len(verts)
            for t in range(k):
                reached.add(_normalize((verts[t], verts[(t + 1) % k])))
        advanced = False
        for d in ang.diagonals:
            if d not in table and d in reached:
                table[d] = layer + 1
                advanced = True
        if not advanced:
            raise RuntimeError("distance layering stalled on a valid angulation")
        layer += 1
    return table


def distance(ang, diagonal):
    d = _normalize(diagonal)
    if d not in ang.diagonals:
        raise ValueError(f"{d!r} is not in the angulation")
    return distance_table(ang)[d]


def reduce_to_fan(ang):
    """Rotation bursts taking the angulation to the fan.

    Each burst picks the smallest diagonal whose union polygon contains
    vertex 1 without ending there and rotates until it does.  Every burst
    adds one diagonal at vertex 1, so there are at most n - 1.
    """
    bursts = []
    while not is_fan(ang):
        unions = _union_vertex_map(ang)
        candidates = sorted(d for d in ang.diagonals if 1 not in d and 1 in unions[d])
        if not candidates:
            raise RuntimeError("no rotatable diagonal next to vertex 1")
        start = candidates[0]
        image, exponent = start, 0
        while 1 not in image:
            step = rotated_diagonal(ang, image)
            ang = rotate(ang, image)
            image = step
            exponent += 1
            if exponent > ang.m:
                raise RuntimeError(f"rotation orbit of {start!r} missed vertex 1")
        bursts.append(RotationBurst(start, exponent, image))
    return tuple(bursts)


def undo_reduction(n, m, bursts):
    """Replay reduction bursts backwards from the fan; inverts reduce_to_fan."""
    ang = fan_angulation(n, m)
    for burst in reversed(bursts):
        ang = rotate(ang, burst.image, m + 1 - burst.exponent)
    return ang


def _cell_position_gaps(r, m):
    """Position tuples (2 <= p_1 < .. < p_m <= r-1) carving valid sub-arcs.

    The sub-arc between consecutive chosen positions must have 2 (mod m)
    vertices, which pins every p_t to residue t+1 (mod m).
    """
    def extend(prefix, t):
        if t > m:
            yield tuple(prefix)
            return
        lo = prefix[-1] + 1 if prefix else 2
        for p in range(lo, r):
            if (p - (t + 1)) % m == 0:
                prefix.append(p)
                yield from extend(prefix, t + 1)
                prefix.pop()
    yield from extend([], 1)


def enumerate_angulations(n, m):
    """Every angulation, by recursive choice of the cell on edge (1, 2)."""
    _check_params(n, m)
    size = n * m + 2
    if size > ENUMERATION_VERTEX_LIMIT:
        raise ValueError(f"polygon with {size} vertices exceeds the enumeration limit")
    results = []
    found = []

    def descend(pending):
        if not pending:
            results.append(make_angulation(n, m, list(found)))
            return
        region = pending[-1]
        r = len(region)
        for ps in _cell_position_gaps(r, m):
            added = []
            subregions = []
            for u, w in zip((1,) + ps, ps):
                if w > u + 1:
                    added.append(_normalize((region[u], region[w])))
                    subregions.append(region[u : w + 1])
            if ps[-1] < r - 1:
                added.append(_normalize((region[ps[-1]], region[0])))
                subregions.append(region[ps[-1] :] + region[:1])
            found.extend(added)
            descend(pending[:-1] + subregions)
            del found[len(found) - len(added) :]

    descend([list(range(1, size + 1))])
    results.sort(key=lambda a: a.diagonals)
    return results


def random_angulation(n, m, steps=64, seed=0):
    """Seeded random walk by single rotations, starting from the fan."""
    ang = fan_angulation(n, m)
    if not ang.diagonals:
        return ang
    rng = random.Random(seed)
    for _ in range(steps):
        ang = rotate(ang, rng.choice(ang.diagonals))
    return ang


def angulation_to_json(ang):
    return {"n": ang.n, "m": ang.m, "diagonals": [list(d) for d in ang.diagonals]}


def angulation_from_json(data):
    if not isinstance(data, dict):
        raise ValueError("angulation JSON must be an object")
    for key in ("n", "m", "diagonals"):
        if key not in data:
            raise ValueError(f"missing field {key!r}")
    if not isinstance(data["diagonals"], list):
        raise ValueError("diagonals must be a list")
    pairs = []
    for entry in data["diagonals"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ValueError(f"bad diagonal entry {entry!r}")
        pairs.append(tuple(entry))
    return make_angulation(data["n"], data["m"], pairs)


def _coord(value):
    rounded = round(value, 4) + 0.0  # drop negative zero
    return f"{rounded:.4f}"


def _vertex_point(v, size, radius):
    angle = -math.pi / 2 + (v - 1) * 2 * math.pi / size
    return radius * math.cos(angle), radius * math.sin(angle)


def angulation_to_svg(ang, width=480):
    """Deterministic rendering: vertex 1 at the top, labels clockwise."""
    size = ang.size
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.3 -1.3 2.6 2.6" '
        f'width="{width}" height="{width}">'
    ]
    ring = " ".join(
        ",".join(_coord(c) for c in _vertex_point(v, size, 1.0)) for v in range(1, size + 1)
    )
    parts.append(f'  <polygon points="{ring}" fill="none" stroke="#444444" stroke-width="0.02"/>')
    for a, b in ang.diagonals:
        x1, y1 = _vertex_point(a, size, 1.0)
        x2, y2 = _vertex_point(b, size, 1.0)
        parts.append(
            f'  <line x1="{_coord(x1)}" y1="{_coord(y1)}" x2="{_coord(x2)}" y2="{_coord(y2)}" '
            f'stroke="#2266aa" stroke-width="0.025"/>'
        )
    for v in range(1, size + 1):
        cx, cy = _vertex_point(v, size, 1.0)
        parts.append(f'  <circle cx="{_coord(cx)}" cy="{_coord(cy)}" r="0.035" fill="#222222"/>')
        tx, ty = _vertex_point(v, size, 1.16)
        parts.append(
            f'  <text x="{_coord(tx)}" y="{_coord(ty)}" font-size="0.14" '
            f'text-anchor="middle" dominant-baseline="middle" fill="#222222">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
