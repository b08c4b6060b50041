"""From angulations to coloured quivers, and the checks tying the two sides.

Each cell of an angulation induces arrows between its diagonal sides; the
colour of an arrow counts the sides strictly between source and target,
walking against the clockwise side order.  Rotating a diagonal then matches
mutating the quiver at the corresponding vertex, which is what
check_commutation and commutation_sweep verify.
"""

import dataclasses
import itertools

from angulate.polygon import (
    _cell_from,
    cells,
    enumerate_angulations,
    make_angulation,
    rotate,
    rotated_diagonal,
)
from angulate.quiver import (
    _mutate_counts,
    canonical_key,
    from_arrows,
    linear_quiver,
    mutate_algorithm,
)

__all__ = [
    "BijectionReport",
    "CellColourSums",
    "angulation_quiver",
    "bijection_csv",
    "check_bijection",
    "check_commutation",
    "colour_sums",
    "commutation_sweep",
    "cyclic_colour_sums",
    "star_angulation",
]

BIJECTION_VERTEX_LIMIT = 14


def _diagonal_sides(cell):
    return [(pos, (a, b)) for pos, (a, b, kind) in enumerate(cell.sides) if kind == "diagonal"]


def _cell_arrows(m, cell):
    for (pg, g), (pd, d) in itertools.permutations(_diagonal_sides(cell), 2):
        yield g, d, (pg - pd - 1) % (m + 2)


def angulation_quiver(ang, labels=None):
    """The coloured quiver of an angulation.

    Vertices are the diagonals themselves, or their images under `labels`.
    Two diagonals get arrows exactly when they bound a common cell.
    """
    if labels is None:
        labels = {d: d for d in ang.diagonals}
    arrows = []
    for cell in cells(ang):
        for g, d, colour in _cell_arrows(ang.m, cell):
            arrows.append((labels[g], labels[d], colour))
    return from_arrows(ang.m, sorted(labels[d] for d in ang.diagonals), arrows)


def check_commutation(ang, diagonal, mutator=mutate_algorithm):
    """Whether mutating the quiver at a diagonal matches rotating it first.

    The rotated angulation is labelled by sending the rotation image back to
    the original diagonal and fixing every other diagonal.
    """
    d = tuple(sorted(diagonal))
    if d not in ang.diagonals:
        raise ValueError(f"{d!r} is not in the angulation")
    image = rotated_diagonal(ang, d)
    relabel = {x: x for x in ang.diagonals if x != d}
    relabel[image] = d
    return mutator(angulation_quiver(ang), d) == angulation_quiver(rotate(ang, d), labels=relabel)


def commutation_sweep(n, m, mutator=mutate_algorithm, angulations=None):
    """check_commutation over every (angulation, diagonal) pair for (n, m).

    Returns (pairs checked, failing pairs).  Splits the rotated cells in
    place instead of re-deriving the whole decomposition, so full sweeps over
    hundreds of thousands of angulations stay in budget.
    """
    if angulations is None:
        angulations = enumerate_angulations(n, m)
    size = n * m + 2
    direct = mutator is mutate_algorithm
    checked = 0
    failures = []
    for ang in angulations:
        cell_list = cells(ang)
        side_cells = {}
        per_cell = []
        base_items = {}
        counts = {}
        for idx, cell in enumerate(cell_list):
            for pair in cell.boundary():
                side_cells.setdefault(pair, []).append(idx)
            listed = list(_cell_arrows(m, cell))
            per_cell.append(listed)
            for g, t, colour in listed:
                base_items[(g, t, colour)] = 1
                counts.setdefault((g, t), [0] * (m + 1))[colour] = 1
        base = from_arrows(m, list(ang.diagonals), list(base_items)) if not direct else None
        for d in ang.diagonals:
            i1, i2 = side_cells[d]
            one, two = cell_list[i1], cell_list[i2]
            union = tuple(sorted(set(one.vertices) | set(two.vertices)))
            k = len(union)
            i = union.index(d[0])
            image = tuple(sorted((union[(i - 1) % k], union[(i + m) % k])))
            ix = union.index(image[0])
            halves = (
                _cell_from(list(union[ix : ix + m + 2]), size),
                _cell_from(list(union[ix + m + 1 :] + union[: ix + 1]), size),
            )
            candidate = dict(base_items)
            for item in per_cell[i1]:
                del candidate[item]
            for item in per_cell[i2]:
                del candidate[item]
            for cell in halves:
                for g, t, colour in _cell_arrows(m, cell):
                    g = d if g == image else g
                    t = d if t == image else t
                    candidate[(g, t, colour)] = 1
            if direct:
                mutated = {}
                for (g, t), cols in _mutate_counts(m, counts, d).items():
                    for colour, mult in enumerate(cols):
                        if mult:
                            mutated[(g, t, colour)] = mult
            else:
                mutated = {}
                for g, t, colour, mult in mutator(base, d).arrows:
                    mutated[(g, t, colour)] = mult
            checked += 1
            if mutated != candidate:
                failures.append((ang.diagonals, d))
    return checked, failures


@dataclasses.dataclass(frozen=True)
class CellColourSums:
    """Arrow colours between consecutive diagonals around one cell.

    diagonals are in clockwise cyclic order; clockwise[t] is the colour of
    the arrow from diagonals[t] to its clockwise successor, counterclockwise[t]
    the colour of the arrow coming back.
    """

    diagonals: tuple
    clockwise: tuple
    counterclockwise: tuple

    @property
    def clockwise_total(self):
        return sum(self.clockwise)

    @property
    def counterclockwise_total(self):
        return sum(self.counterclockwise)


def _sum_report(m, positioned):
    a = len(positioned)
    cw, ccw = [], []
    for t in range(a):
        pg, _ = positioned[t]
        pd, _ = positioned[(t + 1) % a]
        cw.append((pg - pd - 1) % (m + 2))
        ccw.append((pd - pg - 1) % (m + 2))
    report = CellColourSums(tuple(g for _, g in positioned), tuple(cw), tuple(ccw))
    if report.clockwise_total != (a - 1) * (m + 1) - 1:
        raise RuntimeError(f"clockwise colour sum off: {report!r}")
    if report.counterclockwise_total != m - a + 2:
        raise RuntimeError(f"counterclockwise colour sum off: {report!r}")
    return report


def colour_sums(ang):
    """One report per cell with at least two diagonal sides."""
    reports = []
    for cell in cells(ang):
        positioned = _diagonal_sides(cell)
        if len(positioned) >= 2:
            reports.append(_sum_report(ang.m, positioned))
    return reports


def cyclic_colour_sums(ang, diagonals):
    """The colour-sum report for a chosen subset of one cell's diagonals."""
    subset = [tuple(sorted(d)) for d in diagonals]
    if len(subset) < 2 or len(set(subset)) != len(subset):
        raise ValueError("need at least two distinct diagonals")
    for cell in cells(ang):
        at = {pair: pos for pos, pair in enumerate(cell.boundary())}
        if all(d in at for d in subset):
            return _sum_report(ang.m, sorted((at[d], d) for d in subset))
    raise ValueError("the diagonals do not bound a common cell")


@dataclasses.dataclass(frozen=True)
class BijectionReport:
    n: int
    m: int
    angulations: int
    rotation_orbits: int
    quiver_classes: int
    orbits_map_to_single_class: bool
    classes_match_mutation_closure: bool

    @property
    def ok(self):
        return (
            self.orbits_map_to_single_class
            and self.classes_match_mutation_closure
            and self.rotation_orbits == self.quiver_classes
        )


def _spin(ang):
    size = ang.size
    return make_angulation(
        ang.n, ang.m, [((i % size) + 1, (j % size) + 1) for i, j in ang.diagonals]
    )


def _mutation_closure(q, limit):
    seen = {canonical_key(q)}
    queue = [q]
    while queue:
        cur = queue.pop()
        for v in cur.vertices:
            step = mutate_algorithm(cur, v)
            key = canonical_key(step)
            if key not in seen:
                if len(seen) >= limit:
                    raise RuntimeError("mutation closure larger than the angulation count allows")
                seen.add(key)
                queue.append(step)
    return seen


def check_bijection(n, m):
    """Desk-scale check that angulations mod spin match quivers mod relabelling."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError("need n >= 2")
    size = n * m + 2
    if size > BIJECTION_VERTEX_LIMIT:
        raise ValueError(f"polygon with {size} vertices exceeds the bijection check limit")
    if n - 1 > 10:
        raise ValueError("too many quiver vertices for canonical forms")
    angs = enumerate_angulations(n, m)
    key_of = {a.diagonals: canonical_key(angulation_quiver(a)) for a in angs}
    seen = set()
    orbit_count = 0
    single = True
    for ang in angs:
        if ang.diagonals in seen:
            continue
        orbit_count += 1
        orbit = []
        cur = ang
        while cur.diagonals not in seen:
            seen.add(cur.diagonals)
            orbit.append(cur.diagonals)
            cur = _spin(cur)
        if len({key_of[x] for x in orbit}) != 1:
            single = False
    classes = set(key_of.values())
    closure = _mutation_closure(linear_quiver(n, m), limit=len(angs) + 1)
    return BijectionReport(
        n,
        m,
        len(angs),
        orbit_count,
        len(classes),
        single,
        closure == classes,
    )


def bijection_csv(reports):
    lines = ["n,m,angulations,rotation_orbits,quiver_classes"]
    for r in reports:
        lines.append(f"{r.n},{r.m},{r.angulations},{r.rotation_orbits},{r.quiver_classes}")
    return "\n".join(lines) + "\n"


def star_angulation(d):
    """The cyclically symmetric angulation whose quiver is complete on d+1 vertices.

    Lives in the d(d+1)-gon with m = d-1, n = d+2.  Rejects d < 2: d = 1
    would need colour range m = 0.
    """
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise ValueError("need an integer d >= 2")
    chain = [(1, d + 1)] + [(k * d + 1, (k + 1) * d + 1) for k in range(1, d)] + [(1, d * d + 1)]
    return make_angulation(d + 2, d - 1, chain)
