"""m-coloured quivers and their mutation.

A coloured quiver is a finite directed multigraph on ordered vertices
whose arrows each carry a colour in {0, ..., m}, subject to three axioms:

  I    no loops;
  II   for each ordered pair (i, j), all arrows i -> j share one colour;
  III  arrows come in skew-symmetric pairs: the number of arrows i -> j
       of colour c equals the number of arrows j -> i of colour m - c.

Multiplicities are exact non-negative integers and both members of every
skew pair are stored.  Mutation at a vertex k raises by one (mod m+1) the
colour of arrows into k, lowers by one the colour of arrows out of k,
composes arrow pairs passing through k, and cancels mixed colours.  Two
implementations are provided: `mutate_formula` follows the closed
per-pair formula, `mutate_algorithm` the three-step procedure.  The
algorithm is the one used everywhere else in the package; the formula
exists to cross-check it.  The two agree on the mutation class of
`linear_quiver` but can differ on arbitrary quivers, where the formula's
cancellation term reads pre-mutation counts and so cannot cancel against
arrows composed in the same step.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Hashable, Iterable, Sequence

VertexId = Hashable


@dataclasses.dataclass(frozen=True)
class ColouredQuiver:
    """Immutable coloured quiver.

    `arrows` is a tuple of (source, target, colour, multiplicity) entries
    with multiplicity > 0, sorted by vertex position and colour, so two
    quivers are equal exactly when they have the same m, the same vertex
    order and the same arrow multiset.
    """

    m: int
    vertices: tuple
    arrows: tuple

    def multiplicity(self, i, j, c) -> int:
        for src, dst, colour, mult in self.arrows:
            if src == i and dst == j and colour == c:
                return mult
        return 0

    def colour_counts(self, i, j) -> list[int]:
        """Arrow counts i -> j indexed by colour."""
        counts = [0] * (self.m + 1)
        for src, dst, colour, mult in self.arrows:
            if src == i and dst == j:
                counts[colour] += mult
        return counts


def from_arrows(m, vertices, arrows) -> ColouredQuiver:
    """Build a quiver from (i, j, colour) or (i, j, colour, mult) entries.

    Repeated entries accumulate.  No axiom is enforced here; `validate`
    reports violations.  Raises ValueError for malformed input: m < 1,
    duplicate vertices, unknown endpoints, colours out of range, or
    non-positive multiplicities.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    vertices = tuple(vertices)
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertex ids")
    known = set(vertices)
    counts: dict = {}
    for entry in arrows:
        if len(entry) == 3:
            i, j, c = entry
            mult = 1
        else:
            i, j, c, mult = entry
        if i not in known or j not in known:
            raise ValueError(f"arrow endpoint not a vertex: {(i, j)}")
        if not 0 <= c <= m:
            raise ValueError(f"colour {c} out of range 0..{m}")
        if mult < 1:
            raise ValueError(f"multiplicity must be positive, got {mult}")
        key = (i, j)
        if key not in counts:
            counts[key] = [0] * (m + 1)
        counts[key][c] += mult
    return _build(m, vertices, counts)


def _build(m, vertices, counts) -> ColouredQuiver:
    pos = {v: i for i, v in enumerate(vertices)}
    arrows = []
    for (i, j), cols in counts.items():
        for c in range(m + 1):
            if cols[c]:
                arrows.append((i, j, c, cols[c]))
    arrows.sort(key=lambda a: (pos[a[0]], pos[a[1]], a[2]))
    return ColouredQuiver(m, vertices, tuple(arrows))


def _pair_counts(Q: ColouredQuiver) -> dict:
    counts = {}
    for i, j, c, mult in Q.arrows:
        key = (i, j)
        if key not in counts:
            counts[key] = [0] * (Q.m + 1)
        counts[key][c] += mult
    return counts


def validate(Q: ColouredQuiver) -> list:
    """Report axiom violations as (axiom, location) entries; [] if valid.

    Locations: ("loop", (i, i)), ("monochromatic", (i, j)), and
    ("skew", (i, j, c)) for every triple whose count disagrees with its
    partner triple (j, i, m - c).  Total: never raises on well-formed
    quiver values.
    """
    problems = []
    counts = _pair_counts(Q)
    m = Q.m
    for (i, j), cols in counts.items():
        if i == j and any(cols):
            problems.append(("loop", (i, j)))
    for (i, j), cols in counts.items():
        if i != j and sum(1 for c in cols if c > 0) > 1:
            problems.append(("monochromatic", (i, j)))
    zeros = [0] * (m + 1)
    for i, j in set(counts) | {(j, i) for (i, j) in counts}:
        if i == j:
            continue
        cols = counts.get((i, j), zeros)
        partner = counts.get((j, i), zeros)
        for c in range(m + 1):
            if cols[c] != partner[m - c]:
                problems.append(("skew", (i, j, c)))
    return sorted(problems, key=_problem_order(Q))


def _problem_order(Q):
    pos = {v: i for i, v in enumerate(Q.vertices)}
    def key(problem):
        kind, where = problem
        return (kind, tuple(pos[v] if v in pos else -1 for v in where[:2]),
                where[2:] if len(where) > 2 else ())
    return key


def _require_vertex(Q, k):
    if k not in set(Q.vertices):
        raise ValueError(f"unknown vertex {k!r}")


def mutate_algorithm(Q: ColouredQuiver, k) -> ColouredQuiver:
    """Mutation at vertex k by the three-step procedure.

    Step 1 shifts colours of arrows incident to k (+1 in, -1 out,
    mod m+1).  Step 2 composes, reading colours in the unmutated quiver:
    every pair i ->(c) k with c != m and k ->(0) j with i != j yields new
    arrows i ->(c) j and j ->(m-c) i, multiplicities multiplying.  Step 3
    cancels the same number of arrows of each colour on every mixed pair
    until one colour remains.
    """
    _require_vertex(Q, k)
    return _build(Q.m, Q.vertices, _mutate_counts(Q.m, _pair_counts(Q), k))


def _mutate_counts(m, old, k):
    new = {}
    # step 1
    for (i, j), cols in old.items():
        if i == k:
            new[(i, j)] = [cols[(c + 1) % (m + 1)] for c in range(m + 1)]
        elif j == k:
            new[(i, j)] = [cols[(c - 1) % (m + 1)] for c in range(m + 1)]
        else:
            new[(i, j)] = list(cols)
    # step 2
    ins = [(i, c, cols[c])
           for (i, j), cols in old.items() if j == k and i != k
           for c in range(m) if cols[c]]
    outs = [(j, cols[0]) for (kk, j), cols in old.items()
            if kk == k and j != k and cols[0]]
    for (i, c, p), (j, r) in itertools.product(ins, outs):
        if i == j:
            continue
        for (a, b, colour) in [(i, j, c), (j, i, m - c)]:
            if (a, b) not in new:
                new[(a, b)] = [0] * (m + 1)
            new[(a, b)][colour] += p * r
    # step 3: subtracting the second-largest count from every positive
    # colour leaves at most one colour standing (none on a tied maximum),
    # which is the unique order-free reading of "cancel the same number
    # of arrows of each colour".
    for pair, cols in new.items():
        positive = [x for x in cols if x > 0]
        if len(positive) > 1:
            drop = sorted(positive)[-2]
            new[pair] = [x - drop if x > drop else 0 for x in cols]
    return new


def mutate_formula(Q: ColouredQuiver, k) -> ColouredQuiver:
    """Mutation at vertex k by the closed per-pair formula.

    Slow reference implementation quantified over all ordered vertex
    pairs; used to cross-check `mutate_algorithm`.
    """
    _require_vertex(Q, k)
    m = Q.m
    old = _pair_counts(Q)
    zeros = [0] * (m + 1)

    def q(i, j):
        return old.get((i, j), zeros)

    new = {}
    for i, j in itertools.permutations(Q.vertices, 2):
        cols = q(i, j)
        if i == k:
            res = [cols[(c + 1) % (m + 1)] for c in range(m + 1)]
        elif j == k:
            res = [cols[(c - 1) % (m + 1)] for c in range(m + 1)]
        else:
            total = sum(cols)
            qik, qkj = q(i, k), q(k, j)
            res = []
            for c in range(m + 1):
                value = (cols[c] - (total - cols[c])
                         + (qik[c] - qik[(c - 1) % (m + 1)]) * qkj[0]
                         + qik[m] * (qkj[c] - qkj[(c + 1) % (m + 1)]))
                res.append(max(0, value))
        if any(res):
            new[(i, j)] = res
    return _build(m, Q.vertices, new)


def mutate_path(Q: ColouredQuiver, path: Sequence) -> ColouredQuiver:
    """Left fold of `mutate_algorithm` along a vertex sequence."""
    for k in path:
        Q = mutate_algorithm(Q, k)
    return Q


def reverse_arrows(Q: ColouredQuiver) -> ColouredQuiver:
    """Transpose: every arrow swaps endpoints, colours kept.

    Corresponds to reflecting the associated polygon picture, so it
    conjugates counterclockwise rotation to clockwise.
    """
    counts = {}
    for i, j, c, mult in Q.arrows:
        key = (j, i)
        if key not in counts:
            counts[key] = [0] * (Q.m + 1)
        counts[key][c] += mult
    return _build(Q.m, Q.vertices, counts)


def mutate_clockwise(Q: ColouredQuiver, k) -> ColouredQuiver:
    """The clockwise-rotation variant of mutation at k.

    Defined as transpose -> mutate -> transpose; on mutation-type
    quivers of `linear_quiver` it inverts `mutate_algorithm`.  Kept as a
    foil for the commutation checks: substituting it for the real
    mutation must break them.
    """
    return reverse_arrows(mutate_algorithm(reverse_arrows(Q), k))


def linear_quiver(n: int, m: int) -> ColouredQuiver:
    """The linear quiver on vertices 1..n-1.

    Forward arrows i ->(0) i+1 with colour-m partners; the base point of
    every mutation class considered in this package.  n=2 gives the
    single vertex with no arrows.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    vertices = tuple(range(1, n))
    arrows = []
    for i in range(1, n - 1):
        arrows.append((i, i + 1, 0))
        arrows.append((i + 1, i, m))
    return from_arrows(m, vertices, arrows)


def canonical_key(Q: ColouredQuiver):
    """Key equal for two quivers exactly when they differ by a vertex
    relabelling.

    Brute force over all vertex permutations; refuses more than 10
    vertices.
    """
    n = len(Q.vertices)
    if n > 10:
        raise ValueError(f"canonical_key limited to 10 vertices, got {n}")
    pos = {v: i for i, v in enumerate(Q.vertices)}
    base = [(pos[i], pos[j], c, mult) for i, j, c, mult in Q.arrows]
    best = None
    for perm in itertools.permutations(range(n)):
        image = sorted((perm[i], perm[j], c, mult) for i, j, c, mult in base)
        if best is None or image < best:
            best = image
    return (Q.m, n, tuple(best if best is not None else []))


def mutation_reachable(Q: ColouredQuiver, depth: int):
    """Breadth-first ball of the mutation graph around Q.

    Returns [(quiver, path)] with one shortest path each, in visit
    order.  Quivers are distinguished exactly (not up to relabelling);
    the vertex set never changes along the way.
    """
    seen = {Q.arrows}
    out = [(Q, ())]
    frontier = [(Q, ())]
    for _ in range(depth):
        step = []
        for current, path in frontier:
            for k in current.vertices:
                nxt = mutate_algorithm(current, k)
                if nxt.arrows not in seen:
                    seen.add(nxt.arrows)
                    entry = (nxt, path + (k,))
                    step.append(entry)
                    out.append(entry)
        frontier = step
        if not frontier:
            break
    return out


def quiver_to_json(Q: ColouredQuiver) -> dict:
    return {
        "m": Q.m,
        "vertices": list(Q.vertices),
        "arrows": [
            {"from": i, "to": j, "colour": c, "mult": mult}
            for i, j, c, mult in Q.arrows
        ],
    }


def quiver_from_json(data) -> ColouredQuiver:
    if not isinstance(data, dict):
        raise ValueError("quiver document must be an object")
    try:
        m = data["m"]
        vertices = data["vertices"]
        arrows = data["arrows"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"missing quiver field: {exc}") from None
    if not isinstance(m, int) or isinstance(m, bool):
        raise ValueError("m must be an integer")
    if not isinstance(vertices, list) or not isinstance(arrows, list):
        raise ValueError("vertices and arrows must be lists")
    entries = []
    for arrow in arrows:
        if not isinstance(arrow, dict):
            raise ValueError("each arrow must be an object")
        try:
            entry = (arrow["from"], arrow["to"], arrow["colour"], arrow["mult"])
        except KeyError as exc:
            raise ValueError(f"missing arrow field: {exc}") from None
        if not isinstance(entry[2], int) or not isinstance(entry[3], int):
            raise ValueError("colour and mult must be integers")
        entries.append(entry)
    return from_arrows(m, vertices, entries)


def quiver_to_dot(Q: ColouredQuiver) -> str:
    """Graphviz rendering, one edge per arrow (multiplicities unrolled)."""
    lines = ["digraph quiver {"]
    for i, j, c, mult in Q.arrows:
        for _ in range(mult):
            lines.append(f'  "{i}" -> "{j}" [label="({c})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
