"""Group presentations read off coloured quivers, and the generator maps
induced by mutation.

A mutation-type-A quiver yields a group on one generator per vertex:
generators at non-adjacent vertices commute, adjacent ones satisfy the
braid relation, and each complete triangle contributes a cyclic relation
pair for the unique cyclic orientation whose colour sum is 2m+1.
Mutating at k induces a homomorphism into the mutated quiver's group
that conjugates exactly the generators k points at with colour 0.
Composing the inverse maps along a mutation path back to the linear
quiver translates any word into the standard braid group, where
`angulate.braid` decides equality exactly.

Words are tuples of (generator id, exponent) with exponent +-1; the only
rewriting ever applied to them is free reduction.
"""

from __future__ import annotations

import dataclasses
import itertools

from angulate.braid import braid_word, equal
from angulate.correspondence import angulation_quiver
from angulate.polygon import reduce_to_fan
from angulate.quiver import ColouredQuiver, linear_quiver, mutate_algorithm

__all__ = [
    "GroupHom",
    "HomReport",
    "Presentation",
    "Relator",
    "apply_hom",
    "as_braid_word",
    "compose_chain",
    "compose_homs",
    "fan_translation",
    "free_reduce",
    "identity_hom",
    "inverse_chain",
    "inverse_mutation_hom",
    "invert_word",
    "kcycle_relation_check",
    "mutation_hom",
    "presentation_json",
    "presentation_of",
    "presentation_text",
    "verify_hom",
]


@dataclasses.dataclass(frozen=True)
class Relator:
    kind: str
    lhs: tuple
    rhs: tuple


@dataclasses.dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple


@dataclasses.dataclass(frozen=True)
class GroupHom:
    """Generator map between two presentations; images are target words."""

    source: Presentation
    target: Presentation
    mapping: dict


@dataclasses.dataclass(frozen=True)
class HomReport:
    checked: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def free_reduce(word) -> tuple:
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def invert_word(word) -> tuple:
    return tuple((g, -e) for g, e in reversed(word))


def presentation_of(Q: ColouredQuiver) -> Presentation:
    """Presentation with one generator per vertex and the three relator kinds.

    Relators are kept as equal-word pairs, commute before braid before
    cycle3, pairs and triples in vertex order.  A triangle's cyclic pair
    starts at its smallest vertex.  Raises ValueError on parallel arrows
    or on a complete triangle where no cyclic orientation sums to 2m+1;
    both mean the quiver is not of mutation type A.
    """
    colour = {}
    for i, j, c, mult in Q.arrows:
        if mult != 1:
            raise ValueError(f"parallel arrows between {i!r} and {j!r}")
        colour[(i, j)] = c
    relators = []
    adjacent = []
    for i, j in itertools.combinations(Q.vertices, 2):
        if (i, j) in colour:
            adjacent.append((i, j))
        else:
            relators.append(Relator("commute", ((i, 1), (j, 1)), ((j, 1), (i, 1))))
    for i, j in adjacent:
        relators.append(
            Relator("braid", ((i, 1), (j, 1), (i, 1)), ((j, 1), (i, 1), (j, 1)))
        )
    target_sum = 2 * Q.m + 1
    for a, b, c in itertools.combinations(Q.vertices, 3):
        if (a, b) not in colour or (b, c) not in colour or (a, c) not in colour:
            continue
        if colour[(a, b)] + colour[(b, c)] + colour[(c, a)] == target_sum:
            v1, v2, v3 = a, b, c
        elif colour[(a, c)] + colour[(c, b)] + colour[(b, a)] == target_sum:
            v1, v2, v3 = a, c, b
        else:
            raise ValueError(
                f"triangle {(a, b, c)!r} has no cyclic orientation with colour sum {target_sum}"
            )
        first = ((v1, 1), (v2, 1), (v3, 1), (v1, 1))
        second = ((v2, 1), (v3, 1), (v1, 1), (v2, 1))
        third = ((v3, 1), (v1, 1), (v2, 1), (v3, 1))
        relators.append(Relator("cycle3", first, second))
        relators.append(Relator("cycle3", second, third))
    return Presentation(tuple(Q.vertices), tuple(relators))


def _require_vertex(Q, k):
    if k not in Q.vertices:
        raise ValueError(f"unknown vertex {k!r}")


def mutation_hom(Q: ColouredQuiver, k) -> GroupHom:
    """Map induced by mutation at k, into the mutated quiver's group.

    Conjugates s_i by s_k exactly when Q has the arrow k -> i of colour 0;
    every other generator is fixed.
    """
    _require_vertex(Q, k)
    mapping = {}
    for g in Q.vertices:
        if g != k and Q.multiplicity(k, g, 0):
            mapping[g] = ((k, 1), (g, 1), (k, -1))
        else:
            mapping[g] = ((g, 1),)
    return GroupHom(presentation_of(Q), presentation_of(mutate_algorithm(Q, k)), mapping)


def inverse_mutation_hom(Q: ColouredQuiver, k) -> GroupHom:
    """Inverse of `mutation_hom(Q, k)`, read off the mutated quiver.

    Conjugates by the opposite letter exactly when the mutated quiver has
    the arrow k -> i of colour m; an arrow has colour m there exactly when
    it had colour 0 before.
    """
    _require_vertex(Q, k)
    mutated = mutate_algorithm(Q, k)
    mapping = {}
    for g in Q.vertices:
        if g != k and mutated.multiplicity(k, g, Q.m):
            mapping[g] = ((k, -1), (g, 1), (k, 1))
        else:
            mapping[g] = ((g, 1),)
    return GroupHom(presentation_of(mutated), presentation_of(Q), mapping)


def apply_hom(hom: GroupHom, word) -> tuple:
    out = []
    for g, e in word:
        image = hom.mapping[g]
        out.extend(image if e == 1 else invert_word(image))
    return free_reduce(out)


def identity_hom(P: Presentation) -> GroupHom:
    return GroupHom(P, P, {g: ((g, 1),) for g in P.generators})


def compose_homs(first: GroupHom, then: GroupHom) -> GroupHom:
    """Composite applying `first`, then `then`."""
    if first.target != then.source:
        raise ValueError("homomorphisms do not chain")
    mapping = {g: apply_hom(then, word) for g, word in first.mapping.items()}
    return GroupHom(first.source, then.target, mapping)


def compose_chain(Q: ColouredQuiver, path) -> GroupHom:
    """Mutation maps composed along a path, from the group of Q forward."""
    hom = identity_hom(presentation_of(Q))
    current = Q
    for k in path:
        hom = compose_homs(hom, mutation_hom(current, k))
        current = mutate_algorithm(current, k)
    return hom


def inverse_chain(Q: ColouredQuiver, path) -> GroupHom:
    """Translation from the endpoint of a path back to the group of Q."""
    quivers = [Q]
    for k in path:
        quivers.append(mutate_algorithm(quivers[-1], k))
    hom = identity_hom(presentation_of(Q))
    for pos, k in enumerate(path):
        hom = compose_homs(inverse_mutation_hom(quivers[pos], k), hom)
    return hom


def as_braid_word(P: Presentation, word):
    """Word in P's generators as a braid word on len(generators)+1 strands."""
    index = {g: pos for pos, g in enumerate(P.generators, start=1)}
    return braid_word(len(P.generators) + 1, [(index[g], e) for g, e in word])


def verify_hom(hom: GroupHom, translate: GroupHom, budget=None) -> HomReport:
    """Check every source relator still holds after mapping and translation.

    `translate` must take the hom's target presentation to the standard
    one of the linear quiver, where the braid oracle decides equality.
    """
    if hom.target != translate.source:
        raise ValueError("translation does not start at the hom's target")
    failures = []
    for rel in hom.source.relators:
        lhs = apply_hom(translate, apply_hom(hom, rel.lhs))
        rhs = apply_hom(translate, apply_hom(hom, rel.rhs))
        if not equal(
            as_braid_word(translate.target, lhs),
            as_braid_word(translate.target, rhs),
            budget,
        ):
            failures.append(rel)
    return HomReport(len(hom.source.relators), tuple(failures))


def fan_translation(ang, labels=None) -> GroupHom:
    """Translation from an angulation's quiver group to the standard one.

    Follows `reduce_to_fan`: each rotation burst becomes that many
    mutation maps at the rotated diagonal's vertex, and the final fan is
    renamed to the linear quiver by chain position.
    """
    if labels is None:
        labels = {d: d for d in ang.diagonals}
    quiver = angulation_quiver(ang, labels=labels)
    name = dict(labels)
    hom = identity_hom(presentation_of(quiver))
    current = quiver
    for burst in reduce_to_fan(ang):
        vertex = name.pop(burst.diagonal)
        name[burst.image] = vertex
        for _ in range(burst.exponent):
            hom = compose_homs(hom, mutation_hom(current, vertex))
            current = mutate_algorithm(current, vertex)
    rename = {name[d]: pos for pos, d in enumerate(sorted(name), start=1)}
    standard = presentation_of(linear_quiver(len(name) + 1, ang.m))
    final = GroupHom(
        presentation_of(current),
        standard,
        {g: ((rename[g], 1),) for g in current.vertices},
    )
    return compose_homs(hom, final)


def kcycle_relation_check(Q: ColouredQuiver, vertices, translate: GroupHom, budget=None) -> bool:
    """Whether s_{i1}..s_{ij}s_{i1} = s_{i2}..s_{ij}s_{i1}s_{i2} holds.

    Requires ascending vertices spanning a complete subquiver of Q whose
    ascending triples all have colour sum 2m+1; raises ValueError when
    the hypothesis fails.  Equality is decided through `translate`.
    """
    verts = tuple(vertices)
    if len(verts) < 3 or list(verts) != sorted(set(verts)):
        raise ValueError("need at least three distinct vertices in ascending order")
    colour = {(i, j): c for i, j, c, _ in Q.arrows}
    for a, b in itertools.permutations(verts, 2):
        if (a, b) not in colour:
            raise ValueError(f"vertices {a!r} and {b!r} are not adjacent")
    target_sum = 2 * Q.m + 1
    for a, b, c in itertools.combinations(verts, 3):
        if colour[(a, b)] + colour[(b, c)] + colour[(c, a)] != target_sum:
            raise ValueError(f"triple {(a, b, c)!r} misses colour sum {target_sum}")
    lhs = tuple((v, 1) for v in verts) + ((verts[0], 1),)
    rhs = tuple((v, 1) for v in verts[1:]) + ((verts[0], 1), (verts[1], 1))
    return equal(
        as_braid_word(translate.target, apply_hom(translate, lhs)),
        as_braid_word(translate.target, apply_hom(translate, rhs)),
        budget,
    )


def _word_tokens(index, word):
    return [f"s{index[g]}" if e == 1 else f"s{index[g]}^-1" for g, e in word]


def presentation_text(P: Presentation) -> str:
    """One relation per line; a triangle's two pairs chain into one line."""
    index = {g: pos for pos, g in enumerate(P.generators, start=1)}

    def fmt(word):
        return " ".join(_word_tokens(index, word))

    lines = ["generators: " + " ".join(f"s{pos}" for pos in range(1, len(P.generators) + 1))]
    pos = 0
    while pos < len(P.relators):
        rel = P.relators[pos]
        chained = (
            rel.kind == "cycle3"
            and pos + 1 < len(P.relators)
            and P.relators[pos + 1].kind == "cycle3"
            and P.relators[pos + 1].lhs == rel.rhs
        )
        if chained:
            lines.append(f"{fmt(rel.lhs)} = {fmt(rel.rhs)} = {fmt(P.relators[pos + 1].rhs)}")
            pos += 2
        else:
            lines.append(f"{fmt(rel.lhs)} = {fmt(rel.rhs)}")
            pos += 1
    return "\n".join(lines) + "\n"


def presentation_json(P: Presentation) -> dict:
    index = {g: pos for pos, g in enumerate(P.generators, start=1)}
    return {
        "generators": [f"s{pos}" for pos in range(1, len(P.generators) + 1)],
        "relators": [
            {
                "kind": rel.kind,
                "lhs": _word_tokens(index, rel.lhs),
                "rhs": _word_tokens(index, rel.rhs),
            }
            for rel in P.relators
        ],
    }
