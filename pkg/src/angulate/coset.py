"""Coset enumeration for the finite quotients of quiver presentations.

Plain Todd-Coxeter over the trivial subgroup: rows are cosets, columns
are generators and their inverses, relators are scanned at every live
coset and gaps are closed by defining fresh cosets.  Coincidences merge
through a union-find over row labels, so stale entries resolve through
`_find` instead of being rewritten.  When the table closes, the number
of live rows is the group order.

The table is plain local state: one enumeration stays on one thread,
and independent enumerations never share anything.
"""

from __future__ import annotations

import os

from angulate.braid import BudgetExceeded
from angulate.presentation import Presentation, free_reduce, invert_word

__all__ = [
    "coset_enumerate",
    "involutory_relators",
]

DEFAULT_ROW_BUDGET = 100_000
BUDGET_ENV_VAR = "ANGULATE_BUDGET"


def involutory_relators(P: Presentation) -> tuple:
    """One squared generator per vertex; the symmetric-group quotient relators."""
    return tuple(((g, 1), (g, 1)) for g in P.generators)


def _row_budget(budget):
    if budget is not None:
        return budget
    configured = os.environ.get(BUDGET_ENV_VAR)
    return int(configured) if configured else DEFAULT_ROW_BUDGET


def _find(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def coset_enumerate(P: Presentation, extra_relators=(), budget=None) -> int:
    """Order of the group presented by P's relators plus extra identity words.

    `extra_relators` are words set equal to the identity, for example
    `involutory_relators(P)`.  Raises BudgetExceeded once the table
    needs more rows than the budget (parameter, else the
    ANGULATE_BUDGET environment variable, else 100000); hitting
    the budget is inconclusive, not a disproof of finiteness.
    """
    limit = _row_budget(budget)
    gen_index = {g: i for i, g in enumerate(P.generators)}
    width = 2 * len(P.generators)

    def columns(word):
        return tuple(
            2 * gen_index[g] if e == 1 else 2 * gen_index[g] + 1 for g, e in word
        )

    relators = [
        columns(free_reduce(rel.lhs + invert_word(rel.rhs))) for rel in P.relators
    ]
    relators += [columns(free_reduce(tuple(word))) for word in extra_relators]
    relators = [cols for cols in relators if cols]

    table = [[None] * width]
    parent = [0]

    def define(u, col):
        if len(table) >= limit:
            raise BudgetExceeded(f"coset table hit the {limit}-row budget")
        table.append([None] * width)
        parent.append(len(parent))
        new = len(table) - 1
        table[u][col] = new
        table[new][col ^ 1] = u
        return new

    def coincide(a, b):
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            x, y = _find(parent, x), _find(parent, y)
            if x == y:
                continue
            if x > y:
                x, y = y, x
            parent[y] = x
            row_x, row_y = table[x], table[y]
            for col in range(width):
                t = row_y[col]
                if t is None:
                    continue
                if row_x[col] is None:
                    row_x[col] = t
                else:
                    queue.append((t, row_x[col]))

    def scan(alpha, cols):
        u, i = alpha, 0
        while i < len(cols):
            step = table[u][cols[i]]
            if step is None:
                break
            u = _find(parent, step)
            i += 1
        else:
            if u != alpha:
                coincide(u, alpha)
            return
        v, j = alpha, len(cols)
        while j > i:
            step = table[v][cols[j - 1] ^ 1]
            if step is None:
                break
            v = _find(parent, step)
            j -= 1
        if j == i:
            if u != v:
                coincide(u, v)
            return
        while j - i > 1:
            u = define(u, cols[i])
            i += 1
        table[u][cols[i]] = v
        table[v][cols[i] ^ 1] = u

    p = 0
    while True:
        while p < len(table):
            if _find(parent, p) == p:
                for cols in relators:
                    if _find(parent, p) != p:
                        break
                    scan(p, cols)
            p += 1
        filled = False
        for alpha in range(len(table)):
            if _find(parent, alpha) != alpha:
                continue
            for col in range(width):
                if table[alpha][col] is None:
                    define(alpha, col)
                    filled = True
        if not filled:
            break
    return sum(1 for a in range(len(table)) if _find(parent, a) == a)
