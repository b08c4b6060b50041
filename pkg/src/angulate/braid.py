"""Exact word equality in the Artin braid group on a fixed strand count.

Words are reduced to left-greedy normal forms: a power of the half twist
followed by a left-weighted sequence of permutation factors.  Two words are
equal in the group iff their normal forms coincide, so equality never relies
on heuristics.  Permutation factors are plain tuples mapping strand slot to
strand slot, composed left to right.
"""

import dataclasses
import os

__all__ = [
    "BraidNormalForm",
    "BraidWord",
    "BudgetExceeded",
    "braid_word",
    "concat_words",
    "equal",
    "format_braid_word",
    "inverse_word",
    "normal_form",
    "parse_braid_word",
    "permutation_image",
]

DEFAULT_LETTER_BUDGET = 10_000
BUDGET_ENV_VAR = "ANGULATE_BUDGET"


class BudgetExceeded(RuntimeError):
    """A computation hit its configured size budget; the answer is unknown."""


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple


@dataclasses.dataclass(frozen=True)
class BraidNormalForm:
    strands: int
    delta: int
    factors: tuple


def braid_word(strands, letters):
    if not isinstance(strands, int) or isinstance(strands, bool) or strands < 2:
        raise ValueError(f"strand count must be an integer >= 2, got {strands!r}")
    cleaned = []
    for letter in letters:
        idx, exp = letter
        if not isinstance(idx, int) or not 1 <= idx <= strands - 1:
            raise ValueError(f"generator index {idx!r} outside 1..{strands - 1}")
        if exp not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {exp!r}")
        cleaned.append((idx, exp))
    return BraidWord(strands, tuple(cleaned))


def concat_words(first, second):
    if first.strands != second.strands:
        raise ValueError("strand counts differ")
    return BraidWord(first.strands, first.letters + second.letters)


def inverse_word(word):
    return BraidWord(word.strands, tuple((i, -e) for i, e in reversed(word.letters)))


def parse_braid_word(strands, text):
    letters = []
    for token in text.split():
        body, _, suffix = token.partition("^")
        if not body.startswith("s") or not body[1:].isdigit():
            raise ValueError(f"bad braid token {token!r}")
        idx = int(body[1:])
        if "^" in token and suffix != "-1":
            raise ValueError(f"bad braid token {token!r}")
        letters.append((idx, -1 if suffix == "-1" else 1))
    return braid_word(strands, letters)


def format_braid_word(word):
    return " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in word.letters)


def _compose(a, b):
    return tuple(b[x] for x in a)


def _invert(p):
    out = [0] * len(p)
    for slot, image in enumerate(p):
        out[image] = slot
    return tuple(out)


def permutation_image(word):
    """Image in the symmetric group, as 1-based strand targets."""
    n = word.strands
    current = tuple(range(n))
    for idx, _ in word.letters:
        swap = tuple(idx if x == idx - 1 else idx - 1 if x == idx else x for x in range(n))
        current = _compose(current, swap)
    return tuple(v + 1 for v in current)


def _letter_budget(budget):
    if budget is not None:
        return budget
    configured = os.environ.get(BUDGET_ENV_VAR)
    return int(configured) if configured else DEFAULT_LETTER_BUDGET


def _starting_descents(p):
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def _left_weight(factors):
    """Left-weight adjacent factors in place; drops drained factors."""
    j = 0
    while j < len(factors) - 1:
        a = list(factors[j])
        b = list(factors[j + 1])
        inv_a = list(_invert(a))
        moved = False
        while True:
            pick = None
            for i in _starting_descents(b):
                if inv_a[i - 1] < inv_a[i]:
                    pick = i
                    break
            if pick is None:
                break
            moved = True
            lo, hi = inv_a[pick - 1], inv_a[pick]
            a[lo], a[hi] = pick, pick - 1
            inv_a[pick - 1], inv_a[pick] = hi, lo
            b[pick - 1], b[pick] = b[pick], b[pick - 1]
        if not moved:
            j += 1
            continue
        factors[j] = tuple(a)
        if b == sorted(b):
            del factors[j + 1]
        else:
            factors[j + 1] = tuple(b)
        j = max(j - 1, 0)
    return factors


def normal_form(word, budget=None):
    """Left-greedy normal form; raises BudgetExceeded on oversized input."""
    if len(word.letters) > _letter_budget(budget):
        raise BudgetExceeded(
            f"word of {len(word.letters)} letters exceeds the oracle budget"
        )
    n = word.strands
    identity = tuple(range(n))
    half_twist = tuple(reversed(identity))
    transpositions = {
        i: tuple(i if x == i - 1 else i - 1 if x == i else x for x in range(n))
        for i in range(1, n)
    }
    delta = 0
    factors = []
    flip = False  # parity of negative letters further right
    for idx, exp in reversed(word.letters):
        if exp == 1:
            factor = transpositions[idx]
        else:
            delta -= 1
            factor = _compose(half_twist, transpositions[idx])
        if flip:
            factor = _compose(half_twist, _compose(factor, half_twist))
        if exp == -1:
            flip = not flip
        factors.append(factor)
    factors.reverse()
    factors = [f for f in factors if f != identity]
    _left_weight(factors)
    while factors and factors[0] == half_twist:
        delta += 1
        del factors[0]
    return BraidNormalForm(n, delta, tuple(factors))


def equal(first, second, budget=None):
    """Whether two words represent the same braid."""
    if first.strands != second.strands:
        raise ValueError("strand counts differ")
    if sum(e for _, e in first.letters) != sum(e for _, e in second.letters):
        return False
    if permutation_image(first) != permutation_image(second):
        return False
    return normal_form(first, budget) == normal_form(second, budget)
