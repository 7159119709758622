"""
The monoid action of simple reflections on clans.

Each generator s_i either fixes a clan or moves it strictly up the weak
order, and repeated application stabilizes after one move.  The action is
applied along reduced words, rightmost letter first, and is independent of
the chosen reduced word.  Acting by s_i touches the two adjacent positions
(i, i+1) and, through the mirror symmetry of the string, the positions
(2n-i, 2n-i+1).

The type C dispatch distinguishes six cases; the one that swaps positions
i, i+1 *without* swapping their mirrors (two arcs crossing the center in the
same order as their mirrors) is the sole source of double edges in the weak
order graph.  In type D all edges are single, and the last generator acts by
conjugating s_{n-1} with the swap of the two central positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .clans import (
    MINUS,
    PLUS,
    Clan,
    is_skew_symmetric,
    is_type_d_clan,
    normalize,
)
from . import weyl

FIXED = "fixed"


@dataclass(frozen=True)
class ActionStep:
    source: Clan
    letter: int
    result: Clan
    moved: bool
    rule: str
    is_double: bool


def _is_number(c) -> bool:
    return c != PLUS and c != MINUS


def _mates(symbols: list) -> list:
    first: dict = {}
    mates: list = [None] * len(symbols)
    for pos, c in enumerate(symbols):
        if _is_number(c):
            if c in first:
                mates[pos] = first[c]
                mates[first[c]] = pos
            else:
                first[c] = pos
    return mates


def _fresh_labels(symbols: list, count: int) -> list[int]:
    base = max((c for c in symbols if _is_number(c)), default=0)
    return [base + k for k in range(1, count + 1)]


def _swap(symbols: list, a: int, b: int) -> None:
    symbols[a], symbols[b] = symbols[b], symbols[a]


def _act_lower_c(symbols: list, i: int, n: int) -> str:
    """Act by s_i, i < n, on a raw length-2n symbol list (type C rules).
    Mutates ``symbols``; returns the fired rule.
    """
    a, b = i - 1, i
    ma, mb = 2 * n - 1 - b, 2 * n - 1 - a  # mirrors of b, a
    ci, cj = symbols[a], symbols[b]
    mates = _mates(symbols)
    matched = []
    if not _is_number(ci) and _is_number(cj) and mates[b] > b:
        matched.append("c1")
    if _is_number(ci) and not _is_number(cj) and mates[a] < a:
        matched.append("c2")
    if _is_number(ci) and _is_number(cj) and ci != cj:
        same_as_mirror = (ci, cj) == (symbols[ma], symbols[mb])
        if mates[a] < mates[b] and not same_as_mirror:
            matched.append("c3")
        if same_as_mirror:
            matched.append("c4")
    if {ci, cj} == {PLUS, MINUS}:
        matched.append("c5")
    assert len(matched) <= 1, f"rules {matched} overlap on {symbols} at {i}"
    if not matched:
        return FIXED
    rule = matched[0]
    if rule in ("c1", "c2", "c3"):
        _swap(symbols, a, b)
        _swap(symbols, ma, mb)
    elif rule == "c4":
        _swap(symbols, a, b)
    else:
        one, two = _fresh_labels(symbols, 2)
        symbols[a] = symbols[b] = one
        symbols[ma] = symbols[mb] = two
    return rule


def _act_last_c(symbols: list, n: int) -> str:
    """Act by s_n on a raw length-2n symbol list (type C rules)."""
    a, b = n - 1, n
    ci, cj = symbols[a], symbols[b]
    if _is_number(ci) and _is_number(cj) and ci != cj:
        mates = _mates(symbols)
        if mates[a] < mates[b]:
            _swap(symbols, a, b)
            return "cn1"
        return FIXED
    if {ci, cj} == {PLUS, MINUS}:
        (label,) = _fresh_labels(symbols, 1)
        symbols[a] = symbols[b] = label
        return "cn2"
    return FIXED


def _act_lower_d(symbols: list, i: int, n: int) -> str:
    """Act by s_i, i < n, on a raw length-2n symbol list (type D rules)."""
    a, b = i - 1, i
    ma, mb = 2 * n - 1 - b, 2 * n - 1 - a
    ci, cj = symbols[a], symbols[b]
    mates = _mates(symbols)
    rule = FIXED
    if not _is_number(ci) and _is_number(cj) and mates[b] > b:
        rule = "d1"
    elif _is_number(ci) and not _is_number(cj) and mates[a] < a:
        rule = "d2"
    elif (
        _is_number(ci)
        and _is_number(cj)
        and ci != cj
        and mates[a] < mates[b]
        and (ci, cj) != (symbols[ma], symbols[mb])
    ):
        rule = "d3"
    elif {ci, cj} == {PLUS, MINUS}:
        rule = "d4"
    if rule in ("d1", "d2", "d3"):
        _swap(symbols, a, b)
        _swap(symbols, ma, mb)
    elif rule == "d4":
        one, two = _fresh_labels(symbols, 2)
        symbols[a] = symbols[b] = one
        symbols[ma] = symbols[mb] = two
    return rule


def act_simple_c(i: int, clan: Clan) -> ActionStep:
    """One step of the type C action.

    >>> step = act_simple_c(1, normalize((1, 2, 3, 4, 3, 4, 1, 2)))
    >>> str(step.result), step.is_double
    ('1,2,3,4,3,4,2,1', True)
    """
    n = clan.size // 2
    if not 1 <= i <= n:
        raise ValueError(f"simple reflection index out of range: {i}")
    if not is_skew_symmetric(clan):
        raise ValueError(f"type C action needs a skew-symmetric clan, got {clan}")
    symbols = list(clan.symbols)
    rule = _act_lower_c(symbols, i, n) if i < n else _act_last_c(symbols, n)
    result = normalize(symbols)
    return ActionStep(clan, i, result, result != clan, rule, rule == "c4")


def act_simple_d(i: int, clan: Clan) -> ActionStep:
    """One step of the type D action; s_n is Flip . s_{n-1} . Flip where Flip
    swaps the two central positions.

    >>> str(act_simple_d(3, normalize("+++---")).result)
    '+,1,2,1,2,-'
    """
    n = clan.size // 2
    if not 1 <= i <= n:
        raise ValueError(f"simple reflection index out of range: {i}")
    if not is_type_d_clan(clan):
        raise ValueError(f"type D action needs a type D clan, got {clan}")
    symbols = list(clan.symbols)
    if i < n:
        rule = _act_lower_d(symbols, i, n)
    else:
        _swap(symbols, n - 1, n)
        inner = _act_lower_d(symbols, n - 1, n)
        _swap(symbols, n - 1, n)
        rule = FIXED if inner == FIXED else f"dn:{inner}"
    result = normalize(symbols)
    return ActionStep(clan, i, result, result != clan, rule, False)


def act_simple(group: str, i: int, clan: Clan) -> ActionStep:
    if group == "C":
        return act_simple_c(i, clan)
    if group == "D":
        return act_simple_d(i, clan)
    raise ValueError(f"unknown group type {group!r}")


def act_word(
    group: str, word: Sequence[int], clan: Clan, strict: bool = False
) -> tuple[Clan, int]:
    """Apply a reduced word to a clan, rightmost letter first.  Returns the
    final clan and the number of double-edge (type C rule c4) steps taken.

    The caller is responsible for ``word`` being reduced; with
    ``strict=True`` this is verified by evaluating the word in the group.

    >>> gamma = normalize("+-1221+-")
    >>> final, doubles = act_word("C", (3, 2, 1, 4, 3, 2, 1), gamma)
    >>> str(final), doubles
    ('1,2,3,4,4,3,2,1', 1)
    """
    if strict:
        n = clan.size // 2
        if weyl.evaluate_word(group, n, word).length != len(word):
            raise ValueError(f"word is not reduced: {list(word)}")
    doubles = 0
    for i in reversed(word):
        step = act_simple(group, i, clan)
        clan = step.result
        if step.is_double:
            doubles += 1
    return clan, doubles
