"""
The dictionary between clans and pairs of signed shuffles.

A clan avoiding the pattern (1,2,1,2) determines two permutations of
{1, ..., p+q}:

* ``u_of_clan`` places p, p-1, ..., 1 (in order) on the positions holding a
  plus or the second occurrence of a number, and p+q, ..., p+1 on the rest;
* ``v_of_clan`` places 1, ..., p on the positions holding a plus or the
  first occurrence of a number, and p+1, ..., p+q on the rest.

Conversely ``clan_of_pair`` rebuilds the clan from such a pair through an
intermediate +/-/F/S pattern, matching each S to the nearest unmated number
on its left.

For a skew-symmetric (resp. type D) clan these permutations are embeddings
of signed permutations u, v, and (w0*u, v) is what we call a pair of signed
shuffles: each one-line notation interleaves an increasing positive prefix
block with a block of negated values (with parity constraints on the cuts,
and a special role for the value n, in type D).  ``classify_pair`` detects
the shuffle shape; ``pair_to_clan`` composes the whole translation,
including the type D subtlety that the long element of W embeds to the long
element of S_{2n} only when n is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .clans import (
    MINUS,
    PLUS,
    Clan,
    contains_pattern,
    is_skew_symmetric,
    is_type_d_clan,
    normalize,
    parse_clan,
)
from .weyl import Permutation, SignedPermutation, long_element


class UnsupportedPairError(ValueError):
    """The rule at hand covers only pairs of signed shuffles; raised when the
    input pair is not one.  This is *not* a claim that a constant vanishes.
    """


@dataclass(frozen=True)
class ShufflePair:
    u: SignedPermutation
    v: SignedPermutation
    kind: str  # "C", "D-even" or "D-odd"
    u_cut: int
    v_cut: int


def u_of_clan(clan: Clan) -> Permutation:
    """
    >>> str(u_of_clan(parse_clan("+-1122")))
    '3,6,5,2,4,1'
    """
    _require_avoiding(clan)
    p, q = clan.signature
    n = p + q
    mates = clan.mates
    images = [0] * n
    high, low = n, p
    for pos, c in enumerate(clan.symbols):
        second = mates[pos] is not None and mates[pos] < pos
        if c == PLUS or second:
            images[pos] = low
            low -= 1
        else:
            images[pos] = high
            high -= 1
    return Permutation(tuple(images))


def v_of_clan(clan: Clan) -> Permutation:
    """
    >>> str(v_of_clan(parse_clan("+-1122")))
    '1,4,2,5,3,6'
    """
    _require_avoiding(clan)
    p, q = clan.signature
    mates = clan.mates
    images = [0] * clan.size
    low, high = 1, p + 1
    for pos, c in enumerate(clan.symbols):
        first = mates[pos] is not None and mates[pos] > pos
        if c == PLUS or first:
            images[pos] = low
            low += 1
        else:
            images[pos] = high
            high += 1
    return Permutation(tuple(images))


def _require_avoiding(clan: Clan) -> None:
    if contains_pattern(clan, normalize((1, 2, 1, 2))):
        raise ValueError(f"clan contains the pattern (1,2,1,2): {clan}")


def clan_of_pair(u: Permutation, v: Permutation, plus_cut: int) -> Clan:
    """Rebuild the clan from a pair, where ``u`` is a shuffle of the
    decreasing blocks p..1 and n..p+1 and ``v`` of the increasing blocks
    1..p and p+1..n, with ``plus_cut`` = p.

    >>> str(clan_of_pair(Permutation((3, 6, 5, 2, 4, 1)), Permutation((1, 4, 2, 5, 3, 6)), 3))
    '+,-,1,1,2,2'
    """
    n = u.size
    p = plus_cut
    if v.size != n or not 0 <= p <= n:
        raise ValueError("sizes do not match")
    if not _is_interleaving(u.images, range(p, 0, -1), range(n, p, -1)):
        raise UnsupportedPairError(f"{u} is not a shuffle of {p}..1 and {n}..{p + 1}")
    if not _is_interleaving(v.images, range(1, p + 1), range(p + 1, n + 1)):
        raise UnsupportedPairError(f"{v} is not a shuffle of 1..{p} and {p + 1}..{n}")
    symbols: list = []
    unmated: list[int] = []  # positions of numbers still needing a mate
    labels = 0
    for i in range(n):
        hi_u, hi_v = u.images[i] > p, v.images[i] > p
        if not hi_u and not hi_v:
            symbols.append(PLUS)
        elif hi_u and hi_v:
            symbols.append(MINUS)
        elif hi_u:
            labels += 1
            symbols.append(labels)
            unmated.append(i)
        else:
            if not unmated:
                raise UnsupportedPairError(f"no open arc to close at position {i + 1}")
            symbols.append(symbols[unmated.pop()])
    if unmated:
        raise UnsupportedPairError("unclosed arcs remain")
    return normalize(symbols)


def _is_interleaving(seq: Sequence[int], block_a, block_b) -> bool:
    block_a, block_b = list(block_a), list(block_b)
    set_a, set_b = set(block_a), set(block_b)
    if set_a & set_b or set(seq) != set_a | set_b or len(seq) != len(set_a) + len(set_b):
        return False
    return [x for x in seq if x in set_a] == block_a and [
        x for x in seq if x in set_b
    ] == block_b


def _standard_cut(w: SignedPermutation) -> Optional[int]:
    # shuffle of 1..k and -n..-(k+1); returns k
    k = sum(1 for x in w.images if x > 0)
    if _is_interleaving(w.images, range(1, k + 1), range(-w.rank, -k)):
        return k
    return None


def _odd_u_cut(w: SignedPermutation) -> Optional[int]:
    # shuffle of 1..j and (n, -(n-1), ..., -(j+1)); returns j
    n = w.rank
    for j in range(n):
        if _is_interleaving(w.images, range(1, j + 1), [n, *range(-(n - 1), -j)]):
            return j
    return None


def classify_pair(u: SignedPermutation, v: SignedPermutation) -> Optional[ShufflePair]:
    """Detect the signed-shuffle shape of (u, v), or return None.

    >>> u = SignedPermutation("D", (1, 3, 2))
    >>> v = SignedPermutation("D", (-3, 1, -2))
    >>> classify_pair(u, v).kind
    'D-odd'
    """
    if u.group != v.group or u.rank != v.rank:
        raise ValueError("group mismatch")
    n = u.rank
    if u.group == "C":
        ku, kv = _standard_cut(u), _standard_cut(v)
        if ku is None or kv is None:
            return None
        return ShufflePair(u, v, "C", ku, kv)
    kv = _standard_cut(v)
    if kv is None or (n - kv) % 2:
        return None
    if n % 2 == 0:
        ju = _standard_cut(u)
        kind = "D-even"
    else:
        ju = _odd_u_cut(u)
        kind = "D-odd"
    if ju is None or ju % 2:
        return None
    return ShufflePair(u, v, kind, ju, kv)


def pair_to_clan(pair: ShufflePair) -> Clan:
    """The clan whose orbit closure realizes the product for this pair.

    Uses the *embedded* long element of W throughout; for type D with n odd
    this differs from the long element of S_{2n} by the central swap.

    >>> u = SignedPermutation("C", (-4, 1, 2, 3))
    >>> v = SignedPermutation("C", (1, -4, 2, 3))
    >>> str(pair_to_clan(classify_pair(u, v)))
    '+,-,1,2,2,1,+,-'
    """
    n = pair.u.rank
    w0_embedded = long_element(pair.u.group, n).embed()
    target = w0_embedded * pair.u.embed()
    clan = clan_of_pair(target, pair.v.embed(), plus_cut=n)
    if pair.kind == "C":
        assert is_skew_symmetric(clan), f"expected a skew-symmetric clan: {clan}"
    else:
        assert is_type_d_clan(clan), f"expected a type D clan: {clan}"
    return clan


def _interleavings(
    group: str, n: int, block_a: Sequence[int], block_b: Sequence[int]
) -> Iterator[SignedPermutation]:
    block_a, block_b = list(block_a), list(block_b)
    for positions in combinations(range(n), len(block_a)):
        chosen = set(positions)
        images, ia, ib = [], 0, 0
        for pos in range(n):
            if pos in chosen:
                images.append(block_a[ia])
                ia += 1
            else:
                images.append(block_b[ib])
                ib += 1
        yield SignedPermutation(group, tuple(images))


def u_shuffles(group: str, n: int) -> tuple[SignedPermutation, ...]:
    """All signed permutations eligible as the first member of a pair."""
    out: list[SignedPermutation] = []
    cuts = range(n + 1) if group == "C" else range(0, n + 1, 2)
    for j in cuts:
        if group == "D" and n % 2:
            if j >= n:
                continue
            block_b = [n, *range(-(n - 1), -j)]
        else:
            block_b = list(range(-n, -j))
        out.extend(_interleavings(group, n, range(1, j + 1), block_b))
    return tuple(out)


def v_shuffles(group: str, n: int) -> tuple[SignedPermutation, ...]:
    """All signed permutations eligible as the second member of a pair."""
    out: list[SignedPermutation] = []
    for k in range(n + 1):
        if group == "D" and (n - k) % 2:
            continue
        out.extend(_interleavings(group, n, range(1, k + 1), range(-n, -k)))
    return tuple(out)
