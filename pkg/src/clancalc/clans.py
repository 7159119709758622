"""
Clans: strings of +, - and matched number pairs, up to relabeling.

A clan of length m is a string whose characters are '+', '-', or natural
numbers, each number occurring exactly twice.  Only the *positions* of the
matching numbers matter: (1,2,1,2), (2,1,2,1) and (5,7,5,7) are all the same
clan, while (1,2,2,1) is different.  We keep clans in canonical form, with
arc labels 1, 2, 3, ... in order of first occurrence, so equality of
:class:`Clan` values is equality of clans.

A clan with p plus signs, q minus signs and k arcs is a (p+k, q+k)-clan.
The length-2n clans of interest here are the skew-symmetric ones (reversing
the string negates it) and the type D ones (skew-symmetric, no arc joining
mirror positions i and 2n+1-i, and an evenness condition on the first half);
these index the GL(n)-orbits on the flag varieties of Sp(2n) and SO(2n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

Symbol = object  # '+', '-', or an int arc label

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class Clan:
    """A clan in canonical form.  Build via :func:`normalize` or :func:`parse_clan`.

    >>> normalize((5, 7, 5, 7))
    Clan(symbols=(1, 2, 1, 2))
    >>> str(parse_clan("+-1221+-"))
    '+,-,1,2,2,1,+,-'
    """

    symbols: tuple

    def __post_init__(self):
        if self.symbols != _canonical(self.symbols):
            raise ValueError(f"clan symbols not in canonical form: {self.symbols}")

    @property
    def size(self) -> int:
        return len(self.symbols)

    @cached_property
    def mates(self) -> tuple[Optional[int], ...]:
        """For each 0-based position, the 0-based matching position (None for signs)."""
        first: dict[object, int] = {}
        mates: list[Optional[int]] = [None] * self.size
        for pos, c in enumerate(self.symbols):
            if c in (PLUS, MINUS):
                continue
            if c in first:
                mates[pos] = first[c]
                mates[first[c]] = pos
            else:
                first[c] = pos
        return tuple(mates)

    @property
    def signature(self) -> tuple[int, int]:
        """The (p, q) for which this is a (p,q)-clan."""
        arcs = sum(1 for m in self.mates if m is not None) // 2
        plus = self.symbols.count(PLUS)
        minus = self.symbols.count(MINUS)
        return plus + arcs, minus + arcs

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.symbols)


def _canonical(symbols: Sequence) -> tuple:
    relabel: dict[object, int] = {}
    out = []
    for c in symbols:
        if c in (PLUS, MINUS):
            out.append(c)
        else:
            if c not in relabel:
                relabel[c] = len(relabel) + 1
            out.append(relabel[c])
    return tuple(out)


def normalize(symbols: Iterable, signature: Optional[tuple[int, int]] = None) -> Clan:
    """Canonicalize a raw symbol sequence into a :class:`Clan`.

    Every non-sign label must occur exactly twice.  If ``signature=(p, q)``
    is given, the sign counts are checked against it.

    >>> normalize((2, 1, 1, 2)).symbols
    (1, 2, 2, 1)
    """
    symbols = tuple(symbols)
    counts: dict[object, int] = {}
    for c in symbols:
        if c not in (PLUS, MINUS):
            counts[c] = counts.get(c, 0) + 1
    bad = [c for c, k in counts.items() if k != 2]
    if bad:
        raise ValueError(f"labels must occur exactly twice, got {bad} in {symbols}")
    if signature is not None:
        p, q = signature
        if p + q != len(symbols):
            raise ValueError(f"signature {signature} does not match length {len(symbols)}")
        if symbols.count(PLUS) - symbols.count(MINUS) != p - q:
            raise ValueError(
                f"sign counts do not match declared signature {signature}: {symbols}"
            )
    return Clan(_canonical(symbols))


def parse_clan(text: str) -> Clan:
    """Parse either compact form ``"+-1221+-"`` (single-character symbols) or
    comma form ``"+, -, 1, 2, 2, 1, +, -"`` (required for multi-digit labels).
    """
    text = text.strip()
    if "," in text:
        parts = [part.strip() for part in text.split(",")]
    else:
        parts = list(text)
    symbols: list = []
    for part in parts:
        if part in (PLUS, MINUS):
            symbols.append(part)
        elif part.isdigit():
            symbols.append(int(part))
        else:
            raise ValueError(f"malformed clan symbol {part!r} in {text!r}")
    return normalize(symbols)


def contains_pattern(clan: Clan, pattern: Clan) -> bool:
    """True iff some subsequence of positions of ``clan`` induces a string
    equal to ``pattern`` as a clan.  A subsequence containing only one
    endpoint of an arc induces a once-occurring number, hence no clan, and
    never matches.
    """
    m = pattern.size
    if m > clan.size:
        return False
    mates = clan.mates
    for positions in combinations(range(clan.size), m):
        index = {pos: k for k, pos in enumerate(positions)}
        induced: list = []
        ok = True
        for pos in positions:
            mate = mates[pos]
            if mate is None:
                induced.append(clan.symbols[pos])
            elif mate in index:
                induced.append(clan.symbols[pos])
            else:
                ok = False
                break
        if ok and _canonical(induced) == pattern.symbols:
            return True
    return False


def avoids_pattern(clan: Clan, pattern: Clan) -> bool:
    """Pattern avoidance for clans (subsequences, not contiguous substrings).

    >>> avoids_pattern(parse_clan("+-1122"), parse_clan("1212"))
    True
    >>> avoids_pattern(parse_clan("1221"), parse_clan("11"))
    False
    """
    return not contains_pattern(clan, pattern)


def _mirror(pos: int, size: int) -> int:
    return size - 1 - pos


def is_skew_symmetric(clan: Clan) -> bool:
    """True iff reversing the string gives the clan with all signs flipped:
    mirror positions carry opposite signs, and the mirror of every arc is an
    arc.

    >>> is_skew_symmetric(parse_clan("+-1221+-"))
    True
    >>> is_skew_symmetric(parse_clan("++"))
    False
    """
    size = clan.size
    if size % 2:
        return False
    mates = clan.mates
    for pos, c in enumerate(clan.symbols):
        mpos = _mirror(pos, size)
        if c == PLUS or c == MINUS:
            opposite = MINUS if c == PLUS else PLUS
            if clan.symbols[mpos] != opposite:
                return False
        else:
            mate = mates[pos]
            if mates[mpos] != _mirror(mate, size):
                return False
    return True


def is_type_d_clan(clan: Clan) -> bool:
    """Skew-symmetric, no arc joins positions i and 2n+1-i, and among the
    first n characters the number of minus signs plus the number of arcs
    lying entirely in the first half is even.

    >>> is_type_d_clan(parse_clan("+1-12+2-"))
    True
    >>> is_type_d_clan(parse_clan("1221"))
    False
    """
    if not is_skew_symmetric(clan):
        return False
    size = clan.size
    half = size // 2
    mates = clan.mates
    count = 0
    for pos in range(half):
        mate = mates[pos]
        if mate == _mirror(pos, size):
            return False
        if clan.symbols[pos] == MINUS:
            count += 1
        elif mate is not None and mate < half and mate > pos:
            count += 1
    return count % 2 == 0


def dense_orbit_clan(group: str, n: int) -> Clan:
    """The clan of the open dense orbit.

    Type C: (1, 2, ..., n, n, ..., 2, 1), all arcs joining mirror positions.
    Type D with n even: (1, 2, ..., n-2, | n-1, n, | n-1, n, | n-3, n-2, ..., 1, 2).
    Type D with n odd: the analogue with one fewer arc pair and '+,-' in the
    two central positions.

    >>> str(dense_orbit_clan("C", 4))
    '1,2,3,4,4,3,2,1'
    >>> str(dense_orbit_clan("D", 4)), str(dense_orbit_clan("D", 3))
    ('1,2,3,4,3,4,1,2', '1,2,+,-,1,2')
    """
    if group == "C":
        if n < 1:
            raise ValueError("rank must be at least 1")
        ascending = list(range(1, n + 1))
        return normalize(ascending + ascending[::-1])
    if group != "D":
        raise ValueError(f"unknown group type {group!r}")
    if n < 2:
        raise ValueError("rank must be at least 2 in type D")
    if n % 2 == 0:
        prefix = list(range(1, n - 1))
        crossing = [n - 1, n]
        descending_pairs = [
            label for start in range(n - 3, 0, -2) for label in (start, start + 1)
        ]
        return normalize(prefix + crossing + crossing + descending_pairs)
    prefix = list(range(1, n - 2))
    crossing = [n - 2, n - 1]
    descending_pairs = [
        label for start in range(n - 4, 0, -2) for label in (start, start + 1)
    ]
    return normalize(prefix + crossing + [PLUS, MINUS] + crossing + descending_pairs)


@lru_cache(maxsize=None)
def skew_symmetric_clans(n: int) -> tuple[Clan, ...]:
    """All skew-symmetric (n,n)-clans, by direct mirror-closed construction."""
    size = 2 * n
    mate: list[Optional[int]] = [None] * size
    sign: list[Optional[str]] = [None] * size
    found: list[Clan] = []

    def snapshot() -> Clan:
        symbols: list = []
        label = 0
        for pos in range(size):
            if sign[pos] is not None:
                symbols.append(sign[pos])
            elif mate[pos] > pos:
                label += 1
                symbols.append(label)
            else:
                symbols.append(symbols[mate[pos]])
        return Clan(_canonical(symbols))

    def rec(pos: int) -> None:
        while pos < size and (mate[pos] is not None or sign[pos] is not None):
            pos += 1
        if pos == size:
            found.append(snapshot())
            return
        mpos = _mirror(pos, size)
        # unassigned positions stay mirror-closed, so pos < n <= mpos
        for here, there in ((PLUS, MINUS), (MINUS, PLUS)):
            sign[pos], sign[mpos] = here, there
            rec(pos + 1)
            sign[pos] = sign[mpos] = None
        mate[pos], mate[mpos] = mpos, pos
        rec(pos + 1)
        mate[pos] = mate[mpos] = None
        for other in range(size):
            if other in (pos, mpos) or mate[other] is not None or sign[other] is not None:
                continue
            mother = _mirror(other, size)
            mate[pos], mate[other] = other, pos
            mate[mpos], mate[mother] = mother, mpos
            rec(pos + 1)
            mate[pos] = mate[other] = mate[mpos] = mate[mother] = None

    rec(0)
    return tuple(sorted(found, key=str))


@lru_cache(maxsize=None)
def enumerate_clans(group: str, n: int) -> tuple[Clan, ...]:
    """All clans indexing orbits of the rank-n group of the given type.

    >>> [str(c) for c in enumerate_clans("C", 1)]
    ['+,-', '-,+', '1,1']
    """
    if group == "C":
        return skew_symmetric_clans(n)
    if group == "D":
        return tuple(c for c in skew_symmetric_clans(n) if is_type_d_clan(c))
    raise ValueError(f"unknown group type {group!r}")
