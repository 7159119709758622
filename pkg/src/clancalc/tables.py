"""
Bundled regression fixtures: three fully worked product expansions.

Each table fixes a pair (u, v), lists every group element of length
l(u) + l(v) as a word in the simple reflections, and records the clan the
word-action produces from the clan of the pair together with the resulting
structure constant.  ``check_table`` recomputes all of it and reports
mismatches; the ``tables`` CLI command exits nonzero if any appear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import act_word
from .clans import parse_clan
from .products import schubert_constant
from .richardson import classify_pair, pair_to_clan
from .weyl import enumerate_by_length, evaluate_word, parse_signed

Row = tuple[tuple[int, ...], str, int]


@dataclass(frozen=True)
class ReferenceTable:
    key: str
    group: str
    rank: int
    u: str
    v: str
    rows: tuple[Row, ...]


_C4_ROWS: tuple[Row, ...] = (
    ((1, 2, 1, 4, 3, 2, 1), "1,2,3,4,3,4,2,1", 0),
    ((3, 2, 1, 4, 3, 2, 1), "1,2,3,4,4,3,2,1", 2),
    ((1, 3, 2, 4, 3, 2, 1), "1,2,3,4,4,2,3,1", 0),
    ((2, 3, 2, 4, 3, 2, 1), "1,2,3,4,4,3,1,2", 0),
    ((2, 1, 3, 4, 3, 2, 1), "1,2,3,4,4,3,2,1", 2),
    ((1, 2, 3, 4, 3, 2, 1), "1,2,3,4,4,3,2,1", 2),
    ((1, 3, 2, 1, 4, 3, 2), "1,2,3,+,-,3,2,1", 0),
    ((2, 3, 2, 1, 4, 3, 2), "1,2,3,+,-,3,2,1", 0),
    ((4, 3, 2, 1, 4, 3, 2), "1,2,3,4,4,3,2,1", 1),
    ((2, 1, 3, 2, 4, 3, 2), "1,2,+,3,3,-,2,1", 0),
    ((1, 2, 3, 2, 4, 3, 2), "1,+,2,3,3,2,-,1", 0),
    ((1, 2, 1, 3, 4, 3, 2), "1,2,+,3,3,-,2,1", 0),
    ((2, 1, 3, 2, 1, 4, 3), "1,2,3,3,4,4,2,1", 0),
    ((1, 2, 3, 2, 1, 4, 3), "1,2,3,2,4,3,4,1", 0),
    ((1, 4, 3, 2, 1, 4, 3), "1,2,3,4,2,3,4,1", 0),
    ((2, 4, 3, 2, 1, 4, 3), "1,2,3,4,1,3,2,4", 0),
    ((3, 4, 3, 2, 1, 4, 3), "1,2,3,4,4,1,2,3", 0),
    ((1, 2, 1, 3, 2, 4, 3), "1,2,+,-,+,-,2,1", 0),
    ((2, 1, 4, 3, 2, 4, 3), "1,2,+,3,3,-,2,1", 0),
    ((1, 2, 4, 3, 2, 4, 3), "1,+,2,3,3,2,-,1", 0),
    ((3, 2, 4, 3, 2, 4, 3), "+,1,2,3,3,2,1,-", 0),
    ((1, 3, 4, 3, 2, 4, 3), "1,+,2,3,3,2,-,1", 0),
    ((2, 3, 4, 3, 2, 4, 3), "+,1,2,3,3,2,1,-", 0),
    ((1, 2, 1, 3, 2, 1, 4), "1,2,3,3,4,4,2,1", 0),
    ((2, 1, 4, 3, 2, 1, 4), "1,2,3,4,3,4,2,1", 0),
    ((1, 2, 4, 3, 2, 1, 4), "1,2,3,4,2,3,4,1", 0),
    ((3, 2, 4, 3, 2, 1, 4), "1,2,3,4,4,1,2,3", 0),
    ((1, 3, 4, 3, 2, 1, 4), "1,2,3,4,4,2,3,1", 0),
    ((2, 3, 4, 3, 2, 1, 4), "1,2,3,4,4,3,1,2", 0),
    ((1, 2, 1, 4, 3, 2, 4), "1,2,+,3,3,-,2,1", 0),
    ((3, 2, 1, 4, 3, 2, 4), "1,2,3,+,-,3,2,1", 0),
    ((1, 3, 2, 4, 3, 2, 4), "1,+,2,3,3,2,-,1", 0),
    ((2, 3, 2, 4, 3, 2, 4), "+,1,2,3,3,2,1,-", 0),
    ((2, 1, 3, 4, 3, 2, 4), "1,2,+,3,3,-,2,1", 0),
    ((1, 2, 3, 4, 3, 2, 4), "1,+,2,3,3,2,-,1", 0),
    ((1, 3, 2, 1, 4, 3, 4), "1,2,3,2,4,3,4,1", 0),
    ((2, 3, 2, 1, 4, 3, 4), "1,2,3,1,4,3,2,4", 0),
    ((4, 3, 2, 1, 4, 3, 4), "1,2,3,4,1,3,2,4", 0),
    ((2, 1, 3, 2, 4, 3, 4), "1,2,+,-,+,-,2,1", 0),
    ((1, 2, 3, 2, 4, 3, 4), "1,+,2,-,+,2,-,1", 0),
    ((1, 4, 3, 2, 4, 3, 4), "1,+,2,3,3,2,-,1", 0),
    ((2, 4, 3, 2, 4, 3, 4), "+,1,2,3,3,2,1,-", 0),
    ((3, 4, 3, 2, 4, 3, 4), "+,1,2,3,3,2,1,-", 0),
    ((1, 2, 1, 3, 4, 3, 4), "1,2,2,3,3,4,4,1", 0),
)

_D4_ROWS: tuple[Row, ...] = (
    ((1, 3, 2, 1), "1,2,2,1,3,4,4,3", 0),
    ((2, 3, 2, 1), "1,2,2,1,3,4,4,3", 0),
    ((1, 4, 2, 1), "1,2,3,4,2,1,4,3", 0),
    ((2, 4, 2, 1), "1,2,3,4,3,4,1,2", 1),
    ((3, 4, 2, 1), "1,2,3,4,2,1,4,3", 0),
    ((2, 1, 3, 2), "1,2,2,1,3,4,4,3", 0),
    ((1, 2, 3, 2), "1,+,-,1,2,+,-,2", 0),
    ((2, 1, 4, 2), "1,2,+,+,-,-,1,2", 0),
    ((1, 2, 4, 2), "1,+,2,+,-,1,-,2", 0),
    ((3, 2, 4, 2), "+,1,2,+,-,1,2,-", 0),
    ((1, 3, 4, 2), "1,+,2,+,-,1,-,2", 0),
    ((2, 3, 4, 2), "+,1,2,+,-,1,2,-", 0),
    ((1, 2, 1, 3), "1,2,2,1,3,4,4,3", 0),
    ((4, 2, 1, 3), "1,2,3,4,2,1,4,3", 0),
    ((1, 4, 2, 3), "1,+,2,+,-,1,-,2", 0),
    ((2, 4, 2, 3), "+,1,2,+,-,1,2,-", 0),
    ((3, 4, 2, 3), "+,1,2,+,-,1,2,-", 0),
    ((1, 2, 1, 4), "1,2,+,+,-,-,1,2", 0),
    ((3, 2, 1, 4), "1,2,+,+,-,-,1,2", 0),
    ((1, 3, 2, 4), "1,+,2,+,-,1,-,2", 0),
    ((2, 3, 2, 4), "+,1,2,+,-,1,2,-", 0),
    ((2, 1, 3, 4), "1,2,+,+,-,-,1,2", 0),
    ((1, 2, 3, 4), "1,+,2,+,-,1,-,2", 0),
)

_D3_ROWS: tuple[Row, ...] = (
    ((1, 2, 1), "1,-,1,2,+,2", 0),
    ((1, 3, 1), "1,+,2,1,-,2", 0),
    ((2, 3, 1), "1,2,+,-,1,2", 1),
    ((3, 1, 2), "1,2,+,-,1,2", 1),
    ((2, 1, 3), "1,-,1,2,+,2", 0),
    ((1, 2, 3), "1,-,1,2,+,2", 0),
)

REFERENCE_TABLES: dict[str, ReferenceTable] = {
    "C4": ReferenceTable("C4", "C", 4, "-4,1,2,3", "1,-4,2,3", _C4_ROWS),
    "D4": ReferenceTable("D4", "D", 4, "-4,1,2,-3", "1,2,-4,-3", _D4_ROWS),
    "D3": ReferenceTable("D3", "D", 3, "1,3,2", "-3,1,-2", _D3_ROWS),
}


def check_table(table: ReferenceTable) -> list[str]:
    """Recompute every row of a reference table; return mismatch messages
    (empty when the table reproduces exactly).
    """
    problems: list[str] = []
    group, n = table.group, table.rank
    u = parse_signed(group, n, table.u)
    v = parse_signed(group, n, table.v)
    pair = classify_pair(u, v)
    if pair is None:
        return [f"{table.key}: ({table.u}; {table.v}) did not classify as a pair"]
    gamma = pair_to_clan(pair)
    degree = u.length + v.length
    elements = {}
    for word, clan_text, coeff in table.rows:
        w = evaluate_word(group, n, word)
        if w.length != len(word):
            problems.append(f"{table.key}: row word {list(word)} is not reduced")
            continue
        if w in elements:
            problems.append(f"{table.key}: duplicate element for word {list(word)}")
        elements[w] = word
        final, _ = act_word(group, word, gamma)
        expected = parse_clan(clan_text)
        if final != expected:
            problems.append(
                f"{table.key}: word {list(word)} produced {final}, table says {expected}"
            )
        got = schubert_constant(u, v, w)
        if got != coeff:
            problems.append(
                f"{table.key}: word {list(word)} constant {got}, table says {coeff}"
            )
    expected_elements = set(enumerate_by_length(group, n, degree))
    if set(elements) != expected_elements:
        problems.append(
            f"{table.key}: rows cover {len(elements)} elements, group has "
            f"{len(expected_elements)} of length {degree}"
        )
    return problems
