"""
Structure constants and product expansions for pairs of signed shuffles.

For a pair (u, v) of signed shuffles with w0*u >= v, the product of the
Schubert classes of u and v expands over the elements w with
l(w) = l(u) + l(v) whose word-action carries the clan of the pair to the
dense-orbit clan; such a w contributes 2^(double steps) in type C and 1 in
type D.  If w0*u >= v fails every constant of the pair is zero.

Pairs that are not signed shuffles are *unsupported*, not zero: the rule
simply does not apply, and ``UnsupportedPairError`` is raised rather than
returning a misleading 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .action import act_word
from .clans import Clan, dense_orbit_clan
from .richardson import ShufflePair, UnsupportedPairError, classify_pair, pair_to_clan
from .weyl import (
    SignedPermutation,
    bruhat_leq,
    enumerate_by_length,
    long_element,
    reduced_word,
)


@dataclass(frozen=True)
class SchubertProduct:
    group: str
    rank: int
    u: SignedPermutation
    v: SignedPermutation
    terms: Mapping[SignedPermutation, int]


def _classified(u: SignedPermutation, v: SignedPermutation) -> ShufflePair:
    pair = classify_pair(u, v)
    if pair is None:
        raise UnsupportedPairError(
            f"({u}; {v}) is not a type {u.group} pair of signed shuffles"
        )
    return pair


def _pair_is_live(u: SignedPermutation, v: SignedPermutation) -> bool:
    # constants vanish identically unless w0*u >= v
    return bruhat_leq(v, long_element(u.group, u.rank) * u)


def schubert_constant(
    u: SignedPermutation, v: SignedPermutation, w: SignedPermutation
) -> int:
    """The coefficient of the Schubert class of w in the product for (u, v).

    >>> from .weyl import parse_signed, evaluate_word
    >>> u, v = parse_signed("C", 4, "-4,1,2,3"), parse_signed("C", 4, "1,-4,2,3")
    >>> schubert_constant(u, v, evaluate_word("C", 4, (3, 2, 1, 4, 3, 2, 1)))
    2
    """
    pair = _classified(u, v)
    if w.group != u.group or w.rank != u.rank:
        raise ValueError("group mismatch")
    if not _pair_is_live(u, v):
        return 0
    if w.length != u.length + v.length:
        return 0
    gamma = pair_to_clan(pair)
    final, doubles = act_word(u.group, reduced_word(w), gamma)
    if final != dense_orbit_clan(u.group, u.rank):
        return 0
    return 2**doubles if u.group == "C" else 1


def schubert_product(u: SignedPermutation, v: SignedPermutation) -> SchubertProduct:
    """Full expansion of the product of the Schubert classes of u and v.

    >>> from .weyl import parse_signed
    >>> u, v = parse_signed("D", 3, "1,3,2"), parse_signed("D", 3, "-3,1,-2")
    >>> sorted(str(w) for w in schubert_product(u, v).terms)
    ['-2,1,-3', '-3,-2,1']
    """
    pair = _classified(u, v)
    group, n = u.group, u.rank
    terms: dict[SignedPermutation, int] = {}
    if _pair_is_live(u, v):
        gamma = pair_to_clan(pair)
        top = dense_orbit_clan(group, n)
        for w in enumerate_by_length(group, n, u.length + v.length):
            final, doubles = act_word(group, reduced_word(w), gamma)
            if final == top:
                terms[w] = 2**doubles if group == "C" else 1
    return SchubertProduct(group, n, u, v, terms)


def product_to_json(product: SchubertProduct) -> dict:
    """JSON-ready dump with deterministic term order."""
    return {
        "type": product.group,
        "rank": product.rank,
        "u": str(product.u),
        "v": str(product.v),
        "terms": [
            {
                "w": str(w),
                "word": ",".join(str(i) for i in reduced_word(w)),
                "coeff": coeff,
            }
            for w, coeff in sorted(product.terms.items(), key=lambda kv: kv[0].images)
        ],
    }
