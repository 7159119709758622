"""
An exact divided-difference oracle for Schubert structure constants.

Works in the polynomial ring Q[x_1, ..., x_n] with the reflection action of
the Weyl group.  The class of a point is represented by
B(w0) = (prod of positive roots) / |W|; lower classes follow by divided
differences, B(w s_i) = d_i B(w) whenever l(w s_i) < l(w).  For elements
with l(w) = l(u) + l(v), applying d_w to B(u) * B(v) yields a constant
polynomial whose value is exactly the structure constant c_{u,v}^w: divided
differences are linear over invariants, so the invariant-ideal part of the
product dies under a full-length string of operators.

Everything is exact rational arithmetic; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .weyl import SignedPermutation, all_elements, reduced_word, simple_reflection

Exponents = tuple[int, ...]


class ExactPolynomial:
    """A multivariate polynomial with exact rational coefficients, stored as
    a map from exponent vectors to nonzero coefficients.  Instances are
    immutable by convention: every operation builds a new polynomial.

    >>> x1, x2 = ExactPolynomial.variable(2, 0), ExactPolynomial.variable(2, 1)
    >>> print((x1 + x2) * (x1 - x2))
    x1^2 - x2^2
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Fraction]):
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "ExactPolynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "ExactPolynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "ExactPolynomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def linear_form(cls, coeffs: Sequence[int]) -> "ExactPolynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = Fraction(c)
        return cls(n, terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return ExactPolynomial(self.nvars, out)

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return ExactPolynomial(self.nvars, out)

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return ExactPolynomial(self.nvars, out)

    def scale(self, factor) -> "ExactPolynomial":
        factor = Fraction(factor)
        return ExactPolynomial(self.nvars, {e: c * factor for e, c in self.terms.items()})

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def substitute_signed(self, mapping: Sequence[tuple[int, int]]) -> "ExactPolynomial":
        """Apply the variable substitution x_i -> sign * x_j where
        ``mapping[i] = (j, sign)``.
        """
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            exps = [0] * self.nvars
            sign = 1
            for i, power in enumerate(e):
                if power:
                    j, s = mapping[i]
                    exps[j] += power
                    if s < 0 and power % 2:
                        sign = -sign
            key = tuple(exps)
            out[key] = out.get(key, Fraction(0)) + (c if sign > 0 else -c)
        return ExactPolynomial(self.nvars, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(e)
                if p
            )
            parts.append((c, mono))
        pieces = []
        for k, (c, mono) in enumerate(parts):
            sign = "-" if c < 0 else ("+" if k else "")
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else f"{mag}")
            pieces.append(f"{sign} {body}" if k else f"{sign}{body}")
        return " ".join(pieces)


@dataclass(frozen=True)
class RootSystem:
    """Roots of type C_n or D_n in the coordinates x_1, ..., x_n."""

    group: str
    rank: int

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        roots = []
        for i in range(n - 1):
            vec = [0] * n
            vec[i], vec[i + 1] = 1, -1
            roots.append(tuple(vec))
        last = [0] * n
        if self.group == "C":
            last[n - 1] = 2
        else:
            last[n - 2] = last[n - 1] = 1
        roots.append(tuple(last))
        return tuple(roots)

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                vec = [0] * n
                vec[i], vec[j] = 1, -1
                roots.append(tuple(vec))
                vec2 = [0] * n
                vec2[i], vec2[j] = 1, 1
                roots.append(tuple(vec2))
        if self.group == "C":
            for i in range(n):
                vec = [0] * n
                vec[i] = 2
                roots.append(tuple(vec))
        expected = n * n if self.group == "C" else n * n - n
        assert len(roots) == expected
        return tuple(roots)

    @property
    def weyl_order(self) -> int:
        n = self.rank
        return factorial(n) * (2**n if self.group == "C" else 2 ** (n - 1))


def _reflection_mapping(root: Sequence[int]) -> list[tuple[int, int]]:
    support = [i for i, c in enumerate(root) if c]
    n = len(root)
    mapping = [(i, 1) for i in range(n)]
    if len(support) == 1:
        (i,) = support
        mapping[i] = (i, -1)
    elif len(support) == 2:
        i, j = support
        if root[i] * root[j] < 0:
            mapping[i], mapping[j] = (j, 1), (i, 1)
        else:
            mapping[i], mapping[j] = (j, -1), (i, -1)
    else:
        raise ValueError(f"not a root of type C/D: {root}")
    return mapping


def reflect(root: Sequence[int], poly: ExactPolynomial) -> ExactPolynomial:
    """The reflection in ``root`` acting on a polynomial.

    >>> p = ExactPolynomial.variable(2, 0)
    >>> print(reflect((1, 1), p))
    -x2
    """
    return poly.substitute_signed(_reflection_mapping(root))


def divided_difference(root: Sequence[int], poly: ExactPolynomial) -> ExactPolynomial:
    """(f - s_root f) / root; the numerator is always divisible by the root.

    >>> p = ExactPolynomial.variable(2, 0) * ExactPolynomial.variable(2, 0)
    >>> print(divided_difference((1, -1), p))
    x1 + x2
    """
    numerator = poly - reflect(root, poly)
    return _divide_by_linear(numerator, root)


def _divide_by_linear(poly: ExactPolynomial, form: Sequence[int]) -> ExactPolynomial:
    pivot = next(i for i, c in enumerate(form) if c)
    lead = Fraction(form[pivot])
    rest = [(j, form[j]) for j in range(pivot + 1, len(form)) if form[j]]
    # synthetic division in the pivot variable, top degree down
    slices: dict[int, dict[Exponents, Fraction]] = {}
    for e, c in poly.terms.items():
        slices.setdefault(e[pivot], {})[e] = c
    quotient: dict[Exponents, Fraction] = {}
    for d in range(max(slices, default=0), 0, -1):
        for e, c in slices.get(d, {}).items():
            q = c / lead
            qe = list(e)
            qe[pivot] -= 1
            quotient[tuple(qe)] = quotient.get(tuple(qe), Fraction(0)) + q
            for j, cj in rest:
                re = list(qe)
                re[j] += 1
                key = tuple(re)
                lower = slices.setdefault(d - 1, {})
                lower[key] = lower.get(key, Fraction(0)) - q * cj
                if not lower[key]:
                    del lower[key]
    remainder = {e: c for e, c in slices.get(0, {}).items() if c}
    if remainder:
        raise ArithmeticError(f"polynomial not divisible by {form}: remainder {remainder}")
    return ExactPolynomial(poly.nvars, quotient)


@lru_cache(maxsize=None)
def schubert_representatives(
    group: str, n: int
) -> Mapping[SignedPermutation, ExactPolynomial]:
    """Polynomial representatives of every Schubert class of the rank-n
    group, computed from the top class downward by divided differences.
    """
    system = RootSystem(group, n)
    top = ExactPolynomial.constant(n, Fraction(1, system.weyl_order))
    for root in system.positive_roots:
        top = top * ExactPolynomial.linear_form(root)
    ordered = sorted(all_elements(group, n), key=lambda w: -w.length)
    simples = system.simple_roots
    reps: dict[SignedPermutation, ExactPolynomial] = {ordered[0]: top}
    for w in ordered[1:]:
        i = next(i for i in range(1, n + 1) if not w.has_right_descent(i))
        longer = w * simple_reflection(group, n, i)
        reps[w] = divided_difference(simples[i - 1], reps[longer])
    return reps


def schubert_representative(w: SignedPermutation) -> ExactPolynomial:
    return schubert_representatives(w.group, w.rank)[w]


def apply_word(group: str, n: int, word: Sequence[int], poly: ExactPolynomial) -> ExactPolynomial:
    """The divided-difference string of a reduced word, rightmost letter first."""
    simples = RootSystem(group, n).simple_roots
    for i in reversed(word):
        poly = divided_difference(simples[i - 1], poly)
    return poly


def oracle_constant(
    u: SignedPermutation,
    v: SignedPermutation,
    w: SignedPermutation,
    reps: Mapping[SignedPermutation, ExactPolynomial] | None = None,
) -> Fraction:
    """The structure constant c_{u,v}^w by exact divided differences.

    Requires l(w) = l(u) + l(v); the result of the operator string is then a
    constant polynomial, returned as an exact rational (always a nonnegative
    integer, which tests assert rather than assume).  A precomputed
    representative table may be passed to bypass the in-memory cache.

    >>> from .weyl import parse_signed, evaluate_word
    >>> u = parse_signed("D", 3, "1,3,2")
    >>> v = parse_signed("D", 3, "-3,1,-2")
    >>> oracle_constant(u, v, evaluate_word("D", 3, (2, 3, 1)))
    Fraction(1, 1)
    """
    if u.group != v.group or u.rank != v.rank or u.group != w.group or u.rank != w.rank:
        raise ValueError("group mismatch")
    if w.length != u.length + v.length:
        raise ValueError(
            f"length mismatch: l(w)={w.length} but l(u)+l(v)={u.length + v.length}"
        )
    if reps is None:
        reps = schubert_representatives(u.group, u.rank)
    result = apply_word(u.group, u.rank, reduced_word(w), reps[u] * reps[v])
    if not result.is_constant():
        raise ArithmeticError(f"operator string left a non-constant: {result}")
    return result.constant_value()
