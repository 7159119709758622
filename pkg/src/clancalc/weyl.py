"""
Signed-permutation Weyl groups of types C_n and D_n.

A signed permutation of rank n is a bijection s of {-n, ..., -1, 1, ..., n}
with s(-i) = -s(i).  We store only the images of 1, ..., n as a tuple, so
``(-4, 1, 2, 3)`` is the element written 4̄123 in barred one-line notation.
Type D restricts to elements with an even number of negative entries.

Simple reflections are indexed 1..n.  For i < n, s_i is the transposition of
the values i and i+1 (reflection in x_i - x_{i+1}).  The last generator
differs by type:

* type C: s_n negates the value n (reflection in 2x_n);
* type D: s_n swaps and negates the values n-1 and n (reflection in
  x_{n-1} + x_n).

Elements embed into S_{2n} as the permutations pi of {1, ..., 2n} satisfying
pi(2n+1-i) = 2n+1-pi(i): positive values stay put, a negative value -k in
position i becomes 2n+1-k.  Bruhat order in type C is the order induced from
S_{2n}; in type D it is strictly weaker and needs an extra parity condition
on sorted prefixes (``bruhat_leq`` implements both).

Values are immutable and all operations are pure functions, so everything
here is safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterator, Sequence

GROUPS = ("C", "D")


def _check_group(group: str) -> None:
    if group not in GROUPS:
        raise ValueError(f"unknown group type {group!r}, expected 'C' or 'D'")


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., m} in one-line notation.

    >>> Permutation((2, 1, 3)) * Permutation((3, 1, 2))
    Permutation(images=(3, 2, 1))
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def apply(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.images)


def long_element_perm(m: int) -> Permutation:
    """The order-reversing (longest) element of S_m."""
    return Permutation(tuple(range(m, 0, -1)))


def bruhat_leq_perm(a: Permutation, b: Permutation) -> bool:
    """Bruhat order on S_m by the sorted-prefix (tableau) criterion.

    >>> bruhat_leq_perm(Permutation((1, 3, 2)), Permutation((3, 1, 2)))
    False
    >>> bruhat_leq_perm(Permutation((1, 3, 2)), Permutation((3, 2, 1)))
    True
    """
    if a.size != b.size:
        raise ValueError("size mismatch")
    for d in range(1, a.size):
        for x, y in zip(sorted(a.images[:d]), sorted(b.images[:d])):
            if x > y:
                return False
    return True


def _root_is_negative(vector: Sequence[int]) -> bool:
    # In types C/D every root is +-x_i +- x_j or +-2x_i; a root is negative
    # exactly when its first nonzero coordinate is.
    for c in vector:
        if c:
            return c < 0
    raise ValueError("zero vector is not a root")


@dataclass(frozen=True)
class SignedPermutation:
    """An element of the Weyl group of type C_n or D_n.

    >>> w = SignedPermutation("C", (-4, 1, 2, 3))
    >>> w.length
    4
    >>> str(w.embed())
    '5,1,2,3,6,7,8,4'
    """

    group: str
    images: tuple[int, ...]

    def __post_init__(self):
        _check_group(self.group)
        if sorted(abs(v) for v in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation of 1..{len(self.images)}: {self.images}")
        if self.group == "D" and sum(1 for v in self.images if v < 0) % 2:
            raise ValueError(f"type D requires an even number of sign changes: {self.images}")

    @property
    def rank(self) -> int:
        return len(self.images)

    def apply(self, i: int) -> int:
        """The image of i, for i in {-n..-1, 1..n}."""
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if self.group != other.group or self.rank != other.rank:
            raise ValueError("group mismatch")
        return SignedPermutation(self.group, tuple(self.apply(j) for j in other.images))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.rank
        for i, j in enumerate(self.images, start=1):
            if j > 0:
                inv[j - 1] = i
            else:
                inv[-j - 1] = -i
        return SignedPermutation(self.group, tuple(inv))

    @cached_property
    def length(self) -> int:
        """Coxeter length, by counting positive roots sent to negative ones."""
        total = 0
        for j in range(self.rank):
            b = self.images[j]
            for i in range(j):
                a = self.images[i]
                # x_i - x_j maps to x_a - x_b
                if (abs(a) < abs(b) and a < 0) or (abs(a) > abs(b) and b > 0):
                    total += 1
                # x_i + x_j maps to x_a + x_b
                if (abs(a) < abs(b) and a < 0) or (abs(b) < abs(a) and b < 0):
                    total += 1
            if self.group == "C" and b < 0:
                total += 1
        return total

    def has_right_descent(self, i: int) -> bool:
        """True iff multiplying by s_i on the right shortens the element."""
        n = self.rank
        if not 1 <= i <= n:
            raise ValueError(f"simple reflection index out of range: {i}")
        if i < n:
            a, b = self.images[i - 1], self.images[i]
            return (abs(a) < abs(b) and a < 0) or (abs(a) > abs(b) and b > 0)
        if self.group == "C":
            return self.images[n - 1] < 0
        a, b = self.images[n - 2], self.images[n - 1]
        return (abs(a) < abs(b) and a < 0) or (abs(b) < abs(a) and b < 0)

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def embed(self) -> Permutation:
        """The image in S_{2n} under pi(i) = s(i) if s(i) > 0 else 2n+1-|s(i)|."""
        n = self.rank
        first = [v if v > 0 else 2 * n + 1 - abs(v) for v in self.images]
        return Permutation(tuple(first) + tuple(2 * n + 1 - first[n - 1 - k] for k in range(n)))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.images)


def identity(group: str, n: int) -> SignedPermutation:
    return SignedPermutation(group, tuple(range(1, n + 1)))


def simple_reflection(group: str, n: int, i: int) -> SignedPermutation:
    """The generator s_i of the rank-n group, 1 <= i <= n.

    >>> str(simple_reflection("C", 2, 2)), str(simple_reflection("D", 3, 3))
    ('1,-2', '1,-3,-2')
    """
    _check_group(group)
    if not 1 <= i <= n:
        raise ValueError(f"simple reflection index out of range: {i}")
    images = list(range(1, n + 1))
    if i < n:
        images[i - 1], images[i] = images[i], images[i - 1]
    elif group == "C":
        images[n - 1] = -n
    else:
        images[n - 2], images[n - 1] = -n, -(n - 1)
    return SignedPermutation(group, tuple(images))


def long_element(group: str, n: int) -> SignedPermutation:
    """The maximal-length element: all signs flip, except that in type D with
    n odd the value n keeps its sign.

    >>> str(long_element("D", 3))
    '-1,-2,3'
    """
    _check_group(group)
    if n < 2:
        raise ValueError("rank must be at least 2")
    images = [-i for i in range(1, n + 1)]
    if group == "D" and n % 2:
        images[n - 1] = n
    return SignedPermutation(group, tuple(images))


def unembed(group: str, perm: Permutation) -> SignedPermutation:
    """Inverse of :meth:`SignedPermutation.embed`.

    Raises ValueError if ``perm`` is not a signed element of S_{2n}, or (in
    type D) has an odd number of first-half values above n.
    """
    if perm.size % 2:
        raise ValueError("ambient permutation must have even size")
    n = perm.size // 2
    for i in range(1, n + 1):
        if perm.apply(2 * n + 1 - i) != 2 * n + 1 - perm.apply(i):
            raise ValueError(f"{perm} is not a signed element of S_{2 * n}")
    images = tuple(v if v <= n else -(2 * n + 1 - v) for v in perm.images[:n])
    return SignedPermutation(group, images)


@lru_cache(maxsize=None)
def elements_by_length(group: str, n: int) -> tuple[tuple[SignedPermutation, ...], ...]:
    """All group elements, graded by length.  Entry ``l`` lists length-l
    elements; the grading is found by breadth-first closure under right
    multiplication by simple reflections.
    """
    _check_group(group)
    gens = [simple_reflection(group, n, i) for i in range(1, n + 1)]
    levels = [(identity(group, n),)]
    seen = {levels[0][0]}
    while True:
        frontier = set()
        for w in levels[-1]:
            for i, s in enumerate(gens, start=1):
                if not w.has_right_descent(i):
                    ws = w * s
                    if ws not in seen:
                        frontier.add(ws)
        if not frontier:
            return tuple(levels)
        seen.update(frontier)
        levels.append(tuple(sorted(frontier, key=lambda w: w.images)))


def enumerate_by_length(group: str, n: int, length: int) -> tuple[SignedPermutation, ...]:
    """All elements of the given length (empty beyond the longest element).

    >>> len(enumerate_by_length("C", 4, 7)), len(enumerate_by_length("D", 4, 4))
    (44, 23)
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    levels = elements_by_length(group, n)
    return levels[length] if length < len(levels) else ()


def all_elements(group: str, n: int) -> Iterator[SignedPermutation]:
    for level in elements_by_length(group, n):
        yield from level


def evaluate_word(group: str, n: int, word: Sequence[int]) -> SignedPermutation:
    """The product s_{i_1} s_{i_2} ... s_{i_k} of the word ``[i_1, ..., i_k]``."""
    w = identity(group, n)
    for i in word:
        w = w * simple_reflection(group, n, i)
    return w


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    """The lexicographically smallest reduced word for ``w``, found by
    repeatedly peeling off the smallest left descent.

    >>> reduced_word(long_element("C", 2))
    (1, 2, 1, 2)
    """
    n = w.rank
    inv = w.inverse()
    word = []
    while inv.length:
        # left descents of w are right descents of its inverse
        i = next(i for i in range(1, n + 1) if inv.has_right_descent(i))
        word.append(i)
        inv = inv * simple_reflection(w.group, n, i)
    return tuple(word)


def all_reduced_words(w: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    """Every reduced word for ``w`` (grows quickly; meant for small lengths)."""
    memo: dict[SignedPermutation, tuple[tuple[int, ...], ...]] = {}

    def rec(x: SignedPermutation) -> tuple[tuple[int, ...], ...]:
        if not x.length:
            return ((),)
        if x not in memo:
            words = []
            for i in range(1, x.rank + 1):
                if x.has_right_descent(i):
                    s = simple_reflection(x.group, x.rank, i)
                    words.extend(prefix + (i,) for prefix in rec(x * s))
            memo[x] = tuple(words)
        return memo[x]

    return rec(w)


def _type_d_parity_compatible(a: Permutation, b: Permutation, n: int) -> bool:
    # Sorted-prefix windows whose absolute values form {n-r+1..n} on both
    # sides must hold values above n with equal parity.
    for d in range(1, n + 1):
        asc_a = sorted(a.images[:d])
        asc_b = sorted(b.images[:d])
        abs_a = [min(v, 2 * n + 1 - v) for v in asc_a]
        abs_b = [min(v, 2 * n + 1 - v) for v in asc_b]
        for start in range(d):
            for r in range(1, d - start + 1):
                window = set(range(n - r + 1, n + 1))
                if (
                    set(abs_a[start : start + r]) == window
                    and set(abs_b[start : start + r]) == window
                ):
                    pa = sum(1 for v in asc_a[start : start + r] if v > n)
                    pb = sum(1 for v in asc_b[start : start + r] if v > n)
                    if (pa - pb) % 2:
                        return False
    return True


def bruhat_leq(a: SignedPermutation, b: SignedPermutation) -> bool:
    """Bruhat order.  Type C compares the S_{2n} embeddings; type D also
    requires the parity condition on compatible sorted-prefix windows.

    >>> u = SignedPermutation("C", (-4, 1, 2, 3))
    >>> v = SignedPermutation("C", (1, -4, 2, 3))
    >>> w0 = long_element("C", 4)
    >>> bruhat_leq(v, w0 * u)
    True
    """
    if a.group != b.group or a.rank != b.rank:
        raise ValueError("group mismatch")
    if a == b:
        return True
    ea, eb = a.embed(), b.embed()
    if not bruhat_leq_perm(ea, eb):
        return False
    if a.group == "D" and not _type_d_parity_compatible(ea, eb, a.rank):
        return False
    return True


def bruhat_leq_subword(a: SignedPermutation, b: SignedPermutation) -> bool:
    """Brute-force Bruhat comparison by the subword criterion: a <= b iff some
    length-l(a) subword of a fixed reduced word for b evaluates to a.

    Exponential; used as an independent oracle in tests.
    """
    if a.group != b.group or a.rank != b.rank:
        raise ValueError("group mismatch")
    word = reduced_word(b)
    target = a.length
    if target > len(word):
        return False
    return any(
        evaluate_word(a.group, a.rank, sub) == a
        for sub in combinations(word, target)
    )


def parse_signed(group: str, rank: int, text: str) -> SignedPermutation:
    """Parse comma-separated signed images, e.g. ``"-4,1,2,-3"``."""
    try:
        images = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed signed permutation: {text!r}") from None
    if len(images) != rank:
        raise ValueError(f"expected {rank} entries, got {len(images)}: {text!r}")
    return SignedPermutation(group, images)


def parse_group(text: str) -> tuple[str, int]:
    """Split a group name like ``"C4"`` into type and rank."""
    if len(text) < 2 or text[0] not in GROUPS:
        raise ValueError(f"malformed group name: {text!r}")
    try:
        rank = int(text[1:])
    except ValueError:
        raise ValueError(f"malformed group name: {text!r}") from None
    if rank < 2:
        raise ValueError("rank must be at least 2")
    return text[0], rank
