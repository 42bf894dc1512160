"""Exact arithmetic in the two degree monoids.

The positive Baumslag-Solitar monoid on generators a, b with the relation
ab^2 = ba has a canonical normal form a^N b^M, and multiplication

    (N1, M1) * (N2, M2) = (N1 + N2, M1 * 2^N2 + M2)

since every b pushed past an a doubles.  The exponent M is kept as a
Python int because it grows exponentially in word length.

The grid monoid is plain (N^2, +) with componentwise order; it drives the
2-coloured grid specialization through the same interface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import NotAPrefix, WordSyntaxError


class Letter(Enum):
    """Generator / edge colour.  A is the red colour, B the blue one."""

    A = "a"
    B = "b"

    def __lt__(self, other):
        return self.value < other.value


@dataclass(frozen=True, eq=False)
class BsWord:
    """Canonical element a^N b^M of the positive Baumslag-Solitar monoid."""

    n_a: int
    m_b: int

    def __post_init__(self):
        if self.n_a < 0 or self.m_b < 0:
            raise WordSyntaxError("exponents must be non-negative")
        # Words are dict keys throughout; precompute the hash.
        object.__setattr__(self, "_hash", hash((self.n_a, self.m_b)))

    def __eq__(self, other):
        return (
            isinstance(other, BsWord)
            and self.n_a == other.n_a
            and self.m_b == other.m_b
        )

    def __hash__(self):
        return self._hash

    @property
    def pair(self) -> tuple[int, int]:
        return (self.n_a, self.m_b)

    def __str__(self) -> str:
        return format_letters(BS.shortest_letters(self))


@dataclass(frozen=True, eq=False)
class GridDegree:
    """Point of N^2; addition and the componentwise order make it a monoid."""

    m1: int
    m2: int

    def __post_init__(self):
        if self.m1 < 0 or self.m2 < 0:
            raise WordSyntaxError("coordinates must be non-negative")
        object.__setattr__(self, "_hash", hash((self.m1, self.m2)))

    def __eq__(self, other):
        return (
            isinstance(other, GridDegree)
            and self.m1 == other.m1
            and self.m2 == other.m2
        )

    def __hash__(self):
        return self._hash

    @property
    def pair(self) -> tuple[int, int]:
        return (self.m1, self.m2)

    def __str__(self) -> str:
        return f"({self.m1},{self.m2})"


def format_letters(letters) -> str:
    return "".join(l.value for l in letters) or "e"


_WORD_TOKEN = re.compile(r"([ab])(?:\s*\^?\s*(-?\d+))?")


class BsMonoid:
    """Operations of the BS(2,1)+ degree monoid."""

    name = "bs"
    identity = BsWord(0, 0)
    # Degree of one square: the common value of ab^2 and ba.
    square_degree = BsWord(1, 2)
    red_first_word = (Letter.A, Letter.B, Letter.B)
    blue_first_word = (Letter.B, Letter.A)

    @staticmethod
    def mul(w1: BsWord, w2: BsWord) -> BsWord:
        return BsWord(w1.n_a + w2.n_a, (w1.m_b << w2.n_a) + w2.m_b)

    @staticmethod
    def step(w: BsWord, letter: Letter) -> BsWord:
        if letter is Letter.A:
            return BsWord(w.n_a + 1, w.m_b << 1)
        return BsWord(w.n_a, w.m_b + 1)

    @staticmethod
    def is_prefix(w1: BsWord, w: BsWord) -> bool:
        return w1.n_a <= w.n_a and (w1.m_b << (w.n_a - w1.n_a)) <= w.m_b

    @staticmethod
    def quotient(w1: BsWord, w: BsWord) -> BsWord:
        """The unique w'' with w1 * w'' = w."""
        if not BsMonoid.is_prefix(w1, w):
            raise NotAPrefix(f"{w1} is not a prefix of {w}")
        shift = w.n_a - w1.n_a
        return BsWord(shift, w.m_b - (w1.m_b << shift))

    @staticmethod
    def left_factor(w: BsWord, suffix: BsWord) -> BsWord | None:
        """The m with m * suffix = w, or None if no such element exists."""
        n = w.n_a - suffix.n_a
        if n < 0:
            return None
        rest = w.m_b - suffix.m_b
        if rest < 0 or rest % (1 << suffix.n_a):
            return None
        return BsWord(n, rest >> suffix.n_a)

    @staticmethod
    def prefix_count(w: BsWord) -> int:
        return sum((w.m_b >> (w.n_a - i)) + 1 for i in range(w.n_a + 1))

    @staticmethod
    def edge_count(w: BsWord) -> int:
        """Number of edges of the model graph of w.

        Row i (prefixes with i a's) holds cap_i + 1 vertices where
        cap_i = M >> (N - i); it carries cap_i blue edges, and every one
        of its vertices starts a red edge when i < N.
        """
        blue = sum(w.m_b >> (w.n_a - i) for i in range(w.n_a + 1))
        red = sum((w.m_b >> (w.n_a - i)) + 1 for i in range(w.n_a))
        return blue + red

    @staticmethod
    def prefixes(w: BsWord) -> list[BsWord]:
        out = []
        for i in range(w.n_a + 1):
            cap = w.m_b >> (w.n_a - i)
            out.extend(BsWord(i, j) for j in range(cap + 1))
        return out

    @staticmethod
    def shortest_letters(w: BsWord) -> tuple[Letter, ...]:
        """The geodesic word for w, peeled letter by letter from the right."""
        n, m = w.n_a, w.m_b
        rev = []
        while n or m:
            if m & 1:
                rev.append(Letter.B)
                m -= 1
            elif n:
                rev.append(Letter.A)
                n -= 1
                m >>= 1
            else:
                rev.append(Letter.B)
                m -= 1
        return tuple(reversed(rev))

    @staticmethod
    def longest_letters(w: BsWord) -> tuple[Letter, ...]:
        return (Letter.A,) * w.n_a + (Letter.B,) * w.m_b

    @staticmethod
    def sort_key(w: BsWord):
        return w.pair

    @staticmethod
    def format(w: BsWord) -> str:
        return str(w)

    @staticmethod
    def parse(text: str) -> BsWord:
        return parse_word(text)

    # Raw variants on (N, M) int pairs, for allocation-free inner loops.

    @staticmethod
    def raw(w: BsWord) -> tuple[int, int]:
        return w.pair

    @staticmethod
    def unraw(t: tuple[int, int]) -> BsWord:
        return BsWord(t[0], t[1])

    @staticmethod
    def raw_mul(t1, t2):
        return (t1[0] + t2[0], (t1[1] << t2[0]) + t2[1])

    @staticmethod
    def raw_step(t, letter: Letter):
        if letter is Letter.A:
            return (t[0] + 1, t[1] << 1)
        return (t[0], t[1] + 1)

    @staticmethod
    def raw_is_prefix(t1, t) -> bool:
        return t1[0] <= t[0] and (t1[1] << (t[0] - t1[0])) <= t[1]

    @staticmethod
    def raw_left_factor(t, suffix):
        n = t[0] - suffix[0]
        if n < 0:
            return None
        rest = t[1] - suffix[1]
        if rest < 0 or rest & ((1 << suffix[0]) - 1):
            return None
        return (n, rest >> suffix[0])


class GridMonoid:
    """Operations of the (N^2, +) degree monoid, mirroring BsMonoid."""

    name = "grid"
    identity = GridDegree(0, 0)
    square_degree = GridDegree(1, 1)
    red_first_word = (Letter.A, Letter.B)
    blue_first_word = (Letter.B, Letter.A)

    @staticmethod
    def mul(p: GridDegree, q: GridDegree) -> GridDegree:
        return GridDegree(p.m1 + q.m1, p.m2 + q.m2)

    @staticmethod
    def step(p: GridDegree, letter: Letter) -> GridDegree:
        if letter is Letter.A:
            return GridDegree(p.m1 + 1, p.m2)
        return GridDegree(p.m1, p.m2 + 1)

    @staticmethod
    def is_prefix(p: GridDegree, q: GridDegree) -> bool:
        return p.m1 <= q.m1 and p.m2 <= q.m2

    @staticmethod
    def quotient(p: GridDegree, q: GridDegree) -> GridDegree:
        if not GridMonoid.is_prefix(p, q):
            raise NotAPrefix(f"{p} is not <= {q}")
        return GridDegree(q.m1 - p.m1, q.m2 - p.m2)

    @staticmethod
    def left_factor(q: GridDegree, suffix: GridDegree) -> GridDegree | None:
        m1, m2 = q.m1 - suffix.m1, q.m2 - suffix.m2
        if m1 < 0 or m2 < 0:
            return None
        return GridDegree(m1, m2)

    @staticmethod
    def prefix_count(p: GridDegree) -> int:
        return (p.m1 + 1) * (p.m2 + 1)

    @staticmethod
    def edge_count(p: GridDegree) -> int:
        return p.m1 * (p.m2 + 1) + p.m2 * (p.m1 + 1)

    @staticmethod
    def prefixes(p: GridDegree) -> list[GridDegree]:
        return [
            GridDegree(i, j)
            for i in range(p.m1 + 1)
            for j in range(p.m2 + 1)
        ]

    @staticmethod
    def shortest_letters(p: GridDegree) -> tuple[Letter, ...]:
        return (Letter.A,) * p.m1 + (Letter.B,) * p.m2

    longest_letters = shortest_letters

    @staticmethod
    def sort_key(p: GridDegree):
        return p.pair

    @staticmethod
    def format(p: GridDegree) -> str:
        return str(p)

    @staticmethod
    def parse(text: str) -> GridDegree:
        return parse_grid_degree(text)

    @staticmethod
    def raw(p: GridDegree) -> tuple[int, int]:
        return p.pair

    @staticmethod
    def unraw(t: tuple[int, int]) -> GridDegree:
        return GridDegree(t[0], t[1])

    @staticmethod
    def raw_mul(t1, t2):
        return (t1[0] + t2[0], t1[1] + t2[1])

    @staticmethod
    def raw_step(t, letter: Letter):
        if letter is Letter.A:
            return (t[0] + 1, t[1])
        return (t[0], t[1] + 1)

    @staticmethod
    def raw_is_prefix(t1, t) -> bool:
        return t1[0] <= t[0] and t1[1] <= t[1]

    @staticmethod
    def raw_left_factor(t, suffix):
        m1, m2 = t[0] - suffix[0], t[1] - suffix[1]
        if m1 < 0 or m2 < 0:
            return None
        return (m1, m2)


BS = BsMonoid()
GRID = GridMonoid()


def mul(w1: BsWord, w2: BsWord) -> BsWord:
    return BS.mul(w1, w2)


def is_prefix(w1: BsWord, w: BsWord) -> bool:
    return BS.is_prefix(w1, w)


def left_quotient(w1: BsWord, w: BsWord) -> BsWord:
    return BS.quotient(w1, w)


def prefixes(w: BsWord) -> set[BsWord]:
    return set(BS.prefixes(w))


def fold_letters(letters) -> BsWord:
    w = BS.identity
    for l in letters:
        w = BS.step(w, l)
    return w


def parse_letters(text: str) -> tuple[Letter, ...]:
    """Expand word text into its letter sequence.

    Accepts raw letter strings ("bbaa"), caret exponents ("a^2 b^8") and
    the compact dotted form ("a2.b8").  "e" denotes the identity.
    """
    cleaned = text.replace(".", " ").strip()
    if cleaned in ("", "e"):
        return ()
    letters: list[Letter] = []
    pos = 0
    while pos < len(cleaned):
        if cleaned[pos].isspace():
            pos += 1
            continue
        m = _WORD_TOKEN.match(cleaned, pos)
        if not m:
            raise WordSyntaxError(f"bad character {cleaned[pos]!r} in word {text!r}")
        letter = Letter(m.group(1))
        count = 1
        if m.group(2) is not None:
            count = int(m.group(2))
            if count < 0:
                raise WordSyntaxError(f"negative exponent in word {text!r}")
        letters.extend([letter] * count)
        pos = m.end()
    return tuple(letters)


def parse_word(text: str) -> BsWord:
    return fold_letters(parse_letters(text))


def shortest_form(w: BsWord) -> str:
    return format_letters(BS.shortest_letters(w))


def longest_form(w: BsWord) -> str:
    return format_letters(BS.longest_letters(w))


def parse_grid_degree(text: str) -> GridDegree:
    """Parse "(m1,m2)" / "m1,m2", or letter syntax counting a's and b's."""
    cleaned = text.strip().strip("()")
    if "," in cleaned:
        parts = cleaned.split(",")
        if len(parts) != 2:
            raise WordSyntaxError(f"bad grid degree {text!r}")
        try:
            m1, m2 = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise WordSyntaxError(f"bad grid degree {text!r}") from exc
        return GridDegree(m1, m2)
    letters = parse_letters(cleaned)
    return GridDegree(
        sum(1 for l in letters if l is Letter.A),
        sum(1 for l in letters if l is Letter.B),
    )


def grid_add(p: GridDegree, q: GridDegree) -> GridDegree:
    return GRID.mul(p, q)


def grid_le(p: GridDegree, q: GridDegree) -> bool:
    return GRID.is_prefix(p, q)
