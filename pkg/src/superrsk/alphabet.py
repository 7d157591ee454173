"""Letters, alphabets and shuffle orders on the mixed alphabet {t1..tk, u1..ul}.

A shuffle is a total order on all k+l letters that restricts to the two chains
t1 < ... < tk and u1 < ... < ul; there are C(k+l, k) of them.  Everything here
is immutable and hashable so the verification harness can enumerate, cache and
compare shuffles freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations

__all__ = [
    "Letter",
    "Alphabet",
    "Shuffle",
    "Ordering",
    "t",
    "u",
    "parse_letter",
    "all_shuffles",
    "kl_shuffle",
    "adjacent_transposition",
    "adjacency_chain",
    "order_adjacent_pairs",
    "parse_shuffle",
    "format_shuffle",
    "shuffle_to_json",
    "shuffle_from_json",
]

_LETTER_RE = re.compile(r"([tu])([1-9][0-9]*)")


@dataclass(frozen=True)
class Letter:
    """A single symbol: kind "t" or "u" plus a 1-based index."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("t", "u"):
            raise ValueError(f"letter kind must be 't' or 'u', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"letter index must be positive, got {self.index}")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.name


def t(index: int) -> Letter:
    """Shorthand for the letter t_index."""
    return Letter("t", index)


def u(index: int) -> Letter:
    """Shorthand for the letter u_index."""
    return Letter("u", index)


def parse_letter(text: str) -> Letter:
    m = _LETTER_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"cannot parse letter {text!r} (expected e.g. 't1' or 'u2')")
    return Letter(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class Alphabet:
    """The mixed alphabet of k letters t1..tk and l letters u1..ul."""

    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.l < 0:
            raise ValueError("alphabet sizes must be non-negative")
        if self.k + self.l == 0:
            raise ValueError("alphabet must contain at least one letter")

    @property
    def size(self) -> int:
        return self.k + self.l

    def letters(self) -> tuple[Letter, ...]:
        """All letters, t's first by index, then u's by index."""
        return tuple(t(i) for i in range(1, self.k + 1)) + tuple(
            u(j) for j in range(1, self.l + 1)
        )

    def __contains__(self, letter: Letter) -> bool:
        bound = self.k if letter.kind == "t" else self.l
        return 1 <= letter.index <= bound

    def __str__(self) -> str:
        return f"(k={self.k}, l={self.l})"


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Shuffle:
    """A total order on an alphabet's letters, smallest first.

    The order must contain every letter exactly once and keep both the t-chain
    and the u-chain increasing.
    """

    alphabet: Alphabet
    order: tuple[Letter, ...]

    def __post_init__(self) -> None:
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        expected = self.alphabet.letters()
        if len(order) != len(expected) or set(order) != set(expected):
            raise ValueError(
                f"shuffle over {self.alphabet} must contain each letter exactly once"
            )
        for kind in ("t", "u"):
            indices = [x.index for x in order if x.kind == kind]
            if indices != sorted(indices):
                raise ValueError(f"{kind}-chain out of order in {_format(order)}")

    @cached_property
    def _ranks(self) -> dict[Letter, int]:
        return {letter: r for r, letter in enumerate(self.order)}

    def rank(self, letter: Letter) -> int:
        try:
            return self._ranks[letter]
        except KeyError:
            raise ValueError(f"letter {letter} is not in alphabet {self.alphabet}") from None

    def compare(self, a: Letter, b: Letter) -> Ordering:
        ra, rb = self.rank(a), self.rank(b)
        if ra < rb:
            return Ordering.LESS
        if ra > rb:
            return Ordering.GREATER
        return Ordering.EQUAL

    def less(self, a: Letter, b: Letter) -> bool:
        return self.rank(a) < self.rank(b)

    def leq(self, a: Letter, b: Letter) -> bool:
        return self.rank(a) <= self.rank(b)

    def __str__(self) -> str:
        return _format(self.order)


def _format(order: tuple[Letter, ...]) -> str:
    return "<".join(letter.name for letter in order)


def all_shuffles(alphabet: Alphabet) -> list[Shuffle]:
    """Every shuffle of the alphabet, ordered lexicographically by t/u pattern.

    The t-before-u pattern at the chosen positions determines the shuffle, so
    there are exactly C(k+l, k) results.
    """
    k, size = alphabet.k, alphabet.size
    shuffles = []
    for t_positions in combinations(range(size), k):
        spots = set(t_positions)
        order: list[Letter] = []
        next_t = next_u = 1
        for pos in range(size):
            if pos in spots:
                order.append(t(next_t))
                next_t += 1
            else:
                order.append(u(next_u))
                next_u += 1
        shuffles.append(Shuffle(alphabet, tuple(order)))
    return shuffles


def kl_shuffle(alphabet: Alphabet) -> Shuffle:
    """The order t1 < ... < tk < u1 < ... < ul."""
    return Shuffle(alphabet, alphabet.letters())


def adjacent_transposition(a: Shuffle, b: Shuffle) -> tuple[Letter, Letter] | None:
    """The unique (t_i, u_j) pair ordered oppositely in a and b, if there is one.

    Returns None when the shuffles are equal or differ on more than one mixed
    pair.  Symmetric in its arguments.
    """
    if a.alphabet != b.alphabet:
        raise ValueError("shuffles must share an alphabet")
    flipped = [
        (ti, uj)
        for ti in (t(i) for i in range(1, a.alphabet.k + 1))
        for uj in (u(j) for j in range(1, a.alphabet.l + 1))
        if a.less(ti, uj) != b.less(ti, uj)
    ]
    if len(flipped) == 1:
        return flipped[0]
    return None


def adjacency_chain(a: Shuffle, b: Shuffle) -> list[Shuffle]:
    """A minimal chain a = A0, A1, ..., An = b with consecutive entries adjacent.

    Its length is one more than the number of mixed pairs ordered oppositely in
    a and b; each link swaps one neighbouring (t, u) pair.
    """
    if a.alphabet != b.alphabet:
        raise ValueError("shuffles must share an alphabet")
    chain = [a]
    current = a
    while current != b:
        order = current.order
        for i in range(len(order) - 1):
            x, y = order[i], order[i + 1]
            if x.kind != y.kind and b.less(y, x):
                current = Shuffle(a.alphabet, order[:i] + (y, x) + order[i + 2 :])
                chain.append(current)
                break
        else:  # pragma: no cover - impossible for valid shuffles
            raise RuntimeError("no adjacent swap found")
    return chain


def order_adjacent_pairs(s: Shuffle) -> list[tuple[Letter, Letter]]:
    """All (t_i, u_j) pairs occupying consecutive ranks of s, t-letter first."""
    pairs = []
    for x, y in zip(s.order, s.order[1:]):
        if x.kind != y.kind:
            pairs.append((x, y) if x.kind == "t" else (y, x))
    return pairs


def parse_shuffle(text: str, alphabet: Alphabet) -> Shuffle:
    """Parse a chain like "t1<u1<t2<u2"; the Shuffle constructor validates it."""
    tokens = [tok.strip() for tok in text.split("<")]
    if tokens == [""]:
        raise ValueError("empty shuffle text")
    letters = []
    for tok in tokens:
        letter = parse_letter(tok)
        if letter not in alphabet:
            raise ValueError(f"letter {letter} outside alphabet {alphabet}")
        letters.append(letter)
    return Shuffle(alphabet, tuple(letters))


def format_shuffle(s: Shuffle) -> str:
    return str(s)


def shuffle_to_json(s: Shuffle) -> list[str]:
    return [letter.name for letter in s.order]


def shuffle_from_json(data: list[str], alphabet: Alphabet) -> Shuffle:
    return parse_shuffle("<".join(data), alphabet)
