"""Tableau enumeration, hook Schur polynomials, and counting identities."""

from __future__ import annotations

from math import factorial

from .alphabet import Alphabet, Shuffle
from .insertion import REGULAR_REGULAR, Variant, variant_profile
from .polynomial import Monomial, Polynomial
from .tableau import (
    RecordingTableau,
    Shape,
    Tableau,
    check_shape,
    weight_monomial,
)

__all__ = [
    "partitions",
    "enumerate_ssyt",
    "enumerate_syt",
    "count_syt",
    "hook_schur",
    "rsk_counting_identity",
]


def partitions(n: int) -> list[Shape]:
    """All partitions of n in reverse lexicographic order; n=0 gives the empty shape."""
    if n < 0:
        raise ValueError("n must be non-negative")
    result: list[Shape] = []

    def extend(prefix: tuple[int, ...], remaining: int, cap: int) -> None:
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(prefix + (part,), remaining - part, part)

    extend((), n, n)
    return result


def enumerate_ssyt(
    shape: Shape, alphabet: Alphabet, shuffle: Shuffle, variant: Variant
) -> list[Tableau]:
    """All fillings of the shape that are valid for (shuffle, variant).

    Backtracking fill in row-major order, candidates tried in shuffle order,
    so the output order is deterministic.  Shapes the alphabet cannot fill
    yield an empty list.
    """
    shape = check_shape(shape)
    if not shape:
        return [Tableau()]
    profile = variant_profile(variant)
    strict_row = {"t": profile.t_strict_in == "rows", "u": profile.u_strict_in == "rows"}
    strict_col = {"t": profile.t_strict_in == "columns", "u": profile.u_strict_in == "columns"}
    letters = shuffle.order
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid: list[list] = [[None] * length for length in shape]
    found: list[Tableau] = []

    def admissible(r: int, c: int, letter) -> bool:
        if c > 0:
            left = grid[r][c - 1]
            if shuffle.less(letter, left):
                return False
            if left == letter and strict_row[letter.kind]:
                return False
        if r > 0:
            above = grid[r - 1][c]
            if shuffle.less(letter, above):
                return False
            if above == letter and strict_col[letter.kind]:
                return False
        return True

    def fill(i: int) -> None:
        if i == len(cells):
            found.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        r, c = cells[i]
        for letter in letters:
            if admissible(r, c, letter):
                grid[r][c] = letter
                fill(i + 1)
                grid[r][c] = None

    fill(0)
    return found


def enumerate_syt(shape: Shape) -> list[RecordingTableau]:
    """All standard fillings of the shape, by placing 1..n at frontier cells."""
    shape = check_shape(shape)
    if not shape:
        return [RecordingTableau()]
    n = sum(shape)
    grid: list[list[int]] = [[0] * length for length in shape]
    found: list[RecordingTableau] = []

    def place(value: int) -> None:
        if value > n:
            found.append(RecordingTableau(tuple(tuple(row) for row in grid)))
            return
        for r, length in enumerate(shape):
            for c in range(length):
                if grid[r][c]:
                    continue
                if c > 0 and not grid[r][c - 1]:
                    break
                if r > 0 and not grid[r - 1][c]:
                    break
                grid[r][c] = value
                place(value + 1)
                grid[r][c] = 0
                break

    place(1)
    return found


def count_syt(shape: Shape) -> int:
    """Number of standard fillings, by the hook length product formula."""
    shape = check_shape(shape)
    n = sum(shape)
    if n == 0:
        return 1
    conjugate = [sum(1 for length in shape if length > c) for c in range(shape[0])]
    hooks = 1
    for r, length in enumerate(shape):
        for c in range(length):
            hooks *= (length - c) + (conjugate[c] - r) - 1
    return factorial(n) // hooks


def hook_schur(shape: Shape, alphabet: Alphabet, shuffle: Shuffle) -> Polynomial:
    """Weight generating polynomial of the shape's valid fillings.

    Uses the regular-regular tableau class; the result does not depend on the
    shuffle (the verification harness checks this exhaustively).
    """
    terms: dict[Monomial, int] = {}
    for tab in enumerate_ssyt(shape, alphabet, shuffle, REGULAR_REGULAR):
        mono = weight_monomial(tab, alphabet)
        terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(terms)


def rsk_counting_identity(
    alphabet: Alphabet, n: int, shuffle: Shuffle, variant: Variant
) -> dict:
    """Compare sum over shapes of (#fillings x #standard fillings) to (k+l)^n.

    Insertion pairs each length-n word with a (tableau, standard tableau)
    pair of equal shape, so the two counts must agree.
    """
    lhs = 0
    for shape in partitions(n):
        fillings = len(enumerate_ssyt(shape, alphabet, shuffle, variant))
        if fillings:
            lhs += fillings * count_syt(shape)
    rhs = alphabet.size**n
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}
