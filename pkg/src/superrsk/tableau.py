"""Young-diagram shapes, letter tableaux, recording tableaux, regions, weights.

Cells are 1-based (row, column) pairs.  A tableau's rows are stored densely;
row lengths must be weakly decreasing, so the occupied cells of every column
form a prefix of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .alphabet import Alphabet, Letter, Shuffle, parse_letter
from .polynomial import Monomial

__all__ = [
    "Cell",
    "Shape",
    "Tableau",
    "RecordingTableau",
    "StrictnessProfile",
    "TypeVector",
    "RegionMap",
    "Component",
    "check_shape",
    "is_valid",
    "is_standard",
    "content_type",
    "word_type",
    "weight_monomial",
    "classify_regions",
    "region2_components",
    "region2_shape_ok",
    "is_subtableau",
    "tableau_to_json",
    "tableau_from_json",
    "recording_to_json",
    "recording_from_json",
    "render_tableau",
    "render_recording",
]

Cell = tuple[int, int]
Shape = tuple[int, ...]
RegionMap = dict[Cell, int]
Component = frozenset[Cell]


def check_shape(rows: Iterable[int]) -> Shape:
    """Validate a partition: positive parts, weakly decreasing."""
    shape = tuple(int(r) for r in rows)
    if any(r < 1 for r in shape):
        raise ValueError(f"shape parts must be positive: {shape}")
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"shape parts must be weakly decreasing: {shape}")
    return shape


def _check_diagram(rows: tuple[tuple, ...]) -> None:
    lengths = [len(row) for row in rows]
    if any(length == 0 for length in lengths):
        raise ValueError("tableau rows must be non-empty")
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        raise ValueError(f"row lengths must be weakly decreasing: {lengths}")


@dataclass(frozen=True)
class Tableau:
    """A letter-filled Young diagram."""

    rows: tuple[tuple[Letter, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_diagram(rows)

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, row: int, col: int) -> Letter | None:
        """Entry at 1-based (row, col), or None outside the diagram."""
        if row < 1 or col < 1 or row > len(self.rows) or col > len(self.rows[row - 1]):
            return None
        return self.rows[row - 1][col - 1]

    def cells(self) -> Iterator[Cell]:
        for r, row in enumerate(self.rows, 1):
            for c in range(1, len(row) + 1):
                yield (r, c)

    def items(self) -> Iterator[tuple[Cell, Letter]]:
        for r, row in enumerate(self.rows, 1):
            for c, letter in enumerate(row, 1):
                yield (r, c), letter


@dataclass(frozen=True)
class RecordingTableau:
    """An integer-filled Young diagram recording cell creation order."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(e) for e in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_diagram(rows)
        if any(e < 1 for row in rows for e in row):
            raise ValueError("recording entries must be positive")

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, row: int, col: int) -> int | None:
        if row < 1 or col < 1 or row > len(self.rows) or col > len(self.rows[row - 1]):
            return None
        return self.rows[row - 1][col - 1]


@dataclass(frozen=True)
class StrictnessProfile:
    """Which axis each letter kind must strictly increase along."""

    t_strict_in: str  # "rows" or "columns"
    u_strict_in: str

    def __post_init__(self) -> None:
        for axis in (self.t_strict_in, self.u_strict_in):
            if axis not in ("rows", "columns"):
                raise ValueError(f"strictness axis must be 'rows' or 'columns': {axis!r}")


@dataclass(frozen=True)
class TypeVector:
    """Occurrence counts (alpha_1..alpha_k; beta_1..beta_l) of each letter."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.alpha) + sum(self.beta)


def is_valid(tab: Tableau, shuffle: Shuffle, profile: StrictnessProfile) -> bool:
    """Weakly increasing rows and columns, with per-kind strictness.

    Equal entries are always the same letter, so the full-axis strictness of
    the t's (resp. u's) reduces to forbidding equal neighbours of that kind
    along the strict axis.
    """
    strict_row = {"t": profile.t_strict_in == "rows", "u": profile.u_strict_in == "rows"}
    strict_col = {
        "t": profile.t_strict_in == "columns",
        "u": profile.u_strict_in == "columns",
    }
    for (r, c), e in tab.items():
        left = tab.entry(r, c - 1)
        if left is not None:
            if shuffle.less(e, left):
                return False
            if left == e and strict_row[e.kind]:
                return False
        above = tab.entry(r - 1, c)
        if above is not None:
            if shuffle.less(e, above):
                return False
            if above == e and strict_col[e.kind]:
                return False
    return True


def is_standard(rec: RecordingTableau) -> bool:
    """Entries are exactly 1..n, rows increase left-to-right, columns top-down."""
    entries = [e for row in rec.rows for e in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for row in rec.rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rec.rows, rec.rows[1:]):
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def _count_letters(letters: Iterable[Letter], alphabet: Alphabet) -> TypeVector:
    alpha = [0] * alphabet.k
    beta = [0] * alphabet.l
    for letter in letters:
        if letter not in alphabet:
            raise ValueError(f"letter {letter} outside alphabet {alphabet}")
        if letter.kind == "t":
            alpha[letter.index - 1] += 1
        else:
            beta[letter.index - 1] += 1
    return TypeVector(tuple(alpha), tuple(beta))


def content_type(tab: Tableau, alphabet: Alphabet) -> TypeVector:
    return _count_letters((e for _, e in tab.items()), alphabet)


def word_type(letters: Iterable[Letter], alphabet: Alphabet) -> TypeVector:
    return _count_letters(letters, alphabet)


def weight_monomial(tab: Tableau, alphabet: Alphabet) -> Monomial:
    """x-exponents count the t's, y-exponents count the u's."""
    tv = content_type(tab, alphabet)
    return Monomial(tv.alpha, tv.beta)


def _check_pair(pair: tuple[Letter, Letter]) -> tuple[Letter, Letter]:
    ti, uj = pair
    if ti.kind != "t" or uj.kind != "u":
        raise ValueError(f"pair must be (t_i, u_j), got ({ti}, {uj})")
    return ti, uj


def classify_regions(
    tab: Tableau, shuffle: Shuffle, pair: tuple[Letter, Letter]
) -> RegionMap:
    """Label each cell 1 (entry below both pair letters), 2 (a pair letter), 3 (above).

    The pair must occupy consecutive ranks of the shuffle, so "below both" and
    "above both" exhaust the other letters.
    """
    ti, uj = _check_pair(pair)
    rt, ru = shuffle.rank(ti), shuffle.rank(uj)
    if abs(rt - ru) != 1:
        raise ValueError(f"{ti} and {uj} are not order-adjacent in {shuffle}")
    lo = min(rt, ru)
    regions: RegionMap = {}
    for cell, e in tab.items():
        if e == ti or e == uj:
            regions[cell] = 2
        elif shuffle.rank(e) < lo:
            regions[cell] = 1
        else:
            regions[cell] = 3
    return regions


def region2_components(regions: RegionMap) -> frozenset[Component]:
    """Maximal side-connected components of the label-2 cells."""
    cells = {cell for cell, label in regions.items() if label == 2}
    components = set()
    seen: set[Cell] = set()
    for start in sorted(cells):
        if start in seen:
            continue
        comp: set[Cell] = set()
        stack = [start]
        while stack:
            r, c = stack.pop()
            if (r, c) in comp:
                continue
            comp.add((r, c))
            for nbr in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nbr in cells and nbr not in comp:
                    stack.append(nbr)
        seen |= comp
        components.add(frozenset(comp))
    return frozenset(components)


def region2_shape_ok(tab: Tableau, shuffle: Shuffle, pair: tuple[Letter, Letter]) -> bool:
    """Row/column profile of the pair region.

    When t_i comes first in the shuffle: in each region-2 row everything but
    possibly the rightmost cell holds t_i, and in each region-2 column
    everything but possibly the topmost holds u_j.  When u_j comes first the
    picture is mirrored (u_j leftmost in rows, t_i bottommost in columns).
    """
    ti, uj = _check_pair(pair)
    regions = classify_regions(tab, shuffle, pair)
    by_row: dict[int, list[tuple[int, Letter]]] = {}
    by_col: dict[int, list[tuple[int, Letter]]] = {}
    for (r, c), label in regions.items():
        if label != 2:
            continue
        by_row.setdefault(r, []).append((c, tab.entry(r, c)))
        by_col.setdefault(c, []).append((r, tab.entry(r, c)))
    t_first = shuffle.less(ti, uj)
    for cells in by_row.values():
        cells.sort()
        body = cells[:-1] if t_first else cells[1:]
        if any(e != ti for _, e in body):
            return False
    for cells in by_col.values():
        cells.sort()
        body = cells[1:] if t_first else cells[:-1]
        if any(e != uj for _, e in body):
            return False
    return True


def is_subtableau(small: Tableau, big: Tableau) -> bool:
    """True when small's diagram fits inside big's and entries agree there."""
    if len(small.rows) > len(big.rows):
        return False
    for r, row in enumerate(small.rows):
        if len(row) > len(big.rows[r]):
            return False
        if row != big.rows[r][: len(row)]:
            return False
    return True


def tableau_to_json(tab: Tableau) -> dict:
    return {"rows": [[letter.name for letter in row] for row in tab.rows]}


def tableau_from_json(data: dict) -> Tableau:
    return Tableau(tuple(tuple(parse_letter(x) for x in row) for row in data["rows"]))


def recording_to_json(rec: RecordingTableau) -> dict:
    return {"rows": [list(row) for row in rec.rows]}


def recording_from_json(data: dict) -> RecordingTableau:
    return RecordingTableau(tuple(tuple(row) for row in data["rows"]))


def render_tableau(tab: Tableau) -> str:
    return "\n".join(" ".join(letter.name for letter in row) for row in tab.rows)


def render_recording(rec: RecordingTableau) -> str:
    return "\n".join(" ".join(str(e) for e in row) for row in rec.rows)
