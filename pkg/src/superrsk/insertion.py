"""The four shuffle-parameterized insertion algorithms with step-level traces.

A t-letter always travels through rows and a u-letter through columns: a fresh
t enters row 1, a fresh u enters column 1, a bumped t re-enters the row below
the cell it left, and a bumped u re-enters the column to the right of the cell
it left.  The bump condition is chosen per kind: the regular rule displaces
the first entry strictly greater than the incomer, the dual rule the first
entry greater than or equal to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .alphabet import Alphabet, Letter, Shuffle, parse_letter
from .tableau import (
    Cell,
    RecordingTableau,
    StrictnessProfile,
    Tableau,
    is_valid,
    tableau_to_json,
)

__all__ = [
    "Word",
    "Variant",
    "PendingAction",
    "Step",
    "InsertionTrace",
    "InsertionResult",
    "REGULAR_REGULAR",
    "REGULAR_DUAL",
    "DUAL_REGULAR",
    "DUAL_DUAL",
    "VARIANTS",
    "parse_word",
    "parse_variant",
    "all_words",
    "variant_profile",
    "insert_letter",
    "insert_word",
    "trace_to_json",
]


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters v1..vn."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> Letter:
        return self.letters[i]

    def __str__(self) -> str:
        return ",".join(letter.name for letter in self.letters)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse a comma-separated word like "u2,t1,t2,u1"; whitespace is ignored."""
    text = text.strip()
    if not text:
        return Word()
    letters = []
    for token in text.split(","):
        letter = parse_letter(token)
        if letter not in alphabet:
            raise ValueError(f"letter {letter} outside alphabet {alphabet}")
        letters.append(letter)
    return Word(tuple(letters))


def all_words(alphabet: Alphabet, n: int) -> Iterator[Word]:
    """All (k+l)^n words of length n, in product order over the alphabet."""
    for combo in product(alphabet.letters(), repeat=n):
        yield Word(combo)


_RULES = ("regular", "dual")


@dataclass(frozen=True)
class Variant:
    """Bump-rule choice per letter kind."""

    t_rule: str
    u_rule: str

    def __post_init__(self) -> None:
        if self.t_rule not in _RULES or self.u_rule not in _RULES:
            raise ValueError("rules must be 'regular' or 'dual'")

    @property
    def name(self) -> str:
        short = {"regular": "reg", "dual": "dual"}
        return f"{short[self.t_rule]}-{short[self.u_rule]}"


REGULAR_REGULAR = Variant("regular", "regular")
REGULAR_DUAL = Variant("regular", "dual")
DUAL_REGULAR = Variant("dual", "regular")
DUAL_DUAL = Variant("dual", "dual")
VARIANTS = (REGULAR_REGULAR, REGULAR_DUAL, DUAL_REGULAR, DUAL_DUAL)


def parse_variant(name: str) -> Variant:
    for variant in VARIANTS:
        if variant.name == name:
            return variant
    raise ValueError(f"unknown variant {name!r} (expected one of "
                     f"{', '.join(v.name for v in VARIANTS)})")


def variant_profile(variant: Variant) -> StrictnessProfile:
    """Strictness axes of the tableau class each variant produces.

    A regular t-rule keeps t's weakly increasing in rows and strict in
    columns; the dual t-rule flips that.  Dually for the u-rule with the roles
    of rows and columns exchanged.
    """
    t_axis = "columns" if variant.t_rule == "regular" else "rows"
    u_axis = "rows" if variant.u_rule == "regular" else "columns"
    return StrictnessProfile(t_strict_in=t_axis, u_strict_in=u_axis)


@dataclass(frozen=True)
class PendingAction:
    """An element waiting to be inserted into a specific row or column."""

    element: Letter
    axis: str  # "row" or "column"
    index: int

    def __post_init__(self) -> None:
        if self.axis not in ("row", "column"):
            raise ValueError(f"axis must be 'row' or 'column': {self.axis!r}")
        if self.index < 1:
            raise ValueError("target index must be positive")


@dataclass(frozen=True)
class Step:
    """One settle-or-bump placement.

    ``state`` is the tableau right after the placement; a displaced occupant
    is carried in ``bumped`` and is absent from the state until its own step.
    """

    index: int
    state: Tableau
    settled_cell: Cell
    bumped: PendingAction | None
    letter_ordinal: int


@dataclass(frozen=True)
class InsertionTrace:
    steps: tuple[Step, ...]
    path_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(self.path_lengths) != len(self.steps):
            raise ValueError("path lengths must sum to the step count")

    @property
    def total(self) -> int:
        return len(self.steps)

    def state_after(self, r: int) -> Tableau:
        """The tableau immediately after step r (1-based)."""
        if not 1 <= r <= len(self.steps):
            raise IndexError(f"step index {r} out of range 1..{len(self.steps)}")
        return self.steps[r - 1].state


@dataclass(frozen=True)
class InsertionResult:
    p: Tableau
    q: RecordingTableau
    trace: InsertionTrace


def _entry_action(x: Letter) -> PendingAction:
    if x.kind == "t":
        return PendingAction(x, "row", 1)
    return PendingAction(x, "column", 1)


def _continuation(bumped: Letter, cell: Cell) -> PendingAction:
    r, c = cell
    if bumped.kind == "t":
        return PendingAction(bumped, "row", r + 1)
    return PendingAction(bumped, "column", c + 1)


def _bump_index(entries: list[Letter], elem: Letter, shuffle: Shuffle, dual: bool) -> int | None:
    """First position whose entry exceeds elem (or equals it, under the dual rule)."""
    threshold = shuffle.rank(elem) + (0 if dual else 1)
    for i, y in enumerate(entries):
        if shuffle.rank(y) >= threshold:
            return i
    return None


def _snapshot(rows: list[list[Letter]]) -> Tableau:
    return Tableau(tuple(tuple(row) for row in rows))


def _run_letter(
    rows: list[list[Letter]],
    x: Letter,
    shuffle: Shuffle,
    variant: Variant,
    first_index: int,
    ordinal: int,
) -> list[Step]:
    """Insert one letter, mutating ``rows``; returns the elementary steps."""
    steps: list[Step] = []
    action = _entry_action(x)
    while True:
        elem, axis, target = action.element, action.axis, action.index
        if axis == "row":
            dual = variant.t_rule == "dual"
            if target == len(rows) + 1:
                rows.append([elem])
                settled, nxt = (target, 1), None
            else:
                row = rows[target - 1]
                pos = _bump_index(row, elem, shuffle, dual)
                if pos is None:
                    row.append(elem)
                    settled, nxt = (target, len(row)), None
                else:
                    bumped = row[pos]
                    row[pos] = elem
                    settled = (target, pos + 1)
                    nxt = _continuation(bumped, settled)
        else:
            dual = variant.u_rule == "dual"
            depth = 0
            while depth < len(rows) and len(rows[depth]) >= target:
                depth += 1
            column = [rows[i][target - 1] for i in range(depth)]
            pos = _bump_index(column, elem, shuffle, dual)
            if pos is None:
                if depth == len(rows):
                    rows.append([])
                # the receiving row must end exactly one cell short of the column
                assert len(rows[depth]) == target - 1
                rows[depth].append(elem)
                settled, nxt = (depth + 1, target), None
            else:
                bumped = rows[pos][target - 1]
                rows[pos][target - 1] = elem
                settled = (pos + 1, target)
                nxt = _continuation(bumped, settled)
        steps.append(Step(first_index + len(steps), _snapshot(rows), settled, nxt, ordinal))
        if nxt is None:
            return steps
        action = nxt


def insert_letter(
    p: Tableau, x: Letter, shuffle: Shuffle, variant: Variant
) -> tuple[Tableau, tuple[Step, ...]]:
    """Insert a single letter into a valid tableau; returns the result and steps."""
    if x not in shuffle.alphabet:
        raise ValueError(f"letter {x} outside alphabet {shuffle.alphabet}")
    if not is_valid(p, shuffle, variant_profile(variant)):
        raise ValueError("tableau is not valid for this shuffle and variant")
    rows = [list(row) for row in p.rows]
    steps = _run_letter(rows, x, shuffle, variant, 1, 1)
    return steps[-1].state, tuple(steps)


def insert_word(v: Word, shuffle: Shuffle, variant: Variant) -> InsertionResult:
    """Insert a word letter by letter, recording where each new cell appears."""
    for letter in v:
        if letter not in shuffle.alphabet:
            raise ValueError(f"letter {letter} outside alphabet {shuffle.alphabet}")
    rows: list[list[Letter]] = []
    qrows: list[list[int]] = []
    steps: list[Step] = []
    lengths: list[int] = []
    for m, letter in enumerate(v, 1):
        letter_steps = _run_letter(rows, letter, shuffle, variant, len(steps) + 1, m)
        steps.extend(letter_steps)
        lengths.append(len(letter_steps))
        r, c = letter_steps[-1].settled_cell
        if r == len(qrows) + 1:
            qrows.append([])
        assert len(qrows[r - 1]) == c - 1
        qrows[r - 1].append(m)
    return InsertionResult(
        p=_snapshot(rows),
        q=RecordingTableau(tuple(tuple(row) for row in qrows)),
        trace=InsertionTrace(tuple(steps), tuple(lengths)),
    )


def _pending_to_json(action: PendingAction) -> dict:
    return {"letter": action.element.name, action.axis: action.index}


def trace_to_json(trace: InsertionTrace) -> list[dict]:
    records = []
    for step in trace.steps:
        record = {
            "index": step.index,
            "letter_ordinal": step.letter_ordinal,
            "settled_cell": list(step.settled_cell),
            "bumped": None if step.bumped is None else _pending_to_json(step.bumped),
            "state": tableau_to_json(step.state),
        }
        records.append(record)
    return records
