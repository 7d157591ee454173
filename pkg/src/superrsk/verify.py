"""Exhaustive desk-scale checkers for the library's documented claims.

Each grid checker runs every case in a parameter grid (or a seeded sample),
collects replayable failures, and returns a Report.  Single-case predicates
are exposed separately so individual instances can be replayed.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .alphabet import (
    Alphabet,
    Letter,
    Shuffle,
    adjacent_transposition,
    all_shuffles,
)
from .bijection import change_shuffle, reverse_word, standardize_u
from .insertion import (
    REGULAR_DUAL,
    REGULAR_REGULAR,
    VARIANTS,
    InsertionResult,
    InsertionTrace,
    PendingAction,
    Variant,
    Word,
    all_words,
    insert_word,
    variant_profile,
)
from .schur import enumerate_ssyt, enumerate_syt, hook_schur, partitions, rsk_counting_identity
from .tableau import (
    RecordingTableau,
    Shape,
    Tableau,
    classify_regions,
    content_type,
    is_standard,
    is_subtableau,
    is_valid,
    region2_components,
)

__all__ = [
    "Report",
    "CaseFailure",
    "Sample",
    "Alignment",
    "AlignmentError",
    "states_equivalent",
    "region2_stats",
    "align_traces",
    "check_shape_invariance",
    "check_path_monotonicity",
    "check_cell_monotonicity",
    "check_restriction_subtableau",
    "check_region1_agreement",
    "check_dual_regular_agreement",
    "check_standardization_mimicry",
    "check_weight_preserving_bijection",
    "check_path_monotonicity_grid",
    "check_cell_monotonicity_grid",
    "check_restriction_subtableau_grid",
    "check_region1_agreement_grid",
    "check_trace_alignment_grid",
    "check_dual_regular_agreement_grid",
    "check_standardization_mimicry_grid",
    "check_round_trip_grid",
    "check_weight_preserving_bijection_grid",
    "check_hook_schur_invariance",
    "check_counting_identity",
]


@dataclass(frozen=True)
class CaseFailure:
    """One failing case; the fields are enough to replay it."""

    word: str
    shuffles: str
    variant: str
    expected: str
    actual: str

    def to_json_dict(self) -> dict:
        return {
            "word": self.word,
            "shuffles": self.shuffles,
            "variant": self.variant,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True, eq=False)
class Report:
    check_name: str
    parameters: dict
    cases_run: int
    failures: tuple[CaseFailure, ...]
    elapsed: float
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "check": self.check_name,
            "params": self.parameters,
            "cases": self.cases_run,
            "failures": [f.to_json_dict() for f in self.failures],
            "stats": self.stats,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


@dataclass(frozen=True)
class Sample:
    """Seeded random sampling of the word grid."""

    count: int
    seed: int


Mode = str | Sample  # "exhaustive" or a Sample


def _mode_params(mode: Mode) -> dict:
    if isinstance(mode, Sample):
        return {"mode": "sample", "samples": mode.count, "seed": mode.seed}
    return {"mode": "exhaustive"}


def _grid_words(alphabet: Alphabet, n: int, mode: Mode) -> list[Word]:
    if mode == "exhaustive":
        return list(all_words(alphabet, n))
    if not isinstance(mode, Sample):
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(mode.seed)
    letters = alphabet.letters()
    return [Word(tuple(rng.choice(letters) for _ in range(n))) for _ in range(mode.count)]


# ---------------------------------------------------------------------------
# intermediate-state equivalence and trace alignment


State = tuple[Tableau, PendingAction | None]


def region2_stats(
    tab: Tableau, shuffle: Shuffle, pair: tuple[Letter, Letter]
) -> dict[frozenset, tuple[int, int]]:
    """Per-component (t-count, u-count) census of the pair region."""
    regions = classify_regions(tab, shuffle, pair)
    stats = {}
    for comp in region2_components(regions):
        nt = sum(1 for cell in comp if tab.entry(*cell) == pair[0])
        nu = sum(1 for cell in comp if tab.entry(*cell) == pair[1])
        stats[comp] = (nt, nu)
    return stats


def _states(trace: InsertionTrace) -> list[State]:
    """Pair each step's tableau with the action that the next step performs."""
    steps = trace.steps
    out: list[State] = []
    for i, step in enumerate(steps):
        if i + 1 == len(steps):
            pending = None
        elif step.bumped is not None:
            pending = step.bumped
        else:
            nxt = steps[i + 1]
            elem = nxt.state.entry(*nxt.settled_cell)
            if elem.kind == "t":
                pending = PendingAction(elem, "row", nxt.settled_cell[0])
            else:
                pending = PendingAction(elem, "column", nxt.settled_cell[1])
        out.append((step.state, pending))
    return out


def _sim(
    state_a: State,
    state_b: State,
    shuffle_a: Shuffle,
    shuffle_b: Shuffle,
    pair: tuple[Letter, Letter],
) -> bool:
    tab_a, pending_a = state_a
    tab_b, pending_b = state_b
    regions_a = classify_regions(tab_a, shuffle_a, pair)
    regions_b = classify_regions(tab_b, shuffle_b, pair)
    for label in (1, 3):
        side_a = {cell: tab_a.entry(*cell) for cell, lab in regions_a.items() if lab == label}
        side_b = {cell: tab_b.entry(*cell) for cell, lab in regions_b.items() if lab == label}
        if side_a != side_b:
            return False
    cells_a = {cell for cell, lab in regions_a.items() if lab == 2}
    cells_b = {cell for cell, lab in regions_b.items() if lab == 2}
    if cells_a != cells_b:
        return False
    ti = pair[0]
    for comp in region2_components(regions_a):
        count_a = sum(1 for cell in comp if tab_a.entry(*cell) == ti)
        count_b = sum(1 for cell in comp if tab_b.entry(*cell) == ti)
        if count_a != count_b:
            return False
    return pending_a == pending_b


def states_equivalent(
    state_a: State, state_b: State, shuffle_a: Shuffle, shuffle_b: Shuffle
) -> bool:
    """Equivalence of intermediate states under adjacent shuffles.

    Requires identical cells-and-entries outside the swapped pair, identical
    pair-region cells with matching per-component t-counts, and equal pending
    actions (both terminal counts as equal).
    """
    pair = adjacent_transposition(shuffle_a, shuffle_b)
    if pair is None:
        raise ValueError("shuffles must be adjacent (differ on exactly one mixed pair)")
    return _sim(state_a, state_b, shuffle_a, shuffle_b, pair)


class AlignmentError(Exception):
    """No step alignment with equivalent matched states exists."""


@dataclass(frozen=True)
class Alignment:
    """Matched step indices into two traces; increments are (1,1), (1,2), (2,1)."""

    pairs: tuple[tuple[int, int], ...]
    witness_count: int


_INCREMENTS = ((1, 1), (1, 2), (2, 1))


def align_traces(
    trace_a: InsertionTrace,
    shuffle_a: Shuffle,
    trace_b: InsertionTrace,
    shuffle_b: Shuffle,
) -> Alignment:
    """Breadth-first search for a step alignment whose matched states are equivalent.

    Starts at (1, 1), advances by the three allowed increments, and must end
    at the final step of both traces.  The witness count is the number of
    distinct alignments through equivalent matched pairs.
    """
    pair = adjacent_transposition(shuffle_a, shuffle_b)
    if pair is None:
        raise ValueError("shuffles must be adjacent (differ on exactly one mixed pair)")
    states_a = _states(trace_a)
    states_b = _states(trace_b)
    sa, sb = len(states_a), len(states_b)
    if sa == 0 and sb == 0:
        return Alignment((), 1)
    if sa == 0 or sb == 0:
        raise AlignmentError("traces have different emptiness")

    sim_cache: dict[tuple[int, int], bool] = {}

    def ok(p: int, q: int) -> bool:
        if (p, q) not in sim_cache:
            sim_cache[(p, q)] = _sim(
                states_a[p - 1], states_b[q - 1], shuffle_a, shuffle_b, pair
            )
        return sim_cache[(p, q)]

    if not ok(1, 1):
        raise AlignmentError("initial states are not equivalent")
    target = (sa, sb)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {(1, 1): None}
    queue = deque([(1, 1)])
    while queue:
        p, q = queue.popleft()
        for dp, dq in _INCREMENTS:
            np_, nq = p + dp, q + dq
            if np_ > sa or nq > sb or (np_, nq) in parent:
                continue
            if ok(np_, nq):
                parent[(np_, nq)] = (p, q)
                queue.append((np_, nq))
    if target not in parent:
        raise AlignmentError(f"no alignment reaches ({sa}, {sb})")
    path = []
    node: tuple[int, int] | None = target
    while node is not None:
        path.append(node)
        node = parent[node]
    path.reverse()

    counts: dict[tuple[int, int], int] = {(1, 1): 1}
    for node in sorted(parent, key=lambda pq: (pq[0] + pq[1], pq[0])):
        if node == (1, 1):
            continue
        counts[node] = sum(
            counts.get((node[0] - dp, node[1] - dq), 0) for dp, dq in _INCREMENTS
        )
    return Alignment(tuple(path), counts[target])


# ---------------------------------------------------------------------------
# single-case predicates


def check_path_monotonicity(result: InsertionResult) -> bool:
    """Bumped elements never drift outward.

    Within one letter's steps, a t bumped from (i, j) acts in row i+1 at a
    column <= j, and a u bumped from (i, j) acts in column j+1 at a row <= i.
    """
    steps = result.trace.steps
    for step, nxt in zip(steps, steps[1:]):
        if step.bumped is None:
            continue
        r, c = step.settled_cell
        nr, nc = nxt.settled_cell
        if step.bumped.element.kind == "t":
            if nr != r + 1 or nc > c:
                return False
        else:
            if nc != c + 1 or nr > r:
                return False
    return True


def check_cell_monotonicity(result: InsertionResult, shuffle: Shuffle) -> bool:
    """Across consecutive states, occupied cells persist and entries only shrink."""
    steps = result.trace.steps
    for prev, cur in zip(steps, steps[1:]):
        for cell, old in prev.state.items():
            new = cur.state.entry(*cell)
            if new is None or shuffle.less(old, new):
                return False
    return True


def check_restriction_subtableau(
    v: Word, shuffle: Shuffle, x: Letter, variant: Variant = REGULAR_REGULAR
) -> bool:
    """Inserting only the letters <= x yields a subtableau of the full insertion."""
    bound = shuffle.rank(x)
    restricted = Word(tuple(a for a in v if shuffle.rank(a) <= bound))
    small = insert_word(restricted, shuffle, variant).p
    big = insert_word(v, shuffle, variant).p
    return is_subtableau(small, big)


def check_region1_agreement(v: Word, a: Shuffle, b: Shuffle) -> bool:
    """Adjacent shuffles build identical subtableaux out of the low letters."""
    pair = adjacent_transposition(a, b)
    if pair is None:
        raise ValueError("shuffles must be adjacent")
    pa = insert_word(v, a, REGULAR_REGULAR).p
    pb = insert_word(v, b, REGULAR_REGULAR).p
    regions_a = classify_regions(pa, a, pair)
    regions_b = classify_regions(pb, b, pair)
    low_a = {cell: pa.entry(*cell) for cell, lab in regions_a.items() if lab == 1}
    low_b = {cell: pb.entry(*cell) for cell, lab in regions_b.items() if lab == 1}
    return low_a == low_b


def check_dual_regular_agreement(v: Word, shuffle: Shuffle) -> bool:
    """With pairwise distinct u-letters, the regular and dual u-rules coincide."""
    seen = set()
    for letter in v:
        if letter.kind == "u":
            if letter in seen:
                raise ValueError(f"u-letter {letter} repeats in {v}")
            seen.add(letter)
    reg = insert_word(v, shuffle, REGULAR_REGULAR)
    dual = insert_word(v, shuffle, REGULAR_DUAL)
    return reg.p == dual.p and reg.q == dual.q


def check_standardization_mimicry(v: Word, shuffle: Shuffle) -> bool:
    """Relabelling repeated u's reproduces the dual insertion cell for cell.

    The relabelled word, inserted under the derived shuffle, must give the
    original dual insertion tableau once fresh letters are mapped back, with
    the same recording tableau (hence the same shape).
    """
    std = standardize_u(v, shuffle)
    original = insert_word(v, shuffle, REGULAR_DUAL)
    relabelled = insert_word(std.word, std.shuffle, REGULAR_DUAL)
    if original.p.shape != relabelled.p.shape:
        return False
    if original.q != relabelled.q:
        return False
    return std.unmap_tableau(relabelled.p) == original.p


# ---------------------------------------------------------------------------
# reports


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def check_shape_invariance(
    alphabet: Alphabet,
    n: int,
    variant: Variant = REGULAR_REGULAR,
    mode: Mode = "exhaustive",
) -> Report:
    """Shape and recording tableau agree across every pair of shuffles."""
    shuffles = all_shuffles(alphabet)
    failures: list[CaseFailure] = []
    cases = 0

    def run():
        nonlocal cases
        for word in _grid_words(alphabet, n, mode):
            results = [insert_word(word, s, variant) for s in shuffles]
            for i, j in combinations(range(len(shuffles)), 2):
                cases += 1
                ri, rj = results[i], results[j]
                if ri.p.shape != rj.p.shape or ri.q != rj.q:
                    failures.append(
                        CaseFailure(
                            word=str(word),
                            shuffles=f"{shuffles[i]} | {shuffles[j]}",
                            variant=variant.name,
                            expected="equal shapes and recording tableaux",
                            actual=f"shapes {ri.p.shape} vs {rj.p.shape}, "
                            f"q equal: {ri.q == rj.q}",
                        )
                    )

    _, elapsed = _timed(run)
    params = {"k": alphabet.k, "l": alphabet.l, "n": n, "variant": variant.name}
    params.update(_mode_params(mode))
    return Report("shape-invariance", params, cases, tuple(failures), elapsed)


def _word_grid_report(
    name: str,
    alphabet: Alphabet,
    n: int,
    mode: Mode,
    case_iter,
    extra_params: dict | None = None,
    stats: dict | None = None,
) -> Report:
    failures: list[CaseFailure] = []
    cases = 0

    def run():
        nonlocal cases
        for word in _grid_words(alphabet, n, mode):
            for failure in case_iter(word):
                if failure is not None:
                    failures.append(failure)
                cases += 1

    _, elapsed = _timed(run)
    params = {"k": alphabet.k, "l": alphabet.l, "n": n}
    params.update(extra_params or {})
    params.update(_mode_params(mode))
    return Report(name, params, cases, tuple(failures), elapsed, stats or {})


def check_path_monotonicity_grid(
    alphabet: Alphabet, n: int, variant: Variant = REGULAR_REGULAR, mode: Mode = "exhaustive"
) -> Report:
    shuffles = all_shuffles(alphabet)

    def cases(word: Word):
        for s in shuffles:
            result = insert_word(word, s, variant)
            if check_path_monotonicity(result):
                yield None
            else:
                yield CaseFailure(
                    word=str(word),
                    shuffles=str(s),
                    variant=variant.name,
                    expected="monotone bump targets",
                    actual="a bumped element drifted outward",
                )

    return _word_grid_report(
        "path-monotonicity", alphabet, n, mode, cases, {"variant": variant.name}
    )


def check_cell_monotonicity_grid(
    alphabet: Alphabet, n: int, variant: Variant = REGULAR_REGULAR, mode: Mode = "exhaustive"
) -> Report:
    shuffles = all_shuffles(alphabet)

    def cases(word: Word):
        for s in shuffles:
            result = insert_word(word, s, variant)
            if check_cell_monotonicity(result, s):
                yield None
            else:
                yield CaseFailure(
                    word=str(word),
                    shuffles=str(s),
                    variant=variant.name,
                    expected="entries only shrink in place",
                    actual="a cell emptied or its entry grew",
                )

    return _word_grid_report(
        "cell-monotonicity", alphabet, n, mode, cases, {"variant": variant.name}
    )


def check_restriction_subtableau_grid(
    alphabet: Alphabet, n: int, mode: Mode = "exhaustive"
) -> Report:
    shuffles = all_shuffles(alphabet)
    letters = alphabet.letters()

    def cases(word: Word):
        for s in shuffles:
            for x in letters:
                if check_restriction_subtableau(word, s, x):
                    yield None
                else:
                    yield CaseFailure(
                        word=str(word),
                        shuffles=str(s),
                        variant=REGULAR_REGULAR.name,
                        expected=f"restriction to letters <= {x} is a subtableau",
                        actual="subtableau containment failed",
                    )

    return _word_grid_report("restriction-subtableau", alphabet, n, mode, cases)


def _adjacent_pairs(shuffles: list[Shuffle]) -> list[tuple[Shuffle, Shuffle]]:
    pairs = []
    for a, b in combinations(shuffles, 2):
        if adjacent_transposition(a, b) is not None:
            pairs.append((a, b))
    return pairs


def check_region1_agreement_grid(
    alphabet: Alphabet, n: int, mode: Mode = "exhaustive"
) -> Report:
    pairs = _adjacent_pairs(all_shuffles(alphabet))

    def cases(word: Word):
        for a, b in pairs:
            if check_region1_agreement(word, a, b):
                yield None
            else:
                yield CaseFailure(
                    word=str(word),
                    shuffles=f"{a} | {b}",
                    variant=REGULAR_REGULAR.name,
                    expected="identical low-letter subtableaux",
                    actual="low regions differ",
                )

    return _word_grid_report("region1-agreement", alphabet, n, mode, cases)


def check_trace_alignment_grid(
    alphabet: Alphabet, n: int, mode: Mode = "exhaustive"
) -> Report:
    """Every adjacent-shuffle pair admits a step alignment on every word."""
    pairs = _adjacent_pairs(all_shuffles(alphabet))
    witness_histogram: dict[int, int] = {}

    def cases(word: Word):
        for a, b in pairs:
            trace_a = insert_word(word, a, REGULAR_REGULAR).trace
            trace_b = insert_word(word, b, REGULAR_REGULAR).trace
            try:
                alignment = align_traces(trace_a, a, trace_b, b)
            except AlignmentError as exc:
                yield CaseFailure(
                    word=str(word),
                    shuffles=f"{a} | {b}",
                    variant=REGULAR_REGULAR.name,
                    expected="an alignment with equivalent matched states",
                    actual=str(exc),
                )
                continue
            witness_histogram[alignment.witness_count] = (
                witness_histogram.get(alignment.witness_count, 0) + 1
            )
            yield None

    report = _word_grid_report("trace-alignment", alphabet, n, mode, cases)
    report.stats["witness_counts"] = {
        str(k): v for k, v in sorted(witness_histogram.items())
    }
    return report


def check_dual_regular_agreement_grid(
    alphabet: Alphabet, n: int, mode: Mode = "exhaustive"
) -> Report:
    """Regular and dual u-rules agree on words with pairwise distinct u's."""
    shuffles = all_shuffles(alphabet)

    def distinct_u(word: Word) -> bool:
        us = [a for a in word if a.kind == "u"]
        return len(us) == len(set(us))

    def cases(word: Word):
        if not distinct_u(word):
            return
        for s in shuffles:
            if check_dual_regular_agreement(word, s):
                yield None
            else:
                yield CaseFailure(
                    word=str(word),
                    shuffles=str(s),
                    variant="reg-reg vs reg-dual",
                    expected="identical insertion and recording tableaux",
                    actual="outputs differ",
                )

    return _word_grid_report("dual-regular-agreement", alphabet, n, mode, cases)


def check_weight_preserving_bijection(
    shape: Shape,
    alphabet: Alphabet,
    a: Shuffle,
    b: Shuffle,
    q: RecordingTableau,
    variant: Variant = REGULAR_REGULAR,
) -> Report:
    """Transporting every filling of the shape from order a to order b is a
    content-preserving bijection onto the fillings valid under b."""
    shape = tuple(shape)
    if q.shape != shape:
        raise ValueError(f"recording tableau shape {q.shape} does not match {shape}")
    if not is_standard(q):
        raise ValueError("recording tableau is not standard")
    failures: list[CaseFailure] = []
    cases = 0

    def run():
        nonlocal cases
        source = enumerate_ssyt(shape, alphabet, a, variant)
        target = set(enumerate_ssyt(shape, alphabet, b, variant))
        profile = variant_profile(variant)
        images = []
        for tab in source:
            cases += 1
            image = change_shuffle(tab, q, a, b, variant)
            problems = []
            if image.shape != shape:
                problems.append(f"shape changed to {image.shape}")
            if not is_valid(image, b, profile):
                problems.append("image not valid under target order")
            if content_type(tab, alphabet) != content_type(image, alphabet):
                problems.append("content changed")
            if problems:
                failures.append(
                    CaseFailure(
                        word="",
                        shuffles=f"{a} -> {b}",
                        variant=variant.name,
                        expected="valid, content-preserving image",
                        actual="; ".join(problems),
                    )
                )
            images.append(image)
        if len(set(images)) != len(images):
            failures.append(
                CaseFailure(
                    word="",
                    shuffles=f"{a} -> {b}",
                    variant=variant.name,
                    expected="injective map",
                    actual="two fillings share an image",
                )
            )
        if len(source) != len(target):
            failures.append(
                CaseFailure(
                    word="",
                    shuffles=f"{a} -> {b}",
                    variant=variant.name,
                    expected="equal counts on both sides",
                    actual=f"{len(source)} vs {len(target)}",
                )
            )

    _, elapsed = _timed(run)
    params = {
        "shape": list(shape),
        "k": alphabet.k,
        "l": alphabet.l,
        "a": str(a),
        "b": str(b),
        "q": [list(row) for row in q.rows],
        "variant": variant.name,
    }
    return Report("weight-preserving-bijection", params, cases, tuple(failures), elapsed)


def check_weight_preserving_bijection_grid(alphabet: Alphabet, n: int) -> Report:
    """All shapes of n cells, all standard recorders, all ordered shuffle pairs."""
    shuffles = all_shuffles(alphabet)
    failures: list[CaseFailure] = []
    cases = 0
    distinct_maps: dict[str, int] = {}

    def run():
        nonlocal cases
        for shape in partitions(n):
            recorders = enumerate_syt(shape)
            for a in shuffles:
                for b in shuffles:
                    if a == b:
                        continue
                    maps = set()
                    for q in recorders:
                        sub = check_weight_preserving_bijection(shape, alphabet, a, b, q)
                        cases += sub.cases_run
                        failures.extend(sub.failures)
                        source = enumerate_ssyt(shape, alphabet, a, REGULAR_REGULAR)
                        maps.add(
                            tuple(
                                (tab, change_shuffle(tab, q, a, b, REGULAR_REGULAR))
                                for tab in source
                            )
                        )
                    key = f"{shape}"
                    distinct_maps[key] = max(distinct_maps.get(key, 0), len(maps))

    _, elapsed = _timed(run)
    params = {"k": alphabet.k, "l": alphabet.l, "n": n}
    return Report(
        "weight-preserving-bijection",
        params,
        cases,
        tuple(failures),
        elapsed,
        {"distinct_maps_by_shape": distinct_maps},
    )


def check_hook_schur_invariance(alphabet: Alphabet, n: int) -> Report:
    """The weight generating polynomial of each shape ignores the shuffle."""
    shuffles = all_shuffles(alphabet)
    failures: list[CaseFailure] = []
    cases = 0

    def run():
        nonlocal cases
        for shape in partitions(n):
            reference = hook_schur(shape, alphabet, shuffles[0])
            for s in shuffles[1:]:
                cases += 1
                other = hook_schur(shape, alphabet, s)
                if other != reference:
                    failures.append(
                        CaseFailure(
                            word=f"shape {shape}",
                            shuffles=f"{shuffles[0]} | {s}",
                            variant=REGULAR_REGULAR.name,
                            expected=reference.render(),
                            actual=other.render(),
                        )
                    )

    _, elapsed = _timed(run)
    params = {"k": alphabet.k, "l": alphabet.l, "n": n}
    return Report("hook-schur-invariance", params, cases, tuple(failures), elapsed)


def check_counting_identity(alphabet: Alphabet, n: int) -> Report:
    """Sum over shapes of #fillings x #standard fillings equals (k+l)^n,
    for every shuffle and every variant."""
    failures: list[CaseFailure] = []
    cases = 0

    def run():
        nonlocal cases
        for s in all_shuffles(alphabet):
            for variant in VARIANTS:
                cases += 1
                outcome = rsk_counting_identity(alphabet, n, s, variant)
                if not outcome["equal"]:
                    failures.append(
                        CaseFailure(
                            word=f"n={n}",
                            shuffles=str(s),
                            variant=variant.name,
                            expected=str(outcome["rhs"]),
                            actual=str(outcome["lhs"]),
                        )
                    )

    _, elapsed = _timed(run)
    params = {"k": alphabet.k, "l": alphabet.l, "n": n}
    return Report("counting-identity", params, cases, tuple(failures), elapsed)


def check_round_trip_grid(
    alphabet: Alphabet, n: int, variant: Variant, mode: Mode = "exhaustive"
) -> Report:
    """reverse(insert(v)) recovers v for every word in the grid."""
    shuffles = all_shuffles(alphabet)

    def cases(word: Word):
        for s in shuffles:
            result = insert_word(word, s, variant)
            back = reverse_word(result.p, result.q, s, variant)
            if back == word:
                yield None
            else:
                yield CaseFailure(
                    word=str(word),
                    shuffles=str(s),
                    variant=variant.name,
                    expected=str(word),
                    actual=str(back),
                )

    return _word_grid_report(
        "round-trip", alphabet, n, mode, cases, {"variant": variant.name}
    )


def check_standardization_mimicry_grid(
    alphabet: Alphabet, n: int, mode: Mode = "exhaustive"
) -> Report:
    shuffles = all_shuffles(alphabet)

    def cases(word: Word):
        for s in shuffles:
            if check_standardization_mimicry(word, s):
                yield None
            else:
                yield CaseFailure(
                    word=str(word),
                    shuffles=str(s),
                    variant=REGULAR_DUAL.name,
                    expected="relabelled insertion matches cell for cell",
                    actual="mimicry failed",
                )

    return _word_grid_report("standardization-mimicry", alphabet, n, mode, cases)
