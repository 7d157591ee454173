"""Shared builders: compact text notation for tableaux and recording tableaux."""

from __future__ import annotations

import pytest

from superrsk import Alphabet, RecordingTableau, Tableau, parse_letter, parse_shuffle


def tab(text: str) -> Tableau:
    """Build a tableau from "t1 u1 t2 / u1 t2 u2 / t3" notation."""
    if not text.strip():
        return Tableau()
    rows = []
    for chunk in text.split("/"):
        rows.append(tuple(parse_letter(token) for token in chunk.split()))
    return Tableau(tuple(rows))


def rec(text: str) -> RecordingTableau:
    """Build a recording tableau from "1 2 3 / 4" notation."""
    if not text.strip():
        return RecordingTableau()
    rows = []
    for chunk in text.split("/"):
        rows.append(tuple(int(token) for token in chunk.split()))
    return RecordingTableau(tuple(rows))


@pytest.fixture
def a22() -> Alphabet:
    return Alphabet(2, 2)


@pytest.fixture
def order_ttuu(a22):
    return parse_shuffle("t1<t2<u1<u2", a22)


@pytest.fixture
def order_uutt(a22):
    return parse_shuffle("u1<u2<t1<t2", a22)
