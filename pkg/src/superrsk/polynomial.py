"""Sparse polynomials with exact integer coefficients in x1..xk, y1..yl."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "Monomial",
    "Polynomial",
    "unit_monomial",
    "polynomial_to_json",
    "polynomial_from_json",
]


@dataclass(frozen=True)
class Monomial:
    """Exponent vectors over the x-variables and the y-variables."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(int(e) for e in self.x))
        object.__setattr__(self, "y", tuple(int(e) for e in self.y))
        if any(e < 0 for e in self.x + self.y):
            raise ValueError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.y)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.x) != len(other.x) or len(self.y) != len(other.y):
            raise ValueError("monomials range over different variable sets")
        return Monomial(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.y, other.y)),
        )

    def render(self) -> str:
        parts = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self.x, 1) if e]
        parts += [f"y{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self.y, 1) if e]
        return " ".join(parts) if parts else "1"


def unit_monomial(k: int, l: int) -> Monomial:
    return Monomial((0,) * k, (0,) * l)


class Polynomial:
    """A finite map monomial -> integer coefficient; zeros are never stored.

    Coefficients are plain Python ints, so counts can grow without overflow.
    """

    __slots__ = ("_terms",)

    def __init__(
        self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mono, coeff in items:
            c = acc.get(mono, 0) + int(coeff)
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        self._terms = acc

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return cls([(mono, coeff)])

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        # descending exponent tuples: x-dominant terms print first
        return sorted(self._terms.items(), key=lambda kv: (kv[0].x, kv[0].y), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable-dict backed; compare by value only

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = merged.get(mono, 0) + coeff
            if c:
                merged[mono] = c
            elif mono in merged:
                del merged[mono]
        return Polynomial(merged)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        prod: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                c = prod.get(m, 0) + c1 * c2
                if c:
                    prod[m] = c
                elif m in prod:
                    del prod[m]
        return Polynomial(prod)

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            body = mono.render()
            if body == "1":
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff} {body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"


def polynomial_to_json(p: Polynomial) -> list[dict]:
    return [
        {"x": list(mono.x), "y": list(mono.y), "coeff": coeff}
        for mono, coeff in p.sorted_terms()
    ]


def polynomial_from_json(data: list[dict]) -> Polynomial:
    return Polynomial(
        [(Monomial(tuple(d["x"]), tuple(d["y"])), int(d["coeff"])) for d in data]
    )
