"""Bordism words: compositions of discs and tubes written as text.

Grammar (generators are case-insensitive)::

    word   := "Dt" sep (factor sep)* "D"
    factor := gen ("^" uint)?
    gen    := "L" | "JP" | "JM" | "MI"
    sep    := "." | "∘" | whitespace, with surrounding whitespace allowed

A word reads as a composition, so the rightmost factor acts first: ``D``
creates the circle, tubes act from right to left, ``Dt`` caps it off.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .operators import InvariantError, OperatorSet, TubeKind
from .ring import Scalar
from .surface import SurfaceSpec, evaluate_tubes

__all__ = ["BordismWord", "WordSyntaxError", "WordStructureError", "parse_word", "word_to_spec", "evaluate_word"]

TUBES = ("L", "JP", "JM", "MI")
_GEN_TO_TUBE = {"L": TubeKind.GENUS, "JP": TubeKind.JPLUS, "JM": TubeKind.JMINUS, "MI": TubeKind.MINUS_ID}


class WordSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}\n{' ' * (pos + 1)}^")


class WordStructureError(ValueError):
    pass


@dataclass(frozen=True)
class BordismWord:
    """Factors as ``(generator, exponent)`` pairs in written order, discs included."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        f = self.factors
        if len(f) < 2 or f[0] != ("Dt", 1) or f[-1] != ("D", 1):
            raise WordStructureError("a word must start with Dt and end with D, each to the first power")
        for gen, exp in f[1:-1]:
            if gen not in TUBES:
                raise WordStructureError(f"{gen} may only appear at the ends of a word")
            if exp < 1:
                raise WordStructureError(f"exponent of {gen} must be at least 1")

    @property
    def tubes(self) -> tuple[tuple[str, int], ...]:
        return self.factors[1:-1]

    def expanded(self) -> list[str]:
        """Interior generators in written order with exponents unrolled."""
        return [g for g, e in self.tubes for _ in range(e)]

    def __str__(self):
        return " . ".join(g if e == 1 else f"{g}^{e}" for g, e in self.factors)


_TOKEN = re.compile(r"\s*(?:(?P<gen>[A-Za-z]+)(?:\s*\^\s*(?P<exp>\d+))?)")
_SEP = re.compile(r"\s*[.∘]\s*|\s+")


def parse_word(text: str) -> BordismWord:
    pos = 0
    n = len(text)
    factors: list[tuple[str, int]] = []
    while True:
        m = _TOKEN.match(text, pos)
        if not m or not m.group("gen"):
            where = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise WordSyntaxError("expected a generator", text, where)
        start = m.start("gen")
        raw = m.group("gen").upper()
        gen = {"DT": "Dt", "D": "D"}.get(raw, raw)
        if gen not in TUBES and gen not in ("Dt", "D"):
            raise WordSyntaxError(f"unknown generator {m.group('gen')!r}", text, start)
        exp = 1
        if m.group("exp") is not None:
            exp = int(m.group("exp"))
            if exp < 1:
                raise WordSyntaxError("exponent must be at least 1", text, m.start("exp"))
        factors.append((gen, exp))
        pos = m.end()
        if pos >= n or not text[pos:].strip():
            break
        s = _SEP.match(text, pos)
        if not s:
            raise WordSyntaxError("expected a separator ('.', '∘' or whitespace)", text, pos)
        pos = s.end()
        if pos >= n:
            raise WordSyntaxError("word ends after a separator", text, pos)
    try:
        return BordismWord(tuple(factors))
    except WordStructureError as exc:
        raise WordStructureError(f"{exc}: {text!r}") from None


def word_to_spec(w: BordismWord) -> SurfaceSpec:
    counts = {g: 0 for g in TUBES}
    for g, e in w.tubes:
        counts[g] += e
    return SurfaceSpec(counts["L"], counts["JP"], counts["JM"], counts["MI"])


def evaluate_word(w: BordismWord, ops: OperatorSet | None = None) -> Scalar:
    """Evaluate in the literal written order (rightmost tube first)."""
    tubes = [_GEN_TO_TUBE[g] for g in reversed(w.expanded())]
    value = evaluate_tubes(0, tubes, ops)
    if not value.is_polynomial():
        raise InvariantError(f"non-polynomial class for {w}: {value}")
    return value
