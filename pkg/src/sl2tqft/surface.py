"""Virtual classes of parabolic SL(2, C)-representation varieties of closed surfaces.

Ground truth is the composition of reduced tube operators between the two
discs, divided by ``(q^3 - q)^(g + s)``. The closed-form polynomials are
evaluated separately and compared against it.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import CoreVector
from .operators import InvariantError, OperatorSet, TubeKind, disc_in, disc_out_coeff, operators
from .ring import Scalar, q

__all__ = [
    "PunctureKind",
    "SurfaceSpec",
    "FormulaVariant",
    "evaluate_tqft",
    "evaluate_tubes",
    "closed_form",
    "intro_formula",
    "INTRO_READINGS",
    "adjudicate",
    "Adjudication",
    "parse_punctures",
    "enumerate_specs",
]


class PunctureKind(enum.Enum):
    JPLUS = "jp"
    JMINUS = "jm"
    MINUS_ID = "mi"

    @property
    def tube(self) -> TubeKind:
        return TubeKind(self.value)


class FormulaVariant(enum.Enum):
    SECTION5 = "section5"
    INTRO = "intro"


@dataclass(frozen=True, order=True)
class SurfaceSpec:
    """Closed orientable surface of a given genus with marked points.

    Punctures are a multiset, stored as the counts ``r_plus`` ([J+]),
    ``r_minus`` ([J-]) and ``t`` ({-Id}).
    """

    genus: int = 0
    r_plus: int = 0
    r_minus: int = 0
    t: int = 0

    def __post_init__(self):
        for name in ("genus", "r_plus", "r_minus", "t"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")

    @property
    def r(self) -> int:
        return self.r_plus + self.r_minus

    @property
    def s(self) -> int:
        return self.r + self.t

    @property
    def sign(self) -> int:
        """(-1)^(r_minus + t)."""
        return -1 if (self.r_minus + self.t) % 2 else 1

    def punctures(self) -> list[PunctureKind]:
        return (
            [PunctureKind.JPLUS] * self.r_plus
            + [PunctureKind.JMINUS] * self.r_minus
            + [PunctureKind.MINUS_ID] * self.t
        )

    def puncture_string(self) -> str:
        parts = [f"{k.value}:{n}" for k, n in
                 ((PunctureKind.JPLUS, self.r_plus), (PunctureKind.JMINUS, self.r_minus),
                  (PunctureKind.MINUS_ID, self.t)) if n]
        return ",".join(parts)

    def label(self) -> str:
        return f"g={self.genus} r+={self.r_plus} r-={self.r_minus} t={self.t}"

    def to_json(self) -> dict:
        return {"genus": self.genus, "r_plus": self.r_plus, "r_minus": self.r_minus, "t": self.t}

    @classmethod
    def from_punctures(cls, genus: int, punctures: Iterable[PunctureKind]) -> SurfaceSpec:
        punctures = list(punctures)
        return cls(genus, punctures.count(PunctureKind.JPLUS),
                   punctures.count(PunctureKind.JMINUS), punctures.count(PunctureKind.MINUS_ID))


def parse_punctures(text: str) -> dict[PunctureKind, int]:
    """Parse ``"jp:2,mi:1"``; the empty string means no punctures."""
    counts = {k: 0 for k in PunctureKind}
    text = text.strip()
    if not text:
        return counts
    for item in text.split(","):
        kind, sep, num = item.strip().partition(":")
        try:
            k = PunctureKind(kind.strip().lower())
        except ValueError:
            raise ValueError(f"unknown puncture kind {kind!r} in {text!r}; expected jp, jm or mi") from None
        if not sep or not num.strip().isdigit():
            raise ValueError(f"puncture item {item!r} must look like kind:count")
        counts[k] += int(num)
    return counts


def evaluate_tubes(genus: int, tubes: Sequence[TubeKind], ops: OperatorSet | None = None) -> Scalar:
    """Apply ``genus`` genus tubes, then ``tubes`` in order, between the discs, and normalise."""
    ops = ops or operators()
    v: CoreVector = disc_in()
    L = ops.cz_l
    for _ in range(genus):
        v = L @ v
    for k in tubes:
        v = ops.tube(k) @ v
    return disc_out_coeff(v) / ops.sl2_class ** (genus + len(tubes))


def _default_order(spec: SurfaceSpec) -> list[TubeKind]:
    return [p.tube for p in spec.punctures()]


def evaluate_tqft(spec: SurfaceSpec, ops: OperatorSet | None = None) -> Scalar:
    """Virtual class of the representation variety, by operator composition.

    Applies J+ tubes, then J- tubes, then -Id tubes after the genus tubes, and
    cross-checks against the reversed puncture order.
    """
    order = _default_order(spec)
    value = evaluate_tubes(spec.genus, order, ops)
    if not value.is_polynomial():
        raise InvariantError(f"non-polynomial class for {spec.label()}: {value}")
    if len(set(order)) > 1:
        other = evaluate_tubes(spec.genus, order[::-1], ops)
        if other != value:
            raise InvariantError(f"tube order changes the class for {spec.label()}")
    return value


# -- closed forms -----------------------------------------------------------

_HALF = Fraction(1, 2)


def _even_sign_formula(g: int, r: int) -> Scalar:
    e = 2 * g + r - 1
    return (
        (q**2 - 1) ** e * q ** (2 * g - 1)
        + _HALF * (q - 1) ** e * q ** (2 * g - 1) * (q + 1) * (2 ** (2 * g) + q - 3)
        + Fraction((-1) ** r, 2) * (q + 1) ** e * q ** (2 * g - 1) * (q - 1) * (2 ** (2 * g) + q - 1)
    )


def _odd_sign_formula(g: int, r: int) -> Scalar:
    e = 2 * g + r - 1
    pow2 = Fraction(2) ** (2 * g - 1)
    return (
        (q - 1) ** e * (q + 1) * q ** (2 * g - 1) * ((q + 1) ** (2 * g + r - 2) + pow2 - 1)
        + (-1) ** (r + 1) * pow2 * (q + 1) ** e * (q - 1) * q ** (2 * g - 1)
    )


def _lost_term(g: int) -> Scalar:
    # Correction restoring the kernel contribution when r = 0.
    return q * (q**2 - 1) ** (2 * g - 1)


def _section5(spec: SurfaceSpec) -> Scalar:
    g, r = spec.genus, spec.r
    if r > 0:
        return _even_sign_formula(g, r) if spec.sign == 1 else _odd_sign_formula(g, r)
    # r = 0: pairs of -Id tubes cancel against the normalisation, so only t mod 2 matters.
    if spec.t % 2 == 0:
        return _even_sign_formula(g, 0) + _lost_term(g)
    return _odd_sign_formula(g, 0) + _lost_term(g)


def intro_formula(g: int, r: int, ell: int) -> Scalar | None:
    """Four-case formula set in terms of (r, ell); None where no case applies."""
    if r == 0:
        return _even_sign_formula(g, 0) + _lost_term(g)
    if ell % 2 == 0:
        return _even_sign_formula(g, r)
    if r == 1 and ell == 1:
        return _odd_sign_formula(g, r) + _lost_term(g)
    if ell > 1:
        return _odd_sign_formula(g, r)
    return None


INTRO_READINGS = {
    # r counts every marked point, ell those in [J-] or {-Id}: the literal statement.
    "all-points": lambda s: (s.s, s.r_minus + s.t),
    # r counts only Jordan-type points, as in the sign-based statement.
    "jordan-only": lambda s: (s.r, s.r_minus + s.t),
}


def closed_form(spec: SurfaceSpec, variant: FormulaVariant = FormulaVariant.SECTION5) -> Scalar:
    variant = FormulaVariant(variant)
    if variant is FormulaVariant.SECTION5:
        return _section5(spec)
    r, ell = INTRO_READINGS["all-points"](spec)
    value = intro_formula(spec.genus, r, ell)
    if value is None:
        raise ValueError(f"no case of the four-case formula covers r={r}, ell={ell}")
    return value


@dataclass(frozen=True)
class Adjudication:
    spec: SurfaceSpec
    tqft: Scalar
    section5: Scalar
    intro: dict[str, tuple[int, int, Scalar | None]]

    @property
    def section5_matches(self) -> bool:
        return self.section5 == self.tqft

    def intro_matches(self, reading: str) -> bool | None:
        value = self.intro[reading][2]
        return None if value is None else value == self.tqft

    def records(self) -> list[dict]:
        recs = [{
            "spec": self.spec.to_json(), "method_a": "tqft", "method_b": "closed:section5",
            "value_a": self.tqft, "value_b": self.section5, "pass": self.section5_matches,
        }]
        for name, (r, ell, value) in self.intro.items():
            recs.append({
                "spec": self.spec.to_json(), "method_a": "tqft",
                "method_b": f"closed:intro[{name}; r={r}, ell={ell}]",
                "value_a": self.tqft, "value_b": value, "pass": self.intro_matches(name),
            })
        return recs


def adjudicate(spec: SurfaceSpec, ops: OperatorSet | None = None) -> Adjudication:
    """Compare both closed-form conventions against the operator pipeline."""
    intro = {}
    for name, reading in INTRO_READINGS.items():
        r, ell = reading(spec)
        intro[name] = (r, ell, intro_formula(spec.genus, r, ell))
    return Adjudication(spec, evaluate_tqft(spec, ops), closed_form(spec), intro)


def enumerate_specs(max_genus: int, max_punctures: int) -> list[SurfaceSpec]:
    """All specs with genus <= max_genus and at most max_punctures marked points, sorted."""
    specs = [
        SurfaceSpec(g, a, b, c)
        for g in range(max_genus + 1)
        for a, b, c in itertools.product(range(max_punctures + 1), repeat=3)
        if a + b + c <= max_punctures
    ]
    return sorted(specs)
