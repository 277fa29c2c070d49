"""Concrete TQFT operators on the core module and the identities they satisfy."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field

from . import tables
from .core import Basis, CoreMatrix, CoreVector, SingularMatrixError
from .ring import ONE, Scalar, q

__all__ = [
    "TubeKind",
    "OperatorSet",
    "IdentityCheck",
    "IdentityReport",
    "InvariantError",
    "operators",
    "eta_matrix",
    "eta_inverse_closed_form",
    "sigma_matrix",
    "tube_matrix",
    "disc_in",
    "disc_out_coeff",
    "check_anchors",
    "verify_operator_identities",
]

SL2 = tables.SL2


class InvariantError(RuntimeError):
    """An internal consistency check failed; points at a transcription or logic bug."""


class TubeKind(enum.Enum):
    GENUS = "l"
    JPLUS = "jp"
    JMINUS = "jm"
    MINUS_ID = "mi"


def _scaled(prefactor: Scalar, table) -> CoreMatrix:
    return prefactor * CoreMatrix(table)


def eta_matrix() -> CoreMatrix:
    return CoreMatrix(tables.ETA)


def eta_inverse_closed_form() -> CoreMatrix:
    """Blockwise inverse of eta, written out by hand (independent of elimination)."""
    a = ONE / (q**2 - 1)
    b = -ONE / (q * (q**2 - 1))
    return CoreMatrix.from_images({
        Basis.T1: {Basis.T1: 1},
        Basis.Tm1: {Basis.Tm1: 1},
        Basis.Tp: {Basis.Tp: a},
        Basis.Tm: {Basis.Tm: a},
        Basis.TB: {Basis.TB: a, Basis.S2Sm2: b},
        Basis.S2Sm2: {Basis.TB: b, Basis.S2Sm2: a},
        Basis.S2: {Basis.S2: a, Basis.Sm2: b},
        Basis.Sm2: {Basis.S2: b, Basis.Sm2: a},
    })


def sigma_matrix() -> CoreMatrix:
    return CoreMatrix(tables.SIGMA)


@dataclass(frozen=True)
class OperatorSet:
    eta: CoreMatrix
    eta_inv: CoreMatrix
    sigma: CoreMatrix
    zg_l: CoreMatrix
    cz_l: CoreMatrix
    cz_jp: CoreMatrix
    cz_jm: CoreMatrix
    cz_mi: CoreMatrix
    sl2_class: Scalar = field(default=SL2)

    @classmethod
    def from_tables(cls, **overrides: CoreMatrix) -> OperatorSet:
        """Assemble from the transcribed tables.

        Keyword overrides replace a transcribed matrix before anything is
        derived from it (used for fault injection). The reduced genus tube is
        always computed as ``zg_l @ eta_inv``.
        """
        mats = {
            "eta": eta_matrix(),
            "eta_inv": eta_inverse_closed_form(),
            "sigma": sigma_matrix(),
            "zg_l": _scaled(tables.ZG_L_PREFACTOR, tables.ZG_L),
            "cz_jp": _scaled(tables.CZ_JPLUS_PREFACTOR, tables.CZ_JPLUS),
            "cz_jm": _scaled(tables.CZ_JMINUS_PREFACTOR, tables.CZ_JMINUS),
            "cz_mi": _scaled(tables.CZ_MINUS_ID_PREFACTOR, tables.CZ_MINUS_ID),
        }
        unknown = set(overrides) - set(mats)
        if unknown:
            raise TypeError(f"unknown operator overrides: {sorted(unknown)}")
        mats.update(overrides)
        cz_l = mats["zg_l"] @ mats["eta_inv"]
        return cls(cz_l=cz_l, **mats)

    def tube(self, kind: TubeKind) -> CoreMatrix:
        return {
            TubeKind.GENUS: self.cz_l,
            TubeKind.JPLUS: self.cz_jp,
            TubeKind.JMINUS: self.cz_jm,
            TubeKind.MINUS_ID: self.cz_mi,
        }[kind]

    def tubes(self) -> dict[TubeKind, CoreMatrix]:
        return {k: self.tube(k) for k in TubeKind}

    def by_name(self, name: str) -> CoreMatrix:
        """Lookup by the short names used on the command line."""
        table = {
            "l": self.cz_l, "jp": self.cz_jp, "jm": self.cz_jm, "mi": self.cz_mi,
            "eta": self.eta, "eta-inv": self.eta_inv, "sigma": self.sigma, "zg-l": self.zg_l,
        }
        try:
            return table[name]
        except KeyError:
            raise KeyError(f"unknown operator {name!r}; choose from {', '.join(table)}") from None


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            out.append(f"{tag} {c.name}" + (f": {c.detail}" if c.detail else ""))
        return out


def _compare(name: str, lhs: CoreMatrix, rhs: CoreMatrix) -> IdentityCheck:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return IdentityCheck(name, True)
    i, j, a, b = diff
    return IdentityCheck(
        name, False,
        f"first differing entry ({Basis(i).name}, {Basis(j).name}): {a} != {b}",
    )


def verify_operator_identities(ops: OperatorSet | None = None) -> IdentityReport:
    ops = ops or operators(check=False)
    c = ops.sl2_class
    ident = CoreMatrix.identity()
    checks = [
        _compare("eta*eta_inv = I", ops.eta @ ops.eta_inv, ident),
        _compare("sigma^2 = I", ops.sigma @ ops.sigma, ident),
        _compare("cz_mi^2 = (q^3-q)^2 I", ops.cz_mi @ ops.cz_mi, (c * c) * ident),
        _compare("cz_mi*cz_jm = (q^3-q) cz_jp", ops.cz_mi @ ops.cz_jm, c * ops.cz_jp),
        _compare("cz_jm = sigma*cz_jp", ops.cz_jm, ops.sigma @ ops.cz_jp),
    ]
    tubes = list(ops.tubes().items())
    for n, (ka, a) in enumerate(tubes):
        for kb, b in tubes[n + 1:]:
            checks.append(_compare(f"[{ka.value}, {kb.value}] = 0", a @ b, b @ a))
    bad = [
        (name, i, j, x)
        for name in ("eta", "eta_inv", "sigma", "zg_l", "cz_l", "cz_jp", "cz_jm", "cz_mi")
        for i, j, x in getattr(ops, name).entries()
        if not x.is_localized()
    ]
    if bad:
        name, i, j, x = bad[0]
        checks.append(IdentityCheck(
            "entries localized", False,
            f"{name} ({Basis(i).name}, {Basis(j).name}) = {x} has a denominator outside q, q-1, q+1",
        ))
    else:
        checks.append(IdentityCheck("entries localized", True))
    return IdentityReport(tuple(checks))


ANCHORS = (
    ("cz_jp", Basis.Tp, Basis.T1, SL2 * (q**2 - 1)),
    ("zg_l", Basis.T1, Basis.T1, SL2**2 * (q + 4)),
    ("zg_l", Basis.S2Sm2, Basis.T1, SL2**2 * q),
)


def check_anchors(ops: OperatorSet) -> IdentityReport:
    """Pin the column-as-image orientation, and cross-check eta^-1 by elimination."""
    checks = []
    for name, i, j, want in ANCHORS:
        got = getattr(ops, name)[i, j]
        checks.append(IdentityCheck(
            f"anchor {name}({i.name}, {j.name})", got == want,
            "" if got == want else f"{got} != {want}",
        ))
    try:
        eliminated = ops.eta.inverse()
    except SingularMatrixError as exc:
        checks.append(IdentityCheck("eta_inv matches elimination", False, str(exc)))
    else:
        checks.append(_compare("eta_inv matches elimination", ops.eta_inv, eliminated))
    checks.append(_compare("cz_mi = (q^3-q) sigma", ops.cz_mi, ops.sl2_class * ops.sigma))
    return IdentityReport(tuple(checks))


@functools.lru_cache(maxsize=2)
def operators(check: bool = True) -> OperatorSet:
    """The shipped operator set, built once. With ``check``, anchors must hold."""
    ops = OperatorSet.from_tables()
    if check:
        report = check_anchors(ops)
        if not report.passed:
            raise InvariantError("operator anchors failed: " + "; ".join(report.lines()))
    return ops


def tube_matrix(kind: TubeKind) -> CoreMatrix:
    return operators().tube(kind)


def disc_in() -> CoreVector:
    return CoreVector.basis(Basis.T1)


def disc_out_coeff(v: CoreVector) -> Scalar:
    return v[Basis.T1]
