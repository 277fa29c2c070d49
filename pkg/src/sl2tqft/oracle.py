"""Finite-field point counting in SL(2, F_p).

Counts tuples ``(A_1, B_1, ..., A_g, B_g, C_1, ..., C_s)`` with
``prod [A_i, B_i] * prod C_j = 1`` and each ``C_j`` in its prescribed subset,
by convolving integer class functions on the group. The result is compared
with the virtual class evaluated at ``q = p``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .surface import PunctureKind, SurfaceSpec, evaluate_tqft

__all__ = [
    "GroupTable",
    "ClassFunction",
    "build_group",
    "commutator_distribution",
    "convolve",
    "delta",
    "puncture_indicator",
    "count_solutions",
    "count_solutions_brute",
    "CrossCheck",
    "cross_check",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@dataclass(frozen=True, eq=False)
class GroupTable:
    """SL(2, F_p) with elements indexed 0..n-1.

    ``elements[i]`` is ``(a, b, c, d)`` for the matrix ``[[a, b], [c, d]]``.
    """

    p: int
    elements: np.ndarray  # (n, 4)
    mul: np.ndarray  # (n, n): mul[i, j] = index of elements[i] @ elements[j]
    inv: np.ndarray  # (n,)
    trace: np.ndarray  # (n,) values in 0..p-1
    id_index: int
    neg_id_index: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, a: int, b: int, c: int, d: int) -> int:
        p = self.p
        hits = np.flatnonzero(
            (self.elements == np.array([a % p, b % p, c % p, d % p])).all(axis=1)
        )
        if not len(hits):
            raise KeyError(f"({a}, {b}, {c}, {d}) is not in SL(2, F_{p})")
        return int(hits[0])


@functools.lru_cache(maxsize=8)
def build_group(p: int) -> GroupTable:
    if not isinstance(p, int) or p < 3 or not _is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")
    grid = np.stack(np.meshgrid(*[np.arange(p)] * 4, indexing="ij"), -1).reshape(-1, 4)
    det = (grid[:, 0] * grid[:, 3] - grid[:, 1] * grid[:, 2]) % p
    els = grid[det == 1]
    n = len(els)

    # Lookup from the base-p code of (a, b, c, d) to element index.
    weights = np.array([p**3, p**2, p, 1])
    lookup = np.full(p**4, -1, dtype=np.int64)
    lookup[els @ weights] = np.arange(n)

    a, b, c, d = (els[:, k] for k in range(4))
    ra, rb, rc, rd = (x[:, None] for x in (a, b, c, d))
    prod = np.stack([
        (ra * a + rb * c) % p,
        (ra * b + rb * d) % p,
        (rc * a + rd * c) % p,
        (rc * b + rd * d) % p,
    ], -1)
    mul = lookup[prod @ weights]
    inv = lookup[np.stack([d, (-b) % p, (-c) % p, a], -1) @ weights]
    trace = (a + d) % p
    id_index = int(lookup[np.array([1, 0, 0, 1]) @ weights])
    neg_id_index = int(lookup[np.array([p - 1, 0, 0, p - 1]) @ weights])
    els.setflags(write=False)
    mul.setflags(write=False)
    inv.setflags(write=False)
    trace.setflags(write=False)
    return GroupTable(p, els, mul, inv, trace, id_index, neg_id_index)


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """Integer-valued function on group elements (int64 or Python-int object array)."""

    values: np.ndarray

    def __getitem__(self, i: int) -> int:
        return int(self.values[i])

    def total(self) -> int:
        return int(sum(int(x) for x in self.values))

    def support_size(self) -> int:
        return int(np.count_nonzero(self.values))

    def is_class_function(self, t: GroupTable) -> bool:
        """Constant on conjugacy classes (checked against every conjugator)."""
        v = self.values
        for g in range(t.order):
            conj = t.mul[t.mul[g], t.inv[g]]  # g x g^-1 for every x
            if not np.array_equal(v[conj], v):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return len(self.values) == len(other.values) and all(
            int(a) == int(b) for a, b in zip(self.values, other.values)
        )


def delta(t: GroupTable, index: int) -> ClassFunction:
    v = np.zeros(t.order, dtype=np.int64)
    v[index] = 1
    return ClassFunction(v)


@functools.lru_cache(maxsize=8)
def _commutators(p: int) -> ClassFunction:
    t = build_group(p)
    n = t.order
    counts = np.zeros(n, dtype=np.int64)
    b = np.arange(n)
    for a in range(n):
        aba = t.mul[t.mul[a, b], t.inv[a]]
        counts += np.bincount(t.mul[aba, t.inv[b]], minlength=n)
    counts.setflags(write=False)
    return ClassFunction(counts)


def commutator_distribution(t: GroupTable) -> ClassFunction:
    """N(x) = #{(A, B) : A B A^-1 B^-1 = x}."""
    return _commutators(t.p)


_INT64_SAFE = 2**62


def convolve(f: ClassFunction, g: ClassFunction, t: GroupTable) -> ClassFunction:
    """(f * g)(x) = sum_y f(y) g(y^-1 x), in exact integers."""
    fv, gv = f.values, g.values
    bound = _bound(fv) * _bound(gv)
    dtype = np.int64 if bound < _INT64_SAFE else object
    fv = fv.astype(dtype)
    gv = gv.astype(dtype)
    out = np.zeros(t.order, dtype=dtype)
    for y in np.flatnonzero(fv):
        # x = y z ranges over mul[y]; each row of mul is a permutation.
        out[t.mul[y]] += fv[y] * gv
    return ClassFunction(out)


def _bound(v: np.ndarray) -> int:
    return max(1, sum(abs(int(x)) for x in v))


def puncture_indicator(kind: PunctureKind, t: GroupTable) -> ClassFunction:
    """Indicator of the trace level set: tr = 2 minus Id, tr = -2 minus -Id, or {-Id}."""
    p = t.p
    kind = PunctureKind(kind)
    v = np.zeros(t.order, dtype=np.int64)
    if kind is PunctureKind.MINUS_ID:
        v[t.neg_id_index] = 1
    elif kind is PunctureKind.JPLUS:
        v[t.trace == 2 % p] = 1
        v[t.id_index] = 0
    else:
        v[t.trace == (-2) % p] = 1
        v[t.neg_id_index] = 0
    return ClassFunction(v)


def relation_distribution(spec: SurfaceSpec, t: GroupTable) -> ClassFunction:
    """Distribution of the relation word prod [A_i, B_i] prod C_j over all admissible tuples."""
    f = delta(t, t.id_index)
    if spec.genus:
        n1 = commutator_distribution(t)
        for _ in range(spec.genus):
            f = convolve(f, n1, t)
    for kind in spec.punctures():
        f = convolve(f, puncture_indicator(kind, t), t)
    return f


def count_solutions(spec: SurfaceSpec, p: int) -> int:
    t = build_group(p)
    return relation_distribution(spec, t)[t.id_index]


def count_solutions_brute(spec: SurfaceSpec, p: int) -> int:
    """Direct enumeration over tuples; only for genus <= 1 and a couple of punctures."""
    t = build_group(p)
    if spec.genus > 1 or spec.s > 2:
        raise ValueError("brute-force enumeration is limited to genus <= 1 and s <= 2")
    n = t.order
    supports = [np.flatnonzero(puncture_indicator(k, t).values) for k in spec.punctures()]
    if spec.genus:
        a = np.repeat(np.arange(n), n)
        b = np.tile(np.arange(n), n)
        words = t.mul[t.mul[t.mul[a, b], t.inv[a]], t.inv[b]]
    else:
        words = np.array([t.id_index])
    for supp in supports:
        words = t.mul[np.repeat(words, len(supp)), np.tile(supp, len(words))]
    return int(np.count_nonzero(words == t.id_index))


@dataclass(frozen=True)
class CrossCheck:
    spec: SurfaceSpec
    p: int
    count: int
    polynomial_value: Fraction

    @property
    def passed(self) -> bool:
        return self.polynomial_value.denominator == 1 and self.polynomial_value == self.count


def cross_check(spec: SurfaceSpec, p: int) -> CrossCheck:
    value = evaluate_tqft(spec).eval_at(p)
    return CrossCheck(spec, p, count_solutions(spec, p), value)
