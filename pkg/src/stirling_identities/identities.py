"""Both sides of each identity, evaluated exactly, plus exhaustive sweeps.

Notation in comments: C(n,k) binomial, [n,k] unsigned first kind, {n,k} second
kind. Every sum runs over 0..n and leans on zero-extension of the tables;
``trimmed=True`` starts at the first index that can contribute instead, which
tests use to confirm the skipped terms really are zero.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable

from .errors import ResourceLimitError
from .exact_numbers import TriangleFamily, TriangleTable, build_triangle, cached_table

MAX_SWEEP_N = 200


class IdentityId(str, Enum):
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"
    I6 = "I6"
    ORTHO7 = "ORTHO7"
    ORTHO7P = "ORTHO7P"
    ADD9 = "ADD9"
    ADD10 = "ADD10"


ALL_IDENTITIES = tuple(IdentityId)

ORTHO_VARIANTS = ("eq7_first", "eq7_second", "eq7prime_first", "eq7prime_second")


@dataclass(frozen=True)
class Tables:
    """The three triangles an evaluation reads from."""

    binom: TriangleTable
    first: TriangleTable
    second: TriangleTable

    @property
    def n_max(self) -> int:
        return min(self.binom.n_max, self.first.n_max, self.second.n_max)

    @classmethod
    def build(cls, n_max: int) -> Tables:
        return cls(
            build_triangle(TriangleFamily.BINOMIAL, n_max),
            build_triangle(TriangleFamily.STIRLING_FIRST_UNSIGNED, n_max),
            build_triangle(TriangleFamily.STIRLING_SECOND, n_max),
        )

    @classmethod
    def shared(cls, n_max: int) -> Tables:
        return cls(
            cached_table(TriangleFamily.BINOMIAL, n_max),
            cached_table(TriangleFamily.STIRLING_FIRST_UNSIGNED, n_max),
            cached_table(TriangleFamily.STIRLING_SECOND, n_max),
        )

    def table(self, family: TriangleFamily) -> TriangleTable:
        return {
            TriangleFamily.BINOMIAL: self.binom,
            TriangleFamily.STIRLING_FIRST_UNSIGNED: self.first,
            TriangleFamily.STIRLING_SECOND: self.second,
        }[TriangleFamily(family)]

    def perturbed(self, family: TriangleFamily, n: int, k: int, delta: int = 1) -> Tables:
        """Copy with entry (n, k) of one family shifted by ``delta``."""
        t = self.table(family)
        new = t.with_entry(n, k, t.entry(n, k) + delta)
        field = {
            TriangleFamily.BINOMIAL: "binom",
            TriangleFamily.STIRLING_FIRST_UNSIGNED: "first",
            TriangleFamily.STIRLING_SECOND: "second",
        }[TriangleFamily(family)]
        return replace(self, **{field: new})


@dataclass(frozen=True)
class SideValues:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class Counterexample:
    n: int
    p: int
    sides: SideValues
    variant: str | None = None


@dataclass(frozen=True)
class CheckReport:
    identity: IdentityId
    range_n_max: int
    status: str
    cases_checked: int
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _tables(tables: Tables | None, rows: int) -> Tables:
    if tables is None:
        return Tables.shared(rows)
    if tables.n_max < rows:
        raise ValueError(f"tables hold rows up to {tables.n_max}, need {rows}")
    return tables


def _require_p_le_n(n: int, p: int) -> None:
    if n < 0 or p < 0 or p > n:
        raise ValueError(f"need 0 <= p <= n, got n={n}, p={p}")


def _require_p_le_n_plus_1(n: int, p: int) -> None:
    if n < 0 or p < 0 or p > n + 1:
        raise ValueError(f"need 0 <= p <= n+1, got n={n}, p={p}")


def eval_identity_1(n: int, p: int, *, tables: Tables | None = None, trimmed: bool = False) -> SideValues:
    """sum_k [k,p] {n+1,k+1} (-1)^k  =  C(n,p) (-1)^p"""
    _require_p_le_n(n, p)
    t = _tables(tables, n + 1)
    lhs = sum(
        t.first(k, p) * t.second(n + 1, k + 1) * _sign(k)
        for k in range(p if trimmed else 0, n + 1)
    )
    return SideValues(lhs, t.binom(n, p) * _sign(p))


def eval_identity_2(n: int, p: int, *, tables: Tables | None = None, trimmed: bool = False) -> SideValues:
    """sum_k [k+1,p+1] {n,k} (-1)^k  =  C(n,p) (-1)^n"""
    _require_p_le_n(n, p)
    t = _tables(tables, n + 1)
    lhs = sum(
        t.first(k + 1, p + 1) * t.second(n, k) * _sign(k)
        for k in range(p if trimmed else 0, n + 1)
    )
    return SideValues(lhs, t.binom(n, p) * _sign(n))


def eval_identity_3(n: int, *, tables: Tables | None = None) -> SideValues:
    """sum_{j<=k<=n} [n,k] {k,j} C(n,j) (-1)^k  =  (-1)^n"""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    t = _tables(tables, n)
    lhs = 0
    for k in range(n + 1):
        inner = sum(t.second(k, j) * t.binom(n, j) for j in range(k + 1))
        lhs += t.first(n, k) * inner * _sign(k)
    return SideValues(lhs, _sign(n))


def eval_identity_4(n: int, *, tables: Tables | None = None) -> SideValues:
    """sum_{j<=k<=n} {n,k} [k,j] C(n,j) (-1)^k  =  (-1)^n"""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    t = _tables(tables, n)
    lhs = 0
    for k in range(n + 1):
        inner = sum(t.first(k, j) * t.binom(n, j) for j in range(k + 1))
        lhs += t.second(n, k) * inner * _sign(k)
    return SideValues(lhs, _sign(n))


def _rhs_5_6(n: int, p: int) -> int:
    return _sign(n) if p == n + 1 else 0


def eval_identity_5(n: int, p: int, *, tables: Tables | None = None, trimmed: bool = False) -> SideValues:
    """sum_{j<=k<=n} C(n,k) {k,j} [j+1,p] (-1)^j  =  (-1)^n [p = n+1]

    Only p <= n+1 is accepted; the region p > n+1 is left undefined.
    """
    _require_p_le_n_plus_1(n, p)
    t = _tables(tables, n + 1)
    j_lo = max(p - 1, 0) if trimmed else 0
    lhs = 0
    for k in range(j_lo, n + 1):
        inner = sum(t.second(k, j) * t.first(j + 1, p) * _sign(j) for j in range(j_lo, k + 1))
        lhs += t.binom(n, k) * inner
    return SideValues(lhs, _rhs_5_6(n, p))


def eval_identity_5_via_addition(n: int, p: int, *, tables: Tables | None = None) -> int:
    """Left side of identity 5 after collapsing the k-sum into {n+1,j+1}.

    sum_j {n+1,j+1} [j+1,p] (-1)^j; agrees with ``eval_identity_5(n, p).lhs``
    whenever the addition formula for {n+1,p+1} holds.
    """
    _require_p_le_n_plus_1(n, p)
    t = _tables(tables, n + 1)
    return sum(t.second(n + 1, j + 1) * t.first(j + 1, p) * _sign(j) for j in range(n + 1))


def eval_identity_6(n: int, p: int, *, tables: Tables | None = None, trimmed: bool = False) -> SideValues:
    """sum_{j<=k<=n} [n,k] C(k,j) {j+1,p} (-1)^j  =  (-1)^n [p = n+1]"""
    _require_p_le_n_plus_1(n, p)
    t = _tables(tables, n + 1)
    j_lo = max(p - 1, 0) if trimmed else 0
    lhs = 0
    for k in range(j_lo, n + 1):
        inner = sum(t.binom(k, j) * t.second(j + 1, p) * _sign(j) for j in range(j_lo, k + 1))
        lhs += t.first(n, k) * inner
    return SideValues(lhs, _rhs_5_6(n, p))


def eval_orthogonality(
    n: int, p: int, variant: str = "eq7_first", *, tables: Tables | None = None, trimmed: bool = False
) -> SideValues:
    """Orthogonality of the two Stirling triangles.

    eq7_first:        sum_k [n,k] {k,p} (-1)^(n-k) = [n = p]
    eq7_second:       sum_k {n,k} [k,p] (-1)^(n-k) = [n = p]
    eq7prime_first:   sum_k [n,k] {k,p} (-1)^k     = (-1)^n [n = p]
    eq7prime_second:  sum_k {n,k} [k,p] (-1)^k     = (-1)^n [n = p]
    """
    if variant not in ORTHO_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {ORTHO_VARIANTS}")
    _require_p_le_n(n, p)
    t = _tables(tables, n)
    outer, inner = (t.first, t.second) if variant.endswith("first") else (t.second, t.first)
    primed = variant.startswith("eq7prime")
    lhs = sum(
        outer(n, k) * inner(k, p) * _sign(k if primed else n - k)
        for k in range(p if trimmed else 0, n + 1)
    )
    delta = 1 if n == p else 0
    return SideValues(lhs, _sign(n) * delta if primed else delta)


def eval_addition_9(n: int, p: int, *, tables: Tables | None = None, trimmed: bool = False) -> SideValues:
    """{n+1,p+1}  =  sum_k C(n,k) {k,p}"""
    _require_p_le_n(n, p)
    t = _tables(tables, n + 1)
    rhs = sum(t.binom(n, k) * t.second(k, p) for k in range(p if trimmed else 0, n + 1))
    return SideValues(t.second(n + 1, p + 1), rhs)


def eval_addition_10(n: int, p: int, *, tables: Tables | None = None, trimmed: bool = False) -> SideValues:
    """[n+1,p+1]  =  sum_k [n,k] C(k,p)"""
    _require_p_le_n(n, p)
    t = _tables(tables, n + 1)
    rhs = sum(t.first(n, k) * t.binom(k, p) for k in range(p if trimmed else 0, n + 1))
    return SideValues(t.first(n + 1, p + 1), rhs)


def admissible_pairs(identity: IdentityId | str, n_max: int):
    """(n, p) pairs a sweep visits, in lexicographic order."""
    identity = IdentityId(identity)
    for n in range(n_max + 1):
        if identity in (IdentityId.I3, IdentityId.I4):
            yield n, 0
        elif identity in (IdentityId.I5, IdentityId.I6):
            for p in range(n + 2):
                yield n, p
        else:
            for p in range(n + 1):
                yield n, p


def _evaluators(identity: IdentityId, variant: str | None) -> list[tuple[str | None, Callable]]:
    simple = {
        IdentityId.I1: eval_identity_1,
        IdentityId.I2: eval_identity_2,
        IdentityId.I3: lambda n, p, tables: eval_identity_3(n, tables=tables),
        IdentityId.I4: lambda n, p, tables: eval_identity_4(n, tables=tables),
        IdentityId.I5: eval_identity_5,
        IdentityId.I6: eval_identity_6,
        IdentityId.ADD9: eval_addition_9,
        IdentityId.ADD10: eval_addition_10,
    }
    if identity in simple:
        if variant is not None:
            raise ValueError(f"{identity.value} takes no variant")
        return [(None, simple[identity])]
    family = ("eq7_first", "eq7_second") if identity is IdentityId.ORTHO7 else ("eq7prime_first", "eq7prime_second")
    if variant is not None:
        if variant not in family:
            raise ValueError(f"variant {variant!r} does not belong to {identity.value}")
        family = (variant,)
    return [
        (v, lambda n, p, tables, v=v: eval_orthogonality(n, p, v, tables=tables))
        for v in family
    ]


def sweep(
    identity: IdentityId | str,
    n_max: int,
    *,
    variant: str | None = None,
    tables: Tables | None = None,
    cap: int = MAX_SWEEP_N,
) -> CheckReport:
    """Check ``identity`` at every admissible (n, p) with n <= n_max.

    Stops at the first failure in (n, p) order. For ORTHO7/ORTHO7P each pair
    checks both variants (or just ``variant`` if given) and counts once.
    """
    identity = IdentityId(identity)
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > cap:
        raise ResourceLimitError(f"n_max={n_max} exceeds sweep cap {cap}")
    t = _tables(tables, n_max + 2)
    evaluators = _evaluators(identity, variant)
    cases = 0
    for n, p in admissible_pairs(identity, n_max):
        cases += 1
        for v, evaluate in evaluators:
            sides = evaluate(n, p, tables=t)
            if not sides.holds:
                return CheckReport(identity, n_max, "fail", cases, Counterexample(n, p, sides, v))
    return CheckReport(identity, n_max, "pass", cases)
