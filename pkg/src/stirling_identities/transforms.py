"""The Stirling inverse pair as transforms on finite integer sequences.

    a_n = sum_k [n,k] (-1)^(n-k) b_k    <=>    b_n = sum_k {n,k} a_k

Both matrices are lower triangular, so term n of the output depends only on
input terms 0..n and a finite prefix maps to a prefix of the same length.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact_numbers import binomial, stirling_first_signed, stirling_first_unsigned, stirling_second


def _check_nonempty(seq: Sequence[int]) -> None:
    if len(seq) == 0:
        raise ValueError("sequence must contain at least the term of index 0")


def stirling_first_signed_transform(b: Sequence[int]) -> list[int]:
    """a_n = sum_k s(n,k) b_k with s the signed first-kind numbers."""
    _check_nonempty(b)
    return [sum(stirling_first_signed(n, k) * b[k] for k in range(n + 1)) for n in range(len(b))]


def stirling_second_transform(a: Sequence[int]) -> list[int]:
    """b_n = sum_k {n,k} a_k."""
    _check_nonempty(a)
    return [sum(stirling_second(n, k) * a[k] for k in range(n + 1)) for n in range(len(a))]


def verify_inversion_roundtrip(s: Sequence[int]) -> bool:
    s = list(s)
    return (
        stirling_second_transform(stirling_first_signed_transform(s)) == s
        and stirling_first_signed_transform(stirling_second_transform(s)) == s
    )


@dataclass(frozen=True)
class ProofReplay:
    """Outcome of replaying the inversion argument for identity 2 at fixed p.

    ``a`` and ``b`` are the embedded sequences; ``transformed_b`` is the
    first-kind transform of b (step 1 compares it to a) and ``transformed_a``
    the second-kind transform of a (step 2 compares it to b). The
    ``*_first_failure`` fields hold the first index where a step breaks.
    """

    p: int
    n_max: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    transformed_b: tuple[int, ...]
    transformed_a: tuple[int, ...]
    step1_first_failure: int | None
    step2_first_failure: int | None

    @property
    def step1_passed(self) -> bool:
        return self.step1_first_failure is None

    @property
    def step2_passed(self) -> bool:
        return self.step2_first_failure is None

    @property
    def passed(self) -> bool:
        return self.step1_passed and self.step2_passed


def _first_mismatch(xs: Sequence[int], ys: Sequence[int]) -> int | None:
    return next((i for i, (x, y) in enumerate(zip(xs, ys)) if x != y), None)


def replay_proof_identity_2(p: int, n_max: int) -> ProofReplay:
    """Rebuild identity 2 from the first-kind addition formula by inversion.

    With b_k = (-1)^k C(k,p) and a_n = (-1)^n [n+1,p+1], the addition formula
    [n+1,p+1] = sum_k [n,k] C(k,p) says a is the signed first-kind transform
    of b (step 1). Inverting with the second-kind transform must give b back,
    and term n of that is exactly identity 2 (step 2).
    """
    if p < 0 or n_max < 0:
        raise ValueError(f"p and n_max must be nonnegative, got p={p}, n_max={n_max}")
    if p > n_max:
        raise ValueError(f"need p <= n_max, got p={p}, n_max={n_max}")
    sign = lambda e: -1 if e % 2 else 1  # noqa: E731
    b = tuple(sign(k) * binomial(k, p) for k in range(n_max + 1))
    a = tuple(sign(n) * stirling_first_unsigned(n + 1, p + 1) for n in range(n_max + 1))
    tb = tuple(stirling_first_signed_transform(b))
    ta = tuple(stirling_second_transform(a))
    return ProofReplay(p, n_max, a, b, tb, ta, _first_mismatch(tb, a), _first_mismatch(ta, b))
