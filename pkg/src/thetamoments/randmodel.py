"""Steinhaus random multiplicative model for theta values.

A sample assigns each prime p <= N an independent angle uniform on [0, 2 pi)
and extends completely multiplicatively: f(p^j m) = f(p)^j f(m), |f(n)| = 1.
model_theta replaces chi by f in the theta series, keeping the weights
w_n = n^eta e^{-pi n^2 / q} and the theta module's truncation rule, so the
model second moment is exactly sum w_n^2 (Steinhaus orthonormality) and
higher moments probe the conjectured q^{k/2} (log q)^{(k-1)^2} growth without
any character arithmetic.

Randomness is numpy's default PCG64 generator; a sample is fully determined
by (N, seed), and Monte-Carlo runs derive per-sample seeds as seed + index,
so estimates are bit-identical for any worker count.  k >= 2 powers are
heavy-tailed, so the estimate record carries a median-of-means value
alongside the plain mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numtheory import PrimeTable, sieve
from .summation import chunked_sum, parallel_map
from .theta import truncation_length

__all__ = [
    "SteinhausSample",
    "ModelMomentEstimate",
    "sample",
    "model_theta",
    "model_moment",
]


@dataclass(frozen=True)
class SteinhausSample:
    """Unit-modulus completely multiplicative f on 1..N, from one seed."""

    n: int
    seed: int
    primes: np.ndarray
    prime_values: np.ndarray
    values: np.ndarray  # values[m] = f(m) for m = 1..N; values[0] = 0

    def value(self, m: int) -> complex:
        if not 1 <= m <= self.n:
            raise DomainError(f"n = {m} outside sample support 1..{self.n}")
        return complex(self.values[m])


def sample(n: int, seed: int, table: PrimeTable | None = None) -> SteinhausSample:
    """Draw one Steinhaus sample on 1..N, deterministic in (N, seed)."""
    if n < 2:
        raise DomainError("sample support must be >= 2")
    if table is None or table.limit < n:
        table = sieve(n)
    primes = table.primes_in(2, n)
    rng = np.random.default_rng(seed)
    angles = rng.uniform(0.0, 2 * math.pi, size=len(primes))
    # additive angle table: arg f(m) = sum_p v_p(m) angle_p
    acc = np.zeros(n + 1)
    for p, a in zip(primes, angles):
        pj = int(p)
        while pj <= n:
            acc[pj::pj] += a
            pj *= int(p)
    values = np.exp(1j * acc)
    values[0] = 0.0
    return SteinhausSample(n=n, seed=seed, primes=primes,
                           prime_values=np.exp(1j * angles), values=values)


def _weights(q: int, eta: int, n: int) -> np.ndarray:
    m = np.arange(1, n + 1, dtype=float)
    w = np.exp(-math.pi / q * m ** 2)
    return w * m if eta else w


def model_theta(q: int, s: SteinhausSample, eta: int = 0, eps: float = 1e-12) -> complex:
    """sum_n f(n) n^eta e^{-pi n^2 / q}, truncated per the theta rule."""
    if eta not in (0, 1):
        raise DomainError("eta must be 0 or 1")
    n = truncation_length(q, 1.0, eta, eps)
    if s.n < n:
        raise DomainError(f"sample support {s.n} below truncation length {n}")
    w = _weights(q, eta, n)
    return complex(chunked_sum(s.values[1:n + 1] * w))


@dataclass(frozen=True)
class ModelMomentEstimate:
    """Monte-Carlo estimate of E |sum f(n) w_n|^{2k} with its normalization."""

    q: int
    k: int
    eta: int
    samples: int
    seed: int
    estimate: float        # plain mean of |model_theta|^{2k}
    std_error: float
    median_of_means: float
    normalization: float   # q^{k/2} (log q)^{(k-1)^2}
    ratio: float
    weights: np.ndarray

    @property
    def sum_w2(self) -> float:
        """Exact E of the second moment; the k = 1 target."""
        return float(np.sum(self.weights ** 2))


def model_moment(q: int, k: int, samples: int, seed: int, eps: float = 1e-12,
                 eta: int = 0, workers: int = 1) -> ModelMomentEstimate:
    """Estimate E |model_theta|^{2k} from `samples` independent samples."""
    if q < 3:
        raise DomainError("model_moment requires q >= 3")
    if k < 1:
        raise DomainError("k must be >= 1")
    if samples < 100:
        raise DomainError("at least 100 samples required")
    n = truncation_length(q, 1.0, eta, eps)
    table = sieve(max(n, 2))
    w = _weights(q, eta, n)

    def one(i: int) -> float:
        s = sample(max(n, 2), seed + i, table=table)
        return abs(complex(chunked_sum(s.values[1:n + 1] * w))) ** (2 * k)

    powers = np.array(parallel_map(one, range(samples), workers))
    mean = float(chunked_sum(powers)) / samples
    std = float(np.sqrt(chunked_sum((powers - mean) ** 2) / (samples - 1)))
    se = std / math.sqrt(samples)
    buckets = max(4, min(20, samples // 25))
    mom = float(np.median([float(np.mean(b)) for b in np.array_split(powers, buckets)]))
    norm = q ** (k / 2) * math.log(q) ** ((k - 1) ** 2)
    return ModelMomentEstimate(
        q=q, k=k, eta=eta, samples=samples, seed=seed, estimate=mean,
        std_error=se, median_of_means=mom, normalization=norm,
        ratio=mean / norm, weights=w)
