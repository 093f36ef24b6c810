"""
Truncated double series for densities, used as independent oracles.

    dens(a, d) = sum_{t = a mod d} sum_{v >= 1} mu(v) / [K_{vt,vt} : K]

Every term is bounded by D / (phi(v) phi(t) v^r t^r) with D = max C. With
tail(y) an upper bound for sum_{n > y} 1/(n^r phi(n)) (see reciprocal_tail)
the omitted part of a truncation at T is below D [tail (S + tail) + S tail],
S the partial sum up to T. For r = 1 and T = 5000 this is about 1.7e-3 D.
"""

import logging
from functools import lru_cache

import numpy as np
from mpmath import mpf

from indexdens.analytic.primezeta import artin_constant
from indexdens.core.arith import primes_up_to
from indexdens.core.errors import PreconditionError
from indexdens.core.values import BigRealValue
from indexdens.density.model import GENERIC_R1, DegreeModel

logger = logging.getLogger(__name__)

# zeta(2) zeta(3) / zeta(6) = sum over squarefree k of 1/(k phi(k)), rounded up
LANDAU_BOUND = 1.9435964368208
# sup over t of r(t) t phi(t) = prod_p (1 + 1/(p (p^2 - p - 1)))
ARTIN_RATIO_BOUND = 1.65
_FLOAT_SLACK = 2.0**-40


@lru_cache(maxsize=8)
def _arithmetic_tables(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """mu(n) and phi(n) for 0 <= n <= limit (index 0 unused)."""
    phi = np.arange(limit + 1, dtype=np.int64)
    mu = np.ones(limit + 1, dtype=np.int64)
    mu[0] = 0
    for p in primes_up_to(limit).tolist():
        phi[p::p] -= phi[p::p] // p
        mu[p::p] *= -1
        if p * p <= limit:
            mu[p * p :: p * p] = 0
    phi.flags.writeable = False
    mu.flags.writeable = False
    return mu, phi


@lru_cache(maxsize=64)
def reciprocal_tail(y: int, r: int) -> float:
    """
    Upper bound for sum_{n > y} 1/(n^r phi(n)).

    Writing n/phi(n) = sum_{k | n} mu(k)^2/phi(k) and using
    sum_{m > z} m^-(r+1) <= z^-(r+1) + z^-r / r for k <= y and zeta(r+1) <= 1 + 1/r
    for k > y gives

        y^-(r+1) Q + y^-r (P / r + (1 + 1/r) (L - P))

    with Q = sum_{k <= y} mu(k)^2/phi(k), P = sum_{k <= y} mu(k)^2/(k phi(k)) and
    L = LANDAU_BOUND. At y = 5000, r = 1 this is about 1.946 / y.

    Raises:
        PreconditionError: If y < 1 or r < 1
    """
    if y < 1 or r < 1:
        raise PreconditionError(f"reciprocal_tail needs y, r >= 1, got y={y}, r={r}")
    mu, phi = _arithmetic_tables(y)
    k = np.arange(1, y + 1, dtype=np.float64)
    inverse_phi = (mu[1:] != 0).astype(np.float64) / phi[1:].astype(np.float64)
    q = float(np.sum(inverse_phi))
    p = float(np.sum(inverse_phi / k))
    remainder = max(LANDAU_BOUND - p, 0.0) + _FLOAT_SLACK
    bound = float(y) ** -(r + 1) * q + float(y) ** -r * (p / r + (1.0 + 1.0 / r) * remainder)
    return bound * (1.0 + _FLOAT_SLACK)


def _partial_reciprocal_sum(limit: int, r: int) -> float:
    _, phi = _arithmetic_tables(limit)
    n = np.arange(1, limit + 1, dtype=np.float64)
    return float(np.sum(1.0 / (n**r * phi[1:].astype(np.float64))))


def _check_truncation(a: int, d: int, T: int) -> int:
    if d < 1:
        raise PreconditionError(f"Modulus must be positive, got {d}")
    if T < d:
        raise PreconditionError(f"Truncation T={T} must be at least d={d}")
    return a % d


def _class_members(a: int, d: int, T: int) -> np.ndarray:
    start = a if a > 0 else d
    return np.arange(start, T + 1, d, dtype=np.int64)


def _double_sum(
    ts: np.ndarray, v: np.ndarray, T: int, model: DegreeModel, v_mask: np.ndarray
) -> tuple[float, float]:
    """sum over t in ts, v with v_mask of mu(v)/[K_{vt,vt}:K]; returns (sum, sum of |terms|)."""
    mu, phi = _arithmetic_tables(T)
    r = model.rank
    c_lookup = np.zeros(model.n0 + 1, dtype=np.float64)
    for g, c in model.corrections:
        c_lookup[g] = c
    mu_v = mu[v].astype(np.float64) * v_mask
    phi_v = phi[v].astype(np.float64)
    v_float = v.astype(np.float64)
    total = 0.0
    magnitude = 0.0
    for t in ts.tolist():
        g = np.gcd(v, t)
        # phi(vt) = phi(v) phi(t) g / phi(g)
        phi_vt = phi_v * float(phi[t]) * g.astype(np.float64) / phi[g].astype(np.float64)
        vt = v_float * t
        corrections = c_lookup[np.gcd(v * t, model.n0)]
        terms = mu_v * corrections / (phi_vt * vt**r)
        total += float(np.sum(terms))
        magnitude += float(np.sum(np.abs(terms)))
    return total, magnitude


def _oracle_bound(model: DegreeModel, T: int, magnitude: float) -> mpf:
    r = model.rank
    largest = max(c for _, c in model.corrections)
    tail = reciprocal_tail(T, r)
    partial = _partial_reciprocal_sum(T, r)
    bound = largest * (tail * (partial + tail) + partial * tail)
    return mpf(bound) + mpf(magnitude) * _FLOAT_SLACK


def dens_series_oracle(a: int, d: int, model: DegreeModel, T: int) -> BigRealValue:
    """
    The double series for dens(a, d) truncated at t, v <= T, with its tail bound as radius.

    The radius is D [tail (S + tail) + S tail] plus float slack, D = max C:
    about 1.7e-3 D at r = 1 and T = 5000, and about 4.3e-3 D at T = 2000.

    Raises:
        PreconditionError: If d < 1 or T < d
    """
    a = _check_truncation(a, d, T)
    v = np.arange(1, T + 1, dtype=np.int64)
    total, magnitude = _double_sum(_class_members(a, d, T), v, T, model, np.ones(T))
    radius = _oracle_bound(model, T, magnitude)
    logger.debug(f"Series oracle for ({a}, {d}) at T={T}: {total:.12g}")
    return BigRealValue(mpf(total), radius, 53)


def rho_partial(delta: int, d1: int, a: int, d: int, T: int) -> BigRealValue:
    """
    rho restricted to v with gcd(v, d1) = delta:

        sum_{t = a mod d, t <= T} sum_{v <= T, gcd(v, d1) = delta} mu(v) / (v t phi(v t))

    Raises:
        PreconditionError: If delta does not divide d1, d < 1 or T < d
    """
    if delta < 1 or d1 < 1 or d1 % delta:
        raise PreconditionError(f"delta={delta} must divide d1={d1}")
    a = _check_truncation(a, d, T)
    v = np.arange(1, T + 1, dtype=np.int64)
    mask = (np.gcd(v, d1) == delta).astype(np.float64)
    total, magnitude = _double_sum(_class_members(a, d, T), v, T, GENERIC_R1, mask)
    return BigRealValue(mpf(total), _oracle_bound(GENERIC_R1, T, magnitude), 53)


def artin_ratio(t: int) -> float:
    """r(t) = t^-2 prod_{p | t} (p^2 - 1)/(p^2 - p - 1)."""
    value = 1.0 / (float(t) * t)
    for p in primes_up_to(t).tolist():
        if t % p == 0:
            value *= (p * p - 1) / (p * p - p - 1)
    return value


def rho_artin_series(a: int, d: int, T: int, precision: int = 64) -> BigRealValue:
    """
    A_1 * sum_{t = a mod d, t <= T} r(t), the generic rank-1 density summed by index.

    The omitted part is below A_1 * 1.65 * sum_{t > T} 1/(t phi(t)).
    """
    a = _check_truncation(a, d, T)
    ts = _class_members(a, d, T)
    _, phi = _arithmetic_tables(T)
    # r(t) = ratio(t) / (t phi(t)) with ratio(t) = prod_{p | t} (1 + 1/(p (p^2 - p - 1)))
    ratio = np.ones(T + 1, dtype=np.float64)
    for p in primes_up_to(T).tolist():
        ratio[p::p] *= 1.0 + 1.0 / (p * (p * p - p - 1.0))
    t_float = ts.astype(np.float64)
    terms = ratio[ts] / (t_float * phi[ts].astype(np.float64))
    partial = float(np.sum(terms))
    constant = artin_constant(1, precision)
    tail = ARTIN_RATIO_BOUND * reciprocal_tail(T, 1)
    scaled = constant * partial
    radius = scaled.radius + constant.value * (tail + partial * _FLOAT_SLACK)
    return BigRealValue(scaled.value, radius, scaled.precision)


def index_density_series(t: int, model: DegreeModel, T: int) -> BigRealValue:
    """
    Density of primes whose index is exactly t:

        sum_{v <= T} mu(v) / [K_{vt,vt} : K],  radius D tail(T) / (t^r phi(t)).

    Raises:
        PreconditionError: If t < 1 or T < 1
    """
    if t < 1 or T < 1:
        raise PreconditionError("t and T must be positive")
    limit = max(T, t)
    v = np.arange(1, T + 1, dtype=np.int64)
    _, phi = _arithmetic_tables(limit)
    total, magnitude = _double_sum(np.array([t]), v, limit, model, np.ones(T))
    largest = max(c for _, c in model.corrections)
    r = model.rank
    tail = largest * reciprocal_tail(T, r) / (float(t) ** r * float(phi[t]))
    return BigRealValue(mpf(total), mpf(tail) + mpf(magnitude) * _FLOAT_SLACK, 53)
