"""Floating-point analytics on the complex plane.

Riemann zeta through Euler-Maclaurin summation (reflected by the functional
equation on the left half plane), fixed-length partition zeta values through
the explicit partition-sum formula, truncated direct sums over bounded
partitions, restricted Euler products, and a two-scale probe for pole orders.

All floating point is double precision.  Every evaluation returns an
EvalResult carrying a heuristic absolute error estimate; results whose
estimate exceeds PRECISION_LOSS_THRESHOLD are not returned but raised as
PrecisionLoss with the untrusted value attached.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DivergenceRegion,
    FitUnstable,
    InvalidForm,
    PoleAt1,
    PoleProximity,
    PrecisionLoss,
)
from .exact import bernoulli_numbers
from .partitions import enumerate_partitions_of_size

#: Half-width of the neighbourhood around a pole treated as "at the pole".
POLE_EXCLUSION_RADIUS = 1e-9
#: Heuristic error bound above which a result is refused.
PRECISION_LOSS_THRESHOLD = 1e-8
#: Default Euler-Maclaurin correction depth.
DEFAULT_CORRECTIONS = 12


@dataclass(frozen=True)
class EvalResult:
    """A complex value, a heuristic absolute error estimate, and the number
    of summation terms consumed producing it."""

    value: complex
    est_error: float
    terms_used: int

    def to_json(self) -> dict:
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "est_error": self.est_error,
            "terms_used": self.terms_used,
        }


def _finite(result: EvalResult) -> EvalResult:
    # NaN or infinity never escapes a public operation.
    v = result.value
    if not (math.isfinite(v.real) and math.isfinite(v.imag)) or not math.isfinite(result.est_error):
        raise PrecisionLoss("evaluation produced a non-finite value", partial=result)
    return result


def _trusted(result: EvalResult) -> EvalResult:
    # Zeta evaluations additionally refuse results whose heuristic error
    # bound exceeds the trust threshold.  Truncation-controlled operations
    # (direct sums, Euler products) do not: their est_error is a tail bound
    # the caller steers explicitly via the truncation parameter.
    _finite(result)
    if result.est_error > PRECISION_LOSS_THRESHOLD:
        raise PrecisionLoss(
            f"estimated error {result.est_error:.3e} exceeds {PRECISION_LOSS_THRESHOLD:.0e}",
            partial=result,
        )
    return result


def _sinpi(z: complex) -> complex:
    """sin(pi z) with exact argument reduction on the real part, so integer
    z gives exactly zero (plain cmath.sin(pi*z) leaves an absolute error
    around |z| * 1e-16, which Gamma factors then amplify)."""
    x, y = z.real, z.imag
    n = round(x)
    r = x - n  # exact for |x| < 2^52
    inner = cmath.sin(math.pi * complex(r, y))
    return inner if n % 2 == 0 else -inner


def _em_factors(count: int) -> list[float]:
    # B_{2r} / (2r)! as floats for r = 0..count-1 (index by r).
    bs = bernoulli_numbers(2 * count)
    return [float(bs[2 * r]) / math.factorial(2 * r) for r in range(count)]


def _zeta_euler_maclaurin(s: complex, n_terms: int | None, corrections: int | None) -> EvalResult:
    # Direct branch: partial sum to N-1 plus the integral, half-term and
    # Bernoulli corrections; the first omitted correction is the error
    # estimate.  Default N grows with |Im s| so the corrections stay small.
    n_cut = n_terms if n_terms is not None else max(20, 3 * math.ceil(2 + abs(s.imag)))
    depth = corrections if corrections is not None else DEFAULT_CORRECTIONS
    if n_cut < 2:
        raise ValueError("n_terms must be >= 2")
    if depth < 1:
        raise ValueError("corrections must be >= 1")
    partial = 0j
    for n in range(1, n_cut):
        partial += n ** (-s)
    value = partial + n_cut ** (1 - s) / (s - 1) + 0.5 * n_cut ** (-s)
    factors = _em_factors(depth + 2)
    poch = s  # running product (s)(s+1)...(s + 2r - 2)
    npow = n_cut ** (-s - 1)  # running power N^(1 - s - 2r)
    scale = 1.0 / (n_cut * n_cut)
    for r in range(1, depth + 1):
        value += factors[r] * poch * npow
        poch *= (s + 2 * r - 1) * (s + 2 * r)
        npow *= scale
    est = abs(factors[depth + 1] * poch * npow) + abs(value) * 1e-15
    return EvalResult(value, est, n_cut + depth)


# zeta'(0) = -log(2 pi) / 2, for the expansion of the reflected branch at 0.
_ZETA_PRIME_AT_0 = -0.9189385332046727


def _zeta_functional(s: complex, n_terms: int | None, corrections: int | None) -> EvalResult:
    # Reflected branch: zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s).
    if abs(s) < 1e-6:
        # At s = 0 the sin zero meets the zeta(1-s) pole; use the Taylor
        # expansion zeta(s) = -1/2 + zeta'(0) s + O(s^2) instead.
        value = -0.5 + _ZETA_PRIME_AT_0 * s
        return EvalResult(value, 2.0 * abs(s) ** 2 + 1e-16, 0)
    inner = _zeta_euler_maclaurin(1 - s, n_terms, corrections)
    prefactor = 2**s * math.pi ** (s - 1) * _sinpi(s / 2) * _gamma_lanczos(1 - s)
    value = prefactor * inner.value
    est = abs(prefactor) * inner.est_error + (1 + abs(value)) * 1e-14
    return EvalResult(value, est, inner.terms_used)


_LANCZOS_G = 7
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _gamma_lanczos(z: complex) -> complex:
    """Complex gamma function, Lanczos approximation (g=7, 9 coefficients),
    with reflection for Re(z) < 1/2."""
    if z.real < 0.5:
        return math.pi / (_sinpi(z) * _gamma_lanczos(1 - z))
    z = z - 1
    x = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        x += _LANCZOS_C[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x


def riemann_zeta(
    s: complex,
    method: str = "auto",
    n_terms: int | None = None,
    corrections: int | None = None,
) -> EvalResult:
    """Riemann zeta on the complex plane; the pole at s = 1 is excluded.

    Re(s) >= 1/2 is summed directly by Euler-Maclaurin with
    N = max(20, 3 ceil(2 + |Im s|)) terms and 12 Bernoulli corrections;
    Re(s) < 1/2 reflects through the functional equation.  ``method`` may
    force a branch ("euler_maclaurin" or "functional"); ``n_terms`` and
    ``corrections`` override the defaults.
    """
    s = complex(s)
    if abs(s - 1) < POLE_EXCLUSION_RADIUS:
        raise PoleAt1(f"s = {s} lies within {POLE_EXCLUSION_RADIUS} of the pole at s = 1")
    branch = method
    if branch == "auto":
        branch = "euler_maclaurin" if s.real >= 0.5 else "functional"
    if branch == "euler_maclaurin":
        return _trusted(_zeta_euler_maclaurin(s, n_terms, corrections))
    if branch == "functional":
        return _trusted(_zeta_functional(s, n_terms, corrections))
    raise ValueError(f"unknown method {method!r}")


def partition_zeta_family(s: complex, k: int) -> EvalResult:
    """Fixed-length partition zeta value: the sum of N(lambda)^(-s) over all
    partitions of length k, continued to the complex plane through

        sum over lambda of k of
        zeta(s)^{m_1} zeta(2s)^{m_2} ... zeta(ks)^{m_k} / (N(lambda) m_1!...m_k!).

    k = 0 returns exactly 1.  Rejects s within POLE_EXCLUSION_RADIUS of any
    pole s = 1/j, 1 <= j <= k, with PoleProximity naming the offending j.
    """
    s = complex(s)
    if k < 0:
        raise ValueError("k must be >= 0")
    for j in range(1, k + 1):
        if abs(s - 1 / j) < POLE_EXCLUSION_RADIUS:
            raise PoleProximity(j)
    if k == 0:
        return EvalResult(1 + 0j, 0.0, 0)
    zetas = {j: riemann_zeta(j * s) for j in range(1, k + 1)}
    total = 0j
    err = 0.0
    abs_sum = 0.0
    terms = sum(z.terms_used for z in zetas.values())
    for lam in enumerate_partitions_of_size(k):
        denom = lam.norm()
        v = 1 + 0j
        v_abs = 1.0
        v_hi = 1.0
        for j, mj in lam.multiplicities().items():
            zj = zetas[j]
            v *= zj.value**mj
            a = abs(zj.value)
            v_abs *= a**mj
            v_hi *= (a + zj.est_error) ** mj
            denom *= math.factorial(mj)
        total += v / denom
        # First-order propagation without dividing by possibly-zero factors.
        err += (v_hi - v_abs) / denom
        abs_sum += v_abs / denom
        terms += 1
    err += abs_sum * 1e-15
    return _finite(EvalResult(total, err, terms))


def direct_sum_truncated(s: complex, k: int, max_part: int) -> EvalResult:
    """Direct sum of N(lambda)^(-s) over the partitions with exactly k parts,
    all parts <= max_part.  Requires Re(s) > 1.

    The sum runs over the weakly decreasing k-tuples in [1, max_part],
    folded cumulatively over the largest part so the cost is k * max_part
    operations rather than the partition count; it never consults zeta or
    the partition-sum formula, so it stays an independent oracle (small
    cases are pinned against the explicit enumeration in the tests).

    est_error is the heuristic tail bound
    (sum_{n<=max_part} n^-sigma)^(k-1) * max_part^(1-sigma)/(sigma-1) with
    sigma = Re(s): the integral bound on the excluded largest parts times a
    crude bound on the remaining k-1 parts.
    """
    s = complex(s)
    if k < 1:
        raise ValueError("k must be >= 1")
    if max_part < 1:
        raise ValueError("max_part must be >= 1")
    sigma = s.real
    if sigma <= 1:
        raise DivergenceRegion(f"direct sum requires Re(s) > 1, got {sigma}")
    n = np.arange(1, max_part + 1, dtype=np.float64)
    w = n ** (-s)
    f = np.ones(max_part, dtype=np.complex128)
    for _ in range(k):
        f = np.cumsum(w * f)
    value = complex(f[-1])
    zeta_trunc = float(np.sum(n ** (-sigma)))
    tail = max_part ** (1 - sigma) / (sigma - 1)
    est = zeta_trunc ** (k - 1) * tail
    return _finite(EvalResult(value, est, k * max_part))


def truncation_error_estimate(s: complex, k: int, max_part: int) -> float:
    """The heuristic tail bound direct_sum_truncated would report, without
    computing the sum itself; useful for choosing max_part in advance."""
    sigma = complex(s).real
    if sigma <= 1:
        raise DivergenceRegion(f"direct sum requires Re(s) > 1, got {sigma}")
    if k < 1 or max_part < 1:
        raise ValueError("k and max_part must be >= 1")
    n = np.arange(1, max_part + 1, dtype=np.float64)
    zeta_trunc = float(np.sum(n ** (-sigma)))
    return zeta_trunc ** (k - 1) * max_part ** (1 - sigma) / (sigma - 1)


_PROBE_SCALES = (1e-3, 5e-4)


def pole_order_estimate(k: int, j: int) -> int:
    """Estimated order of the pole of the length-k value at s = 1/j.

    Probes the real axis just right of the pole at two scales: the growth
    exponent comes from log2 |f(1/j + eps) / f(1/j + 2 eps)|, and the two
    scales must round to the same integer, otherwise FitUnstable is raised.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 1 <= j <= k:
        raise ValueError("j must satisfy 1 <= j <= k")
    pole = 1.0 / j

    def probe(eps: float) -> float:
        far = partition_zeta_family(pole + 2 * eps, k).value
        near = partition_zeta_family(pole + eps, k).value
        return math.log(abs(far / near)) / math.log(0.5)

    estimates = [probe(eps) for eps in _PROBE_SCALES]
    rounded = [round(e) for e in estimates]
    if rounded[0] != rounded[1]:
        raise FitUnstable(
            f"two-scale pole-order estimates disagree at s = 1/{j}: {estimates}")
    return rounded[0]


@dataclass(frozen=True)
class ProductForm:
    """Which part values a restricted Euler product runs over.

    kind "subset": factor 1/(1 - n^-s) for every n admitted by the
    predicate (1 must not be admitted, or the product diverges);
    kind "not_one": every n >= 2;
    kind "distinct": factor (1 + n^-s) for every n >= 1, the product over
    partitions with pairwise distinct parts.
    """

    kind: str
    admits: Callable[[int], bool] | None = None

    @classmethod
    def subset_parts(cls, admits: Callable[[int], bool]) -> "ProductForm":
        if admits(1):
            raise InvalidForm("part 1 must not be admitted: its factor 1/(1-1^-s) diverges")
        return cls("subset", admits)

    @classmethod
    def parts_not_one(cls) -> "ProductForm":
        return cls("not_one")

    @classmethod
    def distinct_parts(cls) -> "ProductForm":
        return cls("distinct")


def _log1p_complex(x: np.ndarray) -> np.ndarray:
    # numpy's complex log1p is inaccurate for tiny arguments; switch to the
    # three-term series below 1e-4, where its truncation error is < 1e-16.
    out = np.empty_like(x)
    small = np.abs(x) < 1e-4
    xs = x[small]
    out[small] = xs * (1 - xs * (0.5 - xs / 3))
    out[~small] = np.log(1 + x[~small])
    return out


def euler_product_eval(form: ProductForm, s: complex, max_factor: int) -> EvalResult:
    """Evaluate a restricted Euler product over parts up to max_factor.

    Accumulates in the log domain and applies a first-order tail correction:
    the admitted density near the truncation point times the integral bound
    max_factor^(1-s)/(s-1).  Requires Re(s) > 1.
    """
    s = complex(s)
    sigma = s.real
    if sigma <= 1:
        raise DivergenceRegion(f"the product requires Re(s) > 1, got {sigma}")
    if max_factor < 1:
        raise ValueError("max_factor must be >= 1")
    n = np.arange(1, max_factor + 1)
    if form.kind == "distinct":
        mask = np.ones(max_factor, dtype=bool)
    elif form.kind == "not_one":
        mask = n >= 2
    elif form.kind == "subset":
        mask = np.fromiter(
            (bool(form.admits(int(v))) for v in n), dtype=bool, count=max_factor)
    else:
        raise ValueError(f"unknown product form kind {form.kind!r}")
    base = n[mask].astype(np.float64) ** (-s)
    if form.kind == "distinct":
        logs = _log1p_complex(base)
    else:
        logs = -_log1p_complex(-base)
    log_sum = complex(np.sum(logs))
    # Density of admitted parts over the top half of the range; the tail
    # correction extrapolates it past the truncation point (heuristic).
    window = mask[max_factor // 2 :]
    density = float(np.count_nonzero(window)) / len(window)
    tail = density * max_factor ** (1 - s) / (s - 1)
    value = cmath.exp(log_sum + tail)
    est = abs(value) * (
        density * (sigma * max_factor ** (-sigma)
                   + max_factor ** (1 - 2 * sigma) / (2 * sigma - 1))
        + 1e-13
    )
    return _finite(EvalResult(value, est, int(np.count_nonzero(mask))))
