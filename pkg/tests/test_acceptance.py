"""Acceptance suite: eleven end-to-end checks covering the exact closed
forms, the numeric continuation, the truncated oracles, the q-series
identities, and the restricted Euler products.

Each test prints one [PASS]/[FAIL] line (visible with pytest -s) and then
asserts, so the suite reads as a checklist.  Tolerances and time budgets
are pinned in the assertions themselves.
"""

import math
import random
import time
from fractions import Fraction

from pzeta.exact import (
    partition_zeta_exact,
    zeta2_family_coefficient,
    zeta_even_exact,
)
from pzeta.numeric import (
    ProductForm,
    direct_sum_truncated,
    euler_product_eval,
    partition_zeta_family,
    pole_order_estimate,
    riemann_zeta,
    truncation_error_estimate,
)
from pzeta.qseries import (
    faa_di_bruno_check,
    macmahon_exact_identity,
    macmahon_lhs,
    macmahon_rhs,
    restricted_genfun_coeffs,
)


def _report(num: int, description: str, ok: bool) -> None:
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] acceptance {num:02d}: {description}")
    assert ok, f"acceptance {num:02d} failed: {description}"


def test_criterion_01_closed_form_at_two():
    # zeta_P({2}^k) == (2^(2k-1)-1)/2^(2k-2) * zeta(2k), exactly, k = 1..20.
    start = time.perf_counter()
    ok = all(
        partition_zeta_exact(1, k) == zeta2_family_coefficient(k) * zeta_even_exact(2 * k)
        for k in range(1, 21)
    )
    elapsed = time.perf_counter() - start
    _report(1, f"s=2 closed form, exact PiPower equality, k<=20 ({elapsed:.2f}s)",
            ok and elapsed < 5.0)


def test_criterion_02_even_argument_structure():
    # zeta_P({2m}^k) is always pi^(2mk) times a positive reduced rational.
    start = time.perf_counter()
    ok = True
    for m in range(1, 6):
        for k in range(0, 9):
            value = partition_zeta_exact(m, k)
            ok = ok and value.exponent == 2 * m * k and value.coeff > 0
            ok = ok and math.gcd(value.coeff.numerator, value.coeff.denominator) == 1
    elapsed = time.perf_counter() - start
    _report(2, f"pi-power structure at even arguments, m<=5 k<=8 ({elapsed:.2f}s)",
            ok and elapsed < 10.0)


def test_criterion_03_continuation_matches_truncated_sums():
    # The analytic continuation agrees with the direct bounded-part sums
    # within the reported tail estimate, after growing the bound until the
    # estimate drops below 1e-4.
    start = time.perf_counter()
    ok = True
    for s in (2, 3, 2.5 + 1j):
        for k in range(1, 6):
            max_part = 1000
            while truncation_error_estimate(s, k, max_part) >= 1e-4:
                max_part *= 2
            oracle = direct_sum_truncated(s, k, max_part)
            target = partition_zeta_family(s, k)
            ok = ok and abs(target.value - oracle.value) <= oracle.est_error + 1e-9
    elapsed = time.perf_counter() - start
    _report(3, f"continuation vs truncated oracle, 3 points x k<=5 ({elapsed:.2f}s)",
            ok and elapsed < 60.0)


def test_criterion_04_pole_orders():
    # The pole at s = 1/j has order floor(k/j), recovered numerically.
    start = time.perf_counter()
    ok = all(
        pole_order_estimate(k, j) == k // j
        for k in range(1, 6)
        for j in range(1, k + 1)
    )
    elapsed = time.perf_counter() - start
    _report(4, f"pole order floor(k/j) for all j<=k<=5 ({elapsed:.2f}s)",
            ok and elapsed < 10.0)


def test_criterion_05_zeros_at_negative_even_arguments():
    ok = all(
        abs(partition_zeta_family(s, k).value) < 1e-9
        for s in (-2, -4, -6)
        for k in range(1, 6)
    )
    _report(5, "vanishing at negative even arguments, k<=5", ok)


def test_criterion_06_no_zero_inherited_at_first_critical_zero():
    rho = 0.5 + 14.134725j
    ok = all(abs(partition_zeta_family(rho, k).value) > 1e-3 for k in (2, 3))
    _report(6, "non-vanishing at the first critical-line zeta zero, k=2,3", ok)


def test_criterion_07_partial_fraction_identity():
    start = time.perf_counter()
    ok = all(macmahon_exact_identity(k) for k in range(1, 13))
    for k in range(1, 11):
        order = 2 * k + 10
        ok = ok and macmahon_lhs(k, order) == macmahon_rhs(k, order)
    elapsed = time.perf_counter() - start
    _report(7, f"partial fractions: exact k<=12, series k<=10 ({elapsed:.2f}s)",
            ok and elapsed < 30.0)


def test_criterion_08_exponential_partition_identity():
    start = time.perf_counter()
    order = 15
    ok = faa_di_bruno_check([Fraction(1, j) for j in range(1, order + 1)], order)
    ok = ok and faa_di_bruno_check([1], order)
    rng = random.Random(90210)
    for _ in range(100):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order)]
        ok = ok and faa_di_bruno_check(coeffs, order)
    elapsed = time.perf_counter() - start
    _report(8, f"exponential identity: 2 fixed + 100 random at order 15 ({elapsed:.2f}s)",
            ok and elapsed < 10.0)


def test_criterion_09_restricted_euler_products():
    n_factors = 10**6
    targets = [
        (ProductForm.subset_parts(lambda n: n % 2 == 0), 2, math.pi / 2, "even parts"),
        (ProductForm.distinct_parts(), 2, math.sinh(math.pi) / math.pi, "distinct parts"),
        (ProductForm.parts_not_one(), 3,
         3 * math.pi / math.cosh(math.pi * math.sqrt(3) / 2), "parts >= 2 at s=3"),
    ]
    ok = True
    worst = 0.0
    start = time.perf_counter()
    for form, s, want, _label in targets:
        t0 = time.perf_counter()
        got = euler_product_eval(form, s, n_factors)
        ok = ok and time.perf_counter() - t0 < 30.0
        err = abs(got.value - want)
        worst = max(worst, err)
        ok = ok and err < 1e-6
    elapsed = time.perf_counter() - start
    _report(9, f"three product closed forms at 1e6 factors, worst {worst:.1e} ({elapsed:.2f}s)",
            ok)


def test_criterion_10_zeta_continuation_values():
    ok = abs(riemann_zeta(0).value - (-0.5)) <= 1e-12
    ok = ok and abs(riemann_zeta(-2).value) <= 1e-12
    for m in range(1, 11):
        want = zeta_even_exact(2 * m).to_float()
        ok = ok and abs(riemann_zeta(2 * m).value - want) <= 1e-12 * abs(want)
    _report(10, "zeta at 0, -2, and even arguments m<=10", ok)


def test_criterion_11_generating_function_cross_check():
    # z-expansion of the bounded-part product vs the direct truncated sums.
    ok = True
    for s in (2, 3):
        for max_part in (10, 50, 100):
            coeffs = restricted_genfun_coeffs(s, max_part, 5)
            for k in range(1, 6):
                want = direct_sum_truncated(s, k, max_part).value
                ok = ok and abs(coeffs[k] - want) <= 1e-12
    _report(11, "generating-function coefficients vs direct sums, k<=5 M<=100", ok)
