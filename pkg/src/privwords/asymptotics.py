"""Dominant root, the constant R_Q, and the lower-bound harness.

For a pattern with correlation polynomial ``f`` over an alphabet of size
``q``, ``G_P(N)`` grows like ``R_Q * rho**N`` where ``rho`` is the zero of
``1 + (z - q) f(z)`` just below ``q``.  The gap ``q - rho`` is of order
``1 / f(q)`` and is computed directly, so it keeps full relative precision
even when ``f(q)`` is huge.  Everything that scales like ``rho**N`` or
``q**n`` is handled in natural-log form.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from functools import lru_cache

from .enumeration import count_privileged, list_privileged
from .errors import DegenerateRQ, NoDominantRoot
from .synccode import gp_sequence
from .words import CorrelationPolynomial, WordLike, as_word, correlation_polynomial

log = logging.getLogger(__name__)

ROOT_FLOOR = 1.7
RESIDUAL_TOL = 1e-12
RQ_DENOM_TOL = 1e-9
BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class RootResult:
    rho: float
    gap: float  # q - rho, to full relative precision
    residual: float
    iterations: int
    bracket: tuple[float, float]


def _g(f: CorrelationPolynomial, q: int, z: float) -> float:
    return 1.0 + (z - q) * f(z)


def dominant_root(f: CorrelationPolynomial, q: int, *, lower: float = ROOT_FLOOR) -> RootResult:
    """Zero of ``1 + (z - q) f(z)`` in ``[lower, q)``.

    Bisection on the sign change between ``lower`` and ``q`` (where the
    function equals 1), then Newton on the gap ``d = q - z`` using the
    rearranged equation ``d * f(q - d) = 1``.

    Raises
    ------
    NoDominantRoot
        If there is no sign change, i.e. the pattern is too short for the
        root to clear ``lower``.
    """
    if f.p < 2:
        raise ValueError("need a pattern of length >= 2")
    if _g(f, q, lower) >= 0:
        raise NoDominantRoot(
            f"1 + (z - {q}) f(z) has no sign change on [{lower}, {q}) for f = {f}"
        )
    lo, hi = lower, float(q)
    iterations = 0
    while hi - lo > 1e-3 * (q - lo) and iterations < 200:
        mid = 0.5 * (lo + hi)
        if _g(f, q, mid) < 0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    bracket = (lo, hi)

    d = q - 0.5 * (lo + hi)
    for _ in range(100):
        z = q - d
        h = d * f(z) - 1.0
        dh = f(z) - d * f.derivative(z)
        step = h / dh
        d_new = d - step
        iterations += 1
        if not (q - hi <= d_new <= q - lo):
            # Newton left the bracket; fall back to its midpoint.
            d_new = q - 0.5 * (lo + hi)
        if d_new == d or abs(step) <= 4e-16 * d:
            d = d_new
            break
        d = d_new
    rho = q - d
    residual = abs(1.0 - d * f(rho))
    if residual > RESIDUAL_TOL * max(1.0, f.exact(q)):
        raise NoDominantRoot(f"Newton did not converge (residual {residual:.3e})")
    return RootResult(rho, d, residual, iterations, bracket)


def _as_root(root: RootResult | float, q: int) -> tuple[float, float]:
    if isinstance(root, RootResult):
        return root.rho, root.gap
    return float(root), q - float(root)


def ln_r_q_constant(f: CorrelationPolynomial, q: int, root: RootResult | float) -> float:
    """Natural log of R_Q, where R_Q * rho = (q-rho)^2 rho^(p-1) / (1 - (q-rho)^2 f'(rho))."""
    rho, d = _as_root(root, q)
    denom = 1.0 - d * d * f.derivative(rho)
    if abs(denom) <= RQ_DENOM_TOL:
        raise DegenerateRQ(f"R_Q denominator {denom:.3e} is numerically zero")
    if denom < 0:
        raise DegenerateRQ(f"R_Q denominator {denom:.3e} is negative")
    return 2.0 * math.log(d) + (f.p - 2) * math.log(rho) - math.log(denom)


def r_q_constant(f: CorrelationPolynomial, q: int, root: RootResult | float) -> float:
    return math.exp(ln_r_q_constant(f, q, root))


@dataclass(frozen=True)
class AsymptoticEstimate:
    N: int
    ln_rho: float
    ln_RQ: float
    ln_estimate: float
    estimate: float | None  # None when exp(ln_estimate) overflows


def _exp_or_none(x: float) -> float | None:
    try:
        return math.exp(x)
    except OverflowError:
        return None


def gp_asymptotic(P: WordLike, N: int, q: int | None = None) -> AsymptoticEstimate:
    """``R_Q * rho**N``, the leading term of ``G_P(N)``."""
    P = as_word(P, q)
    f = correlation_polynomial(P)
    root = dominant_root(f, P.q)
    ln_rho = math.log1p(-root.gap / P.q) + math.log(P.q)
    ln_rq = ln_r_q_constant(f, P.q, root)
    ln_est = ln_rq + N * ln_rho
    return AsymptoticEstimate(N, ln_rho, ln_rq, ln_est, _exp_or_none(ln_est))


def ln_rho_expansion(f: CorrelationPolynomial, q: int) -> float:
    """ln q - 1/(q f) - f'/(q f^3) - 1/(2 q^2 f^2), with f and f' taken at q."""
    fq = f.exact(q)
    dfq = f.derivative_exact(q)
    return (
        math.log(q)
        - 1 / (q * fq)
        - dfq / (q * fq**3)
        - 1 / (2 * q * q * fq**2)
    )


def ln_rq_expansion(f: CorrelationPolynomial, q: int) -> float:
    """(p-2) ln q - 2 ln f + 3 f'/f^2 - (p-2)/(q f), with f and f' taken at q."""
    p = f.p
    fq = f.exact(q)
    dfq = f.derivative_exact(q)
    return (
        (p - 2) * math.log(q)
        - 2 * math.log(fq)
        + 3 * dfq / fq**2
        - (p - 2) / (q * fq)
    )


@dataclass(frozen=True)
class ExpansionReport:
    P: str
    q: int
    p: int
    ln_rho: float
    ln_rho_expansion: float
    ln_RQ: float
    ln_RQ_expansion: float

    @property
    def ln_rho_residual(self) -> float:
        return abs(self.ln_rho - self.ln_rho_expansion)

    @property
    def ln_RQ_residual(self) -> float:
        return abs(self.ln_RQ - self.ln_RQ_expansion)


def expansions(P: WordLike, q: int | None = None) -> ExpansionReport:
    """Numeric ln(rho), ln(R_Q) next to their four-term expansions."""
    P = as_word(P, q)
    f = correlation_polynomial(P)
    root = dominant_root(f, P.q)
    ln_rho = math.log(P.q) + math.log1p(-root.gap / P.q)
    return ExpansionReport(
        str(P), P.q, len(P),
        ln_rho, ln_rho_expansion(f, P.q),
        ln_r_q_constant(f, P.q, root), ln_rq_expansion(f, P.q),
    )


# --- choosing the prefix length -------------------------------------------

@lru_cache(maxsize=None)
def _scaled_ln(q: int, bits: int) -> int:
    """floor(ln(q) * 2**bits), up to one unit of Decimal rounding either way."""
    with localcontext() as ctx:
        ctx.prec = int(bits * 0.302) + 20
        return int((Decimal(q).ln() * (Decimal(2) ** bits)).to_integral_value(rounding="ROUND_FLOOR"))


def _interval_holds(p: int, N: int, q: int) -> bool:
    """Exact test of ln(q) * q**p <= N * (q - 1)."""
    bits = 128
    rhs_base = N * (q - 1)
    qp = q**p
    while True:
        L = _scaled_ln(q, bits)
        rhs = rhs_base << bits
        if qp * (L + 2) <= rhs:
            return True
        if qp * (L - 1) > rhs:
            return False
        # ln q is irrational, so more bits always settle it.
        bits *= 2


def floor_formula_p(N: int, q: int) -> tuple[int, float]:
    """floor(log_q N + log_q(q-1) - log_q(ln q)) in floating point, plus its argument."""
    lq = math.log(q)
    x = (math.log(N) + math.log(q - 1) - math.log(lq)) / lq
    return math.floor(x), x


def choose_p(N: int, q: int = 2) -> int:
    """The unique p with ln(q)/(q-1) * q**p <= N < ln(q)/(q-1) * q**(p+1).

    Decided by exact integer comparison; the floating floor formula is only a
    starting guess and a cross-check.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    guess, x = floor_formula_p(N, q)
    p = max(guess, 0)
    while not _interval_holds(p, N, q):
        p -= 1
    while _interval_holds(p + 1, N, q):
        p += 1
    if p != guess:
        if abs(x - round(x)) <= BOUNDARY_TOL:
            log.info("choose_p(N=%d, q=%d): floor formula %d near boundary, using %d", N, q, guess, p)
        else:
            raise AssertionError(f"choose_p({N}, {q}) = {p} but floor formula gives {guess}")
    if p < 1:
        raise ValueError(f"N = {N} is too small for a prefix length p >= 1 when q = {q}")
    return p


def _split(n: int, q: int) -> tuple[int, int] | None:
    # p - choose_p(n - p) is strictly increasing in p, so the split is unique
    # when it exists and the scan can stop at the first overshoot.
    for p in range(1, n):
        try:
            c = choose_p(n - p, q)
        except ValueError:
            return None
        if c == p:
            return p, n - p
        if c < p:
            return None
    return None


def decompose(n: int, q: int = 2) -> tuple[int, int]:
    """The split ``n = N + p`` with ``p = choose_p(N)``; returns ``(p, N)``."""
    split = _split(n, q)
    if split is None:
        near = next(
            (m for d in range(1, n + 2) for m in (n - d, n + d) if m >= 2 and _split(m, q)),
            None,
        )
        raise ValueError(
            f"n = {n} has no split n = N + p with p = choose_p(N); nearest valid n is {near}"
        )
    return split


def is_decomposable(n: int, q: int = 2) -> bool:
    return _split(n, q) is not None


# --- lower bounds ----------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    n: int
    q: int
    p: int
    N: int
    lower_sum: int
    exact_B: int | None
    ratio: float
    ln_lower_sum: float = field(repr=False, default=0.0)
    ln_ratio: float = field(repr=False, default=0.0)


def _ln_theorem_ratio(total: int, n: int, q: int) -> float:
    # ln(total * n * (log_q n)^2 / q^n)
    return math.log(total) + math.log(n) + 2 * math.log(math.log(n) / math.log(q)) - n * math.log(q)


def _report(n: int, q: int, p: int, N: int, total: int, exact_budget: int) -> BoundReport:
    exact_B = None
    if q**n <= exact_budget:
        exact_B = count_privileged(n, q).count
    ln_sum = math.log(total) if total else -math.inf
    ln_ratio = _ln_theorem_ratio(total, n, q) if total else -math.inf
    return BoundReport(n, q, p, N, total, exact_B, math.exp(ln_ratio), ln_sum, ln_ratio)


def lower_bound_sum(n: int, q: int = 2, *, exact_budget: int = 2**16) -> BoundReport:
    """Sum of G_P(N) over privileged P of length p, where n = N + p and p = choose_p(N).

    ``exact_B`` is filled in with B(n, q) when ``q**n <= exact_budget``.
    """
    p, N = decompose(n, q)
    total = sum(gp_sequence(P, N)[-1] for P in list_privileged(p, q))
    return _report(n, q, p, N, total, exact_budget)


def lower_bound_sweep(n_from: int, n_to: int, q: int = 2, *, exact_budget: int = 2**16) -> list[BoundReport]:
    """:func:`lower_bound_sum` for every decomposable n in ``[n_from, n_to]``.

    Shares one DP pass per pattern across all n with the same prefix length.
    """
    plan: dict[int, list[tuple[int, int]]] = {}
    for n in range(max(n_from, 2), n_to + 1):
        try:
            p, N = decompose(n, q)
        except ValueError:
            continue
        plan.setdefault(p, []).append((n, N))
    reports = []
    for p, items in sorted(plan.items()):
        N_max = max(N for _, N in items)
        sums = [0] * N_max
        for P in list_privileged(p, q):
            for i, g in enumerate(gp_sequence(P, N_max)):
                sums[i] += g
        for n, N in items:
            reports.append(_report(n, q, p, N, sums[N - 1], exact_budget))
    reports.sort(key=lambda r: r.n)
    return reports


def lemma5_ratio(P: WordLike, N: int, q: int | None = None, *, gp: int | None = None) -> float:
    """``G_P(N) * n**2 / q**n`` with ``n = N + |P|``; requires ``|P| == choose_p(N)``.

    Pass ``gp`` to supply the count from elsewhere (e.g. brute force).
    """
    P = as_word(P, q)
    p = len(P)
    if choose_p(N, P.q) != p:
        raise ValueError(f"|P| = {p} but choose_p({N}, {P.q}) = {choose_p(N, P.q)}")
    if gp is None:
        gp = gp_sequence(P, N)[-1]
    if gp == 0:
        return 0.0
    n = N + p
    return math.exp(math.log(gp) + 2 * math.log(n) - n * math.log(P.q))


def lemma5_sweep(N: int, q: int = 2) -> list[tuple[str, float]]:
    """``(P, ratio)`` for every privileged P of length ``choose_p(N)``."""
    p = choose_p(N, q)
    return [(str(P), lemma5_ratio(P, N)) for P in list_privileged(p, q)]


def theorem_ratio(total: int, n: int, q: int = 2) -> float:
    """``total * n * (log_q n)**2 / q**n`` evaluated in log form."""
    return math.exp(_ln_theorem_ratio(total, n, q))

