"""Closed-form generating functions and p(n)-combination formulas.

Each builder assembles one closed form from the q-series primitives and
returns a truncated series; the enumeration module supplies the independent
counts the identities harness compares them against.  All k/t summations
truncate once the summand's lowest exponent leaves the window, which is
sound because those exponents increase monotonically in the summation
index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .enumeration import count_p, count_p_star, count_Q
from .qobjects import (
    Monomial,
    euler_qinf,
    multi_poch_infinite,
    poch_finite,
    poch_finite_window,
    poch_infinite,
    qbin,
)
from .series import LaurentSeries

_Q = Monomial.q()


# ----------------------------------------------------------------------
# linear combinations of shifted p(n)
# ----------------------------------------------------------------------


def a2_via_p(n: int) -> int:
    """Smallest part at least twice: 2p(n) - p(n+1)."""
    return 2 * count_p(n) - count_p(n + 1)


def a3_via_p(n: int) -> int:
    """Smallest part at least three times: 3p(n) - p(n+1) - 2p(n+2) + p(n+3)."""
    return 3 * count_p(n) - count_p(n + 1) - 2 * count_p(n + 2) + count_p(n + 3)


def a4_via_p(n: int) -> int:
    """Smallest part at least four times, as a seven-term p combination."""
    return (
        4 * count_p(n)
        - count_p(n + 1)
        - 2 * count_p(n + 2)
        - 2 * count_p(n + 3)
        + count_p(n + 4)
        + 2 * count_p(n + 5)
        - count_p(n + 6)
    )


def aG1_via_p(m: int, n: int) -> int:
    """General smallest-multiplicity count via p values and Q corrections.

    2p(n) - p(n+1) - p(n-2) + p(n-m) minus the double sum of Q(l, k, n)
    over 2 <= l <= m-1, 3 <= k <= floor(n/l) + 1, with the at_least /
    empty-counts-one convention for Q.  At m = 2 the p(n-2) terms cancel
    and the Q sum is empty, recovering a2_via_p.
    """
    if m < 2 or n < 1:
        raise ValueError("requires m >= 2 and n >= 1")
    total = 2 * count_p(n) - count_p(n + 1) - count_p(n - 2) + count_p(n - m)
    for l in range(2, m):
        for k in range(3, n // l + 2):
            total -= count_Q(l, k, n, "at_least")
    return total


# ----------------------------------------------------------------------
# generating function of the smallest-multiplicity counts
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BracketPolynomial:
    """The alternating Laurent polynomial multiplying 1/(q;q)_inf.

    series equals 1 + sum_{k=1}^{m-1} (-1)^k prod_{i=0}^{k-1}
    (q^{-(m-1-i)} - 1); its exponents lie in [-m(m-1)/2, 0].
    """

    m: int
    series: LaurentSeries


@lru_cache(maxsize=None)
def bracket_polynomial(m: int) -> BracketPolynomial:
    """Exact bracket polynomial for a given multiplicity bound m >= 2."""
    if m < 2:
        raise ValueError("requires m >= 2")
    total = {0: 1}
    for k in range(1, m):
        prod = {0: 1}
        for i in range(k):
            j = m - 1 - i
            nxt: dict[int, int] = {}
            for e, c in prod.items():
                nxt[e - j] = nxt.get(e - j, 0) + c
                nxt[e] = nxt.get(e, 0) - c
            prod = nxt
        sign = -1 if k % 2 else 1
        for e, c in prod.items():
            total[e] = total.get(e, 0) + sign * c
    lo = -m * (m - 1) // 2
    coeffs = [total.get(e, 0) for e in range(lo, 1)]
    return BracketPolynomial(m, LaurentSeries(lo, tuple(coeffs), 1))


@lru_cache(maxsize=None)
def gf_a_m_sum(m: int, order: int) -> LaurentSeries:
    """Summation form: sum_k q^(k+m)/(q)_{k+m} * prod_{i=1}^{m-1}(1-q^(k+i))."""
    if m < 1 or order < 1:
        raise ValueError("requires m >= 1 and order >= 1")
    acc = LaurentSeries.zero(order)
    inv = poch_finite_window(_Q, 1, m, order).inverse(order)
    k = 0
    while k + m < order:
        term = inv
        for i in range(1, m):
            term = term.mul_binomial(1, k + i)
        acc = acc.add(term.shift(k + m).truncate(order))
        inv = inv.div_binomial(1, k + m + 1)
        k += 1
    return acc


@lru_cache(maxsize=None)
def _full_bracket_quotient(m: int, order: int) -> LaurentSeries:
    # bracket / (q;q)_inf on the window [-m(m-1)/2, order)
    depth = m * (m - 1) // 2
    bracket = bracket_polynomial(m).series.extend(order)
    qinv = euler_qinf(order + depth).inverse(order + depth)
    return bracket.mul(qinv)


def gf_a_m_thm(m: int, order: int) -> LaurentSeries:
    """Closed form: the positive part of bracket_polynomial(m)/(q;q)_inf.

    The subtracted correction (see :func:`gf_a_m_thm_correction`) is the
    non-positive part of the same product, which is the reading under which
    the m = 2 case collapses to ``2p(n) - p(n+1)``.
    """
    if m < 2 or order < 1:
        raise ValueError("requires m >= 2 and order >= 1")
    return _full_bracket_quotient(m, order).pos_part()


def gf_a_m_thm_correction(m: int, order: int) -> LaurentSeries:
    """The non-positive-exponent correction subtracted in gf_a_m_thm."""
    if m < 2 or order < 1:
        raise ValueError("requires m >= 2 and order >= 1")
    return _full_bracket_quotient(m, order).nonpos_part()


# ----------------------------------------------------------------------
# generating function with a fixed largest-smallest difference
# ----------------------------------------------------------------------


def _fit(poly: LaurentSeries, order: int) -> LaurentSeries:
    # Window an exact polynomial to [min_exp, order); padding is sound
    # because the value really is a polynomial.
    return poly.truncate(order).extend(order)


@lru_cache(maxsize=None)
def gf_a_m_diff(m: int, l: int, order: int) -> LaurentSeries:
    """Closed form for counts with smallest multiplicity >= m and difference l.

    q^(l+m+1) (q)_m (q)_{l-m-1} / ((q)_l)^2 * (-1)^(m+1) q^(-(m+1)(m+2)/2)
    * ((q)_l - sum_{j=0}^{m} qbin(l,j) (-1)^j q^(j+j(j-1)/2)).

    The (q)_{l-m-1} factor is what the telescoped j-sum actually produces;
    the bracket's valuation (m+1)(m+2)/2 cancels the negative power, so the
    lowest surviving exponent is l+m+1, the smallest witness m*1 + (1+l).
    """
    if l < 2:
        raise ValueError("requires difference l > 1")
    if l < m + 1:
        raise ValueError(
            f"closed form needs l >= m+1 (got m={m}, l={l}); "
            "use the enumeration counters for narrower differences"
        )
    if order < 1:
        raise ValueError("order must be at least 1")
    depth = (m + 1) * (m + 2) // 2
    work = order + depth
    bracket = _fit(poch_finite(_Q, 1, l), work)
    for j in range(m + 1):
        e = j + j * (j - 1) // 2
        if e >= work:
            break
        sign = -1 if j % 2 else 1
        bracket = bracket.sub(_fit(qbin(l, j), work).shift(e).truncate(work).scale(sign))
    num = _fit(poch_finite(_Q, 1, m), work).mul(_fit(poch_finite(_Q, 1, l - m - 1), work))
    den_inv = _fit(poch_finite(_Q, 1, l), work).mul(_fit(poch_finite(_Q, 1, l), work)).inverse(work)
    sign = 1 if m % 2 else -1  # (-1)^(m+1)
    series = num.mul(bracket).mul(den_inv).scale(sign).shift(l + m + 1 - depth)
    return series.truncate(order)


# ----------------------------------------------------------------------
# overpartitions
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def gf_pbar(order: int) -> LaurentSeries:
    """Overpartition generating function prod (1+q^n)/(1-q^n)."""
    neg = poch_infinite(Monomial(-1, 1), 1, order)
    return neg.mul(euler_qinf(order).inverse(order))


@lru_cache(maxsize=None)
def gf_abar_m(m: int, order: int) -> LaurentSeries:
    """Overpartition smallest-multiplicity GF:
    sum_k 2 q^(mk) (-q^k)_inf / ((1+q^k)(q^k)_inf)."""
    if m < 1 or order < 1:
        raise ValueError("requires m >= 1 and order >= 1")
    acc = LaurentSeries.zero(order)
    k = 1
    while m * k < order:
        term = poch_infinite(Monomial(-1, k), 1, order)
        term = term.mul(poch_infinite(Monomial(1, k), 1, order).inverse(order))
        term = term.div_binomial(-1, k).scale(2)
        acc = acc.add(term.shift(m * k).truncate(order))
        k += 1
    return acc


@lru_cache(maxsize=None)
def gf_abar_m_alt(m: int, order: int) -> LaurentSeries:
    """Variant GF sum_k q^(mk) (-q^k)_inf / (q^k)_inf, for the convention
    where an overlined part is never equal to a plain one."""
    if m < 1 or order < 1:
        raise ValueError("requires m >= 1 and order >= 1")
    acc = LaurentSeries.zero(order)
    k = 1
    while m * k < order:
        term = poch_infinite(Monomial(-1, k), 1, order)
        term = term.mul(poch_infinite(Monomial(1, k), 1, order).inverse(order))
        acc = acc.add(term.shift(m * k).truncate(order))
        k += 1
    return acc


@lru_cache(maxsize=None)
def gf_ubar(order: int) -> LaurentSeries:
    """Double-sum GF for the u-bar overpartition counts:

    2 sum_{k>=1} ( q^(2k+1)/(1-q^(k+1))
                   + sum_{t>=2} q^(3k+2t-1) (1+q) (-q^(k+1);q)_{t-2}
                                 / (q^(k+1);q)_t ).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    acc = LaurentSeries.zero(order)
    k = 1
    while 2 * k + 1 < order:
        piece = LaurentSeries.one(order).div_binomial(1, k + 1)
        acc = acc.add(piece.shift(2 * k + 1).truncate(order))
        t = 2
        while 3 * k + 2 * t - 1 < order:
            num = poch_finite_window(Monomial(-1, k + 1), 1, t - 2, order)
            den = poch_finite_window(Monomial(1, k + 1), 1, t, order)
            piece = num.mul(den.inverse(order)).mul_binomial(-1, 1)
            acc = acc.add(piece.shift(3 * k + 2 * t - 1).truncate(order))
            t += 1
        k += 1
    return acc.scale(2)


# ----------------------------------------------------------------------
# l-regular partitions
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def gf_breg(l: int, order: int) -> LaurentSeries:
    """l-regular partition GF (q^l; q^l)_inf / (q; q)_inf."""
    if l < 2:
        raise ValueError("regularity modulus must be at least 2")
    num = poch_infinite(Monomial(1, l), l, order)
    return num.mul(euler_qinf(order).inverse(order))


@lru_cache(maxsize=None)
def gf_areg(m: int, l: int, order: int) -> LaurentSeries:
    """l-regular smallest-multiplicity GF:

    sum_{k>=0} sum_{t=1}^{l-1} q^((lk+t)m) (q^(lk+1); q)_{t-1}
        / (q^(lk+1), ..., q^(lk+l-1); q^l)_inf.
    """
    if m < 1 or l < 2 or order < 1:
        raise ValueError("requires m >= 1, l >= 2, order >= 1")
    acc = LaurentSeries.zero(order)
    k = 0
    while (l * k + 1) * m < order:
        params = [Monomial(1, l * k + r) for r in range(1, l)]
        den_inv = multi_poch_infinite(params, l, order).inverse(order)
        for t in range(1, l):
            shift = (l * k + t) * m
            if shift >= order:
                break
            num = poch_finite_window(Monomial(1, l * k + 1), 1, t - 1, order)
            acc = acc.add(num.mul(den_inv).shift(shift).truncate(order))
        k += 1
    return acc


@lru_cache(maxsize=None)
def gf_areg_l2(m: int, order: int) -> LaurentSeries:
    """The l = 2 case in collapsed form:
    q^m/(q; q^2)_inf * sum_{k>=0} (q; q^2)_k q^(2km)."""
    if m < 1 or order < 1:
        raise ValueError("requires m >= 1 and order >= 1")
    pref = poch_infinite(Monomial(1, 1), 2, order).inverse(order)
    total = LaurentSeries.zero(order)
    pk = LaurentSeries.one(order)
    k = 0
    while 2 * k * m + m < order:
        total = total.add(pk.shift(2 * k * m).truncate(order))
        pk = pk.mul_binomial(1, 2 * k + 1)
        k += 1
    return pref.mul(total).shift(m).truncate(order)


# ----------------------------------------------------------------------
# fixed-difference decomposition via minimum-part counts
# ----------------------------------------------------------------------


def remark7_rhs(n: int) -> int:
    """1 + p(n-2) + sum_{m=2}^{floor(n/3)} p*_m(n-2m), as displayed.

    Holds against the fixed-difference count p(2n, n) only for even n >= 4:
    the leading 1 stands for the empty-middle partition (3n/2, n/2), which
    exists only when n is even (and duplicates the p(n-2) term at n = 2).
    The harness reports the mismatch rather than repairing the formula.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = 1 + count_p(n - 2)
    for m in range(2, n // 3 + 1):
        total += count_p_star(m, n - 2 * m)
    return total
