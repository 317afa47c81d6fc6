"""The identity catalog, the verification engine, and the explicit bijections.

Every identity pairs two independently computed evaluators: for countwise
entries one side is a brute-force enumeration (or a second enumeration
family) and the other a closed form; for serieswise entries two series
constructions, or a series against enumerated coefficients.  Refutation is
a first-class outcome: the engine reports every mismatch it finds instead
of asserting the catalog is flawless, and two entries (remark7, reg_div
without its divisibility hypothesis) are expected to refute.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import closed_forms as cf
from . import enumeration as en
from .qobjects import Monomial, poch_infinite, q_hyper_sum, qbinomial_theorem_lhs_rhs
from .series import LaurentSeries, SeriesError

_Q = Monomial.q()
_MONOS = (
    Monomial.zero(),
    Monomial(1, 1),
    Monomial(-1, 1),
    Monomial(1, 2),
    Monomial(-1, 2),
    Monomial(1, 3),
)


class UnknownIdentityError(KeyError):
    """Requested identity id is not in the registry."""


@dataclass(frozen=True)
class Identity:
    """A registered claim with two independent evaluators."""

    id: str
    kind: str  # "countwise" | "serieswise"
    statement: str
    grid_desc: str
    runner: Callable  # (to, order, include_nondivisible) -> (points, counterexamples, grid)


@dataclass
class VerificationReport:
    """Machine-readable outcome of checking one identity over a grid."""

    identity: str
    grid: str
    status: str  # "verified" | "refuted" | "skipped"
    points: int
    counterexamples: list[dict]
    seconds: float
    reason: str = ""

    def __post_init__(self) -> None:
        if self.status == "refuted" and not self.counterexamples:
            raise ValueError("refuted reports must carry counterexamples")
        if self.status == "verified" and self.counterexamples:
            raise ValueError("verified reports cannot carry counterexamples")

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "grid": self.grid,
            "status": self.status,
            "points": self.points,
            "counterexamples": [
                {
                    "params": {k: str(v) for k, v in ce["params"].items()},
                    "lhs": str(ce["lhs"]),
                    "rhs": str(ce["rhs"]),
                }
                for ce in self.counterexamples
            ],
            "seconds": round(self.seconds, 6),
            "reason": self.reason,
        }


def _pick(value, default):
    return default if value is None else value


def _coeff0(s: LaurentSeries, n: int) -> int:
    # Coefficient with the structural zero below min_exp made explicit;
    # exponents at or past the window still raise.
    if n < s.min_exp:
        return 0
    return s.coeff(n)


def _count_grid(points, lhs, rhs):
    ces = []
    npts = 0
    for params in points:
        npts += 1
        lv = lhs(**params)
        rv = rhs(**params)
        if lv != rv:
            ces.append({"params": params, "lhs": lv, "rhs": rv})
    return npts, ces


def _series_grid(cases):
    # cases: iterable of (params, lhs_series, rhs_series, exponents)
    ces = []
    npts = 0
    for params, lhs, rhs, exps in cases:
        for e in exps:
            npts += 1
            lv = _coeff0(lhs, e)
            rv = _coeff0(rhs, e)
            if lv != rv:
                ces.append({"params": {**params, "n": e}, "lhs": lv, "rhs": rv})
    return npts, ces


# ----------------------------------------------------------------------
# runners
# ----------------------------------------------------------------------


def _run_prop1(to, order, incl):
    n_max = _pick(to, 200)
    gf = cf.gf_a_m_sum(2, n_max + 2)
    pts, ces = _count_grid(
        ({"n": n} for n in range(1, n_max + 1)),
        lambda n: gf.coeff(n),
        lambda n: cf.a2_via_p(n),
    )
    return pts, ces, f"1 <= n <= {n_max}"


def _run_prop2(to, order, incl):
    n_max = _pick(to, 25)
    pts, ces = _count_grid(
        ({"n": n} for n in range(1, n_max + 1)),
        lambda n: en.count_a(2, n),
        lambda n: en.count_p_fixed_diff(2 * n, n),
    )
    return pts, ces, f"1 <= n <= {n_max}"


def _run_prop3(to, order, incl):
    n_max = _pick(to, 25)
    pts, ces = _count_grid(
        ({"m": m, "n": n} for m in range(2, 6) for n in range(1, n_max + 1)),
        lambda m, n: en.count_a(m, n),
        lambda m, n: en.count_a_diff(m - 1, 2 * n, n),
    )
    return pts, ces, f"2 <= m <= 5, 1 <= n <= {n_max}"


def _run_thmG1(to, order, incl):
    n_max = _pick(to, 60)
    pts, ces = _count_grid(
        ({"m": m, "n": n} for m in range(2, 7) for n in range(1, n_max + 1)),
        lambda m, n: en.count_a(m, n),
        lambda m, n: cf.aG1_via_p(m, n),
    )
    return pts, ces, f"2 <= m <= 6, 1 <= n <= {n_max}"


def _make_run_p_comb(m, default_max, formula):
    def run(to, order, incl):
        n_max = _pick(to, default_max)
        gf = cf.gf_a_m_sum(m, n_max + 2)
        pts, ces = _count_grid(
            ({"n": n} for n in range(1, n_max + 1)),
            lambda n: gf.coeff(n),
            lambda n: formula(n),
        )
        return pts, ces, f"1 <= n <= {n_max}"

    return run


def _run_eq_am(to, order, incl):
    w = _pick(order, 60)
    cases = []
    for m in range(1, 7):
        counted = LaurentSeries.from_coeffs(
            [0] + [en.count_a(m, n) for n in range(1, w)], 0, w
        )
        cases.append(({"m": m}, counted, cf.gf_a_m_sum(m, w), range(1, w)))
    pts, ces = _series_grid(cases)
    return pts, ces, f"1 <= m <= 6, coefficients below {w}"


def _run_thm_am(to, order, incl):
    w = _pick(order, 60)
    cases = []
    for m in range(2, 7):
        counted = LaurentSeries.from_coeffs(
            [0] + [en.count_a(m, n) for n in range(1, w)], 0, w
        )
        cases.append(({"m": m}, counted, cf.gf_a_m_thm(m, w), range(1, w)))
    pts, ces = _series_grid(cases)
    return pts, ces, f"2 <= m <= 6, coefficients below {w}"


def _run_thm_and(to, order, incl):
    w = _pick(order, 60)
    cases = []
    for l in range(2, 9):
        for m in range(1, l):
            counted = LaurentSeries.from_coeffs(
                [0] + [en.count_a_diff(m, n, l) for n in range(1, w)], 0, w
            )
            cases.append(({"m": m, "l": l}, counted, cf.gf_a_m_diff(m, l, w), range(1, w)))
    pts, ces = _series_grid(cases)
    return pts, ces, f"1 <= m < l <= 8, coefficients below {w}"


def _cauchy_rhs(a: Monomial, t: Monomial, w: int) -> LaurentSeries:
    num = poch_infinite(a.times(t), 1, w)
    return num.mul(poch_infinite(t, 1, w).inverse(w))


def _run_cauchy(to, order, incl):
    w = _pick(order, 50)
    cases = []
    for a in _MONOS:
        for t in _MONOS:
            lhs = q_hyper_sum((a,), (), t, w)
            cases.append(({"a": a, "t": t}, lhs, _cauchy_rhs(a, t, w), range(w)))
    pts, ces = _series_grid(cases)
    return pts, ces, f"a, t monomials, coefficients below {w}"


def _run_cauchy_cor(to, order, incl):
    w = _pick(order, 50)
    cases = []
    for t in _MONOS:
        lhs = q_hyper_sum((), (), t, w)
        rhs = poch_infinite(t, 1, w).inverse(w)
        cases.append(({"t": t}, lhs, rhs, range(w)))
    pts, ces = _series_grid(cases)
    return pts, ces, f"t monomial, coefficients below {w}"


def _run_heine(to, order, incl):
    w = _pick(order, 50)
    cases = []
    for a in _MONOS:
        for b in _MONOS:
            for t in _MONOS:
                c_params = [Monomial.zero()]
                if not t.is_zero() and not b.is_zero() and b.exp <= t.exp + 1:
                    c_params.append(Monomial(1, t.exp + 1))
                for c in c_params:
                    c_over_b = Monomial.zero() if c.is_zero() else c.over(b)
                    lhs = q_hyper_sum((a, b), (c,), t, w)
                    pref = poch_infinite(b, 1, w).mul(poch_infinite(a.times(t), 1, w))
                    pref = pref.mul(poch_infinite(c, 1, w).inverse(w))
                    pref = pref.mul(poch_infinite(t, 1, w).inverse(w))
                    rhs = pref.mul(
                        q_hyper_sum((c_over_b, t), (a.times(t),), b, w)
                    ).truncate(w)
                    cases.append(
                        ({"a": a, "b": b, "t": t, "c": c}, lhs, rhs, range(w))
                    )
    pts, ces = _series_grid(cases)
    return pts, ces, f"monomial grid with c in {{0, q^(e_t+1)}}, coefficients below {w}"


def _run_heine2(to, order, incl):
    w = _pick(order, 50)
    cases = []
    for a in (Monomial.zero(), Monomial(1, 1), Monomial(-1, 1), Monomial(1, 2)):
        for b in (Monomial(1, 1), Monomial(-1, 1), Monomial(1, 2)):
            for z in (Monomial(1, 1), Monomial(1, 2), Monomial(1, 3)):
                for extra in (0, 1):
                    c = Monomial(1, b.exp + z.exp + extra)
                    abz_over_c = (
                        Monomial.zero()
                        if a.is_zero()
                        else a.times(b).times(z).over(c)
                    )
                    c_over_b = c.over(b)
                    lhs = q_hyper_sum((a, b), (c,), z, w)
                    pref = poch_infinite(c_over_b, 1, w).mul(
                        poch_infinite(b.times(z), 1, w)
                    )
                    pref = pref.mul(poch_infinite(c, 1, w).inverse(w))
                    pref = pref.mul(poch_infinite(z, 1, w).inverse(w))
                    rhs = pref.mul(
                        q_hyper_sum((abz_over_c, b), (b.times(z),), c_over_b, w)
                    ).truncate(w)
                    cases.append(
                        ({"a": a, "b": b, "z": z, "c": c}, lhs, rhs, range(w))
                    )
    pts, ces = _series_grid(cases)
    return pts, ces, f"monomial grid with c = q^(e_b+e_z+{{0,1}}), coefficients below {w}"


def _run_qbinthm(to, order, incl):
    w = _pick(order, 50)
    cases = []
    for n in range(0, 9):
        for z in _MONOS:
            degree = 0 if z.is_zero() else n * z.exp + n * (n - 1) // 2
            weff = max(w, degree + 1)
            lhs, rhs = qbinomial_theorem_lhs_rhs(n, z, weff)
            cases.append(({"n_index": n, "z": z}, lhs, rhs, range(weff)))
    pts, ces = _series_grid(cases)
    return pts, ces, "0 <= n <= 8, z monomial, exact polynomials"


def _run_over_a2(to, order, incl):
    n_max = _pick(to, 20)
    pts, ces = _count_grid(
        ({"n": n} for n in range(1, n_max + 1)),
        lambda n: en.count_abar(2, n),
        lambda n: 2 * en.count_pbar(n) - en.count_pbar(n + 1) + en.count_ubar(n + 1),
    )
    return pts, ces, f"1 <= n <= {n_max}"


def _run_over1(to, order, incl):
    n_max = _pick(to, 16)
    pts, ces = _count_grid(
        ({"n": n} for n in range(1, n_max + 1)),
        lambda n: 2 * en.count_abar(2, n),
        lambda n: en.count_pbar_diff(2 * n, n),
    )
    return pts, ces, f"1 <= n <= {n_max}"


def _run_over_gen(to, order, incl):
    n_max = _pick(to, 14)
    pts, ces = _count_grid(
        ({"m": m, "n": n} for m in range(2, 5) for n in range(1, n_max + 1)),
        lambda m, n: 2 * en.count_abar(m, n),
        lambda m, n: en.count_abar_diff(m - 1, 2 * n, n),
    )
    return pts, ces, f"2 <= m <= 4, 1 <= n <= {n_max}"


def _run_reg_a2(to, order, incl):
    n_max = _pick(to, 60)
    pts, ces = _count_grid(
        ({"n": n} for n in range(1, n_max + 1)),
        lambda n: en.count_areg(2, 2, n),
        lambda n: en.count_breg(2, n) + en.count_breg(2, n + 1) - en.count_breg(2, n + 2),
    )
    return pts, ces, f"1 <= n <= {n_max}"


def _run_reg_div(to, order, incl):
    n_max = _pick(to, 48)
    points = []
    for l in (2, 3, 4, 5):
        for n in range(1, n_max + 1):
            if incl or n % l == 0:
                points.append({"m": 2, "l": l, "n": n})
    for l in (2, 3):
        for n in range(1, n_max // 2 + 1):
            if n % l == 0:
                points.append({"m": 3, "l": l, "n": n})

    def rhs(m, l, n):
        if m == 2:
            return en.count_breg_diff(l, 2 * n, n)
        return en.count_areg_diff(m - 1, l, 2 * n, n)

    pts, ces = _count_grid(
        points, lambda m, l, n: en.count_areg(m, l, n), rhs
    )
    grid = f"m=2: l in 2..5, n <= {n_max}; m=3: l in 2..3, n <= {n_max // 2}"
    grid += " (all n)" if incl else " (l | n only)"
    return pts, ces, grid


def _run_reg_odd(to, order, incl):
    n_max = _pick(to, 31)
    pts, ces = _count_grid(
        ({"n": n} for n in range(1, n_max + 1, 2)),
        lambda n: en.count_areg(2, 2, n),
        lambda n: en.count_breg_diff(2, 2 * n + 1, n + 1),
    )
    return pts, ces, f"odd n <= {n_max}"


def _run_reg_nondiv(to, order, incl):
    n_max = _pick(to, 30)
    points = [
        {"m": m, "l": l, "n": n}
        for m in range(2, 5)
        for l in (2, 3, 4)
        for n in range(1, n_max + 1)
        if n % l != 0
    ]

    def rhs(m, l, n):
        r = n % l
        return en.count_areg_diff(m - 1, l, 2 * n + l - r, n + l - r)

    pts, ces = _count_grid(points, lambda m, l, n: en.count_areg(m, l, n), rhs)
    return pts, ces, f"2 <= m <= 4, l in 2..4, n <= {n_max} with l not dividing n"


def _run_remark7(to, order, incl):
    n_max = _pick(to, 60)
    pts, ces = _count_grid(
        ({"n": n} for n in range(1, n_max + 1)),
        lambda n: en.count_p_fixed_diff(2 * n, n),
        lambda n: cf.remark7_rhs(n),
    )
    return pts, ces, f"1 <= n <= {n_max}"


def _run_ubar_gf(to, order, incl):
    w = _pick(order, 26)
    counted = LaurentSeries.from_coeffs(
        [0] + [en.count_ubar(n) for n in range(1, w)], 0, w
    )
    pts, ces = _series_grid([({}, counted, cf.gf_ubar(w), range(1, w))])
    return pts, ces, f"coefficients 1 <= n < {w}"


# ----------------------------------------------------------------------
# registry
# ----------------------------------------------------------------------

_REGISTRY: list[Identity] = [
    Identity("prop1", "countwise",
             "a_2(n) = 2p(n) - p(n+1)",
             "1 <= n <= 200", _run_prop1),
    Identity("prop2", "countwise",
             "a_2(n) = p(2n, n)",
             "1 <= n <= 25", _run_prop2),
    Identity("prop3", "countwise",
             "a_m(n) = a_{m-1}(2n, n)",
             "2 <= m <= 5, 1 <= n <= 25", _run_prop3),
    Identity("thmG1", "countwise",
             "a_m(n) = 2p(n) - p(n+1) - p(n-2) + p(n-m) - sum Q_{l,k}(n)",
             "2 <= m <= 6, 1 <= n <= 60", _run_thmG1),
    Identity("thm_a3", "countwise",
             "a_3(n) = 3p(n) - p(n+1) - 2p(n+2) + p(n+3)",
             "1 <= n <= 120", _make_run_p_comb(3, 120, cf.a3_via_p)),
    Identity("thm_a4", "countwise",
             "a_4(n) = 4p(n) - p(n+1) - 2p(n+2) - 2p(n+3) + p(n+4) + 2p(n+5) - p(n+6)",
             "1 <= n <= 120", _make_run_p_comb(4, 120, cf.a4_via_p)),
    Identity("eq_am", "serieswise",
             "sum a_m(n) q^n = sum_k q^(k+m)/(q)_{k+m} prod_{i<m}(1-q^(k+i))",
             "1 <= m <= 6, order 60", _run_eq_am),
    Identity("thm_am", "serieswise",
             "sum a_m(n) q^n = pos. part of bracket_m/(q)_inf",
             "2 <= m <= 6, order 60", _run_thm_am),
    Identity("thm_and", "serieswise",
             "sum a_m(n,l) q^n equals its Gaussian-binomial closed form",
             "1 <= m < l <= 8, order 60", _run_thm_and),
    Identity("cauchy", "serieswise",
             "sum (a)_k t^k/(q)_k = (at)_inf/(t)_inf",
             "monomial a, t; order 50", _run_cauchy),
    Identity("cauchy_cor", "serieswise",
             "sum t^k/(q)_k = 1/(t)_inf",
             "monomial t; order 50", _run_cauchy_cor),
    Identity("heine", "serieswise",
             "sum (a)_k(b)_k t^k/((q)_k(c)_k) = (b)(at)/((c)(t)) sum (c/b)_k(t)_k b^k/((q)_k(at)_k)",
             "monomial grid; order 50", _run_heine),
    Identity("heine2", "serieswise",
             "sum (a)_k(b)_k z^k/((q)_k(c)_k) = (c/b)(bz)/((c)(z)) sum (abz/c)_j(b)_j(c/b)^j/((q)_j(bz)_j)",
             "monomial grid; order 50", _run_heine2),
    Identity("qbinthm", "serieswise",
             "(z)_n = sum_j qbin(n,j) (-1)^j z^j q^(j(j-1)/2)",
             "0 <= n <= 8, monomial z", _run_qbinthm),
    Identity("over_a2", "countwise",
             "abar_2(n) = 2pbar(n) - pbar(n+1) + ubar(n+1)",
             "1 <= n <= 20", _run_over_a2),
    Identity("over1", "countwise",
             "2 abar_2(n) = pbar(2n, n)",
             "1 <= n <= 16", _run_over1),
    Identity("over_gen", "countwise",
             "2 abar_m(n) = abar_{m-1}(2n, n)",
             "2 <= m <= 4, 1 <= n <= 14", _run_over_gen),
    Identity("reg_a2", "countwise",
             "a_{2(2)}(n) = b_2(n) + b_2(n+1) - b_2(n+2)",
             "1 <= n <= 60", _run_reg_a2),
    Identity("reg_div", "countwise",
             "a_{m(l)}(n) = a_{m-1(l)}(2n, n) for l | n (m=2 gives b_l(2n,n))",
             "l in 2..5 with l | n <= 48", _run_reg_div),
    Identity("reg_odd", "countwise",
             "a_{2(2)}(n) = b_2(2n+1, n+1) for odd n",
             "odd n <= 31", _run_reg_odd),
    Identity("reg_nondiv", "countwise",
             "a_{m(l)}(n) = a_{(m-1)(l)}(2n+l-r, n+l-r), r = n mod l != 0",
             "2 <= m <= 4, l in 2..4, n <= 30", _run_reg_nondiv),
    Identity("remark7", "countwise",
             "p(2n, n) = 1 + p(n-2) + sum_{m=2}^{floor(n/3)} p*_m(n-2m)",
             "1 <= n <= 60", _run_remark7),
    Identity("ubar_gf", "serieswise",
             "sum ubar(n) q^n = 2 sum_k (q^(2k+1)/(q^(k+1);q)_1 + sum_t q^(3k+2t-1)(1+q)(-q^(k+1);q)_{t-2}/(q^(k+1);q)_t)",
             "coefficients below 26", _run_ubar_gf),
]


def registry() -> list[Identity]:
    """The complete identity catalog in its stable order."""
    return list(_REGISTRY)


def get_identity(identity_id: str) -> Identity:
    for ident in _REGISTRY:
        if ident.id == identity_id:
            return ident
    raise UnknownIdentityError(identity_id)


def verify(identity_id: str, *, to: int | None = None, order: int | None = None,
           include_nondivisible: bool = False) -> VerificationReport:
    """Check one identity over its grid (or the overridden one).

    Grid evaluation is deterministic; mismatches are collected in grid
    order.  Runner errors (e.g. an override the closed form cannot honor)
    come back as a skipped report, not an exception.
    """
    ident = get_identity(identity_id)
    start = time.perf_counter()
    try:
        points, ces, grid = ident.runner(to, order, include_nondivisible)
    except (SeriesError, ValueError) as exc:
        return VerificationReport(
            identity=ident.id, grid=ident.grid_desc, status="skipped",
            points=0, counterexamples=[], seconds=time.perf_counter() - start,
            reason=str(exc),
        )
    status = "verified" if not ces else "refuted"
    return VerificationReport(
        identity=ident.id, grid=grid, status=status, points=points,
        counterexamples=ces, seconds=time.perf_counter() - start,
    )


# ----------------------------------------------------------------------
# explicit bijections
# ----------------------------------------------------------------------


def _check_partition(parts) -> tuple[int, ...]:
    parts = tuple(parts)
    if not all(isinstance(p, int) and p >= 1 for p in parts):
        raise ValueError("parts must be positive integers")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be non-increasing")
    return parts


def bijection_prop3(parts, m: int) -> tuple[int, ...]:
    """Remove one copy of the smallest part k and insert the part n + k.

    Maps a partition of n with smallest-part multiplicity >= m to a
    partition of 2n with difference n and multiplicity >= m - 1.
    """
    parts = _check_partition(parts)
    if m < 2:
        raise ValueError("requires m >= 2")
    if not parts:
        raise ValueError("the empty partition has no smallest part")
    k = parts[-1]
    if parts.count(k) < m:
        raise ValueError(f"smallest part {k} occurs fewer than {m} times")
    n = sum(parts)
    return (n + k,) + parts[:-1]


def bijection_prop3_inverse(parts, m: int) -> tuple[int, ...]:
    """Remove the largest part n + k and restore a copy of the smallest k."""
    parts = _check_partition(parts)
    if m < 2:
        raise ValueError("requires m >= 2")
    if len(parts) < 2:
        raise ValueError("need at least two parts")
    total = sum(parts)
    if total % 2:
        raise ValueError("total must be even")
    n = total // 2
    k = parts[-1]
    if parts[0] - k != n:
        raise ValueError("difference between largest and smallest must be n")
    if parts.count(k) < m - 1:
        raise ValueError(f"smallest part {k} occurs fewer than {m - 1} times")
    return parts[1:] + (k,)


def _check_overpartition(parts) -> en.Overpartition:
    parts = tuple((int(v), bool(ov)) for v, ov in parts)
    values = [v for v, _ in parts]
    if not all(v >= 1 for v in values):
        raise ValueError("values must be positive")
    if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
        raise ValueError("values must be non-increasing")
    for i, (v, ov) in enumerate(parts):
        if ov and any(v2 == v and ov2 for v2, ov2 in parts[:i]):
            raise ValueError("at most one overlined copy per value")
        if ov and i > 0 and parts[i - 1] == (v, False):
            raise ValueError("the overlined copy must be listed first")
    return parts


def bijection_over1(parts, n: int):
    """Add n to the rightmost smallest part; return both largest-part marks.

    Maps an overpartition of n with smallest-part multiplicity >= 2 to the
    two overpartitions of 2n with difference n that share everything but
    the overline of the new largest part.
    """
    parts = _check_overpartition(parts)
    if sum(v for v, _ in parts) != n:
        raise ValueError(f"parts do not sum to {n}")
    if not parts:
        raise ValueError("the empty overpartition has no smallest part")
    smallest = parts[-1][0]
    if sum(1 for v, _ in parts if v == smallest) < 2:
        raise ValueError("smallest part must occur at least twice")
    # canonical order puts the overlined copy first, so the rightmost
    # smallest part is plain
    assert parts[-1] == (smallest, False)
    rest = parts[:-1]
    big = smallest + n
    return ((big, False),) + rest, ((big, True),) + rest
