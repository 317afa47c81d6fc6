"""Truncated formal Laurent series over the integers.

A series value stores exact integer coefficients for every exponent e with
``min_exp <= e < trunc_order``.  Exponents below ``min_exp`` are structurally
zero; exponents at or past ``trunc_order`` are *unknown*, and reading them is
an error rather than a silent zero.  All operations propagate the truncation
window pessimistically, so a coefficient you can read is always correct.

Values are immutable; every operation returns a new series.
"""

from __future__ import annotations

from dataclasses import dataclass


class SeriesError(ValueError):
    """Base class for series arithmetic errors."""


class WindowError(SeriesError):
    """A coefficient outside the known window was requested or required."""


class NonInvertibleError(SeriesError):
    """Inversion of a series whose lowest nonzero coefficient is not a unit."""


@dataclass(frozen=True)
class LaurentSeries:
    """A Laurent series truncated at ``trunc_order``.

    ``coeffs[i]`` is the coefficient of ``q**(min_exp + i)``; the tuple spans
    the whole window, so ``len(coeffs) == trunc_order - min_exp``.
    """

    min_exp: int
    coeffs: tuple[int, ...]
    trunc_order: int

    def __post_init__(self) -> None:
        if self.min_exp > self.trunc_order:
            raise WindowError(
                f"min_exp {self.min_exp} exceeds trunc_order {self.trunc_order}"
            )
        if len(self.coeffs) != self.trunc_order - self.min_exp:
            raise WindowError(
                f"coefficient storage ({len(self.coeffs)}) does not match window "
                f"[{self.min_exp}, {self.trunc_order})"
            )

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, order: int, min_exp: int = 0) -> "LaurentSeries":
        """The zero series with window [min_exp, order)."""
        if min_exp > order:
            min_exp = order
        return cls(min_exp, (0,) * (order - min_exp), order)

    @classmethod
    def monomial(cls, c: int, e: int, order: int) -> "LaurentSeries":
        """The single term c*q**e known up to ``order``."""
        if e >= order:
            raise WindowError(f"monomial exponent {e} not below trunc_order {order}")
        lo = min(e, 0)
        coeffs = [0] * (order - lo)
        coeffs[e - lo] = c
        return cls(lo, tuple(coeffs), order)

    @classmethod
    def one(cls, order: int) -> "LaurentSeries":
        return cls.monomial(1, 0, order)

    @classmethod
    def from_coeffs(cls, coeffs, min_exp: int = 0, order: int | None = None) -> "LaurentSeries":
        """Series from a coefficient list starting at ``min_exp``.

        With ``order`` given, the list is zero-padded (the extra coefficients
        are declared exactly zero, as for a polynomial).
        """
        coeffs = list(coeffs)
        if order is None:
            order = min_exp + len(coeffs)
        pad = order - min_exp - len(coeffs)
        if pad < 0:
            raise WindowError("order smaller than the provided coefficients")
        return cls(min_exp, tuple(coeffs) + (0,) * pad, order)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def coeff(self, n: int) -> int:
        """The coefficient of q**n; raises WindowError outside the window."""
        if not self.min_exp <= n < self.trunc_order:
            raise WindowError(
                f"exponent {n} outside known window [{self.min_exp}, {self.trunc_order})"
            )
        return self.coeffs[n - self.min_exp]

    def _get(self, n: int) -> int:
        # Coefficient with structural zeros below min_exp; caller guarantees
        # n < trunc_order.
        if n < self.min_exp:
            return 0
        return self.coeffs[n - self.min_exp]

    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, or None if none stored."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.min_exp + i
        return None

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return self.valuation() is None

    def terms(self):
        """Yield (exponent, coefficient) for each nonzero known coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def eq_to(self, other: "LaurentSeries", order: int) -> bool:
        """Coefficientwise equality for all exponents below ``order``.

        Leading zeros are ignored: an exponent below one operand's min_exp
        compares as zero.  Requires both windows to reach ``order``.
        """
        if order > self.trunc_order or order > other.trunc_order:
            raise WindowError(
                f"comparison order {order} exceeds a window "
                f"({self.trunc_order}, {other.trunc_order})"
            )
        lo = min(self.min_exp, other.min_exp)
        for e in range(lo, order):
            if self._get(e) != other._get(e):
                return False
        return True

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equality on the largest window both sides know."""
        return self.eq_to(other, min(self.trunc_order, other.trunc_order))

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def add(self, other: "LaurentSeries") -> "LaurentSeries":
        """Coefficientwise sum; the window shrinks to what both sides know."""
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.trunc_order, other.trunc_order)
        if lo > hi:
            lo = hi
        out = [self._get(e) + other._get(e) for e in range(lo, hi)]
        return LaurentSeries(lo, tuple(out), hi)

    def neg(self) -> "LaurentSeries":
        return LaurentSeries(self.min_exp, tuple(-c for c in self.coeffs), self.trunc_order)

    def sub(self, other: "LaurentSeries") -> "LaurentSeries":
        return self.add(other.neg())

    def scale(self, c: int) -> "LaurentSeries":
        """Multiply every coefficient by the integer c."""
        return LaurentSeries(self.min_exp, tuple(c * x for x in self.coeffs), self.trunc_order)

    def mul(self, other: "LaurentSeries") -> "LaurentSeries":
        """Cauchy product on the largest window the inputs can certify.

        The result is known for e < min(a.trunc + b.min, b.trunc + a.min):
        past that, coefficients would need unknown terms of one factor.
        """
        lo = self.min_exp + other.min_exp
        hi = min(self.trunc_order + other.min_exp, other.trunc_order + self.min_exp)
        n = hi - lo  # == min(len(a), len(b)) window lengths
        a, b = self.coeffs, other.coeffs
        la, lb = len(a), len(b)
        out = [0] * n
        for i in range(min(la, n)):
            ai = a[i]
            if ai:
                jmax = min(lb, n - i)
                for j in range(jmax):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return LaurentSeries(lo, tuple(out), hi)

    def inverse(self, order: int) -> "LaurentSeries":
        """Multiplicative inverse with ``order`` computed coefficients.

        The lowest nonzero coefficient must be +1 or -1 (a unit over the
        integers), and the input window must supply ``order`` coefficients
        starting from that valuation.
        """
        v = self.valuation()
        if v is None:
            raise NonInvertibleError("cannot invert the zero series")
        u0 = self.coeffs[v - self.min_exp]
        if u0 not in (1, -1):
            raise NonInvertibleError(
                f"lowest nonzero coefficient {u0} is not a unit; cannot invert exactly"
            )
        if order < 1:
            raise WindowError("inverse needs a positive number of coefficients")
        if v + order > self.trunc_order:
            raise WindowError(
                f"inverse to {order} coefficients needs the input known on "
                f"[{v}, {v + order}), but its window ends at {self.trunc_order}"
            )
        base = v - self.min_exp
        u = self.coeffs[base : base + order]
        inv = [0] * order
        inv[0] = u0  # 1/u0 == u0 for u0 = +-1
        for n in range(1, order):
            s = 0
            for i in range(1, n + 1):
                ui = u[i]
                if ui:
                    s += ui * inv[n - i]
            inv[n] = -u0 * s
        return LaurentSeries(-v, tuple(inv), -v + order)

    # ------------------------------------------------------------------
    # structural operations
    # ------------------------------------------------------------------

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q**k: exponents and window translate by k."""
        return LaurentSeries(self.min_exp + k, self.coeffs, self.trunc_order + k)

    def pos_part(self) -> "LaurentSeries":
        """Keep only exponents >= 1 (window unchanged)."""
        out = tuple(
            c if self.min_exp + i >= 1 else 0 for i, c in enumerate(self.coeffs)
        )
        return LaurentSeries(self.min_exp, out, self.trunc_order)

    def nonpos_part(self) -> "LaurentSeries":
        """Keep only exponents <= 0 (window unchanged)."""
        out = tuple(
            c if self.min_exp + i <= 0 else 0 for i, c in enumerate(self.coeffs)
        )
        return LaurentSeries(self.min_exp, out, self.trunc_order)

    def truncate(self, order: int) -> "LaurentSeries":
        """Shrink the window to end at ``order`` (never unsound)."""
        hi = min(self.trunc_order, order)
        if hi >= self.trunc_order:
            return self
        lo = min(self.min_exp, hi)
        return LaurentSeries(lo, self.coeffs[: hi - lo], hi)

    def extend(self, order: int) -> "LaurentSeries":
        """Declare zero coefficients up to ``order``.

        Only valid when the value is an exact (Laurent) polynomial whose
        support ends inside the current window; the caller asserts that.
        """
        if order <= self.trunc_order:
            return self
        pad = (0,) * (order - self.trunc_order)
        return LaurentSeries(self.min_exp, self.coeffs + pad, order)

    # ------------------------------------------------------------------
    # in-window binomial helpers (window-preserving, O(len) each)
    # ------------------------------------------------------------------

    def mul_binomial(self, c: int, j: int) -> "LaurentSeries":
        """Multiply by the exact polynomial (1 - c*q**j), j >= 1."""
        if j < 1:
            raise WindowError("binomial exponent must be positive")
        out = list(self.coeffs)
        for i in range(len(out) - 1, j - 1, -1):
            out[i] -= c * out[i - j]
        return LaurentSeries(self.min_exp, tuple(out), self.trunc_order)

    def div_binomial(self, c: int, j: int) -> "LaurentSeries":
        """Divide by (1 - c*q**j), j >= 1 (always a unit)."""
        if j < 1:
            raise WindowError("binomial exponent must be positive")
        out = list(self.coeffs)
        for i in range(j, len(out)):
            out[i] += c * out[i - j]
        return LaurentSeries(self.min_exp, tuple(out), self.trunc_order)

    # ------------------------------------------------------------------
    # operators / display
    # ------------------------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self.add(other)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self.sub(other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self.mul(other)

    def __neg__(self) -> "LaurentSeries":
        return self.neg()

    def __str__(self) -> str:
        parts = []
        for e, c in self.terms():
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}q^{e}" if e != 1 else f"{mag}q"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        body = " ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.trunc_order})"
