"""Brute-force partition generators and counters: the ground-truth oracles.

Partitions are tuples of parts in non-increasing order; overpartitions are
tuples of ``(value, overlined)`` pairs, values non-increasing with the
overlined copy listed first among equal values.

The counting functions enumerate run-encoded partitions (distinct value,
multiplicity) with an explicit stack and tally histograms keyed by the
multiplicity of the smallest part; one sweep covers every n up to a bound
at a cost of one visit per partition.  ``count_p`` alone uses the
pentagonal-number recurrence.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import chain

Partition = tuple[int, ...]
Overpartition = tuple[tuple[int, bool], ...]


@dataclass(frozen=True)
class PartitionFilter:
    """Composable restrictions on generated partitions.

    min_part: every part at least this value.
    smallest_mult_min: the smallest part occurs at least this many times.
    exact_diff: largest part minus smallest part equals this value.
    excluded_modulus: no part divisible by this modulus (>= 2).

    The empty partition (n = 0) passes min_part and modulus vacuously but
    fails exact_diff and smallest_mult_min, which need a smallest part.
    """

    min_part: int | None = None
    smallest_mult_min: int | None = None
    exact_diff: int | None = None
    excluded_modulus: int | None = None

    def __post_init__(self) -> None:
        if self.min_part is not None and self.min_part < 1:
            raise ValueError("min_part must be positive")
        if self.smallest_mult_min is not None and self.smallest_mult_min < 1:
            raise ValueError("smallest_mult_min must be positive")
        if self.exact_diff is not None and self.exact_diff < 0:
            raise ValueError("exact_diff must be non-negative")
        if self.excluded_modulus is not None and self.excluded_modulus < 2:
            raise ValueError("excluded_modulus must be at least 2")

    def matches(self, parts: Partition) -> bool:
        """Does a (plain) partition satisfy every constraint?"""
        if not parts:
            return self.exact_diff is None and self.smallest_mult_min is None
        if self.min_part is not None and parts[-1] < self.min_part:
            return False
        if self.excluded_modulus is not None and any(
            p % self.excluded_modulus == 0 for p in parts
        ):
            return False
        if self.exact_diff is not None and parts[0] - parts[-1] != self.exact_diff:
            return False
        if self.smallest_mult_min is not None:
            if parts.count(parts[-1]) < self.smallest_mult_min:
                return False
        return True


EMPTY_FILTER = PartitionFilter()


# ----------------------------------------------------------------------
# p(n): pentagonal-number recurrence with a shared memo table
# ----------------------------------------------------------------------

_p_lock = threading.Lock()
_p_memo: list[int] = [1]


def count_p(n: int) -> int:
    """p(n), the number of partitions of n; 0 for negative n."""
    global _p_memo
    if n < 0:
        return 0
    if n < len(_p_memo):
        return _p_memo[n]
    with _p_lock:
        memo = list(_p_memo)
        for m in range(len(memo), n + 1):
            total = 0
            j = 1
            while True:
                g1 = j * (3 * j - 1) // 2
                if g1 > m:
                    break
                sign = 1 if j % 2 else -1
                total += sign * memo[m - g1]
                g2 = j * (3 * j + 1) // 2
                if g2 <= m:
                    total += sign * memo[m - g2]
                j += 1
            memo.append(total)
        _p_memo = memo
    return _p_memo[n]


def preload_p(values) -> None:
    """Install precomputed p(n) values (e.g. from a warm cache file).

    Values must extend or agree with what is already memoized; a mismatch
    raises rather than silently corrupting later counts.
    """
    global _p_memo
    values = [int(v) for v in values]
    with _p_lock:
        overlap = min(len(values), len(_p_memo))
        if values[:overlap] != _p_memo[:overlap]:
            raise ValueError("preloaded p(n) values disagree with computed ones")
        if len(values) > len(_p_memo):
            _p_memo = values


# ----------------------------------------------------------------------
# histogram sweeps: one DFS pass covers all n <= nmax
# ----------------------------------------------------------------------


def _sweep_plain(nmax: int, lo: int, mod: int | None, over: bool):
    # H[n][c] accumulates partitions of n whose smallest run is (v, c);
    # every run-prefix in the DFS tree is itself a partition of its sum,
    # so each qualifying partition of each n <= nmax is visited once.
    # For overpartitions each value run may carry one overline: weight 2^runs.
    H: list[dict[int, int]] = [{} for _ in range(nmax + 1)]
    if nmax < 1:
        return H
    w0 = 2 if over else 1
    stack = [(nmax + 1, 0, w0)]
    push = stack.append
    pop = stack.pop
    while stack:
        prev, used, w = pop()
        avail = nmax - used
        v = prev - 1
        if v > avail:
            v = avail
        w2 = w + w if over else w
        while v >= lo:
            if mod and v % mod == 0:
                v -= 1
                continue
            cmax = avail // v
            u = used + v
            extend = v > lo
            c = 1
            while c <= cmax:
                h = H[u]
                if c in h:
                    h[c] += w
                else:
                    h[c] = w
                if extend and nmax - u >= lo:
                    push((v, u, w2))
                c += 1
                u += v
            v -= 1
    return H


def _sweep_diff(nmax: int, t: int, lo: int, mod: int | None, over: bool):
    # Same tally restricted to partitions with largest - smallest == t.
    H: list[dict[int, int]] = [{} for _ in range(nmax + 1)]
    w0 = 2 if over else 1
    if t == 0:
        for a in range(lo, nmax + 1):
            if mod and a % mod == 0:
                continue
            u, c = a, 1
            while u <= nmax:
                h = H[u]
                if c in h:
                    h[c] += w0
                else:
                    h[c] = w0
                c += 1
                u += a
        return H
    for a in range(lo + t, nmax + 1):
        if mod and (a % mod == 0 or (a - t) % mod == 0):
            continue
        floor = a - t
        stack = []
        push = stack.append
        u = a
        wa = w0 + w0 if over else w0
        while u + floor <= nmax:
            push((a, u, wa))
            u += a
        while stack:
            prev, used, w = stack.pop()
            avail = nmax - used
            v = prev - 1
            if v > avail:
                v = avail
            w2 = w + w if over else w
            while v >= floor:
                if mod and v % mod == 0:
                    v -= 1
                    continue
                cmax = avail // v
                u = used + v
                if v == floor:
                    c = 1
                    while c <= cmax:
                        h = H[u]
                        if c in h:
                            h[c] += w
                        else:
                            h[c] = w
                        c += 1
                        u += v
                else:
                    c = 1
                    while c <= cmax:
                        if nmax - u >= floor:
                            push((v, u, w2))
                        c += 1
                        u += v
                v -= 1
    return H


class _HistCache:
    """Grow-on-demand store of sweep results, keyed by the filter shape."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._data: dict[tuple, tuple[int, list[dict[int, int]]]] = {}

    def get(self, n: int, *, lo: int = 1, mod: int | None = None,
            diff: int | None = None, over: bool = False) -> dict[int, int]:
        if n < 0:
            return {}
        key = (lo, mod, diff, over)
        entry = self._data.get(key)
        if entry is None or entry[0] < n:
            with self._lock:
                entry = self._data.get(key)
                if entry is None or entry[0] < n:
                    # modest headroom: enumeration cost grows so fast in the
                    # bound that doubling would dwarf the queries themselves
                    old = entry[0] if entry else 0
                    nmax = max(n, 16, old + max(8, old // 8))
                    if diff is None:
                        H = _sweep_plain(nmax, lo, mod, over)
                    else:
                        H = _sweep_diff(nmax, diff, lo, mod, over)
                    entry = (nmax, H)
                    self._data[key] = entry
        return entry[1][n]

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_hists = _HistCache()


def _total(hist: dict[int, int], m: int = 1) -> int:
    if m <= 1:
        return sum(hist.values())
    return sum(cnt for c, cnt in hist.items() if c >= m)


# ----------------------------------------------------------------------
# counting functions (plain partitions)
# ----------------------------------------------------------------------


def count_p_fixed_diff(n: int, t: int) -> int:
    """Partitions of n with largest part minus smallest part exactly t."""
    if t < 0:
        raise ValueError("difference must be non-negative")
    if n < 1:
        return 0
    return _total(_hists.get(n, diff=t))


def count_a(m: int, n: int) -> int:
    """Partitions of n whose smallest part occurs at least m times."""
    if m < 1:
        raise ValueError("multiplicity bound must be positive")
    if n < 1:
        return 0
    return _total(_hists.get(n), m)


def count_a_diff(m: int, n: int, d: int) -> int:
    """As count_a, additionally requiring largest - smallest == d."""
    if m < 1:
        raise ValueError("multiplicity bound must be positive")
    if d < 0:
        raise ValueError("difference must be non-negative")
    if n < 1:
        return 0
    return _total(_hists.get(n, diff=d), m)


def count_Q(l: int, k: int, n: int, convention: str = "at_least") -> int:
    """Partitions of n - l*(k-1) with smallest part k.

    Under ``at_least`` the smallest part is >= k and the empty partition
    counts 1 when the target is zero; under ``exactly`` the smallest part
    equals k and the empty partition counts 0.  Both conventions stay
    callable; verification fixed ``at_least`` as the reading that makes the
    smallest-multiplicity formula close (see the identities registry).
    """
    if l < 2 or k < 3:
        raise ValueError("requires l >= 2 and k >= 3")
    if convention not in ("at_least", "exactly"):
        raise ValueError(f"unknown convention {convention!r}")
    target = n - l * (k - 1)
    if target < 0:
        return 0
    if target == 0:
        return 1 if convention == "at_least" else 0
    at_least = _total(_hists.get(target, lo=k))
    if convention == "at_least":
        return at_least
    return at_least - _total(_hists.get(target, lo=k + 1))


def count_p_star(m: int, n: int) -> int:
    """Partitions of n with least part >= m; 1 at n == 0."""
    if m < 1:
        raise ValueError("minimum part must be positive")
    if n < 0:
        return 0
    if n == 0:
        return 1
    return _total(_hists.get(n, lo=m))


# ----------------------------------------------------------------------
# counting functions (overpartitions)
# ----------------------------------------------------------------------


def count_pbar(n: int) -> int:
    """Number of overpartitions of n; 1 at n == 0."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    return _total(_hists.get(n, over=True))


def count_pbar_diff(n: int, t: int) -> int:
    """Overpartitions of n with largest value minus smallest value exactly t."""
    if t < 0:
        raise ValueError("difference must be non-negative")
    if n < 1:
        return 0
    return _total(_hists.get(n, diff=t, over=True))


def count_abar(m: int, n: int) -> int:
    """Overpartitions of n whose smallest part occurs at least m times.

    Overlined and plain copies of the smallest value count together.
    """
    if m < 1:
        raise ValueError("multiplicity bound must be positive")
    if n < 1:
        return 0
    return _total(_hists.get(n, over=True), m)


def count_abar_diff(m: int, n: int, d: int) -> int:
    """As count_abar with largest - smallest == d."""
    if m < 1:
        raise ValueError("multiplicity bound must be positive")
    if d < 0:
        raise ValueError("difference must be non-negative")
    if n < 1:
        return 0
    return _total(_hists.get(n, diff=d, over=True), m)


def is_ubar_counted(parts: Overpartition) -> bool:
    """The three side conditions selecting the u-bar overpartitions.

    (1) no plain (non-overlined) part equal to 1;
    (2) the smallest part is overlined and its value occurs only once;
    (3) at least two parts, whose top two values are equal, or consecutive
        with the second-greatest part overlined.
    """
    if len(parts) < 2:
        return False
    for v, ov in parts:
        if v == 1 and not ov:
            return False
    sv, s_ov = parts[-1]
    if not s_ov or (len(parts) > 1 and parts[-2][0] == sv):
        return False
    v0 = parts[0][0]
    v1, ov1 = parts[1]
    if v0 == v1:
        return True
    return v0 == v1 + 1 and ov1


def count_ubar(n: int) -> int:
    """Overpartitions of n satisfying the u-bar side conditions."""
    if n < 1:
        return 0
    return sum(1 for op in gen_overpartitions(n) if is_ubar_counted(op))


# ----------------------------------------------------------------------
# counting functions (l-regular partitions)
# ----------------------------------------------------------------------


def count_breg(l: int, n: int) -> int:
    """Partitions of n with no part divisible by l; 1 at n == 0."""
    if l < 2:
        raise ValueError("regularity modulus must be at least 2")
    if n < 0:
        return 0
    if n == 0:
        return 1
    return _total(_hists.get(n, mod=l))


def count_breg_diff(l: int, n: int, t: int) -> int:
    """l-regular partitions of n with largest - smallest == t."""
    if l < 2:
        raise ValueError("regularity modulus must be at least 2")
    if n < 1:
        return 0
    return _total(_hists.get(n, mod=l, diff=t))


def count_areg(m: int, l: int, n: int) -> int:
    """l-regular partitions of n with smallest part occurring >= m times."""
    if m < 1 or l < 2:
        raise ValueError("requires m >= 1 and l >= 2")
    if n < 1:
        return 0
    return _total(_hists.get(n, mod=l), m)


def count_areg_diff(m: int, l: int, n: int, k: int) -> int:
    """As count_areg with largest - smallest == k."""
    if m < 1 or l < 2:
        raise ValueError("requires m >= 1 and l >= 2")
    if k < 0:
        raise ValueError("difference must be non-negative")
    if n < 1:
        return 0
    return _total(_hists.get(n, mod=l, diff=k), m)


# ----------------------------------------------------------------------
# streaming generators (decreasing lexicographic order)
# ----------------------------------------------------------------------


def _gen_runs(n: int, f: PartitionFilter):
    """Yield run lists [(value, count), ...] of qualifying partitions.

    Values strictly decrease along each list; partitions appear in
    decreasing lexicographic order.  Iterative DFS with an explicit stack.
    """
    lo = f.min_part or 1
    mod = f.excluded_modulus
    t = f.exact_diff
    mult = f.smallest_mult_min
    if n == 0:
        if t is None and mult is None:
            yield []
        return

    root_floor = lo if t is None else lo + t

    def first_cand(used, bound, floor):
        rem = n - used
        v = bound if bound < rem else rem
        while v >= floor:
            if not (mod and v % mod == 0):
                return v, rem // v
            v -= 1
        return None

    def next_cand(v, c, used, floor):
        if c > 1:
            return v, c - 1
        rem = n - used
        v -= 1
        while v >= floor:
            if not (mod and v % mod == 0):
                return v, rem // v
            v -= 1
        return None

    frames: list[tuple[int, int, int]] = []  # (v, c, used_before)
    runs: list[tuple[int, int]] = []
    used = 0
    cand = first_cand(0, n, root_floor)
    while True:
        if cand is None:
            if not frames:
                return
            v, c, used = frames.pop()
            runs.pop()
            floor = root_floor if not frames else (lo if t is None else runs[0][0] - t)
            cand = next_cand(v, c, used, floor)
            continue
        v, c = cand
        total = used + v * c
        frames.append((v, c, used))
        runs.append((v, c))
        if total == n:
            ok = mult is None or c >= mult
            if ok and t is not None:
                ok = v == runs[0][0] - t
            if ok:
                yield runs
            frames.pop()
            runs.pop()
            floor = root_floor if not frames else (lo if t is None else runs[0][0] - t)
            cand = next_cand(v, c, used, floor)
        else:
            used = total
            floor = lo if t is None else runs[0][0] - t
            cand = first_cand(used, v - 1, floor)


def gen_partitions(n: int, f: PartitionFilter = EMPTY_FILTER):
    """Yield each qualifying partition of n once, in decreasing lex order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for runs in _gen_runs(n, f):
        yield tuple(chain.from_iterable((v,) * c for v, c in runs))


def gen_overpartitions(n: int, f: PartitionFilter = EMPTY_FILTER):
    """Yield each canonical overpartition of n exactly once.

    For every base partition (decreasing lex), the overline subsets are
    emitted in binary-counter order with the largest distinct value as the
    low bit.  Smallest-part multiplicity counts overlined and plain copies
    of the smallest value together, so the filter acts on the base alone.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for runs in _gen_runs(n, f):
        d = len(runs)
        for mask in range(1 << d):
            parts: list[tuple[int, bool]] = []
            for i, (v, c) in enumerate(runs):
                if mask >> i & 1:
                    parts.append((v, True))
                    parts.extend(((v, False),) * (c - 1))
                else:
                    parts.extend(((v, False),) * c)
            yield tuple(parts)


def format_overpartition(parts: Overpartition) -> str:
    """Human-readable rendering, overlined values marked with a trailing '~'."""
    if not parts:
        return "0"
    return "+".join(f"{v}~" if ov else str(v) for v, ov in parts)
