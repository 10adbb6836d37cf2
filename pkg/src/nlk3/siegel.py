"""Sparse truncated Fourier expansions of genus-2 Siegel modular forms.

A series is a finite map (k, l, m) -> Fraction giving the coefficient of
qt^k p^l q^m, exact within declared truncation bounds 0 <= k <= trunc_k,
0 <= m <= trunc_m, |l| <= trunc_l.  The weight-10 cusp form is expanded from
its infinite product, whose exponents c(4rt - s^2) come from a shipped
half-integral-weight coefficient table; the weight-4 and weight-6 Eisenstein
factors are shipped coefficient data.  A two-parameter fit against these two
forms turns a handful of observed coefficients into predicted degrees of
special divisors.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt


def default_trunc_l(trunc_k: int, trunc_m: int) -> int:
    """|l| window wide enough for truncated products: every term retained by
    the (k, m) bounds has |l| <= k + m + 2."""
    return 2 * max(trunc_k, trunc_m) + 2


@dataclass(frozen=True)
class GenusTwoSeries:
    """Coefficients of a genus-2 Fourier expansion, exact up to truncation."""

    coeffs: dict
    trunc_k: int
    trunc_m: int
    trunc_l: int

    def __init__(self, coeffs, trunc_k: int, trunc_m: int, trunc_l: int | None = None):
        if trunc_l is None:
            trunc_l = default_trunc_l(trunc_k, trunc_m)
        if min(trunc_k, trunc_m, trunc_l) < 0:
            raise ValueError("truncation bounds must be non-negative")
        stored = {}
        for key, value in coeffs.items():
            k, l, m = key
            value = Fraction(value)
            if value == 0:
                continue
            if k < 0 or m < 0:
                raise ValueError(f"negative exponent at index {key}")
            if k > trunc_k or m > trunc_m or abs(l) > trunc_l:
                raise ValueError(f"index {key} exceeds truncation ({trunc_k}, {trunc_m}, |l| <= {trunc_l})")
            stored[(k, l, m)] = value
        object.__setattr__(self, "coeffs", stored)
        object.__setattr__(self, "trunc_k", trunc_k)
        object.__setattr__(self, "trunc_m", trunc_m)
        object.__setattr__(self, "trunc_l", trunc_l)

    def coefficient(self, k: int, l: int, m: int) -> Fraction:
        """Exact coefficient; raises outside the truncation window rather than
        guessing zero."""
        if k < 0 or m < 0 or k > self.trunc_k or m > self.trunc_m or abs(l) > self.trunc_l:
            raise ValueError(f"index ({k}, {l}, {m}) lies beyond the truncation bounds")
        return self.coeffs.get((k, l, m), Fraction(0))


def series_one(trunc_k: int, trunc_m: int, trunc_l: int | None = None) -> GenusTwoSeries:
    return GenusTwoSeries({(0, 0, 0): 1}, trunc_k, trunc_m, trunc_l)


def series_mul(x: GenusTwoSeries, y: GenusTwoSeries) -> GenusTwoSeries:
    """Convolution product, truncated to the tighter of the two windows."""
    tk = min(x.trunc_k, y.trunc_k)
    tm = min(x.trunc_m, y.trunc_m)
    tl = min(x.trunc_l, y.trunc_l)
    acc: dict = {}
    for (k1, l1, m1), c1 in x.coeffs.items():
        if k1 > tk or m1 > tm:
            continue
        for (k2, l2, m2), c2 in y.coeffs.items():
            k, l, m = k1 + k2, l1 + l2, m1 + m2
            if k > tk or m > tm or abs(l) > tl:
                continue
            acc[(k, l, m)] = acc.get((k, l, m), 0) + c1 * c2
    return GenusTwoSeries(acc, tk, tm, tl)


def series_add(x: GenusTwoSeries, y: GenusTwoSeries) -> GenusTwoSeries:
    tk = min(x.trunc_k, y.trunc_k)
    tm = min(x.trunc_m, y.trunc_m)
    tl = min(x.trunc_l, y.trunc_l)
    acc: dict = {}
    for src in (x, y):
        for (k, l, m), c in src.coeffs.items():
            if k > tk or m > tm or abs(l) > tl:
                continue
            acc[(k, l, m)] = acc.get((k, l, m), 0) + c
    return GenusTwoSeries(acc, tk, tm, tl)


def series_scale(c, x: GenusTwoSeries) -> GenusTwoSeries:
    return GenusTwoSeries({key: c * v for key, v in x.coeffs.items()}, x.trunc_k, x.trunc_m, x.trunc_l)


def series_truncate(x: GenusTwoSeries, trunc_k: int, trunc_m: int, trunc_l: int | None = None) -> GenusTwoSeries:
    """Shrink the window; widening would claim knowledge the series lacks."""
    if trunc_l is None:
        trunc_l = min(x.trunc_l, default_trunc_l(trunc_k, trunc_m))
    if trunc_k > x.trunc_k or trunc_m > x.trunc_m or trunc_l > x.trunc_l:
        raise ValueError("cannot extend truncation bounds")
    kept = {
        (k, l, m): v
        for (k, l, m), v in x.coeffs.items()
        if k <= trunc_k and m <= trunc_m and abs(l) <= trunc_l
    }
    return GenusTwoSeries(kept, trunc_k, trunc_m, trunc_l)


def binomial_pow(monomial, c: int, trunc_k: int, trunc_m: int, trunc_l: int | None = None) -> GenusTwoSeries:
    """(1 - u)^c for a monomial u = qt^r p^s q^t and any integer c.

    Coefficient of u^j is (-1)^j binom(c, j); for c < 0 that equals
    binom(|c| + j - 1, j), an infinite expansion cut by the window.
    """
    r, s, t = monomial
    if trunc_l is None:
        trunc_l = default_trunc_l(trunc_k, trunc_m)
    if r < 0 or t < 0:
        raise ValueError("monomial exponents of qt and q must be non-negative")
    if (r, s, t) == (0, 0, 0):
        raise ValueError("monomial must be nonzero")
    bounds = []
    if r > 0:
        bounds.append(trunc_k // r)
    if t > 0:
        bounds.append(trunc_m // t)
    if r == 0 and t == 0:
        bounds.append(trunc_l // abs(s))
    jmax = min(bounds)
    if c >= 0:
        jmax = min(jmax, c)
    entries = {}
    for j in range(jmax + 1):
        if abs(j * s) > trunc_l:
            continue
        if c >= 0:
            coeff = (-1) ** j * comb(c, j)
        else:
            coeff = comb(-c + j - 1, j)
        entries[(j * r, j * s, j * t)] = coeff
    return GenusTwoSeries(entries, trunc_k, trunc_m, trunc_l)


# ---------------------------------------------------------------------------
# the weight-10 cusp form


@dataclass(frozen=True)
class HalfIntegralTable:
    """Exponents c(m) of the product expansion; c(m) = 0 for m < -1 and the
    pole coefficient c(-1) is pinned to 2."""

    values: dict
    support_max: int

    def __init__(self, values):
        vals = {}
        for m, c in values.items():
            m, c = int(m), int(c)
            if m < -1:
                raise ValueError(f"exponent c({m}) below the pole order")
            if c != 0:
                vals[m] = c
        if vals.get(-1) != 2:
            raise ValueError("pole coefficient c(-1) must be 2")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "support_max", max(vals))

    def c(self, m: int) -> int:
        if m < -1:
            return 0
        if m > self.support_max:
            raise ValueError(f"coefficient table exhausted: c({m}) is beyond the shipped support (max {self.support_max})")
        return self.values.get(m, 0)


def loads_half_integral(text: str) -> HalfIntegralTable:
    """Parse an exponent table: lines `m value`, '#' comments."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'm value', got {len(parts)} fields")
        try:
            m, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: malformed integer") from None
        if m in values:
            raise ValueError(f"line {lineno}: duplicate entry for m={m}")
        values[m] = c
    return HalfIntegralTable(values)


def dumps_half_integral(table: HalfIntegralTable) -> str:
    lines = ["# product exponents: m value"]
    for m in sorted(table.values):
        lines.append(f"{m} {table.values[m]}")
    return "\n".join(lines) + "\n"


def default_chi10_exponents() -> HalfIntegralTable:
    from importlib.resources import files

    return loads_half_integral(files("nlk3").joinpath("data/chi10_exponents.tbl").read_text())


def chi10(table: HalfIntegralTable | None = None, trunc_k: int = 2, trunc_m: int = 2) -> GenusTwoSeries:
    """Weight-10 cusp form qt p q * prod (1 - qt^r p^s q^t)^c(4rt - s^2).

    The leading monomial shifts every index up by one, so factors only need
    r <= trunc_k - 1 and t <= trunc_m - 1; the product runs over (r, s, t) > 0,
    meaning r > 0, or t > 0, or r = t = 0 with s < 0.  Exponents vanish below
    argument -1, which bounds |s| by s^2 <= 4rt + 1.
    """
    if table is None:
        table = default_chi10_exponents()
    if trunc_k < 1 or trunc_m < 1:
        raise ValueError("truncation must include the leading index (1, 1, 1)")
    out_l = default_trunc_l(trunc_k, trunc_m)
    # factor terms obey |l| <= k + m + 2 <= trunc_k + trunc_m, so this inner
    # window never clips a contributing term
    inner_l = out_l + 1
    prod = series_one(trunc_k - 1, trunc_m - 1, inner_l)
    for r in range(trunc_k):
        for t in range(trunc_m):
            if r == 0 and t == 0:
                svals = range(-1, 0)
            else:
                smax = isqrt(4 * r * t + 1)
                svals = range(-smax, smax + 1)
            for s in svals:
                exponent = table.c(4 * r * t - s * s)
                if exponent == 0:
                    continue
                factor = binomial_pow((r, s, t), exponent, trunc_k - 1, trunc_m - 1, inner_l)
                prod = series_mul(prod, factor)
    shifted = {}
    for (k, l, m), value in prod.coeffs.items():
        if abs(l + 1) <= out_l:
            shifted[(k + 1, l + 1, m + 1)] = value
    return GenusTwoSeries(shifted, trunc_k, trunc_m, out_l)


# ---------------------------------------------------------------------------
# Eisenstein coefficient tables


def loads_coeff_table(text: str) -> GenusTwoSeries:
    """Parse `k l m value` lines ('#' comments) and close them under the index
    symmetries (k, l, m) -> (m, l, k) and (k, l, m) -> (k, -l, m).

    Truncation bounds are inferred from the stored support: the file is the
    complete list of nonzero coefficients within them.
    """
    canonical = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 'k l m value', got {len(parts)} fields")
        try:
            k, l, m = (int(p) for p in parts[:3])
            value = Fraction(parts[3])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: malformed entry") from None
        if k < 0 or m < 0:
            raise ValueError(f"line {lineno}: negative exponent")
        canon = (min(k, m), abs(l), max(k, m))
        if canon in canonical:
            raise ValueError(f"line {lineno}: duplicate entry for orbit {canon}")
        canonical[canon] = value
    expanded = {}
    for (k, l, m), value in canonical.items():
        for key in {(k, l, m), (k, -l, m), (m, l, k), (m, -l, k)}:
            expanded[key] = value
    if expanded:
        tk = max(k for k, _, _ in expanded)
        tm = max(m for _, _, m in expanded)
        tl = max(abs(l) for _, l, _ in expanded)
    else:
        tk = tm = tl = 0
    return GenusTwoSeries(expanded, tk, tm, tl)


def dumps_coeff_table(series: GenusTwoSeries) -> str:
    """Write one symmetry representative (l >= 0, k <= m) per orbit, sorted."""
    canonical = {}
    for (k, l, m), value in series.coeffs.items():
        canon = (min(k, m), abs(l), max(k, m))
        if canonical.setdefault(canon, value) != value:
            raise ValueError(f"entries in the symmetry orbit of {canon} disagree")
    lines = ["# genus-2 Fourier coefficients: k l m value (one representative per symmetry orbit)"]
    for k, l, m in sorted(canonical):
        lines.append(f"{k} {l} {m} {canonical[(k, l, m)]}")
    return "\n".join(lines) + "\n"


def _load_data_table(name: str) -> GenusTwoSeries:
    from importlib.resources import files

    return loads_coeff_table(files("nlk3").joinpath(f"data/{name}").read_text())


def e4_series() -> GenusTwoSeries:
    return _load_data_table("e4.tbl")


def e6_series() -> GenusTwoSeries:
    return _load_data_table("e6.tbl")


def e4e6(trunc_k: int = 1, trunc_m: int = 1, e4: GenusTwoSeries | None = None, e6: GenusTwoSeries | None = None) -> GenusTwoSeries:
    """Product of the weight-4 and weight-6 Eisenstein series from their
    coefficient tables."""
    if e4 is None:
        e4 = e4_series()
    if e6 is None:
        e6 = e6_series()
    if trunc_k > min(e4.trunc_k, e6.trunc_k) or trunc_m > min(e4.trunc_m, e6.trunc_m):
        raise ValueError(f"truncation ({trunc_k}, {trunc_m}) beyond table support")
    product = series_mul(e4, e6)
    return series_truncate(product, trunc_k, trunc_m, product.trunc_l)


# ---------------------------------------------------------------------------
# fitting and prediction


@dataclass(frozen=True)
class Weight10Fit:
    """Coefficients of a form a * E4E6 + b * chi10."""

    a: Fraction
    b: Fraction

    def __init__(self, a, b):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))


def _basis_series(trunc_k, trunc_m, exponents, e4, e6):
    eis = e4e6(trunc_k, trunc_m, e4, e6)
    cusp = chi10(exponents, trunc_k, trunc_m)
    return eis, cusp


def fit_weight10(observations, exponents: HalfIntegralTable | None = None, e4: GenusTwoSeries | None = None, e6: GenusTwoSeries | None = None) -> Weight10Fit:
    """Solve coefficient observations for a form a * E4E6 + b * chi10.

    The first two observations in index order fix (a, b) by a 2x2 solve; any
    remaining observations must match exactly.
    """
    obs = sorted((tuple(key), Fraction(value)) for key, value in observations.items())
    if len(obs) < 2:
        raise ValueError("need at least two observations")
    trunc_k = max(1, max(k for (k, _, _), _ in obs))
    trunc_m = max(1, max(m for (_, _, m), _ in obs))
    eis, cusp = _basis_series(trunc_k, trunc_m, exponents, e4, e6)
    (i1, v1), (i2, v2) = obs[0], obs[1]
    e1, x1 = eis.coefficient(*i1), cusp.coefficient(*i1)
    e2, x2 = eis.coefficient(*i2), cusp.coefficient(*i2)
    det = e1 * x2 - e2 * x1
    if det == 0:
        raise ValueError(f"singular system from observations at {i1} and {i2}")
    a = (v1 * x2 - v2 * x1) / det
    b = (e1 * v2 - e2 * v1) / det
    for idx, value in obs[2:]:
        fitted = a * eis.coefficient(*idx) + b * cusp.coefficient(*idx)
        if fitted != value:
            raise ValueError(f"inconsistent observation at {idx}: fit gives {fitted}, observed {value}")
    return Weight10Fit(a, b)


PREDICTIONS = {
    "cuspidal": (1, 1, 1),
    "binodal": (1, 0, 1),
    "hodge-disc": (0, 0, 1),
    "hodge-sq": (0, 0, 0),
}


def predict_nl(fit: Weight10Fit, which: str, exponents: HalfIntegralTable | None = None, e4: GenusTwoSeries | None = None, e6: GenusTwoSeries | None = None) -> Fraction:
    """Special-divisor degree read off the fitted form.

    Coefficients at the rank-2 indices count singular fibers twice, so the
    cuspidal and binodal predictions are halved.  The disc-bundle degree is
    reported as a magnitude: the fitted form carries it with a negative sign.
    """
    if which not in PREDICTIONS:
        raise ValueError(f"unknown prediction {which!r}; valid: {', '.join(sorted(PREDICTIONS))}")
    idx = PREDICTIONS[which]
    eis, cusp = _basis_series(1, 1, exponents, e4, e6)
    value = fit.a * eis.coefficient(*idx) + fit.b * cusp.coefficient(*idx)
    if which in ("cuspidal", "binodal"):
        return value / 2
    if which == "hodge-disc":
        return abs(value)
    return value


# (cuspidal, binodal) counts of the degree-4 hyperelliptic comparison family
HYPERELLIPTIC_NL = (864, 7656)


def independence_check(fit: Weight10Fit, exponents: HalfIntegralTable | None = None, e4: GenusTwoSeries | None = None, e6: GenusTwoSeries | None = None) -> bool:
    """True iff the fitted form's (cuspidal, binodal) vector is not
    proportional to the hyperelliptic one."""
    if fit.a == 0 and fit.b == 0:
        raise ValueError("zero form has no direction")
    cuspidal = predict_nl(fit, "cuspidal", exponents, e4, e6)
    binodal = predict_nl(fit, "binodal", exponents, e4, e6)
    return cuspidal * HYPERELLIPTIC_NL[1] != binodal * HYPERELLIPTIC_NL[0]
