"""Noether-Lefschetz divisor bookkeeping for genus-g K3 moduli.

A key (g, d, n) records a Picard class beta with beta.L = d, beta^2 = n on a
quasi-polarized K3 of genus g.  The reduced locus only depends on the lattice
<L, beta>, i.e. on the discriminant Delta = (2g-2)n - d^2 and on d mod 2g-2;
an irreducible such locus with Delta < 0 is cut out by a vector of half-norm
Delta/(4g-4).  General (non-primitive) loci decompose into primitive ones
with multiplicities mu in {0, 1, 2}, counting the ways alpha = x*beta + y*L.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


@dataclass(frozen=True)
class NLKey:
    """Locus key: genus g, intersection d = beta.L, self-intersection n = beta^2."""

    g: int
    d: int
    n: int

    def __init__(self, g, d, n):
        g, d, n = int(g), int(d), int(n)
        if g < 2:
            raise ValueError("genus must be at least 2")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "n", n)


@dataclass(frozen=True)
class NLVectorData:
    """Vector-side data of an irreducible locus: half-norm of the cutting
    vector, its discriminant class as a multiple of the standard generator,
    and whether the orbit carries the v ~ -v identification."""

    half_norm: Fraction
    disc_class: int
    multiplicity_two: bool


def delta(key: NLKey) -> int:
    """Lattice discriminant (2g-2) n - d^2 of the key."""
    return (2 * key.g - 2) * key.n - key.d * key.d


def _t(key: NLKey) -> int:
    # d^2 - 2n(g-1) = -Delta; multiplicative under alpha = x beta + y L
    return key.d * key.d - 2 * key.n * (key.g - 1)


def nl_vector_data(key: NLKey) -> NLVectorData:
    """Half-norm, disc class d*pi, and the 2-torsion flag; requires Delta < 0."""
    dlt = delta(key)
    if dlt >= 0:
        raise ValueError(f"key {key} has Delta = {dlt} >= 0: no reduced locus")
    m = 2 * key.g - 2
    return NLVectorData(
        half_norm=Fraction(dlt, 2 * m),
        disc_class=key.d % m,
        multiplicity_two=(2 * key.d) % m == 0,
    )


def prim_equiv(a: NLKey, b: NLKey) -> bool:
    """Whether two keys cut the same primitive locus: equal d^2 - 2n(g-1) and
    d congruent mod 2g-2."""
    if a.g != b.g:
        raise ValueError("keys of different genus")
    m = 2 * a.g - 2
    return _t(a) == _t(b) and (a.d - b.d) % m == 0


VARIANTS = ("d-corrected", "as-written")


def mu_coefficient(target: NLKey, rep: NLKey, variant: str = "d-corrected") -> int:
    """Multiplicity of the primitive locus of rep inside the locus of target.

    Counts integer pairs (x, y) with (rep.d^2 - 2 rep.n (g-1)) x^2 =
    target.d^2 - 2 target.n (g-1) and (2g-2) y = target.d - x*c, where c is
    rep.d (default) or rep.n (variant "as-written", kept for comparison; it
    fails integrality even on identity decompositions).
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; valid: {', '.join(VARIANTS)}")
    if target.g != rep.g:
        raise ValueError("keys of different genus")
    ti = _t(rep)
    if ti <= 0:
        raise ValueError(f"representative {rep} has d^2 - 2n(g-1) = {ti} <= 0")
    t = _t(target)
    if t % ti != 0 or t < 0:
        return 0
    ratio = t // ti
    s = isqrt(ratio)
    if s * s != ratio:
        return 0
    m = 2 * target.g - 2
    c = rep.d if variant == "d-corrected" else rep.n
    count = 0
    for x in sorted({s, -s}):
        if (target.d - x * c) % m == 0:
            count += 1
    if count not in (0, 1, 2):
        raise RuntimeError(f"mu out of range: {count}")
    return count


def triangular_decomposition(key: NLKey, variant: str = "d-corrected"):
    """Decompose the locus of key into primitive loci with multiplicities.

    Returns ((rep, mu), ...) over canonical representatives: rep.d in
    [0, 2g-3], rep.n even (self-intersections in an even lattice), mu > 0.
    Sorted by |Delta| of the representative ascending, then rep.d ascending.
    Requires Delta(key) < 0.
    """
    dlt = delta(key)
    if dlt >= 0:
        raise ValueError(f"key {key} has Delta = {dlt} >= 0: nothing to decompose")
    g = key.g
    m = 2 * g - 2
    t = -dlt  # = _t(key) > 0
    out = []
    x = 1
    while x * x <= t:
        if t % (x * x) == 0:
            ti = t // (x * x)
            for di in range(m):
                if (x * di - key.d) % m != 0:
                    continue
                num = di * di - ti
                if num % m != 0:
                    continue
                ni = num // m
                if ni % 2 != 0:
                    continue
                rep = NLKey(g, di, ni)
                mu = mu_coefficient(key, rep, variant=variant)
                if mu > 0:
                    out.append((rep, mu))
        x += 1
    out.sort(key=lambda pair: (abs(delta(pair[0])), pair[0].d))
    return tuple(out)
