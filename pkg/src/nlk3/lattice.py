"""Even integral lattices with exact integer/rational arithmetic.

Everything here works over Z (or Q where duals force it): Gram matrices,
Smith normal form with unimodular transforms, discriminant groups with their
Q/2Z-valued quadratic form, divisibility and dual classes of vectors, and
orthogonal complements with explicit primitive embeddings.  No floats
anywhere; rationals are fractions.Fraction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


# ---------------------------------------------------------------------------
# integer matrix helpers


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def _mat_vec(a, x):
    return [sum(r[j] * x[j] for j in range(len(x))) for r in a]


def _freeze(m):
    return tuple(tuple(int(x) for x in row) for row in m)


def det(m) -> int:
    """Determinant of an integer matrix, by fraction-free Bareiss elimination."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by the Bareiss identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m):
    """Smith normal form with transforms: returns (d, u, v) with u*m*v = d.

    d is diagonal with non-negative entries and d[i] | d[i+1]; u and v are
    unimodular (det +-1).  All matrices are returned as tuples of tuples.
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(row) != cols for row in a):
        raise ValueError("ragged matrix")
    u = _identity(rows)
    v = _identity(cols)

    def row_op(i, k, q):  # a[i] -= q*a[k]
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_op(j, k, q):  # col j -= q*col k
        for r in a:
            r[j] -= q * r[k]
        for r in v:
            r[j] -= q * r[k]

    def row_swap(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def col_swap(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    for k in range(min(rows, cols)):
        while True:
            # move the smallest nonzero entry of the trailing block to (k, k)
            pivot = None
            best = None
            for i in range(k, rows):
                for j in range(k, cols):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                        best = abs(a[i][j])
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != k:
                row_swap(pivot[0], k)
            if pivot[1] != k:
                col_swap(pivot[1], k)
            # euclidean steps shrink |pivot| until row k and column k are clear
            dirty = False
            for i in range(k + 1, rows):
                if a[i][k] != 0:
                    row_op(i, k, a[i][k] // a[k][k])
                    if a[i][k] != 0:
                        dirty = True
            for j in range(k + 1, cols):
                if a[k][j] != 0:
                    col_op(j, k, a[k][j] // a[k][k])
                    if a[k][j] != 0:
                        dirty = True
            if dirty:
                continue
            # divisibility fix: fold in any entry the pivot does not divide
            offender = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if a[i][j] % a[k][k] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[offender])]
            u[k] = [x + y for x, y in zip(u[k], u[offender])]

    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return _freeze(a), _freeze(u), _freeze(v)


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class LatticeVector:
    """Integer coordinate vector in a lattice's fixed basis."""

    coords: tuple[int, ...]

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    def __add__(self, other):
        return LatticeVector(x + y for x, y in zip(self.coords, _coords(other), strict=True))

    def __sub__(self, other):
        return LatticeVector(x - y for x, y in zip(self.coords, _coords(other), strict=True))

    def __neg__(self):
        return LatticeVector(-x for x in self.coords)

    def __rmul__(self, c: int):
        return LatticeVector(int(c) * x for x in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)


def _coords(v):
    if isinstance(v, LatticeVector):
        return v.coords
    return tuple(int(c) for c in v)


@dataclass(frozen=True)
class IntegralLattice:
    """Even lattice given by an integer Gram matrix and basis labels."""

    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __init__(self, gram, labels=None):
        g = _freeze(gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            if g[i][i] % 2 != 0:
                raise ValueError(f"odd diagonal entry {g[i][i]} at position {i}: lattice must be even")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        if labels is None:
            labels = tuple(f"b{i + 1}" for i in range(n))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError("label count must match rank")
            if any((" " in s) or not s for s in labels):
                raise ValueError("labels must be nonempty and contain no spaces")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def determinant(self) -> int:
        return _lattice_det(self.gram)

    def pairing(self, v, w) -> int:
        vc, wc = _coords(v), _coords(w)
        return sum(vc[i] * self.gram[i][j] * wc[j] for i in range(self.rank) for j in range(self.rank))

    def norm(self, v) -> int:
        return self.pairing(v, v)

    def vector(self, coords) -> LatticeVector:
        c = _coords(coords)
        if len(c) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(c)}")
        return LatticeVector(c)

    def describe(self, v) -> str:
        """Human-readable form of a vector, e.g. 'w + 2*e2 + 2*f2'."""
        parts = []
        for c, s in zip(_coords(v), self.labels):
            if c == 0:
                continue
            if c == 1:
                parts.append(s)
            elif c == -1:
                parts.append(f"-{s}")
            else:
                parts.append(f"{c}*{s}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


@lru_cache(maxsize=None)
def _lattice_det(gram) -> int:
    return det(gram)


def direct_sum(a: IntegralLattice, b: IntegralLattice) -> IntegralLattice:
    n, m = a.rank, b.rank
    g = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            g[i][j] = a.gram[i][j]
    for i in range(m):
        for j in range(m):
            g[n + i][n + j] = b.gram[i][j]
    return IntegralLattice(g, a.labels + b.labels)


def rescale(l: IntegralLattice, t: int) -> IntegralLattice:
    t = int(t)
    if t == 0:
        raise ValueError("rescale factor must be nonzero")
    return IntegralLattice([[t * x for x in row] for row in l.gram], l.labels)


# ---------------------------------------------------------------------------
# standard lattices

_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))
# basis t1..t8: chain t1-t2-...-t7 with t8 attached to t5; arms (1,2,4) at t5
_E7_DIAG = (-6, -2, -2, -2, -2, -2, -2)
# basis s1..s7 = (t1+2t2, t3..t8) inside E8(-1): the orthogonal complement of t1
_E7_EDGES = {(0, 1): 2, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1, (3, 6): 1}


def _e8neg_gram():
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for i, j in _E8_EDGES:
        g[i][j] = g[j][i] = 1
    return g


def _e7neg_gram():
    g = [[0] * 7 for _ in range(7)]
    for i in range(7):
        g[i][i] = _E7_DIAG[i]
    for (i, j), val in _E7_EDGES.items():
        g[i][j] = g[j][i] = val
    return g


def _u_gram():
    return [[0, 1], [1, 0]]


STANDARD_NAMES = ("U", "E8neg", "K3", "LambdaG", "LambdaA1", "E7neg", "Uperp")


def build_standard(name: str, g: int | None = None) -> IntegralLattice:
    """Construct one of the named lattices.

    U            hyperbolic plane, basis (e1, f1)
    E8neg        negative definite E8, basis t1..t8
    E7neg        negative definite E7 presented as the complement of t1 in
                 E8neg, basis s1..s7 with s1^2 = -6 (s1 is the t1+2*t2 image)
    Uperp        U^2 + E8neg^2, unimodular of rank 20
    K3           U^3 + E8neg^2, rank 22, determinant -1
    LambdaG      <-(2g-2)> + U^2 + E8neg^2, rank 21 (requires g)
    LambdaA1     <-(2g-2)> + U^2 + E8neg + E7neg, rank 20 (requires g)

    LambdaG and LambdaA1 are the polarized K3 period lattices: inside K3 they
    are the complements of e1+(g-1)f1 (resp. of {e1+(g-1)f1, t1}), with the
    rank-1 generator w = e1-(g-1)f1.
    """
    if name in ("LambdaG", "LambdaA1"):
        if g is None:
            raise ValueError(f"{name} requires the genus g")
        g = int(g)
        if g < 2:
            raise ValueError("genus must be at least 2")
    elif g is not None:
        raise ValueError(f"{name} does not take a genus")

    if name == "U":
        return IntegralLattice(_u_gram(), ("e1", "f1"))
    if name == "E8neg":
        return IntegralLattice(_e8neg_gram(), tuple(f"t{i}" for i in range(1, 9)))
    if name == "E7neg":
        return IntegralLattice(_e7neg_gram(), tuple(f"s{i}" for i in range(1, 8)))
    if name == "Uperp":
        l = direct_sum(IntegralLattice(_u_gram(), ("e1", "f1")), IntegralLattice(_u_gram(), ("e2", "f2")))
        l = direct_sum(l, IntegralLattice(_e8neg_gram(), tuple(f"t{i}" for i in range(1, 9))))
        return direct_sum(l, IntegralLattice(_e8neg_gram(), tuple(f"u{i}" for i in range(1, 9))))
    if name == "K3":
        l = IntegralLattice(_u_gram(), ("e1", "f1"))
        l = direct_sum(l, IntegralLattice(_u_gram(), ("e2", "f2")))
        l = direct_sum(l, IntegralLattice(_u_gram(), ("e3", "f3")))
        l = direct_sum(l, IntegralLattice(_e8neg_gram(), tuple(f"t{i}" for i in range(1, 9))))
        return direct_sum(l, IntegralLattice(_e8neg_gram(), tuple(f"u{i}" for i in range(1, 9))))
    if name == "LambdaG":
        l = IntegralLattice([[-(2 * g - 2)]], ("w",))
        l = direct_sum(l, IntegralLattice(_u_gram(), ("e2", "f2")))
        l = direct_sum(l, IntegralLattice(_u_gram(), ("e3", "f3")))
        l = direct_sum(l, IntegralLattice(_e8neg_gram(), tuple(f"t{i}" for i in range(1, 9))))
        return direct_sum(l, IntegralLattice(_e8neg_gram(), tuple(f"u{i}" for i in range(1, 9))))
    if name == "LambdaA1":
        l = IntegralLattice([[-(2 * g - 2)]], ("w",))
        l = direct_sum(l, IntegralLattice(_u_gram(), ("e2", "f2")))
        l = direct_sum(l, IntegralLattice(_u_gram(), ("e3", "f3")))
        l = direct_sum(l, IntegralLattice(_e8neg_gram(), tuple(f"u{i}" for i in range(1, 9))))
        return direct_sum(l, IntegralLattice(_e7neg_gram(), tuple(f"s{i}" for i in range(1, 8))))
    raise ValueError(f"unknown lattice {name!r}; valid names: {', '.join(STANDARD_NAMES)}")


# ---------------------------------------------------------------------------
# discriminant groups


def _mod2_rep(x: Fraction) -> Fraction:
    """Canonical representative of x mod 2Z in the interval (-2, 0]."""
    s = Fraction(x) % 2
    return s - 2 if s > 0 else s


def _mod1_rep(x: Fraction) -> Fraction:
    return Fraction(x) % 1


@dataclass(frozen=True)
class DiscElement:
    """Element of a discriminant group, as residues over the invariant factors."""

    factors: tuple[int, ...]
    residues: tuple[int, ...]

    def __init__(self, factors, residues):
        factors = tuple(int(d) for d in factors)
        residues = tuple(int(a) % d for a, d in zip(residues, factors, strict=True))
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "residues", residues)

    def __add__(self, other):
        if self.factors != other.factors:
            raise ValueError("elements of different groups")
        return DiscElement(self.factors, (a + b for a, b in zip(self.residues, other.residues)))

    def __neg__(self):
        return DiscElement(self.factors, (-a for a in self.residues))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c: int):
        return DiscElement(self.factors, (int(c) * a for a in self.residues))

    def is_zero(self) -> bool:
        return not any(self.residues)

    def order(self) -> int:
        return lcm(1, *(d // gcd(a, d) for a, d in zip(self.residues, self.factors)))


class DiscriminantGroup:
    """L-dual modulo L for a nondegenerate even lattice L.

    Invariant factors come from the Smith normal form u*G*v = d of the Gram
    matrix: the class group is the product of Z/d_i over the nontrivial d_i,
    and the i-th generator lifts to (column i of v)/d_i in the dual lattice.
    """

    def __init__(self, lattice: IntegralLattice):
        if lattice.determinant() == 0:
            raise ValueError("degenerate lattice has no discriminant group")
        d, u, v = smith_normal_form(lattice.gram)
        self.lattice = lattice
        self._u = u
        self._positions = tuple(i for i in range(lattice.rank) if d[i][i] > 1)
        self.factors = tuple(d[i][i] for i in self._positions)
        self.lifts = tuple(
            tuple(Fraction(v[r][i], d[i][i]) for r in range(lattice.rank)) for i in self._positions
        )

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    def zero(self) -> DiscElement:
        return DiscElement(self.factors, (0,) * len(self.factors))

    def element(self, residues) -> DiscElement:
        return DiscElement(self.factors, residues)

    def elements(self):
        """All elements, in lexicographic residue order."""
        for residues in itertools.product(*(range(d) for d in self.factors)):
            yield DiscElement(self.factors, residues)

    def element_of(self, dual_vector) -> DiscElement:
        """Class of a rational vector lying in the dual lattice."""
        y = [Fraction(c) for c in dual_vector]
        if len(y) != self.lattice.rank:
            raise ValueError("vector length must match rank")
        gy = [sum(Fraction(self.lattice.gram[i][j]) * y[j] for j in range(len(y))) for i in range(len(y))]
        if any(c.denominator != 1 for c in gy):
            raise ValueError("vector is not in the dual lattice")
        coords = _mat_vec(self._u, [int(c) for c in gy])
        return DiscElement(self.factors, (coords[i] for i in self._positions))

    def lift(self, x: DiscElement) -> tuple[Fraction, ...]:
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for a, l in zip(x.residues, self.lifts):
            for i in range(n):
                out[i] += a * l[i]
        return tuple(out)

    def quadratic(self, x: DiscElement) -> Fraction:
        """q(x) in Q/2Z, as the canonical representative in (-2, 0]."""
        y = self.lift(x)
        val = sum(y[i] * self.lattice.gram[i][j] * y[j] for i in range(len(y)) for j in range(len(y)))
        return _mod2_rep(val)

    def bilinear(self, x: DiscElement, y: DiscElement) -> Fraction:
        """b(x, y) in Q/Z, as the representative in [0, 1)."""
        a = self.lift(x)
        b = self.lift(y)
        val = sum(a[i] * self.lattice.gram[i][j] * b[j] for i in range(len(a)) for j in range(len(b)))
        return _mod1_rep(val)


@lru_cache(maxsize=None)
def discriminant_group(l: IntegralLattice) -> DiscriminantGroup:
    return DiscriminantGroup(l)


def disc_quadratic(l: IntegralLattice, x) -> Fraction:
    """q-value of a discriminant class; x may be a DiscElement or a dual vector."""
    group = discriminant_group(l)
    if not isinstance(x, DiscElement):
        x = group.element_of(x)
    return group.quadratic(x)


def divisibility(l: IntegralLattice, v) -> int:
    """gcd of the pairings of v with the whole lattice (v nonzero)."""
    pairings = _mat_vec(l.gram, list(_coords(v)))
    d = 0
    for p in pairings:
        d = gcd(d, p)
    if d == 0:
        raise ValueError("divisibility undefined for vectors pairing to zero with everything")
    return d


def dual_class(l: IntegralLattice, v) -> DiscElement:
    """Class of v/div(v) in the discriminant group."""
    d = divisibility(l, v)
    return discriminant_group(l).element_of([Fraction(c, d) for c in _coords(v)])


def is_primitive(l: IntegralLattice, v) -> bool:
    c = _coords(v)
    return gcd(*c) == 1 if any(c) else False


# ---------------------------------------------------------------------------
# orthogonal complements


def orthogonal_complement(l: IntegralLattice, vectors):
    """Saturated orthogonal complement of a set of vectors.

    Returns (complement, embedding): the complement as an IntegralLattice in
    its own basis, and the embedding as a tuple of ambient coordinate vectors
    (one per complement basis vector).  The embedding is primitive: the kernel
    basis comes from unimodular column operations.
    """
    vecs = [list(_coords(v)) for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    if any(len(v) != l.rank for v in vecs):
        raise ValueError("vector length must match rank")
    a = [_mat_vec(l.gram, v) for v in vecs]  # pairing conditions, one row per vector
    d, _, v = smith_normal_form(a)
    rank = sum(1 for i in range(min(len(a), l.rank)) if d[i][i] != 0)
    emb = []
    for j in range(rank, l.rank):
        emb.append(tuple(v[i][j] for i in range(l.rank)))
    k = len(emb)
    gram = [[sum(emb[i][r] * l.gram[r][s] * emb[j][s] for r in range(l.rank) for s in range(l.rank)) for j in range(k)] for i in range(k)]
    comp = IntegralLattice(gram, tuple(f"c{i + 1}" for i in range(k)))
    return comp, tuple(emb)


# ---------------------------------------------------------------------------
# text serialization


def to_text(l: IntegralLattice) -> str:
    lines = [f"rank {l.rank}"]
    for row in l.gram:
        lines.append(" ".join(str(x) for x in row))
    lines.append(" ".join(l.labels))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> IntegralLattice:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("rank "):
        raise ValueError("line 1: expected 'rank N' header")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError("line 1: malformed rank header") from None
    if n < 0 or len(lines) < n + 1:
        raise ValueError(f"expected {n} Gram rows after the header")
    gram = []
    for i in range(n):
        parts = lines[1 + i].split()
        if len(parts) != n:
            raise ValueError(f"line {i + 2}: expected {n} entries, got {len(parts)}")
        try:
            gram.append([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"line {i + 2}: non-integer entry") from None
    labels = None
    if len(lines) > n + 1:
        labels = tuple(lines[n + 1].split())
        if len(labels) != n:
            raise ValueError(f"line {n + 2}: expected {n} labels, got {len(labels)}")
    if len(lines) > n + 2:
        raise ValueError(f"unexpected trailing content at line {n + 3}")
    return IntegralLattice(gram, labels)
