"""Orbit classification of primitive vectors in even lattices with two
hyperbolic planes.

For such lattices the stable orthogonal group acts transitively on primitive
vectors of fixed norm and fixed dual class (Eichler's criterion), so an orbit
is a pair (divisibility, discriminant class) and enumerating orbits means
enumerating classes x with ord(x) = d and q(x) = norm/d^2 mod 2Z.  On top of
that sit the component counts for the nodal, one-node-plus-A1 and cuspidal
(A2) loci of quasi-polarized K3 surfaces of genus g, together with explicit
witness vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .lattice import (
    DiscElement,
    IntegralLattice,
    LatticeVector,
    _mod2_rep,
    build_standard,
    discriminant_group,
    divisibility,
    dual_class,
    is_primitive,
)


@dataclass(frozen=True)
class OrbitCandidate:
    """Orbit invariants of a primitive vector: norm, divisibility, dual class."""

    norm: int
    divisibility: int
    dual_class: DiscElement
    witness: LatticeVector | None = None


@dataclass(frozen=True)
class Component:
    """Irreducible component of a locus, tagged with its classical label."""

    label: str
    candidate: OrbitCandidate


def _u_blocks(l: IntegralLattice):
    """Indices (i, j) of basis pairs spanning pairwise orthogonal U summands."""
    blocks = []
    used = set()
    n = l.rank
    for i in range(n):
        for j in range(i + 1, n):
            if i in used or j in used:
                continue
            if l.gram[i][i] != 0 or l.gram[j][j] != 0 or l.gram[i][j] != 1:
                continue
            others = [k for k in range(n) if k not in (i, j)]
            if all(l.gram[i][k] == 0 and l.gram[j][k] == 0 for k in others):
                blocks.append((i, j))
                used.update((i, j))
    return blocks


def _divisors(n: int):
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def eichler_candidates(l: IntegralLattice, norm: int) -> tuple[OrbitCandidate, ...]:
    """All (divisibility, class) orbit invariants compatible with the norm.

    Enumerates divisors d of |norm| (divisibility always divides the norm)
    and classes x with ord(x) = d and q(x) = norm/d^2 mod 2Z.  Deterministic
    order: d ascending, then class residues lexicographic.
    """
    norm = int(norm)
    if norm == 0 or norm % 2 != 0:
        raise ValueError("norm must be a nonzero even integer")
    if len(_u_blocks(l)) < 2:
        raise ValueError("orbit classification needs two orthogonal hyperbolic planes in the basis")
    grp = discriminant_group(l)
    out = []
    for d in _divisors(norm):
        target = _mod2_rep(Fraction(norm, d * d))
        for x in grp.elements():
            if x.order() == d and grp.quadratic(x) == target:
                out.append(OrbitCandidate(norm, d, x))
    return tuple(out)


# ---------------------------------------------------------------------------
# witnesses


def _label_index(l: IntegralLattice, label: str):
    try:
        return l.labels.index(label)
    except ValueError:
        return None


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def _recipe_vectors(l: IntegralLattice, cand: OrbitCandidate):
    """Closed-form witness attempts for the standard period lattices.

    Every returned vector is fully re-validated by the caller, so this list
    only needs to be plausible, not certified.
    """
    n = l.rank
    iw = _label_index(l, "w")
    ie2, if2 = _label_index(l, "e2"), _label_index(l, "f2")
    is1 = _label_index(l, "s1")
    out = []
    if ie2 is not None and if2 is not None:
        if cand.divisibility == 1:
            # e2 + (norm/2) f2 realizes any even norm with div 1, class 0
            v = _unit(n, ie2)
            v[if2] = cand.norm // 2
            out.append(v)
        if iw is not None:
            g = (-l.gram[iw][iw] + 2) // 2  # w^2 = -(2g-2)
            if (g - 2) % 2 == 0:
                # w + 2 e2 + ((g-2)/2) f2: norm -2, div 2 for g = 2 mod 4
                v = _unit(n, iw)
                v[ie2] = 2
                v[if2] = (g - 2) // 2
                out.append(v)
            if is1 is not None and (g + 1) % 2 == 0:
                # w + s1 + 2 e2 + ((g+1)/2) f2: norm -2, div 2 for g = 3 mod 4
                v = _unit(n, iw)
                v[is1] = 1
                v[ie2] = 2
                v[if2] = (g + 1) // 2
                out.append(v)
    if is1 is not None:
        out.append(_unit(n, is1))
    return out


def _validates(l, grp, cand, coords):
    v = list(coords)
    if not any(v):
        return False
    if not is_primitive(l, v):
        return False
    if l.norm(v) != cand.norm:
        return False
    if divisibility(l, v) != cand.divisibility:
        return False
    return grp.element_of([Fraction(c, cand.divisibility) for c in v]) == cand.dual_class


def find_witness(l: IntegralLattice, cand: OrbitCandidate, bound: int | None = None) -> LatticeVector | None:
    """A primitive vector realizing the candidate's (norm, div, class), or None.

    Closed-form recipes are tried first; otherwise a deterministic search over
    the first two hyperbolic-plane coordinate blocks, in lexicographic order,
    with every coordinate restricted to [-bound, bound].  Candidates violating
    the order/q-value compatibility preconditions return None immediately.
    """
    grp = discriminant_group(l)
    d = cand.divisibility
    if d < 1:
        return None
    x = cand.dual_class
    if x.order() != d:
        return None
    if grp.quadratic(x) != _mod2_rep(Fraction(cand.norm, d * d)):
        return None
    blocks = _u_blocks(l)
    if len(blocks) < 2:
        raise ValueError("witness search needs two orthogonal hyperbolic planes in the basis")
    if bound is None:
        iw = _label_index(l, "w")
        bound = -l.gram[iw][iw] + 2 if iw is not None else 2 * l.rank  # 2g for the period lattices

    for v in _recipe_vectors(l, cand):
        if max(abs(c) for c in v) <= bound and _validates(l, grp, cand, v):
            return LatticeVector(v)

    # box search: v = d*(lift + a E2 + b F2 + c E3 + e F3); F3^2 = 0 makes the
    # norm condition linear in e, so e is solved, not iterated (unless its
    # coefficient vanishes, in which case it is iterated too)
    lift = grp.lift(x)
    n = l.rank
    (i2, j2), (i3, j3) = blocks[0], blocks[1]
    target = Fraction(cand.norm, d * d)

    def pair_with(vec_fr, idx):
        return sum(vec_fr[r] * l.gram[r][idx] for r in range(n))

    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                base = [Fraction(t) for t in lift]
                base[i2] += a
                base[j2] += b
                base[i3] += c
                norm_base = sum(base[r] * l.gram[r][s] * base[s] for r in range(n) for s in range(n))
                coeff = 2 * pair_with(base, j3)
                if coeff != 0:
                    e = (target - norm_base) / coeff
                    if e.denominator != 1 or abs(e) > bound:
                        continue
                    es = [int(e)]
                else:
                    if norm_base != target:
                        continue
                    es = list(rng)
                for e in es:
                    vec = list(base)
                    vec[j3] += e
                    coords = [d * t for t in vec]
                    if any(t.denominator != 1 for t in coords):
                        continue
                    ints = [int(t) for t in coords]
                    if _validates(l, grp, cand, ints):
                        return LatticeVector(ints)
    return None


# ---------------------------------------------------------------------------
# component counts for the nodal, A11 and A2 loci


LOCI = ("nodal", "a11", "a2")


def _canon_locus(locus: str) -> str:
    s = str(locus).strip().lower().replace("_", "").replace("{", "").replace("}", "").replace(",", "").replace("-", "")
    if s in ("nodal", "node"):
        return "nodal"
    if s in ("a11", "oneplusa1", "a1,1"):
        return "a11"
    if s == "a2":
        return "a2"
    raise ValueError(f"unknown locus {locus!r}; valid: nodal, a11, a2")


def nl_component_count(g: int, locus: str, with_witnesses: bool = False, bound: int | None = None):
    """Number of irreducible components of a lattice-defined locus in genus g,
    with classical labels and the orbit candidate behind each component.

    nodal  norm -2 vectors in the genus-g period lattice: P_{0,-2} always,
           plus P_{g-1,(g-2)/2} exactly when g = 2 mod 4.
    a11    norm -2 vectors orthogonal to a fixed root: H' always, H'' when
           g = 2 mod 4, H''' when g = 3 mod 4.
    a2     norm -6 vectors w = t1 + 2v supporting a cuspidal configuration:
           the single component H_{A_2}.  Only divisibility-2 candidates whose
           doubled class lift is congruent to s1 mod 2L are counted:
           divisibility-6 candidates (which exist for 3 | g-1, realized by
           honest vectors) always span a non-saturated configuration, i.e.
           the surface carries a strictly larger Picard sublattice, and are
           booked under deeper loci rather than as new A2 components.
    """
    g = int(g)
    if g < 3:
        raise ValueError("genus must be at least 3")
    locus = _canon_locus(locus)
    if locus == "nodal":
        l = build_standard("LambdaG", g=g)
        cands = eichler_candidates(l, -2)
    else:
        l = build_standard("LambdaA1", g=g)
        cands = eichler_candidates(l, -2 if locus == "a11" else -6)
    grp = discriminant_group(l)
    m = 2 * g - 2
    pi = grp.element_of([Fraction(1, m)] + [Fraction(0)] * (l.rank - 1))

    if locus == "a2":
        is1 = l.labels.index("s1")
        s1 = _unit(l.rank, is1)
        kept = []
        for cand in cands:
            if cand.divisibility != 2:
                continue
            doubled = [2 * t for t in grp.lift(cand.dual_class)]
            if any(t.denominator != 1 for t in doubled):
                continue
            if all((int(t) - s) % 2 == 0 for t, s in zip(doubled, s1)):
                kept.append(cand)
        cands = tuple(kept)

    components = []
    for cand in cands:
        x = cand.dual_class
        if locus == "nodal":
            if cand.divisibility == 1 and x.is_zero():
                label = "P_{0,-2}"
            elif cand.divisibility == 2 and x == (g - 1) * pi:
                label = "P_{g-1,(g-2)/2}"
            else:  # impossible by the discriminant arithmetic; keep loud
                raise RuntimeError(f"unclassified nodal candidate {cand}")
        elif locus == "a11":
            w2 = grp.element_of(_w2_lift(l))
            if cand.divisibility == 1 and x.is_zero():
                label = "H'"
            elif cand.divisibility == 2 and x == (g - 1) * pi:
                label = "H''"
            elif cand.divisibility == 2 and x == (g - 1) * pi + w2:
                label = "H'''"
            else:
                raise RuntimeError(f"unclassified a11 candidate {cand}")
        else:
            label = "H_{A_2}"
        if with_witnesses:
            cand = replace(cand, witness=find_witness(l, cand, bound=bound))
        components.append(Component(label, cand))
    return len(components), tuple(components)


def _w2_lift(l: IntegralLattice):
    is1 = l.labels.index("s1")
    v = [Fraction(0)] * l.rank
    v[is1] = Fraction(1, 2)
    return v


def locus_lattice(g: int, locus: str) -> IntegralLattice:
    """The period lattice in which a locus's vectors live."""
    return build_standard("LambdaG" if _canon_locus(locus) == "nodal" else "LambdaA1", g=int(g))
