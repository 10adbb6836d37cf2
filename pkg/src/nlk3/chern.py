"""Chern-number enumeration of singular members in two families of
quasi-polarized K3 surfaces: nets of conics over a surface, and unigonal
families fibered over the projective plane.

Counts come out as degrees of classes in the truncated ring Q[z]/(z^3) of the
base plane; everything is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class P2Class:
    """Class a0 + a1 z + a2 z^2 on the plane, z the hyperplane class."""

    c0: Fraction
    c1: Fraction
    c2: Fraction

    def __init__(self, c0=0, c1=0, c2=0):
        object.__setattr__(self, "c0", Fraction(c0))
        object.__setattr__(self, "c1", Fraction(c1))
        object.__setattr__(self, "c2", Fraction(c2))

    def __add__(self, other):
        other = _as_class(other)
        return P2Class(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    __radd__ = __add__

    def __neg__(self):
        return P2Class(-self.c0, -self.c1, -self.c2)

    def __sub__(self, other):
        return self + (-_as_class(other))

    def __rsub__(self, other):
        return _as_class(other) + (-self)

    def __mul__(self, other):
        o = _as_class(other)
        return P2Class(
            self.c0 * o.c0,
            self.c0 * o.c1 + self.c1 * o.c0,
            self.c0 * o.c2 + self.c1 * o.c1 + self.c2 * o.c0,
        )

    __rmul__ = __mul__

    @property
    def degree(self) -> Fraction:
        """Coefficient of the point class z^2."""
        return self.c2


ZETA = P2Class(0, 1, 0)


def _as_class(x) -> P2Class:
    if isinstance(x, P2Class):
        return x
    return P2Class(Fraction(x))


def _int_degree(cls: P2Class, what: str) -> int:
    d = cls.degree
    if d.denominator != 1:
        raise ValueError(f"{what} has non-integral degree {d}")
    return int(d)


# ---------------------------------------------------------------------------
# nets of conics


@dataclass(frozen=True)
class SurfaceChernData:
    """Intersection numbers of the base surface data (alpha^2, alpha.c1,
    c1^2, c2) driving the net-of-conics counts."""

    alpha2: int
    alpha_c1: int
    c1sq: int
    c2: int


def net_invariants(data: SurfaceChernData) -> tuple[int, int, int]:
    """Genus g, degree d and Euler-type invariant e of the family."""
    twice = 9 * data.alpha2 + 9 * data.alpha_c1 + 2 * data.c1sq
    if twice % 2 != 0:
        raise ValueError(f"non-integral genus: (9a^2 + 9a.c1 + 2c1^2)/2 = {twice}/2")
    g = twice // 2 + 1
    d = 3 * data.alpha2 + data.alpha_c1
    e = 3 * data.alpha2 + 2 * data.alpha_c1 + data.c2
    return g, d, e


def net_counts(data: SurfaceChernData, degree: int = 1) -> tuple[int, int]:
    """(cuspidal, binodal) member counts of the net, scaled by the net degree."""
    g, d, e = net_invariants(data)
    a2 = 2 * g - d + 2 * (e - 1)
    a11 = Fraction(d - 3 * g - e * (e - 1)) + Fraction(3, 2) * (e - 1) * (e - 2)
    if a11.denominator != 1:
        raise ValueError(f"non-integral binodal count {a11}")
    return degree * a2, degree * int(a11)


# ---------------------------------------------------------------------------
# unigonal families


TABLE_CLASSES = ("a1", "a2", "a3", "a1sq", "a1a2", "delta")


@dataclass(frozen=True)
class UnigonalTable:
    """Pushforwards to the plane of the tautological classes a1, a2, a3,
    a1^2, a1*a2 and of the double-point class delta."""

    a1: P2Class
    a2: P2Class
    a3: P2Class
    a1sq: P2Class
    a1a2: P2Class
    delta: P2Class


def loads_unigonal(text: str) -> UnigonalTable:
    """Parse a pushforward table: lines `name c0 c1 c2`, '#' comments."""
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 'name c0 c1 c2', got {len(parts)} fields")
        name = parts[0]
        if name not in TABLE_CLASSES:
            raise ValueError(f"line {lineno}: unknown class {name!r}; valid: {', '.join(TABLE_CLASSES)}")
        if name in seen:
            raise ValueError(f"line {lineno}: duplicate entry for {name!r}")
        try:
            seen[name] = P2Class(*(Fraction(p) for p in parts[1:]))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: malformed rational") from None
    missing = [n for n in TABLE_CLASSES if n not in seen]
    if missing:
        raise ValueError(f"missing table entries: {', '.join(missing)}")
    return UnigonalTable(**seen)


def dumps_unigonal(table: UnigonalTable) -> str:
    lines = ["# pushforward classes on the base plane: name c0 c1 c2"]
    for name in TABLE_CLASSES:
        cls = getattr(table, name)
        lines.append(f"{name} {cls.c0} {cls.c1} {cls.c2}")
    return "\n".join(lines) + "\n"


def default_unigonal_table() -> UnigonalTable:
    from importlib.resources import files

    return loads_unigonal(files("nlk3").joinpath("data/unigonal.tbl").read_text())


_BETA1 = 3 * ZETA
_BETA2 = 3 * ZETA * ZETA


def unigonal_a2(table: UnigonalTable, beta1: P2Class = _BETA1, beta2: P2Class = _BETA2) -> int:
    """Cuspidal member count of the unigonal family."""
    expr = (
        4 * table.a1 * beta1 * beta1
        + 2 * (table.a1sq + table.a2) * beta1
        - 2 * table.a1 * beta2
        + 2 * table.a1a2
    )
    return _int_degree(expr, "cuspidal count")


def unigonal_double_point(table: UnigonalTable, beta1: P2Class = _BETA1, beta2: P2Class = _BETA2) -> int:
    """Degree of the double-point cycle of the unigonal family."""
    expr = (
        table.delta * table.delta
        - beta1 * table.delta
        + (
            -2 * table.a1a2
            - table.a3
            - 2 * (table.a1sq + table.a2) * beta1
            + table.a1 * (-4 * beta1 * beta1 + 3 * beta2)
        )
    )
    return _int_degree(expr, "double-point cycle")


def unigonal_counts(table: UnigonalTable, beta1: P2Class = _BETA1, beta2: P2Class = _BETA2) -> tuple[int, int]:
    """(cuspidal, binodal) counts; the double-point degree must be even."""
    a2 = unigonal_a2(table, beta1, beta2)
    dd = unigonal_double_point(table, beta1, beta2)
    if dd % 2 != 0:
        raise ValueError(f"double-point degree {dd} is odd: cannot halve into unordered pairs")
    return a2, dd // 2 - a2
