"""NL divisor keys: delta, vector data, mu, triangular decomposition."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nlk3.nldiv import NLKey, delta, mu_coefficient, nl_vector_data, prim_equiv, triangular_decomposition
from nlk3.orbits import nl_component_count


def test_delta():
    assert delta(NLKey(6, 0, -2)) == -20
    assert delta(NLKey(6, 5, 2)) == -5
    assert delta(NLKey(6, 1, 0)) == -1


def test_vector_data_examples():
    d = nl_vector_data(NLKey(6, 0, -2))
    assert d.half_norm == Fraction(-1)
    assert d.disc_class == 0
    assert d.multiplicity_two

    d = nl_vector_data(NLKey(6, 5, 2))
    assert d.half_norm == Fraction(-1, 4)
    assert d.disc_class == 5
    assert d.multiplicity_two

    d = nl_vector_data(NLKey(6, 1, 0))
    assert d.half_norm == Fraction(-1, 20)
    assert d.disc_class == 1
    assert not d.multiplicity_two


def test_vector_data_rejects_nonnegative_delta():
    with pytest.raises(ValueError):
        nl_vector_data(NLKey(6, 5, 3))  # Delta = 5
    with pytest.raises(ValueError):
        nl_vector_data(NLKey(6, 0, 0))


def test_prim_equiv():
    # beta + L shifts (d, n) = (0, -2) to (10, 8): same primitive locus
    assert prim_equiv(NLKey(6, 0, -2), NLKey(6, 10, 8))
    assert not prim_equiv(NLKey(6, 0, -2), NLKey(6, 5, 2))
    assert prim_equiv(NLKey(6, 5, 2), NLKey(6, -5, 2))
    with pytest.raises(ValueError):
        prim_equiv(NLKey(5, 0, -2), NLKey(6, 0, -2))


def test_mu_examples():
    target = NLKey(6, 0, -2)
    assert mu_coefficient(target, NLKey(6, 5, 2)) == 2  # (x, y) = (+-2, -+1)
    assert mu_coefficient(target, NLKey(6, 0, -2)) == 2  # (x, y) = (+-1, 0)


def test_mu_as_written_variant_fails_identity():
    # the uncorrected relation (2g-2) y = d - x*n fails integrality even on
    # the identity decomposition, which is why it is not the default
    target = NLKey(6, 0, -2)
    assert mu_coefficient(target, NLKey(6, 0, -2), variant="as-written") == 0


def test_mu_validation():
    with pytest.raises(ValueError):
        mu_coefficient(NLKey(6, 0, -2), NLKey(6, 0, 2))  # T_i < 0
    with pytest.raises(ValueError):
        mu_coefficient(NLKey(6, 0, -2), NLKey(6, 5, 2), variant="bogus")
    with pytest.raises(ValueError):
        mu_coefficient(NLKey(5, 0, -2), NLKey(6, 5, 2))


def test_mu_zero_when_not_square():
    assert mu_coefficient(NLKey(6, 0, -3), NLKey(6, 0, -2)) == 0  # ratio 3/2
    assert mu_coefficient(NLKey(6, 1, -2), NLKey(6, 0, -2)) == 0  # ratio not square


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_mu_stays_in_range(data):
    g = data.draw(st.integers(3, 30))
    d = data.draw(st.integers(-4 * g, 4 * g))
    n = data.draw(st.integers(-4 * g, 4 * g))
    di = data.draw(st.integers(-4 * g, 4 * g))
    ni = data.draw(st.integers(-4 * g, 4 * g))
    rep = NLKey(g, di, ni)
    if di * di - 2 * ni * (g - 1) <= 0:
        return
    mu = mu_coefficient(NLKey(g, d, n), rep)
    assert mu in (0, 1, 2)


def test_triangular_g6():
    reps = triangular_decomposition(NLKey(6, 0, -2))
    assert [(r.d, r.n, mu) for r, mu in reps] == [(5, 2, 2), (0, -2, 2)]


def test_triangular_g5():
    reps = triangular_decomposition(NLKey(5, 0, -2))
    assert [(r.d, r.n, mu) for r, mu in reps] == [(0, -2, 2)]


def test_triangular_g4_evenness_filter():
    # x = 2 would propose the representative (3, 1), but odd self-intersection
    # never occurs in an even lattice; only the identity class remains
    reps = triangular_decomposition(NLKey(4, 0, -2))
    assert [(r.d, r.n, mu) for r, mu in reps] == [(0, -2, 2)]


def test_triangular_odd_n_target_is_empty():
    assert triangular_decomposition(NLKey(4, 0, -1)) == ()


def test_triangular_rejects_nonnegative_delta():
    with pytest.raises(ValueError):
        triangular_decomposition(NLKey(6, 0, 2))


def test_triangular_sorted_by_rep_delta():
    for g in (5, 6, 8, 12):
        reps = triangular_decomposition(NLKey(g, 0, -8))
        deltas = [abs(delta(r)) for r, _ in reps]
        assert deltas == sorted(deltas)
        for r, mu in reps:
            assert 0 <= r.d <= 2 * g - 3
            assert r.n % 2 == 0
            assert mu in (1, 2)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_triangular_reps_are_inequivalent_and_reproduce_target_t(data):
    g = data.draw(st.integers(3, 20))
    d = data.draw(st.integers(0, 2 * g - 3))
    n = data.draw(st.integers(-30, -1))
    key = NLKey(g, d, n)
    if delta(key) >= 0:
        return
    reps = triangular_decomposition(key)
    t = d * d - 2 * n * (g - 1)
    for i, (r, mu) in enumerate(reps):
        ti = r.d * r.d - 2 * r.n * (g - 1)
        assert ti > 0 and t % ti == 0
        for r2, _ in reps[i + 1 :]:
            assert not prim_equiv(r, r2)


@pytest.mark.parametrize("g", range(3, 41))
def test_nodal_cross_check_with_orbit_counts(g):
    # classes with mu > 0 for (g, 0, -2) match the nodal component census
    reps = triangular_decomposition(NLKey(g, 0, -2))
    count, comps = nl_component_count(g, "nodal")
    assert len(reps) == count
    pairs = [(r.d, r.n) for r, _ in reps]
    assert (0, -2) in pairs
    if g % 4 == 2:
        assert (g - 1, (g - 2) // 2) in pairs


def test_key_validation():
    with pytest.raises(ValueError):
        NLKey(1, 0, -2)
