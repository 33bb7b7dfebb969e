import numpy as np
import pytest
from hypothesis import given, strategies as st

from galilei1d.group import Generator, GroupElement, compose, exp_generator
from galilei1d.orbits import (
    ForcedMassiveOrbit,
    FreeMassiveOrbit,
    Momentum,
    PQState,
    PQTangent,
    SpacetimeOrbit,
    TauQState,
    TauQTangent,
    act_forced,
    act_free,
    act_spacetime,
    casimir,
    evolve,
    hamiltonian_field,
    linear_part,
    momentum,
    symplectic_matrix,
    symplectic_pairing,
)

reals = st.floats(-10, 10, allow_nan=False)
masses = st.floats(0.1, 10)
nonzero_forces = st.floats(-10, 10).filter(lambda f: abs(f) > 1e-3)
elements = st.builds(GroupElement, reals, reals, reals)
pq_states = st.builds(PQState, reals, reals)
tq_states = st.builds(TauQState, reals, reals)

forced_orbits = st.builds(ForcedMassiveOrbit, masses, reals, reals)
free_orbits = st.builds(FreeMassiveOrbit, masses, reals)
spacetime_orbits = st.builds(SpacetimeOrbit, nonzero_forces, reals)

orbit_and_state = st.one_of(
    st.tuples(forced_orbits, pq_states),
    st.tuples(free_orbits, pq_states),
    st.tuples(spacetime_orbits, tq_states),
)


# -- closed-form actions ----------------------------------------------------


def test_act_forced_examples():
    assert act_forced(ForcedMassiveOrbit(2, 4), GroupElement(0, 1, 0), PQState(1, 0)) == PQState(5, 1.5)
    assert act_forced(ForcedMassiveOrbit(1, 2), GroupElement(0, 0, 3), PQState(0, 0)) == PQState(-3, 0)
    s = PQState(0.3, -1.2)
    assert act_forced(ForcedMassiveOrbit(2, 4), GroupElement(), s) == s


def test_act_free_examples():
    assert act_free(FreeMassiveOrbit(2), GroupElement(1, 2, 0), PQState(4, 0)) == PQState(4, 5)
    assert act_free(FreeMassiveOrbit(2), GroupElement(0, 0, 1), PQState(0, 7)) == PQState(-2, 7)
    s = PQState(0.3, -1.2)
    assert act_free(FreeMassiveOrbit(2), GroupElement(), s) == s


def test_act_spacetime_examples():
    orbit = SpacetimeOrbit(f=2)
    assert act_spacetime(orbit, GroupElement(1, 2, 3), TauQState(4, 5)) == TauQState(6, 18)
    assert act_spacetime(orbit, GroupElement(), TauQState(4, 5)) == TauQState(4, 5)
    assert act_spacetime(orbit, GroupElement(0, 0, 7.5), TauQState(0, 3.25)) == TauQState(0, 3.25)


def test_act_helpers_check_orbit_kind():
    with pytest.raises(TypeError):
        act_forced(FreeMassiveOrbit(1), GroupElement(), PQState(0, 0))


@pytest.mark.parametrize(
    "factory",
    [
        lambda: ForcedMassiveOrbit(0, 1),
        lambda: ForcedMassiveOrbit(-1, 1),
        lambda: FreeMassiveOrbit(0),
        lambda: SpacetimeOrbit(0),
        lambda: ForcedMassiveOrbit(1, float("nan")),
        lambda: SpacetimeOrbit(1, float("inf")),
    ],
)
def test_degenerate_labels_rejected(factory):
    with pytest.raises(ValueError):
        factory()


# -- vector fields, momenta, Casimirs --------------------------------------


def test_hamiltonian_field_examples():
    forced = ForcedMassiveOrbit(2, 4)
    assert hamiltonian_field(forced, Generator.TimeTranslation, PQState(5, 1.5)) == PQTangent(-4, -2.5)
    assert hamiltonian_field(forced, Generator.Boost, PQState(-3, 8)) == PQTangent(2, 0)
    assert hamiltonian_field(SpacetimeOrbit(2), Generator.Boost, TauQState(3, 1)) == TauQTangent(0, -3)


def test_momentum_examples():
    assert momentum(ForcedMassiveOrbit(2, 4), PQState(5, 1.5)) == Momentum(3, 5, 0.25)
    assert momentum(FreeMassiveOrbit(2), PQState(4, 5)) == Momentum(10, 4, 4)
    assert momentum(SpacetimeOrbit(2), TauQState(3, 1)) == Momentum(9, 6, -2)


def test_casimir_examples():
    assert casimir(ForcedMassiveOrbit(2, 4), Momentum(3, 5, 0.25)) == 0
    assert casimir(SpacetimeOrbit(2), Momentum(9, 6, -2)) == 0
    assert casimir(FreeMassiveOrbit(2), Momentum(10, 4, 4)) == 0


def test_labels_offset_the_momentum():
    assert momentum(ForcedMassiveOrbit(2, 4, U=2.5), PQState(5, 1.5)).jE == 2.75
    assert momentum(SpacetimeOrbit(2, K=-1), TauQState(3, 1)).jK == 8


def test_symplectic_pairing_examples():
    assert symplectic_pairing(PQTangent(1, 0), PQTangent(0, 1)) == 1
    assert symplectic_pairing(PQTangent(2, 3), PQTangent(5, 7)) == -1
    assert symplectic_pairing(PQTangent(2, 3), PQTangent(2, 3)) == 0


def test_spacetime_pairing_carries_the_force():
    orbit = SpacetimeOrbit(f=2.5)
    assert symplectic_pairing(TauQTangent(1, 0), TauQTangent(0, 1), orbit) == 2.5
    with pytest.raises(ValueError):
        symplectic_pairing(TauQTangent(1, 0), TauQTangent(0, 1))
    with pytest.raises(TypeError):
        symplectic_pairing(TauQTangent(1, 0), PQTangent(0, 1), orbit)


def test_evolve_is_time_translation():
    orbit = ForcedMassiveOrbit(2, 4)
    assert evolve(orbit, PQState(1, 0), 1.0) == PQState(5, 1.5)


# -- properties --------------------------------------------------------------


@given(orbit_and_state, elements, elements)
def test_left_action(os_, g, h):
    orbit, s = os_
    lhs = orbit.act(compose(g, h), s).as_array()
    rhs = orbit.act(g, orbit.act(h, s)).as_array()
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-9)


@given(orbit_and_state, elements)
def test_linear_part_is_symplectic(os_, g):
    orbit, _ = os_
    A = linear_part(orbit, g)
    omega = symplectic_matrix(orbit)
    np.testing.assert_allclose(A.T @ omega @ A, omega, atol=1e-12)


@given(orbit_and_state, elements)
def test_linear_part_matches_affine_map(os_, g):
    orbit, s = os_
    cls = orbit.state_type
    x = s.as_array()
    dx = np.array([0.7, -1.3])
    delta = orbit.act(g, cls.from_array(x + dx)).as_array() - orbit.act(g, s).as_array()
    np.testing.assert_allclose(delta, linear_part(orbit, g) @ dx, rtol=1e-9, atol=1e-9)


@given(orbit_and_state, st.sampled_from(list(Generator)))
def test_field_is_minus_flow_derivative(os_, X):
    orbit, s = os_
    h = 1e-5 * max(1.0, np.max(np.abs(s.as_array())))
    fd = -(orbit.act(exp_generator(X, h), s).as_array() - orbit.act(exp_generator(X, -h), s).as_array()) / (2 * h)
    np.testing.assert_allclose(hamiltonian_field(orbit, X, s).as_array(), fd, atol=1e-6)


@given(orbit_and_state, elements)
def test_casimir_recovers_label(os_, g):
    orbit, s = os_
    assert casimir(orbit, momentum(orbit, orbit.act(g, s))) == pytest.approx(orbit.label, abs=1e-9, rel=1e-12)


@given(st.one_of(forced_orbits, free_orbits), pq_states, reals)
def test_single_component_invariances_massive(orbit, s, a):
    mom = momentum(orbit, s)
    assert momentum(orbit, orbit.act(exp_generator(Generator.SpaceTranslation, a), s)).jP == mom.jP
    assert momentum(orbit, orbit.act(exp_generator(Generator.Boost, a), s)).jK == mom.jK
    jE = momentum(orbit, orbit.act(exp_generator(Generator.TimeTranslation, a), s)).jE
    assert jE == pytest.approx(mom.jE, rel=1e-12, abs=1e-9)


@given(spacetime_orbits, tq_states, reals)
def test_space_translation_keeps_jP_on_spacetime_orbit(orbit, s, a):
    moved = orbit.act(exp_generator(Generator.SpaceTranslation, a), s)
    assert momentum(orbit, moved).jP == momentum(orbit, s).jP


def analytic_gradients(orbit, s):
    """Hand-differentiated momentum components, keyed by generator."""
    if isinstance(orbit, SpacetimeOrbit):
        f = orbit.f
        return {
            Generator.Boost: np.array([f * s.tau, 0.0]),
            Generator.SpaceTranslation: np.array([f, 0.0]),
            Generator.TimeTranslation: np.array([0.0, -f]),
        }
    f = getattr(orbit, "f", 0.0)
    return {
        Generator.Boost: np.array([0.0, orbit.m]),
        Generator.SpaceTranslation: np.array([1.0, 0.0]),
        Generator.TimeTranslation: np.array([s.p / orbit.m, -f]),
    }


@given(orbit_and_state)
def test_comomentum_relation(os_):
    orbit, s = os_
    basis = [orbit.tangent_type(1.0, 0.0), orbit.tangent_type(0.0, 1.0)]
    for X, grad in analytic_gradients(orbit, s).items():
        u = hamiltonian_field(orbit, X, s)
        contraction = [symplectic_pairing(u, w, orbit) for w in basis]
        np.testing.assert_allclose(contraction, grad, atol=1e-12)
