import numpy as np
import pytest
from hypothesis import given, strategies as st

from galilei1d.group import IDENTITY, Generator, GroupElement, compose, exp_generator, inverse
from galilei1d.orbits import SpacetimeOrbit, TauQState

reals = st.floats(-10, 10, allow_nan=False)
elements = st.builds(GroupElement, reals, reals, reals)


def as_array(g):
    return np.array(g.as_tuple())


def element_from_spacetime_map(fn):
    """Read (x, t, v) off an affine map of the (tau, q) plane.

    tau' = tau + t and q' = q + v*tau + x, so the images of (0, 0) and (1, 0)
    determine the element without using the group law.
    """
    o = fn(TauQState(0.0, 0.0))
    e = fn(TauQState(1.0, 0.0))
    return GroupElement(o.q, o.tau, e.q - o.q)


def test_compose_example():
    assert compose(GroupElement(1, 2, 3), GroupElement(4, 5, 6)) == GroupElement(20, 7, 9)


def test_compose_matches_composed_spacetime_actions():
    orbit = SpacetimeOrbit(f=1.0)
    g, h = GroupElement(1, 2, 3), GroupElement(4, 5, 6)
    oracle = element_from_spacetime_map(lambda s: orbit.act(g, orbit.act(h, s)))
    assert oracle == GroupElement(20, 7, 9)


def test_identity_and_inverse_examples():
    g = GroupElement(1, 2, 3)
    assert compose(IDENTITY, g) == g
    assert compose(g, inverse(g)) == IDENTITY
    assert inverse(g) == GroupElement(5, -2, -3)
    assert inverse(IDENTITY) == IDENTITY
    h = GroupElement(-2, 1, 0.5)
    assert inverse(inverse(h)) == h


def test_matmul_is_compose():
    g, h = GroupElement(1, 2, 3), GroupElement(4, 5, 6)
    assert g @ h == compose(g, h)
    assert g.inverse() == inverse(g)


def test_exp_generator_examples():
    assert exp_generator(Generator.Boost, 2.0) == GroupElement(0, 0, 2.0)
    assert exp_generator(Generator.TimeTranslation, 0) == IDENTITY
    assert compose(exp_generator(Generator.SpaceTranslation, 1), exp_generator(Generator.SpaceTranslation, 2)) == GroupElement(3, 0, 0)


@pytest.mark.parametrize("field", ["x", "t", "v"])
@pytest.mark.parametrize("bad", [float("nan"), float("inf")])
def test_rejects_non_finite(field, bad):
    with pytest.raises(ValueError, match=field):
        GroupElement(**{field: bad})


@given(elements, elements, elements)
def test_associativity(g, h, k):
    np.testing.assert_allclose(as_array((g @ h) @ k), as_array(g @ (h @ k)), rtol=0, atol=1e-12)


@given(elements)
def test_inverse_both_sides(g):
    np.testing.assert_allclose(as_array(g @ inverse(g)), 0, atol=1e-12)
    np.testing.assert_allclose(as_array(inverse(g) @ g), 0, atol=1e-12)


@given(st.sampled_from(list(Generator)), reals, reals)
def test_one_parameter_additivity(X, a, b):
    np.testing.assert_allclose(as_array(exp_generator(X, a) @ exp_generator(X, b)), as_array(exp_generator(X, a + b)), atol=1e-12)


@given(elements, elements)
def test_law_agrees_with_spacetime_oracle(g, h):
    orbit = SpacetimeOrbit(f=1.0)
    oracle = element_from_spacetime_map(lambda s: orbit.act(g, orbit.act(h, s)))
    np.testing.assert_allclose(as_array(g @ h), as_array(oracle), atol=1e-12)
