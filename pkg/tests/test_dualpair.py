import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl2n_howe.branching import theta_weight
from sl2n_howe.dualpair import build_dual_pair, h_theta_from_simple_coroots, levi_singulars, sub_weight
from sl2n_howe.singular import hwv_closed_form
from sl2n_howe.weylmodule import ModuleParams, NotAWeightVector, Operator, WeightVector, op_commutator, random_index

from .strategies import admissible_index, params

F = Fraction
E = Operator.E


def same_action(p, A, B, count=20, seed=1):
    rng = random.Random(seed)
    for _ in range(count):
        v = WeightVector.basis(random_index(p, rng))
        if A.apply(p, v) != B.apply(p, v):
            return False
    return True


def test_n2_generators(p2):
    g = build_dual_pair(p2)
    assert len(g.raise_b) == 1
    assert g.raise_b[0].words == (E(1, 2) + E(3, 4)).words
    assert g.zdoubleprime.is_zero_word_sum()
    assert g.zprime.words == (E(2, 1) + E(4, 3)).words


def test_n3_generators(p3):
    g = build_dual_pair(p3)
    assert g.X.words == (E(4, 1) + E(5, 2) + E(6, 3)).words
    assert g.Y.words == (E(1, 4) + E(2, 5) + E(3, 6)).words
    assert len(g.levi_raise) == 6
    assert same_action(p3, op_commutator(g.zprime, g.zdoubleprime), Operator.zero())


def test_n_too_small():
    with pytest.raises(ValueError):
        build_dual_pair(1)


def test_named_generators(p3):
    names = list(build_dual_pair(p3).named())
    assert names == ["X", "Y", "H", "X_1", "X_2", "X_-1", "X_-2", "H_1", "H_2", "Z'", "Z''"]


def test_sub_weight_example(p3):
    g = build_dual_pair(p3)
    sw = sub_weight(p3, g, WeightVector.basis((0,) * 6))
    assert sw.theta_weight == F(-11, 6)
    assert sw.b_weight == (F(1, 3), F(-3, 2))
    with pytest.raises(NotAWeightVector):
        sub_weight(p3, g, WeightVector.zero())
    mixed = WeightVector.basis((0,) * 6) + WeightVector.basis((0, 0, 1, -1, 0, 0))
    with pytest.raises(NotAWeightVector):
        sub_weight(p3, g, mixed)


@pytest.mark.parametrize(
    "n, box, expected",
    [
        (2, 2, [(0, b, -b, 0) for b in range(-2, 3)]),
        (3, 1, [(0, 0, b, -b, 0, 0) for b in range(-1, 2)]),
        (2, 0, [(0, 0, 0, 0)]),
    ],
)
def test_levi_singulars(n, box, expected):
    p = ModuleParams(n, F(1, 2), F(1, 3))
    assert levi_singulars(p, box) == sorted(expected)


@given(params(), st.data())
def test_commutant(p, data):
    g = build_dual_pair(p)
    v = WeightVector.basis(data.draw(admissible_index(p)))
    a = data.draw(st.sampled_from(sorted(g.a_gens())))
    b = data.draw(st.sampled_from(sorted(g.b_gens())))
    assert op_commutator(g.a_gens()[a], g.b_gens()[b]).apply(p, v).is_zero()


@given(params(), st.data())
def test_sl2_triple(p, data):
    g = build_dual_pair(p)
    v = WeightVector.basis(data.draw(admissible_index(p)))
    assert op_commutator(g.H, g.Y).apply(p, v) == g.Y.apply(p, v).scale(2)
    assert op_commutator(g.H, g.X).apply(p, v) == g.X.apply(p, v).scale(-2)
    assert op_commutator(g.Y, g.X).apply(p, v) == g.H.apply(p, v)
    assert h_theta_from_simple_coroots(p.n).apply(p, v) == g.H.apply(p, v)


@given(params(ns=(2, 3, 4)), st.integers(-3, 3), st.integers(0, 3))
def test_theta_weight_of_hwv(p, b, c):
    g = build_dual_pair(p)
    assert sub_weight(p, g, hwv_closed_form(p, (b, c))).theta_weight == theta_weight(p, b)
