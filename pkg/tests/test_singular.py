from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl2n_howe.dualpair import build_dual_pair
from sl2n_howe.singular import (
    HwvLabel,
    StructuralError,
    check_lower_annihilation,
    hwv_bruteforce,
    hwv_closed_form,
    hwv_to_json,
    k_tuples,
    kappa,
    singular_kernel,
    weight_space_basis,
    x_k_offsets,
)
from sl2n_howe.weylmodule import ModuleParams, WeightVector

from .conftest import GENERIC, NONGENERIC
from .strategies import params

F = Fraction


@pytest.mark.parametrize("n, c, size", [(3, 2, 6), (2, 0, 1), (2, 3, 4), (4, 4, 35)])
def test_weight_space_size(n, c, size):
    p = ModuleParams(n, *GENERIC)
    basis = weight_space_basis(p, (0, c))
    assert len(basis) == size == comb(c + n - 1, n - 1)
    assert all(p.is_admissible(k) for k in basis)


def test_weight_space_order_and_errors():
    assert k_tuples(3, 1) == [(0, 0), (0, 1), (1, 0)]
    with pytest.raises(ValueError):
        HwvLabel(0, -1)
    with pytest.raises(ValueError):
        k_tuples(2, -1)


def test_x_k_offsets_layout():
    # n = 4: (-k1, -k2, -k3, b+|k|, -b-c+k1, k2, k3, c-|k|)
    assert x_k_offsets(4, 2, 5, (1, 2, 0)) == (-1, -2, 0, 5, -6, 2, 0, 2)


def test_kappa_examples():
    p2 = ModuleParams(2, *GENERIC)
    p3 = ModuleParams(3, *GENERIC)
    assert kappa(p2, (0, 3), (0,)) == 1
    assert kappa(p2, (0, 1), (1,)) == F(2, 3)
    assert kappa(p3, (0, 2), (1, 0)) == F(4, 3)
    with pytest.raises(ValueError):
        kappa(p2, (0, 1), (2,))


@given(params(ns=(2,)), st.integers(-4, 4))
def test_n2_c1_hand_oracle(p, b):
    """X_1 (x_0 + lam x_1) = (1 - lam (a1+b+1)) x(-1, a1+b, a2-b, 0) by hand."""
    v = hwv_closed_form(p, (b, 1))
    assert v.coeff((0, b, -b - 1, 1)) == 1
    assert v.coeff((-1, b + 1, -b, 0)) == 1 / (p.a1 + b + 1)


def test_closed_form_examples(p2):
    assert hwv_closed_form(p2, (0, 0)) == WeightVector.basis((0, 0, 0, 0))
    expected = WeightVector.basis((0, 0, -1, 1)) + WeightVector.basis((-1, 1, 0, 0), F(2, 3))
    assert hwv_closed_form(p2, (0, 1)) == expected
    assert hwv_bruteforce(p2, (0, 1)) == expected
    assert hwv_bruteforce(p2, (0, 0)) == WeightVector.basis((0, 0, 0, 0))
    g = build_dual_pair(p2)
    assert all(op.apply(p2, expected).is_zero() for op in g.raise_b)


def test_kernel_dimension_one():
    p = ModuleParams(3, *GENERIC)
    assert len(singular_kernel(p, (-1, 2))) == 1


def test_bruteforce_rejects_wrong_dimension(monkeypatch):
    import sl2n_howe.singular as sing

    p = ModuleParams(2, *GENERIC)
    monkeypatch.setattr(sing, "singular_kernel", lambda *a, **k: [])
    with pytest.raises(StructuralError):
        sing.hwv_bruteforce(p, (0, 1))


@pytest.mark.parametrize("pair", [GENERIC, NONGENERIC])
@pytest.mark.parametrize("n", [2, 3])
def test_closed_form_equals_oracle_grid(n, pair):
    p = ModuleParams(n, *pair)
    g = build_dual_pair(p)
    for b in range(-2, 3):
        for c in range(4):
            assert hwv_closed_form(p, (b, c)) == hwv_bruteforce(p, (b, c), g)


@given(params(ns=(2, 3)), st.integers(-3, 3), st.integers(0, 3))
def test_closed_form_equals_oracle_random_params(p, b, c):
    assert hwv_closed_form(p, (b, c)) == hwv_bruteforce(p, (b, c))


def test_perturbed_vector_is_not_singular(p3):
    g = build_dual_pair(p3)
    v = hwv_closed_form(p3, (0, 2))
    bumped = v + WeightVector.basis(x_k_offsets(3, 0, 2, (1, 0)), F(1, 7))
    assert any(not op.apply(p3, bumped).is_zero() for op in g.raise_b)


@pytest.mark.parametrize("n, label", [(4, (0, 2)), (2, (0, 3)), (5, (-1, 3))])
def test_lower_annihilation(n, label):
    assert check_lower_annihilation(ModuleParams(n, *GENERIC), label)


def test_lower_annihilation_is_not_vacuous_for_x_minus_1():
    p = ModuleParams(4, *GENERIC)
    g = build_dual_pair(p)
    assert not g.lower_b[0].apply(p, hwv_closed_form(p, (0, 2))).is_zero()


def test_hwv_json(p2):
    assert hwv_to_json(p2, (0, 1)) == {
        "b": 0,
        "c": 1,
        "terms": [{"k": [0], "coeff": "1"}, {"k": [1], "coeff": "2/3"}],
    }
