from fractions import Fraction

from hypothesis import strategies as st

from sl2n_howe.weylmodule import ModuleParams

@st.composite
def noninteger(draw):
    den = draw(st.integers(2, 12))
    whole = draw(st.integers(-9, 9))
    rem = draw(st.integers(1, den - 1))
    return Fraction(whole * den + rem, den)


@st.composite
def params(draw, ns=(2, 3, 4)):
    return ModuleParams(draw(st.sampled_from(ns)), draw(noninteger()), draw(noninteger()))


@st.composite
def admissible_index(draw, p: ModuleParams, spread: int = 4):
    n = p.n
    neg = [-draw(st.integers(0, spread)) for _ in range(n - 1)]
    mid = draw(st.integers(-spread, spread))
    pos = [draw(st.integers(0, spread)) for _ in range(n - 1)]
    first = -(sum(neg) + mid + sum(pos))
    return tuple(neg) + (first, mid) + tuple(pos)
