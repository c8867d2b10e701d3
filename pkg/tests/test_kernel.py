from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from sl2n_howe.kernel import nullspace, rank


def naive_rank(rows, ncols):
    """Plain Gauss-Jordan over Fractions."""
    m = [list(map(Fraction, r)) for r in rows]
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(
    lambda ncols: st.lists(
        st.lists(st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5)), min_size=ncols, max_size=ncols),
        min_size=0,
        max_size=6,
    ).map(lambda rows: (rows, ncols))
)


@given(matrices)
def test_nullspace_is_kernel_with_right_dimension(data):
    rows, ncols = data
    ker = nullspace(rows, ncols)
    assert len(ker) == ncols - naive_rank(rows, ncols)
    assert rank(rows, ncols) == naive_rank(rows, ncols)
    for vec in ker:
        for row in rows:
            assert sum(a * x for a, x in zip(row, vec)) == 0


def test_rank_deficient_example():
    rows = [[1, 2, 3], [2, 4, 6], [0, 0, 1]]
    ker = nullspace(rows, 3)
    assert ker == [[Fraction(-2), Fraction(1), Fraction(0)]]
