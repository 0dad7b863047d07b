import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from order10.linalg import bareiss_echelon, nullspace, nullspace_multimodular, primitive


def matrices(max_rows=6, max_cols=7, lo=-20, hi=20):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=1, max_size=max_rows))


# products of thin factors give deficient rank and large entries
low_rank = st.tuples(st.integers(1, 3), st.integers(2, 6), st.integers(3, 8)).flatmap(
    lambda t: st.tuples(
        st.lists(st.lists(st.integers(-99, 99), min_size=t[0], max_size=t[0]),
                 min_size=t[1], max_size=t[1]),
        st.lists(st.lists(st.integers(-99, 99), min_size=t[2], max_size=t[2]),
                 min_size=t[0], max_size=t[0])))


def span_equal(a, b, n):
    if not a and not b:
        return True
    A = sympy.Matrix(a) if a else sympy.zeros(0, n)
    B = sympy.Matrix(b) if b else sympy.zeros(0, n)
    return A.rank() == B.rank() == sympy.Matrix.vstack(A, B).rank()


@given(matrices())
@settings(max_examples=150)
def test_nullspace_agrees_with_sympy(rows):
    n = len(rows[0])
    ours = nullspace(rows)
    ref = [list(v) for v in sympy.Matrix(rows).nullspace()]
    assert len(ours) == len(ref)
    assert span_equal(ours, ref, n)
    for v in ours:
        assert all(sum(r[j] * v[j] for j in range(n)) == 0 for r in rows)


@given(low_rank)
@settings(max_examples=100)
def test_multimodular_matches_bareiss(factors):
    left, right = factors
    rows = (sympy.Matrix(left) * sympy.Matrix(right)).tolist()
    rows = [[int(x) for x in r] for r in rows]
    assert nullspace_multimodular(rows) == nullspace(rows)


def test_echelon_rank_and_pivots():
    rows = [[2, 4, 6], [1, 2, 3], [0, 1, 1]]
    ech, piv = bareiss_echelon(rows)
    assert piv == [0, 1] and len(ech) == 2
    assert nullspace(rows) == [[1, 1, -1]]


def test_primitive():
    assert primitive([-4, 6, 0]) == [2, -3, 0]
    assert primitive([0, 0]) == [0, 0]
    assert primitive([0, -3, 9]) == [0, 1, -3]


def test_full_rank_has_trivial_nullspace():
    assert nullspace([[1, 0], [0, 1]]) == []
    assert nullspace_multimodular([[1, 0], [0, 1]]) == []
