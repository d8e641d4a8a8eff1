from fractions import Fraction

from hypothesis import strategies as st

from derangements.exact import BiPoly, Poly

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
small_polys = st.lists(small_rationals, max_size=5).map(Poly)
small_bipolys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), small_rationals, max_size=5
).map(BiPoly)


def F(*args):
    return Fraction(*args)
