from fractions import Fraction

from hypothesis import strategies as st

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


@st.composite
def kappas(draw, max_n=4, max_N=7):
    n = draw(st.integers(1, max_n))
    parts = draw(st.lists(st.integers(1, max_N), min_size=n, max_size=n).filter(lambda p: sum(p) <= max_N))
    return tuple(parts)


@st.composite
def distinct_points(draw, n, elements=small_rationals):
    return draw(st.lists(elements, min_size=n, max_size=n, unique=True))


@st.composite
def points_and_kappa(draw, max_n=4, max_N=7):
    kappa = draw(kappas(max_n, max_N))
    y = draw(distinct_points(len(kappa)))
    return y, kappa
