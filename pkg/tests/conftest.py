import hypothesis.strategies as st
from hypothesis import settings

from eulerian_ode.kernel import IntPoly

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=60, deadline=None)
settings.load_profile("dev")

BIG = 2**128


def coeff_lists(max_len=51, bound=BIG):
    return st.lists(st.integers(min_value=-bound, max_value=bound), max_size=max_len)


def polys(max_len=51, bound=BIG):
    return coeff_lists(max_len, bound).map(lambda c: IntPoly(tuple(c)))
