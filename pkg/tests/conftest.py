import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", parent=settings.get_profile("default"), max_examples=1000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def monomials(n, max_exp=6):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def generator_sets(draw, min_n=1, max_n=4, max_exp=6, max_r=10, min_r=0):
    n = draw(st.integers(min_n, max_n))
    gens = draw(st.lists(monomials(n, max_exp), min_size=min_r, max_size=max_r))
    return n, gens


def nat(*exps):
    """Monomial from exponents in x1..xn order."""
    from mddkit.monomial import from_natural

    return from_natural(exps)
