from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cplxgeom import exact as ex
from cplxgeom.clifford_core import Multivector, Signature

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
gaussians = st.builds(ex.gq, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(bool)


@st.composite
def signatures(draw, max_dim=6):
    m = draw(st.integers(0, max_dim))
    k = draw(st.integers(0, m))
    return Signature(k, m - k)


@st.composite
def multivectors(draw, sig, max_terms=4):
    blades = sig.blades()
    chosen = draw(st.lists(st.sampled_from(blades), max_size=max_terms, unique=True))
    return Multivector(sig, {b: draw(gaussians) for b in chosen})


def frac(x) -> Fraction:
    return Fraction(x)
