import os

from hypothesis import HealthCheck, settings, strategies as st

from homflychar.exactring import LaurentPoly, RFunc

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def laurent_polys(draw, variables=("A", "q"), max_terms=4, max_exp=4, max_coeff=5):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = {v: draw(st.integers(-max_exp, max_exp)) for v in variables}
        c = draw(st.integers(-max_coeff, max_coeff))
        mono = LaurentPoly.monomial(c, **e)
        for k, v in mono.items():
            terms[k] = terms.get(k, 0) + v
    return LaurentPoly(terms)


@st.composite
def q_polys(draw):
    return draw(laurent_polys(variables=("q",)))


# denominators drawn from a few quantum numbers and braces, as the engine produces them
_DENS = [
    LaurentPoly.monomial(1, q=1) - LaurentPoly.monomial(1, q=-1),
    LaurentPoly.monomial(1, q=1) + LaurentPoly.monomial(1, q=-1),
    LaurentPoly.monomial(1, q=2) + 1 + LaurentPoly.monomial(1, q=-2),
    LaurentPoly.monomial(1, A=1, q=1) - LaurentPoly.monomial(1, A=-1, q=-1),
]


@st.composite
def rfuncs(draw):
    num = draw(laurent_polys())
    dens = draw(st.lists(st.sampled_from(_DENS), max_size=2))
    return RFunc(num, dens)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[i])
