from __future__ import annotations

from hypothesis import settings, strategies as st

from coljones.ring import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def laurent(vars=("q",), max_terms=5, max_exp=4, max_coeff=9):
    """Hypothesis strategy for small Laurent polynomials in ``vars``."""
    exps = st.tuples(*[st.integers(-max_exp, max_exp) for _ in vars])
    return st.dictionaries(exps, st.integers(-max_coeff, max_coeff), max_size=max_terms).map(
        lambda t: LaurentPoly(t, vars)
    )


def nonzero_laurent(vars=("q",), **kw):
    return laurent(vars, **kw).filter(lambda p: not p.is_zero())


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
