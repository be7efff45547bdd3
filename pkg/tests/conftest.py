from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from hankelcf.exactnum import Polynomial, RationalFunction

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_q = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
nonzero_q = small_q.filter(bool)


def polys(max_len: int = 5, nonzero: bool = False):
    s = st.lists(small_q, min_size=0, max_size=max_len).map(Polynomial)
    return s.filter(lambda p: not p.is_zero()) if nonzero else s


@st.composite
def ratfuncs(draw, max_len: int = 4):
    """Rational functions with a nonzero denominator constant term."""
    num = draw(polys(max_len))
    den = draw(st.lists(small_q, max_size=max_len - 1))
    return RationalFunction(num, Polynomial([draw(nonzero_q)] + den))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
