from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from afflag.affweyl import AffineWeylElement
from afflag.rootsys import root_system

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL = ["A1", "A2", "A3", "B2", "G2"]
CLASSICAL = ["A1", "A2", "A3", "B2", "C3", "D4"]


def rats(bound=12, den=6):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, den))


def vectors(n, **kw):
    return st.tuples(*[rats(**kw)] * n)


@st.composite
def elements(draw, rs, maxword=8):
    word = draw(st.lists(st.integers(0, rs.rank), max_size=maxword))
    return AffineWeylElement.from_word(rs, word)


@st.composite
def group_and(draw, groups, make):
    """A root system drawn from ``groups`` together with ``make(rs)`` drawn on top."""
    rs = root_system(draw(st.sampled_from(groups)))
    return rs, draw(make(rs))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
