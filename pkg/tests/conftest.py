import random
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from rosenlin.exactalg import LAMBDA, UniPoly
from rosenlin.polymat import PolyMatrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_q = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
polys = st.lists(small_q, max_size=5).map(UniPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def poly_matrices(max_dim=3, max_deg=3, square=False):
    @st.composite
    def build(draw):
        r = draw(st.integers(1, max_dim))
        c = r if square else draw(st.integers(1, max_dim))
        entries = [[UniPoly(draw(st.lists(small_q, max_size=max_deg + 1))) for _ in range(c)] for _ in range(r)]
        return PolyMatrix(entries, rows=r, cols=c)
    return build()


def scalar(p) -> PolyMatrix:
    return PolyMatrix([[p]], rows=1, cols=1)


def pm(rows) -> PolyMatrix:
    return PolyMatrix([[e if isinstance(e, UniPoly) else UniPoly.const(e) for e in r] for r in rows])


@pytest.fixture
def rng():
    return random.Random(12345)


L = LAMBDA


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
