import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from circpw.graph import Graph  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, [])
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def trees(draw, min_n=1, max_n=20):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return Graph(n, [(p, v) for v, p in zip(range(1, n), parents)])


@st.composite
def seeds(draw):
    return draw(st.integers(0, 2 ** 32 - 1))


def pytest_terminal_summary(terminalreporter):
    results = None
    for mod in list(sys.modules.values()):
        results = getattr(mod, "ACCEPTANCE_RESULTS", None)
        if results:
            break
    if not results:
        return
    terminalreporter.section("acceptance criteria")

    def order(key):
        return int(key.rstrip("ab")), key

    for key in sorted(results, key=order):
        status, text = results[key]
        terminalreporter.write_line(f"criterion {key:>3} {status}  {text}")
