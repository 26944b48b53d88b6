import sys

from hypothesis import strategies as st

from covext.perm import Perm


@st.composite
def perms(draw, n=None, max_n=7):
    if n is None:
        n = draw(st.integers(1, max_n))
    return Perm(tuple(draw(st.permutations(range(n)))))


@st.composite
def perm_pairs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    return draw(perms(n)), draw(perms(n))


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        title, ok, detail = results[num]
        terminalreporter.write_line(f"criterion {num:>2} {'PASS' if ok else 'FAIL'}: {title}{detail}")
