import pytest
from hypothesis import settings, strategies as st

from welded import ConjAut, GaussDiagram, Word, parse, phi_a_to_g, random_diagram, stack

settings.register_profile("default", deadline=None)
settings.load_profile("default")

H_TEXT = "gd 2\narrow - 2.1 1.1\n"


def h_power(k: int) -> GaussDiagram:
    out = GaussDiagram.empty(2)
    for _ in range(k):
        out = stack(out, parse(H_TEXT))
    return out


def brunnian() -> GaussDiagram:
    return phi_a_to_g(ConjAut(["", "", "x2 x1 x2^-1 x1^-1"], 3))


@pytest.fixture
def H():
    return parse(H_TEXT)


@pytest.fixture
def B():
    return brunnian()


def words(n: int, max_len: int = 8):
    letters = st.sampled_from([i for i in range(1, n + 1)] + [-i for i in range(1, n + 1)])
    return st.lists(letters, max_size=max_len).map(lambda ls: Word(ls, n))


@st.composite
def ranked_words(draw, max_n=4, max_len=8, count=1):
    n = draw(st.integers(1, max_n))
    return n, [draw(words(n, max_len)) for _ in range(count)]


@st.composite
def conj_auts(draw, n=None, max_len=6):
    n = n or draw(st.integers(1, 4))
    conj = []
    for i in range(1, n + 1):
        others = [j for j in range(1, n + 1) if j != i]
        if not others:
            conj.append(Word.identity(n))
            continue
        ls = draw(st.lists(st.sampled_from(others + [-j for j in others]), max_size=max_len))
        conj.append(Word(ls, n))
    return ConjAut(conj, n)


@st.composite
def diagrams(draw, max_n=4, max_arrows=8, self_arrows=True):
    n = draw(st.integers(1, max_n))
    count = draw(st.integers(0, max_arrows))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_diagram(n, count, seed, self_arrows)


# acceptance criteria report one line each at the end of the run
ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    if number is None or rep.when != "call":
        return
    detail = getattr(item, "criterion_detail", "")
    ACCEPTANCE[number] = ("PASS" if rep.passed else "FAIL", item.function.__doc__ or "", detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, title, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {status}: {title.strip()} ({detail})")
