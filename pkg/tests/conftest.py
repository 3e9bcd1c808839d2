import pytest
from hypothesis import strategies as st

from adfsem.fixtures import fixture
from adfsem.logic import And, Atom, Bottom, Iff, Imp, Not, Or, Top
from adfsem.model import AdfInstance


@pytest.fixture(params=["D0", "D1", "D1p", "D2", "A1", "A2"])
def any_fixture(request):
    return fixture(request.param)


@pytest.fixture
def D0():
    return fixture("D0")


@pytest.fixture
def D1():
    return fixture("D1")


@pytest.fixture
def D1p():
    return fixture("D1p")


@pytest.fixture
def D2():
    return fixture("D2")


@pytest.fixture
def A1():
    return fixture("A1")


@pytest.fixture
def A2():
    return fixture("A2")


def formulas(atoms=("a", "b", "c", "d"), max_leaves=8):
    leaves = st.one_of(st.sampled_from([Atom(a) for a in atoms]), st.just(Top()), st.just(Bottom()))

    def extend(children):
        pairs = st.tuples(children, children)
        return st.one_of(
            children.map(Not),
            st.lists(children, min_size=2, max_size=3).map(lambda xs: And(tuple(xs))),
            st.lists(children, min_size=2, max_size=3).map(lambda xs: Or(tuple(xs))),
            pairs.map(lambda p: Imp(*p)),
            pairs.map(lambda p: Iff(*p)),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


@st.composite
def instances(draw, min_size=1, max_size=4):
    n = draw(st.integers(min_size, max_size))
    names = tuple("abcdef"[:n])
    conds = {s: draw(formulas(names, max_leaves=5)) for s in names}
    return AdfInstance(names, conds)
