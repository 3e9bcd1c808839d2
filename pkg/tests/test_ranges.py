import random

import pytest
from hypothesis import given, settings

from adfsem.acyclic import exists_unblocked_evaluation
from adfsem.decisive import Decision, is_decisive
from adfsem.extensions import enumerate_extensions
from adfsem.logic import Interpretation
from adfsem.ranges import (
    NotConflictFreeError, acyclic_discarded_set, acyclic_range_interpretation,
    discarded_set, range_interpretation,
)

from conftest import instances


def test_range_examples(D1, D2):
    assert str(range_interpretation(D1, {"a", "b"})) == "{a:t,b:t,c:u}"
    assert discarded_set(D1, {"a", "b"}) == frozenset()
    assert str(range_interpretation(D2, {"b", "c"})) == "{a:f,b:t,c:t,d:u}"


def test_empty_set_with_nothing_decided(D1):
    assert range_interpretation(D1, ()) == Interpretation(D1.statements)


@pytest.mark.parametrize("E, discarded", [
    ((), {"c"}), (("a",), {"c"}), (("a", "b"), {"c"}), (("c",), {"a", "b"}), (("a", "b", "c"), set()),
])
def test_acyclic_discarded_sets(D1, E, discarded):
    assert acyclic_discarded_set(D1, E) == discarded
    for E in [(), ("a",), ("a", "b"), ("c",), ("a", "b", "c")]:
        assert discarded_set(D1, E) == frozenset()


def test_acyclic_range_examples(D1):
    assert str(acyclic_range_interpretation(D1, {"a", "b"})) == "{a:t,b:t,c:f}"
    assert str(acyclic_range_interpretation(D1, {"c"})) == "{a:f,b:f,c:t}"
    assert str(acyclic_range_interpretation(D1, {"a", "b", "c"})) == "{a:t,b:t,c:t}"


def test_requires_conflict_free(D1):
    with pytest.raises(NotConflictFreeError):
        range_interpretation(D1, {"b"})
    with pytest.raises(NotConflictFreeError):
        acyclic_range_interpretation(D1, {"b"})


def _sequential(D, E, discard, rng):
    """Assign f one statement at a time in a random order, with immediate effect."""
    v = D.interpretation(true=E)
    while True:
        order = [s for s in D.statements if v[s].value == "u"]
        rng.shuffle(order)
        for s in order:
            if discard(D, v, s):
                v = D.interpretation(true=v.true, false=v.false | {s})
                break
        else:
            return v


def _decisively_out(D, v, s):
    return is_decisive(D, v, s) is Decision.OUT


def _all_blocked(D, v, s):
    return not exists_unblocked_evaluation(D, D.statements, s, v)


@settings(max_examples=40, deadline=None)
@given(instances(max_size=5))
def test_range_properties(D):
    rng = random.Random(0)
    for E in enumerate_extensions(D, "conflict-free"):
        v, va = range_interpretation(D, E), acyclic_range_interpretation(D, E)
        assert v.true == va.true == set(E)
        assert v.false <= va.false
        # fixpoints: no further step applies
        assert not any(_decisively_out(D, v, s) for s in v.undecided)
        assert not any(_all_blocked(D, va, s) for s in va.undecided)
        for _ in range(3):
            assert _sequential(D, E, _decisively_out, rng) == v
            assert _sequential(D, E, _all_blocked, rng) == va
