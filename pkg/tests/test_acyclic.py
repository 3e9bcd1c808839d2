import itertools

import pytest
from hypothesis import given, settings

from adfsem.acyclic import (
    AcyclicPdEvaluation, blocks, enumerate_acyclic_evaluations, exists_unblocked_evaluation,
)
from adfsem.decisive import min_dec
from adfsem.errors import CapExceededError, InstanceError
from adfsem.logic import all_three_valued, leq_info
from adfsem.model import parse_adf
from adfsem.verify import random_instance

from conftest import instances


def summary(evals):
    return {(e.sequence, e.blocking_set) for e in evals}


def test_sample_evaluations(D1):
    S = D1.statements
    assert summary(enumerate_acyclic_evaluations(D1, S, "a")) == {(("a",), frozenset("c"))}
    assert summary(enumerate_acyclic_evaluations(D1, S, "b")) == {(("a", "b"), frozenset("c"))}
    assert enumerate_acyclic_evaluations(D1, S, "c") == []


def test_modified_sample_evaluation_for_c(D1p):
    # the listed evaluation is the irredundant one; padded sequences such as (a, c) also qualify
    S = D1p.statements
    assert summary(enumerate_acyclic_evaluations(D1p, S, "c", irredundant=True)) == {(("c",), frozenset())}
    full = summary(enumerate_acyclic_evaluations(D1p, S, "c"))
    assert (("c",), frozenset()) in full
    assert (("a", "c"), frozenset("c")) in full
    assert summary(enumerate_acyclic_evaluations(D1p, S, "a", irredundant=True)) == {(("a",), frozenset("c"))}
    assert summary(enumerate_acyclic_evaluations(D1p, S, "b", irredundant=True)) == {(("a", "b"), frozenset("c"))}


def test_top_condition_evaluation():
    D = parse_adf("s(a). s(b). ac(a, c(v)). ac(b, b).")
    assert summary(enumerate_acyclic_evaluations(D, ["a"], "a")) == {(("a",), frozenset())}


def test_target_must_be_in_base_set(D1):
    with pytest.raises(InstanceError):
        enumerate_acyclic_evaluations(D1, ["a"], "b")
    with pytest.raises(InstanceError):
        exists_unblocked_evaluation(D1, ["a"], "b", D1.interpretation({}))


def test_enumeration_cap():
    D = parse_adf(" ".join(f"s(x{i})." for i in range(7)) + " " + " ".join(f"ac(x{i}, c(v))." for i in range(7)))
    with pytest.raises(CapExceededError):
        enumerate_acyclic_evaluations(D, D.statements, "x0", limit=100)


def test_blocks():
    e = AcyclicPdEvaluation(("a", "b"), frozenset("c"))
    D = parse_adf("s(a). s(b). s(c). ac(a,a). ac(b,b). ac(c,c).")
    assert blocks(D.interpretation({"c": "t"}), e)
    assert not blocks(D.interpretation({}), e)
    assert blocks(D.interpretation({"a": "f"}), e)
    assert not blocks(D.interpretation({"a": "t", "b": "t", "c": "f"}), e)


def test_self_blocking_evaluation_is_representable():
    D = parse_adf("s(a). ac(a, neg(a)).")
    (e,) = enumerate_acyclic_evaluations(D, ["a"], "a")
    assert e.sequence == ("a",) and e.blocking_set == {"a"}
    assert set(e.sequence) & e.blocking_set


def test_exists_unblocked_examples(D1):
    S = D1.statements
    assert not exists_unblocked_evaluation(D1, S, "c", D1.interpretation({}))
    assert not exists_unblocked_evaluation(D1, S, "a", D1.interpretation({"c": "t"}))
    assert exists_unblocked_evaluation(D1, S, "a", D1.interpretation({"c": "f"}))


def _check_structure(D, A, e):
    assert e.sequence[-1] in A and set(e.sequence) <= set(A)
    assert len(set(e.sequence)) == len(e.sequence)
    assert e.steps[0].true == frozenset()
    for i, (a, w) in enumerate(zip(e.sequence, e.steps)):
        assert w in min_dec(D, "in", a)
        assert w.true <= set(e.sequence[:i])
    assert e.blocking_set == frozenset().union(*(w.false for w in e.steps))


@settings(max_examples=30, deadline=None)
@given(instances(max_size=4))
def test_evaluations_are_well_formed(D):
    for r in range(1, D.n + 1):
        for A in itertools.combinations(D.statements, r):
            for s in A:
                for e in enumerate_acyclic_evaluations(D, A, s):
                    _check_structure(D, A, e)


def _fixpoint_matches_enumeration(D):
    for r in range(1, D.n + 1):
        for A in itertools.combinations(D.statements, r):
            for s in A:
                evals = enumerate_acyclic_evaluations(D, A, s)
                for v in all_three_valued(D.statements):
                    expected = any(not blocks(v, e) for e in evals)
                    assert exists_unblocked_evaluation(D, A, s, v) == expected, (D, A, s, str(v))


@settings(max_examples=40, deadline=None)
@given(instances(max_size=4))
def test_fixpoint_matches_enumeration(D):
    _fixpoint_matches_enumeration(D)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(4))
def test_fixpoint_matches_enumeration_six_statements(seed):
    _fixpoint_matches_enumeration(random_instance(6 if seed % 2 else 5, seed, 0.35))


@settings(max_examples=25, deadline=None)
@given(instances(max_size=3))
def test_more_information_never_unblocks(D):
    every = list(all_three_valued(D.statements))
    for s in D.statements:
        for v, w in itertools.product(every, every):
            if leq_info(v, w) and not exists_unblocked_evaluation(D, D.statements, s, v):
                assert not exists_unblocked_evaluation(D, D.statements, s, w)
