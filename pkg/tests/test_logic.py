import itertools

import pytest
from hypothesis import given, settings

from adfsem.errors import DomainMismatchError, PartialInterpretationError
from adfsem.logic import (
    And, Atom, Bottom, Iff, Imp, Interpretation, Not, Or, Top, Value,
    all_three_valued, completions, eval_formula, f_completion, leq_info, meet,
    t_completion, two_valued_extensions,
)
from adfsem.model import parse_adf

from conftest import formulas

ABCD = ("a", "b", "c", "d")


def I(text, domain=ABCD):
    return Interpretation.parse(text, domain)


def python_expr(f):
    """Independent oracle: render the formula as a Python boolean expression."""
    if isinstance(f, Atom):
        return f"env[{f.name!r}]"
    if isinstance(f, Top):
        return "True"
    if isinstance(f, Bottom):
        return "False"
    if isinstance(f, Not):
        return f"(not {python_expr(f.arg)})"
    if isinstance(f, And):
        return "(" + " and ".join(python_expr(a) for a in f.args) + ")"
    if isinstance(f, Or):
        return "(" + " or ".join(python_expr(a) for a in f.args) + ")"
    if isinstance(f, Imp):
        return f"((not {python_expr(f.left)}) or {python_expr(f.right)})"
    if isinstance(f, Iff):
        return f"({python_expr(f.left)} == {python_expr(f.right)})"


def test_eval_implication_with_false_antecedent():
    f = Imp(Atom("b"), Atom("d"))
    assert eval_formula(f, I("{b:f,d:f}", ("b", "d"))) is True


def test_eval_bottom_is_out():
    assert eval_formula(Bottom(), Interpretation(())) is False


def test_eval_conjunction_with_negation():
    f = And((Atom("b"), Not(Atom("d"))))
    assert eval_formula(f, I("{b:t,d:f}", ("b", "d"))) is True


def test_eval_rejects_partial():
    with pytest.raises(PartialInterpretationError, match="partial interpretation where total required"):
        eval_formula(And((Atom("a"), Atom("b"))), I("{a:t}", ("a", "b")))


@settings(max_examples=300)
@given(formulas())
def test_eval_matches_truth_table(f):
    code = compile(python_expr(f), "<oracle>", "eval")
    for bits in itertools.product((False, True), repeat=4):
        env = dict(zip(ABCD, bits))
        v = Interpretation.from_mapping(ABCD, env)
        assert eval_formula(f, v) == eval(code, {"env": env})


def test_leq_info_examples():
    v = I("{a:t,b:t,c:f,d:u}")
    v1 = I("{a:t,b:t,c:f,d:t}")
    v2 = I("{a:t,b:t,c:f,d:f}")
    assert leq_info(v, v1) and leq_info(v, v2)
    assert leq_info(v, v)
    assert not leq_info(v1, v2) and not leq_info(v2, v1)


def test_leq_info_domain_mismatch():
    with pytest.raises(DomainMismatchError):
        leq_info(I("{a:t}", ("a",)), I("{b:t}", ("b",)))


def test_meet_examples():
    v = I("{a:t,b:t,c:f,d:u}")
    w = I("{a:f,b:f,c:f,d:t}")
    assert meet(v, w) == I("{a:u,b:u,c:f,d:u}")
    assert meet(v, v) == v
    all_t = I("{a:t,b:t,c:t,d:t}")
    all_f = I("{a:f,b:f,c:f,d:f}")
    assert meet(all_t, all_f) == Interpretation(ABCD)


def test_meet_is_greatest_lower_bound():
    dom = ("a", "b", "c")
    every = list(all_three_valued(dom))
    for v, w in itertools.product(every, every):
        m = meet(v, w)
        assert leq_info(m, v) and leq_info(m, w)
        for u in every:
            if leq_info(u, v) and leq_info(u, w):
                assert leq_info(u, m)


def test_completions_to_parent_set():
    got = completions(I("{b:f}", ("b",)), ("b", "d"))
    assert {str(c) for c in got} == {"{b:f,d:t}", "{b:f,d:f}"}


def test_completions_of_total_is_itself():
    v = I("{a:t,b:f}", ("a", "b"))
    assert completions(v, ("a", "b")) == [v]


def test_completions_of_empty():
    assert len(completions(Interpretation(()), ("a", "b"))) == 4


def test_completions_require_superset():
    with pytest.raises(DomainMismatchError):
        completions(I("{a:t}", ("a",)), ("b",))


def test_t_and_f_completion():
    v = I("{b:f}", ("b",))
    assert str(t_completion(v, ("b", "d"))) == "{b:f,d:t}"
    assert str(f_completion(v, ("b", "d"))) == "{b:f,d:f}"


@pytest.mark.parametrize("v", list(all_three_valued(("a", "b", "c"))))
def test_completion_count_and_extension_set(v):
    got = completions(v, ("a", "b", "c", "d"))
    unassigned = sum(1 for s in "abc" if v[s] is Value.U) + 1
    assert len(got) == 2 ** unassigned == len(set(got))
    # [v]_2 is exactly the set of two-valued w with v <=_i w
    totals = [w for w in all_three_valued(("a", "b", "c")) if w.is_two_valued()]
    assert set(two_valued_extensions(v)) == {w for w in totals if leq_info(v, w)}


def test_interpretation_views():
    v = I("{a:t,b:f,c:u,d:t}")
    assert v.true == {"a", "d"} and v.false == {"b"} and v.undecided == {"c"}
    assert v.true | v.false | v.undecided == set(ABCD)
    assert v["c"] is Value.U
    assert v.as_dict() == {"a": "t", "b": "f", "c": "u", "d": "t"}
    with pytest.raises(ValueError):
        Interpretation(("a",), assigned=0, value=1)


def test_formula_atoms_match_parents():
    D = parse_adf("s(a). s(b). s(d). ac(a, imp(b,d)). ac(b, c(v)). ac(d, d).")
    assert D.conditions["a"].atoms() == {"b", "d"}
