import pytest

from beaverbench.logic import (
    FULL, IMPLICATIONAL, AxiomSystem, Imp, Meta, Var, check_proof, is_tautology, parse, serialize,
)
from beaverbench.theorem_pump import (
    NoneWithin,
    Proved,
    ResourceExceeded,
    SearchIncomplete,
    pump,
    sentences_up_to,
    theorems_up_to,
    resolve,
    unify,
    verify,
)
from oracles import smaller_proof_exists


def test_identity_is_five_lines():
    r = pump(IMPLICATIONAL, parse("p->p"), 100)
    assert isinstance(r.outcome, Proved)
    assert r.outcome.minimal
    assert r.outcome.size == 67 and r.outcome.proof.line_count == 5
    assert check_proof(IMPLICATIONAL, parse("p->p"), r.outcome.proof)
    assert verify(IMPLICATIONAL, r)


def test_axiom_instance_is_one_line():
    r = pump(FULL, parse("p->(q->p)"), 10)
    assert r.outcome.proof.line_count == 1 and r.outcome.size == 7


def test_none_within_below_minimum():
    r = pump(IMPLICATIONAL, parse("p->p"), 66)
    assert r.outcome == NoneWithin(66)
    assert r.exhausted_below == 67


def test_non_theorem_is_none_within():
    r = pump(FULL, parse("p->q"), 60)
    assert isinstance(r.outcome, NoneWithin)


@pytest.mark.parametrize("target", ["p->p", "~p->~p", "p->(q->q)", "~p->(p->q)"])
def test_size_monotone_in_cap(target):
    """Once proved at a cap, every larger cap gives the same minimal size; smaller caps give nothing."""
    s = parse(target)
    best = pump(FULL, s, 200).outcome
    assert isinstance(best, Proved) and best.minimal
    for cap in (best.size - 1, best.size - 7):
        assert isinstance(pump(FULL, s, cap).outcome, NoneWithin)
    for cap in (best.size, best.size + 1, best.size + 40):
        o = pump(FULL, s, cap).outcome
        assert isinstance(o, Proved) and o.size == best.size and o.proof == best.proof


def test_budget_monotone():
    """More search nodes never lose a proof or lower the certified bound."""
    s = parse("~p->(p->q)")
    prev_bound = 0
    proved = False
    for budget in (5, 50, 500, 5000, 20000):
        r = pump(FULL, s, 200, node_budget=budget, max_given=0)
        assert r.exhausted_below >= prev_bound
        prev_bound = r.exhausted_below
        if proved:
            assert r.proved
        proved = proved or r.proved
    assert proved


def test_incomplete_reports_lower_bound():
    r = pump(FULL, parse("~~p->p"), 2000, node_budget=100, max_given=0)
    assert isinstance(r.outcome, SearchIncomplete)
    assert 0 < r.outcome.lower_bound <= 1007


@pytest.mark.parametrize("target", ["~~p->p", "p->~~p"])
def test_saturation_proofs_check(target):
    s = parse(target)
    r = pump(FULL, s, 5000)
    assert isinstance(r.outcome, Proved)
    assert not r.outcome.minimal
    assert check_proof(FULL, s, r.outcome.proof)
    assert r.outcome.size >= r.outcome.lower_bound


def test_unify_basics():
    a, b = Meta(0), Meta(1)
    s = unify(Imp(a, b), Imp(Var("p"), a), {})
    assert resolve(Imp(a, b), s) == Imp(Var("p"), Var("p"))
    assert unify(Imp(a, a), Imp(Var("p"), Var("q")), {}) is None
    assert unify(a, Imp(a, Var("p")), {}) is None  # occurs check


def test_sentence_enumeration_counts():
    got = [serialize(s) for s in sentences_up_to(5, ["p"])]
    assert got[:3] == ["p", "~p", "~~p"]
    assert len(got) == len(set(got))
    assert set(got) == {"p", "~p", "~~p", "p->p", "~~~p", "~p->p", "p->~p",
                        "~~~~p", "~~p->p", "~p->~p", "p->~~p"}
    for s in sentences_up_to(7, ["p", "q"]):
        assert parse(serialize(s)) == s


def test_ground_census_small():
    entries = theorems_up_to(FULL, 9, 2)
    texts = [serialize(e.sentence) for e in entries]
    assert "p->(q->p)" in texts and "p->(p->p)" in texts
    for e in entries:
        assert check_proof(FULL, e.sentence, e.proof)
        assert e.proof.symbol_count == e.min_size <= 9
        assert not smaller_proof_exists(serialize(e.sentence), ["A1", "A2", "A3"], e.min_size)
    assert [(e.min_size, serialize(e.sentence)) for e in entries] == \
        sorted((e.min_size, serialize(e.sentence)) for e in entries)


def test_targeted_census_matches_ground_where_both_apply():
    ground = [(serialize(e.sentence), e.min_size) for e in theorems_up_to(FULL, 12, 1)]
    targeted = [(serialize(e.sentence), e.min_size) for e in theorems_up_to(FULL, 12, 1, sentence_cap=12)]
    assert targeted == [g for g in ground if len(g[0].replace("->", ">")) <= 12]


def test_census_workers_identical():
    a = theorems_up_to(FULL, 70, 1, sentence_cap=5)
    b = theorems_up_to(FULL, 70, 1, sentence_cap=5, workers=2)
    assert [(e.sentence, e.proof) for e in a] == [(e.sentence, e.proof) for e in b]
    assert all(is_tautology(e.sentence)[0] for e in a)


def test_census_budget_exceeded():
    with pytest.raises(ResourceExceeded):
        theorems_up_to(AxiomSystem.of("A1,A2"), 200, 1, sentence_cap=5, node_budget=10)


def test_census_rejects_bad_config():
    with pytest.raises(ValueError):
        theorems_up_to(FULL, 0, 1)
    with pytest.raises(ValueError):
        theorems_up_to(FULL, 10, 0)
