import pytest

from beaverbench.hunter import IndependenceCandidate, Proved, Refuted, hunt, sweep
from beaverbench.logic import FULL, IMPLICATIONAL, AxiomSystem, check_proof, evaluate, parse, serialize


def test_refuted_with_falsifier():
    v = hunt(FULL, parse("(p->q)->q"))
    assert isinstance(v.classification, Refuted)
    assert not evaluate(parse("(p->q)->q"), v.classification.valuation)
    assert v.to_dict()["valuation"] == {"p": 0, "q": 0}


def test_proved_minimal():
    v = hunt(IMPLICATIONAL, parse("p->p"))
    c = v.classification
    assert isinstance(c, Proved) and c.minimal
    assert check_proof(IMPLICATIONAL, parse("p->p"), c.proof)
    assert v.to_dict()["size"] == 67


def test_candidate_carries_countermodel():
    v = hunt(IMPLICATIONAL, parse("~~p->p"))
    c = v.classification
    assert isinstance(c, IndependenceCandidate)
    assert c.semantic_status == "Valid"
    assert c.countermodel is not None
    assert c.proof_search_exhausted_at > 0
    d = v.to_dict()
    assert d["classification"] == "IndependenceCandidate" and d["countermodel"]["worlds"]


def test_candidate_without_countermodel_under_small_budget():
    v = hunt(FULL, parse("~~p->p"), proof_budget=200)
    c = v.classification
    assert isinstance(c, IndependenceCandidate)
    assert c.countermodel is None
    # exhaustive only as far as the exact phase got; never beyond the budget
    assert 0 < c.proof_search_exhausted_at <= 200
    assert c.reason


def test_only_a1_is_weak():
    v = hunt(AxiomSystem.of("A1"), parse("p->p"), proof_budget=300)
    assert isinstance(v.classification, IndependenceCandidate)


def test_sweep_canonical_and_parallel_identical():
    a = sweep(IMPLICATIONAL, 5, 1)
    b = sweep(IMPLICATIONAL, 5, 1, workers=2)
    assert [x.to_dict() for x in a] == [x.to_dict() for x in b]
    assert [serialize(x.sentence) for x in a] == ["p->~~p", "~~p->p"]


def test_sweep_rejects_bad_caps():
    with pytest.raises(ValueError):
        sweep(FULL, 0, 1)
    with pytest.raises(ValueError):
        hunt(FULL, parse("p"), proof_budget=0)
