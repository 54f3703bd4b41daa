"""Classify sentences as Proved, Refuted, or independence candidates, singly or in sweeps."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

from .logic import (
    AxiomSystem,
    KripkeModel,
    Proof,
    Sentence,
    Valuation,
    is_tautology,
    kripke_countermodel,
    parse,
    serialize,
)
from .theorem_pump import (
    DEFAULT_MAX_GIVEN,
    DEFAULT_MAX_WEIGHT,
    DEFAULT_NODE_BUDGET,
    VAR_POOL,
    Proved as PumpProved,
    pump,
    sentences_up_to,
)

DEFAULT_PROOF_BUDGET = 100_000


@dataclass(frozen=True)
class Proved:
    proof: Proof
    minimal: bool


@dataclass(frozen=True)
class Refuted:
    valuation: Valuation


@dataclass(frozen=True)
class IndependenceCandidate:
    """Valid by truth table, yet no proof turned up.

    ``proof_search_exhausted_at`` is the largest size up to which the search
    was exhaustive. ``countermodel``, when present, is a Kripke model showing
    that no proof exists at any size in a system without A3.
    """

    proof_search_exhausted_at: int
    reason: str
    semantic_status: str = "Valid"
    countermodel: Optional[KripkeModel] = None


Classification = Union[Proved, Refuted, IndependenceCandidate]


@dataclass(frozen=True)
class Budgets:
    proof_budget: int = DEFAULT_PROOF_BUDGET
    node_budget: int = DEFAULT_NODE_BUDGET
    max_given: int = DEFAULT_MAX_GIVEN
    max_weight: int = DEFAULT_MAX_WEIGHT

    def to_dict(self) -> dict:
        return {"proof_budget": self.proof_budget, "node_budget": self.node_budget,
                "max_given": self.max_given, "max_weight": self.max_weight}


@dataclass(frozen=True)
class HuntVerdict:
    sentence: Sentence
    system: AxiomSystem
    classification: Classification
    budgets: Budgets = field(default_factory=Budgets)
    expanded: int = 0
    given: int = 0

    @property
    def kind(self) -> str:
        return type(self.classification).__name__

    def to_dict(self) -> dict:
        c = self.classification
        out: dict = {"sentence": serialize(self.sentence), "system": str(self.system),
                     "classification": self.kind}
        if isinstance(c, Proved):
            out.update(minimal=c.minimal, size=c.proof.symbol_count,
                       line_count=c.proof.line_count, proof=c.proof.to_json())
        elif isinstance(c, Refuted):
            out["valuation"] = {k: int(v) for k, v in sorted(c.valuation.items())}
        else:
            out.update(semantic_status=c.semantic_status,
                       proof_search_exhausted_at=c.proof_search_exhausted_at,
                       reason=c.reason,
                       countermodel=c.countermodel.to_dict() if c.countermodel else None)
        out["budgets"] = self.budgets.to_dict()
        out["search"] = {"expanded": self.expanded, "given": self.given}
        return out


def hunt(sys: AxiomSystem, s: Sentence, proof_budget: int = DEFAULT_PROOF_BUDGET,
         node_budget: int = DEFAULT_NODE_BUDGET, max_given: int = DEFAULT_MAX_GIVEN,
         max_weight: int = DEFAULT_MAX_WEIGHT) -> HuntVerdict:
    """Truth table first, then bounded proof search.

    Without A3 a Kripke countermodel is looked for before saturating, since one
    rules out proofs of every size and makes the expensive search pointless.
    """
    if proof_budget < 1:
        raise ValueError("proof_budget must be at least 1")
    budgets = Budgets(proof_budget, node_budget, max_given, max_weight)
    valid, falsifier = is_tautology(s)
    if not valid:
        return HuntVerdict(s, sys, Refuted(falsifier), budgets)
    model = None if "A3" in sys.schemata else kripke_countermodel(s)
    result = pump(sys, s, proof_budget, node_budget,
                  0 if model is not None else max_given, max_weight)
    stats = result.stats
    if isinstance(result.outcome, PumpProved):
        if model is not None:
            raise AssertionError(f"proof found for {serialize(s)} despite a countermodel")
        c: Classification = Proved(result.outcome.proof, result.outcome.minimal)
    else:
        o = result.outcome
        reason = getattr(o, "reason", "no proof within the size budget")
        if model is not None:
            reason = "Kripke countermodel found; " + reason
        c = IndependenceCandidate(result.exhausted_below - 1, reason, countermodel=model)
    return HuntVerdict(s, sys, c, budgets, stats.expanded, stats.given)


def _hunt_text(args: tuple) -> HuntVerdict:
    axioms, text, proof_budget, node_budget, max_given, max_weight = args
    return hunt(AxiomSystem.of(axioms), parse(text), proof_budget, node_budget,
                max_given, max_weight)


def sweep(sys: AxiomSystem, sentence_size_cap: int, var_limit: int,
          proof_budget: int = DEFAULT_PROOF_BUDGET, workers: int = 1,
          node_budget: int = DEFAULT_NODE_BUDGET, max_given: int = DEFAULT_MAX_GIVEN,
          max_weight: int = DEFAULT_MAX_WEIGHT) -> list[HuntVerdict]:
    """Hunt every sentence up to the size cap; keep the independence candidates.

    Sentences are visited in canonical order (size, then generation order) and
    results are merged in that order, so the output does not depend on ``workers``.
    """
    if sentence_size_cap < 1 or var_limit < 1:
        raise ValueError("caps must be at least 1")
    if var_limit > len(VAR_POOL):
        raise ValueError(f"var_limit must be at most {len(VAR_POOL)}")
    targets = [serialize(s) for s in sentences_up_to(sentence_size_cap, list(VAR_POOL[:var_limit]))]
    jobs = [(str(sys), t, proof_budget, node_budget, max_given, max_weight) for t in targets]
    if workers <= 1:
        verdicts = [_hunt_text(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_hunt_text, jobs, chunksize=1))
    return [v for v in verdicts if isinstance(v.classification, IndependenceCandidate)]
