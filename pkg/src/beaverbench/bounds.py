"""Busy Beaver bounds on counterexamples and proof sizes, and the bounded decision
procedure for "this machine never halts"."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .busy_beaver import BBRecord, BoundStatus, Known, Unknown, bb_lookup, status_to_dict
from .machine import Halted, Machine, run, serialize

CHECKER_PLUS_SEARCHER = "CheckerPlusSearcher"
THEOREM_PUMP = "TheoremPump"
ROLES = (CHECKER_PLUS_SEARCHER, THEOREM_PUMP)
INTERPRETATION = {CHECKER_PLUS_SEARCHER: "CounterexampleBound", THEOREM_PUMP: "ProofLengthBound"}
CLI_ROLES = {"counterexample": CHECKER_PLUS_SEARCHER, "proof": THEOREM_PUMP}

STATES = "states"
BITS = "bits"


def encoding_bits(n: int) -> int:
    """Bits in a plain binary transition table: 2n entries of write, move, next-state."""
    return 2 * n * (2 + (n).bit_length())


def states_for_bits(bits: int) -> int:
    """Largest state count whose table encoding fits in ``bits`` (0 if none does)."""
    n = 0
    while encoding_bits(n + 1) <= bits:
        n += 1
    return n


@dataclass(frozen=True)
class SizedProgram:
    role: str
    size: int
    realization: Optional[Machine] = None

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}")
        if self.size < 0:
            raise ValueError("size must be non-negative")
        if self.realization is not None and self.realization.n_states != self.size:
            raise ValueError("size must equal the realizing machine's state count")


@dataclass(frozen=True)
class BoundReport:
    component_sizes: tuple[int, ...]
    composed_size: int
    bb_status: BoundStatus
    interpretation: str
    measure: str = STATES
    lookup_size: int = 0  # state count the table was consulted at

    def to_dict(self) -> dict:
        out = {"component_sizes": list(self.component_sizes),
               "composed_size": self.composed_size,
               "measure": self.measure,
               "lookup_size": self.lookup_size,
               "interpretation": self.interpretation,
               "bb_status": status_to_dict(self.bb_status)}
        if self.interpretation == "ProofLengthBound" and isinstance(self.bb_status, Known):
            out["recommended_max_size"] = self.bb_status.bound
        return out


def compose_bound(components: Sequence[SizedProgram], table: Sequence[BBRecord],
                  measure: str = STATES) -> BoundReport:
    """Sum the component sizes and look the total up in the Busy Beaver table.

    The first component's role picks the interpretation. With ``measure="bits"``
    sizes are encoding lengths and the lookup uses the largest state count whose
    encoding fits, which is still an upper bound because S is non-decreasing.
    """
    if not components:
        raise ValueError("at least one component is required")
    if measure not in (STATES, BITS):
        raise ValueError("measure must be 'states' or 'bits'")
    sizes = tuple(c.size for c in components)
    total = sum(sizes)
    n = total if measure == STATES else states_for_bits(total)
    table = sorted(table, key=lambda r: r.n)
    status = bb_lookup(table, n) if n >= 1 else Known(0)
    return BoundReport(sizes, total, status, INTERPRETATION[components[0].role], measure, n)


@dataclass(frozen=True)
class CounterexampleExists:
    steps: int


@dataclass(frozen=True)
class HypothesisTrue:
    steps_run: int


@dataclass(frozen=True)
class Undecidable:
    reason: str


Verdict = Union[CounterexampleExists, HypothesisTrue, Undecidable]


def decide_pi1_machine(m: Machine, table: Sequence[BBRecord]) -> Verdict:
    """Decide "m never halts" by running it for S(n) steps, when S(n) is certified."""
    status = bb_lookup(sorted(table, key=lambda r: r.n), m.n_states)
    if isinstance(status, Unknown):
        return Undecidable(status.reason)
    outcome = run(m, status.bound)
    if isinstance(outcome, Halted):
        return CounterexampleExists(outcome.steps)
    return HypothesisTrue(status.bound)


def verdict_to_dict(m: Machine, v: Verdict) -> dict:
    out: dict = {"machine": serialize(m)}
    if isinstance(v, CounterexampleExists):
        out.update(verdict="CounterexampleExists", steps=v.steps)
    elif isinstance(v, HypothesisTrue):
        out.update(verdict="HypothesisTrue", steps_run=v.steps_run)
    else:
        out.update(verdict="Undecidable", reason=v.reason)
    return out
