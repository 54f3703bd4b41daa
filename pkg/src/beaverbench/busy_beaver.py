"""Tree-normal-form enumeration of n-state machines and Busy Beaver certification.

Machines are generated by running a partial table from a blank tape and
branching only when an undefined transition is actually read. New states are
introduced in order of first use and the very first move is fixed to the
right, so state relabelings and left/right mirror images never appear twice.
Transitions that are never read get the filler rule ``1RH``; they cannot
affect the run they were pruned from.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

from .machine import (
    DETECTORS,
    HALT,
    BudgetExhausted,
    CertifiedNonHalting,
    Halted,
    Machine,
    Move,
    RunOutcome,
    TransitionRule,
    classify,
    outcome_from_dict,
    outcome_to_dict,
    run,
)

log = logging.getLogger(__name__)

FILLER = TransitionRule(1, Move.R, HALT)
DEFAULT_ENUM_BUDGET = 1000

CERTIFIED = "Certified"
LOWER_BOUND = "LowerBound"


def _choices(n: int, used: int, first: bool) -> list[TransitionRule]:
    targets = list(range(1, used + 1))
    if used < n:
        targets.append(used + 1)
    targets.append(HALT)
    moves = (Move.R,) if first else (Move.L, Move.R)
    return [TransitionRule(w, mv, nxt) for w in (0, 1) for mv in moves for nxt in targets]


def _leaf(n: int, table: list) -> Machine:
    return Machine(n, tuple(FILLER if r is None else r for r in table))


def table_key(m: Machine) -> tuple:
    return tuple((r.write, int(r.move), r.next) for r in m.table)


def enumerate_machines(n: int, budget: int = DEFAULT_ENUM_BUDGET) -> Iterator[Machine]:
    """Yield every tree-normal-form n-state machine once, in table-lexicographic order.

    ``budget`` bounds how long a partial machine is simulated while looking for
    its next undefined transition; runs that outlast it become leaves as-is.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    leaves: list[Machine] = []
    # explicit stack of (table, tape, head, state, steps, used_states)
    stack = [([None] * (2 * n), frozenset(), 0, 1, 0, 1)]
    while stack:
        table, tape, head, state, steps, used = stack.pop()
        ones = set(tape)
        while True:
            if steps >= budget:
                leaves.append(_leaf(n, table))
                break
            read = 1 if head in ones else 0
            idx = (state - 1) * 2 + read
            rule = table[idx]
            if rule is None:
                first = steps == 0
                for choice in reversed(_choices(n, used, first)):
                    branch = list(table)
                    branch[idx] = choice
                    nused = max(used, choice.next)
                    stack.append((branch, frozenset(ones), head, state, steps, nused))
                break
            if rule.write:
                ones.add(head)
            else:
                ones.discard(head)
            head += rule.move
            steps += 1
            if rule.next == HALT:
                leaves.append(_leaf(n, table))
                break
            state = rule.next
    leaves.sort(key=table_key)
    yield from leaves


# -- records ----------------------------------------------------------------


@dataclass(frozen=True)
class BBRecord:
    n: int
    s_value: int
    sigma_value: int
    status: str
    champions: tuple[Machine, ...] = ()
    holdouts: int = 0
    machines: int = 0
    step_budget: int = 0

    def __post_init__(self) -> None:
        if self.status not in (CERTIFIED, LOWER_BOUND):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == CERTIFIED and self.holdouts:
            raise ValueError("a certified record cannot have holdouts")

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s_value": self.s_value,
            "sigma_value": self.sigma_value,
            "status": self.status,
            "holdouts": self.holdouts,
            "machines": self.machines,
            "step_budget": self.step_budget,
            "champions": [str(m) for m in self.champions],
        }

    @classmethod
    def from_dict(cls, d: dict) -> BBRecord:
        return cls(
            n=d["n"],
            s_value=d["s_value"],
            sigma_value=d["sigma_value"],
            status=d["status"],
            champions=tuple(Machine.parse(s) for s in d.get("champions", ())),
            holdouts=d.get("holdouts", 0),
            machines=d.get("machines", 0),
            step_budget=d.get("step_budget", 0),
        )


def validate_record(rec: BBRecord) -> None:
    """Re-run every champion and check the record's own invariants."""
    if rec.n >= 1 and rec.machines and not rec.s_value >= rec.sigma_value >= 1:
        raise ValueError(f"n={rec.n}: expected s_value >= sigma_value >= 1")
    for m in rec.champions:
        out = run(m, rec.s_value)
        if not isinstance(out, Halted):
            raise ValueError(f"champion {m} does not halt within {rec.s_value} steps")
        if out.steps != rec.s_value and out.ones != rec.sigma_value:
            raise ValueError(f"champion {m} reproduces neither S nor Sigma")


def _classify_chunk(args: tuple[list[str], int, tuple[str, ...]]) -> list[dict]:
    texts, budget, detectors = args
    return [outcome_to_dict(classify(Machine.parse(t), budget, detectors)) for t in texts]


def _load_checkpoint(path: Path) -> dict[str, RunOutcome]:
    done: dict[str, RunOutcome] = {}
    if not path.exists():
        return done
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                d = json.loads(line)
            except json.JSONDecodeError:
                break  # torn final line from an interrupted run
            done[d["machine"]] = outcome_from_dict(d)
    return done


def result_line(m: Machine, outcome: RunOutcome) -> str:
    return json.dumps({"machine": str(m), **outcome_to_dict(outcome)}, sort_keys=True)


def classify_all(machines: Sequence[Machine], step_budget: int,
                 detectors: Iterable[str] = DETECTORS, workers: int = 1,
                 checkpoint: Union[str, os.PathLike, None] = None,
                 chunk_size: int = 2000) -> list[RunOutcome]:
    """Classify ``machines`` in order; optionally resume from / append to a JSON-lines checkpoint."""
    detectors = tuple(detectors)
    done: dict[str, RunOutcome] = {}
    if checkpoint is not None:
        done = _load_checkpoint(Path(checkpoint))
    todo = [str(m) for m in machines if str(m) not in done]
    chunks = [todo[i:i + chunk_size] for i in range(0, len(todo), chunk_size)]
    jobs = [(c, step_budget, detectors) for c in chunks]

    sink = open(checkpoint, "a") if checkpoint is not None else None
    try:
        if workers > 1 and len(chunks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = pool.map(_classify_chunk, jobs)
                for chunk, outs in zip(chunks, results):
                    _absorb(done, chunk, outs, sink)
        else:
            for chunk, job in zip(chunks, jobs):
                _absorb(done, chunk, _classify_chunk(job), sink)
    finally:
        if sink is not None:
            sink.close()
    return [done[str(m)] for m in machines]


def _absorb(done: dict, chunk: list[str], outs: list[dict], sink) -> None:
    for text, d in zip(chunk, outs):
        outcome = outcome_from_dict(d)
        done[text] = outcome
        if sink is not None:
            sink.write(json.dumps({"machine": text, **d}, sort_keys=True) + "\n")
    if sink is not None:
        sink.flush()


def summarize(n: int, machines: Sequence[Machine], outcomes: Sequence[RunOutcome],
              step_budget: int) -> BBRecord:
    s_value = sigma_value = 0
    holdouts = 0
    for out in outcomes:
        if isinstance(out, Halted):
            s_value = max(s_value, out.steps)
            sigma_value = max(sigma_value, out.ones)
        elif isinstance(out, BudgetExhausted):
            holdouts += 1
    champions = tuple(
        m for m, out in zip(machines, outcomes)
        if isinstance(out, Halted) and (out.steps == s_value or out.ones == sigma_value)
    )
    return BBRecord(
        n=n,
        s_value=s_value,
        sigma_value=sigma_value,
        status=CERTIFIED if holdouts == 0 else LOWER_BOUND,
        champions=champions,
        holdouts=holdouts,
        machines=len(machines),
        step_budget=step_budget,
    )


def certify(n: int, step_budget: int, detectors: Iterable[str] = DETECTORS,
            workers: int = 1, checkpoint: Union[str, os.PathLike, None] = None) -> BBRecord:
    """Classify every canonical n-state machine; Certified iff nothing is left undecided."""
    if n < 1 or step_budget < 1:
        raise ValueError("n and step_budget must be >= 1")
    machines = list(enumerate_machines(n, step_budget))
    log.info("n=%d: %d canonical machines", n, len(machines))
    outcomes = classify_all(machines, step_budget, detectors, workers, checkpoint)
    return summarize(n, machines, outcomes, step_budget)


# -- lookups ----------------------------------------------------------------


@dataclass(frozen=True)
class Known:
    bound: int


@dataclass(frozen=True)
class Unknown:
    lower_bound: int
    reason: str = "BB unknown at this size"


BoundStatus = Union[Known, Unknown]


def bb_lookup(table: Sequence[BBRecord], size: int, function: str = "S") -> BoundStatus:
    """Known only for a Certified record at exactly ``size``; otherwise the best lower bound.

    ``function`` selects the step function ``S`` or the ones function ``sigma``.
    """
    if function not in ("S", "sigma"):
        raise ValueError("function must be 'S' or 'sigma'")
    pick = (lambda r: r.s_value) if function == "S" else (lambda r: r.sigma_value)
    for rec in table:
        if rec.n == size and rec.certified:
            return Known(pick(rec))
    # S and Sigma are non-decreasing in n, so any record at or below size bounds from below.
    lower = max((pick(r) for r in table if r.n <= size), default=0)
    return Unknown(lower)


def status_to_dict(status: BoundStatus) -> dict:
    if isinstance(status, Known):
        return {"status": "Known", "bound": status.bound}
    return {"status": "Unknown", "lower_bound": status.lower_bound, "reason": status.reason}


def load_table(path: Union[str, os.PathLike]) -> list[BBRecord]:
    """Read a table file: one BBRecord document, a JSON list of them, or JSON lines."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [json.loads(line) for line in text.splitlines() if line.strip()]
    if isinstance(data, dict):
        data = data["records"] if "records" in data else [data]
    table = sorted((BBRecord.from_dict(d) for d in data), key=lambda r: r.n)
    return table


def table_to_dict(table: Sequence[BBRecord]) -> dict:
    return {"records": [r.to_dict() for r in sorted(table, key=lambda r: r.n)]}


@dataclass
class CertifyRun:
    """Everything ``bb certify`` persists: the record plus the per-machine stream."""

    record: BBRecord
    machines: list[Machine] = field(default_factory=list)
    outcomes: list[RunOutcome] = field(default_factory=list)

    def lines(self) -> Iterator[str]:
        for m, out in zip(self.machines, self.outcomes):
            yield result_line(m, out)


def certify_run(n: int, step_budget: int, detectors: Iterable[str] = DETECTORS,
                workers: int = 1, checkpoint=None) -> CertifyRun:
    machines = list(enumerate_machines(n, step_budget))
    outcomes = classify_all(machines, step_budget, detectors, workers, checkpoint)
    return CertifyRun(summarize(n, machines, outcomes, step_budget), machines, outcomes)


def nonhalting_certificates(outcomes: Iterable[RunOutcome]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for out in outcomes:
        if isinstance(out, CertifiedNonHalting):
            counts[out.certificate] = counts.get(out.certificate, 0) + 1
    return dict(sorted(counts.items()))
