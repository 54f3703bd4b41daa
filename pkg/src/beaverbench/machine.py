"""Two-symbol Turing machines: representation, simulation, halting classification.

Machines use the usual Busy Beaver conventions: one bi-infinite tape of 0/1
cells, blank = 0, start in state A on a blank tape, and an explicit HALT
pseudo-state. The halting transition counts as a step.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, Iterable, NamedTuple, Union

HALT = 0


class Move(IntEnum):
    L = -1
    R = 1


class TransitionRule(NamedTuple):
    write: int
    move: Move
    next: int  # 1..n_states, or HALT

    def __str__(self) -> str:
        return f"{self.write}{self.move.name}{state_letter(self.next)}"


def state_letter(state: int) -> str:
    return "H" if state == HALT else chr(ord("A") + state - 1)


def letter_state(letter: str) -> int:
    if letter in ("H", "Z"):
        return HALT
    if not ("A" <= letter <= "Y"):
        raise ValueError(f"bad state letter {letter!r}")
    return ord(letter) - ord("A") + 1


_RULE_RE = re.compile(r"([01])([LR])([A-Z])")


@dataclass(frozen=True)
class Machine:
    """A total transition table, indexed ``(state - 1) * 2 + read``."""

    n_states: int
    table: tuple[TransitionRule, ...]

    def __post_init__(self) -> None:
        if self.n_states < 1:
            raise ValueError("a machine needs at least one state")
        if len(self.table) != 2 * self.n_states:
            raise ValueError(
                f"table has {len(self.table)} entries, expected {2 * self.n_states}"
            )
        for rule in self.table:
            if rule.write not in (0, 1):
                raise ValueError(f"bad write symbol in {rule}")
            if not (rule.next == HALT or 1 <= rule.next <= self.n_states):
                raise ValueError(f"rule {rule} references a state outside 1..{self.n_states}")

    def rule(self, state: int, read: int) -> TransitionRule:
        return self.table[(state - 1) * 2 + read]

    def __str__(self) -> str:
        return serialize(self)

    @classmethod
    def parse(cls, text: str) -> Machine:
        return parse(text)


def serialize(m: Machine) -> str:
    rows = []
    for s in range(1, m.n_states + 1):
        rows.append(f"{m.rule(s, 0)} {m.rule(s, 1)}")
    return " ; ".join(rows)


def parse(text: str) -> Machine:
    """Parse ``1RB 1LB ; 1LA 1RH`` (also accepts the compact ``1RB1LB_1LA1RH``)."""
    rows = [r for r in re.split(r"[;_]", text.strip())]
    table: list[TransitionRule] = []
    for row in rows:
        compact = row.replace(" ", "")
        rules = _RULE_RE.findall(compact)
        if len(rules) != 2 or "".join("".join(r) for r in rules) != compact:
            raise ValueError(f"cannot parse machine row {row!r}")
        for write, move, nxt in rules:
            table.append(TransitionRule(int(write), Move[move], letter_state(nxt)))
    return Machine(len(rows), tuple(table))


class Configuration(NamedTuple):
    tape: frozenset[int]  # positions holding 1
    head: int
    state: int
    steps: int


class HaltSignal(NamedTuple):
    """The machine executed a HALT transition; ``config`` is the final tape."""

    config: Configuration

    @property
    def steps(self) -> int:
        return self.config.steps

    @property
    def ones(self) -> int:
        return len(self.config.tape)


def blank(m: Machine | None = None) -> Configuration:
    return Configuration(frozenset(), 0, 1, 0)


def step(m: Machine, c: Configuration) -> Union[Configuration, HaltSignal]:
    read = 1 if c.head in c.tape else 0
    rule = m.rule(c.state, read)
    if rule.write:
        tape = c.tape | {c.head} if not read else c.tape
    else:
        tape = c.tape - {c.head} if read else c.tape
    moved = Configuration(tape, c.head + rule.move, rule.next, c.steps + 1)
    if rule.next == HALT:
        return HaltSignal(moved)
    return moved


# -- outcomes ---------------------------------------------------------------


@dataclass(frozen=True)
class Halted:
    steps: int
    ones: int


@dataclass(frozen=True)
class BudgetExhausted:
    budget: int


@dataclass(frozen=True)
class CertifiedNonHalting:
    certificate: str


RunOutcome = Union[Halted, BudgetExhausted, CertifiedNonHalting]


def run(m: Machine, budget: int) -> RunOutcome:
    """Simulate from a blank tape for at most ``budget`` steps."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    table = m.table
    tape: set[int] = set()
    head, state = 0, 1
    for t in range(1, budget + 1):
        read = 1 if head in tape else 0
        write, move, nxt = table[(state - 1) * 2 + read]
        if write:
            tape.add(head)
        elif read:
            tape.discard(head)
        head += move
        if nxt == HALT:
            return Halted(t, len(tape))
        state = nxt
    return BudgetExhausted(budget)


# -- classification ---------------------------------------------------------

UNREACHABLE_HALT = "unreachable-halt"
CYCLE = "cycle"
ESCAPE = "escape"
TRANSLATED_CYCLE = "translated-cycle"
BACKWARD = "backward-reasoning"
CLOSED_TAPE = "closed-tape-language"

DETECTORS = (UNREACHABLE_HALT, CYCLE, ESCAPE, TRANSLATED_CYCLE, BACKWARD, CLOSED_TAPE)
BACKWARD_MAX_NODES = 50_000
CTL_MAX_DFA_STATES = 4


def halt_unreachable(m: Machine) -> bool:
    """True if no HALT transition belongs to a state reachable from A in the state graph."""
    seen = {1}
    todo = [1]
    while todo:
        s = todo.pop()
        for read in (0, 1):
            nxt = m.rule(s, read).next
            if nxt == HALT:
                return False
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return True


def _escapes(m: Machine, state: int, direction: int) -> bool:
    """From a cell with only blanks ahead in ``direction``, does the machine run off forever?"""
    seen = set()
    while state not in seen:
        seen.add(state)
        rule = m.rule(state, 0)
        if rule.next == HALT or rule.move != direction:
            return False
        state = rule.next
    return True


class _Trace:
    """Simulation state plus the bookkeeping the history-based detectors need."""

    def __init__(self) -> None:
        self.tape: set[int] = set()
        self.head = 0
        self.state = 1
        self.lo = 0
        self.hi = 0
        self.positions: list[int] = [0]
        # record-breaking visits: (step, state, head, tape snapshot)
        self.right: dict[int, list[tuple[int, int, frozenset[int]]]] = {}
        self.left: dict[int, list[tuple[int, int, frozenset[int]]]] = {}


def _window(tape: frozenset[int], lo: int, hi: int, shift: int) -> frozenset[int]:
    return frozenset(x - shift for x in tape if lo <= x <= hi)


def _translated(trace: _Trace, records: list[tuple[int, int, frozenset[int]]],
                t2: int, p2: int, snap2: frozenset[int], side: int) -> bool:
    positions = trace.positions
    for t1, p1, snap1 in records:
        seg = positions[t1:t2 + 1]
        if side > 0:
            k = min(seg)
            lo1, hi1 = k, p1
            lo2, hi2 = k + (p2 - p1), p2
        else:
            k = max(seg)
            lo1, hi1 = p1, k
            lo2, hi2 = p2, k + (p2 - p1)
        if _window(snap1, lo1, hi1, p1) == _window(snap2, lo2, hi2, p2):
            return True
    return False


def classify(m: Machine, budget: int,
             detectors: Iterable[str] = DETECTORS) -> RunOutcome:
    """Halted, CertifiedNonHalting (with the detector's name), or BudgetExhausted.

    Detectors run cheapest-first. Every certificate is a proof of non-halting:

    * ``unreachable-halt``: no HALT rule in the part of the state graph reachable from A.
    * ``cycle``: an exact configuration repeats.
    * ``escape``: head is past every 1 and the blank-reading rules keep it moving outward.
    * ``translated-cycle``: two record-breaking visits in the same state see the same
      tape segment (as far back as the head wandered in between), so the run repeats
      shifted forever.
    * ``backward-reasoning``: every backward chain from a HALT rule dies out at a depth
      the forward run has already survived.
    * ``closed-tape-language``: HALT is unreachable even after quotienting the left
      half-tape by a small DFA.

    The last two only run once the simulation budget is spent.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    active = set(detectors)
    unknown = active - set(DETECTORS)
    if unknown:
        raise ValueError(f"unknown detectors: {sorted(unknown)}")
    if UNREACHABLE_HALT in active and halt_unreachable(m):
        return CertifiedNonHalting(UNREACHABLE_HALT)

    use_cycle = CYCLE in active
    use_escape = ESCAPE in active
    use_translated = TRANSLATED_CYCLE in active

    table = m.table
    tr = _Trace()
    seen: set[tuple[int, int, frozenset[int]]] = set()
    if use_cycle:
        seen.add((1, 0, frozenset()))
    for t in range(1, budget + 1):
        head, state, tape = tr.head, tr.state, tr.tape
        read = 1 if head in tape else 0
        write, move, nxt = table[(state - 1) * 2 + read]
        if write:
            tape.add(head)
        elif read:
            tape.discard(head)
        head += move
        if nxt == HALT:
            return Halted(t, len(tape))
        tr.head, tr.state = head, nxt
        tr.positions.append(head)

        snap = None
        if use_cycle:
            snap = frozenset(tape)
            key = (nxt, head, snap)
            if key in seen:
                return CertifiedNonHalting(CYCLE)
            seen.add(key)

        if head > tr.hi or head < tr.lo:
            side = 1 if head > tr.hi else -1
            if side > 0:
                tr.hi = head
            else:
                tr.lo = head
            if use_escape:
                beyond = all(x < head for x in tape) if side > 0 else all(x > head for x in tape)
                if beyond and _escapes(m, nxt, side):
                    return CertifiedNonHalting(ESCAPE)
            if use_translated:
                if snap is None:
                    snap = frozenset(tape)
                book = tr.right if side > 0 else tr.left
                records = book.setdefault(nxt, [])
                if _translated(tr, records, t, head, snap, side):
                    return CertifiedNonHalting(TRANSLATED_CYCLE)
                records.append((t, head, snap))

    from .deciders import backward_dead_depth, closed_tape_language

    if BACKWARD in active and budget > 0:
        depth = backward_dead_depth(m, budget, BACKWARD_MAX_NODES)
        if depth is not None and depth <= budget:
            return CertifiedNonHalting(BACKWARD)
    if CLOSED_TAPE in active and closed_tape_language(m, CTL_MAX_DFA_STATES) is not None:
        return CertifiedNonHalting(CLOSED_TAPE)
    return BudgetExhausted(budget)


def outcome_to_dict(outcome: RunOutcome) -> dict:
    if isinstance(outcome, Halted):
        return {"outcome": "halted", "steps": outcome.steps, "ones": outcome.ones}
    if isinstance(outcome, CertifiedNonHalting):
        return {"outcome": "nonhalting", "certificate": outcome.certificate}
    return {"outcome": "exhausted", "budget": outcome.budget}


def outcome_from_dict(d: dict) -> RunOutcome:
    kind = d["outcome"]
    if kind == "halted":
        return Halted(d["steps"], d["ones"])
    if kind == "nonhalting":
        return CertifiedNonHalting(d["certificate"])
    if kind == "exhausted":
        return BudgetExhausted(d["budget"])
    raise ValueError(f"unknown outcome kind {kind!r}")


Classifier = Callable[[Machine, int], RunOutcome]
