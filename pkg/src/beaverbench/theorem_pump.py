"""Theorem pump: shortest proofs under an axiom system.

Two searches run in order.

1. An exact best-first search over schematic proof trees. Partial trees are
   ordered by total symbol count, with unknown subformulas counted as one
   symbol, so the first completed tree is a shortest tree-shaped proof. Ties
   are broken by the lexicographically smallest line listing. Within its node
   budget this search either finds a certified shortest proof or proves that
   none exists up to ``max_size``.
2. If the exact search runs out of nodes, a condensed-detachment saturation
   over schematic theorems (lightest first, forward subsumption) looks for
   any proof. A proof found this way is checked but is not certified shortest.

``theorems_up_to`` enumerates every theorem over a small variable pool whose
shortest proof fits a size cap, by exact cost-ordered forward chaining.
"""

from __future__ import annotations

import heapq
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .logic import (
    SCHEMATA,
    AxiomInstance,
    AxiomSystem,
    Imp,
    Meta,
    ModusPonens,
    Neg,
    Proof,
    ProofBuilder,
    Sentence,
    Term,
    Var,
    check_proof,
    is_tautology,
    match,
    metas,
    parse,
    serialize,
    size,
    variables,
)

DEFAULT_NODE_BUDGET = 20_000
DEFAULT_MAX_GIVEN = 2_500
DEFAULT_MAX_WEIGHT = 18
VAR_POOL = "pqrstuvwxyz"


# -- unification ------------------------------------------------------------


def _walk(t: Term, s: dict) -> Term:
    while type(t) is Meta and t in s:
        t = s[t]
    return t


def _occurs(m: Meta, t: Term, s: dict) -> bool:
    stack = [t]
    while stack:
        x = _walk(stack.pop(), s)
        ty = type(x)
        if ty is Meta:
            if x == m:
                return True
        elif ty is Neg:
            stack.append(x.body)
        elif ty is Imp:
            stack.append(x.ante)
            stack.append(x.cons)
    return False


def unify(a: Term, b: Term, s: dict) -> Optional[dict]:
    """Most general unifier extending ``s`` (triangular form), or None."""
    s = dict(s)
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        x, y = _walk(x, s), _walk(y, s)
        if x == y:
            continue
        tx, ty = type(x), type(y)
        if tx is not Meta and ty is Meta:
            x, y, tx, ty = y, x, ty, tx
        if tx is Meta:
            if ty is not Meta and _occurs(x, y, s):
                return None
            s[x] = y
        elif tx is not ty or tx is Var:
            return None
        elif tx is Neg:
            stack.append((x.body, y.body))
        else:
            stack.append((x.cons, y.cons))
            stack.append((x.ante, y.ante))
    return s


def resolve(t: Term, s: dict) -> Term:
    t = _walk(t, s)
    ty = type(t)
    if ty is Neg:
        return Neg(resolve(t.body, s))
    if ty is Imp:
        return Imp(resolve(t.ante, s), resolve(t.cons, s))
    return t


def _tsize_under(t: Term, s: dict) -> int:
    t = _walk(t, s)
    ty = type(t)
    if ty is Imp:
        return _tsize_under(t.ante, s) + _tsize_under(t.cons, s) + 3
    if ty is Neg:
        return 1 + _tsize_under(t.body, s)
    return 1


def _size_under(t: Term, s: dict) -> int:
    t = _walk(t, s)
    n = _tsize_under(t, s)
    return n - 2 if type(t) is Imp else n


def _fill(t: Term, var: Var) -> Sentence:
    ty = type(t)
    if ty is Meta:
        return var
    if ty is Var:
        return t
    if ty is Neg:
        return Neg(_fill(t.body, var))
    return Imp(_fill(t.ante, var), _fill(t.cons, var))


def _shift(t: Term, offset: int) -> Term:
    ty = type(t)
    if ty is Meta:
        return Meta(t.id + offset)
    if ty is Var:
        return t
    if ty is Neg:
        return Neg(_shift(t.body, offset))
    return Imp(_shift(t.ante, offset), _shift(t.cons, offset))


def _normalize(t: Term) -> Term:
    """Rename metavariables to 0, 1, ... in order of first occurrence."""
    order: dict[Meta, Meta] = {}

    def go(x: Term) -> Term:
        ty = type(x)
        if ty is Meta:
            if x not in order:
                order[x] = Meta(len(order))
            return order[x]
        if ty is Var:
            return x
        if ty is Neg:
            return Neg(go(x.body))
        return Imp(go(x.ante), go(x.cons))

    return go(t)


def _polish(t: Term) -> int:
    ty = type(t)
    if ty is Imp:
        return 1 + _polish(t.ante) + _polish(t.cons)
    if ty is Neg:
        return 1 + _polish(t.body)
    return 1


def fill_variable(target: Sentence) -> Var:
    """Variable used for subformulas a proof leaves unconstrained."""
    return Var(min(variables(target) | {"p"}))


# -- proof trees ------------------------------------------------------------


@dataclass(frozen=True)
class Tree:
    """Ground tree proof; ``major`` proves (minor -> sentence)."""

    sentence: Sentence
    schema: Optional[str] = None
    major: Optional["Tree"] = None
    minor: Optional["Tree"] = None

    def linear(self) -> Iterator[Sentence]:
        if self.schema is None:
            yield from self.major.linear()
            yield from self.minor.linear()
        yield self.sentence

    def key(self) -> tuple[str, ...]:
        return tuple(serialize(s) for s in self.linear())

    def cost(self) -> int:
        return sum(size(s) for s in self.linear())


def tree_to_proof(tree: Tree) -> Proof:
    """Post-order listing (major, minor, conclusion) with repeated sentences merged."""
    b = ProofBuilder()

    def emit(t: Tree) -> int:
        if t.schema is not None:
            subst = match(SCHEMATA[t.schema], t.sentence)
            return b.add(t.sentence, AxiomInstance.of(t.schema, subst))
        i = emit(t.major)
        j = emit(t.minor)
        return b.add(t.sentence, ModusPonens(i, j))

    emit(tree)
    return b.build()


# -- results ----------------------------------------------------------------


@dataclass(frozen=True)
class SearchStats:
    expanded: int = 0
    frontier: int = 0
    given: int = 0
    phase: str = "exact"

    def to_dict(self) -> dict:
        return {"expanded": self.expanded, "frontier": self.frontier,
                "given": self.given, "phase": self.phase}


@dataclass(frozen=True)
class Proved:
    proof: Proof
    minimal: bool
    lower_bound: int  # no tree-shaped proof is smaller than this

    @property
    def size(self) -> int:
        return self.proof.symbol_count


@dataclass(frozen=True)
class NoneWithin:
    """Exhaustive: no tree-shaped proof of at most ``max_size`` symbols exists."""

    max_size: int


@dataclass(frozen=True)
class SearchIncomplete:
    """A resource limit was hit; proofs below ``lower_bound`` are ruled out."""

    lower_bound: int
    reason: str


PumpOutcome = Union[Proved, NoneWithin, SearchIncomplete]


@dataclass(frozen=True)
class PumpResult:
    target: Sentence
    outcome: PumpOutcome
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def proved(self) -> bool:
        return isinstance(self.outcome, Proved)

    @property
    def exhausted_below(self) -> int:
        """Every tree-shaped proof has at least this many symbols (or none exists)."""
        o = self.outcome
        if isinstance(o, NoneWithin):
            return o.max_size + 1
        return o.lower_bound

    def to_dict(self) -> dict:
        o = self.outcome
        out: dict = {"target": serialize(self.target), "stats": self.stats.to_dict()}
        if isinstance(o, Proved):
            out.update(outcome="proved", size=o.size, line_count=o.proof.line_count,
                       minimal=o.minimal, lower_bound=o.lower_bound, proof=o.proof.to_json())
        elif isinstance(o, NoneWithin):
            out.update(outcome="none-within", max_size=o.max_size)
        else:
            out.update(outcome="incomplete", lower_bound=o.lower_bound, reason=o.reason)
        return out


# -- exact search -----------------------------------------------------------

_MAJOR, _MINOR = 0, 1


def _schema_instance(name: str, base: int) -> Term:
    return _shift(SCHEMATA[name], base)


@dataclass
class _Exact:
    outcome: str  # "proved", "none", "budget"
    trees: list[Tree]
    cost: int
    expanded: int
    frontier: int


def _exact_search(sys: AxiomSystem, target: Sentence, max_size: int,
                  node_budget: int) -> _Exact:
    """Best-first over partial proof trees; nodes are (term, justification).

    A justification is None (open), a schema name, or (major index, minor index).
    The first open node is always expanded, majors before minors, so every
    tree shape is generated exactly once.
    """
    names = sys.names
    counter = itertools.count()
    start = ((target, None),)
    pq = [(size(target), next(counter), start, (0,), {}, 0)]
    expanded = 0
    found: list[tuple] = []
    best = None
    while pq:
        cost, _, nodes, open_, s, nm = pq[0]
        if best is not None and cost > best:
            break
        if cost > max_size:
            return _Exact("none", [], cost, expanded, len(pq))
        heapq.heappop(pq)
        if not open_:
            best = cost
            found.append((nodes, s))
            continue
        if expanded >= node_budget:
            return _Exact("budget", [], cost, expanded, len(pq) + 1)
        expanded += 1
        g = open_[0]
        rest = open_[1:]
        goal = nodes[g][0]
        for name in names:
            s2 = unify(goal, _schema_instance(name, nm), s)
            if s2 is None:
                continue
            nn = list(nodes)
            nn[g] = (goal, name)
            c = sum(_size_under(t, s2) for t, _ in nn)
            heapq.heappush(pq, (c, next(counter), tuple(nn), rest, s2, nm + 3))
        x = Meta(nm)
        major = len(nodes)
        nn = list(nodes) + [(Imp(x, goal), None), (x, None)]
        nn[g] = (goal, (major, major + 1))
        c = sum(_size_under(t, s) for t, _ in nn)
        heapq.heappush(pq, (c, next(counter), tuple(nn), (major, major + 1) + rest, s, nm + 1))
    if best is None:
        return _Exact("none", [], max_size + 1, expanded, 0)
    var = fill_variable(target)
    trees = [_ground_partial(nodes, s, var) for nodes, s in found]
    return _Exact("proved", trees, best, expanded, len(pq))


def _ground_partial(nodes: tuple, s: dict, var: Var) -> Tree:
    def build(i: int) -> Tree:
        term, just = nodes[i]
        sentence = _fill(resolve(term, s), var)
        if isinstance(just, str):
            return Tree(sentence, schema=just)
        return Tree(sentence, major=build(just[0]), minor=build(just[1]))

    return build(0)


# -- saturation -------------------------------------------------------------


_HIGH = 1 << 20  # metavariable offset that keeps minor premises apart from majors


def _weight_under(t: Term, s: dict, limit: int) -> int:
    """Polish length of ``t`` under ``s``, stopping early once it passes ``limit``."""
    weight = 0
    stack = [t]
    while stack:
        x = stack.pop()
        while type(x) is Meta and x in s:
            x = s[x]
        weight += 1
        if weight > limit:
            return weight
        ty = type(x)
        if ty is Imp:
            stack.append(x.cons)
            stack.append(x.ante)
        elif ty is Neg:
            stack.append(x.body)
    return weight


def _resolve_normal(t: Term, s: dict) -> Term:
    """Apply ``s`` and rename metavariables canonically in one pass."""
    order: dict[Meta, Meta] = {}

    def go(x: Term) -> Term:
        while type(x) is Meta and x in s:
            x = s[x]
        ty = type(x)
        if ty is Imp:
            return Imp(go(x.ante), go(x.cons))
        if ty is Neg:
            return Neg(go(x.body))
        if ty is Meta:
            m = order.get(x)
            if m is None:
                m = order[x] = Meta(len(order))
            return m
        return x

    return go(t)


class _Saturation:
    """Condensed detachment over schematic theorems, lightest first."""

    def __init__(self, sys: AxiomSystem, max_weight: int):
        self.max_weight = max_weight
        # (theorem, copy with shifted metavariables, weight, origin)
        self.usable: list[tuple[Term, Term, int, tuple]] = []
        self.seen: set[Term] = set()
        self.queued: set[Term] = set()
        self.queue: list = []
        self.counter = itertools.count()
        self.by_top: dict[type, list[int]] = {Imp: [], Neg: [], Meta: [], Var: []}
        for name in sys.names:
            t = _normalize(SCHEMATA[name])
            heapq.heappush(self.queue, (_polish(t), next(self.counter), t, ("ax", name)))

    def _subsumed(self, t: Term, w: int) -> bool:
        for u, _, uw, _ in self.usable:
            if uw <= w and match(u, t) is not None:
                return True
        return False

    def step(self) -> Optional[int]:
        """Select one given theorem; returns its index, or None when the queue is empty."""
        while self.queue:
            w, _, t, origin = heapq.heappop(self.queue)
            if t in self.seen:
                continue
            self.seen.add(t)
            if self._subsumed(t, w):
                continue
            idx = len(self.usable)
            self.usable.append((t, _shift(t, _HIGH), w, origin))
            self.by_top[type(t)].append(idx)
            self._detach(idx)
            return idx
        return None

    def _detach(self, idx: int) -> None:
        t = self.usable[idx][0]
        # t as major: minors whose top symbol can meet t's antecedent
        if type(t) is Imp:
            ante = t.ante
            pool = (range(len(self.usable)) if type(ante) is Meta
                    else sorted(self.by_top[type(ante)] + self.by_top[Meta]))
            for j in pool:
                self._resolve(idx, j)
        # t as minor
        for j in range(len(self.usable)):
            if j == idx:
                continue
            major = self.usable[j][0]
            if type(major) is not Imp:
                continue
            a = major.ante
            if type(a) is Meta or type(t) is Meta or type(a) is type(t):
                self._resolve(j, idx)

    def _resolve(self, i: int, j: int) -> None:
        major = self.usable[i][0]
        s = unify(major.ante, self.usable[j][1], {})
        if s is None:
            return
        w = _weight_under(major.cons, s, self.max_weight)
        if w > self.max_weight:
            return
        r = _resolve_normal(major.cons, s)
        if r not in self.queued:
            self.queued.add(r)
            heapq.heappush(self.queue, (w, next(self.counter), r, ("mp", i, j)))

    def ground(self, idx: int, instance: Sentence, var: Var) -> Tree:
        origin = self.usable[idx][3]
        if origin[0] == "ax":
            return Tree(instance, schema=origin[1])
        _, i, j = origin
        major = self.usable[i][0]
        minor = self.usable[j][1]
        s = unify(major.ante, minor, {})
        tau = match(resolve(major.cons, s), instance)
        major_inst = _fill(_subst(resolve(major, s), tau), var)
        minor_inst = _fill(_subst(resolve(minor, s), tau), var)
        return Tree(instance, major=self.ground(i, major_inst, var),
                    minor=self.ground(j, minor_inst, var))


def _subst(t: Term, tau: dict) -> Term:
    ty = type(t)
    if ty is Meta:
        return tau.get(t, t)
    if ty is Var:
        return t
    if ty is Neg:
        return Neg(_subst(t.body, tau))
    return Imp(_subst(t.ante, tau), _subst(t.cons, tau))


def _saturate(sys: AxiomSystem, target: Sentence, max_given: int,
              max_weight: int) -> tuple[Optional[Tree], int]:
    sat = _Saturation(sys, max_weight)
    var = fill_variable(target)
    for given in range(1, max_given + 1):
        idx = sat.step()
        if idx is None:
            return None, given - 1
        if match(sat.usable[idx][0], target) is not None:
            return sat.ground(idx, target, var), given
    return None, max_given


# -- public API -------------------------------------------------------------


def _pick(trees: list[Tree]) -> Tree:
    return min(trees, key=Tree.key)


def pump(sys: AxiomSystem, target: Sentence, max_size: int,
         node_budget: int = DEFAULT_NODE_BUDGET,
         max_given: int = DEFAULT_MAX_GIVEN,
         max_weight: int = DEFAULT_MAX_WEIGHT) -> PumpResult:
    """Shortest proof of ``target`` with at most ``max_size`` symbols, if one exists.

    The outcome is ``Proved`` (``minimal`` says whether shortness is certified),
    ``NoneWithin`` when the exact search covered every proof up to ``max_size``,
    or ``SearchIncomplete`` with the size below which proofs are ruled out.
    """
    if max_size < 1:
        raise ValueError("max_size must be positive")
    ex = _exact_search(sys, target, max_size, node_budget)
    if ex.outcome == "proved":
        proof = tree_to_proof(_pick(ex.trees))
        return PumpResult(target, Proved(proof, True, ex.cost),
                          SearchStats(ex.expanded, ex.frontier, 0, "exact"))
    if ex.outcome == "none":
        return PumpResult(target, NoneWithin(max_size),
                          SearchStats(ex.expanded, ex.frontier, 0, "exact"))
    tree, given = (None, 0)
    if max_given > 0 and is_tautology(target)[0]:
        # only valid sentences can be theorems, so skip saturating for the rest
        tree, given = _saturate(sys, target, max_given, max_weight)
    stats = SearchStats(ex.expanded, ex.frontier, given, "saturation")
    if tree is not None:
        proof = tree_to_proof(tree)
        if proof.symbol_count <= max_size:
            return PumpResult(target, Proved(proof, False, ex.cost), stats)
    if max_given <= 0 or not is_tautology(target)[0]:
        reason = "node budget exhausted"
    elif tree is not None:
        reason = "proof found only above the size cap"
    else:
        reason = "node and saturation budgets exhausted"
    return PumpResult(target, SearchIncomplete(ex.cost, reason), stats)


# -- census -----------------------------------------------------------------


@dataclass(frozen=True)
class CensusEntry:
    sentence: Sentence
    min_size: int
    proof: Proof

    @property
    def line_count(self) -> int:
        return self.proof.line_count

    def to_dict(self) -> dict:
        return {"sentence": serialize(self.sentence), "min_size": self.min_size,
                "line_count": self.line_count}


def sentences_by_inner_size(max_inner: int, names: list[str]) -> list[list[Sentence]]:
    """``out[t]`` lists every sentence over ``names`` whose parenthesized size is ``t``."""
    out: list[list[Sentence]] = [[] for _ in range(max_inner + 1)]
    if max_inner >= 1:
        out[1] = [Var(n) for n in names]
    for t in range(2, max_inner + 1):
        bucket = [Neg(x) for x in out[t - 1]]
        for a in range(1, t - 3):
            b = t - 3 - a
            if b < 1:
                continue
            bucket.extend(Imp(x, y) for x in out[a] for y in out[b])
        out[t] = bucket
    return out


def sentences_up_to(max_size: int, names: list[str]) -> Iterator[Sentence]:
    """Every sentence over ``names`` with at most ``max_size`` symbols, smallest first."""
    by = sentences_by_inner_size(max_size + 2, names)
    for n in range(1, max_size + 1):
        for t in (n, n + 2):
            for s in by[t]:
                if size(s) == n:
                    yield s


def axiom_instances(sys: AxiomSystem, max_size: int,
                    names: list[str]) -> Iterator[tuple[str, Sentence]]:
    by = sentences_by_inner_size(max_size, names)
    for name in sys.names:
        schema = SCHEMATA[name]
        ms = sorted(metas(schema))
        counts = [_count(schema, m) for m in ms]
        base = size(schema)

        def rec(k: int, room: int, chosen: dict) -> Iterator[Sentence]:
            if k == len(ms):
                yield _subst(schema, chosen)
                return
            for t in range(1, len(by)):
                extra = counts[k] * (t - 1)
                if extra > room:
                    break
                for x in by[t]:
                    chosen[ms[k]] = x
                    yield from rec(k + 1, room - extra, chosen)
            chosen.pop(ms[k], None)

        for inst in rec(0, max_size - base, {}):
            yield name, inst


def _count(t: Term, m: Meta) -> int:
    ty = type(t)
    if ty is Meta:
        return int(t == m)
    if ty is Var:
        return 0
    if ty is Neg:
        return _count(t.body, m)
    return _count(t.ante, m) + _count(t.cons, m)


class ResourceExceeded(RuntimeError):
    """A census could not be completed within its search budget."""


def theorems_up_to(sys: AxiomSystem, max_size: int, var_limit: int,
                   sentence_cap: Optional[int] = None,
                   node_budget: int = DEFAULT_NODE_BUDGET,
                   workers: int = 1) -> list[CensusEntry]:
    """Every theorem over the first ``var_limit`` pool variables with a proof of at
    most ``max_size`` symbols, each with its shortest tree proof.

    Without ``sentence_cap`` this is ground forward chaining in order of
    (proof size, line listing): axiom instances up to ``max_size`` feed modus
    ponens, so each sentence is settled with its cheapest and then
    lexicographically first proof. That is only feasible for small caps.

    With ``sentence_cap`` only theorems of at most that many symbols are
    reported, and each candidate gets its own exact search, which reaches much
    larger proof sizes. A search that runs out of nodes raises
    ``ResourceExceeded`` instead of silently dropping the sentence.

    Entries are ordered by (shortest proof size, sentence text).
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    if not 1 <= var_limit <= len(VAR_POOL):
        raise ValueError(f"var_limit must be in 1..{len(VAR_POOL)}")
    names = list(VAR_POOL[:var_limit])
    if sentence_cap is None:
        entries = _ground_census(sys, max_size, names)
    else:
        entries = _targeted_census(sys, max_size, names, sentence_cap, node_budget, workers)
    return sorted(entries, key=lambda e: (e.min_size, serialize(e.sentence)))


def _ground_census(sys: AxiomSystem, max_size: int, names: list[str]) -> list[CensusEntry]:
    counter = itertools.count()
    pq: list = []
    for name, inst in axiom_instances(sys, max_size, names):
        tree = Tree(inst, schema=name)
        heapq.heappush(pq, (size(inst), tree.key(), next(counter), tree))
    done: dict[Sentence, tuple[int, Tree]] = {}
    by_ante: dict[Sentence, list[Sentence]] = {}
    while pq:
        cost, _, _, tree = heapq.heappop(pq)
        x = tree.sentence
        if x in done:
            continue
        done[x] = (cost, tree)
        # x as minor premise
        for y_imp in by_ante.get(x, ()):
            c2, t2 = done[y_imp]
            y = y_imp.cons
            c = cost + c2 + size(y)
            if c <= max_size and y not in done:
                nt = Tree(y, major=t2, minor=tree)
                heapq.heappush(pq, (c, nt.key(), next(counter), nt))
        # x as major premise
        if type(x) is Imp:
            by_ante.setdefault(x.ante, []).append(x)
            if x.ante in done:
                c1, t1 = done[x.ante]
                y = x.cons
                c = cost + c1 + size(y)
                if c <= max_size and y not in done:
                    nt = Tree(y, major=tree, minor=t1)
                    heapq.heappush(pq, (c, nt.key(), next(counter), nt))
    return [CensusEntry(x, c, tree_to_proof(t)) for x, (c, t) in done.items()]


def _census_one(args: tuple) -> Optional[tuple[int, list]]:
    axioms, text, max_size, node_budget = args
    sys = AxiomSystem.of(axioms)
    target = parse(text)
    if not is_tautology(target)[0]:
        return None  # every schema is valid, so a falsifiable sentence has no proof
    r = pump(sys, target, max_size, node_budget, max_given=0)
    o = r.outcome
    if isinstance(o, Proved):
        return o.lower_bound, o.proof.to_json()
    if isinstance(o, NoneWithin):
        return None
    raise ResourceExceeded(f"exact search for {text} stopped below size {o.lower_bound}: {o.reason}")


def _targeted_census(sys: AxiomSystem, max_size: int, names: list[str], sentence_cap: int,
                     node_budget: int, workers: int) -> list[CensusEntry]:
    if sentence_cap < 1:
        raise ValueError("sentence_cap must be at least 1")
    texts = [serialize(t) for t in sentences_up_to(min(sentence_cap, max_size), names)]
    jobs = [(str(sys), t, max_size, node_budget) for t in texts]
    if workers <= 1:
        results = [_census_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_census_one, jobs, chunksize=4))
    return [CensusEntry(parse(t), r[0], Proof.from_json(r[1]))
            for t, r in zip(texts, results) if r is not None]


def verify(sys: AxiomSystem, result: PumpResult) -> bool:
    """check_proof on a Proved result; vacuously True otherwise."""
    if not isinstance(result.outcome, Proved):
        return True
    return bool(check_proof(sys, result.target, result.outcome.proof))


__all__ = [
    "CensusEntry", "NoneWithin", "ResourceExceeded", "Proved", "PumpResult", "SearchIncomplete",
    "SearchStats", "Tree", "axiom_instances", "fill_variable", "pump",
    "sentences_up_to", "theorems_up_to", "tree_to_proof", "unify", "verify",
]
