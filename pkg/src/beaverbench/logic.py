"""Propositional sentences over ``~`` and ``->``, Hilbert-style proofs, and the proof checker.

Grammar (outermost parentheses optional)::

    S ::= var | '~' S | '(' S '->' S ')'

Sizes are counted in symbols of the canonical serialization: each variable,
``~``, ``->``, ``(`` and ``)`` is one symbol.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional, Union


class Var(NamedTuple):
    name: str


class Neg(NamedTuple):
    body: "Sentence"


class Imp(NamedTuple):
    ante: "Sentence"
    cons: "Sentence"


class Meta(NamedTuple):
    """A schema metavariable. Never produced by the parser."""

    id: int


Sentence = Union[Var, Neg, Imp]
Term = Union[Var, Neg, Imp, Meta]


def neg(s: Term) -> Neg:
    return Neg(s)


def imp(a: Term, b: Term) -> Imp:
    return Imp(a, b)


# -- serialization ----------------------------------------------------------


def _inner(s: Term) -> str:
    t = type(s)
    if t is Var:
        return s.name
    if t is Neg:
        return "~" + _inner(s.body)
    if t is Imp:
        return "(" + _inner(s.ante) + "->" + _inner(s.cons) + ")"
    if t is Meta:
        return f"?{s.id}"
    raise TypeError(f"not a sentence: {s!r}")


def serialize(s: Term) -> str:
    """Canonical form: fully parenthesized except the outermost implication."""
    if type(s) is Imp:
        return _inner(s.ante) + "->" + _inner(s.cons)
    return _inner(s)


def _tsize(s: Term) -> int:
    t = type(s)
    if t is Imp:
        return _tsize(s.ante) + _tsize(s.cons) + 3
    if t is Neg:
        return 1 + _tsize(s.body)
    return 1


def size(s: Term) -> int:
    """Symbol count of the canonical serialization (metavariables count as one)."""
    n = _tsize(s)
    return n - 2 if type(s) is Imp else n


def inner_size(s: Term) -> int:
    """Symbol count when the sentence appears parenthesized inside a larger one."""
    return _tsize(s)


def variables(s: Term) -> set[str]:
    out: set[str] = set()
    stack = [s]
    while stack:
        x = stack.pop()
        t = type(x)
        if t is Var:
            out.add(x.name)
        elif t is Neg:
            stack.append(x.body)
        elif t is Imp:
            stack.append(x.ante)
            stack.append(x.cons)
    return out


# -- parsing ----------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


_TOKEN = re.compile(r"\s*(?:(->)|([~()])|([A-Za-z][A-Za-z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            found = self.peek()
            raise ParseError(f"expected {tok!r}, found {found!r}" if found else f"expected {tok!r}",
                             self.pos(), self.text)
        self.i += 1

    def sentence(self) -> Sentence:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.pos(), self.text)
        if tok == "~":
            self.i += 1
            return Neg(self.sentence())
        if tok == "(":
            self.i += 1
            left = self.sentence()
            self.expect("->")
            right = self.sentence()
            self.expect(")")
            return Imp(left, right)
        if tok in ("->", ")"):
            raise ParseError(f"unexpected {tok!r}", self.pos(), self.text)
        self.i += 1
        return Var(tok)


def parse(text: str) -> Sentence:
    """Parse a sentence; the top-level implication may omit its parentheses."""
    p = _Parser(text)
    s = p.sentence()
    if p.peek() == "->":
        p.i += 1
        s = Imp(s, p.sentence())
    if p.peek() is not None:
        raise ParseError(f"unexpected {p.peek()!r}", p.pos(), text)
    return s


# -- semantics --------------------------------------------------------------

Valuation = dict[str, bool]


def evaluate(s: Sentence, v: Valuation) -> bool:
    t = type(s)
    if t is Var:
        return v[s.name]
    if t is Neg:
        return not evaluate(s.body, v)
    return (not evaluate(s.ante, v)) or evaluate(s.cons, v)


def valuations(names: Iterable[str]) -> Iterator[Valuation]:
    names = sorted(names)
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def is_tautology(s: Sentence) -> tuple[bool, Optional[Valuation]]:
    """Exhaustive truth table; on failure also returns the first falsifying valuation."""
    for v in valuations(variables(s)):
        if not evaluate(s, v):
            return False, v
    return True, None


# -- axiom systems ----------------------------------------------------------

PHI, PSI, CHI = Meta(0), Meta(1), Meta(2)
META_NAMES = {"phi": PHI, "psi": PSI, "chi": CHI}

SCHEMATA: dict[str, Imp] = {
    "A1": imp(PHI, imp(PSI, PHI)),
    "A2": imp(imp(PHI, imp(PSI, CHI)), imp(imp(PHI, PSI), imp(PHI, CHI))),
    "A3": imp(imp(neg(PHI), neg(PSI)), imp(PSI, PHI)),
}


@dataclass(frozen=True)
class AxiomSystem:
    schemata: frozenset[str]

    def __post_init__(self) -> None:
        if not self.schemata:
            raise ValueError("at least one axiom schema must be enabled")
        unknown = set(self.schemata) - set(SCHEMATA)
        if unknown:
            raise ValueError(f"unknown schemata: {sorted(unknown)}")

    @classmethod
    def of(cls, names: Union[str, Iterable[str]]) -> AxiomSystem:
        if isinstance(names, str):
            names = [x.strip() for x in names.split(",") if x.strip()]
        return cls(frozenset(names))

    @property
    def names(self) -> list[str]:
        return sorted(self.schemata)

    def __str__(self) -> str:
        return ",".join(self.names)


FULL = AxiomSystem.of("A1,A2,A3")
IMPLICATIONAL = AxiomSystem.of("A1,A2")


def substitute(t: Term, subst: dict) -> Term:
    """Replace metavariables by the sentences ``subst`` assigns them."""
    ty = type(t)
    if ty is Meta:
        return subst.get(t, t)
    if ty is Var:
        return t
    if ty is Neg:
        return Neg(substitute(t.body, subst))
    return Imp(substitute(t.ante, subst), substitute(t.cons, subst))


def match(pattern: Term, s: Term, subst: Optional[dict] = None) -> Optional[dict]:
    """One-way matching of a schema pattern against a sentence."""
    subst = {} if subst is None else dict(subst)
    stack = [(pattern, s)]
    while stack:
        p, x = stack.pop()
        tp = type(p)
        if tp is Meta:
            bound = subst.get(p)
            if bound is None:
                subst[p] = x
            elif bound != x:
                return None
        elif tp is not type(x):
            return None
        elif tp is Var:
            if p != x:
                return None
        elif tp is Neg:
            stack.append((p.body, x.body))
        else:
            stack.append((p.ante, x.ante))
            stack.append((p.cons, x.cons))
    return subst


def axiom_match(schema: str, s: Sentence) -> Optional[dict]:
    return match(SCHEMATA[schema], s)


# -- proofs -----------------------------------------------------------------


@dataclass(frozen=True)
class AxiomInstance:
    schema: str
    subst: tuple[tuple[str, Sentence], ...]  # sorted (meta name, sentence) pairs

    @classmethod
    def of(cls, schema: str, subst: dict) -> AxiomInstance:
        names = {v: k for k, v in META_NAMES.items()}
        pairs = []
        for k, v in subst.items():
            key = names[k] if isinstance(k, Meta) else k
            pairs.append((key, v))
        return cls(schema, tuple(sorted(pairs)))

    def as_dict(self) -> dict:
        return {META_NAMES[k]: v for k, v in self.subst}


@dataclass(frozen=True)
class ModusPonens:
    """Conclude line k from line ``i`` = (line ``j`` -> line k). Indices are 1-based."""

    i: int
    j: int


Justification = Union[AxiomInstance, ModusPonens]


class Line(NamedTuple):
    sentence: Sentence
    just: Justification


@dataclass(frozen=True)
class Proof:
    lines: tuple[Line, ...]

    @property
    def line_count(self) -> int:
        return len(self.lines)

    @property
    def symbol_count(self) -> int:
        return sum(size(line.sentence) for line in self.lines)

    @property
    def conclusion(self) -> Sentence:
        return self.lines[-1].sentence

    def key(self) -> tuple[str, ...]:
        return tuple(serialize(line.sentence) for line in self.lines)

    def to_json(self) -> list[dict]:
        out = []
        for line in self.lines:
            j = line.just
            if isinstance(j, AxiomInstance):
                just = {"kind": "axiom", "schema": j.schema,
                        "subst": {k: serialize(v) for k, v in j.subst}}
            else:
                just = {"kind": "mp", "i": j.i, "j": j.j}
            out.append({"sentence": serialize(line.sentence), "just": just})
        return out

    @classmethod
    def from_json(cls, data: list[dict]) -> Proof:
        lines = []
        for item in data:
            j = item["just"]
            if j["kind"] == "axiom":
                subst = tuple(sorted((k, parse(v)) for k, v in j.get("subst", {}).items()))
                just: Justification = AxiomInstance(j["schema"], subst)
            elif j["kind"] == "mp":
                just = ModusPonens(int(j["i"]), int(j["j"]))
            else:
                raise ValueError(f"unknown justification kind {j['kind']!r}")
            lines.append(Line(parse(item["sentence"]), just))
        return cls(tuple(lines))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    def __str__(self) -> str:
        rows = []
        for k, line in enumerate(self.lines, 1):
            j = line.just
            if isinstance(j, AxiomInstance):
                why = j.schema
            else:
                why = f"MP {j.i},{j.j}"
            rows.append(f"{k:3d}. {serialize(line.sentence)}    [{why}]")
        return "\n".join(rows)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    line: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def check_proof(sys: AxiomSystem, target: Sentence, pf: Proof) -> Verdict:
    """Accept iff every line is justified under ``sys`` and the last line is ``target``."""
    if not pf.lines:
        return Verdict(False, None, "empty proof")
    for k, line in enumerate(pf.lines, 1):
        j = line.just
        if isinstance(j, AxiomInstance):
            if j.schema not in sys.schemata:
                return Verdict(False, k, f"schema {j.schema} is not enabled")
            schema = SCHEMATA[j.schema]
            wanted = _metas(schema)
            given = j.as_dict() if all(n in META_NAMES for n, _ in j.subst) else None
            if given is None:
                return Verdict(False, k, "bad substitution: unknown metavariable")
            if set(given) != wanted:
                return Verdict(False, k, "bad substitution: wrong metavariables")
            if substitute(schema, given) != line.sentence:
                return Verdict(False, k, "bad substitution: instance does not match the line")
        elif isinstance(j, ModusPonens):
            if not (1 <= j.i < k and 1 <= j.j < k):
                return Verdict(False, k, "bad MP citation: lines must be earlier")
            major = pf.lines[j.i - 1].sentence
            minor = pf.lines[j.j - 1].sentence
            if major != Imp(minor, line.sentence):
                return Verdict(False, k, "bad MP citation: line i is not (line j -> this line)")
        else:
            return Verdict(False, k, "unknown justification")
    if pf.lines[-1].sentence != target:
        return Verdict(False, len(pf.lines), "wrong target")
    return Verdict(True)


def _metas(t: Term) -> set[Meta]:
    out: set[Meta] = set()
    stack = [t]
    while stack:
        x = stack.pop()
        ty = type(x)
        if ty is Meta:
            out.add(x)
        elif ty is Neg:
            stack.append(x.body)
        elif ty is Imp:
            stack.append(x.ante)
            stack.append(x.cons)
    return out


metas = _metas


def recognize_axiom(sys: AxiomSystem, s: Sentence) -> Optional[AxiomInstance]:
    """First enabled schema (by name) that ``s`` instantiates."""
    for name in sys.names:
        subst = axiom_match(name, s)
        if subst is not None:
            return AxiomInstance.of(name, subst)
    return None


@dataclass
class ProofBuilder:
    """Collects lines, reusing an earlier line when the same sentence is derived twice."""

    lines: list[Line] = field(default_factory=list)
    index: dict = field(default_factory=dict)

    def add(self, sentence: Sentence, just: Justification) -> int:
        if sentence in self.index:
            return self.index[sentence]
        self.lines.append(Line(sentence, just))
        self.index[sentence] = len(self.lines)
        return len(self.lines)

    def build(self) -> Proof:
        return Proof(tuple(self.lines))


# -- Kripke countermodels for systems without A3 ----------------------------


def _atoms(s: Sentence, out: dict) -> dict:
    """Maximal subformulas that are not implications, in order of first occurrence."""
    if type(s) is Imp:
        _atoms(s.ante, out)
        _atoms(s.cons, out)
    else:
        out.setdefault(s, None)
    return out


def _frames(max_worlds: int) -> Iterator[tuple[int, tuple[frozenset[int], ...]]]:
    """Rooted partial orders on 0..n-1 with root 0, as up-sets ``up[w]``."""
    for n in range(1, max_worlds + 1):
        pairs = [(a, b) for a in range(1, n) for b in range(1, n) if a != b]
        seen = set()
        for bits in itertools.product((False, True), repeat=len(pairs)):
            rel = {(w, w) for w in range(n)} | {(0, w) for w in range(n)}
            rel |= {pr for pr, on in zip(pairs, bits) if on}
            if any((b, a) in rel for a, b in rel if a != b):
                continue
            if any((a, d) not in rel for a, b in rel for c, d in rel if b == c):
                continue
            up = tuple(frozenset(b for a, b in rel if a == w) for w in range(n))
            if up not in seen:
                seen.add(up)
                yield n, up


def _forces(s: Sentence, w: int, up, val: dict) -> bool:
    if type(s) is Imp:
        return all(not _forces(s.ante, v, up, val) or _forces(s.cons, v, up, val)
                   for v in sorted(up[w]))
    return w in val[s]


@dataclass(frozen=True)
class KripkeModel:
    worlds: int
    up: tuple[frozenset[int], ...]
    valuation: tuple[tuple[str, frozenset[int]], ...]  # atom -> worlds forcing it

    def to_dict(self) -> dict:
        return {"worlds": self.worlds,
                "order": [[w, v] for w in range(self.worlds) for v in sorted(self.up[w]) if v != w],
                "valuation": {a: sorted(ws) for a, ws in self.valuation}}


def kripke_countermodel(s: Sentence, max_worlds: int = 3) -> Optional[KripkeModel]:
    """A finite Kripke model whose root does not force ``s``, or None.

    Non-implicational subformulas (variables and negations) are treated as
    atoms. A1 and A2 hold in every such model and modus ponens preserves
    truth, so a countermodel shows ``s`` has no proof from A1 and A2 alone.
    """
    atoms = list(_atoms(s, {}))
    for n, up in _frames(max_worlds):
        upsets = sorted({frozenset(x for w in ws for x in up[w])
                         for k in range(n + 1)
                         for ws in itertools.combinations(range(n), k)},
                        key=lambda u: (len(u), sorted(u)))
        for choice in itertools.product(upsets, repeat=len(atoms)):
            val = dict(zip(atoms, choice))
            if not _forces(s, 0, up, val):
                return KripkeModel(n, up, tuple((serialize(a), val[a]) for a in atoms))
    return None
