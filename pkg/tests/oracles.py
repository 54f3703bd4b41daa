"""Independent brute-force oracles. Nothing here imports the code under test's search paths."""

from __future__ import annotations

import itertools
import math

import numpy as np


# -- Busy Beaver: every total table, no canonicalization ---------------------


def naive_bb(n: int, budget: int, chunk: int = 1 << 20) -> tuple[int, int, int]:
    """Run every unrestricted n-state table for ``budget`` steps.

    Entries are coded ``e = write * 2(n+1) + move * (n+1) + next`` with next = 0
    for HALT and move = 1 for right. Returns (max steps, max ones, #halting).
    """
    per_entry = 4 * (n + 1)
    entries = 2 * n
    total = per_entry ** entries
    width = 2 * budget + 3
    best_steps = best_ones = halting = 0
    for start in range(0, total, chunk):
        ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
        codes = np.empty((ids.size, entries), dtype=np.int16)
        rest = ids.copy()
        for j in range(entries):
            codes[:, j] = rest % per_entry
            rest //= per_entry
        write = (codes // (2 * (n + 1))).astype(np.uint8)
        move = np.where((codes // (n + 1)) % 2 == 1, 1, -1).astype(np.int16)
        nxt = (codes % (n + 1)).astype(np.int8)

        rows = np.arange(ids.size)
        tape = np.zeros((ids.size, width), dtype=np.uint8)
        head = np.full(ids.size, budget + 1, dtype=np.int16)
        state = np.ones(ids.size, dtype=np.int8)
        for t in range(1, budget + 1):
            read = tape[rows, head]
            idx = (state.astype(np.int16) - 1) * 2 + read
            w = write[rows, idx]
            tape[rows, head] = w
            head = head + move[rows, idx]
            state = nxt[rows, idx]
            done = state == 0
            if done.any():
                ones = tape[rows[done]].sum(axis=1)
                halting += int(done.sum())
                best_steps = max(best_steps, t)
                best_ones = max(best_ones, int(ones.max()))
                keep = ~done
                rows, head, state = rows[keep], head[keep], state[keep]
            if rows.size == 0:
                break
    return best_steps, best_ones, halting


def all_total_machines(n: int):
    """Every total n-state table as a list of (write, move, next) triples; move in {-1, 1}."""
    options = [(w, mv, nx) for w in (0, 1) for mv in (-1, 1) for nx in range(n + 1)]
    return itertools.product(options, repeat=2 * n)


def tnf_key(table, n: int, budget: int):
    """Canonical key of a total machine by direct simulation.

    Records which transitions the blank-tape run reads within ``budget`` steps,
    relabels states in order of first visit, and mirrors so the first move is right.
    Unread transitions become None.
    """
    tape: dict[int, int] = {}
    head, state = 0, 1
    used: list[int] = []
    order = {1: 1}
    for _ in range(budget):
        read = tape.get(head, 0)
        idx = (state - 1) * 2 + read
        if idx not in used:
            used.append(idx)
        w, mv, nx = table[idx]
        tape[head] = w
        head += mv
        if nx == 0:
            break
        if nx not in order:
            order[nx] = len(order) + 1
        state = nx
    flip = -1 if table[0][1] == -1 else 1
    key = [None] * (2 * n)
    for idx in used:
        w, mv, nx = table[idx]
        s, r = divmod(idx, 2)
        key[(order[s + 1] - 1) * 2 + r] = (w, mv * flip, order.get(nx, 0) if nx else 0)
    return tuple(key)


# -- primes -----------------------------------------------------------------


def sieve(limit: int) -> np.ndarray:
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p::p] = False
    return is_p


def goldbach_holds_up_to(limit: int) -> bool:
    """Every even 4 <= e <= limit is p + q, checked with a sieve and a sparse prime scan."""
    is_p = sieve(limit)
    primes = np.flatnonzero(is_p)
    ok = np.zeros(limit + 1, dtype=bool)
    # small primes cover every even number in this range
    for p in primes[:200]:
        q = np.arange(4, limit + 1, 2) - p
        good = (q >= 2) & is_p[np.clip(q, 0, limit)]
        ok[np.arange(4, limit + 1, 2)[good]] = True
    missing = [e for e in range(4, limit + 1, 2) if not ok[e]]
    for e in missing:
        if not any(is_p[e - p] for p in primes if p <= e // 2):
            return False
    return True


# -- proofs: blind generate-and-check over line sequences ----------------------
#
# Terms are tuples: ("v", name), ("m", id), ("~", t), (">", a, b). Nothing here
# shares code with the package's search; only the symbol-count convention and
# the schemata are restated.

_SCHEMATA = {
    "A1": lambda f, g, h: (">", f, (">", g, f)),
    "A2": lambda f, g, h: (">", (">", f, (">", g, h)), (">", (">", f, g), (">", f, h))),
    "A3": lambda f, g, h: (">", (">", ("~", f), ("~", g)), (">", g, f)),
}


def term_of(text: str):
    """Tiny independent reader for the sentence grammar."""
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif text.startswith("->", i):
            toks.append("->")
            i += 2
        elif c in "~()":
            toks.append(c)
            i += 1
        else:
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            toks.append(text[i:j])
            i = j
    pos = 0

    def one():
        nonlocal pos
        t = toks[pos]
        pos += 1
        if t == "~":
            return ("~", one())
        if t == "(":
            a = one()
            assert toks[pos] == "->"
            pos += 1
            b = one()
            assert toks[pos] == ")"
            pos += 1
            return (">", a, b)
        return ("v", t)

    a = one()
    if pos < len(toks):
        assert toks[pos] == "->"
        pos += 1
        a = (">", a, one())
    assert pos == len(toks)
    return a


def _walk(t, s):
    while t[0] == "m" and t[1] in s:
        t = s[t[1]]
    return t


def _occurs(i, t, s):
    t = _walk(t, s)
    if t[0] == "m":
        return t[1] == i
    if t[0] == "v":
        return False
    return any(_occurs(i, c, s) for c in t[1:])


def _unify(a, b, s):
    a, b = _walk(a, s), _walk(b, s)
    if a == b:
        return s
    if a[0] == "m":
        if _occurs(a[1], b, s):
            return None
        s = dict(s)
        s[a[1]] = b
        return s
    if b[0] == "m":
        return _unify(b, a, s)
    if a[0] != b[0] or a[0] == "v":
        return None
    for x, y in zip(a[1:], b[1:]):
        s = _unify(x, y, s)
        if s is None:
            return None
    return s


def _tsize(t, s):
    t = _walk(t, s)
    if t[0] in "vm":
        return 1
    if t[0] == "~":
        return 1 + _tsize(t[1], s)
    return 3 + _tsize(t[1], s) + _tsize(t[2], s)


def _osize(t, s):
    t2 = _walk(t, s)
    return _tsize(t2, s) - (2 if t2[0] == ">" else 0)


def smaller_proof_exists(target_text: str, axioms, bound: int, max_lines: int = 99) -> bool:
    """Is there any proof (line sequence, sharing allowed) of the target with fewer
    than ``bound`` symbols? Schematic lines stand for all their instances; unknown
    subformulas count one symbol, which can only under-estimate a ground proof.
    """
    target = term_of(target_text)
    axioms = sorted(axioms)

    def total(lines, s):
        return sum(_osize(t, s) for t in lines)

    def dfs(lines, s, nm):
        if lines:
            s2 = _unify(lines[-1], target, s)
            if s2 is not None and total(lines, s2) < bound:
                return True
        if len(lines) >= max_lines:
            return False
        for name in axioms:
            t = _SCHEMATA[name](("m", nm), ("m", nm + 1), ("m", nm + 2))
            new = lines + [t]
            if total(new, s) < bound and dfs(new, s, nm + 3):
                return True
        for i in range(len(lines)):
            for j in range(len(lines)):
                y = ("m", nm)
                s2 = _unify(lines[i], (">", lines[j], y), s)
                if s2 is None:
                    continue
                new = lines + [y]
                if total(new, s2) < bound and dfs(new, s2, nm + 1):
                    return True
        return False

    return dfs([], {}, 0)


def proof_with_lines_exists(target_text: str, axioms, n_lines: int) -> bool:
    """Is there a proof of the target with exactly ``n_lines`` lines (any size)?"""
    target = term_of(target_text)
    axioms = sorted(axioms)

    def dfs(lines, s, nm):
        if len(lines) == n_lines:
            return _unify(lines[-1], target, s) is not None
        for name in axioms:
            t = _SCHEMATA[name](("m", nm), ("m", nm + 1), ("m", nm + 2))
            if dfs(lines + [t], s, nm + 3):
                return True
        for i in range(len(lines)):
            for j in range(len(lines)):
                y = ("m", nm)
                s2 = _unify(lines[i], (">", lines[j], y), s)
                if s2 is not None and dfs(lines + [y], s2, nm + 1):
                    return True
        return False

    return dfs([], {}, 0)


# -- universal hypotheses: naive evaluators by definition ----------------------


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _sigma(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def _squarefree(n: int) -> bool:
    return all(n % (d * d) for d in range(2, math.isqrt(n) + 1))


def naive_predicates(limit: int) -> dict:
    """Definition-level evaluators, valid for arguments up to ``limit``."""
    is_p = sieve(max(limit * limit + 2000 * limit, 10_000))
    primes = np.flatnonzero(is_p)

    def prime(n: int) -> bool:
        return n >= 2 and bool(is_p[n])

    def carmichael(n: int) -> bool:
        if n < 3 or prime(n):
            return False
        return all(pow(a, n - 1, n) == 1 for a in range(2, n) if math.gcd(a, n) == 1)

    def cube_sums(n: int) -> int:
        top = round(n ** (1 / 3)) + 2
        return sum(1 for a in range(1, top) for b in range(a, top) if a ** 3 + b ** 3 == n)

    def collatz(x: int) -> bool:
        steps = 0
        while x != 1:
            x = 3 * x + 1 if x % 2 else x // 2
            steps += 1
        return steps <= 100

    def four(x: int) -> bool:
        r = math.isqrt(x)
        return any(a * a + b * b + c * c + d * d == x
                   for a in range(r + 1) for b in range(a, r + 1)
                   for c in range(b, r + 1) for d in range(c, r + 1))

    return {
        "lt5": lambda x: x < 5,
        "lt10": lambda x: x < 10,
        "lt100": lambda x: x < 100,
        "lt1000": lambda x: x < 1000,
        "odd_prime": lambda x: prime(2 * x + 1),
        "euler41": lambda x: prime(x * x + x + 41),
        "euler41_minus": lambda x: prime(x * x - x + 41),
        "euler17": lambda x: prime(x * x + x + 17),
        "escott": lambda x: prime(abs(x * x - 79 * x + 1601)),
        "psp2_prime": lambda x: x < 2 or pow(2, x - 1, x) != 1 or prime(x),
        "odd_not_abundant": lambda x: x % 2 == 0 or _sigma(x) <= 2 * x,
        "not_perfect": lambda x: _sigma(x) != 2 * x,
        "brocard": lambda x: math.isqrt(math.factorial(x) + 1) ** 2 != math.factorial(x) + 1,
        "collatz100": collatz,
        "prime_gap_lt10": lambda x: int(primes[x]) - int(primes[x - 1]) < 10,
        "squarefree_pair": lambda x: _squarefree(x) or _squarefree(x + 1),
        "squarefree_triple": lambda x: _squarefree(x) or _squarefree(x + 1) or _squarefree(x + 2),
        "six_neighbors": lambda x: prime(6 * x - 1) or prime(6 * x + 1),
        "not_div7": lambda x: x % 7 != 0,
        "not_carmichael": lambda x: not carmichael(x),
        "not_taxicab": lambda x: cube_sums(x) <= 1,
        "few_prime_factors": lambda x: len(_factor(x)) <= 3,
        "goldbach": lambda k: any(prime(p) and prime(2 * k + 2 - p) for p in range(2, k + 2)),
        "bertrand": lambda x: any(prime(p) for p in range(x + 1, 2 * x + 1)),
        "four_squares": four,
    }


def smallest_counterexample(phi, start: int, budget: int):
    for x in range(start, start + budget):
        if not phi(x):
            return x
    return None
