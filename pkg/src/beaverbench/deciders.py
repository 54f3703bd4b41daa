"""Non-halting deciders that do not rely on watching the forward run repeat.

Both return True only with a proof that the machine never halts from a blank
tape. ``backward_dead_depth`` additionally needs the caller to have simulated
the machine past the returned depth.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .machine import HALT, Machine, Move


def backward_dead_depth(m: Machine, max_depth: int, max_nodes: int = 50_000) -> Optional[int]:
    """Depth ``d`` at which backward search from every HALT rule dies out, or None.

    A node at depth ``j`` is a partial configuration that halts in exactly
    ``j + 1`` steps. If depth ``d`` is empty, every halting run is at most
    ``d`` steps long, so a forward run that survives ``d`` steps never halts.
    """
    preds: dict[int, list[tuple[int, int, int, int]]] = {}
    level: list[tuple[int, int, tuple]] = []
    for s in range(1, m.n_states + 1):
        for r in (0, 1):
            w, mv, nxt = m.rule(s, r)
            if nxt == HALT:
                level.append((s, 0, ((0, r),)))
            else:
                preds.setdefault(nxt, []).append((s, r, w, mv))
    nodes = len(level)
    for depth in range(1, max_depth + 1):
        nxt_level = []
        for s, head, tape in level:
            known = dict(tape)
            for ps, pr, w, mv in preds.get(s, ()):
                ph = head - mv
                if known.get(ph, w) != w:
                    continue
                prev = dict(known)
                prev[ph] = pr
                nxt_level.append((ps, ph, tuple(sorted(prev.items()))))
        if not nxt_level:
            return depth
        nodes += len(nxt_level)
        if nodes > max_nodes:
            return None
        level = nxt_level
    return None


def left_dfas(k: int) -> Iterator[tuple[int, ...]]:
    """Complete k-state DFAs over {0,1} as tables ``d[2*q + bit]``.

    ``d[0] = 0`` so leading blanks are invisible, and states appear in order of
    first use so each automaton shape is produced once.
    """
    def rec(d: list[int], i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == 2 * k:
            if used == k:
                yield tuple(d)
            return
        if i // 2 >= used:
            return
        for t in range(min(used + 1, k)):
            yield from rec(d + [t], i + 1, max(used, t + 1))

    yield from rec([0], 1, 1)


def _halt_reachable(m: Machine, dfa: tuple[int, ...]) -> bool:
    """Pushdown reachability with the left half-tape quotiented by ``dfa``.

    Control states are (dfa state, machine state) plus HALT = 0; the stack is
    the head cell followed by the right half-tape. We saturate a
    multi-automaton for pre*(HALT) and ask whether the start configuration,
    with any number of blanks on the stack, is in it.
    """
    n = m.n_states
    k = len(dfa) // 2
    size = k * n + 1

    def ctrl(q: int, s: int) -> int:
        return 1 + q * n + (s - 1)

    rules: list[tuple[int, int, int, tuple[int, ...]]] = []
    for s in range(1, n + 1):
        for b in (0, 1):
            w, mv, nxt = m.rule(s, b)
            for q1 in range(k):
                for b1 in (0, 1):
                    q2 = dfa[2 * q1 + b1]
                    if nxt == HALT:
                        if b1 == 0:
                            rules.append((ctrl(q1, s), b, 0, ()))
                    elif mv == Move.L:
                        # left tape ...b1 in state q2 = d(q1, b1): pop b1 as the new head cell
                        rules.append((ctrl(q2, s), b, ctrl(q1, nxt), (b1, w)))
                    elif b1 == w:
                        rules.append((ctrl(q1, s), b, ctrl(q2, nxt), ()))

    trans = [0] * (2 * size)
    trans[0] = trans[1] = 1  # HALT accepts any remaining stack

    def advance(mask: int, bit: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= trans[2 * i + bit]
            mask >>= 1
            i += 1
        return out

    grew = True
    while grew:
        grew = False
        for j, b, target, word in rules:
            mask = 1 << target
            for bit in word:
                mask = advance(mask, bit)
            new = trans[2 * j + b] | mask
            if new != trans[2 * j + b]:
                trans[2 * j + b] = new
                grew = True

    seen, cur = 0, 1 << ctrl(0, 1)
    while seen != cur:
        seen, cur = cur, cur | advance(cur, 0)
    return bool(cur & 1)


def closed_tape_language(m: Machine, max_dfa_states: int = 4) -> Optional[tuple[int, ...]]:
    """Smallest left-tape DFA under which HALT is unreachable, or None."""
    for k in range(1, max_dfa_states + 1):
        for dfa in left_dfas(k):
            if not _halt_reachable(m, dfa):
                return dfa
    return None
