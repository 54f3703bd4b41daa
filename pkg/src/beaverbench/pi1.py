"""Universal hypotheses "for all x, phi(x)" with decidable phi, and the smallest-counterexample search."""

from __future__ import annotations

import math
import time
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Union

from sympy import divisor_sigma, factorint, prevprime
from sympy import isprime as _isprime_large


# -- primes -----------------------------------------------------------------


class _Primes:
    """A sieve that doubles on demand, plus the list of primes it covers."""

    def __init__(self) -> None:
        self.limit = 1
        self.flags = bytearray(2)
        self.list: list[int] = []

    def grow(self, limit: int) -> None:
        if limit <= self.limit:
            return
        limit = max(limit, 2 * self.limit, 1 << 16)
        flags = bytearray([1]) * (limit + 1)
        flags[0] = flags[1] = 0
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p::p] = bytes(len(range(p * p, limit + 1, p)))
        self.flags = flags
        self.limit = limit
        self.list = [i for i in range(limit + 1) if flags[i]]

    def is_prime(self, n: int) -> bool:
        if n < 2:
            return False
        if n > 1 << 24:
            return bool(_isprime_large(n))
        self.grow(n)
        return bool(self.flags[n])

    def nth(self, k: int) -> int:
        """The k-th prime, 1-based."""
        while len(self.list) < k:
            bound = max(16, int(k * (math.log(k + 2) + math.log(math.log(k + 3)) + 2)))
            self.grow(max(bound, 2 * self.limit))
        return self.list[k - 1]


PRIMES = _Primes()
is_prime = PRIMES.is_prime


def _squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


# Large primes for the factorial-plus-one square filter; each keeps a running table of x! mod p.
_FILTER_PRIMES = tuple(prevprime(1 << b) for b in range(58, 64))
_FACT_MOD: dict[int, array] = {p: array("Q", [1]) for p in _FILTER_PRIMES}


def _fact_mod(x: int, p: int) -> int:
    table = _FACT_MOD[p]
    while len(table) <= x:
        table.append(table[-1] * len(table) % p)
    return table[x]


def _factorial_plus_one_is_square(x: int) -> bool:
    for p in _FILTER_PRIMES:
        r = (_fact_mod(x, p) + 1) % p
        if r and pow(r, (p - 1) // 2, p) != 1:
            return False  # not a quadratic residue, so not a square
    v = math.factorial(x) + 1
    return math.isqrt(v) ** 2 == v


# -- evaluators -------------------------------------------------------------


def _lt(k: int) -> Callable[[int], bool]:
    def phi(x: int) -> bool:
        return x < k
    phi.__name__ = f"lt{k}"
    return phi


def odd_prime(x: int) -> bool:
    return is_prime(2 * x + 1)


def euler41(x: int) -> bool:
    return is_prime(x * x + x + 41)


def euler41_minus(x: int) -> bool:
    return is_prime(x * x - x + 41)


def euler17(x: int) -> bool:
    return is_prime(x * x + x + 17)


def escott(x: int) -> bool:
    return is_prime(abs(x * x - 79 * x + 1601))


def psp2_prime(x: int) -> bool:
    """Passing the base-2 Fermat test implies primality."""
    if x < 2 or pow(2, x - 1, x) != 1:
        return True
    return is_prime(x)


def odd_not_abundant(x: int) -> bool:
    return x % 2 == 0 or divisor_sigma(x) <= 2 * x


def not_perfect(x: int) -> bool:
    return divisor_sigma(x) != 2 * x


def brocard(x: int) -> bool:
    """x! + 1 is not a perfect square."""
    return not _factorial_plus_one_is_square(x)


def collatz100(x: int) -> bool:
    """The Collatz trajectory of x reaches 1 within 100 steps."""
    for _ in range(100):
        if x == 1:
            return True
        x = x // 2 if x % 2 == 0 else 3 * x + 1
    return x == 1


def prime_gap_lt10(x: int) -> bool:
    """The gap after the x-th prime is below 10."""
    return PRIMES.nth(x + 1) - PRIMES.nth(x) < 10


def squarefree_pair(x: int) -> bool:
    return _squarefree(x) or _squarefree(x + 1)


def squarefree_triple(x: int) -> bool:
    return _squarefree(x) or _squarefree(x + 1) or _squarefree(x + 2)


def six_neighbors(x: int) -> bool:
    return is_prime(6 * x - 1) or is_prime(6 * x + 1)


def not_div7(x: int) -> bool:
    return x % 7 != 0


def not_carmichael(x: int) -> bool:
    """Korselt: composite, squarefree, odd, and p - 1 | x - 1 for every prime p | x."""
    if x < 3 or x % 2 == 0 or is_prime(x):
        return True
    f = factorint(x)
    return not (len(f) >= 2 and all(e == 1 and (x - 1) % (p - 1) == 0 for p, e in f.items()))


def not_taxicab(x: int) -> bool:
    """x has at most one representation as a sum of two positive cubes."""
    ways = 0
    a = 1
    while 2 * a ** 3 <= x:
        b = round((x - a ** 3) ** (1 / 3))
        for c in (b - 1, b, b + 1):
            if c >= a and a ** 3 + c ** 3 == x:
                ways += 1
        a += 1
    return ways <= 1


def few_prime_factors(x: int) -> bool:
    return len(factorint(x)) <= 3


def goldbach(k: int) -> bool:
    """2k + 2 is a sum of two primes."""
    e = 2 * k + 2
    PRIMES.grow(e)
    flags = PRIMES.flags
    for p in PRIMES.list:
        if 2 * p > e:
            return False
        if flags[e - p]:
            return True
    return False


def bertrand(x: int) -> bool:
    """Some prime p has x < p <= 2x."""
    return any(is_prime(p) for p in range(x + 1, 2 * x + 1))


def four_squares(x: int) -> bool:
    def rec(n: int, k: int, cap: int) -> bool:
        if k == 1:
            r = math.isqrt(n)
            return r * r == n and r <= cap
        for a in range(min(math.isqrt(n), cap), -1, -1):
            if a * a * k < n:
                return False
            if rec(n - a * a, k - 1, a):
                return True
        return False

    return rec(x, 4, math.isqrt(x))


# -- registry ---------------------------------------------------------------


@dataclass(frozen=True)
class Predicate:
    name: str
    evaluator: Callable[[int], bool]
    description: str
    start_index: int = 1


REGISTRY: dict[str, Predicate] = {}


def register(name: str, evaluator: Callable[[int], bool], description: str,
             start_index: int = 1) -> Predicate:
    pred = Predicate(name, evaluator, description, start_index)
    REGISTRY[name] = pred
    return pred


for _k in (5, 10, 100, 1000):
    register(f"lt{_k}", _lt(_k), f"x < {_k}")
register("odd_prime", odd_prime, "2x+1 is prime")
register("euler41", euler41, "x^2+x+41 is prime")
register("euler41_minus", euler41_minus, "x^2-x+41 is prime")
register("euler17", euler17, "x^2+x+17 is prime")
register("escott", escott, "|x^2-79x+1601| is prime")
register("psp2_prime", psp2_prime, "2^(x-1) = 1 mod x implies x is prime (x >= 2)")
register("odd_not_abundant", odd_not_abundant, "odd x is not abundant")
register("not_perfect", not_perfect, "x is not perfect")
register("brocard", brocard, "x!+1 is not a perfect square")
register("collatz100", collatz100, "the Collatz trajectory of x reaches 1 within 100 steps")
register("prime_gap_lt10", prime_gap_lt10, "the gap after the x-th prime is below 10")
register("squarefree_pair", squarefree_pair, "x or x+1 is squarefree")
register("squarefree_triple", squarefree_triple, "one of x, x+1, x+2 is squarefree")
register("six_neighbors", six_neighbors, "6x-1 or 6x+1 is prime")
register("not_div7", not_div7, "7 does not divide x")
register("not_carmichael", not_carmichael, "x is not a Carmichael number")
register("not_taxicab", not_taxicab, "x is a sum of two positive cubes in at most one way")
register("few_prime_factors", few_prime_factors, "x has at most 3 distinct prime factors")
register("goldbach", goldbach, "2k+2 is a sum of two primes")
register("bertrand", bertrand, "there is a prime p with x < p <= 2x")
register("four_squares", four_squares, "x is a sum of four squares")


def get(name: str) -> Predicate:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown predicate {name!r}; known: {', '.join(sorted(REGISTRY))}") from None


# -- search -----------------------------------------------------------------


def check(phi: Predicate, x: int) -> bool:
    if x < phi.start_index:
        raise ValueError(f"{phi.name} is only defined from {phi.start_index}, got {x}")
    return bool(phi.evaluator(x))


@dataclass(frozen=True)
class Found:
    x: int


@dataclass(frozen=True)
class NoneWithin:
    budget: int


SearchResult = Union[Found, NoneWithin]


@dataclass(frozen=True)
class CounterexampleReport:
    predicate: str
    start_index: int
    budget: int
    result: SearchResult
    checked: int
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        """Canonical payload; ``elapsed`` is left out so reruns compare byte for byte."""
        out = {"predicate": self.predicate, "start_index": self.start_index,
               "budget": self.budget, "checked": self.checked}
        if isinstance(self.result, Found):
            out.update(result="Found", x=self.result.x)
        else:
            out.update(result="NoneWithin", budget_exhausted=self.result.budget)
        return out


def _scan(name: str, lo: int, hi: int) -> Optional[int]:
    phi = get(name)
    ev = phi.evaluator
    for x in range(lo, hi):
        if not ev(x):
            return x
    return None


def find_counterexample(phi: Union[Predicate, str], budget: int,
                        start_index: Optional[int] = None, workers: int = 1,
                        chunk: int = 20_000) -> CounterexampleReport:
    """Smallest x in [start, start + budget) with phi(x) false.

    With several workers, consecutive chunks are scanned speculatively and the
    earliest hit wins, so the report matches the sequential scan exactly.
    """
    if isinstance(phi, str):
        phi = get(phi)
    if budget < 0:
        raise ValueError("budget must be non-negative")
    start = phi.start_index if start_index is None else start_index
    if start < 1:
        raise ValueError("start index must be a positive natural")
    t0 = time.perf_counter()
    end = start + budget
    hit: Optional[int] = None
    if workers <= 1 or phi.name not in REGISTRY or REGISTRY[phi.name] is not phi:
        for x in range(start, end):
            if not phi.evaluator(x):
                hit = x
                break
    else:
        bounds = [(lo, min(lo + chunk, end)) for lo in range(start, end, chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for i in range(0, len(bounds), workers):
                batch = bounds[i:i + workers]
                results = list(pool.map(_scan, [phi.name] * len(batch),
                                        [b[0] for b in batch], [b[1] for b in batch]))
                found = [r for r in results if r is not None]
                if found:
                    hit = min(found)
                    break
    elapsed = time.perf_counter() - t0
    if hit is None:
        return CounterexampleReport(phi.name, start, budget, NoneWithin(budget), budget, elapsed)
    return CounterexampleReport(phi.name, start, budget, Found(hit), hit - start + 1, elapsed)
