"""
The nilpotent operator x on F^{n-1+s}, permutation-flag membership tests,
and a brute-force point count of component intersections over F_p.

The point count enumerates chains V_1 < ... < V_n in F_p^N one line at a
time.  Each V_k is kept as a reduced row-echelon basis, so a new line is a
vector vanishing on the current pivot columns with leading entry 1, which
makes every chain appear exactly once.  The last step of the partial flag
(from V_n to the whole space) carries no choice and is not enumerated.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from dspringer.shapes import GlobalParams

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration visits more candidates than allowed."""


@dataclass(frozen=True)
class NilpotentModel:
    """x e_k = e_{k-(n-1)} for n <= k <= 2n-2, and x e_k = 0 otherwise."""

    n: int
    s: int

    def __post_init__(self):
        GlobalParams(self.n, self.s)

    @classmethod
    def from_params(cls, params: GlobalParams) -> "NilpotentModel":
        return cls(params.n, params.s)

    @property
    def params(self) -> GlobalParams:
        return GlobalParams(self.n, self.s)

    @property
    def dim(self) -> int:
        return self.n - 1 + self.s

    @property
    def image(self) -> frozenset[int]:
        return frozenset(range(1, self.n))

    def apply_x(self, k: int) -> int:
        """Index of x e_k, or 0 when x e_k = 0."""
        if not 1 <= k <= self.dim:
            raise ValueError(f"basis index {k} out of range [1, {self.dim}]")
        if self.n <= k <= 2 * self.n - 2:
            return k - (self.n - 1)
        return 0

    def check_pair(self, pair: tuple[int, int]) -> None:
        i, j = pair
        lo = 2 if self.s == self.n - 1 else 1
        if not lo <= i <= j <= self.n:
            raise ValueError(
                f"pair {pair} out of range: need {lo} <= i <= j <= {self.n}")


@dataclass(frozen=True)
class IndexFlag:
    """Permutation flag V_k = span(e_{w_1}, ..., e_{w_k})."""

    w: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.w)) != len(self.w):
            raise ValueError(f"repeated letters in {self.w}")

    def V(self, k: int) -> frozenset[int]:
        return frozenset(self.w[:k])


def flag_membership(flag: IndexFlag, pair: tuple[int, int],
                    model: NilpotentModel) -> bool:
    """V_{j-1} in im(x), im(x) in V_n and x V_n in V_{i-1}, on index sets."""
    model.check_pair(pair)
    i, j = pair
    n = model.n
    if len(flag.w) != n:
        raise ValueError(f"flag word must have {n} letters")
    im = model.image
    if not flag.V(j - 1) <= im:
        return False
    Vn = flag.V(n)
    if not im <= Vn:
        return False
    target = flag.V(i - 1)
    for k in Vn:
        y = model.apply_x(k)
        if y and y not in target:
            return False
    return True


def in_fiber(flag: IndexFlag, model: NilpotentModel) -> bool:
    """Membership of a permutation flag in Y_{n,(1^{n-1}),s} itself."""
    if not model.image <= flag.V(len(flag.w)):
        return False
    for k in range(1, len(flag.w) + 1):
        Vk = flag.V(k)
        for a in Vk:
            y = model.apply_x(a)
            if y and y not in Vk:
                return False
    return True


# -- point counts over F_p ----------------------------------------------------

def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


class _Counter:
    """Depth-first enumeration of admissible chains for one pair."""

    def __init__(self, model: NilpotentModel, pair: tuple[int, int],
                 p: int, budget: int):
        self.n = model.n
        self.N = model.dim
        self.i, self.j = pair
        self.p = p
        self.budget = budget
        self.visited = 0
        self.inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]
        # 0-based coordinates; x sends coordinate c to c-(n-1) when n-1 <= c <= 2n-3
        self.image_coords = list(range(self.n - 1))
        self.v_prev: list = []

    def x(self, v: list[int]) -> list[int]:
        n = self.n
        out = [0] * self.N
        for c in range(n - 1, 2 * n - 2):
            out[c - (n - 1)] = v[c]
        return out

    def reduce(self, v: list[int], basis: Sequence[tuple[int, list[int]]]) -> list[int]:
        p = self.p
        v = list(v)
        for piv, row in basis:
            a = v[piv]
            if a:
                for c in range(piv, self.N):
                    if row[c]:
                        v[c] = (v[c] - a * row[c]) % p
        return v

    def candidates(self, basis, k: int):
        """Normalized reduced vectors spanning the possible V_k / V_{k-1}."""
        pivots = {piv for piv, _ in basis}
        ambient = self.image_coords if k <= self.j - 1 else range(self.N)
        free = [c for c in ambient if c not in pivots]
        for t, lead in enumerate(free):
            tail = free[t + 1:]
            for vals in itertools.product(range(self.p), repeat=len(tail)):
                self.visited += 1
                if self.visited > self.budget:
                    raise BudgetExceeded(
                        f"more than {self.budget} candidate lines")
                v = [0] * self.N
                v[lead] = 1
                for c, a in zip(tail, vals):
                    v[c] = a
                yield lead, v

    def extend(self, basis, lead: int, v: list[int]):
        p = self.p
        new = []
        for piv, row in basis:
            a = row[lead]
            if a:
                row = [(rc - a * vc) % p for rc, vc in zip(row, v)]
            new.append((piv, row))
        new.append((lead, v))
        new.sort(key=lambda t: t[0])
        return new

    def tail_ok(self, tails: list[list[int]], t: list[int]):
        """Keep the projection of V_k away from im(x) of dimension <= 1.

        Returns the updated direction list, or None when the rank would
        reach 2 (then im(x) can no longer fit inside V_n).
        """
        if not any(t):
            return tails
        if not tails:
            lead = next(a for a in t if a)
            s = self.inv[lead]
            return [[(a * s) % self.p for a in t]]
        d = tails[0]
        lead_c = next(c for c, a in enumerate(d) if a)
        scale = t[lead_c]
        if [(scale * a) % self.p for a in d] == t:
            return tails
        return None

    def run(self, basis, tails, k: int) -> int:
        total = 0
        for lead, v in self.candidates(basis, k):
            total += self.step(basis, tails, k, lead, v)
        return total

    def step(self, basis, tails, k: int, lead: int, v: list[int]) -> int:
        n = self.n
        if k >= self.i:
            xv = self.x(v)
            if any(xv) and any(self.reduce(xv, self.v_prev)):
                return 0
        new_tails = self.tail_ok(tails, v[n - 1:])
        if new_tails is None:
            return 0
        new_basis = self.extend(basis, lead, v)
        if k == self.i - 1:
            # depth-first: V_{i-1} stays fixed for the whole subtree
            self.v_prev = new_basis
        if k == n:
            return 1 if len(new_tails) == 1 else 0
        return self.run(new_basis, new_tails, k + 1)


def _count_subtree(args) -> tuple[int, int]:
    model, pair, p, budget, lead, v = args
    c = _Counter(model, pair, p, budget)
    return c.step([], [], 1, lead, v), c.visited


def count_points_fp(pair: tuple[int, int], model: NilpotentModel, p: int,
                    budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Number of F_p-points of K^{i,j}.

    Enumerates every chain with V_{j-1} in im(x), im(x) in V_n and
    x V_n in V_{i-1}.  Raises BudgetExceeded rather than truncating.
    """
    model.check_pair(pair)
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    counter = _Counter(model, pair, p, budget)
    if workers <= 1:
        return counter.run([], [], 1)
    firsts = list(counter.candidates([], 1))
    jobs = [(model, pair, p, budget, lead, v) for lead, v in firsts]
    total = 0
    visited = len(firsts)
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for cnt, seen in ex.map(_count_subtree, jobs):
            total += cnt
            visited += seen
            if visited > budget:
                raise BudgetExceeded(f"more than {budget} candidate lines")
    return total


def thread_cap() -> int:
    """Worker cap from DST_THREADS (default 1)."""
    raw = os.environ.get("DST_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
