"""
Intersections K^{i,j} of components, their bundle structure and Poincare
polynomials, the Dyck-path formula for unions, and the containment poset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Sequence

from dspringer.qseries import ONE, ZERO, QPolynomial, q_binomial, q_factorial, q_int
from dspringer.shapes import GlobalParams

MAX_ORACLE_PAIRS = 20


@dataclass(frozen=True, order=True)
class PairIndex:
    """K^{i,j} = K^i ∩ K^j; i == j is the component K^i itself."""

    i: int
    j: int
    n: int
    s: int

    def __post_init__(self):
        params = GlobalParams(self.n, self.s)
        if not params.min_index <= self.i <= self.j <= self.n:
            raise ValueError(
                f"invalid pair ({self.i},{self.j}) for n={self.n}, s={self.s}: "
                f"need {params.min_index} <= i <= j <= {self.n}")

    @classmethod
    def of(cls, params: GlobalParams, i: int, j: int | None = None) -> "PairIndex":
        return cls(i, i if j is None else j, params.n, params.s)

    @property
    def params(self) -> GlobalParams:
        return GlobalParams(self.n, self.s)

    @property
    def key(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __str__(self):
        return f"K^{{{self.i},{self.j}}}"


def all_pairs(params: GlobalParams) -> list[PairIndex]:
    lo = params.min_index
    return [PairIndex(i, j, params.n, params.s)
            for i in range(lo, params.n + 1) for j in range(i, params.n + 1)]


def _same_context(pairs: Sequence[PairIndex]) -> GlobalParams:
    if not pairs:
        raise ValueError("need at least one pair")
    n, s = pairs[0].n, pairs[0].s
    for p in pairs:
        if (p.n, p.s) != (n, s):
            raise ValueError("pairs come from different (n, s)")
    return GlobalParams(n, s)


def intersect(indices: Sequence[PairIndex]) -> PairIndex:
    params = _same_context(indices)
    return PairIndex(min(p.i for p in indices), max(p.j for p in indices),
                     params.n, params.s)


def dimension(pair: PairIndex) -> int:
    """Complex dimension C(n-1,2) + s - 1 - (j - i).

    Equals the summed fiber dimensions of ``bundle_type`` and the top
    dimension of Y when i == j.
    """
    return comb(pair.n - 1, 2) + pair.s - 1 - (pair.j - pair.i)


# -- bundle types ---------------------------------------------------------------

@dataclass(frozen=True)
class Fiber:
    kind: str  # "Gr", "Fl" or "P"
    a: int
    b: int = 0

    @classmethod
    def grassmannian(cls, k: int, m: int) -> "Fiber":
        return cls("Gr", k, m)

    @classmethod
    def complete_flag(cls, m: int) -> "Fiber":
        return cls("Fl", m)

    @classmethod
    def projective(cls, d: int) -> "Fiber":
        return cls("P", d)

    @property
    def dimension(self) -> int:
        if self.kind == "Gr":
            return self.a * (self.b - self.a)
        if self.kind == "Fl":
            return comb(self.a, 2)
        return self.a

    def poincare(self) -> QPolynomial:
        if self.kind == "Gr":
            return q_binomial(self.b, self.a)
        if self.kind == "Fl":
            return q_factorial(self.a)
        return q_int(self.a + 1)

    def cell_count(self) -> int:
        """Number of Schubert cells, counted independently of ``poincare``."""
        if self.kind == "Gr":
            return comb(self.b, self.a)
        if self.kind == "Fl":
            return factorial(self.a)
        return self.a + 1

    def __str__(self):
        if self.kind == "Gr":
            return f"Gr({self.a},{self.b})"
        if self.kind == "Fl":
            return f"Fl(1^{self.a})"
        return f"P^{self.a}"

    def to_json(self) -> dict:
        if self.kind == "Gr":
            return {"kind": "Grassmannian", "k": self.a, "m": self.b}
        if self.kind == "Fl":
            return {"kind": "CompleteFlag", "m": self.a}
        return {"kind": "Projective", "d": self.a}


def bundle_type(pair: PairIndex) -> list[Fiber]:
    """Fibers of the tower: choose V_{j-1} in im(x), a flag in it, the line
    V_n / im(x), then the flag between V_{j-1} and V_n."""
    n, s, i, j = pair.n, pair.s, pair.i, pair.j
    proj = s + i - n - 1
    if proj < 0:
        raise ValueError(f"{pair} has an empty projective fiber")
    return [Fiber.grassmannian(j - 1, n - 1), Fiber.complete_flag(j - 1),
            Fiber.projective(proj), Fiber.complete_flag(n - j + 1)]


def poincare_pair(pair: PairIndex) -> QPolynomial:
    out = ONE
    for f in bundle_type(pair):
        out = out * f.poincare()
    return out


def poincare_pair_closed(pair: PairIndex) -> QPolynomial:
    """[n-1]_q! [i-1]_q [n-j+1]_q, valid for s = n-1 only."""
    if pair.s != pair.n - 1:
        raise ValueError("closed product formula needs s = n-1")
    return q_factorial(pair.n - 1) * q_int(pair.i - 1) * q_int(pair.n - pair.j + 1)


# -- Dyck paths -------------------------------------------------------------------

@dataclass(frozen=True)
class DyckCellSet:
    """Cells (i, j) lying above a Dyck path; column i from 2, row j from the
    bottom.  The set is closed under moving left and up."""

    n: int
    cells: frozenset[tuple[int, int]]

    def arm(self, cell: tuple[int, int]) -> int:
        return cell[0] - 2

    def leg(self, cell: tuple[int, int]) -> int:
        return self.n - cell[1]

    def weight(self) -> QPolynomial:
        """Sum of q^{arm + leg} over the cells."""
        cs = [0] * (self.n + 1)
        for c in self.cells:
            cs[self.arm(c) + self.leg(c)] += 1
        return QPolynomial(cs)

    def is_up_left_closed(self) -> bool:
        for (i, j) in self.cells:
            for i2 in range(2, i + 1):
                for j2 in range(j, self.n + 1):
                    if (i2, j2) not in self.cells:
                        return False
        return True

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)


def dyck_from_pairs(pairs: Sequence[PairIndex]) -> DyckCellSet:
    params = _same_context(pairs)
    n = params.n
    cells = set()
    for p in pairs:
        for a in range(2, p.i + 1):
            for b in range(p.j, n + 1):
                cells.add((a, b))
    return DyckCellSet(n, frozenset(cells))


def _require_straight(params: GlobalParams) -> None:
    if params.s != params.n - 1:
        raise ValueError("the Dyck-path union formula is only available for s = n-1")


def dyck_sum(pairs: Sequence[PairIndex]) -> QPolynomial:
    """The inner sum of the union formula, without the [n-1]_q! factor."""
    _require_straight(_same_context(pairs))
    return dyck_from_pairs(pairs).weight()


def poincare_union(pairs: Sequence[PairIndex]) -> QPolynomial:
    params = _same_context(pairs)
    _require_straight(params)
    return q_factorial(params.n - 1) * dyck_sum(pairs)


def poincare_union_oracle(pairs: Sequence[PairIndex]) -> QPolynomial:
    """Inclusion-exclusion over all nonempty subsets of the input pairs.

    Independent of the Dyck construction: it only uses ``intersect`` and
    ``poincare_pair``.  Licensed by additivity of cell counts over a common
    paving; the test suite checks it exhaustively at small n.
    """
    params = _same_context(pairs)
    _require_straight(params)
    uniq = sorted(set(pairs))
    if len(uniq) > MAX_ORACLE_PAIRS:
        raise ValueError(f"oracle limited to {MAX_ORACLE_PAIRS} distinct pairs")
    cache: dict[tuple[int, int], QPolynomial] = {}
    total = ZERO
    for r in range(1, len(uniq) + 1):
        sign = 1 if r % 2 else -1
        for sub in itertools.combinations(uniq, r):
            key = (min(p.i for p in sub), max(p.j for p in sub))
            if key not in cache:
                cache[key] = poincare_pair(intersect(sub))
            total = total + sign * cache[key]
    return total


# -- containment poset ---------------------------------------------------------

def poset_leq(a: PairIndex, b: PairIndex) -> bool:
    """True iff K^a is contained in K^b (a.i <= b.i and b.j <= a.j)."""
    _same_context([a, b])
    return a.i <= b.i and b.j <= a.j


def lower_covers(pair: PairIndex) -> list[PairIndex]:
    """The intersections covered by ``pair``: K^{i-1,j} and K^{i,j+1}."""
    out = []
    lo = pair.params.min_index
    if pair.i - 1 >= lo:
        out.append(PairIndex(pair.i - 1, pair.j, pair.n, pair.s))
    if pair.j + 1 <= pair.n:
        out.append(PairIndex(pair.i, pair.j + 1, pair.n, pair.s))
    return out


def hasse_edges(params: GlobalParams) -> list[tuple[PairIndex, PairIndex]]:
    """(smaller, larger) cover relations of the containment poset."""
    return [(c, p) for p in all_pairs(params) for c in lower_covers(p)]


def parse_pairs(params: GlobalParams, tokens: Iterable[str]) -> list[PairIndex]:
    """Parse 'i,j' or 'i' tokens."""
    out = []
    for tok in tokens:
        parts = [t for t in tok.replace(";", ",").split(",") if t.strip()]
        if len(parts) == 1:
            i = j = int(parts[0])
        elif len(parts) == 2:
            i, j = int(parts[0]), int(parts[1])
        else:
            raise ValueError(f"bad pair token {tok!r}")
        out.append(PairIndex(i, j, params.n, params.s))
    if not out:
        raise ValueError("need at least one pair")
    return out
