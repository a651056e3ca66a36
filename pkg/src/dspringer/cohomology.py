"""
The ring Z[x_1..x_n]/I_n^i presenting H^*(K^i) for s = n-1.

I_n^i is generated by e_2, ..., e_n in all variables, h_d(x_1..x_{i-1}) for
d >= n+1-i and h_d(x_i..x_n) for d >= i-1.  The Hilbert function is found
degree by degree: the degree-d part of the ideal is spanned by monomial
multiples of generators, and its rank is taken by exact elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterator, Sequence

from dspringer.linalg import EchelonBasis

Exponent = tuple[int, ...]


class MultivariatePolynomial:
    """Sparse integer polynomial in x_1..x_n keyed by exponent tuples."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Exponent, int] | None = None):
        self.n = n
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, n: int) -> "MultivariatePolynomial":
        return cls(n, {(0,) * n: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (d is None or ds == {d})

    def shift(self, mono: Exponent) -> "MultivariatePolynomial":
        """Multiply by the monomial x^mono."""
        return MultivariatePolynomial(
            self.n, {tuple(a + b for a, b in zip(e, mono)): c
                     for e, c in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultivariatePolynomial(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return f"MultivariatePolynomial({self.n}, {self.terms})"


def _check_vars(vars: Sequence[int], n: int) -> list[int]:
    vs = sorted(set(vars))
    if len(vs) != len(list(vars)) or any(not 1 <= v <= n for v in vs):
        raise ValueError(f"variables {list(vars)} must be distinct in 1..{n}")
    return vs


def elementary_symmetric(d: int, vars: Sequence[int], n: int) -> MultivariatePolynomial:
    vs = _check_vars(vars, n)
    if d < 0:
        raise ValueError("negative degree")
    terms = {}
    for combo in itertools.combinations(vs, d):
        e = [0] * n
        for v in combo:
            e[v - 1] = 1
        terms[tuple(e)] = 1
    return MultivariatePolynomial(n, terms)


def complete_homogeneous(d: int, vars: Sequence[int], n: int) -> MultivariatePolynomial:
    vs = _check_vars(vars, n)
    if d < 0:
        raise ValueError("negative degree")
    if not vs and d > 0:
        raise ValueError("h_d of no variables needs d = 0")
    terms = {}
    for combo in itertools.combinations_with_replacement(vs, d):
        e = [0] * n
        for v in combo:
            e[v - 1] += 1
        terms[tuple(e)] = 1
    return MultivariatePolynomial(n, terms)


def monomials(n: int, d: int) -> list[Exponent]:
    """Degree-d exponent vectors in n variables, in lexicographic order."""
    out = []
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(d + n - 2 - prev)
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def top_degree(n: int) -> int:
    """Complex dimension of K^i for s = n-1."""
    return comb(n - 1, 2) + n - 2


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    poly: MultivariatePolynomial = field(compare=False, repr=False)


@dataclass(frozen=True)
class IdealSpec:
    n: int
    i: int
    D: int
    generators: tuple[Generator, ...]

    def by_degree(self, d: int) -> list[Generator]:
        return [g for g in self.generators if g.degree == d]


def build_ideal(n: int, i: int, D: int | None = None) -> IdealSpec:
    """Generators of I_n^i up to degree D (default: one past the top degree)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 2 <= i <= n:
        raise ValueError(f"component index must satisfy 2 <= i <= n, got i={i}")
    if D is None:
        D = top_degree(n) + 1
    all_vars = list(range(1, n + 1))
    low = list(range(1, i))
    high = list(range(i, n + 1))
    gens = []
    for d in range(2, n + 1):
        if d <= D:
            gens.append(Generator(f"e_{d}(x_1..x_{n})", d,
                                  elementary_symmetric(d, all_vars, n)))
    for d in range(n + 1 - i, D + 1):
        gens.append(Generator(f"h_{d}(x_1..x_{i - 1})", d,
                              complete_homogeneous(d, low, n)))
    for d in range(max(i - 1, 0), D + 1):
        if d == 0:
            continue
        gens.append(Generator(f"h_{d}(x_{i}..x_{n})", d,
                              complete_homogeneous(d, high, n)))
    return IdealSpec(n, i, D, tuple(gens))


def _grevlex_key(e: Exponent) -> tuple[int, ...]:
    return tuple(-x for x in reversed(e))


def ideal_slice_rank(spec: IdealSpec, d: int) -> int:
    """Rank over Q of the degree-d part of the ideal."""
    n = spec.n
    cols = {m: k for k, m in
            enumerate(sorted(monomials(n, d), key=_grevlex_key))}
    full = len(cols)
    eb = EchelonBasis()
    # h-generators first: their near-pure-power leading terms keep fill-in low
    order = sorted(spec.generators,
                   key=lambda g: (g.name.startswith("e_"), g.degree))
    for g in order:
        if g.degree > d or g.poly.is_zero():
            continue
        for m in monomials(n, d - g.degree):
            row = {cols[e]: c for e, c in g.poly.shift(m).terms.items()}
            eb.add(row)
            if eb.rank == full:
                return full
    return eb.rank


def hilbert_series(spec: IdealSpec) -> list[int]:
    """[dim_0, ..., dim_D] of the quotient over Q."""
    out = []
    for d in range(spec.D + 1):
        out.append(comb(d + spec.n - 1, spec.n - 1) - ideal_slice_rank(spec, d))
    return out


# -- ordered set partitions ---------------------------------------------------

OrderedSetPartition = tuple[frozenset[int], ...]


def ordered_set_partitions(n: int, k: int) -> Iterator[OrderedSetPartition]:
    """All ordered set partitions of {1..n} into k nonempty blocks."""
    if k < 0 or n < 0:
        return
    blocks: list[set[int]] = [set() for _ in range(k)]

    def rec(x: int, empty: int):
        if n - x + 1 < empty:
            return
        if x > n:
            yield tuple(frozenset(b) for b in blocks)
            return
        for b in blocks:
            was_empty = not b
            b.add(x)
            yield from rec(x + 1, empty - was_empty)
            b.discard(x)

    yield from rec(1, k)


def osp_basis(n: int, i: int) -> list[OrderedSetPartition]:
    """Ordered set partitions of [n] into n-1 blocks separating {1..i-1}
    and separating {i..n}."""
    if not 2 <= i <= n:
        raise ValueError(f"need 2 <= i <= n, got i={i}")
    low = set(range(1, i))
    high = set(range(i, n + 1))
    out = []
    for sigma in ordered_set_partitions(n, n - 1):
        if all(len(B & low) <= 1 and len(B & high) <= 1 for B in sigma):
            out.append(sigma)
    return out


def osp_count(n: int, i: int) -> int:
    return len(osp_basis(n, i))


def osp_count_formula(n: int, i: int) -> int:
    return (i - 1) * (n - i + 1) * factorial(n - 1)
