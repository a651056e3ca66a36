"""
Exact univariate polynomials in q and the q-analogs built from them.

All Poincare and Hilbert data in this package is stored in the variable q
with the cohomological degree halved: a coefficient at q^d counts classes
of real degree 2d.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class QPolynomial:
    """Dense integer polynomial in q, coefficients in ascending degree.

    Trailing zeros are stripped on construction, so the zero polynomial is
    the empty tuple and equality is plain tuple equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> "QPolynomial":
        if d < 0:
            raise ValueError("negative degree")
        return cls([0] * d + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = QPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, q0: int) -> int:
        return eval_int(self, q0)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                mono = "q" if d == 1 else f"q^{d}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        """Decimal coefficient strings, ascending degree."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "QPolynomial":
        return cls(int(c) for c in data)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def is_unimodal(self) -> bool:
        cs = self.coeffs
        k = 0
        while k + 1 < len(cs) and cs[k] <= cs[k + 1]:
            k += 1
        while k + 1 < len(cs) and cs[k] >= cs[k + 1]:
            k += 1
        return k + 1 >= len(cs)


def _coerce(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int):
        return QPolynomial([x])
    raise TypeError(f"cannot use {type(x).__name__} as a QPolynomial")


ZERO = QPolynomial()
ONE = QPolynomial([1])
Q = QPolynomial([0, 1])


def add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for d, c in enumerate(b.coeffs):
        out[d] += c
    return QPolynomial(out)


def mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return QPolynomial(out)


def q_int(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n <= 0:
        raise ValueError(f"q_int needs n >= 1, got {n}")
    return QPolynomial([1] * n)


def q_factorial(n: int) -> QPolynomial:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out


def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial via the Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    # row[k] holds [m, k]_q for the current m
    row = [ONE]
    for m in range(1, n + 1):
        new = [ONE]
        for kk in range(1, m):
            new.append(row[kk - 1] + QPolynomial.monomial(kk) * row[kk])
        new.append(ONE)
        row = new
    return row[k]


def eval_int(p: QPolynomial, q0: int) -> int:
    """Horner evaluation at an integer."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc
