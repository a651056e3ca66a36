"""
Tableaux indexing the components of Y_{n,(1^{n-1}),s} and the row-increasing
partial fillings indexing its permutation flags.

Everything is drawn in one frame: the diagram of the nilpotent x with
``s`` rows numbered from the top.  The bottom n-1 rows have two cells, the
top s-n+1 rows have a single cell in the right column.  Basis vectors sit in
the cells as follows (1-based indices):

    left column, bottom to top:   e_1 ... e_{n-1}
    right column, bottom to top:  e_n ... e_{2n-2}, then e_{2n-1} ... e_{n-1+s}

x moves a vector one cell to the left, or kills it when there is no cell
there.  A component tableau uses the same frame, so the partial permutation
of a tableau is read off by looking up the basis vector under each label.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

Cell = tuple[int, int]  # (row from top, column)


@dataclass(frozen=True)
class GlobalParams:
    n: int
    s: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.s < self.n - 1:
            raise ValueError(f"s must be >= n-1 = {self.n - 1}, got {self.s}")

    @classmethod
    def of(cls, n: int, s: Optional[int] = None) -> "GlobalParams":
        return cls(n, n - 1 if s is None else s)

    @property
    def ambient_dim(self) -> int:
        return self.n - 1 + self.s

    @property
    def single_rows(self) -> int:
        """Number of one-cell rows on top of the diagram."""
        return self.s - self.n + 1

    @property
    def min_index(self) -> int:
        """Smallest admissible component index."""
        return 2 if self.s == self.n - 1 else 1

    def component_indices(self) -> range:
        return range(self.min_index, self.n + 1)

    def check_index(self, i: int) -> None:
        if not self.min_index <= i <= self.n:
            raise ValueError(
                f"component index {i} out of range "
                f"[{self.min_index}, {self.n}] for n={self.n}, s={self.s}")

    def cells(self) -> list[Cell]:
        out = []
        for r in range(self.s):
            if r >= self.single_rows:
                out.append((r, 0))
            out.append((r, 1))
        return out

    def is_double_row(self, r: int) -> bool:
        return self.single_rows <= r < self.s

    def basis_index(self, cell: Cell) -> int:
        r, c = cell
        if not 0 <= r < self.s or c not in (0, 1):
            raise ValueError(f"no cell {cell}")
        if c == 0:
            if not self.is_double_row(r):
                raise ValueError(f"no cell {cell}")
            return self.s - r
        return self.s - r + self.n - 1

    def cell_of(self, index: int) -> Cell:
        N = self.ambient_dim
        if not 1 <= index <= N:
            raise ValueError(f"basis index {index} out of range [1, {N}]")
        if index <= self.n - 1:
            return (self.s - index, 0)
        return (self.s - (index - self.n + 1), 1)


# -- component tableaux --------------------------------------------------------

@dataclass(frozen=True)
class ComponentTableau:
    """SYT of the skew shape with one cell in the right column.

    ``column`` lists the left-column entries top to bottom; ``top_right`` is
    the entry of the unique right-column cell.  For s > n-1 the shape is
    skew: the top-right cell is separated from the left column.
    """

    params: GlobalParams
    top_right: int
    column: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def s(self) -> int:
        return self.params.s

    def cells(self) -> dict[int, Cell]:
        """label -> cell in the diagram frame."""
        off = self.params.single_rows
        out = {self.top_right: (0, 1)}
        for k, v in enumerate(self.column):
            out[v] = (off + k, 0)
        return out

    def rows(self) -> list[list[Optional[int]]]:
        """Row-major rows of the Young diagram of (2,1^{s-1}); None marks
        cells removed by the skew."""
        off = self.params.single_rows
        first = [self.column[0] if off == 0 else None, self.top_right]
        rows = [first]
        for r in range(1, self.s):
            rows.append([self.column[r - off] if r >= off else None])
        return rows

    def to_json(self) -> dict:
        return {"n": self.n, "s": self.s, "top_right": self.top_right,
                "rows": self.rows()}


def enumerate_components(params: GlobalParams) -> list[ComponentTableau]:
    out = []
    for i in params.component_indices():
        col = tuple(v for v in range(1, params.n + 1) if v != i)
        out.append(ComponentTableau(params, i, col))
    return out


def is_standard(t: ComponentTableau) -> bool:
    """Row/column strictness check on the skew diagram."""
    labels = sorted(t.column + (t.top_right,))
    if labels != list(range(1, t.n + 1)):
        return False
    if any(a >= b for a, b in zip(t.column, t.column[1:])):
        return False
    # top-right shares a row with a left cell only when the shape is straight
    if t.params.single_rows == 0 and t.column[0] >= t.top_right:
        return False
    return True


def component_word(params: GlobalParams, i: int) -> tuple[int, ...]:
    """[n-1, ..., n-i+1, n+s-1, n-i, ..., 1] in closed form."""
    params.check_index(i)
    n, s = params.n, params.s
    return tuple(range(n - 1, n - i, -1)) + (n + s - 1,) + tuple(range(n - i, 0, -1))


def tableau_to_partial_permutation(t: ComponentTableau) -> tuple[int, ...]:
    cells = t.cells()
    return tuple(t.params.basis_index(cells[j]) for j in range(1, t.n + 1))


# -- fillings -------------------------------------------------------------------

@dataclass(frozen=True)
class Filling:
    """Row-increasing partial labeling of the diagram with labels 1..n.

    ``positions[j-1]`` is the cell holding label j.
    """

    params: GlobalParams
    positions: tuple[Cell, ...]
    _by_cell: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_by_cell",
            {c: j + 1 for j, c in enumerate(self.positions)})

    def label_at(self, cell: Cell) -> Optional[int]:
        return self._by_cell.get(cell)

    def cell_of(self, label: int) -> Cell:
        return self.positions[label - 1]

    def right_label(self) -> int:
        """The unique label in the right column."""
        for j, (_, c) in enumerate(self.positions):
            if c == 1:
                return j + 1
        raise ValueError("filling has no right-column label")

    def left_neighbor(self, label: int) -> Optional[int]:
        r, c = self.cell_of(label)
        if c == 0 or not self.params.is_double_row(r):
            return None
        return self.label_at((r, 0))

    def is_valid(self) -> bool:
        p = self.params
        cells = set(p.cells())
        if len(self.positions) != p.n or len(set(self.positions)) != p.n:
            return False
        if not set(self.positions) <= cells:
            return False
        for r in range(p.s):
            if p.is_double_row(r):
                left = self.label_at((r, 0))
                right = self.label_at((r, 1))
                if left is None:
                    return False
                if right is not None and right < left:
                    return False
        return True

    def rows(self) -> list[list[Optional[int]]]:
        """Top-to-bottom [left, right] pairs; None for empty or absent cells."""
        return [[self.label_at((r, 0)), self.label_at((r, 1))]
                for r in range(self.params.s)]

    def to_json(self) -> dict:
        return {"n": self.params.n, "s": self.params.s, "rows": self.rows()}

    @classmethod
    def from_rows(cls, params: GlobalParams,
                  rows: Sequence[Sequence[Optional[int]]]) -> "Filling":
        if len(rows) != params.s:
            raise ValueError(f"expected {params.s} rows, got {len(rows)}")
        pos: dict[int, Cell] = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v is not None:
                    pos[v] = (r, c)
        if sorted(pos) != list(range(1, params.n + 1)):
            raise ValueError("labels must be exactly 1..n")
        f = cls(params, tuple(pos[j] for j in range(1, params.n + 1)))
        if not f.is_valid():
            raise ValueError(f"not a row-increasing partial filling: {rows}")
        return f


def enumerate_fillings(params: GlobalParams) -> list[Filling]:
    """All row-increasing partial fillings, sorted by label positions."""
    n = params.n
    left_cells = [(r, 0) for r in range(params.single_rows, params.s)]
    out = []
    for row in range(params.s):
        for b in range(1, n + 1):
            rest = [v for v in range(1, n + 1) if v != b]
            for perm in itertools.permutations(rest):
                pos = dict(zip(perm, left_cells))
                if params.is_double_row(row):
                    a = perm[row - params.single_rows]
                    if a > b:
                        continue
                pos[b] = (row, 1)
                out.append(Filling(params, tuple(pos[j] for j in range(1, n + 1))))
    out.sort(key=lambda f: f.positions)
    return out


def filling_to_partial_permutation(f: Filling) -> tuple[int, ...]:
    return tuple(f.params.basis_index(c) for c in f.positions)


def partial_permutation_to_filling(params: GlobalParams,
                                   w: Sequence[int]) -> Filling:
    f = Filling(params, tuple(params.cell_of(k) for k in w))
    if not f.is_valid():
        raise ValueError(f"{list(w)} is not the word of a permutation flag")
    return f


def classify_filling(f: Filling, i: int) -> bool:
    """Whether the permutation flag of ``f`` lies in the component K^i."""
    f.params.check_index(i)
    b = f.right_label()
    a = f.left_neighbor(b)
    if a is None:
        return i <= b
    return a < i <= b


def iter_component_flags(params: GlobalParams, i: int) -> Iterator[Filling]:
    return (f for f in enumerate_fillings(params) if classify_filling(f, i))
