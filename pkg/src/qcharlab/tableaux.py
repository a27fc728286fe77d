"""Column tableaux with integer supports and their loop-weight monomials.

A column of length k with support starting at s holds boxes at the spectral
exponents s, s+2, ..., s+2(k-1); the box in row j (1-based, row 1 on top)
sits at support s+2(k-j).  A box with content c at support s carries the
monomial ``Y[c-1, s+c]^-1 * Y[c, s+c-1]`` (boundary factors dropped), and a
tableau's monomial is the product over its boxes.

Semi-standard means: columns strictly increase top to bottom, support starts
weakly decrease left to right, and whenever a box (c, s) in one column has a
neighbour (c', s-2) in the next column then c >= c'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidInput
from .lweight import LMonomial


@dataclass(frozen=True)
class Shape:
    """Ordered columns given as (length, support-start) pairs.

    Construction rejects shapes whose picture would be disconnected: supports
    must share one parity and consecutive columns must at least touch
    diagonally (top of the next column no lower than one row below the
    bottom of the previous one).
    """

    columns: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cols = tuple((int(k), int(s)) for k, s in self.columns)
        object.__setattr__(self, "columns", cols)
        for k, _ in cols:
            if k < 1:
                raise InvalidInput(f"column length must be positive, got {k}")
        for (k1, s1), (k2, s2) in zip(cols, cols[1:]):
            if s2 > s1:
                raise InvalidInput("support starts must be weakly decreasing")
            if (s1 - s2) % 2 != 0:
                raise InvalidInput("all supports must have the same parity")
            if s2 + 2 * (k2 - 1) < s1 - 2:
                raise InvalidInput("disconnected shape: columns do not touch")

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def to_json(self) -> list:
        return [[k, s] for k, s in self.columns]


def box_support(length: int, start: int, row: int) -> int:
    """Support of the box in 1-based ``row`` of a column ``(length, start)``."""
    return start + 2 * (length - row)


@dataclass(frozen=True)
class Tableau:
    """A filling of a Shape with contents in 1..n+1.

    Contents need not be increasing: intermediate results of single-box
    raises are representable.  Semi-standardness is a predicate, not a
    construction invariant.
    """

    n: int
    shape: Shape
    cols: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(int(c) for c in col) for col in self.cols)
        object.__setattr__(self, "cols", cols)
        if len(cols) != len(self.shape):
            raise InvalidInput("number of content columns must match the shape")
        for (k, _), col in zip(self.shape, cols):
            if len(col) != k:
                raise InvalidInput("column entries must match the shape lengths")
            for c in col:
                if not 1 <= c <= self.n + 1:
                    raise InvalidInput(f"content {c} out of range 1..{self.n + 1}")

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All (content, support) pairs, column by column, top to bottom."""
        for (k, s), col in zip(self.shape, self.cols):
            for row, c in enumerate(col, start=1):
                yield c, box_support(k, s, row)

    def column_boxes(self, j: int) -> dict[int, int]:
        """Support -> content map of the 1-based column ``j``."""
        k, s = self.shape.columns[j - 1]
        return {
            box_support(k, s, row): c
            for row, c in enumerate(self.cols[j - 1], start=1)
        }

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "shape": self.shape.to_json(),
            "cols": [list(col) for col in self.cols],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(
            int(data["n"]),
            Shape(tuple((k, s) for k, s in data["shape"])),
            tuple(tuple(col) for col in data["cols"]),
        )

    def __str__(self) -> str:
        if not self.cols:
            return "(empty tableau)"
        per_col = [self.column_boxes(j) for j in range(1, len(self.cols) + 1)]
        supports = sorted({s for col in per_col for s in col}, reverse=True)
        width = len(str(self.n + 1))
        lines = []
        for s in supports:
            cells = []
            for col in per_col:
                cells.append(str(col[s]).rjust(width) if s in col else " " * width)
            lines.append("|" + "|".join(cells) + f"|  s={s}")
        return "\n".join(lines)


def monomial_of_box(n: int, content: int, s: int) -> LMonomial:
    """Monomial of one box: Y[content-1, s+content]^-1 * Y[content, s+content-1]."""
    if not 1 <= content <= n + 1:
        raise InvalidInput(f"content {content} out of range 1..{n + 1}")
    pairs = []
    if content - 1 >= 1:
        pairs.append(((content - 1, s + content), -1))
    if content <= n:
        pairs.append(((content, s + content - 1), 1))
    return LMonomial(n, pairs)


def monomial_of_tableau(t: Tableau) -> LMonomial:
    m = LMonomial.identity(t.n)
    for content, s in t.boxes():
        m = m * monomial_of_box(t.n, content, s)
    return m


def is_semistandard(t: Tableau) -> bool:
    for col in t.cols:
        if any(a >= b for a, b in zip(col, col[1:])):
            return False
    for j in range(1, len(t.cols)):
        left = t.column_boxes(j)
        right = t.column_boxes(j + 1)
        for s, c_right in right.items():
            c_left = left.get(s + 2)
            if c_left is not None and c_left < c_right:
                return False
    return True


def enumerate_semistandard(n: int, shape: Shape) -> Iterator[Tableau]:
    """Yield every semi-standard tableau of ``shape`` with contents in 1..n+1.

    Deterministic order: depth-first over columns left to right, within a
    column top to bottom, contents ascending (lexicographic in the
    concatenated content sequence).
    """
    cols_meta = shape.columns
    ncols = len(cols_meta)
    if ncols == 0:
        yield Tableau(n, shape, ())
        return

    filled: list[list[int]] = [[] for _ in range(ncols)]
    # support -> content of the previously completed column, for the
    # diagonal constraint against column j we look up support s+2 in j-1
    left_maps: list[dict[int, int]] = [{} for _ in range(ncols)]

    def fill_column(j: int) -> Iterator[Tableau]:
        k, s = cols_meta[j]
        left = left_maps[j]
        col = filled[j]

        def place(row: int) -> Iterator[Tableau]:
            if row > k:
                if j + 1 == ncols:
                    yield Tableau(n, shape, tuple(tuple(c) for c in filled))
                else:
                    left_maps[j + 1] = {
                        box_support(k, s, rr): col[rr - 1] for rr in range(1, k + 1)
                    }
                    yield from fill_column(j + 1)
                return
            lo = col[row - 2] + 1 if row > 1 else 1
            # leave room for the strictly increasing boxes below
            hi = (n + 1) - (k - row)
            cap = left.get(box_support(k, s, row) + 2)
            if cap is not None:
                hi = min(hi, cap)
            for c in range(lo, hi + 1):
                col.append(c)
                yield from place(row + 1)
                col.pop()

        yield from place(1)

    yield from fill_column(0)


def column_gaps(col: Sequence[int]) -> list[tuple[int, int]]:
    """Gap positions of a strictly increasing column.

    A gap sits at row j when the content jumps by more than one from the row
    above (the virtual row 0 has content 0, so content > 1 in row 1 is a
    gap).  Returns (row, size) pairs with size = jump - 1.
    """
    if any(a >= b for a, b in zip(col, col[1:])):
        raise InvalidInput("column contents must be strictly increasing")
    gaps = []
    prev = 0
    for row, c in enumerate(col, start=1):
        if c - prev > 1:
            gaps.append((row, c - prev - 1))
        prev = c
    return gaps


def raise_box(t: Tableau, col: int, row: int, target: int) -> tuple[Tableau, LMonomial]:
    """Replace the content of one box by ``target + 1``.

    Returns the modified tableau together with the expanded loop-root path
    ``A[i, target, s + 2(k-row) + i - 1]`` (``i`` the old content) whose
    inverse relates the two tableau monomials:
    ``monomial_of_tableau(new) == monomial_of_tableau(t) * path.inverse()``.
    """
    from .lweight import expand_lroot_path

    if not 1 <= col <= len(t.cols):
        raise InvalidInput(f"column index {col} out of range")
    k, s = t.shape.columns[col - 1]
    if not 1 <= row <= k:
        raise InvalidInput(f"row index {row} out of range")
    i = t.cols[col - 1][row - 1]
    if i > t.n:
        raise InvalidInput(f"content {i} cannot be raised past {t.n + 1}")
    if not i <= target <= t.n:
        raise InvalidInput(f"target {target} must lie in {i}..{t.n}")
    path = expand_lroot_path(t.n, i, target, s + 2 * (k - row) + i - 1)
    new_cols = list(t.cols)
    new_col = list(new_cols[col - 1])
    new_col[row - 1] = target + 1
    new_cols[col - 1] = tuple(new_col)
    return Tableau(t.n, t.shape, tuple(new_cols)), path
