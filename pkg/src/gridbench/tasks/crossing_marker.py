"""A row/column crossing gets an eight-cell yellow halo (task 67a423a3).

One full horizontal line and one full vertical line of different colors
cross at an interior cell; the eight neighbors of the crossing turn
yellow while the crossing itself keeps its color.
"""

from __future__ import annotations

from ..errors import VerifierDomainError
from ..framework import TaskGenerator
from ..grid import YELLOW, Example, Grid

TASK_ID = "67a423a3"

# Line colors: anything except black (background) and yellow (the halo).
_LINE_COLORS = (1, 2, 3, 5, 6, 7, 8, 9)


def generate(size=None, row=None, col=None, row_color=None, col_color=None, rng=None) -> Example:
    """One square example with a single interior crossing."""
    if size is None:
        size = rng.randint(6, 12)
    if not 3 <= size <= 30:
        raise ValueError(f"size {size} outside [3, 30]")
    if row is None:
        row = rng.randint(1, size - 2)
    if col is None:
        col = rng.randint(1, size - 2)
    if not (1 <= row <= size - 2 and 1 <= col <= size - 2):
        raise ValueError("crossing must sit strictly inside the grid")
    if row_color is None:
        row_color = _LINE_COLORS[rng.randint(0, len(_LINE_COLORS) - 1)]
    if col_color is None:
        remaining = [v for v in _LINE_COLORS if v != row_color]
        col_color = remaining[rng.randint(0, len(remaining) - 1)]
    for name, value in (("row_color", row_color), ("col_color", col_color)):
        if value not in _LINE_COLORS:
            raise ValueError(f"{name} must be a color in {_LINE_COLORS}")
    if row_color == col_color:
        raise ValueError("row_color and col_color must differ")

    grid_rows = [[0] * size for _ in range(size)]
    for c in range(size):
        grid_rows[row][c] = row_color
    for r in range(size):
        grid_rows[r][col] = col_color
    out_rows = [list(r) for r in grid_rows]
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            if dr or dc:
                out_rows[row + dr][col + dc] = YELLOW
    return Example(input=Grid(grid_rows), output=Grid(out_rows))


def verify(grid: Grid) -> Grid:
    """Reference transformation: halo the crossing.

    Scans interior cells in row-major order and keeps the last one whose
    four orthogonal neighbors are all nonzero, then paints its eight
    surrounding cells yellow.
    """
    h, w = grid.height, grid.width
    found = None
    for r in range(1, h - 1):
        for c in range(1, w - 1):
            if grid[r][c - 1] and grid[r][c + 1] and grid[r - 1][c] and grid[r + 1][c]:
                found = (r, c)
    if found is None:
        raise VerifierDomainError("no cell has four nonzero orthogonal neighbors")
    out = grid.copy()
    r, c = found
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            if dr or dc:
                out[r + dr][c + dc] = YELLOW
    return out


GENERATOR = TaskGenerator.from_callables(TASK_ID, generate, verify)
