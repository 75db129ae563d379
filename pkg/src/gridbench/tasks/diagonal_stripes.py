"""A corner band of anti-diagonal stripes extends across the grid (task 05269061).

The full pattern colors every anti-diagonal by its (row + col) mod 3
class, using three distinct colors. Inputs reveal only a band of
consecutive diagonals anchored in a corner; the output restores the
complete pattern.
"""

from __future__ import annotations

from ..framework import TaskGenerator
from ..grid import Example, Grid

TASK_ID = "05269061"


def generate(size=None, colors=None, bands=None, corner=None, rng=None) -> Example:
    """One square example.

    ``colors`` are the three stripe colors in residue-class order,
    ``bands`` the number of three-diagonal periods revealed (1-3), and
    ``corner`` the band anchor: 0 for top-left, 1 for bottom-right.
    """
    if size is None:
        size = rng.randint(5, 9)
    if not 3 <= size <= 30:
        raise ValueError(f"size {size} outside [3, 30]")
    if colors is None:
        pool = list(range(1, 10))
        for i in range(3):
            j = rng.randint(i, len(pool) - 1)
            pool[i], pool[j] = pool[j], pool[i]
        colors = pool[:3]
    else:
        colors = list(colors)
        if len(colors) != 3 or len(set(colors)) != 3 or not all(
            isinstance(v, int) and 1 <= v <= 9 for v in colors
        ):
            raise ValueError("colors must be three distinct codes in [1, 9]")
    if bands is None:
        bands = rng.randint(1, 3)
    if not 1 <= bands <= 3:
        raise ValueError(f"bands {bands} outside [1, 3]")
    if corner is None:
        corner = rng.randint(0, 1)
    if corner not in (0, 1):
        raise ValueError("corner must be 0 (top-left) or 1 (bottom-right)")

    diag_count = 2 * size - 1
    # Always hide at least one diagonal so the pair shows the rule.
    band = min(3 * bands, diag_count - 1)
    if corner == 0:
        revealed = range(0, band)
    else:
        revealed = range(diag_count - band, diag_count)
    out_rows = [[colors[(r + c) % 3] for c in range(size)] for r in range(size)]
    grid_rows = [
        [out_rows[r][c] if (r + c) in revealed else 0 for c in range(size)]
        for r in range(size)
    ]
    return Example(input=Grid(grid_rows), output=Grid(out_rows))


def verify(grid: Grid) -> Grid:
    """Reference transformation: three row-major passes, each carrying the
    last seen color per (row + col) mod 3 class into every cell.

    Tolerates any grid; inconsistent seeds simply settle on the last
    color encountered per class.
    """
    h, w = grid.height, grid.width
    rows = grid.to_lists()
    carry = [0, 0, 0]
    for _ in range(3):
        for r in range(h):
            for c in range(w):
                value = rows[r][c]
                if value:
                    carry[(r + c) % 3] = value
                rows[r][c] = carry[(r + c) % 3]
    return Grid(rows)


GENERATOR = TaskGenerator.from_callables(TASK_ID, generate, verify)
