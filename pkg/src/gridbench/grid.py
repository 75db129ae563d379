"""Grids, the ten-color palette, and example/task containers.

A grid is a rectangular array of color codes 0-9 with at most 30 cells
per side, the native shape of ARC-style task files. Rows are exposed
directly, so generator code can write cells with ``g[r][c] = color``
while a grid is being built; once a grid has been handed out inside an
:class:`Example` it is treated as a value and must not be mutated.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_SIDE = 30

# Canonical palette: name -> color code, as used by ARC task files.
PALETTE = {
    "black": 0,
    "blue": 1,
    "red": 2,
    "green": 3,
    "yellow": 4,
    "grey": 5,
    "pink": 6,
    "orange": 7,
    "cyan": 8,
    "maroon": 9,
}

BLACK, BLUE, RED, GREEN, YELLOW, GREY, PINK, ORANGE, CYAN, MAROON = range(10)


def named_color(name: str) -> int:
    """Color code for one of the ten canonical palette names."""
    try:
        return PALETTE[name]
    except KeyError:
        raise ValueError(f"unknown color name {name!r}") from None


def _check_color(value: object) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= 9:
        raise ValueError(f"{value!r} is not a color code in [0, 9]")
    return value


class Grid:
    """Rectangular grid of color codes with value equality.

    Construction copies and validates the given rows; indexing returns
    the live row list, so ``g[r][c]`` both reads and writes a cell.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows) -> None:
        if not isinstance(rows, (list, tuple)) or not rows:
            raise ValueError("grid needs at least one row")
        height = len(rows)
        first = rows[0]
        if not isinstance(first, (list, tuple)):
            raise ValueError("grid rows must be lists of color codes")
        width = len(first)
        if not 1 <= height <= MAX_SIDE or not 1 <= width <= MAX_SIDE:
            raise ValueError(
                f"grid dimensions {height}x{width} outside [1, {MAX_SIDE}]"
            )
        copied = []
        for r, row in enumerate(rows):
            if not isinstance(row, (list, tuple)) or len(row) != width:
                raise ValueError(f"row {r} is not a list of {width} cells")
            for c, value in enumerate(row):
                if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= 9:
                    raise ValueError(
                        f"cell ({r}, {c}) holds {value!r}, not a color code in [0, 9]"
                    )
            copied.append(list(row))
        self._rows = copied

    @property
    def height(self) -> int:
        return len(self._rows)

    @property
    def width(self) -> int:
        return len(self._rows[0])

    def __getitem__(self, r: int) -> list[int]:
        return self._rows[r]

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grid):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self) -> str:
        return f"Grid({self._rows!r})"

    def copy(self) -> "Grid":
        return Grid(self._rows)

    def to_lists(self) -> list[list[int]]:
        """Plain list-of-lists copy, e.g. for JSON serialization."""
        return [list(row) for row in self._rows]


def grids(height: int, width: int, fill: int) -> tuple[Grid, Grid]:
    """Two independent grids of one shape, every cell set to ``fill``.

    The pair shares no storage: mutating one never affects the other.
    """
    if not 1 <= height <= MAX_SIDE or not 1 <= width <= MAX_SIDE:
        raise ValueError(f"grid dimensions {height}x{width} outside [1, {MAX_SIDE}]")
    _check_color(fill)
    return (
        Grid([[fill] * width for _ in range(height)]),
        Grid([[fill] * width for _ in range(height)]),
    )


def render_text(g: Grid) -> str:
    """One line of concatenated digits per row, newline-terminated."""
    return "".join("".join(str(v) for v in row) + "\n" for row in g)


def parse_text(text: str) -> Grid:
    """Inverse of :func:`render_text`."""
    lines = text.splitlines()
    rows = []
    for line in lines:
        if not line.isdigit():
            raise ValueError(f"line {line!r} is not a run of digits")
        rows.append([int(ch) for ch in line])
    return Grid(rows)


@dataclass(frozen=True)
class Example:
    """One input/output grid pair consistent with a task transformation."""

    input: Grid
    output: Grid


@dataclass(frozen=True)
class TaskSet:
    """Ordered train and test examples for one task."""

    train: tuple[Example, ...]
    test: tuple[Example, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "train", tuple(self.train))
        object.__setattr__(self, "test", tuple(self.test))
        if not self.train or not self.test:
            raise ValueError("train and test must both be non-empty")
