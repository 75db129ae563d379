"""Pink rectangles gain a green border and yellow holes (task 543a7ed5).

Inputs are square cyan grids holding a few non-overlapping pink
rectangles, some hollowed out. The transformation surrounds each
rectangle with a one-pixel green ring and shades every hollow cell
yellow.

Layout parameters are positional: the first ``boxes`` entries of
rows/cols/widths/heights/colors describe the rectangles, any further
entries describe holes carved out of them. On the task's own
distribution the rectangles are always pink and the holes yellow, so
this positional split coincides with the color split.
"""

from __future__ import annotations

from ..errors import GenerationError, VerifierDomainError
from ..framework import MAX_ATTEMPTS, TaskGenerator, overlaps
from ..grid import CYAN, GREEN, PINK, YELLOW, Example, Grid, TaskSet, grids

TASK_ID = "543a7ed5"

# Minimum clearance between rectangles; keeps each green ring clear of
# the next rectangle's pink cells.
_SPACING = 2


def generate(
    rows=None,
    cols=None,
    widths=None,
    heights=None,
    colors=None,
    boxes=3,
    size=15,
    rng=None,
) -> Example:
    """One example; layout is randomized unless ``rows`` is supplied.

    When a layout is given, all four geometry lists must come together
    and describe ``boxes`` rectangles followed by their holes; ``colors``
    may be omitted (pink rectangles, yellow holes). When the layout is
    randomized, ``colors`` may still be supplied as exactly one color
    per rectangle.
    """
    if boxes < 1:
        raise ValueError("boxes must be positive")
    supplied = [rows, cols, widths, heights]
    if rows is None:
        if any(v is not None for v in supplied):
            raise ValueError("rows, cols, widths and heights must be supplied together")
        rows, cols, widths, heights, colors = _sample_layout(boxes, size, colors, rng)
    else:
        if any(v is None for v in supplied):
            raise ValueError("rows, cols, widths and heights must be supplied together")
        colors = _checked_layout(rows, cols, widths, heights, colors, boxes, size)

    grid, out = grids(size, size, CYAN)
    for i, (row, col, width, height, color) in enumerate(
        zip(rows, cols, widths, heights, colors)
    ):
        is_box = i < boxes
        for r in range(row - 1, row + height + 1):
            for c in range(col - 1, col + width + 1):
                if is_box:
                    out[r][c] = GREEN
                if r < row or r >= row + height or c < col or c >= col + width:
                    continue
                grid[r][c] = color if is_box else CYAN
                out[r][c] = color
    return Example(input=grid, output=out)


def _check_colors(colors) -> None:
    for i, color in enumerate(colors):
        if not isinstance(color, int) or not 0 <= color <= 9:
            raise ValueError(f"color {i} is {color!r}, not a color code in [0, 9]")


def _sample_layout(boxes, size, box_colors, rng):
    if rng is None:
        raise ValueError("layout randomization needs an rng stream")
    if box_colors is not None:
        box_colors = list(box_colors)
        if len(box_colors) != boxes:
            raise ValueError(f"expected {boxes} box colors, got {len(box_colors)}")
        _check_colors(box_colors)
    for _ in range(MAX_ATTEMPTS):
        try:
            widths, heights = rng.randints(2, 7, boxes), rng.randints(2, 7, boxes)
            rows = [rng.randint(1, size - height - 1) for height in heights]
            cols = [rng.randint(1, size - width - 1) for width in widths]
        except ValueError:
            # A box cannot fit on this grid size; counts as a failed attempt.
            continue
        if overlaps(rows, cols, widths, heights, _SPACING):
            continue
        colors = list(box_colors) if box_colors is not None else [PINK] * boxes
        hole_rows, hole_cols, hole_widths, hole_heights = [], [], [], []
        for row, col, width, height in zip(rows, cols, widths, heights):
            w, t = rng.randint(0, width - 2), rng.randint(0, height - 2)
            if not w or not t:
                continue
            hole_rows.append(row + rng.randint(1, height - t - 1))
            hole_cols.append(col + rng.randint(1, width - w - 1))
            hole_widths.append(w)
            hole_heights.append(t)
        if sum(w * t for w, t in zip(hole_widths, hole_heights)) < 2 * boxes:
            continue
        return (
            rows + hole_rows,
            cols + hole_cols,
            widths + hole_widths,
            heights + hole_heights,
            colors + [YELLOW] * len(hole_rows),
        )
    raise GenerationError(
        f"task {TASK_ID}: no layout satisfied the constraints "
        f"after {MAX_ATTEMPTS} attempts (boxes={boxes}, size={size})"
    )


def _checked_layout(rows, cols, widths, heights, colors, boxes, size):
    n = len(rows)
    if not (len(cols) == len(widths) == len(heights) == n):
        raise ValueError("layout lists must have equal lengths")
    if n < boxes:
        raise ValueError(f"layout provides {n} entries for {boxes} boxes")
    if colors is None:
        colors = [PINK] * boxes + [YELLOW] * (n - boxes)
    else:
        colors = list(colors)
        if len(colors) != n:
            raise ValueError(f"expected {n} colors, got {len(colors)}")
        _check_colors(colors)
    for i in range(n):
        if widths[i] < 1 or heights[i] < 1:
            raise ValueError(f"layout entry {i} has empty extent")
    # Rectangles keep a one-cell margin on every side for the ring.
    for i in range(boxes):
        if (
            rows[i] < 1
            or cols[i] < 1
            or rows[i] + heights[i] > size - 1
            or cols[i] + widths[i] > size - 1
        ):
            raise ValueError(f"box {i} leaves no ring margin on a {size}x{size} grid")
    if overlaps(rows[:boxes], cols[:boxes], widths[:boxes], heights[:boxes], _SPACING):
        raise ValueError(f"boxes come closer than spacing {_SPACING}")
    # Holes sit strictly inside a rectangle, one cell clear of its edge.
    hole_area = 0
    for i in range(boxes, n):
        inside = any(
            rows[j] + 1 <= rows[i]
            and rows[i] + heights[i] <= rows[j] + heights[j] - 1
            and cols[j] + 1 <= cols[i]
            and cols[i] + widths[i] <= cols[j] + widths[j] - 1
            for j in range(boxes)
        )
        if not inside:
            raise ValueError(f"hole {i} is not strictly inside any box")
        hole_area += widths[i] * heights[i]
    if hole_area < 2 * boxes:
        raise ValueError(f"total hole area {hole_area} below the minimum {2 * boxes}")
    return colors


def verify(grid: Grid) -> Grid:
    """Reference transformation: ring each pink rectangle, shade its holes.

    Accepts cyan/pink grids whose pink cells form axis-aligned rectangles
    (possibly hollowed) that keep one cell clear of the grid edge and two
    cells clear of each other; anything else raises VerifierDomainError.
    """
    h, w = grid.height, grid.width
    for r in range(h):
        for c in range(w):
            if grid[r][c] not in (CYAN, PINK):
                raise VerifierDomainError(
                    f"cell ({r}, {c}) holds {grid[r][c]}, expected cyan or pink"
                )
    bounds = _pink_components(grid)
    if bounds:
        if overlaps(
            [b[0] for b in bounds],
            [b[1] for b in bounds],
            [b[3] - b[1] + 1 for b in bounds],
            [b[2] - b[0] + 1 for b in bounds],
            _SPACING,
        ):
            raise VerifierDomainError(f"pink rectangles come closer than spacing {_SPACING}")
    out = grid.copy()
    for r0, c0, r1, c1 in bounds:
        if r0 < 1 or c0 < 1 or r1 > h - 2 or c1 > w - 2:
            raise VerifierDomainError("pink rectangle touches the grid edge")
        for c in range(c0, c1 + 1):
            if grid[r0][c] != PINK or grid[r1][c] != PINK:
                raise VerifierDomainError("pink component is not rectangular")
        for r in range(r0, r1 + 1):
            if grid[r][c0] != PINK or grid[r][c1] != PINK:
                raise VerifierDomainError("pink component is not rectangular")
        for r in range(r0, r1 + 1):
            for c in range(c0, c1 + 1):
                if grid[r][c] == CYAN:
                    out[r][c] = YELLOW
        for c in range(c0 - 1, c1 + 2):
            out[r0 - 1][c] = GREEN
            out[r1 + 1][c] = GREEN
        for r in range(r0 - 1, r1 + 2):
            out[r][c0 - 1] = GREEN
            out[r][c1 + 1] = GREEN
    return out


def _pink_components(grid: Grid) -> list[tuple[int, int, int, int]]:
    """Bounding boxes (r0, c0, r1, c1) of 4-connected pink components."""
    h, w = grid.height, grid.width
    seen = [[False] * w for _ in range(h)]
    bounds = []
    for r in range(h):
        for c in range(w):
            if grid[r][c] != PINK or seen[r][c]:
                continue
            seen[r][c] = True
            stack = [(r, c)]
            r0 = r1 = r
            c0 = c1 = c
            while stack:
                rr, cc = stack.pop()
                r0, r1 = min(r0, rr), max(r1, rr)
                c0, c1 = min(c0, cc), max(c1, cc)
                for nr, nc in ((rr - 1, cc), (rr + 1, cc), (rr, cc - 1), (rr, cc + 1)):
                    if 0 <= nr < h and 0 <= nc < w and grid[nr][nc] == PINK and not seen[nr][nc]:
                        seen[nr][nc] = True
                        stack.append((nr, nc))
            bounds.append((r0, c0, r1, c1))
    return bounds


def validate() -> TaskSet:
    """Golden fixture: parameters that reproduce the original task pairs."""
    train = [
        generate(
            rows=[2, 4, 10, 3],
            cols=[8, 3, 5, 9],
            widths=[4, 2, 4, 2],
            heights=[5, 2, 4, 3],
            colors=[6, 6, 6, 4],
        ),
        generate(
            rows=[1, 3, 8, 4, 9],
            cols=[8, 2, 8, 3, 9],
            widths=[3, 4, 6, 1, 4],
            heights=[3, 4, 6, 2, 4],
            colors=[6, 6, 6, 4, 4],
        ),
    ]
    test = [
        generate(
            rows=[2, 3, 11, 4, 4, 12],
            cols=[9, 2, 4, 10, 3, 6],
            widths=[3, 4, 7, 1, 2, 2],
            heights=[6, 4, 3, 3, 2, 1],
            colors=[6, 6, 6, 4, 4, 4],
        )
    ]
    return TaskSet(train=train, test=test)


GENERATOR = TaskGenerator.from_callables(TASK_ID, generate, verify, validate)
