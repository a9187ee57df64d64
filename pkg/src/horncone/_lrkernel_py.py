"""Pure-Python LR skew tableau enumerator (fallback for ``_lrkernel``)."""


def lr_fillings(outer, inner, max_entry):
    """Count LR fillings of ``outer/inner`` grouped by content.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so the lattice condition can be checked on every
    placement.  Entries in row ``r`` (0-based) never exceed ``r + 1``.
    Returns ``{content: count}`` with contents as canonical tuples.
    """
    rows = len(outer)
    inner = tuple(inner) + (0,) * (rows - len(inner))
    cells = []
    for r in range(rows):
        for c in range(outer[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))
    result = {}
    if not cells:
        result[()] = 1
        return result

    width = outer[0] if rows else 0
    grid = [[0] * width for _ in range(rows)]
    counts = [0] * (rows + 2)
    ncells = len(cells)
    # static per-cell data: (row, col, has_above, has_right)
    info = []
    for r, c in cells:
        has_above = r > 0 and c >= inner[r - 1]
        has_right = c + 1 < outer[r]
        info.append((r, c, has_above, has_right))

    def bounds(k):
        r, c, has_above, has_right = info[k]
        lo = grid[r - 1][c] + 1 if has_above else 1
        hi = r + 1
        if max_entry < hi:
            hi = max_entry
        if has_right and grid[r][c + 1] < hi:
            hi = grid[r][c + 1]
        return lo, hi

    def rec(k):
        if k == ncells:
            top = 1
            while top <= rows and counts[top]:
                top += 1
            key = tuple(counts[1:top])
            result[key] = result.get(key, 0) + 1
            return
        r, c = info[k][0], info[k][1]
        lo, hi = bounds(k)
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            grid[r][c] = v
            counts[v] += 1
            rec(k + 1)
            counts[v] -= 1
        grid[r][c] = 0

    rec(0)
    return result
