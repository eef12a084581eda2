"""Exhaustive enumeration of group multiplication tables on {0..n-1}.

Used by the cyclic-order tests: the verdict "every group of order n is
cyclic" is validated against a direct search over all Cayley tables with
0 as identity, rather than trusted from theory.  The search enumerates a
complete-up-to-isomorphism set: every group of order n appears as at
least one finished table (possibly under several labelings).

Constraints applied during the depth-first fill:
  * row/column Latin property (group cancellation),
  * associativity, propagated eagerly whenever any triple has enough
    entries to force or contradict a cell,
  * a symmetry-breaking cap on row 1 only: a freely chosen cell (1, j)
    may not introduce a value larger than max(j, values seen) + 1.  Any
    group can be relabeled to satisfy this (label new elements in first-
    use order), so the cap never loses an isomorphism class.
"""

from __future__ import annotations


def group_tables(n: int):
    """Yield completed Cayley tables as tuples of row tuples."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        yield ((0,),)
        return

    size = n * n
    table: list[int | None] = [None] * size
    row_free = [set(range(n)) for _ in range(n)]
    col_free = [set(range(n)) for _ in range(n)]
    by_value: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    trail: list[tuple[int, int, int]] = []

    def set_cell(a: int, b: int, v: int, queue: list) -> bool:
        idx = a * n + b
        cur = table[idx]
        if cur is not None:
            return cur == v
        if v not in row_free[a] or v not in col_free[b]:
            return False
        table[idx] = v
        row_free[a].discard(v)
        col_free[b].discard(v)
        by_value[v].append((a, b))
        trail.append((a, b, v))
        queue.append((a, b))
        return True

    def propagate(queue: list) -> bool:
        # Close under associativity: (a*b)*c == a*(b*c) whenever two of
        # the participating products are known.
        while queue:
            a, b = queue.pop()
            c = table[a * n + b]
            # (a, b) as the inner pair on the left: ((a*b)=c)*z vs a*(b*z)
            for z in range(n):
                bz = table[b * n + z]
                if bz is None:
                    continue
                cz = table[c * n + z]
                abz = table[a * n + bz]
                if cz is None:
                    if abz is not None and not set_cell(c, z, abz, queue):
                        return False
                elif abz is None:
                    if not set_cell(a, bz, cz, queue):
                        return False
                elif cz != abz:
                    return False
            # (a, b) as the inner pair on the right: x*(a*b) vs (x*a)*b
            for x in range(n):
                xa = table[x * n + a]
                if xa is None:
                    continue
                xc = table[x * n + c]
                xab = table[xa * n + b]
                if xc is None:
                    if xab is not None and not set_cell(x, c, xab, queue):
                        return False
                elif xab is None:
                    if not set_cell(xa, b, xc, queue):
                        return False
                elif xc != xab:
                    return False
            # (a, b) as an outer product: a = x*y gives (x*y)*b vs x*(y*b)
            for x, y in by_value[a]:
                if x == a and y == b:
                    continue
                yb = table[y * n + b]
                if yb is None:
                    continue
                xyb = table[x * n + yb]
                if xyb is None:
                    if not set_cell(x, yb, c, queue):
                        return False
                elif xyb != c:
                    return False
            # (a, b) as an outer product on the other side: b = y*z
            for y, z in by_value[b]:
                ay = table[a * n + y]
                if ay is None:
                    continue
                ayz = table[ay * n + z]
                if ayz is None:
                    if not set_cell(ay, z, c, queue):
                        return False
                elif ayz != c:
                    return False
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            a, b, v = trail.pop()
            table[a * n + b] = None
            row_free[a].add(v)
            col_free[b].add(v)
            by_value[v].pop()

    # identity row and column
    queue: list[tuple[int, int]] = []
    for k in range(n):
        set_cell(0, k, k, queue)
        set_cell(k, 0, k, queue)
    if not propagate(queue):
        return

    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def vmax() -> int:
        # Largest value placed in a body cell (identity row/col excluded).
        best = 1
        for a, b, v in trail:
            if a and b and v > best:
                best = v
        return best

    def dfs(pos: int):
        while pos < len(cells) and table[cells[pos][0] * n + cells[pos][1]] is not None:
            pos += 1
        if pos == len(cells):
            yield tuple(
                tuple(table[i * n + j] for j in range(n)) for i in range(n)
            )
            return
        i, j = cells[pos]
        cap = max(j, vmax()) + 1 if i == 1 else n - 1
        candidates = sorted(row_free[i] & col_free[j])
        for v in candidates:
            if v > cap:
                continue
            mark = len(trail)
            queue = []
            if set_cell(i, j, v, queue) and propagate(queue):
                yield from dfs(pos + 1)
            undo(mark)

    yield from dfs(0)


def element_orders(table: tuple[tuple[int, ...], ...]) -> list[int]:
    n = len(table)
    orders = []
    for a in range(n):
        k, x = 1, a
        while x != 0:
            x = table[x][a]
            k += 1
        orders.append(k)
    return orders


def all_groups_cyclic(n: int) -> bool:
    """True iff every group of order n has an element of order n."""
    return all(max(element_orders(t)) == len(t) for t in group_tables(n))
