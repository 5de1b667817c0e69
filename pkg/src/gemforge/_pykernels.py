"""Pure-Python kernels. Same contract as the compiled ``_ckernels`` module."""


def component_labels(table, colours):
    rows = [list(table[c]) for c in colours]
    n = len(rows[0])
    labels = [-1] * n
    count = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = count
        stack = [start]
        while stack:
            v = stack.pop()
            for row in rows:
                w = row[v]
                if labels[w] < 0:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return [int(x) for x in labels], count


def _propagate(rows_a, rows_b, phi, seed_a, seed_b, n):
    f = [-1] * n
    used = [False] * n
    f[seed_a] = seed_b
    used[seed_b] = True
    queue = [seed_a]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        fv = f[v]
        for k in range(4):
            w = rows_a[k][v]
            target = rows_b[phi[k]][fv]
            fw = f[w]
            if fw < 0:
                if used[target]:
                    return None
                f[w] = target
                used[target] = True
                queue.append(w)
            elif fw != target:
                return None
    if head != n:
        return None
    return f


def propagate(table_a, table_b, phi, seed_a, seed_b):
    rows_a = [list(map(int, r)) for r in table_a]
    rows_b = [list(map(int, r)) for r in table_b]
    return _propagate(rows_a, rows_b, list(phi), int(seed_a), int(seed_b), len(rows_a[0]))


def search(table_a, table_b, phis, seed_a):
    """First (phi index, image of seed_a, f) in (phi, image) order, or None."""
    rows_a = [list(map(int, r)) for r in table_a]
    rows_b = [list(map(int, r)) for r in table_b]
    n = len(rows_a[0])
    for idx, phi in enumerate(phis):
        phi = list(phi)
        for target in range(n):
            f = _propagate(rows_a, rows_b, phi, seed_a, target, n)
            if f is not None:
                return idx, target, f
    return None
