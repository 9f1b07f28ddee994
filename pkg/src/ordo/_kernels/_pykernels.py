"""Pure-Python kernels. Same signatures and results as the compiled module."""


def closure(rows, n):
    """Reachability closure of bitmask rows; the diagonal is always cleared."""
    out = list(rows)
    for k in range(n):
        bit = 1 << k
        row_k = out[k]
        for i in range(n):
            if out[i] & bit:
                out[i] |= row_k
    return [row & ~(1 << i) for i, row in enumerate(out)]


def widest_paths(weights, n):
    """All-pairs max-min path strength over a flat ``n*n`` weight list.

    A weight of 0 means no edge. Diagonal entries of the result are 0.
    """
    p = [weights[i * n:(i + 1) * n] for i in range(n)]
    for i in range(n):
        p[i][i] = 0
    for k in range(n):
        row_k = p[k]
        for i in range(n):
            if i == k:
                continue
            row_i = p[i]
            via = row_i[k]
            if not via:
                continue
            for j in range(n):
                if j == i or j == k:
                    continue
                w = row_k[j]
                if w > via:
                    w = via
                if w > row_i[j]:
                    row_i[j] = w
    return [w for row in p for w in row]


def count_extensions(preds, n):
    """Count orderings where every ``j`` in ``preds[i]`` comes before ``i``."""
    size = 1 << n
    cnt = [0] * size
    cnt[0] = 1
    for mask in range(size):
        c = cnt[mask]
        if not c:
            continue
        for i in range(n):
            bit = 1 << i
            if not mask & bit and preds[i] & ~mask == 0:
                cnt[mask | bit] += c
    return cnt[size - 1]


def kemeny_table(counts, n):
    """Best internal agreement score for every subset of alternatives.

    ``table[S]`` is the maximum over orderings of ``S`` of the summed
    ``counts[x*n + y]`` for ``x`` placed above ``y``.
    """
    size = 1 << n
    table = [0] * size
    for s in range(1, size):
        best = -1
        for x in range(n):
            if not s >> x & 1:
                continue
            rest = s & ~(1 << x)
            gain = 0
            base = x * n
            for y in range(n):
                if rest >> y & 1:
                    gain += counts[base + y]
            total = gain + table[rest]
            if total > best:
                best = total
        table[s] = best
    return table
