"""Small exact linear algebra mod p (dense row-list matrices)."""


def rref(rows, p):
    """Reduced row echelon form. Returns (new_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c] % p, p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c] % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows, p):
    return len(rref(rows, p)[1])


def nullspace(rows, p, ncols=None):
    """Basis of the right kernel {v : rows @ v = 0}, as a list of vectors."""
    if not rows:
        if ncols is None:
            return []
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows, p)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, c in enumerate(pivots):
            v[c] = (-red[r][free]) % p
        basis.append(v)
    return basis


def solve(rows, rhs, p):
    """One solution of rows @ x = rhs, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b % p] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return x


def inverse(rows, p):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(r) + [1 if j == i else 0 for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(aug, p)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def mat_mul(a, b, p):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            v = ai[t] % p
            if v:
                bt = b[t]
                for j in range(m):
                    oi[j] = (oi[j] + v * bt[j]) % p
    return out


def mat_vec(a, v, p):
    return [sum(x * y for x, y in zip(row, v)) % p for row in a]
