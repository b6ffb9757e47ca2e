"""Exact dense linear algebra over Z and F2.

Matrices are lists of row lists of Python ints (arbitrary precision).  Small
and deterministic by design: canonical column-HNF kernels for golden tests,
Smith normal form with divisibility fix-up, and plain GF(2) elimination.
"""


def _identity(k):
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def mat_mul(A, B):
    if not A or not B:
        return [[] for _ in A]
    rows, inner, cols = len(A), len(B), len(B[0])
    assert not A or len(A[0]) == inner
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        for k in range(inner):
            aik = Ai[k]
            if aik:
                Bk = B[k]
                row = out[i]
                for j in range(cols):
                    row[j] += aik * Bk[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A and A[0] else []


def column_hnf(M):
    """Column-style Hermite normal form: returns H = M * V (V unimodular,
    not returned) in column echelon form with positive pivots, entries to the
    right of each pivot reduced, zero columns trimmed.  Canonical for the
    column lattice of M."""
    if not M:
        return []
    rows = len(M)
    cols = [list(col) for col in zip(*M)]  # work on columns
    done = 0
    for r in range(rows):
        # find a column with nonzero entry in row r among cols[done:]
        piv = None
        for ci in range(done, len(cols)):
            if cols[ci][r]:
                piv = ci
                break
        if piv is None:
            continue
        cols[done], cols[piv] = cols[piv], cols[done]
        # gcd out row r across the remaining columns
        for ci in range(done + 1, len(cols)):
            while cols[ci][r]:
                q = cols[done][r] // cols[ci][r]
                cols[done] = [a - q * b for a, b in zip(cols[done], cols[ci])]
                cols[done], cols[ci] = cols[ci], cols[done]
        if cols[done][r] < 0:
            cols[done] = [-a for a in cols[done]]
        # reduce earlier pivot columns... (column HNF: reduce later columns'
        # entries in this row are already zero; reduce previous columns)
        for ci in range(done):
            q = cols[ci][r] // cols[done][r]
            if q:
                cols[ci] = [a - q * b for a, b in zip(cols[ci], cols[done])]
        done += 1
    cols = cols[:done]
    return [list(row) for row in zip(*cols)] if cols else [[] for _ in range(rows)]


def smith_normal_form(M):
    """(U, D, V) with U*M*V = D diagonal, d1 | d2 | ..., U and V unimodular."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    D = [list(r) for r in M]
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):  # row i += q * row j
        D[i] = [a + q * b for a, b in zip(D[i], D[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]

    def add_col(i, j, q):  # col i += q * col j
        for row in D:
            row[i] += q * row[j]
        for row in V:
            row[i] += q * row[j]

    t = 0
    while t < min(rows, cols):
        # choose the nonzero entry of smallest magnitude as pivot
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(D[i][j])
                if v and (best is None or v < best):
                    best = v
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # reduce row/column t; re-pivot on the smallest remainder until clear
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(i, t)
                        dirty = True
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(j, t)
                        dirty = True
            if not dirty and all(D[i][t] == 0 for i in range(t + 1, rows)) \
                    and all(D[t][j] == 0 for j in range(t + 1, cols)):
                break
        t += 1

    # make diagonal nonneg and enforce divisibility d_i | d_{i+1}
    r = min(rows, cols)
    for i in range(r):
        if D[i][i] < 0:
            for j in range(cols):
                D[i][j] = -D[i][j]
            for j in range(rows):
                U[i][j] = -U[i][j]
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if b and (a == 0 or b % a != 0):
                # standard 2x2 trick: bring gcd to position i
                add_col(i, i + 1, 1)
                # re-run elimination on the 2x2 block
                while D[i + 1][i]:
                    q = D[i][i] // D[i + 1][i]
                    add_row(i, i + 1, -q)
                    swap_rows(i, i + 1)
                while D[i][i + 1]:
                    q = D[i][i + 1] // D[i][i]
                    add_col(i + 1, i, -q)
                if D[i][i] < 0:
                    for j in range(cols):
                        D[i][j] = -D[i][j]
                    for j in range(rows):
                        U[i][j] = -U[i][j]
                if D[i + 1][i + 1] < 0:
                    for j in range(cols):
                        D[i + 1][j] = -D[i + 1][j]
                    for j in range(rows):
                        U[i + 1][j] = -U[i + 1][j]
                changed = True
    return U, D, V


def rank_Z(M):
    if not M or not M[0]:
        return 0
    _, D, _ = smith_normal_form(M)
    return sum(1 for i in range(min(len(D), len(D[0]))) if D[i][i])


def kernel_basis_Z(M):
    """Primitive basis of {v : Mv = 0}, columns of the returned matrix, in
    canonical column-HNF form."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if cols == 0:
        return [[] for _ in range(cols)]
    if rows == 0:
        return _identity(cols)
    U, D, V = smith_normal_form(M)
    r = sum(1 for i in range(min(rows, cols)) if D[i][i])
    ker_cols = [[V[i][j] for i in range(cols)] for j in range(r, cols)]
    if not ker_cols:
        return [[] for _ in range(cols)]
    K = [list(row) for row in zip(*ker_cols)]  # cols x (cols - r)
    K = column_hnf(K)
    for row in mat_mul(M, K):
        assert all(v == 0 for v in row)
    return K


def solve_Z(A, b):
    """One integer solution x of A x = b, or None."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    U, D, V = smith_normal_form(A)
    c = mat_vec(U, b)
    y = [0] * cols
    r = min(rows, cols)
    for i in range(rows):
        d = D[i][i] if i < r else 0
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    x = mat_vec(V, y)
    assert mat_vec(A, x) == list(b)
    return x


def solve_f2(A, b):
    """Canonical solution (free variables = 0) of A x = b over F2, or None."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [[v & 1 for v in row] + [bv & 1] for row, bv in zip(A, b)]
    pivots = []
    rr = 0
    for c in range(cols):
        piv = next((i for i in range(rr, rows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[rr], aug[piv] = aug[piv], aug[rr]
        for i in range(rows):
            if i != rr and aug[i][c]:
                aug[i] = [(x ^ y) for x, y in zip(aug[i], aug[rr])]
        pivots.append(c)
        rr += 1
        if rr == rows:
            break
    for i in range(rr, rows):
        if aug[i][cols]:
            return None
    x = [0] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    for row, bv in zip(A, b):
        assert (sum(a * v for a, v in zip(row, x)) - bv) % 2 == 0
    return x


def lattices_equal(M1, M2):
    """Do the columns of M1 and M2 span the same sublattice of Z^rows?"""
    return column_hnf(M1) == column_hnf(M2)
