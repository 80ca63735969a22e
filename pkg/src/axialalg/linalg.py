"""Exact linear algebra over an arbitrary scalar field.

Matrices are lists of rows of scalars.  Elimination uses a fixed pivot order
(first nonzero entry scanning columns left to right, rows in input order), so
every kernel/echelon basis is reproducible across runs.  Over Q the scalars
are Fractions, which keep themselves in lowest terms at every step; this is
what controls coefficient growth at the sizes handled here.
"""

from __future__ import annotations


def zeros(rows, cols, field):
    z = field.zero
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(n, field):
    M = zeros(n, n, field)
    one = field.one
    for i in range(n):
        M[i][i] = one
    return M


def mat_vec(M, v, field):
    z = field.zero
    out = []
    for row in M:
        s = z
        for a, x in zip(row, v):
            if a != 0 and x != 0:
                s = s + a * x
        out.append(s)
    return out


def mat_mul(A, B, field):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    z = field.zero
    out = zeros(n, m, field)
    for i in range(n):
        Ai = A[i]
        for j in range(m):
            s = z
            for t in range(k):
                a = Ai[t]
                if a != 0:
                    s = s + a * B[t][j]
            out[i][j] = s
    return out


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def transpose(M):
    return [list(col) for col in zip(*M)]


def scale_vec(c, v):
    return [c * x for x in v]


def add_vec(u, v):
    return [a + b for a, b in zip(u, v)]


def sub_vec(u, v):
    return [a - b for a, b in zip(u, v)]


def is_zero_vec(v):
    return all(x == 0 for x in v)


def rref(M, field):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    R = [list(row) for row in M]
    nrows = len(R)
    ncols = len(R[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        src = None
        for i in range(r, nrows):
            if R[i][c] != 0:
                src = i
                break
        if src is None:
            continue
        R[r], R[src] = R[src], R[r]
        inv = field.one / R[r][c]
        R[r] = [inv * x for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R[:r], pivots


def rank(M, field):
    rows, _ = rref(M, field)
    return len(rows)


def kernel(M, field):
    """Deterministic basis of the null space of M (as column vectors)."""
    ncols = len(M[0]) if M else 0
    rows, pivots = rref(M, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    z = field.zero
    one = field.one
    for f in free:
        v = [z] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return basis


def solve(M, b, field):
    """One exact solution of M x = b, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    ncols = len(M[0]) if M else 0
    aug = [list(row) + [bv] for row, bv in zip(M, b)]
    rows, pivots = rref(aug, field)
    x = [field.zero] * ncols
    for row, p in zip(rows, pivots):
        if p == ncols:
            return None
        x[p] = row[ncols]
    return x


def invert(M, field):
    """Inverse of a square matrix; None if singular."""
    n = len(M)
    aug = [list(row) + list(idrow) for row, idrow in zip(M, identity(n, field))]
    rows, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in rows[:n]]


def span_basis(vectors, field):
    """Canonical (RREF) basis of the span of the given vectors."""
    vecs = [v for v in vectors if not is_zero_vec(v)]
    if not vecs:
        return []
    rows, _ = rref(vecs, field)
    return rows


def in_span(basis_rref, v, field):
    """Membership test against an RREF basis (as produced by span_basis)."""
    w = list(v)
    for row in basis_rref:
        p = next(i for i, x in enumerate(row) if x != 0)
        if w[p] != 0:
            f = w[p]
            w = [x - f * y for x, y in zip(w, row)]
    return is_zero_vec(w)


def extend_span(basis_rref, v, field):
    """Insert v into an RREF basis; returns (new_basis, grew)."""
    if in_span(basis_rref, v, field):
        return basis_rref, False
    return span_basis(basis_rref + [list(v)], field), True


def intersect_spans(basis_a, basis_b, field):
    """Basis of span(A) ∩ span(B), both given as lists of vectors."""
    if not basis_a or not basis_b:
        return []
    n = len(basis_a[0])
    # Columns: coefficients on A-vectors then B-vectors; kernel rows give
    # combinations with sum_a c_i A_i = sum_b d_j B_j.
    M = []
    for k in range(n):
        M.append([a[k] for a in basis_a] + [-b[k] for b in basis_b])
    combos = kernel(M, field)
    vecs = []
    for combo in combos:
        v = [field.zero] * n
        for c, a in zip(combo[: len(basis_a)], basis_a):
            if c != 0:
                v = [x + c * y for x, y in zip(v, a)]
        vecs.append(v)
    return span_basis(vecs, field)


# ---------------------------------------------------------------------------
# Polynomials (coefficient lists, low degree first) and minimal polynomials
# ---------------------------------------------------------------------------


def poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def poly_divmod(num, den, field):
    num = list(num)
    den = poly_trim(list(den))
    if len(den) == 1 and den[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero] * max(1, len(num) - len(den) + 1)
    r = num
    dlead = den[-1]
    while len(r) >= len(den) and not all(x == 0 for x in r):
        r = poly_trim(r)
        if len(r) < len(den):
            break
        shift = len(r) - len(den)
        c = r[-1] / dlead
        q[shift] = q[shift] + c
        for i, d in enumerate(den):
            r[shift + i] = r[shift + i] - c * d
        r = poly_trim(r)
    return poly_trim(q), poly_trim(r)


def poly_gcd(a, b, field):
    """Monic gcd of two polynomials."""
    a = poly_trim(list(a))
    b = poly_trim(list(b))
    while not (len(b) == 1 and b[0] == 0):
        _, r = poly_divmod(a, b, field)
        a, b = b, r
    lead = a[-1]
    if lead != field.one and lead != 0:
        a = [x / lead for x in a]
    return a


def poly_derivative(p, field):
    if len(p) <= 1:
        return [field.zero]
    return poly_trim([field.scalar(i) * p[i] for i in range(1, len(p))])


def poly_is_squarefree(p, field):
    g = poly_gcd(p, poly_derivative(p, field), field)
    return len(g) == 1


def poly_mul(a, b, field):
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def minimal_polynomial(M, field):
    """Monic minimal polynomial of a square matrix, low-degree coefficients first.

    Krylov-style: stack vec(M^0), vec(M^1), ... until the new power is a
    linear combination of the previous ones.
    """
    n = len(M)
    powers = [identity(n, field)]
    vecs = [[x for row in powers[0] for x in row]]
    while True:
        nxt = mat_mul(powers[-1], M, field)
        target = [x for row in nxt for x in row]
        # Solve sum c_i vecs[i] = target.
        cols = [[vecs[i][k] for i in range(len(vecs))] for k in range(n * n)]
        sol = solve(cols, target, field)
        if sol is not None:
            coeffs = [-c for c in sol] + [field.one]
            return poly_trim(coeffs)
        powers.append(nxt)
        vecs.append(target)


def strip_known_roots(m, field):
    """Divide out t and (t-1) from a polynomial as often as they divide.

    Returns (remainder, mult_of_t, mult_of_t_minus_1).
    """
    m = poly_trim(list(m))
    k0 = 0
    while len(m) > 1 and m[0] == 0:
        m = m[1:]
        k0 += 1
    k1 = 0
    one = field.one
    while True:
        total = field.zero
        for c in m:
            total = total + c
        if len(m) > 1 and total == 0:
            m, _ = poly_divmod(m, [-one, one], field)
            k1 += 1
        else:
            break
    return m, k0, k1
