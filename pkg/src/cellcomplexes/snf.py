"""Smith normal form over the integers, with transforms.

Exact arbitrary-precision arithmetic throughout.  Pivoting picks the
entry of smallest nonzero magnitude and moves it into place, which keeps
coefficient growth tame on the small dense matrices this library
produces.  The returned factorization satisfies ``U @ M @ V == diag`` with
``U``, ``V`` unimodular, and the inverse transforms are tracked alongside.
"""

from __future__ import annotations

from dataclasses import dataclass


def _identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _tolists(matrix):
    return [[int(v) for v in row] for row in matrix]


def matmul(a, b):
    """Plain integer matrix product on lists of lists."""
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for k, v in enumerate(row):
            if v:
                brow = b[k]
                for j in range(cols):
                    acc[j] += v * brow[j]
        out.append(acc)
    return out


@dataclass
class SmithNormalForm:
    diagonal: list  # length min(m, n); nonzero entries first, each dividing the next
    rank: int
    u: list
    u_inv: list
    v: list
    v_inv: list


def smith_normal_form(matrix) -> SmithNormalForm:
    a = _tolists(matrix)
    m = len(a)
    n = len(a[0]) if m else 0
    u, u_inv = _identity(m), _identity(m)
    v, v_inv = _identity(n), _identity(n)

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in u_inv:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, q):  # row i += q * row j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]
        for r in u_inv:
            r[j] -= q * r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in u_inv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def col_add(i, j, q):  # col i += q * col j
        for r in a:
            r[i] += q * r[j]
        for r in v:
            r[i] += q * r[j]
        v_inv[j] = [x - q * y for x, y in zip(v_inv[j], v_inv[i])]

    def pivot_to(t):
        """Move the smallest-magnitude nonzero of a[t:, t:] to (t, t)."""
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if abs(x) == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            return False
        _, i, j = best
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        if a[t][t] < 0:
            row_neg(t)
        return True

    t = 0
    while t < min(m, n):
        if not pivot_to(t):
            break
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        row_add(i, t, -q)
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        col_add(j, t, -q)
            if any(a[i][t] for i in range(t + 1, m)) or \
               any(a[t][j] for j in range(t + 1, n)):
                pivot_to(t)  # a remainder became the new, smaller pivot
                continue
            bad = None
            d = a[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % d:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        t += 1

    diagonal = [a[i][i] for i in range(min(m, n))]
    rank = sum(1 for d in diagonal if d)
    return SmithNormalForm(diagonal, rank, u, u_inv, v, v_inv)


def invariant_factors(matrix) -> list:
    return [d for d in smith_normal_form(matrix).diagonal if d]


def matrix_rank(matrix) -> int:
    return smith_normal_form(matrix).rank


def kernel_basis(matrix) -> list:
    """Columns spanning the integer kernel lattice (saturated)."""
    snf = smith_normal_form(matrix)
    n = len(snf.v)
    return [[snf.v[i][j] for i in range(n)] for j in range(snf.rank, n)]


def solve_columns(basis_cols, target) -> list:
    """Integer coordinates of each target column in the span of basis_cols.

    ``basis_cols`` must be independent and span a saturated sublattice
    containing every column of ``target``; raises ArithmeticError when a
    column is not in the span.
    """
    n = len(basis_cols[0]) if basis_cols else len(target)
    k = len(basis_cols)
    mat = [[basis_cols[j][i] for j in range(k)] for i in range(n)]
    snf = smith_normal_form(mat)
    if snf.rank != k:
        raise ArithmeticError("basis columns are not independent")
    ub = matmul(snf.u, target)
    cols = len(target[0]) if target else 0
    coords = []
    for c in range(cols):
        y = [ub[i][c] for i in range(n)]
        if any(y[i] for i in range(k, n)):
            raise ArithmeticError("target column outside the basis span")
        z = []
        for i in range(k):
            d = snf.diagonal[i]
            if y[i] % d:
                raise ArithmeticError("target column outside the basis lattice")
            z.append(y[i] // d)
        coords.append(z)
    vz = matmul(snf.v, [[z[i] for z in coords] for i in range(k)])
    return vz  # k x cols
