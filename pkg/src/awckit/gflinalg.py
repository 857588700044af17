"""Dense linear algebra and polynomial arithmetic over GF(p^k).

Matrices are numpy int64 arrays of field-element encodings (see gf).
Matrix products route through the regular-representation blow-up: each
field element becomes a k x k matrix over GF(p), and the blown-up
integer product is done by BLAS in float64 (entries stay far below
2^53, so this is exact) and reduced mod p.

Row operations (echelon forms, nullspaces, solves) use the field's
exp/log tables elementwise; the python-level loop is only over pivots.

Polynomials are little-endian 1-D encoding arrays.  Factorisation is
distinct-degree followed by seeded Cantor-Zassenhaus splitting, which
is all the meataxe needs.
"""

from __future__ import annotations

import numpy as np

from .gf import FiniteField

_BLOW_CACHE: dict = {}


def _blow_table(field: FiniteField) -> np.ndarray:
    """(q, k, k) table: encoding -> multiplication matrix over GF(p)."""
    tab = _BLOW_CACHE.get(field)
    if tab is not None:
        return tab
    p, k, q = field.p, field.k, field.q
    tab = np.zeros((q, k, k), dtype=np.int64)
    x_pows = []
    cur = 1
    for _ in range(k):
        x_pows.append(cur)
        cur = int(field.mul(cur, p if k > 1 else 1))
        if k == 1:
            cur = 1
    elems = np.arange(q, dtype=np.int64)
    for j in range(k):
        col = field.mul(elems, x_pows[j])  # a * x^j for every a
        tab[:, :, j] = field.digits(col)
    _BLOW_CACHE[field] = tab
    return tab


def blow(field: FiniteField, A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    k = field.k
    return _blow_table(field)[A].transpose(0, 2, 1, 3).reshape(m * k, n * k)


def unblow(field: FiniteField, B: np.ndarray, m: int, n: int) -> np.ndarray:
    k = field.k
    blocks = B.reshape(m, k, n, k)
    digits = blocks[:, :, :, 0].transpose(0, 2, 1)  # first column of each block
    return field.from_digits(digits)


def mat_mul(field: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError("shape mismatch")
    Ab = blow(field, A).astype(np.float64)
    Bb = blow(field, B).astype(np.float64)
    Cb = np.rint(Ab @ Bb).astype(np.int64) % field.p
    return unblow(field, Cb, A.shape[0], B.shape[1])


def mat_vec(field: FiniteField, A: np.ndarray, v: np.ndarray) -> np.ndarray:
    return mat_mul(field, A, v.reshape(-1, 1)).ravel()


def identity(field: FiniteField, n: int) -> np.ndarray:
    M = np.zeros((n, n), dtype=np.int64)
    np.fill_diagonal(M, 1)
    return M


def mat_pow(field: FiniteField, A: np.ndarray, e: int) -> np.ndarray:
    n = A.shape[0]
    out = identity(field, n)
    base = A
    while e:
        if e & 1:
            out = mat_mul(field, out, base)
        base = mat_mul(field, base, base)
        e >>= 1
    return out


def rref(field: FiniteField, A: np.ndarray):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    R = np.array(A, dtype=np.int64)
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        col = R[r:, c]
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = field.mul(R[r], int(field.inv(R[r, c])))
        other = np.nonzero(R[:, c])[0]
        other = other[other != r]
        if len(other):
            factors = R[other, c]
            R[other] = field.sub(R[other], field.mul(factors[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R[: len(pivots)], pivots


def rank(field: FiniteField, A: np.ndarray) -> int:
    return len(rref(field, A)[1])


def nullspace(field: FiniteField, A: np.ndarray) -> np.ndarray:
    """Basis of {x : A x = 0} as rows; shape (nullity, n)."""
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    R, piv = rref(field, A)
    free = [c for c in range(n) if c not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    for idx, fc in enumerate(free):
        out[idx, fc] = 1
        for r, pc in enumerate(piv):
            out[idx, pc] = field.neg(R[r, fc])
    return out


def solve(field: FiniteField, A: np.ndarray, b: np.ndarray):
    """One solution of A x = b, or None."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug = np.hstack([A, b])
    R, piv = rref(field, aug)
    n = A.shape[1]
    if n in piv:
        return None
    x = np.zeros(n, dtype=np.int64)
    for r, pc in enumerate(piv):
        x[pc] = R[r, n]
    return x


def inverse(field: FiniteField, A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    aug = np.hstack([A, identity(field, n)])
    R, piv = rref(field, aug)
    if piv != list(range(n)):
        raise np.linalg.LinAlgError("matrix is singular")
    return R[:, n:]


def solve_matrix(field: FiniteField, B: np.ndarray, M: np.ndarray) -> np.ndarray:
    """X with X B = M, for B of full row rank (rows of M in rowspace of B)."""
    # transpose to B^T X^T = M^T and read coefficients off the rref
    aug = np.hstack([B.T, M.T])
    R, piv = rref(field, aug)
    r = B.shape[0]
    Xt = np.zeros((r, M.shape[0]), dtype=np.int64)
    for row, pc in enumerate(piv):
        if pc >= r:
            raise np.linalg.LinAlgError("rows of M not in the row space of B")
        Xt[pc] = R[row, B.T.shape[1] :]
    return Xt.T


class EchelonBasis:
    """Incrementally built reduced echelon basis (rows are basis vectors)."""

    def __init__(self, field: FiniteField, n: int):
        self.field = field
        self.n = n
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots: list[int] = []

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.array(v, dtype=np.int64)
        f = self.field
        for r, pc in enumerate(self.pivots):
            c = v[pc]
            if c:
                v = f.sub(v, f.mul(c, self.rows[r]))
        return v

    def add(self, v: np.ndarray) -> bool:
        """Reduce v and insert if independent.  Returns True if added."""
        f = self.field
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return False
        pc = int(nz[0])
        v = f.mul(v, int(f.inv(v[pc])))
        # back-reduce existing rows
        if len(self.pivots):
            col = self.rows[:, pc].copy()
            hit = np.nonzero(col)[0]
            if len(hit):
                self.rows[hit] = f.sub(self.rows[hit], f.mul(col[hit][:, None], v[None, :]))
        pos = int(np.searchsorted(np.array(self.pivots, dtype=np.int64), pc))
        self.rows = np.insert(self.rows, pos, v, axis=0)
        self.pivots.insert(pos, pc)
        return True

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def contains(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v))


def spin(field: FiniteField, seeds: np.ndarray, gens: list[np.ndarray]) -> np.ndarray:
    """Smallest subspace containing the seed rows and stable under v -> g v.

    Column-convention module action (vectors stored as rows).  Returns the
    reduced echelon basis of the spanned submodule.
    """
    seeds = np.atleast_2d(np.asarray(seeds, dtype=np.int64))
    n = seeds.shape[1]
    basis = EchelonBasis(field, n)
    worklist = [np.array(s) for s in seeds if basis.add(s)]
    i = 0
    while i < len(worklist) and basis.dim < n:
        v = worklist[i]
        i += 1
        for g in gens:
            w = mat_vec(field, g, v)
            if basis.add(w):
                worklist.append(w)
    return basis.rows


# ---------------------------------------------------------------------------
# polynomials over GF(q): little-endian encoding arrays
# ---------------------------------------------------------------------------


def poly_trim(f: np.ndarray) -> np.ndarray:
    f = np.asarray(f, dtype=np.int64)
    nz = np.nonzero(f)[0]
    if len(nz) == 0:
        return np.zeros(0, dtype=np.int64)
    return f[: int(nz[-1]) + 1]


def poly_deg(f: np.ndarray) -> int:
    f = poly_trim(f)
    return len(f) - 1  # zero poly -> -1


def poly_add(field, f, g):
    n = max(len(f), len(g))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: len(f)] = f
    b[: len(g)] = g
    return poly_trim(field.add(a, b))


def poly_scale(field, f, c):
    return poly_trim(field.mul(np.asarray(f, dtype=np.int64), int(c)))


def poly_mul(field, f, g):
    f = poly_trim(f)
    g = poly_trim(g)
    if len(f) == 0 or len(g) == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(len(f) + len(g) - 1, dtype=np.int64)
    for i, c in enumerate(f):
        if c:
            out[i : i + len(g)] = field.add(out[i : i + len(g)], field.mul(g, int(c)))
    return poly_trim(out)


def poly_divmod(field, f, g):
    f = poly_trim(f).copy()
    g = poly_trim(g)
    if len(g) == 0:
        raise ZeroDivisionError("poly division by zero")
    dg = len(g) - 1
    lead_inv = int(field.inv(g[-1]))
    q = np.zeros(max(len(f) - dg, 0), dtype=np.int64)
    while len(f) - 1 >= dg and len(f) > 0:
        shift = len(f) - 1 - dg
        c = int(field.mul(f[-1], lead_inv))
        q[shift] = c
        f[shift : shift + dg + 1] = field.sub(f[shift : shift + dg + 1], field.mul(g, c))
        f = poly_trim(f)
    return poly_trim(q), poly_trim(f)


def poly_mod(field, f, g):
    return poly_divmod(field, f, g)[1]


def poly_gcd(field, f, g):
    f, g = poly_trim(f), poly_trim(g)
    while len(g):
        f, g = g, poly_mod(field, f, g)
    if len(f):
        f = poly_scale(field, f, int(field.inv(f[-1])))
    return f


def poly_pow_mod(field, f, e: int, m):
    out = np.array([1], dtype=np.int64)
    base = poly_mod(field, f, m)
    while e:
        if e & 1:
            out = poly_mod(field, poly_mul(field, out, base), m)
        base = poly_mod(field, poly_mul(field, base, base), m)
        e >>= 1
    return out


def poly_eval(field, f, xs):
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros(xs.shape, dtype=np.int64)
    for c in reversed(poly_trim(f)):
        acc = field.add(field.mul(acc, xs), int(c))
    return acc


def poly_roots(field, f) -> list[int]:
    """All roots in the field (brute scan; fields here are small)."""
    xs = np.arange(field.q, dtype=np.int64)
    vals = poly_eval(field, f, xs)
    return [int(x) for x in np.nonzero(vals == 0)[0]]


def _x_poly(field):
    return np.array([0, 1], dtype=np.int64)


def squarefree_part(field, f):
    """f / gcd(f, f') — enough to locate distinct irreducible factors."""
    f = poly_trim(f)
    d = np.arange(len(f), dtype=np.int64) % field.p
    deriv = poly_trim(field.mul(f, d)[1:])
    g = poly_gcd(field, f, deriv) if len(deriv) else f
    if len(g) <= 1:
        return f
    q, r = poly_divmod(field, f, g)
    assert len(r) == 0
    return q


def distinct_degree_factor(field, f):
    """Yield (d, product of distinct irreducible degree-d factors of f)."""
    f = poly_trim(f)
    h = _x_poly(field)
    d = 0
    while poly_deg(f) > 0:
        d += 1
        if 2 * d > poly_deg(f):
            yield poly_deg(f), f
            return
        h = poly_pow_mod(field, h, field.q, f)
        g = poly_gcd(field, poly_add(field, h, poly_scale(field, _x_poly(field), field.neg(1))), f)
        if poly_deg(g) > 0:
            yield d, g
            f, _ = poly_divmod(field, f, g)
            h = poly_mod(field, h, f)


def equal_degree_split(field, f, d: int, rng: np.random.Generator):
    """Split a product of distinct degree-d irreducibles into the factors."""
    n = poly_deg(f)
    if n == d:
        return [f]
    while True:
        r = rng.integers(0, field.q, size=n, dtype=np.int64)
        r = poly_trim(r)
        if poly_deg(r) < 1:
            continue
        if field.p == 2:
            # trace map T(r) = r + r^2 + ... + r^(2^(k*d - 1))
            t = np.array(r)
            cur = np.array(r)
            for _ in range(field.k * d - 1):
                cur = poly_pow_mod(field, cur, 2, f)
                t = poly_add(field, t, cur)
            g = poly_gcd(field, t, f)
        else:
            e = (field.q**d - 1) // 2
            t = poly_add(field, poly_pow_mod(field, r, e, f), np.array([field.neg(1)], dtype=np.int64))
            g = poly_gcd(field, t, f)
        if 0 < poly_deg(g) < n:
            q, _ = poly_divmod(field, f, g)
            return equal_degree_split(field, g, d, rng) + equal_degree_split(field, q, d, rng)


def irreducible_factors(field, f, seed: int = 0):
    """Distinct monic irreducible factors of f, sorted by (degree, coeffs)."""
    rng = np.random.default_rng(seed)
    f = squarefree_part(field, f)
    out = []
    for d, g in distinct_degree_factor(field, f):
        for h in equal_degree_split(field, g, d, rng):
            h = poly_scale(field, h, int(field.inv(h[-1])))
            out.append(h)
    return sorted(out, key=lambda h: (len(h), tuple(int(c) for c in h)))


def local_min_poly(field, theta: np.ndarray, v: np.ndarray):
    """Minimal polynomial of theta on the cyclic subspace generated by v."""
    n = theta.shape[0]
    basis = EchelonBasis(field, n)
    vecs = [np.array(v, dtype=np.int64)]
    basis.add(vecs[0])
    while True:
        w = mat_vec(field, theta, vecs[-1])
        red = basis.reduce(w)
        if not np.any(red):
            # w = sum c_i theta^i v: solve with the raw (non-echelon) vectors
            V = np.stack(vecs)  # rows: v, theta v, ..., theta^(m-1) v
            coeffs = solve(field, V.T, w)
            m = len(vecs)
            poly = np.zeros(m + 1, dtype=np.int64)
            poly[m] = 1
            poly[:m] = field.neg(coeffs)
            return poly_trim(poly)
        basis.add(w)
        vecs.append(w)


def eval_poly_at_matrix(field, f, M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    for c in reversed(poly_trim(f)):
        acc = mat_mul(field, acc, M)
        if c:
            idx = np.arange(n)
            acc[idx, idx] = field.add(acc[idx, idx], int(c))
    return acc
