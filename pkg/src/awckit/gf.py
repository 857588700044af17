"""Finite fields GF(p^k) with integer-encoded elements.

Elements are encoded as integers in [0, p^k): the base-p digits of the
encoding are the coefficients of the element in the polynomial basis
1, x, ..., x^(k-1) of GF(p)[x]/(poly).  The defining polynomial is the
lexicographically smallest monic *primitive* polynomial of its degree,
so the residue class of x generates the multiplicative group and
discrete logarithms are canonical per (p, k).

Vectorised arithmetic on numpy int arrays goes through exp/log tables
(size q).  Matrix products use the regular-representation blow-up over
GF(p) (see gflinalg), so no q x q tables are ever built.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

_FIELD_CACHE: dict[tuple[int, int], "FiniteField"] = {}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mod_mul(a: list[int], b: list[int], poly: list[int], p: int) -> list[int]:
    """Multiply polynomial-basis coefficient lists modulo (poly, p)."""
    k = len(poly) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce by the monic poly
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(k):
                out[i - k + j] = (out[i - k + j] - c * poly[j]) % p
    return [c % p for c in out[:k]] + [0] * max(0, k - len(out))


def _x_order(p: int, k: int, poly: list[int]) -> int:
    """Multiplicative order of the class of x in GF(p)[x]/(poly), k >= 2."""
    q = p**k
    cur = [0, 1] + [0] * (k - 2)
    one = [1] + [0] * (k - 1)
    acc = cur[:]
    n = 1
    while acc != one:
        acc = _poly_mod_mul(acc, cur, poly, p)
        n += 1
        if n > q:
            raise ArithmeticError("order computation ran away; poly not irreducible?")
    return n


def _smallest_primitive_poly(p: int, k: int) -> list[int]:
    """Lex-smallest monic primitive polynomial of degree k over GF(p).

    Coefficient list [c0, ..., c_{k-1}, 1] for x^k + c_{k-1}x^{k-1} + ... + c0.
    For k = 1 this returns [-g mod p, 1] with g the smallest primitive root,
    so that x == g in the quotient.
    """
    q = p**k
    if k == 1:
        for g in range(2, p):
            if _int_order_mod(g, p) == p - 1:
                return [(-g) % p, 1]
        if p == 2:
            return [1, 1]  # x + 1: x == 1 generates the trivial group
        raise ArithmeticError(f"no primitive root mod {p}")
    for enc in range(q):
        coeffs = _decode_digits(enc, p, k) + [1]
        if not _is_irreducible(coeffs, p):
            continue
        if _x_order(p, k, coeffs) == q - 1:
            return coeffs
    raise ArithmeticError(f"no primitive polynomial of degree {k} over GF({p})")


def _int_order_mod(g: int, p: int) -> int:
    n, cur = 1, g % p
    while cur != 1:
        cur = cur * g % p
        n += 1
        if n > p:
            raise ArithmeticError("not a unit")
    return n


def _decode_digits(enc: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(enc % p)
        enc //= p
    return out


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Irreducibility of a monic poly over GF(p) by trial root/factor scan.

    Degrees here are tiny (k <= 12), so test x^(p^d) == x mod f criteria via
    the naive route: no root in GF(p) for deg <= 3, else full trial division
    by all monic polys of degree <= deg/2.
    """
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    # no linear factors
    for r in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * r + c) % p
        if acc == 0:
            return False
    if deg <= 3:
        return True
    for d in range(2, deg // 2 + 1):
        for enc in range(p**d):
            div = _decode_digits(enc, p, d) + [1]
            if _poly_divides(div, coeffs, p):
                return False
    return True


def _poly_divides(div: list[int], f: list[int], p: int) -> bool:
    rem = list(f)
    dd = len(div) - 1
    while len(rem) - 1 >= dd:
        lead = rem[-1]
        if lead:
            for i in range(dd + 1):
                rem[len(rem) - 1 - dd + i] = (rem[len(rem) - 1 - dd + i] - lead * div[i]) % p
        rem.pop()
    return all(c == 0 for c in rem)


class FiniteField:
    """GF(p^k) with exp/log tables and vectorised encoded arithmetic."""

    def __init__(self, p: int, k: int = 1, poly: list[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError("degree must be positive")
        self.p = p
        self.k = k
        self.q = p**k
        self.poly = list(poly) if poly is not None else _smallest_primitive_poly(p, k)
        if len(self.poly) != k + 1 or self.poly[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree k")
        if not _is_irreducible(self.poly, p):
            raise ValueError("defining polynomial is not irreducible")
        self._build_tables()
        # base-p digit weights for encode/decode
        self._pow_p = np.array([p**i for i in range(k)], dtype=np.int64)

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        # smallest encoding generating the full multiplicative group; for the
        # canonical primitive poly this is x itself (encoding p) when k >= 2
        for g in range(1 if q == 2 else 2, q):
            exp = np.zeros(max(q - 1, 1), dtype=np.int64)
            log = np.full(q, -1, dtype=np.int64)
            gen_digits = _decode_digits(g, p, k)
            cur = 1
            ok = True
            for i in range(q - 1):
                if log[cur] != -1:
                    ok = False
                    break
                exp[i] = cur
                log[cur] = i
                cur_digits = _decode_digits(cur, p, k)
                nxt = _poly_mod_mul(cur_digits, gen_digits, self.poly, p)
                cur = sum(c * p**j for j, c in enumerate(nxt))
            if ok:
                self.exp_table = exp
                self.log_table = log
                self.generator = g
                return
        raise ArithmeticError("no multiplicative generator found; poly reducible?")

    # -- scalar/array encode-decode ------------------------------------

    def digits(self, a):
        """Base-p digit array of encodings; shape (..., k)."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pow_p) % self.p

    def from_digits(self, d):
        d = np.asarray(d, dtype=np.int64) % self.p
        return (d * self._pow_p).sum(axis=-1)

    # -- arithmetic -----------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.p
        return self.from_digits(self.digits(a) + self.digits(b))

    def neg(self, a):
        if self.k == 1:
            return (-np.asarray(a, dtype=np.int64)) % self.p
        return self.from_digits(-self.digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        if nz.any():
            e = (self.log_table[a[nz]] + self.log_table[b[nz]]) % (self.q - 1)
            out[nz] = self.exp_table[e]
        return out

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverting 0 in finite field")
        e = (-(self.log_table[a])) % (self.q - 1)
        return self.exp_table[e]

    def power(self, a, n: int):
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = a != 0
        if n == 0:
            return np.ones(a.shape, dtype=np.int64)
        e = (self.log_table[a[nz]] * (n % (self.q - 1))) % (self.q - 1)
        out[nz] = self.exp_table[e]
        if n < 0 and np.any(~nz):
            raise ZeroDivisionError("negative power of 0")
        return out

    def dlog(self, a) -> int:
        a = int(a)
        if a == 0:
            raise ZeroDivisionError("dlog of 0")
        return int(self.log_table[a])

    def from_dlog(self, e: int) -> int:
        return int(self.exp_table[e % (self.q - 1)]) if self.q > 2 else 1

    def root_of_unity(self, m: int) -> int:
        """Canonical primitive m-th root of unity: generator^((q-1)/m)."""
        if m <= 0 or (self.q - 1) % m != 0:
            raise ValueError(f"GF({self.q}) has no primitive {m}-th root of unity")
        return self.from_dlog((self.q - 1) // m)

    def element_order(self, a) -> int:
        a = int(a)
        if a == 0:
            raise ZeroDivisionError("order of 0")
        if a == 1:
            return 1
        e = self.dlog(a)
        import math

        return (self.q - 1) // math.gcd(e, self.q - 1)

    # -- embeddings -----------------------------------------------------

    def embedding_into(self, big: "FiniteField") -> np.ndarray:
        """Lookup table realising the canonical embedding GF(q) -> GF(q').

        Requires same characteristic and self.k | big.k.  Canonical choice:
        x maps to the root of self.poly in the big field with the smallest
        integer encoding.
        """
        if big.p != self.p:
            raise ValueError("embedding requires equal characteristic")
        if big.k % self.k != 0:
            raise ValueError(f"GF({self.q}) does not embed in GF({big.q})")
        if big.q == self.q and big.poly == self.poly:
            return np.arange(self.q, dtype=np.int64)
        elems = np.arange(big.q, dtype=np.int64)
        acc = np.zeros(big.q, dtype=np.int64)
        for c in reversed(self.poly):
            acc = big.add(big.mul(acc, elems), c % self.p)
        roots = np.nonzero(acc == 0)[0]
        if len(roots) == 0:
            raise ArithmeticError("no root of defining polynomial in big field")
        r = int(roots.min())
        table = np.zeros(self.q, dtype=np.int64)
        rpow = 1
        for i in range(self.k):
            digit_i = (np.arange(self.q) // self.p**i) % self.p
            term = big.mul(np.full(self.q, rpow, dtype=np.int64), digit_i)
            table = big.add(table, term)
            rpow = int(big.mul(rpow, r))
        return table

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.k, tuple(self.poly)) == (other.p, other.k, tuple(other.poly))
        )

    def __hash__(self):
        return hash((self.p, self.k, tuple(self.poly)))


def GF(p: int, k: int = 1) -> FiniteField:
    """Cached canonical field GF(p^k)."""
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FiniteField(p, k)
    return _FIELD_CACHE[key]


@lru_cache(maxsize=None)
def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n (a, n coprime)."""
    import math

    if math.gcd(a, n) != 1:
        raise ValueError("not a unit")
    cur, e = a % n, 1
    while cur != 1:
        cur = cur * a % n
        e += 1
    return e
