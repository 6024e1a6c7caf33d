"""Exact arithmetic in GF(p^e) and the small exact linear algebra built on it.

Elements are coordinate vectors over F_p in the polynomial basis
(1, t, ..., t^(e-1)) for a fixed monic irreducible modulus.  Everything here
is integer-exact; fields and elements are immutable and safe to share between
threads once constructed.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import DegreeMismatch, FieldMismatch, NonPrime, ReducibleModulus

P_LIMIT = 1 << 15  # characteristic stays comfortably inside machine words
Q_LIMIT = 1 << 24  # enumeration-scale ceiling on the field size


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3):
        if n % d == 0:
            return n == d
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def prime_divisors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense polynomial helpers over F_p.  Coefficient lists are low-degree-first
# and trimmed (no trailing zeros except for the zero polynomial [0]).

def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x + y) % p for x, y in zip(a, b)])


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pmul(a, b, p):
    if a == [0] or b == [0]:
        return [0]
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pdivmod(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [0], a
    inv = pow(b[-1], p - 2, p)
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = (a[i + len(b) - 1] * inv) % p
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    return _trim(q), _trim(a)


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b != [0]:
        a, b = b, _pmod(a, b, p)
    if a != [0] and a[-1] != 1:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p)


def _ppowmod(a, k, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        k >>= 1
    return result


def _pinvmod(a, f, p):
    """Inverse of a modulo f; requires gcd(a, f) = 1."""
    r0, s0 = _trim([c % p for c in f]), [0]
    r1, s1 = _trim([c % p for c in a]), [1]
    if r1 == [0]:
        raise ZeroDivisionError("division by zero in GF(p^e)")
    while r1 != [0]:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    c = pow(r0[0], p - 2, p)
    return _pmod([(x * c) % p for x in s0], f, p)


def _peval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def is_irreducible(coeffs, p) -> bool:
    """Exact irreducibility over F_p for a monic polynomial of degree >= 1.

    Degrees 2 and 3 reduce to a root scan; higher degrees use the
    distinct-degree criterion: x^(p^n) = x mod f together with
    gcd(x^(p^(n/r)) - x, f) = 1 for every prime r dividing n.
    """
    f = _trim([c % p for c in coeffs])
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if n == 1:
        return True
    if f[0] == 0:
        return False
    if n <= 3:
        return all(_peval(f, a, p) for a in range(p))
    frob = {}
    g = [0, 1]
    for d in range(1, n + 1):
        g = _ppowmod(g, p, f, p)
        frob[d] = g
    if _psub(frob[n], [0, 1], p) != [0]:
        return False
    for r in prime_divisors(n):
        h = _psub(frob[n // r], [0, 1], p)
        if len(_pgcd(h, f, p)) > 1:
            return False
    return True


# Conway polynomials, low-degree-first including the leading 1.  Regenerate
# with scripts/gen_conway_table.py; entries are checked for irreducibility at
# field construction and for primitivity in the test suite.
CONWAY_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (3, 6, 4, 5, 1, 0, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (11, 3): (9, 2, 0, 1),
    (11, 4): (2, 10, 8, 0, 1),
    (11, 5): (9, 0, 10, 0, 0, 1),
    (11, 6): (2, 7, 6, 4, 3, 0, 1),
}


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """The Conway polynomial when tabulated, else the lexicographically
    smallest monic irreducible of degree e (coefficients low-degree-first)."""
    hit = CONWAY_TABLE.get((p, e))
    if hit is not None:
        return hit
    for tail in itertools.product(range(p), repeat=e):
        cand = (*tail, 1)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found; unreachable")


class FieldElement:
    """An element of GF(p^e), stored as its coordinate tuple over F_p."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "Field", coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and (
            self.field is other.field or self.field == other.field
        )

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.modulus))

    def __repr__(self) -> str:
        return _fmt_poly(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatch(
                f"cannot mix elements of {self.field!r} and {other.field!r}"
            )
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        return FieldElement(
            F, tuple((x + y) % F.p for x, y in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        return FieldElement(
            F, tuple((x - y) % F.p for x, y in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        F = self.field
        return FieldElement(F, tuple((-x) % F.p for x in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        return FieldElement(F, F._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        F = self.field
        if k < 0:
            return self.inverse() ** (-k)
        result = F.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "FieldElement":
        F = self.field
        if not self:
            raise ZeroDivisionError("division by zero in " + repr(F))
        inv = _pinvmod(list(self.coeffs), list(F.modulus), F.p)
        return F.from_coeffs(inv)

    def frob(self, k: int = 1) -> "FieldElement":
        """k-fold Frobenius x -> x^(p^k), applied via the precomputed matrix."""
        F = self.field
        return FieldElement(F, F._frob_coeffs(self.coeffs, k % F.e))

    def trace(self) -> int:
        """Absolute trace down to F_p, returned as an integer in [0, p)."""
        F = self.field
        return sum(c * t for c, t in zip(self.coeffs, F._tr_basis)) % F.p

    @property
    def index(self) -> int:
        """Canonical index: the coordinate vector read as a base-p integer,
        low basis coordinate least significant."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * self.field.p + c
        return acc


def _fmt_poly(coeffs) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}t" if i == 1 else f"{head}t^{i}")
    return " + ".join(terms) if terms else "0"


class Field:
    """GF(p^e) with a fixed monic irreducible modulus.

    Precomputes the reduction table, the Frobenius matrices, per-basis traces
    and the dual basis, so element operations and trace evaluations are cheap.
    """

    __slots__ = (
        "p",
        "e",
        "q",
        "modulus",
        "basis",
        "dual_basis",
        "zero",
        "one",
        "_red",
        "_frob_mats",
        "_tr_basis",
        "_elts",
    )

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrime(f"characteristic must be prime, got {p}")
        if p > P_LIMIT:
            raise NonPrime(f"characteristic {p} exceeds the supported bound {P_LIMIT}")
        if not isinstance(e, int) or e < 1:
            raise DegreeMismatch(f"extension degree must be a positive integer, got {e}")
        if p**e > Q_LIMIT:
            raise DegreeMismatch(f"field size {p}^{e} exceeds the supported bound {Q_LIMIT}")
        if modulus is None:
            modulus = default_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise DegreeMismatch(
                    f"modulus must be monic of degree {e}, got coefficients {modulus}"
                )
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} factors over F_{p}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        self._elts = None

        # reduction table: coordinates of t^d for d in [e, 2e-2]
        red = []
        if e > 1:
            rep = [(-modulus[j]) % p for j in range(e)]
            red.append(tuple(rep))
            for _ in range(e - 2):
                shifted = [0] + rep
                top = shifted[e]
                rep = [(shifted[j] - top * modulus[j]) % p for j in range(e)]
                red.append(tuple(rep))
        self._red = tuple(red)

        self.zero = FieldElement(self, (0,) * e)
        self.one = FieldElement(self, (1,) + (0,) * (e - 1))
        self.basis = tuple(
            FieldElement(self, tuple(1 if j == i else 0 for j in range(e)))
            for i in range(e)
        )

        # Frobenius matrices M[k]: coords(x^(p^k)) = M[k] @ coords(x).
        # Frobenius is F_p-linear, so images of the basis determine it.
        tp = _ppowmod([0, 1], p, list(self.modulus), p)
        tp = tuple(tp + [0] * (e - len(tp)))
        cols = [self.one.coeffs]
        for _ in range(e - 1):
            cols.append(self._mul(cols[-1], tp))
        m1 = tuple(tuple(cols[j][i] for j in range(e)) for i in range(e))
        mats = [tuple(tuple(1 if i == j else 0 for j in range(e)) for i in range(e))]
        for _ in range(e - 1):
            mats.append(_mat_mul(m1, mats[-1], p))
        self._frob_mats = tuple(mats)

        # trace of each basis element; the full trace map is then a dot product
        tr = []
        for j in range(e):
            v = [0] * e
            for k in range(e):
                img = self._frob_coeffs(self.basis[j].coeffs, k)
                for i in range(e):
                    v[i] = (v[i] + img[i]) % p
            tr.append(v[0])
        self._tr_basis = tuple(tr)

        # dual basis from the inverse of the trace Gram matrix
        gram = []
        for i in range(e):
            row = []
            for j in range(e):
                row.append(self._trace_coeffs(self._power_basis_coeffs(i + j)))
            gram.append(tuple(row))
        inv = fp_invert(FpMatrix(p, tuple(gram)))
        self.dual_basis = tuple(
            FieldElement(self, tuple(inv.rows[i][j] for i in range(e)))
            for j in range(e)
        )

    # -- internal coordinate arithmetic -------------------------------------

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, e = self.p, self.e
        if e == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        res = [c % p for c in conv[:e]]
        for d in range(e, 2 * e - 1):
            c = conv[d] % p
            if c:
                row = self._red[d - e]
                for i in range(e):
                    res[i] = (res[i] + c * row[i]) % p
        return tuple(res)

    def _frob_coeffs(self, coeffs: tuple[int, ...], k: int) -> tuple[int, ...]:
        if k == 0:
            return coeffs
        m = self._frob_mats[k]
        p = self.p
        return tuple(
            sum(m[i][j] * coeffs[j] for j in range(self.e)) % p for i in range(self.e)
        )

    def _power_basis_coeffs(self, d: int) -> tuple[int, ...]:
        """Coordinates of t^d for 0 <= d <= 2e-2."""
        if d < self.e:
            return self.basis[d].coeffs
        return self._red[d - self.e]

    def _trace_coeffs(self, coeffs) -> int:
        return sum(c * t for c, t in zip(coeffs, self._tr_basis)) % self.p

    # -- constructors --------------------------------------------------------

    def from_coeffs(self, coeffs) -> FieldElement:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.e:
            raise DegreeMismatch(
                f"coordinate vector of length {len(coeffs)} in GF({self.p}^{self.e})"
            )
        coeffs += [0] * (self.e - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_int(self, n: int) -> FieldElement:
        """Embed an integer through the prime subfield: n -> (n mod p) * 1."""
        return FieldElement(self, (n % self.p,) + (0,) * (self.e - 1))

    def from_index(self, i: int) -> FieldElement:
        if not 0 <= i < self.q:
            raise ValueError(f"element index {i} outside [0, {self.q})")
        if self._elts is None and self.q <= (1 << 16):
            self._build_cache()
        if self._elts is not None:
            return self._elts[i]
        return self._elt_at(i)

    def _elt_at(self, i: int) -> FieldElement:
        coeffs = []
        for _ in range(self.e):
            coeffs.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(coeffs))

    def _build_cache(self):
        self._elts = [self._elt_at(i) for i in range(self.q)]

    def elements(self):
        """All field elements in canonical index order."""
        for i in range(self.q):
            yield self.from_index(i)

    def trace(self, x: FieldElement) -> int:
        return x.trace()

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, e, modulus)


def GF(p: int, e: int = 1, modulus=None) -> Field:
    """Construct (and cache) GF(p^e).

    The modulus defaults to the Conway polynomial where tabulated and to the
    lexicographically smallest monic irreducible otherwise, so repeated calls
    return the identical object.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrime(f"characteristic must be prime, got {p}")
    if not isinstance(e, int) or e < 1:
        raise DegreeMismatch(f"extension degree must be a positive integer, got {e}")
    if modulus is None:
        if p**e > Q_LIMIT:
            raise DegreeMismatch(f"field size {p}^{e} exceeds the supported bound {Q_LIMIT}")
        modulus = default_modulus(p, e)
    else:
        modulus = tuple(int(c) % p for c in modulus)
    return _cached_field(p, e, modulus)


# ---------------------------------------------------------------------------
# Exact linear algebra over F_p.

@dataclass(frozen=True)
class FpMatrix:
    """A dense matrix over F_p; entries are normalized into [0, p)."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("FpMatrix needs at least one row")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged rows")
        norm = tuple(tuple(c % self.p for c in r) for r in self.rows)
        object.__setattr__(self, "rows", norm)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    nr, nc = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(vi - f * vr) % p for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows, pivots


def fp_rank_kernel(M: FpMatrix) -> tuple[int, list[tuple[int, ...]]]:
    """Rank and a deterministic kernel basis of the linear map v -> M v."""
    rows, pivots = _rref([list(r) for r in M.rows], M.p)
    rank = len(pivots)
    kernel = []
    for free in range(M.n_cols):
        if free in pivots:
            continue
        v = [0] * M.n_cols
        v[free] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-rows[ri][free]) % M.p
        kernel.append(tuple(v))
    return rank, kernel


def fp_solve(M: FpMatrix, b) -> tuple[int, ...] | None:
    """One solution of M x = b, or None if the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    p = M.p
    if len(b) != M.n_rows:
        raise ValueError("right-hand side length mismatch")
    aug = [list(r) + [int(bv) % p] for r, bv in zip(M.rows, b)]
    rows, pivots = _rref(aug, p)
    nc = M.n_cols
    for row in rows:
        if row[nc] and not any(row[:nc]):
            return None
    x = [0] * nc
    for ri, pc in enumerate(pivots):
        if pc < nc:
            x[pc] = rows[ri][nc]
    if nc in pivots:  # pivot in the augmented column: inconsistent
        return None
    return tuple(x)


def fp_invert(M: FpMatrix) -> FpMatrix:
    """Inverse of a square matrix over F_p; raises ValueError when singular."""
    n = M.n_rows
    if M.n_cols != n:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(M.rows)]
    rows, pivots = _rref(aug, M.p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular over F_p")
    return FpMatrix(M.p, tuple(tuple(row[n:]) for row in rows[:n]))


# ---------------------------------------------------------------------------
# Exact Gaussian elimination over an arbitrary GF(p^e) (used for Moore-type
# systems and for function-rank computations).

def fq_solve(field: Field, rows, rhs) -> list[FieldElement] | None:
    """One solution of A x = rhs over the field, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    nr = len(aug)
    nc = len(rows[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(nr):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [vi - f * vr for vi, vr in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    for row in aug[len(pivots):]:
        if row[nc]:
            return None
    x = [field.zero] * nc
    for ri, pc in enumerate(pivots):
        x[pc] = aug[ri][nc]
    return x


def fq_rank(field: Field, rows) -> int:
    """Rank of a matrix with entries in the field."""
    work = [list(r) for r in rows]
    nr = len(work)
    nc = len(work[0]) if nr else 0
    rank = 0
    for c in range(nc):
        pr = next((i for i in range(rank, nr) if work[i][c]), None)
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        inv = work[rank][c].inverse()
        work[rank] = [v * inv for v in work[rank]]
        for i in range(rank + 1, nr):
            if work[i][c]:
                f = work[i][c]
                work[i] = [vi - f * vr for vi, vr in zip(work[i], work[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def _mat_mul(a, b, p):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )
