"""Exact integer and rational linear algebra.

Everything is arbitrary-precision (Python int / Fraction); no floats
anywhere.  Matrices are plain row-major lists of lists and are treated
as immutable after construction: every operation returns a fresh value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadParams, CompositionNonzero, DegreeMismatch, NotAnnihilated


class IntMatrix:
    """Dense matrix over the integers."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        self.data = [[int(v) for v in row] for row in data]
        self.rows = len(self.data)
        if self.rows:
            width = len(self.data[0])
            if cols is not None and cols != width:
                raise DegreeMismatch(f"row width {width} != cols {cols}")
            for row in self.data:
                if len(row) != width:
                    raise DegreeMismatch("ragged rows")
            self.cols = width
        else:
            self.cols = 0 if cols is None else cols

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_triplets(cls, rows, cols, triplets):
        """Build from (row, col, value) entries; duplicate positions add up."""
        data = [[0] * cols for _ in range(rows)]
        for i, j, v in triplets:
            data[i][j] += v
        return cls(data, cols)

    @classmethod
    def from_cols(cls, columns, rows):
        data = [[col[i] for col in columns] for i in range(rows)]
        return cls(data, len(columns))

    @classmethod
    def from_col_dicts(cls, col_dicts, rows):
        data = [[0] * len(col_dicts) for _ in range(rows)]
        for j, col in enumerate(col_dicts):
            for i, v in col.items():
                data[i][j] = v
        return cls(data, len(col_dicts))

    def column(self, j):
        return [row[j] for row in self.data]

    def col_dicts(self):
        """Per-column {row: value} maps of the nonzero entries."""
        out = [{} for _ in range(self.cols)]
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v:
                    out[j][i] = v
        return out

    def transpose(self):
        return IntMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)], self.rows)

    def mul(self, other):
        if self.cols != other.rows:
            raise DegreeMismatch(f"{self.shape()} @ {other.shape()}")
        other_nz = [[(k, b) for k, b in enumerate(row) if b] for row in other.data]
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, arow in enumerate(self.data):
            orow = out[i]
            for j, a in enumerate(arow):
                if a:
                    for k, b in other_nz[j]:
                        orow[k] += a * b
        return IntMatrix(out, other.cols)

    def __mul__(self, other):
        return self.mul(other)

    def add(self, other):
        if self.shape() != other.shape():
            raise DegreeMismatch(f"{self.shape()} + {other.shape()}")
        return IntMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], self.cols)

    def sub(self, other):
        if self.shape() != other.shape():
            raise DegreeMismatch(f"{self.shape()} - {other.shape()}")
        return IntMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], self.cols)

    def scale(self, c):
        return IntMatrix([[c * v for v in row] for row in self.data], self.cols)

    @staticmethod
    def hstack(parts, rows=None):
        parts = list(parts)
        if not parts:
            if rows is None:
                raise BadParams("hstack of nothing needs an explicit row count")
            return IntMatrix.zeros(rows, 0)
        rows = parts[0].rows
        for p in parts:
            if p.rows != rows:
                raise DegreeMismatch("hstack with differing row counts")
        return IntMatrix([sum((p.data[i] for p in parts), []) for i in range(rows)],
                         sum(p.cols for p in parts))

    @staticmethod
    def vstack(parts, cols=None):
        parts = list(parts)
        if not parts:
            if cols is None:
                raise BadParams("vstack of nothing needs an explicit column count")
            return IntMatrix.zeros(0, cols)
        cols = parts[0].cols
        for p in parts:
            if p.cols != cols:
                raise DegreeMismatch("vstack with differing column counts")
        return IntMatrix([row for p in parts for row in p.data], cols)

    def is_zero(self):
        return all(not v for row in self.data for v in row)

    def shape(self):
        return (self.rows, self.cols)

    def to_rat(self):
        return RatMatrix([[Fraction(v) for v in row] for row in self.data], self.cols)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"


class RatMatrix:
    """Dense matrix over the rationals (Fraction entries)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        self.data = [[Fraction(v) for v in row] for row in data]
        self.rows = len(self.data)
        if self.rows:
            width = len(self.data[0])
            for row in self.data:
                if len(row) != width:
                    raise DegreeMismatch("ragged rows")
            self.cols = width
        else:
            self.cols = 0 if cols is None else cols

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)], n)

    def mul(self, other):
        if self.cols != other.rows:
            raise DegreeMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        other_nz = [[(k, b) for k, b in enumerate(row) if b] for row in other.data]
        out = [[Fraction(0)] * other.cols for _ in range(self.rows)]
        for i, arow in enumerate(self.data):
            orow = out[i]
            for j, a in enumerate(arow):
                if a:
                    for k, b in other_nz[j]:
                        orow[k] += a * b
        return RatMatrix(out, other.cols)

    def __mul__(self, other):
        return self.mul(other)

    def add(self, other):
        return RatMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], self.cols)

    def sub(self, other):
        return RatMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], self.cols)

    def scale(self, c):
        c = Fraction(c)
        return RatMatrix([[c * v for v in row] for row in self.data], self.cols)

    def is_zero(self):
        return all(not v for row in self.data for v in row)

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class FgAbGroup:
    """Finitely generated abelian group in normal form.

    ``torsion`` is the chain of invariant factors, each >= 2 and each
    dividing the next, so equal groups compare equal as values.
    """

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise BadParams("negative free rank")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        prev = 1
        for d in self.torsion:
            if d < 2 or d % prev:
                raise BadParams(f"bad invariant-factor chain {self.torsion}")
            prev = d

    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def free(cls, rank):
        return cls(rank, ())

    @classmethod
    def from_diagonal(cls, diag, ambient_rank):
        """Cokernel Z^ambient / <diag entries>, zeros meaning no constraint."""
        nonzero = [abs(d) for d in diag if d]
        return cls(ambient_rank - len(nonzero),
                   tuple(d for d in nonzero if d >= 2))

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def direct_sum(self, other):
        return FgAbGroup(self.free_rank + other.free_rank,
                         _invariant_chain(list(self.torsion) + list(other.torsion)))

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def _factorize(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _invariant_chain(divisors):
    """Invariant factors of a direct sum of cyclic groups Z/d."""
    powers = {}
    for d in divisors:
        for p, e in _factorize(d):
            powers.setdefault(p, []).append(e)
    if not powers:
        return ()
    depth = max(len(v) for v in powers.values())
    factors = [1] * depth
    for p, exps in powers.items():
        exps = sorted(exps)
        for i, e in enumerate(exps):
            factors[depth - len(exps) + i] *= p ** e
    return tuple(f for f in factors if f > 1)


def _xgcd(a, b):
    """g, x, y with g = x*a + y*b and g = gcd(a, b) > 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _smith_core(D, m, n, U, V):
    """Reduce D in place to Smith form; mirror the row/col ops on U, V."""

    def row_addmul(i, k, q):
        Di, Dk = D[i], D[k]
        for j in range(n):
            if Dk[j]:
                Di[j] += q * Dk[j]
        if U is not None:
            Ui, Uk = U[i], U[k]
            for j in range(m):
                if Uk[j]:
                    Ui[j] += q * Uk[j]

    def row_swap(i, k):
        D[i], D[k] = D[k], D[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def row_pair(k, i, a, b, c, d):
        # (row_k, row_i) <- (a*row_k + b*row_i, c*row_k + d*row_i)
        Dk, Di = D[k], D[i]
        for j in range(n):
            vk, vi = Dk[j], Di[j]
            Dk[j] = a * vk + b * vi
            Di[j] = c * vk + d * vi
        if U is not None:
            Uk, Ui = U[k], U[i]
            for j in range(m):
                vk, vi = Uk[j], Ui[j]
                Uk[j] = a * vk + b * vi
                Ui[j] = c * vk + d * vi

    def col_addmul(j, k, q):
        for row in D:
            if row[k]:
                row[j] += q * row[k]
        if V is not None:
            for row in V:
                if row[k]:
                    row[j] += q * row[k]

    def col_swap(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        if V is not None:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def col_pair(k, j, a, b, c, d):
        # (col_k, col_j) <- (a*col_k + b*col_j, c*col_k + d*col_j)
        for row in D:
            vk, vj = row[k], row[j]
            row[k] = a * vk + b * vj
            row[j] = c * vk + d * vj
        if V is not None:
            for row in V:
                vk, vj = row[k], row[j]
                row[k] = a * vk + b * vj
                row[j] = c * vk + d * vj

    def clear_pivot(k):
        while True:
            for i in range(k + 1, m):
                b = D[i][k]
                if not b:
                    continue
                a = D[k][k]
                q, r = divmod(b, a)
                if r == 0:
                    row_addmul(i, k, -q)
                else:
                    g, x, y = _xgcd(a, b)
                    row_pair(k, i, x, y, -(b // g), a // g)
            for j in range(k + 1, n):
                b = D[k][j]
                if not b:
                    continue
                a = D[k][k]
                q, r = divmod(b, a)
                if r == 0:
                    col_addmul(j, k, -q)
                else:
                    g, x, y = _xgcd(a, b)
                    col_pair(k, j, x, y, -(b // g), a // g)
            if (all(D[i][k] == 0 for i in range(k + 1, m))
                    and all(D[k][j] == 0 for j in range(k + 1, n))):
                return

    rank = 0
    for k in range(min(m, n)):
        # smallest-magnitude pivot in the remaining block
        pi = pj = -1
        best = 0
        for i in range(k, m):
            Di = D[i]
            for j in range(k, n):
                v = Di[j]
                if v and (best == 0 or abs(v) < best):
                    best = abs(v)
                    pi, pj = i, j
                    if best == 1:
                        break
            if best == 1:
                break
        if pi < 0:
            break
        if pi != k:
            row_swap(pi, k)
        if pj != k:
            col_swap(pj, k)
        clear_pivot(k)
        rank += 1

    # divisibility chain d_k | d_{k+1}
    changed = True
    while changed:
        changed = False
        for k in range(rank - 1):
            a, b = D[k][k], D[k + 1][k + 1]
            if b % a:
                col_addmul(k, k + 1, 1)
                clear_pivot(k)
                changed = True

    for k in range(rank):
        if D[k][k] < 0:
            row_addmul(k, k, -2)

    return rank


def smith_normal_form(A):
    """U, D, V with U*A*V = D in Smith normal form, U and V unimodular."""
    m, n = A.rows, A.cols
    D = [row[:] for row in A.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    _smith_core(D, m, n, U, V)
    return IntMatrix(U, m), IntMatrix(D, n), IntMatrix(V, n)


def snf_diagonal(A):
    """Just the diagonal of the Smith form (cheaper: no transforms kept)."""
    m, n = A.rows, A.cols
    D = [row[:] for row in A.data]
    _smith_core(D, m, n, None, None)
    return [D[i][i] for i in range(min(m, n))]


def cokernel_group(A):
    """Z^rows / column span of A."""
    return FgAbGroup.from_diagonal(snf_diagonal(A), A.rows)


def kernel_basis(A):
    """Columns forming a basis of the integer kernel lattice of A.

    The lattice is saturated: any integer vector in ker(A) over Q is an
    integer combination of these columns.
    """
    m, n = A.rows, A.cols
    U, D, V = smith_normal_form(A)
    free = [j for j in range(n) if j >= min(m, n) or D.data[j][j] == 0]
    return IntMatrix.from_cols([V.column(j) for j in free], n)


def solve_int(B, C):
    """X with B*X = C over the integers, or None when no solution exists."""
    p, q = B.rows, B.cols
    if C.rows != p:
        raise DegreeMismatch(f"solve {B.shape()} against {C.shape()}")
    U, D, V = smith_normal_form(B)
    W = U.mul(C)
    Y = [[0] * C.cols for _ in range(q)]
    for i in range(p):
        d = D.data[i][i] if i < min(p, q) else 0
        if d:
            for j in range(C.cols):
                v, r = divmod(W.data[i][j], d)
                if r:
                    return None
                Y[i][j] = v
        else:
            if any(W.data[i][j] for j in range(C.cols)):
                return None
    return V.mul(IntMatrix(Y, C.cols))


def lattice_basis(M):
    """Basis of the lattice spanned by the columns of M (column ops only)."""
    cols = [M.column(j) for j in range(M.cols)]
    cols = [c for c in cols if any(c)]
    basis = []
    for r in range(M.rows):
        live = [c for c in cols if c[r]]
        if not live:
            continue
        rest = [c for c in cols if not c[r]]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[r]))
            pivot = live[0]
            out = [pivot]
            for c in live[1:]:
                a, b = pivot[r], c[r]
                q, rem = divmod(b, a)
                newc = [x - q * y for x, y in zip(c, pivot)]
                if rem:
                    out.append(newc)
                elif any(newc):
                    rest.append(newc)
            live = out
        pivot = live[0]
        if pivot[r] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        cols = rest
    return IntMatrix.from_cols(basis, M.rows)


def preimage_lattice(A, L):
    """Basis of the lattice {x : A*x lies in the column lattice of L}."""
    if L.cols == 0:
        return kernel_basis(A)
    stacked = IntMatrix.hstack([A, L.scale(-1)])
    K = kernel_basis(stacked)
    top = IntMatrix([K.data[i] for i in range(A.cols)], K.cols)
    return lattice_basis(top)


def quotient_group(K, S):
    """Lattice(K) / lattice(S); the columns of S must lie in lattice(K)."""
    X = solve_int(K, S)
    if X is None:
        raise BadParams("subgroup generators are not inside the ambient lattice")
    return cokernel_group(X)


def homology_at(d_out, d_in):
    """ker(d_out) / im(d_in) for consecutive integer boundary maps."""
    if d_out.cols != d_in.rows:
        raise DegreeMismatch(f"{d_out.shape()} then {d_in.shape()}")
    if not d_out.mul(d_in).is_zero():
        raise CompositionNonzero("boundary composition is nonzero")
    K = kernel_basis(d_out)
    X = solve_int(K, d_in)
    assert X is not None, "image escaped a saturated kernel lattice"
    return cokernel_group(X)


def int_rank(A):
    """Rank over Q of an integer matrix, by exact sparse elimination."""
    if isinstance(A, IntMatrix):
        rows = [{j: v for j, v in enumerate(row) if v} for row in A.data]
    else:
        rows = [dict(r) for r in A]
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        bi = min(range(len(rows)), key=lambda i: len(rows[i]))
        prow = rows.pop(bi)
        pc, pv = min(prow.items(), key=lambda kv: (abs(kv[1]) != 1, abs(kv[1]), kv[0]))
        rank += 1
        nxt = []
        for row in rows:
            v = row.pop(pc, 0)
            if not v:
                nxt.append(row)
                continue
            out = {j: pv * w for j, w in row.items()}
            for j, w in prow.items():
                if j == pc:
                    continue
                nv = out.get(j, 0) - v * w
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
            if out:
                g = 0
                for w in out.values():
                    g = gcd(g, w)
                    if g == 1:
                        break
                if g > 1:
                    out = {j: w // g for j, w in out.items()}
                nxt.append(out)
        rows = nxt
    return rank


def rank_of_col_dicts(cols):
    """Rank of a matrix given as sparse columns (rank is transpose-stable)."""
    return int_rank([{k: v for k, v in c.items() if v} for c in cols])


def det(A):
    """Determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise DegreeMismatch("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    M = [row[:] for row in A.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def spectral_projectors(T, eigenvalues):
    """Lagrange projectors of T onto the listed (distinct) eigenvalues.

    Requires the product of (T - lambda*I) over all listed eigenvalues to
    vanish; raises NotAnnihilated otherwise.
    """
    if T.rows != T.cols:
        raise DegreeMismatch("projectors of a non-square operator")
    eigs = [Fraction(e) for e in eigenvalues]
    if len(set(eigs)) != len(eigs):
        raise BadParams("eigenvalues must be distinct")
    if not eigs:
        raise BadParams("need at least one eigenvalue")
    n = T.rows
    ident = RatMatrix.identity(n)
    ann = ident
    for lam in eigs:
        ann = ann.mul(T.sub(ident.scale(lam)))
    if not ann.is_zero():
        raise NotAnnihilated(f"operator not annihilated by eigenvalues {eigenvalues}")
    out = []
    for lam in eigs:
        P = ident
        for mu in eigs:
            if mu != lam:
                P = P.mul(T.sub(ident.scale(mu))).scale(Fraction(1, 1) / (lam - mu))
        out.append(P)
    return out
