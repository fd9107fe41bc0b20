"""Exact linear algebra over a :class:`~equicobar.fields.Field`.

Matrices are stored sparse, as ``{(i, j): value}`` with zero entries
omitted. Elimination over prime fields goes through the dense kernel in
:mod:`equicobar.kernels` (compiled when available); every other field uses
sparse dict-row Gauss-Jordan elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import kernels

DENSE_LIMIT = 4_000_000


def raw(F, v):
    """Normalise user input to a raw field value (GF(p^k) takes residue codes)."""
    from .fields import FieldElem

    if isinstance(v, FieldElem):
        return v.value
    if F.kind == "rational":
        return F.coerce(v)
    if F.k == 1:
        return int(v) % F.p
    if not 0 <= v < F.order:
        raise ValueError(f"{v} is not a residue code of {F}")
    return v


class Matrix:
    """A ``rows x cols`` matrix over ``F`` in coordinate form."""

    def __init__(self, F, rows, cols, entries=None):
        self.F = F
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry {(i, j)} outside {rows}x{cols}")
            if v != F.zero:
                self.entries[(i, j)] = v

    @classmethod
    def from_dense(cls, F, data, cols=None):
        rows = len(data)
        cols = cols if cols is not None else (len(data[0]) if data else 0)
        ent = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for j, v in enumerate(row):
                v = raw(F, v)
                if v != F.zero:
                    ent[(i, j)] = v
        return cls(F, rows, cols, ent)

    @classmethod
    def identity(cls, F, n):
        return cls(F, n, n, {(i, i): F.one for i in range(n)})

    def to_dense(self):
        out = [[self.F.zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self):
        return Matrix(self.F, self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def matvec(self, vec):
        F = self.F
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = [F.zero] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j] != F.zero:
                out[i] = F.add(out[i], F.mul(v, vec[j]))
        return out

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        F = self.F
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        ent = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                ent[(i, j)] = F.add(ent.get((i, j), F.zero), F.mul(a, b))
        return Matrix(F, self.rows, other.cols, ent)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.F == other.F
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"Matrix({self.F}, {self.rows}x{self.cols}, nnz={len(self.entries)})"


# -- elimination ---------------------------------------------------------------

def _rref_sparse(F, rows, ncols):
    piv = {}
    for r in rows:
        r = {c: v for c, v in r.items() if v != F.zero}
        while True:
            hit = [c for c in r if c in piv]
            if not hit:
                break
            c = hit[0]
            coef = r[c]
            for cc, vv in piv[c].items():
                nv = F.sub(r.get(cc, F.zero), F.mul(coef, vv))
                if nv == F.zero:
                    r.pop(cc, None)
                else:
                    r[cc] = nv
        if not r:
            continue
        p = min(r)
        inv = F.inv(r[p])
        r = {c: F.mul(inv, v) for c, v in r.items()}
        for other in piv.values():
            coef = other.get(p)
            if coef is not None:
                for cc, vv in r.items():
                    nv = F.sub(other.get(cc, F.zero), F.mul(coef, vv))
                    if nv == F.zero:
                        other.pop(cc, None)
                    else:
                        other[cc] = nv
        piv[p] = r
    pivots = sorted(piv)
    return [piv[p] for p in pivots], pivots


def rref_rows(F, rows, ncols):
    """Reduced row echelon form of sparse rows (list of ``{col: value}``).

    Returns ``(nonzero reduced rows, pivot columns)`` with rows ordered by
    pivot.
    """
    if F.kind == "finite" and F.k == 1 and len(rows) * ncols <= DENSE_LIMIT and rows:
        p = F.p
        dense = []
        for r in rows:
            d = [0] * ncols
            for c, v in r.items():
                d[c] = v
            dense.append(d)
        pivots = kernels.rref_mod_p(dense, ncols, p)
        out = []
        for i in range(len(pivots)):
            out.append({j: int(v) for j, v in enumerate(dense[i]) if v})
        return out, list(pivots)
    return _rref_sparse(F, rows, ncols)


def _as_row_dicts(F, rows):
    if rows and isinstance(rows[0], dict):
        return rows
    return [{j: v for j, v in enumerate(r) if v != F.zero} for r in rows]


def rank(F, rows, ncols):
    return len(rref_rows(F, _as_row_dicts(F, rows), ncols)[1])


def kernel_vectors(F, rows, ncols):
    """Basis (dense vectors) of ``{x : A x = 0}`` for ``A`` given by rows."""
    red, pivots = rref_rows(F, _as_row_dicts(F, rows), ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [F.zero] * ncols
        v[free] = F.one
        for r, p in zip(red, pivots):
            c = r.get(free)
            if c is not None:
                v[p] = F.neg(c)
        basis.append(v)
    return basis


class Subspace:
    """Span of a set of vectors, held in reduced echelon form.

    ``reduce(v)`` returns the canonical representative of ``v`` modulo the
    span (zero at every pivot coordinate); ``coords(v)`` expresses a member
    of the span in the echelon basis.
    """

    def __init__(self, F, dim, vectors=()):
        self.F = F
        self.dim = dim
        rows = _as_row_dicts(F, [list(v) for v in vectors]) if vectors else []
        self.rows, self.pivots = rref_rows(F, rows, dim) if rows else ([], [])

    def __len__(self):
        return len(self.pivots)

    def basis(self):
        F = self.F
        out = []
        for r in self.rows:
            v = [F.zero] * self.dim
            for c, x in r.items():
                v[c] = x
            out.append(v)
        return out

    def reduce(self, v):
        F = self.F
        v = list(v)
        for r, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != F.zero:
                for j, x in r.items():
                    v[j] = F.sub(v[j], F.mul(c, x))
        return v

    def contains(self, v):
        return all(x == self.F.zero for x in self.reduce(v))

    def coords(self, v):
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return [v[p] for p in self.pivots]

    def complement_indices(self):
        s = set(self.pivots)
        return [i for i in range(self.dim) if i not in s]


def solve_linear(M, mode, rhs=None):
    """Exact linear algebra on a :class:`Matrix`.

    ``mode`` is ``"kernel"`` (list of basis vectors), ``"image"`` (basis of
    the column space), ``"rank"`` (int) or ``"solve"`` (``(particular,
    kernel basis)`` or ``None`` when ``M x = rhs`` is inconsistent).
    """
    F = M.F
    if mode == "rank":
        return len(rref_rows(F, M.row_dicts(), M.cols)[1])
    if mode == "kernel":
        return kernel_vectors(F, M.row_dicts(), M.cols)
    if mode == "image":
        return Subspace(F, M.rows, M.transpose().to_dense()).basis()
    if mode == "solve":
        if rhs is None or len(rhs) != M.rows:
            raise ValueError("dimension mismatch for solve")
        rows = M.row_dicts()
        for i, r in enumerate(rows):
            if rhs[i] != F.zero:
                r[M.cols] = rhs[i]
        red, pivots = rref_rows(F, rows, M.cols + 1)
        if M.cols in pivots:
            return None
        x = [F.zero] * M.cols
        for r, p in zip(red, pivots):
            x[p] = r.get(M.cols, F.zero)
        return x, kernel_vectors(F, M.row_dicts(), M.cols)
    raise ValueError(f"unknown mode {mode!r}")


def invert(F, dense):
    """Inverse of a square dense matrix; raises ``ValueError`` if singular."""
    n = len(dense)
    rows = []
    for i, r in enumerate(dense):
        d = {j: v for j, v in enumerate(r) if v != F.zero}
        d[n + i] = F.one
        rows.append(d)
    red, pivots = rref_rows(F, rows, 2 * n)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    out = []
    for r in red[:n]:
        out.append([r.get(n + j, F.zero) for j in range(n)])
    return out


# -- integers ------------------------------------------------------------------

@dataclass
class SmithForm:
    rank: int
    divisors: list = dc_field(default_factory=list)

    def torsion(self):
        return [d for d in self.divisors if d > 1]


def integer_smith_normal_form(M):
    """Rank and elementary divisors ``d1 | d2 | ...`` of an integer matrix."""
    A = [list(map(int, r)) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(r) != n for r in A):
        raise ValueError("ragged matrix")
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for r in A:
            r[t], r[pj] = r[pj], r[t]
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    for j in range(t, n):
                        A[i][j] -= q * A[t][j]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    for i in range(t, m):
                        A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        for r in A:
                            r[t], r[j] = r[j], r[t]
                        changed = True
            if changed:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            i, _ = bad
            for j in range(t, n):
                A[t][j] += A[i][j]
        diag.append(abs(A[t][t]))
        t += 1
    return SmithForm(len(diag), diag)
