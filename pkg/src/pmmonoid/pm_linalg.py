"""
Exact rational matrix tuples and limits of polynomial matrix families.

Two views of a compactification point are used. A MatrixTuple keeps full n x n terms, each acting
nontrivially on the common kernel of its predecessors, with trivial total kernel. family_limit
returns the restricted view instead: term i is a map from the running kernel V_i to V, written in the
canonical reduced-echelon basis of V_i (an n x dim V_i matrix).
"""
from __future__ import annotations

import dataclasses
import functools
import json
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclasses.dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} grid")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RationalMatrix:
        entries = tuple(tuple(_frac(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, positions: Iterable[tuple[int, int]], cols: int | None = None) -> RationalMatrix:
        """0/1 matrix with ones at the given 1-based (row, col) positions."""
        cols = n if cols is None else cols
        grid = [[0] * cols for _ in range(n)]
        for r, c in positions:
            grid[r - 1][c - 1] = 1
        return cls.from_rows(grid, cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], rows: int) -> RationalMatrix:
        return cls(rows, len(columns), tuple(tuple(col[i] for col in columns) for i in range(rows)))

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        return self.entries[rc[0]][rc[1]]

    def columns(self) -> list[Vector]:
        return [tuple(r[j] for r in self.entries) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.columns()
        return RationalMatrix(self.rows, other.cols, tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in ocols) for r in self.entries
        ))

    def scale(self, c) -> RationalMatrix:
        c = _frac(c)
        return RationalMatrix(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self.entries))

    def projective_normal(self) -> RationalMatrix:
        """Scale so the first nonzero entry (row-major) is 1."""
        for r in self.entries:
            for x in r:
                if x:
                    return self.scale(1 / x)
        return self

    def to_json(self) -> dict:
        out = {"n": self.rows, "entries": [[str(x) for x in r] for r in self.entries]}
        if self.cols != self.rows:
            out["rows"], out["cols"] = self.rows, self.cols
        return out

    @classmethod
    def from_json(cls, data: dict) -> RationalMatrix:
        m = cls.from_rows(data["entries"], data.get("cols"))
        if m.rows != data.get("rows", data.get("n", m.rows)):
            raise ValueError("declared size does not match entries")
        return m

    def __str__(self):
        width = max((len(str(x)) for r in self.entries for x in r), default=1)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self.entries)


# Row reduction ---------------------------------------------------------------------------------------

def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


@dataclasses.dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient with a canonical reduced-echelon basis."""
    ambient: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Sequence]) -> Subspace:
        rows, _ = rref([[_frac(x) for x in v] for v in vectors], ambient)
        return cls(ambient, tuple(tuple(r) for r in rows))

    @classmethod
    def full(cls, ambient: int) -> Subspace:
        return cls.span(ambient, RationalMatrix.identity(ambient).entries)

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls(ambient, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def inclusion(self) -> RationalMatrix:
        """ambient x dim matrix whose columns are the basis vectors."""
        return RationalMatrix.from_columns(self.basis, self.ambient)

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(v) if x != 0) for v in self.basis]

    def contains(self, v: Sequence) -> bool:
        return rank([*self.basis, tuple(_frac(x) for x in v)], self.ambient) == self.dim

    def __le__(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)


def kernel(A: RationalMatrix) -> Subspace:
    """
    Null space of A with its canonical basis.

    >>> kernel(RationalMatrix.unit(2, [(1, 1)])).basis
    ((Fraction(0, 1), Fraction(1, 1)),)
    """
    rows, pivots = rref(A.entries, A.cols)
    free = [c for c in range(A.cols) if c not in pivots]
    vecs = []
    for f in free:
        v = [Fraction(0)] * A.cols
        v[f] = Fraction(1)
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        vecs.append(v)
    return Subspace.span(A.cols, vecs)


def orthogonal_complement(U: Subspace) -> Subspace:
    """{x : u.x = 0 for u in U}, with respect to the coordinate pairing."""
    if U.dim == 0:
        return Subspace.full(U.ambient)
    return kernel(RationalMatrix(U.dim, U.ambient, U.basis))


def intersect(U: Subspace, W: Subspace) -> Subspace:
    if U.ambient != W.ambient:
        raise ValueError(f"ambient dimension mismatch: {U.ambient} vs {W.ambient}")
    constraints = orthogonal_complement(U).basis + orthogonal_complement(W).basis
    if not constraints:
        return Subspace.full(U.ambient)
    return kernel(RationalMatrix(len(constraints), U.ambient, constraints))


def restrict(A: RationalMatrix, W: Subspace) -> RationalMatrix:
    """A composed with the inclusion of W's canonical basis."""
    return A @ W.inclusion()


# Tuples in the full-endomorphism view ----------------------------------------------------------------

class TupleError(ValueError):
    """Input does not define a point of the compactification."""


@dataclasses.dataclass(frozen=True)
class MatrixTuple:
    terms: tuple[RationalMatrix, ...]

    def __post_init__(self):
        check_tuple_invariants(self.terms)

    @property
    def n(self) -> int:
        return self.terms[0].rows

    def __len__(self):
        return len(self.terms)

    def __mul__(self, other: MatrixTuple) -> MatrixTuple:
        return mtuple_product(self, other)

    def projectively_equal(self, other: MatrixTuple) -> bool:
        return len(self) == len(other) and all(
            a.projective_normal() == b.projective_normal() for a, b in zip(self.terms, other.terms))

    def to_json(self) -> dict:
        return {"terms": [t.to_json() for t in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> MatrixTuple:
        return cls(tuple(RationalMatrix.from_json(t) for t in data["terms"]))


def check_tuple_invariants(terms: Sequence[RationalMatrix]):
    if not terms:
        raise TupleError("tuple must have at least one term")
    n = terms[0].rows
    running = Subspace.full(n)
    for i, A in enumerate(terms):
        if A.rows != n or A.cols != n:
            raise TupleError(f"term {i} is {A.rows}x{A.cols}, expected {n}x{n}")
        if A.is_zero():
            raise TupleError(f"term {i} is zero")
        if restrict(A, running).is_zero():
            raise TupleError(f"term {i} vanishes on the common kernel of the earlier terms")
        running = intersect(running, kernel(A))
    if running.dim:
        raise TupleError(f"common kernel has dimension {running.dim}, expected 0")


def mtuple_normalize(raw: Sequence[RationalMatrix]) -> MatrixTuple:
    """
    Keep each term that is nonzero on the common kernel of the terms kept so far; stop once that
    kernel is zero.
    """
    if not raw:
        raise TupleError("empty tuple")
    n = raw[0].rows
    if any(A.rows != n or A.cols != n for A in raw):
        raise TupleError("all terms must be square of the same size")
    if all(A.is_zero() for A in raw):
        raise TupleError("all terms are zero")
    kept = []
    running = Subspace.full(n)
    for A in raw:
        if running.dim == 0:
            break
        if restrict(A, running).is_zero():
            continue
        kept.append(A)
        running = intersect(running, kernel(A))
    if running.dim:
        raise TupleError(f"terms leave a common kernel of dimension {running.dim}")
    return MatrixTuple(tuple(kept))


def mtuple_product(A: MatrixTuple, B: MatrixTuple) -> MatrixTuple:
    """(A_0 B_0, A_1 B_0, ..., A_m B_0, A_0 B_1, ...), redundant terms removed."""
    if A.n != B.n:
        raise ValueError(f"size mismatch: {A.n} vs {B.n}")
    return mtuple_normalize([a @ b for b in B.terms for a in A.terms])


# Polynomial families ---------------------------------------------------------------------------------

Poly = tuple[Fraction, ...]


def _trim(coeffs: Sequence[Fraction]) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_add(p: Poly, q: Poly) -> Poly:
    m = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(m)])


def poly_eval(p: Poly, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


@dataclasses.dataclass(frozen=True)
class PolyMatrix:
    """Matrix of polynomials in t; entries[i][j][d] is the coefficient of t^d."""
    rows: int
    cols: int
    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} grid")
        object.__setattr__(self, "entries", tuple(tuple(_trim(p) for p in r) for r in self.entries))

    @classmethod
    def from_coeffs(cls, grid: Sequence[Sequence[Sequence]]) -> PolyMatrix:
        entries = tuple(tuple(tuple(_frac(c) for c in p) for p in r) for r in grid)
        return cls(len(entries), len(entries[0]) if entries else 0, entries)

    @classmethod
    def constant(cls, M: RationalMatrix) -> PolyMatrix:
        return cls(M.rows, M.cols, tuple(tuple((x,) for x in r) for r in M.entries))

    @classmethod
    def diagonal_powers(cls, powers: Sequence[int]) -> PolyMatrix:
        """diag(t^p_1, t^p_2, ...)."""
        n = len(powers)
        grid = [[[0] * p + [1] if i == j else [] for j, p in enumerate(powers)] for i in range(n)]
        return cls.from_coeffs(grid)

    def degree_range(self) -> tuple[int, int] | None:
        """(lowest, highest) degree carrying a nonzero coefficient, None for the zero matrix."""
        degs = [d for r in self.entries for p in r for d, c in enumerate(p) if c]
        return (min(degs), max(degs)) if degs else None

    def coefficient(self, d: int) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(p[d] if d < len(p) else Fraction(0) for p in r) for r in self.entries))

    def at(self, t) -> RationalMatrix:
        t = _frac(t)
        return RationalMatrix(self.rows, self.cols, tuple(tuple(poly_eval(p, t) for p in r) for r in self.entries))

    def __matmul__(self, M: RationalMatrix) -> PolyMatrix:
        if self.cols != M.rows:
            raise ValueError("shape mismatch")
        cols = M.columns()
        return PolyMatrix(self.rows, M.cols, tuple(
            tuple(functools.reduce(poly_add, (poly_mul(p, (c,)) for p, c in zip(r, col) if c), ()) for col in cols)
            for r in self.entries))

    def scale(self, c) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols, tuple(tuple(poly_mul(p, (_frac(c),)) for p in r) for r in self.entries))

    def shift(self, k: int) -> PolyMatrix:
        """Multiply by t^k."""
        return PolyMatrix(self.rows, self.cols, tuple(tuple(((Fraction(0),) * k + p) if p else () for p in r)
                                                      for r in self.entries))

    def to_json(self) -> dict:
        return {"n": self.rows,
                "entries": [[{"coeffs": [str(c) for c in p] or ["0"]} for p in r] for r in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> PolyMatrix:
        grid = []
        for r in data["entries"]:
            row = []
            for x in r:
                if isinstance(x, dict):
                    row.append(list(x["coeffs"]))
                else:
                    row.append([x])
            grid.append(row)
        P = cls.from_coeffs(grid)
        if "n" in data and data["n"] != P.rows:
            raise ValueError("declared n does not match entries")
        return P


def determinant(M: RationalMatrix) -> Fraction:
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    m = [list(r) for r in M.entries]
    det = Fraction(1)
    n = M.rows
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def det_is_nonzero_poly(P: PolyMatrix) -> bool:
    """det P(t) has degree <= rows * max degree, so it vanishes identically iff it vanishes at that many + 1 points."""
    if P.rows != P.cols:
        raise ValueError("family must be square")
    rng = P.degree_range()
    if rng is None:
        return False
    bound = P.rows * rng[1]
    return any(determinant(P.at(t)) != 0 for t in range(1, bound + 2))


def projective_limit(P: PolyMatrix) -> RationalMatrix:
    """Coefficient matrix of the lowest power of t present anywhere in P."""
    rng = P.degree_range()
    if rng is None:
        raise ValueError("projective limit of the zero matrix")
    return P.coefficient(rng[0])


def coordinates(W: Subspace, U: Subspace) -> RationalMatrix:
    """dim U x dim W matrix expressing W's canonical basis in U's canonical basis."""
    if not W <= U:
        raise ValueError("subspace is not contained in the coordinate domain")
    piv = U.pivots()
    return RationalMatrix.from_columns([tuple(v[p] for p in piv) for v in W.basis], U.dim)


def restriction_limit(P: PolyMatrix, W: Subspace, domain: Subspace | None = None) -> RationalMatrix:
    """
    Projective limit of P restricted to W. When P is a map out of a subspace `domain` (its columns
    indexed by domain's canonical basis), W must lie in domain and is rewritten in those coordinates.
    """
    if W.dim == 0:
        raise ValueError("restriction to the zero subspace")
    if domain is None:
        if P.cols != W.ambient:
            raise ValueError(f"family has {P.cols} columns but the subspace lives in dimension {W.ambient}")
        incl = W.inclusion()
    else:
        if P.cols != domain.dim:
            raise ValueError(f"family has {P.cols} columns but its domain has dimension {domain.dim}")
        incl = coordinates(W, domain)
    R = P @ incl
    if R.degree_range() is None:
        raise ValueError("family vanishes on the subspace")
    return projective_limit(R)


@dataclasses.dataclass(frozen=True)
class LimitTerm:
    matrix: RationalMatrix     # n x dim(domain), in the domain's canonical basis
    domain: Subspace

    def padded(self) -> RationalMatrix:
        """n x n matrix with the kernel-coordinate columns placed at the domain's pivot columns."""
        n = self.domain.ambient
        cols = [(Fraction(0),) * n] * n
        for j, p in enumerate(self.domain.pivots()):
            cols[p] = tuple(r[j] for r in self.matrix.entries)
        return RationalMatrix.from_columns(cols, self.matrix.rows)


@dataclasses.dataclass(frozen=True)
class FamilyLimit:
    terms: tuple[LimitTerm, ...]

    def matrices(self) -> list[RationalMatrix]:
        return [t.matrix for t in self.terms]

    def padded(self) -> MatrixTuple:
        return MatrixTuple(tuple(t.padded() for t in self.terms))

    def to_json(self) -> dict:
        return {"terms": [{"matrix": t.matrix.to_json(),
                           "domain": [[str(x) for x in v] for v in t.domain.basis],
                           "padded": t.padded().to_json()} for t in self.terms]}


def family_limit(P: PolyMatrix) -> FamilyLimit:
    """
    Limit of the projectivized family as t -> 0: the projective limit on the whole space, then on the
    kernel of that limit, and so on until the running kernel is zero.
    """
    if not det_is_nonzero_poly(P):
        raise ValueError("determinant of the family vanishes identically")
    n = P.rows
    W = Subspace.full(n)
    terms = []
    while W.dim:
        A = restriction_limit(P, W)
        terms.append(LimitTerm(A, W))
        K = kernel(A)
        incl = W.inclusion()
        W_next = Subspace.span(n, [tuple(r[0] for r in (incl @ RationalMatrix.from_columns([v], W.dim)).entries)
                                   for v in K.basis])
        assert W_next.dim < W.dim, "running kernel did not shrink"
        W = W_next
    return FamilyLimit(tuple(terms))


def load_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def realize(a) -> MatrixTuple:
    """Rational matrix tuple of an R_n element: one 0/1 term per block, with a 1 at (perm(j), j)."""
    from .pm_core import to_matrix_tuple
    sym = to_matrix_tuple(a)
    return MatrixTuple(tuple(RationalMatrix.unit(sym.n, sorted(t)) for t in sym.terms))
