"""Exact linear and multilinear algebra over Q(zeta_M).

Vectors are dense tuples/lists of CycloNum; subspaces are canonical
reduced-row-echelon bases, so equal subspaces have identical
representations.  Pivoting is always by first nonzero entry (no magnitude
comparisons), which keeps every computation deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .cyclo import CycloNum
from .errors import AmbientMismatch

Vector = tuple[CycloNum, ...]


def zero_vector(n: int, M: int) -> list[CycloNum]:
    z = CycloNum.zero(M)
    return [z] * n


def unit_vector(n: int, M: int, i: int) -> list[CycloNum]:
    v = zero_vector(n, M)
    v[i] = CycloNum.one(M)
    return v


def vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def vec_scale(c: CycloNum, a):
    return [c * x for x in a]


def vec_is_zero(a) -> bool:
    return all(x.is_zero() for x in a)


def dot(a, b) -> CycloNum:
    acc = None
    for x, y in zip(a, b):
        if x.is_zero() or y.is_zero():
            continue
        t = x * y
        acc = t if acc is None else acc + t
    if acc is None:
        return CycloNum.zero(a[0].M if a else 3)
    return acc


class EchelonBasis:
    """Mutable reduced-row-echelon basis supporting incremental insertion."""

    def __init__(self, ambient: int, M: int):
        self.ambient = ambient
        self.M = M
        self.rows: list[list[CycloNum]] = []
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[CycloNum]) -> list[CycloNum]:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                for i in range(p, self.ambient):
                    if not row[i].is_zero():
                        v[i] = v[i] - c * row[i]
        return v

    def insert(self, vec: Sequence[CycloNum]) -> bool:
        """Insert a vector; returns True if the dimension grew."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if p is None:
            return False
        lead = v[p]
        if not lead.is_one():
            inv = lead.inverse()
            v = [inv * x for x in v]
        for row in self.rows:
            c = row[p]
            if not c.is_zero():
                for i in range(p, self.ambient):
                    if not v[i].is_zero():
                        row[i] = row[i] - c * v[i]
        at = next((k for k, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, p)
        return True

    def contains(self, vec: Sequence[CycloNum]) -> bool:
        return vec_is_zero(self.reduce(vec))

    def to_subspace(self) -> "Subspace":
        return Subspace(self.ambient, self.M,
                        tuple(tuple(r) for r in self.rows), tuple(self.pivots))


class Subspace:
    """An exact subspace of k^n in canonical reduced-row-echelon form."""

    __slots__ = ("ambient_dim", "conductor", "basis", "pivots")

    def __init__(self, ambient_dim: int, conductor: int,
                 basis: tuple[Vector, ...], pivots: tuple[int, ...]):
        self.ambient_dim = ambient_dim
        self.conductor = conductor
        self.basis = basis
        self.pivots = pivots

    @staticmethod
    def from_vectors(ambient: int, M: int, vectors: Iterable[Sequence[CycloNum]]) -> "Subspace":
        eb = EchelonBasis(ambient, M)
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector length {len(v)} != ambient {ambient}")
            eb.insert(v)
        return eb.to_subspace()

    @staticmethod
    def zero(ambient: int, M: int) -> "Subspace":
        return Subspace(ambient, M, (), ())

    @staticmethod
    def full(ambient: int, M: int) -> "Subspace":
        one = CycloNum.one(M)
        z = CycloNum.zero(M)
        rows = tuple(tuple(one if j == i else z for j in range(ambient)) for i in range(ambient))
        return Subspace(ambient, M, rows, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(
                f"ambient dims {self.ambient_dim} and {other.ambient_dim} differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def contains(self, vec: Sequence[CycloNum]) -> bool:
        eb = self._eb()
        return eb.contains(vec)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        eb = self._eb()
        return all(eb.contains(v) for v in other.basis)

    def reduce(self, vec: Sequence[CycloNum]) -> list[CycloNum]:
        """Canonical representative of vec modulo this subspace."""
        return self._eb().reduce(vec)

    def _eb(self) -> EchelonBasis:
        eb = EchelonBasis(self.ambient_dim, self.conductor)
        eb.rows = [list(r) for r in self.basis]
        eb.pivots = list(self.pivots)
        return eb

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        eb = self._eb()
        for v in other.basis:
            eb.insert(v)
        return eb.to_subspace()

    def perp(self) -> "Subspace":
        """Orthogonal complement for the standard coordinate pairing."""
        return kernel(self.basis, self.ambient_dim, self.conductor)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return self.perp().sum(other.perp()).perp()

    def complement_coords(self) -> list[int]:
        """Non-pivot coordinates: the canonical complement basis indices."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]


def subspace_ops(U: Subspace, V: Subspace, op: str):
    """Dispatch wrapper with the spec's operation names."""
    if op == "sum":
        return U.sum(V)
    if op == "intersect":
        return U.intersect(V)
    if op == "perp":
        return U.perp()
    if op == "equal":
        U._check(V)
        return U == V
    raise ValueError(f"unknown op {op!r}")


# -- matrices (lists of rows) --------------------------------------------------

def identity_matrix(n: int, M: int) -> list[list[CycloNum]]:
    one = CycloNum.one(M)
    z = CycloNum.zero(M)
    return [[one if i == j else z for j in range(n)] for i in range(n)]


def mat_vec(A, v):
    out = []
    for row in A:
        out.append(dot(row, v))
    return out


def mat_mul(A, B):
    n = len(B)
    cols = len(B[0]) if n else 0
    Bc = [[B[i][j] for i in range(n)] for j in range(cols)]
    return [[dot(row, col) for col in Bc] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_trace(A) -> CycloNum:
    acc = A[0][0]
    for i in range(1, len(A)):
        acc = acc + A[i][i]
    return acc


def mat_eq(A, B) -> bool:
    return all(x == y for ra, rb in zip(A, B) for x, y in zip(ra, rb))


def mat_inverse(A, M: int):
    """Inverse of a square matrix (solving A x = e_i), or None if singular."""
    n = len(A)
    cols = []
    for i in range(n):
        x = solve(A, unit_vector(n, M, i))
        if x is None:
            return None
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def solve(A, b):
    """One solution x of A x = b, or None if inconsistent (A: m rows)."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    M = b[0].M if b else A[0][0].M
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    eb = EchelonBasis(n + 1, M)
    for row in aug:
        eb.insert(row)
    x = zero_vector(n, M)
    for row, p in zip(eb.rows, eb.pivots):
        if p == n:
            return None  # row (0 ... 0 | 1): inconsistent
        x[p] = row[n]
    # back-check not needed: rref rows give x directly only if free vars set 0;
    # verify to be safe against free-variable interactions
    for row, p in zip(eb.rows, eb.pivots):
        acc = row[n]
        s = None
        for j in range(p, n):
            if not row[j].is_zero() and not x[j].is_zero():
                t = row[j] * x[j]
                s = t if s is None else s + t
        if s is None:
            s = CycloNum.zero(M)
        if s != acc:
            return None
    return x


def kernel(rows, n_cols: int, M: int) -> Subspace:
    """Kernel of the linear map given by a list of row vectors on k^n."""
    eb = EchelonBasis(n_cols, M)
    for r in rows:
        eb.insert(r)
    piv = list(eb.pivots)
    piv_set = set(piv)
    free = [i for i in range(n_cols) if i not in piv_set]
    vectors = []
    one = CycloNum.one(M)
    for f in free:
        v = zero_vector(n_cols, M)
        v[f] = one
        for row, p in zip(eb.rows, eb.pivots):
            if not row[f].is_zero():
                v[p] = -row[f]
        vectors.append(v)
    return Subspace.from_vectors(n_cols, M, vectors)


def image(rows, n_cols: int, M: int) -> Subspace:
    """Column space (image) of the matrix, as a subspace of k^m."""
    m = len(rows)
    cols = [[rows[i][j] for i in range(m)] for j in range(n_cols)]
    return Subspace.from_vectors(m, M, cols)


def preimage(rows, n_cols: int, M: int, W: Subspace) -> Subspace:
    """{x : A x in W} computed as the kernel of (W-perp basis) . A."""
    m = len(rows)
    comp = []
    for w in W.perp().basis:
        comp.append([dot(w, [rows[i][j] for i in range(m)]) for j in range(n_cols)])
    return kernel(comp, n_cols, M)


def linear_solve(A, mode: str, M: int, W: Subspace | None = None):
    """Spec-level dispatch: kernel / image / preimage_of(W) of a matrix."""
    n_cols = len(A[0]) if A else (W.ambient_dim if W else 0)
    if mode == "kernel":
        return kernel(A, n_cols, M)
    if mode == "image":
        return image(A, n_cols, M)
    if mode == "preimage":
        assert W is not None
        return preimage(A, n_cols, M, W)
    raise ValueError(f"unknown mode {mode!r}")


def intersect_kernels(matrices, n: int, M: int) -> Subspace:
    """Intersection of kernels, restricting step by step (cheap when it shrinks)."""
    basis = [tuple(unit_vector(n, M, i)) for i in range(n)]
    for A in matrices:
        if not basis:
            break
        # map current basis vectors through A, take kernel in the small coords
        imgs = [mat_vec(A, list(v)) for v in basis]
        rows = [[imgs[k][r] for k in range(len(basis))] for r in range(len(A))]
        small = kernel(rows, len(basis), M)
        new_basis = []
        for coeffs in small.basis:
            acc = zero_vector(n, M)
            for c, v in zip(coeffs, basis):
                if not c.is_zero():
                    acc = vec_add(acc, vec_scale(c, v))
            new_basis.append(tuple(acc))
        basis = new_basis
    return Subspace.from_vectors(n, M, basis)


# -- sparse order-3 tensors ----------------------------------------------------

class SparseTensor3:
    """Structure-constant tensor with strictly sorted nonzero entries."""

    __slots__ = ("dims", "entries")

    def __init__(self, dims: tuple[int, int, int],
                 entries: tuple[tuple[tuple[int, int, int], CycloNum], ...]):
        self.dims = dims
        self.entries = entries

    @staticmethod
    def from_dict(dims, d: dict) -> "SparseTensor3":
        items = tuple(sorted((k, v) for k, v in d.items() if not v.is_zero()))
        return SparseTensor3(tuple(dims), items)

    def __eq__(self, other):
        if not isinstance(other, SparseTensor3):
            return NotImplemented
        return self.dims == other.dims and self.entries == other.entries

    def __hash__(self):
        return hash((self.dims, self.entries))

    def __len__(self):
        return len(self.entries)

    def rows_ij(self) -> list[list[tuple[tuple[int, CycloNum], ...]]]:
        """rows[i][j] = ((k, c), ...): the vector e_i * e_j for a mult tensor."""
        n0, n1, _ = self.dims
        rows = [[[] for _ in range(n1)] for _ in range(n0)]
        for (i, j, k), c in self.entries:
            rows[i][j].append((k, c))
        return [[tuple(cell) for cell in row] for row in rows]

    def rows_i(self) -> list[tuple[tuple[tuple[int, int], CycloNum], ...]]:
        """rows[i] = (((j, k), c), ...): Delta(e_i) for a comult tensor."""
        n0 = self.dims[0]
        rows = [[] for _ in range(n0)]
        for (i, j, k), c in self.entries:
            rows[i].append(((j, k), c))
        return [tuple(r) for r in rows]


# -- associative algebra helpers ------------------------------------------------

def sparse_add_into(acc: dict, key, c: CycloNum):
    cur = acc.get(key)
    if cur is None:
        acc[key] = c
    else:
        s = cur + c
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


def mult_vectors(rows, u: dict, v: dict) -> dict:
    """Product of sparse coordinate vectors in an algebra given by mult rows."""
    acc: dict[int, CycloNum] = {}
    for i, ci in u.items():
        if ci.is_zero():
            continue
        ri = rows[i]
        for j, cj in v.items():
            if cj.is_zero():
                continue
            c = ci * cj
            for k, ck in ri[j]:
                sparse_add_into(acc, k, c * ck)
    return acc


def dense_to_sparse(v) -> dict:
    return {i: c for i, c in enumerate(v) if not c.is_zero()}


def sparse_to_dense(d: dict, n: int, M: int) -> list[CycloNum]:
    v = zero_vector(n, M)
    for i, c in d.items():
        v[i] = c
    return v


def left_mult_matrix(rows, v, n: int, M: int):
    """Matrix of x -> v*x in basis coordinates."""
    cols = []
    sv = dense_to_sparse(v) if not isinstance(v, dict) else v
    for j in range(n):
        col = mult_vectors(rows, sv, {j: CycloNum.one(M)})
        cols.append(col)
    A = [[CycloNum.zero(M)] * n for _ in range(n)]
    for j, col in enumerate(cols):
        for i, c in col.items():
            A[i][j] = c
    return A


def right_mult_matrix(rows, v, n: int, M: int):
    cols = []
    sv = dense_to_sparse(v) if not isinstance(v, dict) else v
    for j in range(n):
        col = mult_vectors(rows, {j: CycloNum.one(M)}, sv)
        cols.append(col)
    A = [[CycloNum.zero(M)] * n for _ in range(n)]
    for j, col in enumerate(cols):
        for i, c in col.items():
            A[i][j] = c
    return A


def trace_of_left_mults(mult: SparseTensor3, M: int) -> list[CycloNum]:
    """T[m] = Tr(L_{e_m})."""
    n = mult.dims[0]
    T = zero_vector(n, M)
    for (i, j, k), c in mult.entries:
        if j == k:
            T[i] = T[i] + c
    return T


def algebra_radical(mult: SparseTensor3, unit, M: int) -> Subspace:
    """Jacobson radical via the trace form (x,y) -> Tr(L_{xy}); char 0 only.

    Assumes the multiplication is associative and unital (caller-verified).
    """
    n = mult.dims[0]
    T = trace_of_left_mults(mult, M)
    gram = [[CycloNum.zero(M)] * n for _ in range(n)]
    for (i, j, k), c in mult.entries:
        if not T[k].is_zero():
            gram[i][j] = gram[i][j] + c * T[k]
    return kernel(gram, n, M)


def ideal_closure(rows, n: int, M: int, generators) -> Subspace:
    """Smallest subspace containing generators, closed under left/right mult."""
    eb = EchelonBasis(n, M)
    work = []
    for g in generators:
        gd = list(g)
        if eb.insert(gd):
            work.append(gd)
    one = CycloNum.one(M)
    while work:
        v = work.pop()
        sv = dense_to_sparse(v)
        for j in range(n):
            ej = {j: one}
            for prod in (mult_vectors(rows, sv, ej), mult_vectors(rows, ej, sv)):
                pv = sparse_to_dense(prod, n, M)
                if eb.insert(pv):
                    work.append(pv)
    return eb.to_subspace()


class QuotientAlgebra:
    """Algebra structure on the canonical complement of an ideal."""

    def __init__(self, rows, n: int, M: int, ideal: Subspace):
        self.M = M
        self.ideal = ideal
        self.coords = ideal.complement_coords()
        self.dim = len(self.coords)
        self.n = n
        pos = {c: t for t, c in enumerate(self.coords)}
        # projection matrix: reduce e_j mod ideal, read complement coords
        proj = [[CycloNum.zero(M)] * n for _ in range(self.dim)]
        for j in range(n):
            red = ideal.reduce(unit_vector(n, M, j))
            for c, t in pos.items():
                proj[t][j] = red[c]
        self.proj = proj
        # representatives: complement coordinate basis vectors
        self.reps = [unit_vector(n, M, c) for c in self.coords]
        # quotient multiplication rows
        d: dict[tuple[int, int, int], CycloNum] = {}
        for a in range(self.dim):
            sa = dense_to_sparse(self.reps[a])
            for b in range(self.dim):
                prod = mult_vectors(rows, sa, dense_to_sparse(self.reps[b]))
                red = ideal.reduce(sparse_to_dense(prod, n, M))
                for c, t in pos.items():
                    if not red[c].is_zero():
                        d[(a, b, t)] = red[c]
        self.mult = SparseTensor3.from_dict((self.dim,) * 3, d)
        self.rows = self.mult.rows_ij()

    def project(self, v):
        return mat_vec(self.proj, list(v))


def commutator_generators(rows, n: int, M: int):
    """All [e_i, e_j], i < j, as dense vectors (commutator-ideal generators)."""
    one = CycloNum.one(M)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            a = mult_vectors(rows, {i: one}, {j: one})
            b = mult_vectors(rows, {j: one}, {i: one})
            acc = dict(a)
            for k, c in b.items():
                sparse_add_into(acc, k, -c)
            if acc:
                out.append(sparse_to_dense(acc, n, M))
    return out


def split_character_count(mult: SparseTensor3, unit, M: int) -> int:
    """dim of the maximal split commutative semisimple quotient.

    Over a splitting field this equals the number of 1-dimensional blocks
    of A/Rad A, i.e. the number of algebra characters.
    """
    n = mult.dims[0]
    rad = algebra_radical(mult, unit, M)
    rows = mult.rows_ij()
    if rad.dim:
        q = QuotientAlgebra(rows, n, M, rad)
        rows, n = q.rows, q.dim
    gens = commutator_generators(rows, n, M)
    ideal = ideal_closure(rows, n, M, gens)
    return n - ideal.dim


def block_count(mult: SparseTensor3, unit, M: int) -> int:
    """Number of Wedderburn blocks of A/Rad A = dim of its center (split case)."""
    n = mult.dims[0]
    rad = algebra_radical(mult, unit, M)
    rows = mult.rows_ij()
    if rad.dim:
        q = QuotientAlgebra(rows, n, M, rad)
        rows, n = q.rows, q.dim
    mats = []
    for j in range(n):
        ej = unit_vector(n, M, j)
        L = left_mult_matrix(rows, ej, n, M)
        R = right_mult_matrix(rows, ej, n, M)
        mats.append([[L[a][b] - R[a][b] for b in range(n)] for a in range(n)])
    return intersect_kernels(mats, n, M).dim


def center_dim(mult: SparseTensor3, M: int) -> int:
    n = mult.dims[0]
    rows = mult.rows_ij()
    mats = []
    for j in range(n):
        ej = unit_vector(n, M, j)
        L = left_mult_matrix(rows, ej, n, M)
        R = right_mult_matrix(rows, ej, n, M)
        mats.append([[L[a][b] - R[a][b] for b in range(n)] for a in range(n)])
    return intersect_kernels(mats, n, M).dim
