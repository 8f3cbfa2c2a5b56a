"""Finite-dimensional Hopf algebras as sparse structure constants.

A FinHopf stores multiplication c_{ij}^k, comultiplication d_i^{jk}, unit,
counit and the antipode matrix explicitly; nothing is derived implicitly.
verify_hopf checks every axiom exactly and reports failures per axiom with
the first failing index, so constructors can self-validate.
"""

from __future__ import annotations

from .cyclo import CycloNum
from .errors import (AntipodeNotInvertible, ConductorMismatch, NotAHopfIdeal,
                     NotSurjective)
from .linalg import (SparseTensor3, Subspace, dense_to_sparse,
                     identity_matrix, image, kernel, mat_inverse, mat_vec,
                     mult_vectors, sparse_add_into, sparse_to_dense,
                     unit_vector, vec_is_zero, zero_vector)


class ClaimSet:
    """Unverified metadata attached by constructors; verified before use."""

    __slots__ = ("grouplikes", "characters", "iso_fixtures")

    def __init__(self, grouplikes=(), characters=(), iso_fixtures=()):
        self.grouplikes = tuple(tuple(v) for v in grouplikes)
        self.characters = tuple(tuple(v) for v in characters)
        self.iso_fixtures = tuple(iso_fixtures)

    def swapped(self) -> "ClaimSet":
        return ClaimSet(self.characters, self.grouplikes, ())


class FinHopf:
    """A Hopf algebra over Q(zeta_M) given by structure constants."""

    def __init__(self, dim: int, conductor: int, mult: SparseTensor3,
                 unit, comult: SparseTensor3, counit, antipode,
                 claims: ClaimSet | None = None, label: str = ""):
        self.dim = dim
        self.conductor = conductor
        self.mult = mult
        self.unit = tuple(unit)
        self.comult = comult
        self.counit = tuple(counit)
        self.antipode = tuple(tuple(r) for r in antipode)
        self.claims = claims or ClaimSet()
        self.label = label
        self._cache: dict = {}

    # -- cached views ----------------------------------------------------------

    @property
    def mrows(self):
        r = self._cache.get("mrows")
        if r is None:
            r = self.mult.rows_ij()
            self._cache["mrows"] = r
        return r

    @property
    def crows(self):
        r = self._cache.get("crows")
        if r is None:
            r = self.comult.rows_i()
            self._cache["crows"] = r
        return r

    @property
    def antipode_inv(self):
        r = self._cache.get("sinv")
        if r is None:
            r = mat_inverse([list(row) for row in self.antipode], self.conductor)
            if r is None:
                raise AntipodeNotInvertible(self.label or "antipode matrix is singular")
            self._cache["sinv"] = r
        return r

    def dual_cached(self) -> "FinHopf":
        r = self._cache.get("dual")
        if r is None:
            r = dual(self)
            self._cache["dual"] = r
        return r

    # -- element operations ----------------------------------------------------

    def mul(self, u: dict, v: dict) -> dict:
        return mult_vectors(self.mrows, u, v)

    def comult_of(self, v: dict) -> dict:
        out: dict = {}
        crows = self.crows
        for i, c in v.items():
            for (j, k), d in crows[i]:
                sparse_add_into(out, (j, k), c * d)
        return out

    def counit_of(self, v: dict) -> CycloNum:
        acc = CycloNum.zero(self.conductor)
        for i, c in v.items():
            if not self.counit[i].is_zero():
                acc = acc + c * self.counit[i]
        return acc

    def antipode_of(self, v: dict) -> dict:
        out: dict = {}
        S = self.antipode
        for j, c in v.items():
            for i in range(self.dim):
                if not S[i][j].is_zero():
                    sparse_add_into(out, i, c * S[i][j])
        return out

    def unit_sparse(self) -> dict:
        return dense_to_sparse(self.unit)

    def tensor_mul(self, X: dict, Y: dict) -> dict:
        """Product of sparse elements of H (x) H."""
        out: dict = {}
        mrows = self.mrows
        for (a, b), c in X.items():
            ra = mrows[a]
            rb = mrows[b]
            for (al, be), d in Y.items():
                cd = c * d
                for k1, c1 in ra[al]:
                    cc = cd * c1
                    for k2, c2 in rb[be]:
                        sparse_add_into(out, (k1, k2), cc * c2)
        return out

    def is_grouplike(self, v) -> bool:
        sv = dense_to_sparse(list(v)) if not isinstance(v, dict) else v
        if not self.counit_of(sv).is_one():
            return False
        dv = self.comult_of(sv)
        outer: dict = {}
        for a, c in sv.items():
            for b, d in sv.items():
                sparse_add_into(outer, (a, b), c * d)
        return dv == outer

    def delta2(self, i: int):
        """Delta^2(e_i) as a tuple of ((a,b,c), coeff)."""
        cache = self._cache.setdefault("d2", {})
        r = cache.get(i)
        if r is None:
            acc: dict = {}
            for (j, k), c in self.crows[i]:
                for (a, b), d in self.crows[j]:
                    sparse_add_into(acc, (a, b, k), c * d)
            r = tuple(acc.items())
            cache[i] = r
        return r

    def __repr__(self):
        return f"FinHopf({self.label or 'unnamed'}, dim={self.dim}, M={self.conductor})"


# -- verification ---------------------------------------------------------------


class CheckResult:
    __slots__ = ("name", "ok", "first_failure")

    def __init__(self, name, ok, first_failure=None):
        self.name = name
        self.ok = ok
        self.first_failure = first_failure

    def __repr__(self):
        return f"{self.name}: {'pass' if self.ok else f'FAIL at {self.first_failure}'}"


class VerificationReport:
    def __init__(self, checks):
        self.checks = list(checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]

    def lines(self):
        return [repr(c) for c in self.checks]

    def __repr__(self):
        return "; ".join(self.lines())


def verify_hopf(H: FinHopf) -> VerificationReport:
    """Exact check of every Hopf axiom; failures are report entries."""
    n, M = H.dim, H.conductor
    mrows, crows = H.mrows, H.crows
    one = CycloNum.one(M)
    checks = []

    def sparse_eq(a: dict, b: dict) -> bool:
        return a == b

    # associativity
    fail = None
    for i in range(n):
        ri = mrows[i]
        for j in range(n):
            v = ri[j]
            rj = mrows[j]
            for k in range(n):
                lhs: dict = {}
                for m, c in v:
                    for l, d in mrows[m][k]:
                        sparse_add_into(lhs, l, c * d)
                rhs: dict = {}
                for m, c in rj[k]:
                    for l, d in ri[m]:
                        sparse_add_into(rhs, l, c * d)
                if lhs != rhs:
                    fail = (i, j, k)
                    break
            if fail:
                break
        if fail:
            break
    checks.append(CheckResult("associativity", fail is None, fail))

    # unit laws
    fail = None
    su = H.unit_sparse()
    for j in range(n):
        ej = {j: one}
        if H.mul(su, ej) != ej or H.mul(ej, su) != ej:
            fail = (j,)
            break
    checks.append(CheckResult("unit", fail is None, fail))

    # coassociativity
    fail = None
    for i in range(n):
        lhs: dict = {}
        rhs: dict = {}
        for (j, k), c in crows[i]:
            for (a, b), d in crows[j]:
                sparse_add_into(lhs, (a, b, k), c * d)
            for (a, b), d in crows[k]:
                sparse_add_into(rhs, (j, a, b), c * d)
        if lhs != rhs:
            fail = (i,)
            break
    checks.append(CheckResult("coassociativity", fail is None, fail))

    # counit laws
    fail = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in crows[i]:
            if not H.counit[j].is_zero():
                sparse_add_into(left, k, c * H.counit[j])
            if not H.counit[k].is_zero():
                sparse_add_into(right, j, c * H.counit[k])
        ei = {i: one}
        if left != ei or right != ei:
            fail = (i,)
            break
    checks.append(CheckResult("counit", fail is None, fail))

    # comultiplication is an algebra map (and Delta(1) = 1 (x) 1)
    fail = None
    d_unit = H.comult_of(su)
    outer_unit: dict = {}
    for a, c in su.items():
        for b, d in su.items():
            sparse_add_into(outer_unit, (a, b), c * d)
    if d_unit != outer_unit:
        fail = ("unit",)
    else:
        for i in range(n):
            di = crows[i]
            for j in range(n):
                lhs: dict = {}
                for k, c in mrows[i][j]:
                    for (a, b), d in crows[k]:
                        sparse_add_into(lhs, (a, b), c * d)
                rhs: dict = {}
                dj = crows[j]
                for (a, b), c in di:
                    ra = mrows[a]
                    rb = mrows[b]
                    for (al, be), d in dj:
                        cd = c * d
                        for k1, c1 in ra[al]:
                            cc = cd * c1
                            for k2, c2 in rb[be]:
                                sparse_add_into(rhs, (k1, k2), cc * c2)
                if lhs != rhs:
                    fail = (i, j)
                    break
            if fail:
                break
    checks.append(CheckResult("comult_algebra_map", fail is None, fail))

    # counit is an algebra map
    fail = None
    if not H.counit_of(su).is_one():
        fail = ("unit",)
    else:
        for i in range(n):
            ei_eps = H.counit[i]
            for j in range(n):
                acc = CycloNum.zero(M)
                for k, c in mrows[i][j]:
                    if not H.counit[k].is_zero():
                        acc = acc + c * H.counit[k]
                if acc != ei_eps * H.counit[j]:
                    fail = (i, j)
                    break
            if fail:
                break
    checks.append(CheckResult("counit_algebra_map", fail is None, fail))

    # antipode axioms: m(S (x) id)Delta = unit.counit = m(id (x) S)Delta
    fail_l = None
    fail_r = None
    S = H.antipode
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in crows[i]:
            sj = {a: S[a][j] for a in range(n) if not S[a][j].is_zero()}
            for l, d in H.mul(sj, {k: one}).items():
                sparse_add_into(left, l, c * d)
            sk = {a: S[a][k] for a in range(n) if not S[a][k].is_zero()}
            for l, d in H.mul({j: one}, sk).items():
                sparse_add_into(right, l, c * d)
        target = {a: H.counit[i] * cu for a, cu in su.items()} if not H.counit[i].is_zero() else {}
        target = {a: v for a, v in target.items() if not v.is_zero()}
        if fail_l is None and left != target:
            fail_l = (i,)
        if fail_r is None and right != target:
            fail_r = (i,)
        if fail_l is not None and fail_r is not None:
            break
    checks.append(CheckResult("antipode_left", fail_l is None, fail_l))
    checks.append(CheckResult("antipode_right", fail_r is None, fail_r))

    return VerificationReport(checks)


# -- categorical constructions ---------------------------------------------------


def dual(H: FinHopf) -> FinHopf:
    """The dual Hopf algebra on the dual basis (structure constants transposed)."""
    n, M = H.dim, H.conductor
    mult_d = {}
    for (i, j, k), c in H.comult.entries:
        mult_d[(j, k, i)] = c
    comult_d = {}
    for (i, j, k), c in H.mult.entries:
        comult_d[(k, i, j)] = c
    S_t = tuple(tuple(H.antipode[j][i] for j in range(n)) for i in range(n))
    return FinHopf(n, M,
                   SparseTensor3.from_dict((n, n, n), mult_d),
                   H.counit,
                   SparseTensor3.from_dict((n, n, n), comult_d),
                   H.unit,
                   S_t,
                   H.claims.swapped(),
                   f"dual({H.label})" if H.label else "dual")


def op_cop(H: FinHopf, which: str) -> FinHopf:
    """Opposite / co-opposite Hopf algebra (antipode inverted for op, cop)."""
    if which not in ("op", "cop", "both"):
        raise ValueError(f"which must be op/cop/both, got {which!r}")
    n, M = H.dim, H.conductor
    mult = H.mult
    comult = H.comult
    if which in ("op", "both"):
        mult = SparseTensor3.from_dict(
            (n, n, n), {(j, i, k): c for (i, j, k), c in H.mult.entries})
    if which in ("cop", "both"):
        comult = SparseTensor3.from_dict(
            (n, n, n), {(i, k, j): c for (i, j, k), c in H.comult.entries})
    antipode = H.antipode if which == "both" else H.antipode_inv
    return FinHopf(n, M, mult, H.unit, comult, H.counit, antipode,
                   ClaimSet(H.claims.grouplikes, H.claims.characters),
                   f"{which}({H.label})" if H.label else which)


def trivial_hopf(M: int) -> FinHopf:
    one = CycloNum.one(M)
    t = SparseTensor3.from_dict((1, 1, 1), {(0, 0, 0): one})
    return FinHopf(1, M, t, (one,), t, (one,), ((one,),),
                   ClaimSet([(one,)], [(one,)]), "k")


def tensor(H: FinHopf, K: FinHopf) -> FinHopf:
    """Tensor-product Hopf algebra; all structure tensors are Kronecker products."""
    if H.conductor != K.conductor:
        raise ConductorMismatch(
            f"conductors {H.conductor} and {K.conductor} differ")
    nH, nK, M = H.dim, K.dim, H.conductor
    n = nH * nK

    def ix(a, b):
        return a * nK + b

    mult = {}
    for (i, j, k), c in H.mult.entries:
        for (a, b, t), d in K.mult.entries:
            mult[(ix(i, a), ix(j, b), ix(k, t))] = c * d
    comult = {}
    for (i, j, k), c in H.comult.entries:
        for (a, b, t), d in K.comult.entries:
            comult[(ix(i, a), ix(j, b), ix(k, t))] = c * d
    unit = [CycloNum.zero(M)] * n
    counit = [CycloNum.zero(M)] * n
    for i in range(nH):
        for a in range(nK):
            unit[ix(i, a)] = H.unit[i] * K.unit[a]
            counit[ix(i, a)] = H.counit[i] * K.counit[a]
    S = [[CycloNum.zero(M)] * n for _ in range(n)]
    for i in range(nH):
        for j in range(nH):
            if H.antipode[i][j].is_zero():
                continue
            for a in range(nK):
                for b in range(nK):
                    if not K.antipode[a][b].is_zero():
                        S[ix(i, a)][ix(j, b)] = H.antipode[i][j] * K.antipode[a][b]
    gls = []
    for g in H.claims.grouplikes:
        for h in K.claims.grouplikes:
            v = [CycloNum.zero(M)] * n
            for i in range(nH):
                for a in range(nK):
                    v[ix(i, a)] = g[i] * h[a]
            gls.append(tuple(v))
    chs = []
    for g in H.claims.characters:
        for h in K.claims.characters:
            v = [CycloNum.zero(M)] * n
            for i in range(nH):
                for a in range(nK):
                    v[ix(i, a)] = g[i] * h[a]
            chs.append(tuple(v))
    label = f"{H.label} (x) {K.label}" if H.label and K.label else "tensor"
    return FinHopf(n, M, SparseTensor3.from_dict((n, n, n), mult), unit,
                   SparseTensor3.from_dict((n, n, n), comult), counit, S,
                   ClaimSet(gls, chs), label)


def embed_hopf(H: FinHopf, M_new: int) -> FinHopf:
    """Lossless coefficient embedding into a larger cyclotomic field."""
    from .cyclo import embed as em
    if M_new == H.conductor:
        return H

    def t3(t: SparseTensor3) -> SparseTensor3:
        return SparseTensor3.from_dict(
            t.dims, {k: em(c, M_new) for k, c in t.entries})

    def vec(v):
        return tuple(em(c, M_new) for c in v)

    return FinHopf(H.dim, M_new, t3(H.mult), vec(H.unit), t3(H.comult),
                   vec(H.counit), tuple(vec(r) for r in H.antipode),
                   ClaimSet([vec(g) for g in H.claims.grouplikes],
                            [vec(c) for c in H.claims.characters],
                            H.claims.iso_fixtures),
                   H.label)


# -- morphisms --------------------------------------------------------------------


class HopfMorphism:
    """A linear map source -> target claimed to be a Hopf algebra map."""

    def __init__(self, source: FinHopf, target: FinHopf, matrix):
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(r) for r in matrix)

    def apply(self, v: dict) -> dict:
        out: dict = {}
        A = self.matrix
        for j, c in v.items():
            for i in range(self.target.dim):
                if not A[i][j].is_zero():
                    sparse_add_into(out, i, c * A[i][j])
        return out

    def apply_dense(self, v):
        return mat_vec([list(r) for r in self.matrix], list(v))

    @property
    def rank(self) -> int:
        r = getattr(self, "_rank", None)
        if r is None:
            r = image([list(row) for row in self.matrix],
                      self.source.dim, self.source.conductor).dim
            self._rank = r
        return r

    def __repr__(self):
        return f"HopfMorphism({self.source.label} -> {self.target.label})"


def identity_morphism(H: FinHopf) -> HopfMorphism:
    return HopfMorphism(H, H, identity_matrix(H.dim, H.conductor))


class MorphismReport(VerificationReport):
    def __init__(self, checks, rank, injective, surjective):
        super().__init__(checks)
        self.rank = rank
        self.injective = injective
        self.surjective = surjective

    @property
    def bijective(self):
        return self.injective and self.surjective


def verify_morphism(f: HopfMorphism) -> MorphismReport:
    """Checks algebra / coalgebra / unit / counit / antipode compatibility."""
    Hs, Ht = f.source, f.target
    if Hs.conductor != Ht.conductor:
        raise ConductorMismatch("morphism endpoints live over different conductors")
    n = Hs.dim
    one = CycloNum.one(Hs.conductor)
    checks = []

    imgs = [f.apply({i: one}) for i in range(n)]

    fail = None
    if f.apply(Hs.unit_sparse()) != Ht.unit_sparse():
        fail = ("unit",)
    else:
        for i in range(n):
            for j in range(n):
                lhs: dict = {}
                for k, c in Hs.mrows[i][j]:
                    for l, d in imgs[k].items():
                        sparse_add_into(lhs, l, c * d)
                if lhs != Ht.mul(imgs[i], imgs[j]):
                    fail = (i, j)
                    break
            if fail:
                break
    checks.append(CheckResult("algebra_map", fail is None, fail))

    fail = None
    for i in range(n):
        lhs = Ht.comult_of(imgs[i])
        rhs: dict = {}
        for (j, k), c in Hs.crows[i]:
            for a, ca in imgs[j].items():
                cca = c * ca
                for b, cb in imgs[k].items():
                    sparse_add_into(rhs, (a, b), cca * cb)
        if lhs != rhs:
            fail = (i,)
            break
    checks.append(CheckResult("coalgebra_map", fail is None, fail))

    fail = None
    for i in range(n):
        if Ht.counit_of(imgs[i]) != Hs.counit[i]:
            fail = (i,)
            break
    checks.append(CheckResult("counit", fail is None, fail))

    fail = None
    for i in range(n):
        si = {a: Hs.antipode[a][i] for a in range(n) if not Hs.antipode[a][i].is_zero()}
        if f.apply(si) != Ht.antipode_of(imgs[i]):
            fail = (i,)
            break
    checks.append(CheckResult("antipode", fail is None, fail))

    rank = f.rank
    return MorphismReport(checks, rank, rank == Hs.dim, rank == Ht.dim)


def coinvariants(pi: HopfMorphism) -> Subspace:
    """{h : (id (x) pi)Delta(h) = h (x) 1_B} as a subspace of the source."""
    H, B = pi.source, pi.target
    n, m, M = H.dim, B.dim, H.conductor
    if pi.rank != m:
        raise NotSurjective("projection is not surjective")
    rows: dict[tuple[int, int], list[CycloNum]] = {}

    def row(a, b):
        r = rows.get((a, b))
        if r is None:
            r = zero_vector(n, M)
            rows[(a, b)] = r
        return r

    A = pi.matrix
    uB = B.unit
    for t in range(n):
        for (j, k), c in H.crows[t]:
            for b in range(m):
                if not A[b][k].is_zero():
                    r = row(j, b)
                    r[t] = r[t] + c * A[b][k]
        for b in range(m):
            if not uB[b].is_zero():
                r = row(t, b)
                r[t] = r[t] - uB[b]
    return kernel(list(rows.values()), n, M)


def quotient_by_hopf_ideal(H: FinHopf, generators) -> tuple[FinHopf, HopfMorphism]:
    """Quotient by the two-sided ideal generated by `generators`.

    The ideal closure is computed first; it must then be a coideal, stable
    under S and killed by the counit, otherwise NotAHopfIdeal is raised.
    """
    n, M = H.dim, H.conductor
    gens = [list(g) for g in generators]
    gens = [g for g in gens if not vec_is_zero(g)]
    if not gens:
        return H, identity_morphism(H)
    from .linalg import ideal_closure
    I = ideal_closure(H.mrows, n, M, gens)
    if I.dim == 0:
        return H, identity_morphism(H)
    if I.dim == n:
        raise NotAHopfIdeal("ideal closure is the whole algebra")

    coords = I.complement_coords()
    q = len(coords)

    def project(vdense):
        red = I.reduce(vdense)
        return [red[c] for c in coords]

    proj_cols = [project(unit_vector(n, M, j)) for j in range(n)]

    # counit must vanish on I
    for v in I.basis:
        if not H.counit_of(dense_to_sparse(list(v))).is_zero():
            raise NotAHopfIdeal("counit does not vanish on the ideal")
    # S-stability
    for v in I.basis:
        sv = H.antipode_of(dense_to_sparse(list(v)))
        if not I.contains(sparse_to_dense(sv, n, M)):
            raise NotAHopfIdeal("ideal is not antipode-stable")
    # coideal: (pi (x) pi) Delta v = 0 for v in I
    for v in I.basis:
        dv = H.comult_of(dense_to_sparse(list(v)))
        acc: dict = {}
        for (j, k), c in dv.items():
            pj = proj_cols[j]
            pk = proj_cols[k]
            for a, ca in enumerate(pj):
                if ca.is_zero():
                    continue
                cca = c * ca
                for b, cb in enumerate(pk):
                    if not cb.is_zero():
                        sparse_add_into(acc, (a, b), cca * cb)
        if acc:
            raise NotAHopfIdeal("ideal is not a coideal")

    reps = [unit_vector(n, M, c) for c in coords]
    proj_mat = [[proj_cols[j][t] for j in range(n)] for t in range(q)]

    mult_d = {}
    for a in range(q):
        sa = dense_to_sparse(reps[a])
        for b in range(q):
            prod = H.mul(sa, dense_to_sparse(reps[b]))
            pv = project(sparse_to_dense(prod, n, M))
            for t in range(q):
                if not pv[t].is_zero():
                    mult_d[(a, b, t)] = pv[t]
    comult_d = {}
    for a in range(q):
        dv = H.comult_of(dense_to_sparse(reps[a]))
        acc: dict = {}
        for (j, k), c in dv.items():
            pj = proj_cols[j]
            pk = proj_cols[k]
            for s, cs in enumerate(pj):
                if cs.is_zero():
                    continue
                ccs = c * cs
                for t, ct in enumerate(pk):
                    if not ct.is_zero():
                        sparse_add_into(acc, (s, t), ccs * ct)
        for (s, t), c in acc.items():
            comult_d[(a, s, t)] = c
    unit_q = project(list(H.unit))
    counit_q = [H.counit_of(dense_to_sparse(r)) for r in reps]
    S_q = [[CycloNum.zero(M)] * q for _ in range(q)]
    for b in range(q):
        sv = H.antipode_of(dense_to_sparse(reps[b]))
        pv = project(sparse_to_dense(sv, n, M))
        for a in range(q):
            S_q[a][b] = pv[a]

    # project claims
    gls = []
    seen = set()
    for g in H.claims.grouplikes:
        pg = tuple(project(list(g)))
        if pg not in seen and not all(x.is_zero() for x in pg):
            seen.add(pg)
            gls.append(pg)
    chs = []
    for chi in H.claims.characters:
        if all(sum((chi[i2] * v[i2] for i2 in range(n)),
                   CycloNum.zero(M)).is_zero() for v in I.basis):
            chs.append(tuple(
                sum((chi[i2] * r[i2] for i2 in range(n)), CycloNum.zero(M))
                for r in reps))

    Q = FinHopf(q, M, SparseTensor3.from_dict((q, q, q), mult_d), unit_q,
                SparseTensor3.from_dict((q, q, q), comult_d), counit_q, S_q,
                ClaimSet(gls, chs), f"{H.label}/ideal" if H.label else "quotient")
    return Q, HopfMorphism(H, Q, proj_mat)
