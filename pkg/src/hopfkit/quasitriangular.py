"""Quasitriangular structures: QT axiom verification, rank and minimality,
Drinfeld element identities, exhaustive ribbon search, R-matrix
constructors for abelian group algebras and the p^3 small quantum group,
and the Drinfeld-double surjection F.

The ribbon search space {l^{-1} u : l in G(H)} is exhaustive: for any
ribbon v, Delta(u v^{-1}) = (u v^{-1}) (x) (u v^{-1}) follows from
Delta(u) = (R~ R)^{-1} (u (x) u) together with (R.4), so u v^{-1} is
group-like and every ribbon element has the tested form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cyclo import CycloNum
from .errors import FieldTooSmall, FixtureRejected, IdentityFails
from .hopf import (CheckResult, FinHopf, HopfMorphism, VerificationReport,
                   dual, op_cop, verify_morphism)
from .invariants import CensusResult, grouplike_census
from .linalg import (EchelonBasis, Subspace, dense_to_sparse, image,
                     sparse_add_into, sparse_to_dense, unit_vector,
                     zero_vector)


@dataclass
class RMatrixData:
    host: FinHopf
    R: tuple                      # sorted ((i, j), coeff)
    rank: int
    K: Subspace                   # image of f_R
    L: Subspace                   # image of f_R~
    u: tuple                      # Drinfeld element (cached at construction)
    minimal: bool

    def r_dict(self) -> dict:
        return dict(self.R)


def _tensor_swap(X: dict) -> dict:
    return {(b, a): c for (a, b), c in X.items()}


def _apply_s_slot1(H: FinHopf, X: dict) -> dict:
    out: dict = {}
    S = H.antipode
    n = H.dim
    for (a, b), c in X.items():
        for i in range(n):
            if not S[i][a].is_zero():
                sparse_add_into(out, (i, b), c * S[i][a])
    return out


def _apply_s_both(H: FinHopf, X: dict) -> dict:
    out: dict = {}
    S = H.antipode
    n = H.dim
    for (a, b), c in X.items():
        for i in range(n):
            sa = S[i][a]
            if sa.is_zero():
                continue
            csa = c * sa
            for j in range(n):
                if not S[j][b].is_zero():
                    sparse_add_into(out, (i, j), csa * S[j][b])
    return out


def _unit_tensor(H: FinHopf) -> dict:
    out: dict = {}
    for a, ca in H.unit_sparse().items():
        for b, cb in H.unit_sparse().items():
            sparse_add_into(out, (a, b), ca * cb)
    return out


def f_matrices(H: FinHopf, R: dict):
    """(f_R, f_R~) as matrices on dual-basis coordinates.

    f_R(beta) = <beta, R1> R2 and f_R~(beta) = <beta, R2> R1; the
    transpose-dual relation f_R~ = (f_R)* holds by construction.
    """
    n, M = H.dim, H.conductor
    fR = [[CycloNum.zero(M)] * n for _ in range(n)]
    fRt = [[CycloNum.zero(M)] * n for _ in range(n)]
    for (a, b), c in R.items():
        fR[b][a] = fR[b][a] + c
        fRt[a][b] = fRt[a][b] + c
    return fR, fRt


def f_maps(rm: RMatrixData):
    """(f_R, f_R~) for a verified R; asserts the transpose-dual relation."""
    fR, fRt = f_matrices(rm.host, rm.r_dict())
    n = rm.host.dim
    assert all(fRt[i][j] == fR[j][i] for i in range(n) for j in range(n)), \
        "f_R~ != (f_R)*"
    return fR, fRt


def verify_qt(H: FinHopf, R: dict) -> tuple[VerificationReport, RMatrixData | None]:
    """Exact QT.1-QT.5, the bialgebra-map formulation, rank and minimality."""
    n, M = H.dim, H.conductor
    one = CycloNum.one(M)
    checks = []

    # QT.1 on every basis element
    fail = None
    for h in range(n):
        d = {p: c for p, c in H.crows[h]}
        dcop = _tensor_swap(d)
        if H.tensor_mul(dcop, R) != H.tensor_mul(R, d):
            fail = (h,)
            break
    checks.append(CheckResult("QT.1", fail is None, fail))

    # QT.2: (Delta (x) id)(R) = R13 R23
    lhs: dict = {}
    for (a, b), c in R.items():
        for (j, k), d in H.crows[a]:
            sparse_add_into(lhs, (j, k, b), c * d)
    rhs: dict = {}
    for (a, b), c in R.items():
        for (a2, b2), c2 in R.items():
            cc = c * c2
            for k, ck in H.mrows[b][b2]:
                sparse_add_into(rhs, (a, a2, k), cc * ck)
    checks.append(CheckResult("QT.2", lhs == rhs, None if lhs == rhs else ("QT.2",)))

    # QT.3: (eps (x) id)(R) = 1
    acc: dict = {}
    for (a, b), c in R.items():
        if not H.counit[a].is_zero():
            sparse_add_into(acc, b, c * H.counit[a])
    ok3 = acc == H.unit_sparse()
    checks.append(CheckResult("QT.3", ok3, None if ok3 else ("QT.3",)))

    # QT.4: (id (x) Delta)(R) = R13 R12
    lhs = {}
    for (a, b), c in R.items():
        for (j, k), d in H.crows[b]:
            sparse_add_into(lhs, (a, j, k), c * d)
    rhs = {}
    for (a, b), c in R.items():
        for (a2, b2), c2 in R.items():
            cc = c * c2
            for k, ck in H.mrows[a][a2]:
                sparse_add_into(rhs, (k, b2, b), cc * ck)
    checks.append(CheckResult("QT.4", lhs == rhs, None if lhs == rhs else ("QT.4",)))

    # QT.5: (id (x) eps)(R) = 1
    acc = {}
    for (a, b), c in R.items():
        if not H.counit[b].is_zero():
            sparse_add_into(acc, a, c * H.counit[b])
    ok5 = acc == H.unit_sparse()
    checks.append(CheckResult("QT.5", ok5, None if ok5 else ("QT.5",)))

    # R^{-1} = (S (x) id)(R) and (S (x) S)(R) = R
    sR = _apply_s_slot1(H, R)
    unit2 = _unit_tensor(H)
    inv_ok = (H.tensor_mul(sR, R) == unit2 and H.tensor_mul(R, sR) == unit2)
    checks.append(CheckResult("R_inverse_formula", inv_ok,
                              None if inv_ok else ("R_inverse",)))
    ss_ok = _apply_s_both(H, R) == R
    checks.append(CheckResult("S_tensor_S_fixes_R", ss_ok,
                              None if ss_ok else ("S(x)S",)))

    # equivalent formulation: f_R : H*^{cop} -> H is a bialgebra map
    fR, fRt = f_matrices(H, R)
    Hsc = op_cop(H.dual_cached(), "cop")
    frep = verify_morphism(HopfMorphism(Hsc, H, fR))
    checks.append(CheckResult("f_R_bialgebra_map", frep.ok,
                              None if frep.ok else ("f_R",)))

    report = VerificationReport(checks)
    if not report.ok:
        return report, None

    K = image(fR, n, M)
    L = image(fRt, n, M)
    rank = K.dim
    checks.append(CheckResult("rank_K_equals_L", K.dim == L.dim, None))
    for name, V in (("K", K), ("L", L)):
        ok = _is_sub_hopf(H, V)
        checks.append(CheckResult(f"{name}_sub_hopf", ok, None if ok else (name,)))
    minimal = _generates(H, K, L)
    report = VerificationReport(checks)
    if not report.ok:
        return report, None
    u = _drinfeld_u(H, R)
    rm = RMatrixData(H, tuple(sorted(R.items())), rank, K, L, tuple(u), minimal)
    return report, rm


def _is_sub_hopf(H: FinHopf, V: Subspace) -> bool:
    """unital subalgebra with Delta(V) c V (x) V and S(V) = V."""
    n, M = H.dim, H.conductor
    if not V.contains(list(H.unit)):
        return False
    basis = [dense_to_sparse(list(v)) for v in V.basis]
    for a in basis:
        for b in basis:
            if not V.contains(sparse_to_dense(H.mul(a, b), n, M)):
                return False
    # Delta(V) c V (x) H and c H (x) V
    proj = _proj_rows(V)
    for a in basis:
        dv = H.comult_of(a)
        acc1: dict = {}
        acc2: dict = {}
        for (j, k), c in dv.items():
            for t in range(len(proj)):
                if not proj[t][j].is_zero():
                    sparse_add_into(acc1, (t, k), c * proj[t][j])
                if not proj[t][k].is_zero():
                    sparse_add_into(acc2, (j, t), c * proj[t][k])
        if acc1 or acc2:
            return False
    for a in basis:
        if not V.contains(sparse_to_dense(H.antipode_of(a), n, M)):
            return False
    return True


def _proj_rows(V: Subspace):
    n, M = V.ambient_dim, V.conductor
    coords = V.complement_coords()
    cols = [V.reduce(unit_vector(n, M, j)) for j in range(n)]
    return [[cols[j][c] for j in range(n)] for c in coords]


def _generates(H: FinHopf, K: Subspace, L: Subspace) -> bool:
    """Does the subalgebra generated by K and L equal H?  (H_R = KL = LK.)"""
    n, M = H.dim, H.conductor
    eb = EchelonBasis(n, M)
    work = []
    for v in list(K.basis) + list(L.basis) + [tuple(H.unit)]:
        lv = list(v)
        if eb.insert(lv):
            work.append(lv)
    gens = [dense_to_sparse(list(v)) for v in list(K.basis) + list(L.basis)]
    while work:
        v = work.pop()
        sv = dense_to_sparse(v)
        for g in gens:
            for prod in (H.mul(sv, g), H.mul(g, sv)):
                pv = sparse_to_dense(prod, n, M)
                if eb.insert(pv):
                    work.append(pv)
    return len(eb) == n


def _drinfeld_u(H: FinHopf, R: dict):
    n, M = H.dim, H.conductor
    S = H.antipode
    acc: dict = {}
    for (i, j), c in R.items():
        sj = {a: S[a][j] for a in range(n) if not S[a][j].is_zero()}
        for k, d in H.mul(sj, {i: CycloNum.one(M)}).items():
            sparse_add_into(acc, k, c * d)
    return sparse_to_dense(acc, n, M)


class DrinfeldReport(VerificationReport):
    def __init__(self, checks, u, u_inv):
        super().__init__(checks)
        self.u = tuple(u)
        self.u_inv = tuple(u_inv)


def drinfeld_element(rm: RMatrixData) -> DrinfeldReport:
    """u = S(R2) R1, with every identity checked exactly.

    Raises IdentityFails if any identity breaks (meaning a non-QT R
    slipped through verification: a bug, not a data condition).
    """
    H = rm.host
    n, M = H.dim, H.conductor
    R = rm.r_dict()
    one = CycloNum.one(M)
    checks = []
    u = list(rm.u)
    su = dense_to_sparse(u)

    # u^{-1} = R2 S^2(R1)
    S = [list(r) for r in H.antipode]
    from .linalg import mat_mul
    S2 = mat_mul(S, S)
    acc: dict = {}
    for (i, j), c in R.items():
        s2i = {a: S2[a][i] for a in range(n) if not S2[a][i].is_zero()}
        for k, d in H.mul({j: one}, s2i).items():
            sparse_add_into(acc, k, c * d)
    u_inv = sparse_to_dense(acc, n, M)
    siu = dense_to_sparse(u_inv)

    def check(name, ok):
        checks.append(CheckResult(name, ok, None if ok else (name,)))
        if not ok:
            raise IdentityFails(f"Drinfeld element identity {name} fails on {H.label}")

    check("u_invertible", H.mul(su, siu) == H.unit_sparse()
          and H.mul(siu, su) == H.unit_sparse())
    # S^2(h) = u h u^{-1}
    ok = True
    for h in range(n):
        lhs = {a: S2[a][h] for a in range(n) if not S2[a][h].is_zero()}
        if lhs != H.mul(su, H.mul({h: one}, siu)):
            ok = False
            break
    check("S2_inner_by_u", ok)
    check("eps_u_is_1", H.counit_of(su).is_one())

    # Delta u = (R~R)^{-1}(u (x) u) = (u (x) u)(R~R)^{-1}
    RtR = H.tensor_mul(_tensor_swap(R), R)
    du = H.comult_of(su)
    uu: dict = {}
    for a, ca in su.items():
        for b, cb in su.items():
            sparse_add_into(uu, (a, b), ca * cb)
    check("Delta_u_left", H.tensor_mul(RtR, du) == uu)
    check("Delta_u_right", H.tensor_mul(du, RtR) == uu)

    # u S(u) central; u commutes with group-likes
    z = H.mul(su, H.antipode_of(su))
    ok = all(H.mul(z, {h: one}) == H.mul({h: one}, z) for h in range(n))
    check("uSu_central", ok)
    ok = all(H.mul(su, dense_to_sparse(list(g))) ==
             H.mul(dense_to_sparse(list(g)), su)
             for g in H.claims.grouplikes if H.is_grouplike(g))
    check("u_commutes_with_grouplikes", ok)
    return DrinfeldReport(checks, u, u_inv)


# -- ribbon ---------------------------------------------------------------------------


@dataclass
class RibbonCertificate:
    ribbon_elements: tuple
    candidate_grouplikes: tuple   # the l in G(H) tried (exhaustive)
    failures: tuple               # (candidate index, first failing axiom)


def ribbon_search(rm: RMatrixData, census: CensusResult | None = None) -> RibbonCertificate:
    """Try v = l^{-1} u for every group-like l; the search is exhaustive."""
    H = rm.host
    n, M = H.dim, H.conductor
    one = CycloNum.one(M)
    if census is None:
        census = grouplike_census(H)
    R = rm.r_dict()
    RtR = H.tensor_mul(_tensor_swap(R), R)
    u = dense_to_sparse(list(rm.u))
    usu = H.mul(u, H.antipode_of(u))
    ribbons = []
    fails = []
    for idx, l in enumerate(census.elements):
        sl = dense_to_sparse(list(l))
        li = _gl_inverse(H, sl)
        v = H.mul(li, u)
        # R.1 v^2 = u S(u)
        if H.mul(v, v) != usu:
            fails.append((idx, "R.1"))
            continue
        # R.2 S(v) = v
        if H.antipode_of(v) != v:
            fails.append((idx, "R.2"))
            continue
        # R.3 eps(v) = 1
        if not H.counit_of(v).is_one():
            fails.append((idx, "R.3"))
            continue
        # R.4 Delta v = (R~R)^{-1} (v (x) v)
        dv = H.comult_of(v)
        vv: dict = {}
        for a, ca in v.items():
            for b, cb in v.items():
                sparse_add_into(vv, (a, b), ca * cb)
        if H.tensor_mul(RtR, dv) != vv:
            fails.append((idx, "R.4"))
            continue
        # R.5 central
        if not all(H.mul(v, {h: one}) == H.mul({h: one}, v) for h in range(n)):
            fails.append((idx, "R.5"))
            continue
        ribbons.append(tuple(sparse_to_dense(v, n, M)))
    return RibbonCertificate(tuple(ribbons), census.elements, tuple(fails))


def _gl_inverse(H: FinHopf, g: dict) -> dict:
    unit = H.unit_sparse()
    if g == unit:
        return unit
    prev, acc = g, H.mul(g, g)
    while acc != unit:
        prev, acc = acc, H.mul(acc, g)
    return prev


# -- constructors ----------------------------------------------------------------------


def bicharacter_rmatrices(factors: tuple[int, ...], conductor: int):
    """All verified R-matrices on k[G] for abelian G = prod Z/d_i.

    Bicharacters are enumerated by exponent matrices; R_beta is assembled
    in the primitive-idempotent basis from the character table.
    """
    from .constructors import group_algebra
    from .groups import abelian
    G = abelian(*factors)
    M = conductor
    if M % G.exponent != 0:
        raise FieldTooSmall(
            f"bicharacter values of exponent {G.exponent} need a larger conductor")
    H = group_algebra(G, M)
    n = G.order
    chars = G.characters(M)  # indexed like elements: chi_a
    inv_n = CycloNum.from_rational(M, 1) / CycloNum.from_rational(M, n)
    # idempotent E_a = (1/n) sum_g chi_a(g^{-1}) g
    idems = []
    for a in range(n):
        v = zero_vector(n, M)
        for gi, g in enumerate(G.elements):
            v[gi] = inv_n * chars[a][G.index[G.inverse(g)]]
        idems.append(v)

    from math import gcd
    pair_orders = [[gcd(da, db) for db in factors] for da in factors]
    ranges = [range(pair_orders[a][b]) for a in range(len(factors))
              for b in range(len(factors))]
    out = []
    for exps in product(*ranges):
        emat = [[exps[a * len(factors) + b] for b in range(len(factors))]
                for a in range(len(factors))]

        def beta(av, bv) -> CycloNum:
            acc = CycloNum.one(M)
            aa = av if isinstance(av, tuple) else (av,)
            bb = bv if isinstance(bv, tuple) else (bv,)
            for s in range(len(factors)):
                for t in range(len(factors)):
                    o = pair_orders[s][t]
                    k = (emat[s][t] * aa[s] * bb[t]) % o
                    if k:
                        acc = acc * CycloNum.zeta(M, (M // o) * k)
            return acc

        R: dict = {}
        for ai, av in enumerate(G.elements):
            for bi, bv in enumerate(G.elements):
                c = beta(av, bv)
                for i, ci in enumerate(idems[ai]):
                    if ci.is_zero():
                        continue
                    cci = c * ci
                    for j, cj in enumerate(idems[bi]):
                        if not cj.is_zero():
                            sparse_add_into(R, (i, j), cci * cj)
        rep, rm = verify_qt(H, R)
        if rm is None:
            raise FixtureRejected(
                f"bicharacter R-matrix failed verification: {rep.failures}")
        out.append(rm)
    return H, out


def uq_standard_rmatrix(p: int, e: int = 1, conductor: int | None = None):
    """The standard R on u_q(sl2): (1/p sum q^{-2ij} g^i (x) g^j) *
    (sum_n x^n (x) y^n / [n]_{q^{-2}}!).

    The coefficients are a fixture; verify_qt is the ground truth and
    FixtureRejected reports the first failing axiom if they are wrong for
    the pinned conventions.
    """
    from .constructors import standard_constructors
    H = standard_constructors("uq_sl2", p, e,
                              conductor=conductor if conductor else p * p)
    M = H.conductor
    q = CycloNum.zeta(M, (M // p) * (e % p))
    monos = H._cache["monomials"]
    ix = {m: i for i, m in enumerate(monos)}
    one = CycloNum.one(M)

    def gpow(i):
        return ix[((0, 0), (i % p,))]

    def xpow(nn):
        return ix[((nn, 0), (0,))]

    def ypow(nn):
        return ix[((0, nn), (0,))]

    inv_p = one / CycloNum.from_rational(M, p)
    W: dict = {}
    for i in range(p):
        for j in range(p):
            W[(gpow(i), gpow(j))] = inv_p * q ** ((-2 * i * j) % p)
    qm2 = q ** (p - 2)  # q^{-2}
    theta: dict = {}
    c = one
    for nn in range(p):
        if nn:
            bracket = CycloNum.zero(M)
            for k in range(nn):
                bracket = bracket + qm2 ** k
            c = c / bracket
        theta[(xpow(nn), ypow(nn))] = c
    R = H.tensor_mul(W, theta)
    rep, rm = verify_qt(H, R)
    if rm is None:
        raise FixtureRejected(
            f"u_q R-matrix fixture rejected; first failing axiom: "
            f"{rep.failures[0].name if rep.failures else '?'}")
    return H, rm


def double_surjection_check(H: FinHopf, rm: RMatrixData, max_dim: int = 9):
    """F : D(H) -> H, F(beta # h) = <beta, R1> R2 h: a Hopf surjection.

    Also re-checks that the double's claimed central group-likes are
    genuinely central.
    """
    from .constructors import drinfeld_double
    D = drinfeld_double(H, max_dim=max_dim)
    n, M = H.dim, H.conductor
    one = CycloNum.one(M)
    R = rm.r_dict()
    fR, _ = f_matrices(H, R)
    cols = []
    for a in range(n):
        fa = {k: fR[k][a] for k in range(n) if not fR[k][a].is_zero()}
        for b in range(n):
            cols.append(sparse_to_dense(H.mul(fa, {b: one}), n, M))
    F = [[cols[j][i] for j in range(D.dim)] for i in range(n)]
    f = HopfMorphism(D, H, F)
    rep = verify_morphism(f)
    central_ok = True
    for v in D._cache.get("central_grouplikes", ()):
        sv = dense_to_sparse(list(v))
        if not all(D.mul(sv, {h: one}) == D.mul({h: one}, sv)
                   for h in range(D.dim)):
            central_ok = False
            break
    return f, rep, central_ok
