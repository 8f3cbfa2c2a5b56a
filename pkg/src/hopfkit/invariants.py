"""Classification invariants: integrals, modular elements, Radford's S^4
identity, trace formulas, antipode order, semisimplicity, the coradical
filtration, certified group-like censuses, skew-primitives, type
fingerprints and the bosonization/pairing criteria.

All computations are exact.  Group-like enumeration is claim-verify-
certify: constructors supply candidates, and completeness is certified by
the split-character count of the dual algebra (sound over a splitting
field, where characters biject with one-dimensional Wedderburn blocks).
FieldTooSmall is raised instead of silently under-reporting when the
certificate cannot be met.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloNum, render
from .errors import (BoundExceeded, ClaimIncomplete, ClaimNotGrouplike,
                     ClaimOvercomplete, ExtractionInconsistent, FieldTooSmall,
                     IntegralSpaceNotOneDim, NotGrouplike, NotNormalizable,
                     NotNormalized, SectionFails)
from .hopf import FinHopf, HopfMorphism, coinvariants, verify_morphism
from .linalg import (QuotientAlgebra, Subspace, algebra_radical, center_dim,
                     commutator_generators, dense_to_sparse, ideal_closure,
                     identity_matrix, intersect_kernels, kernel, mat_eq,
                     mat_mul, mat_trace, mult_vectors, sparse_add_into,
                     sparse_to_dense, split_character_count, unit_vector,
                     zero_vector)

# -- integrals and modular elements ---------------------------------------------


class IntegralData:
    __slots__ = ("left_integral", "right_integral_dual", "normalized")

    def __init__(self, left_integral, right_integral_dual, normalized):
        self.left_integral = tuple(left_integral)
        self.right_integral_dual = tuple(right_integral_dual)
        self.normalized = normalized


def _basis_left_mult(H: FinHopf, i: int):
    n, M = H.dim, H.conductor
    A = [[CycloNum.zero(M)] * n for _ in range(n)]
    for j in range(n):
        for k, c in H.mrows[i][j]:
            A[k][j] = c
    return A


def _basis_right_mult(H: FinHopf, j: int):
    n, M = H.dim, H.conductor
    A = [[CycloNum.zero(M)] * n for _ in range(n)]
    for i in range(n):
        for k, c in H.mrows[i][j]:
            A[k][i] = c
    return A


def integrals(H: FinHopf) -> IntegralData:
    """Left integral of H and right integral of H*, normalized to pair to 1."""
    n, M = H.dim, H.conductor
    mats = []
    for i in range(n):
        A = _basis_left_mult(H, i)
        e = H.counit[i]
        if not e.is_zero():
            for d in range(n):
                A[d][d] = A[d][d] - e
        mats.append(A)
    space = intersect_kernels(mats, n, M)
    if space.dim != 1:
        raise IntegralSpaceNotOneDim(
            f"left integral space has dimension {space.dim}")
    Lam = list(space.basis[0])

    D = H.dual_cached()
    mats = []
    for j in range(n):
        A = _basis_right_mult(D, j)
        e = D.counit[j]  # = beta_j(1_H)
        if not e.is_zero():
            for d in range(n):
                A[d][d] = A[d][d] - e
        mats.append(A)
    space2 = intersect_kernels(mats, n, M)
    if space2.dim != 1:
        raise IntegralSpaceNotOneDim(
            f"right integral space of the dual has dimension {space2.dim}")
    lam = list(space2.basis[0])
    pairing = CycloNum.zero(M)
    for a, b in zip(lam, Lam):
        pairing = pairing + a * b
    if pairing.is_zero():
        raise NotNormalizable("<lambda, Lambda> = 0")
    inv = pairing.inverse()
    lam = [inv * a for a in lam]
    return IntegralData(Lam, lam, True)


class ModularData:
    __slots__ = ("alpha", "g")

    def __init__(self, alpha, g):
        self.alpha = tuple(alpha)
        self.g = tuple(g)


def _proportionality(vec_ref, vec) -> CycloNum:
    """c with vec = c * vec_ref, or raise ExtractionInconsistent."""
    pivot = next((i for i, x in enumerate(vec_ref) if not x.is_zero()), None)
    if pivot is None:
        raise ExtractionInconsistent("reference vector is zero")
    c = vec[pivot] / vec_ref[pivot]
    for a, b in zip(vec_ref, vec):
        if b != c * a:
            raise ExtractionInconsistent("vector is not proportional")
    return c


def modular_elements(H: FinHopf, integ: IntegralData | None = None) -> ModularData:
    """alpha with Lambda.x = <alpha,x> Lambda; g with beta.lambda = <beta,g> lambda."""
    n, M = H.dim, H.conductor
    if integ is None:
        integ = integrals(H)
    Lam = list(integ.left_integral)
    sLam = dense_to_sparse(Lam)
    one = CycloNum.one(M)
    alpha = []
    for j in range(n):
        w = H.mul(sLam, {j: one})
        alpha.append(_proportionality(Lam, sparse_to_dense(w, n, M)))
    D = H.dual_cached()
    lam = list(integ.right_integral_dual)
    slam = dense_to_sparse(lam)
    g = []
    for j in range(n):
        w = D.mul({j: one}, slam)
        g.append(_proportionality(lam, sparse_to_dense(w, n, M)))
    if not D.is_grouplike(alpha):
        raise ExtractionInconsistent("modular alpha is not an algebra character")
    if not H.is_grouplike(g):
        raise ExtractionInconsistent("modular g is not group-like")
    return ModularData(alpha, g)


def is_unimodular(H: FinHopf, mod: ModularData | None = None) -> bool:
    if mod is None:
        mod = modular_elements(H)
    return list(mod.alpha) == list(H.counit)


def _grouplike_inverse(H: FinHopf, g: dict) -> dict:
    unit = H.unit_sparse()
    if g == unit:
        return unit
    prev, acc = g, H.mul(g, g)
    guard = 0
    while acc != unit:
        prev, acc = acc, H.mul(acc, g)
        guard += 1
        if guard > 4 * H.dim * H.dim:
            raise NotGrouplike("element has unbounded order")
    return prev


def radford_s4_check(H: FinHopf, mod: ModularData | None = None) -> bool:
    """S^4(h) = g (alpha -> h <- alpha^{-1}) g^{-1} on every basis element."""
    n = H.dim
    if mod is None:
        mod = modular_elements(H)
    alpha = list(mod.alpha)
    # alpha^{-1} = alpha o S (convolution inverse of a character)
    alpha_inv = [None] * n
    for j in range(n):
        acc = CycloNum.zero(H.conductor)
        for a in range(n):
            if not H.antipode[a][j].is_zero():
                acc = acc + alpha[a] * H.antipode[a][j]
        alpha_inv[j] = acc
    g = dense_to_sparse(list(mod.g))
    g_inv = _grouplike_inverse(H, g)
    S = [list(r) for r in H.antipode]
    S2 = mat_mul(S, S)
    S4 = mat_mul(S2, S2)
    for i in range(n):
        mid: dict = {}
        for (a, b, c), coef in H.delta2(i):
            w = alpha_inv[a] * alpha[c]
            if not w.is_zero():
                sparse_add_into(mid, b, coef * w)
        rhs = H.mul(g, H.mul(mid, g_inv))
        lhs = {k: S4[k][i] for k in range(n) if not S4[k][i].is_zero()}
        if lhs != rhs:
            return False
    return True


def trace_formula_check(H: FinHopf, f, integ: IntegralData | None = None):
    """Returns (Tr f, <lambda, S(L2) f(L1)>, <lambda, (S o f)(L2) L1>).

    (L1, S(L2)) are dual bases for the Frobenius form lambda, which pins
    the Sweedler legs: the two right-hand sides must both equal Tr f.
    """
    n, M = H.dim, H.conductor
    if integ is None:
        integ = integrals(H)
    if not integ.normalized:
        raise NotNormalized("integral pair is not normalized")
    lam = integ.right_integral_dual
    dL = H.comult_of(dense_to_sparse(list(integ.left_integral)))
    t0 = mat_trace(f)
    t1 = CycloNum.zero(M)
    t2 = CycloNum.zero(M)
    S = H.antipode
    one = CycloNum.one(M)
    for (a, b), c in dL.items():
        sb = {k: S[k][b] for k in range(n) if not S[k][b].is_zero()}
        fa = {k: f[k][a] for k in range(n) if not f[k][a].is_zero()}
        acc = CycloNum.zero(M)
        for k, d in H.mul(sb, fa).items():
            if not lam[k].is_zero():
                acc = acc + lam[k] * d
        t1 = t1 + c * acc
        fb = {k: f[k][b] for k in range(n) if not f[k][b].is_zero()}
        sfb = H.antipode_of(fb)
        acc = CycloNum.zero(M)
        for k, d in H.mul(sfb, {a: one}).items():
            if not lam[k].is_zero():
                acc = acc + lam[k] * d
        t2 = t2 + c * acc
    return t0, t1, t2


def antipode_order(H: FinHopf, bound: int | None = None) -> int:
    """Least k >= 1 with S^k = id, by exact matrix powering."""
    n, M = H.dim, H.conductor
    if bound is None:
        bound = 4 * n * n
    ident = identity_matrix(n, M)
    S = [list(r) for r in H.antipode]
    P = S
    for k in range(1, bound + 1):
        if mat_eq(P, ident):
            return k
        P = mat_mul(P, S)
    raise BoundExceeded(f"antipode order exceeds {bound}")


class SemisimplicityReport:
    __slots__ = ("semisimple", "cosemisimple", "trace_s2")

    def __init__(self, semisimple, cosemisimple, trace_s2):
        self.semisimple = semisimple
        self.cosemisimple = cosemisimple
        self.trace_s2 = trace_s2


def semisimplicity(H: FinHopf) -> SemisimplicityReport:
    """Exact Tr S^2; nonzero iff semisimple iff cosemisimple (char 0)."""
    S = [list(r) for r in H.antipode]
    tr = mat_trace(mat_mul(S, S))
    ss = not tr.is_zero()
    return SemisimplicityReport(ss, ss, tr)


# -- coradical filtration ---------------------------------------------------------


@dataclass(frozen=True)
class CoradicalReport:
    filtration_dims: tuple[int, ...]
    H0_dim: int
    grouplike_span_dim: int
    blocks: int
    one_dim_blocks: int
    candidate_multisets: tuple[tuple[int, ...], ...]


def _projection_rows(space: Subspace):
    """Quotient map onto the canonical complement of `space`, as rows."""
    n, M = space.ambient_dim, space.conductor
    coords = space.complement_coords()
    cols = [space.reduce(unit_vector(n, M, j)) for j in range(n)]
    return [[cols[j][c] for j in range(n)] for c in coords]


def coradical_spaces(H: FinHopf) -> list[Subspace]:
    """The exact filtration subspaces H_0 c H_1 c ... = H."""
    n, M = H.dim, H.conductor
    D = H.dual_cached()
    rad = algebra_radical(D.mult, D.unit, M)
    H0 = kernel([list(v) for v in rad.basis], n, M)
    spaces = [H0]
    while spaces[-1].dim < n:
        p0 = _projection_rows(H0)
        p1 = _projection_rows(spaces[-1])
        rows: dict = {}
        for m in range(n):
            for (j, k), c in H.crows[m]:
                for a in range(len(p0)):
                    ca = p0[a][j]
                    if ca.is_zero():
                        continue
                    cca = c * ca
                    for b in range(len(p1)):
                        cb = p1[b][k]
                        if not cb.is_zero():
                            r = rows.get((a, b))
                            if r is None:
                                r = zero_vector(n, M)
                                rows[(a, b)] = r
                            r[m] = r[m] + cca * cb
        nxt = kernel(list(rows.values()), n, M)
        if nxt.dim <= spaces[-1].dim:
            raise ExtractionInconsistent("coradical filtration failed to grow")
        spaces.append(nxt)
    return spaces


def coradical_filtration(H: FinHopf) -> CoradicalReport:
    """Filtration dims plus block counts of the dual semisimple quotient."""
    n, M = H.dim, H.conductor
    spaces = coradical_spaces(H)
    dims = tuple(s.dim for s in spaces)
    H0 = spaces[0]

    D = H.dual_cached()
    rad = algebra_radical(D.mult, D.unit, M)
    if rad.dim:
        qa = QuotientAlgebra(D.mrows, n, M, rad)
        qrows, qdim, qmult = qa.rows, qa.dim, qa.mult
    else:
        qrows, qdim, qmult = D.mrows, n, D.mult
    blocks = center_dim(qmult, M)
    comm = ideal_closure(qrows, qdim, M, commutator_generators(qrows, qdim, M))
    ones = qdim - comm.dim

    verified = [g for g in H.claims.grouplikes if H.is_grouplike(g)]
    gl_span = Subspace.from_vectors(n, M, [list(g) for g in verified])
    if H.claims.grouplikes and ones > len(verified):
        raise FieldTooSmall(
            f"{ones} one-dimensional blocks but only {len(verified)} verified "
            "group-likes: nonsplit field factor or missing claims")

    cands = tuple(_square_partitions(H0.dim - ones, blocks - ones))
    return CoradicalReport(dims, H0.dim, gl_span.dim, blocks, ones, cands)


def _square_partitions(total: int, parts: int, lo: int = 2):
    """Nondecreasing tuples (n_1..n_parts), n_i >= lo, sum of squares = total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    m = lo
    while parts * m * m <= total:
        for rest in _square_partitions(total - m * m, parts - 1, m):
            yield (m,) + rest
        m += 1


# -- group-like census -------------------------------------------------------------


@dataclass(frozen=True)
class CensusResult:
    elements: tuple
    certificate: int
    certified: bool
    abelian: bool
    invariant_factors: tuple[int, ...] | None
    orders: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def type_string(self) -> str:
        if self.invariant_factors is None:
            return f"na{self.size}"
        if not self.invariant_factors:
            return "1"
        return ",".join(str(d) for d in self.invariant_factors)


def grouplike_census(H: FinHopf) -> CensusResult:
    """Verify the claimed G(H), certify completeness, return the group type."""
    n, M = H.dim, H.conductor
    seen: list[tuple] = []
    seen_set = set()
    for g in H.claims.grouplikes:
        if not H.is_grouplike(g):
            raise ClaimNotGrouplike("a claimed group-like fails verification")
        t = tuple(g)
        if t not in seen_set:
            seen_set.add(t)
            seen.append(t)
    if not seen:
        raise ClaimIncomplete("no group-like claims present")
    unit = tuple(sparse_to_dense(H.unit_sparse(), n, M))
    if unit not in seen_set:
        raise ClaimIncomplete("unit is not among the claimed group-likes")

    prods: dict = {}
    for a in seen:
        sa = dense_to_sparse(list(a))
        for b in seen:
            p = tuple(sparse_to_dense(H.mul(sa, dense_to_sparse(list(b))), n, M))
            if p not in seen_set:
                raise ClaimIncomplete(
                    "claimed group-likes are not closed under multiplication")
            prods[(a, b)] = p
    for a in seen:
        if not any(prods[(a, b)] == unit for b in seen):
            raise ClaimIncomplete("a claimed group-like has no inverse among claims")

    D = H.dual_cached()
    m = split_character_count(D.mult, D.unit, M)
    if len(seen) < m:
        raise ClaimIncomplete(
            f"{len(seen)} verified group-likes but certificate is {m}: "
            "missing group-likes, or a nonsplit field factor")
    if len(seen) > m:
        raise ClaimOvercomplete(
            f"{len(seen)} verified group-likes exceed certificate {m}")

    abelian = all(prods[(a, b)] == prods[(b, a)] for a in seen for b in seen)
    orders = []
    for a in seen:
        k, acc = 1, a
        while acc != unit:
            acc = prods[(acc, a)]
            k += 1
        orders.append(k)
    invf = _abelian_invariants(tuple(orders)) if abelian else None
    return CensusResult(tuple(seen), m, True, abelian, invf, tuple(orders))


def characters_census(H: FinHopf) -> CensusResult:
    """G(H*) census: the group-like census of the dual."""
    return grouplike_census(H.dual_cached())


def _abelian_invariants(orders: tuple[int, ...]) -> tuple[int, ...]:
    """Invariant factors (descending) of an abelian group from element orders.

    Uses the counting identity |{x : x^(p^j) = 1}| = p^(sum_i min(lambda_i, j))
    for the p-part of type lambda; the exponents are recovered as the
    conjugate partition.
    """
    size = len(orders)
    if size == 1:
        return ()
    primes = set()
    for o in orders:
        d, f = o, 2
        while d > 1:
            while d % f == 0:
                primes.add(f)
                d //= f
            f += 1
    parts_by_prime: dict[int, list[int]] = {}
    for p in sorted(primes):
        maxj = 0
        for o in orders:
            e = 0
            while o % p == 0:
                o //= p
                e += 1
            maxj = max(maxj, e)
        logs = [0]
        for j in range(1, maxj + 1):
            cj = sum(1 for o in orders if (p ** j) % o == 0)
            lj = 0
            t = cj
            while t > 1:
                assert t % p == 0, "element-order counts are not a p-power"
                t //= p
                lj += 1
            logs.append(lj)
        m = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
        lam = []
        k = 1
        while True:
            cnt = sum(1 for e in m if e >= k)
            if cnt == 0:
                break
            lam.append(cnt)
            k += 1
        # lam is the conjugate of m; m itself is the conjugate of the type,
        # so the type exponents are lam
        parts_by_prime[p] = sorted((p ** e for e in lam if e), reverse=True)
    width = max((len(v) for v in parts_by_prime.values()), default=0)
    factors = []
    for i in range(width):
        f = 1
        for lst in parts_by_prime.values():
            if i < len(lst):
                f *= lst[i]
        factors.append(f)
    return tuple(factors)


# -- skew primitives ----------------------------------------------------------------


def skew_primitives(H: FinHopf, a, b) -> tuple[Subspace, bool]:
    """P_{a,b} = {c : Delta c = a (x) c + c (x) b}, plus a triviality flag.

    Trivial means P_{a,b} is contained in the span of the (verified
    claimed) group-likes.
    """
    n, M = H.dim, H.conductor
    if not H.is_grouplike(a) or not H.is_grouplike(b):
        raise NotGrouplike("skew-primitive anchors must be group-like")
    av = list(a)
    bv = list(b)
    eq: dict = {}

    def row(j, k):
        r = eq.get((j, k))
        if r is None:
            r = zero_vector(n, M)
            eq[(j, k)] = r
        return r

    for m in range(n):
        for (j, k), c in H.crows[m]:
            r = row(j, k)
            r[m] = r[m] + c
    for j in range(n):
        if not av[j].is_zero():
            for k in range(n):
                r = row(j, k)
                r[k] = r[k] - av[j]
    for k in range(n):
        if not bv[k].is_zero():
            for j in range(n):
                r = row(j, k)
                r[j] = r[j] - bv[k]
    space = kernel(list(eq.values()), n, M)
    verified = [g for g in H.claims.grouplikes if H.is_grouplike(g)]
    gl_span = Subspace.from_vectors(n, M, [list(g) for g in verified])
    trivial = gl_span.contains_subspace(space)
    return space, trivial


# -- fingerprint ---------------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    g_order: int
    g_dual_order: int
    g_type: str
    g_dual_type: str
    antipode_order: int
    trace_s2: str
    coradical_dims: tuple[int, ...]
    pointed: bool
    dual_pointed: bool
    unimodular: bool

    def type_pair(self) -> str:
        return f"({self.g_type};{self.g_dual_type})"

    def line(self) -> str:
        return (f"dim={self.dim} type={self.type_pair()} "
                f"ordS={self.antipode_order} TrS2={self.trace_s2} "
                f"corad=[{','.join(str(d) for d in self.coradical_dims)}] "
                f"pointed={'yes' if self.pointed else 'no'} "
                f"dualpointed={'yes' if self.dual_pointed else 'no'} "
                f"unimodular={'yes' if self.unimodular else 'no'}")


def fingerprint(H: FinHopf) -> Fingerprint:
    """All classification invariants in one record (re-derivable from H)."""
    n, M = H.dim, H.conductor
    census = grouplike_census(H)
    census_d = characters_census(H)
    corad = coradical_filtration(H)
    ln = antipode_order(H)
    ss = semisimplicity(H)
    mod = modular_elements(H)
    # dual coradical dim: (Rad H)^perp inside H*
    radH = algebra_radical(H.mult, H.unit, M)
    dual_h0_dim = n - radH.dim
    return Fingerprint(
        dim=n,
        g_order=census.size,
        g_dual_order=census_d.size,
        g_type=census.type_string(),
        g_dual_type=census_d.type_string(),
        antipode_order=ln,
        trace_s2=render(ss.trace_s2),
        coradical_dims=corad.filtration_dims,
        pointed=(corad.H0_dim == census.size),
        dual_pointed=(dual_h0_dim == census_d.size),
        unimodular=is_unimodular(H, mod),
    )


# -- pairing table and bosonization criteria ------------------------------------------


@dataclass(frozen=True)
class PairingReport:
    table: tuple[tuple[CycloNum, ...], ...]  # rows: beta in G(H*); cols: x in G(H)
    has_nontrivial_entry: bool               # bosonization criterion (|G|=p case)
    all_entries_one: bool                    # the order-4p consistency flag


def pairing_table(H: FinHopf) -> PairingReport:
    """<beta, x> over G(H*) x G(H); both censuses must certify."""
    census = grouplike_census(H)
    census_d = characters_census(H)
    one = CycloNum.one(H.conductor)
    rows = []
    nontrivial = False
    for beta in census_d.elements:
        row = []
        for x in census.elements:
            acc = CycloNum.zero(H.conductor)
            for bc, xc in zip(beta, x):
                if not bc.is_zero() and not xc.is_zero():
                    acc = acc + bc * xc
            row.append(acc)
            if acc != one:
                nontrivial = True
        rows.append(tuple(row))
    return PairingReport(tuple(rows), nontrivial, not nontrivial)


def commutative_quotient_check(mult, unit, M: int) -> bool:
    """True iff A/Rad A is commutative (then all simple modules are 1-dim)."""
    n = mult.dims[0]
    rad = algebra_radical(mult, unit, M)
    rows = mult.rows_ij()
    if rad.dim:
        qa = QuotientAlgebra(rows, n, M, rad)
        rows, n = qa.rows, qa.dim
    one = CycloNum.one(M)
    for i in range(n):
        for j in range(i + 1, n):
            if mult_vectors(rows, {i: one}, {j: one}) != \
               mult_vectors(rows, {j: one}, {i: one}):
                return False
    return True


@dataclass(frozen=True)
class SplittingReport:
    section_ok: bool
    coinvariant_dim: int
    dims_multiply: bool

    @property
    def success(self) -> bool:
        return self.section_ok and self.dims_multiply


def projection_splitting_check(pi: HopfMorphism, gamma: HopfMorphism) -> SplittingReport:
    """pi o gamma = id_B and dim H = dim H^{co pi} * dim B: H is a bosonization."""
    H, B = pi.source, pi.target
    if not verify_morphism(pi).ok:
        raise SectionFails("projection is not a Hopf algebra map")
    if not verify_morphism(gamma).ok:
        raise SectionFails("section is not a Hopf algebra map")
    comp = mat_mul([list(r) for r in pi.matrix], [list(r) for r in gamma.matrix])
    if not mat_eq(comp, identity_matrix(B.dim, B.conductor)):
        raise SectionFails("pi o gamma is not the identity")
    ci = coinvariants(pi)
    return SplittingReport(True, ci.dim, ci.dim * B.dim == H.dim)
