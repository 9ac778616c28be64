"""Truncated limit local cohomology with Frobenius actions, HSL numbers,
and the consistency and inequality reports built on top of them.

For a filter regular sequence x_1, ..., x_d in R and a prefix length i, the
i-th local cohomology of R at the maximal ideal is the direct limit of the
finite-length torsion quotients

    L_n = ((x_1^n, ..., x_i^n) : m^infinity) / (x_1^n, ..., x_i^n),

with transition maps given by multiplication by (x_1 ... x_i) and a natural
Frobenius action sending the class of a at level n to the class of a^p at
level p*n.  Truncating at level N gives finite matrices for everything; the
Frobenius-nilpotent part is scanned through kernels of composed Frobenius
chains, filtered by survival under the transition maps so that truncation
artifacts (classes that die in the limit) are never reported as witnesses.

The HSL number of the ring is the maximum, over cohomological degrees, of
the nilpotency orders seen this way; it is an experimental lower bound that
the package cross-checks for stability by re-running at a deeper truncation.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import (
    AlgebraError,
    Mono,
    Polynomial,
    frobenius_raise,
    mono_degree,
    mono_weighted_degree,
    monomials_of_weighted_degree,
)
from .filterreg import FilterSequence, is_filter_regular_sequence, make_sequence
from .frobenius import frobenius_closure, power_family_ideal
from .groebner import (
    GBConfig,
    IdealHandle,
    QuotientRing,
    dimension,
    ideal,
    quotient_from_data,
    quotient_to_data,
    ring_fingerprint,
    saturation,
    std_monomials,
    std_monomials_of_weighted_degree,
)
from .seeding import derive_seed


class TorsionSpanError(AlgebraError):
    """Element outside the span of a torsion quotient snapshot."""


# ---------------------------------------------------------------------------
# torsion quotient snapshots


@dataclass
class TorsionQuotientSnapshot:
    """Vector space basis of (Q : m^infinity)/Q over F_p.

    Basis elements are normal-form representatives; their coordinate rows
    over ``columns`` (monomials sorted by degree then monomial order) are in
    reduced row echelon form, so coordinates of arbitrary elements resolve
    by pivot elimination.  When Q is m-primary the whole quotient R/Q is
    m-torsion and the basis is exactly the standard monomial basis
    (monomial_basis flag); kill_exponent is an exponent k with
    m^k * basis inside Q.
    """

    ring: QuotientRing
    defining: IdealHandle
    basis: tuple[Polynomial, ...]
    columns: tuple[Mono, ...]
    matrix: np.ndarray | None
    pivots: tuple[int, ...] | None
    kill_exponent: int
    monomial_basis: bool

    @property
    def length(self) -> int:
        return len(self.basis)

    def _column_index(self) -> dict:
        cached = getattr(self, "_index", None)
        if cached is None:
            cached = {m: i for i, m in enumerate(self.columns)}
            self._index = cached
        return cached

    def _vectorize(self, f: Polynomial) -> np.ndarray:
        w = self.defining.normal_form(f)
        vec = np.zeros(len(self.columns), dtype=np.int64)
        index = self._column_index()
        for m, c in w.terms.items():
            if m not in index:
                raise TorsionSpanError(f"{f} is not m-torsion modulo the ideal")
            vec[index[m]] = c
        return vec

    def coordinates(self, f: Polynomial) -> np.ndarray:
        """Coordinates of f's class in the basis; raises TorsionSpanError
        when the class lies outside the torsion submodule."""
        p = self.ring.p
        vec = self._vectorize(f)
        if self.monomial_basis:
            return vec
        if self.matrix is None:
            # empty snapshot: _vectorize already rejected anything nonzero
            return np.zeros(0, dtype=np.int64)
        coords = linalg.solve_in_rowspace(self.matrix, list(self.pivots), vec, p)
        if coords is None:
            raise TorsionSpanError(f"{f} is not in the torsion span")
        return coords

    def contains_class(self, f: Polynomial) -> bool:
        try:
            self.coordinates(f)
            return True
        except TorsionSpanError:
            return False

    def from_coordinates(self, coords) -> Polynomial:
        out = self.ring.ambient.zero()
        for c, b in zip(coords, self.basis):
            if c % self.ring.p:
                out = out + int(c) * b
        return out

    def degree_table(self) -> dict[int, int] | None:
        """Graded dimension counts when every basis element is homogeneous."""
        table: dict[int, int] = {}
        for b in self.basis:
            if not b.is_homogeneous():
                return None
            d = b.weighted_degree()
            table[d] = table.get(d, 0) + 1
        return dict(sorted(table.items()))


def _empty_snapshot(R: QuotientRing, Q: IdealHandle) -> TorsionQuotientSnapshot:
    return TorsionQuotientSnapshot(R, Q, (), (), None, None, 0, False)


def _monomials_of_plain_degree(nvars: int, degree: int) -> list[Mono]:
    return monomials_of_weighted_degree(nvars, degree, (1,) * nvars)


def _min_kill_exponent(R: QuotientRing, g: Polynomial, Q: IdealHandle,
                       bound: int, config: GBConfig | None) -> int:
    """Least k <= bound with m^k * g inside Q."""
    n = R.ambient.nvars
    for k in range(bound + 1):
        monos = _monomials_of_plain_degree(n, k)
        if all(Q.contains(R.ambient.monomial(m) * g, config) for m in monos):
            return k
    raise AlgebraError("saturation exponent bound violated")


def torsion_quotient(R: QuotientRing, Q: IdealHandle,
                     config: GBConfig | None = None) -> TorsionQuotientSnapshot:
    """Snapshot of (Q : m^infinity)/Q; Q is a handle over R."""
    if not Q.is_proper(config):
        return _empty_snapshot(R, Q)
    dim = dimension(Q, config)
    order_key = R.ambient.order.key
    if dim == 0:
        cols = tuple(std_monomials(Q, config))
        basis = tuple(R.ambient.monomial(m) for m in cols)
        top = max((mono_degree(m) for m in cols), default=-1)
        kill = top + 1
        n = R.ambient.nvars
        while not all(Q.contains(R.ambient.monomial(m), config)
                      for m in _monomials_of_plain_degree(n, kill)):
            kill += 1
            if kill > top + 65:
                raise AlgebraError("m-primary kill exponent did not settle")
        return TorsionQuotientSnapshot(R, Q, basis, cols, None, None, kill, True)
    m = R.maximal_ideal()
    saturated, s = saturation(Q, m, config)
    if saturated.equals(Q, config):
        return _empty_snapshot(R, Q)
    p = R.p
    rows: list[dict] = []
    kill = 0
    nvars = R.ambient.nvars
    for g in saturated.groebner_basis(config):
        k_g = _min_kill_exponent(R, g, Q, s, config)
        kill = max(kill, k_g)
        for k in range(k_g):
            for mono in _monomials_of_plain_degree(nvars, k):
                w = Q.normal_form(R.ambient.monomial(mono) * g, config)
                if w.terms:
                    rows.append(w.terms)
    if not rows:
        return _empty_snapshot(R, Q)
    support = sorted({m for t in rows for m in t},
                     key=lambda m: (mono_degree(m), order_key(m)))
    index = {m: i for i, m in enumerate(support)}
    mat = np.zeros((len(rows), len(support)), dtype=np.int64)
    for r, t in enumerate(rows):
        for m, c in t.items():
            mat[r, index[m]] = c
    red, pivots = linalg.rref(mat, p)
    basis = []
    for r in range(red.shape[0]):
        terms = {support[c]: int(red[r, c]) for c in range(red.shape[1]) if red[r, c]}
        basis.append(Polynomial(R.ambient, terms))
    return TorsionQuotientSnapshot(R, Q, tuple(basis), tuple(support), red,
                                   tuple(pivots), kill, False)


# ---------------------------------------------------------------------------
# truncated limit systems


@dataclass
class LimitSystem:
    """Levels 1..N of the Koszul-limit tower for one prefix length.

    transitions[k] maps level k+1 to level k+2 (multiplication by the product
    of the prefix); frobenius[n] maps level n to level p*n (class of a to
    class of a^p).  All matrices act on coordinate columns.
    """

    ring: QuotientRing
    prefix: tuple[Polynomial, ...]
    index: int
    levels: int
    snapshots: list[TorsionQuotientSnapshot]
    transitions: list[np.ndarray]
    frobenius: dict[int, np.ndarray]

    @property
    def p(self) -> int:
        return self.ring.p

    def lengths(self) -> list[int]:
        return [s.length for s in self.snapshots]

    def capacity(self, n: int) -> int:
        """Largest e with n * p^e <= N."""
        e = 0
        level = n
        while level * self.p <= self.levels:
            level *= self.p
            e += 1
        return e

    def transition_chain(self, a: int, b: int) -> np.ndarray:
        """Composite transition from level a to level b (a <= b)."""
        if not (1 <= a <= b <= self.levels):
            raise AlgebraError(f"levels out of range: {a} -> {b}")
        out = linalg.identity(self.snapshots[a - 1].length)
        for lev in range(a, b):
            out = linalg.matmul(self.transitions[lev - 1], out, self.p)
        return out

    def frobenius_chain(self, n: int, e: int) -> np.ndarray:
        """Composite Frobenius from level n to level n * p^e."""
        if e < 1:
            raise AlgebraError("Frobenius chain needs e >= 1")
        if n * self.p**e > self.levels:
            raise AlgebraError(f"chain {n} -> {n * self.p ** e} exceeds truncation")
        out = self.frobenius[n]
        level = n * self.p
        for _ in range(e - 1):
            out = linalg.matmul(self.frobenius[level], out, self.p)
            level *= self.p
        return out

    def audit_commutation(self) -> str | None:
        """Matrix-wise check of the Frobenius-transition square; returns a
        description of the first failing square, or None."""
        p = self.p
        for n in range(1, self.levels):
            if p * (n + 1) > self.levels:
                break
            lhs = linalg.matmul(self.frobenius[n + 1], self.transitions[n - 1], p)
            rhs = linalg.matmul(self.transition_chain(p * n, p * (n + 1)),
                                self.frobenius[n], p)
            if not np.array_equal(lhs, rhs):
                return (f"square at level {n}: frobenius after transition != "
                        f"transition chain after frobenius")
        return None


def limit_system(R: QuotientRing, fseq: FilterSequence, i: int, N: int,
                 config: GBConfig | None = None,
                 audit: bool = True) -> LimitSystem:
    """Build snapshots, transitions and Frobenius matrices for prefix i.

    The first i elements of fseq must be verified filter regular; levels run
    from 1 to N and Frobenius matrices exist for every n with p*n <= N.
    """
    if not (0 <= i <= len(fseq)):
        raise AlgebraError(f"prefix length {i} out of range")
    if N < 1:
        raise AlgebraError("truncation must be >= 1")
    if not all(fseq.verified[:i]):
        raise AlgebraError("prefix is not a verified filter regular sequence")
    prefix = fseq.elements[:i]
    p = R.p

    snapshots: list[TorsionQuotientSnapshot] = []
    if i == 0:
        shared = torsion_quotient(R, ideal(R), config)
        snapshots = [shared] * N
    else:
        for n in range(1, N + 1):
            Q = ideal(R, [f**n for f in prefix])
            snapshots.append(torsion_quotient(R, Q, config))

    product = R.ambient.one()
    for f in prefix:
        product = product * f

    transitions: list[np.ndarray] = []
    for n in range(1, N):
        src, dst = snapshots[n - 1], snapshots[n]
        mat = np.zeros((dst.length, src.length), dtype=np.int64)
        for col, b in enumerate(src.basis):
            image = b * product
            mat[:, col] = dst.coordinates(image)
        transitions.append(mat)

    frobenius: dict[int, np.ndarray] = {}
    for n in range(1, N + 1):
        if p * n > N:
            break
        src, dst = snapshots[n - 1], snapshots[p * n - 1]
        mat = np.zeros((dst.length, src.length), dtype=np.int64)
        for col, b in enumerate(src.basis):
            mat[:, col] = dst.coordinates(frobenius_raise(b, 1))
        frobenius[n] = mat

    system = LimitSystem(R, prefix, i, N, snapshots, transitions, frobenius)
    if audit:
        witness = system.audit_commutation()
        if witness is not None:
            raise AlgebraError(f"Frobenius-transition commutation failed: {witness}")
    return system


# ---------------------------------------------------------------------------
# Frobenius-nilpotent part


@dataclass
class NilpotentWitness:
    level: int
    order: int
    coords: tuple[int, ...]
    poly: str

    def to_dict(self) -> dict:
        return {"level": self.level, "order": self.order, "poly": self.poly}


@dataclass
class NilpotentReport:
    witnesses: list[NilpotentWitness]
    max_order: int
    kernel_dims: dict
    undetermined_levels: list[int]
    probe_depths: dict
    levels: int
    e_max: int


def nilpotent_part(system: LimitSystem, e_max: int) -> NilpotentReport:
    """Witnesses of Frobenius-nilpotency order exactly e, per level.

    A witness at level n of order e is a class v with chain^e(v) = 0,
    chain^(e-1)(v) surviving the transitions out to the truncation edge, and
    v itself surviving; survival filtering discards truncation artifacts.
    Levels with no Frobenius reach inside the truncation are reported as
    undetermined rather than silently skipped.
    """
    p = system.p
    N = system.levels
    witnesses: list[NilpotentWitness] = []
    kernel_dims: dict = {}
    undetermined: list[int] = []
    probe_depths: dict = {}
    for n in range(1, N + 1):
        snap = system.snapshots[n - 1]
        if snap.length == 0:
            continue
        cap = system.capacity(n)
        if cap == 0:
            undetermined.append(n)
            continue
        depth = min(e_max, cap)
        probe_depths[n] = depth
        survive_n = system.transition_chain(n, N)
        for e in range(1, depth + 1):
            chain = system.frobenius_chain(n, e)
            kernel = linalg.nullspace(chain, p)
            kernel_dims[(n, e)] = int(kernel.shape[0])
            if kernel.shape[0] == 0:
                continue
            if e == 1:
                almost = survive_n
            else:
                mid = n * p**(e - 1)
                almost = linalg.matmul(system.transition_chain(mid, N),
                                       system.frobenius_chain(n, e - 1), p)
            img_a = linalg.matmul(survive_n, kernel.T, p)
            img_b = linalg.matmul(almost, kernel.T, p)
            alive_a = [j for j in range(kernel.shape[0]) if np.any(img_a[:, j])]
            alive_b = [j for j in range(kernel.shape[0]) if np.any(img_b[:, j])]
            if not alive_a or not alive_b:
                continue
            both = [j for j in alive_a if j in alive_b]
            if both:
                v = kernel[both[0]] % p
            else:
                # sum of a survivor and an almost-survivor works since each
                # lies outside exactly one of the two kernels
                v = (kernel[alive_a[0]] + kernel[alive_b[0]]) % p
            va = linalg.matmul(survive_n, v.reshape(-1, 1), p)
            vb = linalg.matmul(almost, v.reshape(-1, 1), p)
            if not (np.any(va) and np.any(vb)):
                continue
            poly = snap.from_coordinates(v)
            witnesses.append(NilpotentWitness(n, e, tuple(int(x) for x in v),
                                              str(poly)))
    max_order = max((w.order for w in witnesses), default=0)
    return NilpotentReport(witnesses, max_order, kernel_dims, undetermined,
                           probe_depths, N, e_max)


# ---------------------------------------------------------------------------
# HSL estimation


@dataclass
class HslRun:
    per_index: dict
    witnesses: dict
    undetermined: dict
    N: int
    e_max: int


@dataclass
class HslReport:
    """Witnessed HSL numbers per cohomological degree, with stability probe.

    per_index[i] is the maximal witnessed Frobenius-nilpotency order on the
    i-th limit tower at truncation N; overall is the max over i.  stable
    means a re-run at truncation N + probe_step with e_max + 1 reported the
    same values everywhere.
    """

    fingerprint: str
    ring_label: str
    sequence: list[str]
    per_index: dict
    overall: int
    stable: bool
    per_index_stable: dict
    witnesses: dict
    undetermined: dict
    N: int
    e_max: int
    probe_N: int
    probe_e_max: int

    def to_dict(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "ring_label": self.ring_label,
            "sequence": self.sequence,
            "per_index": {str(i): v for i, v in self.per_index.items()},
            "overall": self.overall,
            "stable": self.stable,
            "per_index_stable": {str(i): v for i, v in self.per_index_stable.items()},
            "witnesses": {str(i): [w.to_dict() for w in ws]
                          for i, ws in self.witnesses.items()},
            "undetermined": {str(i): v for i, v in self.undetermined.items()},
            "N": self.N,
            "e_max": self.e_max,
            "probe_N": self.probe_N,
            "probe_e_max": self.probe_e_max,
        }


def _hsl_single(R: QuotientRing, fseq: FilterSequence, i: int, N: int,
                e_max: int, config: GBConfig | None) -> tuple[int, NilpotentReport]:
    system = limit_system(R, fseq, i, N, config)
    report = nilpotent_part(system, e_max)
    return report.max_order, report


def _hsl_worker(payload: dict) -> dict:
    R = quotient_from_data(payload["ring"])
    fseq = make_sequence(R, payload["sequence"])
    fseq.verified = (True,) * len(fseq.elements)
    config = GBConfig(**payload["config"]) if payload.get("config") else None
    order, report = _hsl_single(R, fseq, payload["i"], payload["N"],
                                payload["e_max"], config)
    return {
        "i": payload["i"],
        "N": payload["N"],
        "order": order,
        "witnesses": [w.to_dict() for w in report.witnesses],
        "undetermined": report.undetermined_levels,
    }


def _hsl_run(R: QuotientRing, fseq: FilterSequence, N: int, e_max: int,
             jobs: int, config: GBConfig | None) -> HslRun:
    d = R.dim
    per_index: dict = {}
    witnesses: dict = {}
    undetermined: dict = {}
    if jobs > 1 and d > 0:
        ring_data = quotient_to_data(R)
        payloads = [{
            "ring": ring_data,
            "sequence": fseq.element_strings(),
            "i": i,
            "N": N,
            "e_max": e_max,
            "config": {"max_pairs": config.max_pairs, "max_degree": config.max_degree}
                      if config else None,
        } for i in range(d + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_hsl_worker, payloads))
        for res in results:
            i = res["i"]
            per_index[i] = res["order"]
            witnesses[i] = [NilpotentWitness(w["level"], w["order"], (), w["poly"])
                            for w in res["witnesses"]]
            undetermined[i] = res["undetermined"]
    else:
        for i in range(d + 1):
            order, report = _hsl_single(R, fseq, i, N, e_max, config)
            per_index[i] = order
            witnesses[i] = report.witnesses
            undetermined[i] = report.undetermined_levels
    return HslRun(per_index, witnesses, undetermined, N, e_max)


def hsl_estimate(R: QuotientRing, fseq: FilterSequence, N: int = 8,
                 e_max: int = 8, probe_step: int = 2, jobs: int = 1,
                 config: GBConfig | None = None) -> HslReport:
    """Witnessed HSL numbers for every cohomological degree 0..dim(R).

    The sequence must be a verified filter regular system of parameters.
    The probe re-run uses truncation N + probe_step and chain depth
    e_max + 1; agreement sets the stability flag.
    """
    d = R.dim
    if len(fseq) != d:
        raise AlgebraError(f"need a full system of parameters ({d} elements)")
    if not all(fseq.verified):
        ok, bad = is_filter_regular_sequence(fseq, config)
        if not ok:
            raise AlgebraError(f"sequence is not filter regular at index {bad}")
    base = _hsl_run(R, fseq, N, e_max, jobs, config)
    probe = _hsl_run(R, fseq, N + probe_step, e_max + 1, jobs, config)
    per_index_stable = {i: base.per_index[i] == probe.per_index[i]
                        for i in range(d + 1)}
    overall = max(base.per_index.values()) if base.per_index else 0
    return HslReport(
        fingerprint=ring_fingerprint(R),
        ring_label=R.label,
        sequence=fseq.element_strings(),
        per_index=base.per_index,
        overall=overall,
        stable=all(per_index_stable.values()),
        per_index_stable=per_index_stable,
        witnesses=base.witnesses,
        undetermined=base.undetermined,
        N=N,
        e_max=e_max,
        probe_N=N + probe_step,
        probe_e_max=e_max + 1,
    )


# ---------------------------------------------------------------------------
# graded Koszul cohomology oracle


def koszul_cohomology_table(R: QuotientRing, powers, degree_lo: int,
                            degree_hi: int,
                            config: GBConfig | None = None) -> dict:
    """Graded dimensions of every Koszul cohomology H^j(powers; R) in the
    degree window, as {j: {degree: dim}}.

    Cochain components are twisted so the top cohomology R/(powers) carries
    its natural grading: the slot degree of a component indexed by a subset
    T of the t generators is deg_R(element) + sum of deg(f_i) over i not in
    T.  Requires homogeneous relations and generators; the computation is
    rank linear algebra on multiplication matrices between standard monomial
    bases of the graded pieces.
    """
    powers = [R.parse(f) if isinstance(f, str) else f for f in powers]
    t = len(powers)
    if t == 0:
        raise AlgebraError("Koszul complex needs at least one element")
    for g in list(R.relations.own_gens) + powers:
        if not g.is_homogeneous():
            raise AlgebraError("graded Koszul oracle needs homogeneous data")
    p = R.p
    J = R.relations
    degs = [f.weighted_degree() for f in powers]

    piece_cache: dict[int, list[Mono]] = {}

    def piece(D: int) -> list[Mono]:
        if D < 0:
            return []
        if D not in piece_cache:
            piece_cache[D] = std_monomials_of_weighted_degree(J, D, config)
        return piece_cache[D]

    mult_cache: dict = {}

    def mult_matrix(gi: int, D: int) -> np.ndarray:
        key = (gi, D)
        if key not in mult_cache:
            src = piece(D)
            dst = piece(D + degs[gi])
            index = {m: r for r, m in enumerate(dst)}
            mat = np.zeros((len(dst), len(src)), dtype=np.int64)
            for col, mono in enumerate(src):
                w = J.normal_form(R.ambient.monomial(mono) * powers[gi], config)
                for m, c in w.terms.items():
                    mat[index[m], col] = c
            mult_cache[key] = mat
        return mult_cache[key]

    subsets = {j: list(itertools.combinations(range(t), j)) for j in range(t + 1)}
    shift = {T: sum(degs[i] for i in range(t) if i not in T)
             for j in range(t + 1) for T in subsets[j]}

    def comp_dims(j: int, D: int) -> list[int]:
        return [len(piece(D - shift[T])) for T in subsets[j]]

    def differential_rank(j: int, D: int) -> int:
        # block matrix of d^j : K^j_D -> K^{j+1}_D
        src_list = subsets[j]
        dst_list = subsets[j + 1]
        src_dims = comp_dims(j, D)
        dst_dims = comp_dims(j + 1, D)
        if sum(src_dims) == 0 or sum(dst_dims) == 0:
            return 0
        src_off = np.cumsum([0] + src_dims)
        dst_off = np.cumsum([0] + dst_dims)
        dst_index = {T: k for k, T in enumerate(dst_list)}
        mat = np.zeros((int(dst_off[-1]), int(src_off[-1])), dtype=np.int64)
        for a, T in enumerate(src_list):
            for i in range(t):
                if i in T:
                    continue
                U = tuple(sorted(T + (i,)))
                b = dst_index[U]
                sign = (-1) ** sum(1 for x in T if x < i)
                block = mult_matrix(i, D - shift[T])
                if block.size == 0:
                    continue
                mat[dst_off[b]:dst_off[b + 1], src_off[a]:src_off[a + 1]] = \
                    (sign * block) % p
        return linalg.rank(mat, p)

    table: dict = {j: {} for j in range(t + 1)}
    for D in range(degree_lo, degree_hi + 1):
        ranks = [differential_rank(j, D) for j in range(t)]
        for j in range(t + 1):
            total = sum(comp_dims(j, D))
            r_out = ranks[j] if j < t else 0
            r_in = ranks[j - 1] if j > 0 else 0
            table[j][D] = total - r_out - r_in
    return table


def graded_koszul_cohomology(R: QuotientRing, powers, i: int, degree_lo: int,
                             degree_hi: int,
                             config: GBConfig | None = None) -> dict:
    """Per-degree dimensions of H^i(powers; R) in the window."""
    table = koszul_cohomology_table(R, powers, degree_lo, degree_hi, config)
    if i not in table:
        raise AlgebraError(f"cohomological index {i} out of range")
    return table[i]


# ---------------------------------------------------------------------------
# consistency and inequality reports


@dataclass
class NsReport:
    """Comparison of two independently sampled limit towers plus the graded
    Koszul oracle; status is pass, fail or inconclusive."""

    fingerprint: str
    ring_label: str
    N: int
    probes: tuple
    tables: dict
    stabilized: dict
    oracle: dict
    status: str
    first_disagreement: str | None
    notes: list

    def to_dict(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "ring_label": self.ring_label,
            "N": self.N,
            "probes": list(self.probes),
            "tables": {str(i): v for i, v in self.tables.items()},
            "stabilized": {str(i): v for i, v in self.stabilized.items()},
            "oracle": {str(i): {str(n): v for n, v in row.items()}
                       for i, row in self.oracle.items()},
            "status": self.status,
            "first_disagreement": self.first_disagreement,
            "notes": self.notes,
        }


def _stabilized_tail(values: list[int], window: int) -> int | None:
    if len(values) < window:
        return None
    tail = values[-window:]
    if all(v == tail[0] for v in tail):
        return tail[0]
    return None


def ns_consistency_check(R: QuotientRing, fseq_a: FilterSequence,
                         fseq_b: FilterSequence, N: int = 6,
                         probes: tuple = (1, 2), stab_window: int = 2,
                         config: GBConfig | None = None,
                         systems_a: dict | None = None,
                         systems_b: dict | None = None) -> NsReport:
    """Check that two independent filter regular systems of parameters give
    the same stabilized torsion-quotient tables, and that both agree with
    the graded Koszul cohomology oracle at the probe levels.

    For i = dim(R) the towers are compared entrywise (the quotients are the
    same R/Q_n up to choice of parameters); for i < dim(R) the stabilized
    tail values are compared.  systems_a/systems_b allow injecting prebuilt
    (possibly corrupted) towers for negative-control testing.
    """
    d = R.dim
    tables: dict = {}
    stabilized: dict = {}
    oracle: dict = {}
    notes: list = []
    status = "pass"
    first = None

    def fail(msg: str):
        nonlocal status, first
        status = "fail"
        if first is None:
            first = msg

    built: dict = {}
    for i in range(d + 1):
        if systems_a is not None and i in systems_a:
            sa = systems_a[i]
        else:
            sa = limit_system(R, fseq_a, i, N, config, audit=False)
        if systems_b is not None and i in systems_b:
            sb = systems_b[i]
        else:
            sb = limit_system(R, fseq_b, i, N, config, audit=False)
        built[i] = (sa, sb)
        for tag, system in (("a", sa), ("b", sb)):
            witness = system.audit_commutation()
            if witness is not None:
                fail(f"commutation audit failed (sequence {tag}, i={i}): {witness}")
        ta, tb = sa.lengths(), sb.lengths()
        tables[i] = {"a": ta, "b": tb}
        if i == d:
            stabilized[i] = None
            if ta != tb:
                lvl = next(k for k in range(len(ta)) if ta[k] != tb[k])
                fail(f"top tower differs at level {lvl + 1}: {ta[lvl]} vs {tb[lvl]}")
        else:
            va = _stabilized_tail(ta, stab_window)
            vb = _stabilized_tail(tb, stab_window)
            if va is None or vb is None:
                stabilized[i] = None
                if status == "pass":
                    status = "inconclusive"
                notes.append(f"tower i={i} not stabilized within N={N}")
            else:
                if va != vb:
                    fail(f"stabilized lengths differ at i={i}: {va} vs {vb}")
                stabilized[i] = va

    graded_ok = all(g.is_homogeneous() for g in R.relations.own_gens) and \
        all(f.is_homogeneous() for f in fseq_a.elements)
    if graded_ok and d >= 1:
        for n in probes:
            if n > N:
                continue
            powers = [f**n for f in fseq_a.elements]
            full = ideal(R, powers)
            monos = std_monomials(full, config)
            top_internal = max((mono_weighted_degree(m, R.ambient.weights)
                                for m in monos), default=-1)
            hi = sum(f.weighted_degree() for f in powers) + max(top_internal, 0) + 2
            table = koszul_cohomology_table(R, powers, 0, hi, config)
            for i in range(d + 1):
                margin = [table[i].get(D, 0) for D in (hi - 1, hi)]
                if any(margin):
                    notes.append(f"oracle window too small at i={i}, n={n}")
                    if status == "pass":
                        status = "inconclusive"
                total = sum(table[i].values())
                oracle.setdefault(i, {})[n] = total
                if i == d:
                    expected = tables[i]["a"][n - 1]
                    if total != expected:
                        fail(f"oracle mismatch at top degree, n={n}: "
                             f"koszul {total} vs tower {expected}")
                else:
                    if stabilized.get(i) is not None and total != stabilized[i]:
                        fail(f"oracle mismatch at i={i}, n={n}: koszul {total} "
                             f"vs stabilized tower {stabilized[i]}")
    else:
        notes.append("graded oracle skipped (non-homogeneous data)")

    return NsReport(
        fingerprint=ring_fingerprint(R),
        ring_label=R.label,
        N=N,
        probes=tuple(probes),
        tables=tables,
        stabilized=stabilized,
        oracle=oracle,
        status=status,
        first_disagreement=first,
        notes=notes,
    )


@dataclass
class InequalityReport:
    """Empirical comparison of the sampled Frobenius test exponent bound
    against the witnessed HSL number, with the pushed-closure mechanism."""

    fingerprint: str
    ring_label: str
    max_fte: int | None
    hsl_overall: int
    holds: bool
    status: str
    mechanism: list
    mechanism_ok: bool
    notes: list

    def to_dict(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "ring_label": self.ring_label,
            "max_fte": self.max_fte,
            "hsl_overall": self.hsl_overall,
            "holds": self.holds,
            "status": self.status,
            "mechanism": self.mechanism,
            "mechanism_ok": self.mechanism_ok,
            "notes": self.notes,
        }


def _nilpotency_order_in_uniform_powers(R: QuotientRing, elements, a: Polynomial,
                                        n: int, e_cap: int,
                                        config: GBConfig | None) -> int | None:
    """Least e with a^(p^e) in (f_1^(n p^e), ..., f_d^(n p^e)) + J."""
    for e in range(e_cap + 1):
        q = R.p**e
        target = ideal(R, [f**(n * q) for f in elements])
        if target.contains(frobenius_raise(a, e), config):
            return e
    return None


def verify_inequality(R: QuotientRing, scan, hsl: HslReport,
                      config: GBConfig | None = None) -> InequalityReport:
    """Check max sampled Frobenius test exponent >= witnessed HSL number.

    Also traces the mechanism linking the two sides: for every prefix-power
    family (f_1^n..f_t^n, f_{t+1}..f_d) with a nontrivial closure, each
    closure generator a is pushed to the uniform power family via
    a * (f_{t+1} ... f_d)^(n-1), and its Frobenius-nilpotency order there
    must be bounded by the family's test exponent.
    """
    fp = ring_fingerprint(R)
    notes: list = []
    if scan.fingerprint != fp or hsl.fingerprint != fp:
        raise AlgebraError("scan/hsl reports belong to a different ring")
    status = "pass"
    if scan.any_failures:
        notes.append("some scan samples failed; the bound uses the rest")
    if scan.max_fte is None:
        status = "inconclusive"
        notes.append("no scan sample succeeded")
    if not hsl.stable:
        status = "inconclusive"
        notes.append("HSL probe run disagreed with the base run")
    holds = scan.max_fte is not None and scan.max_fte >= hsl.overall

    base = [R.parse(s) for s in scan.base_sop]
    d = R.dim
    mechanism: list = []
    mechanism_ok = True
    for sample in scan.samples:
        if sample.kind != "power-family" or sample.error is not None:
            continue
        t, n = sample.descriptor["t"], sample.descriptor["n"]
        family = power_family_ideal(R, base, t, n)
        tail = R.ambient.one()
        for f in base[t:]:
            tail = tail * f
        push = tail**(n - 1)
        entry = {"t": t, "n": n, "fte": sample.fte, "classes": []}
        for gen_str in sample.closure_gens or []:
            a = R.parse(gen_str)
            if family.contains(a, config):
                continue
            pushed = a * push
            record = {"gen": gen_str, "pushed": str(pushed)}
            if ideal(R, [f**n for f in base]).contains(pushed, config):
                record["zero_class"] = True
                entry["classes"].append(record)
                continue
            order = _nilpotency_order_in_uniform_powers(
                R, base, pushed, n, max(sample.fte, 1), config)
            record["order"] = order
            record["zero_class"] = False
            if order is None or order > sample.fte:
                mechanism_ok = False
                record["violating"] = True
            entry["classes"].append(record)
        mechanism.append(entry)
    if not mechanism_ok and status == "pass":
        status = "fail"
    if status == "pass" and not holds:
        status = "fail"
    return InequalityReport(
        fingerprint=fp,
        ring_label=R.label,
        max_fte=scan.max_fte,
        hsl_overall=hsl.overall,
        holds=holds,
        status=status,
        mechanism=mechanism,
        mechanism_ok=mechanism_ok,
        notes=notes,
    )


@dataclass
class Prop34Report:
    """Two-way correspondence between closure quotients and nilpotent
    classes of the limit tower for one prefix and level."""

    fingerprint: str
    prefix: list
    n: int
    e: int
    forward: list
    backward: list
    forward_ok: bool
    backward_ok: bool
    ok: bool

    def to_dict(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "prefix": self.prefix,
            "n": self.n,
            "e": self.e,
            "forward": self.forward,
            "backward": self.backward,
            "forward_ok": self.forward_ok,
            "backward_ok": self.backward_ok,
            "ok": self.ok,
        }


def prop34_check(R: QuotientRing, prefix_elements, n: int = 1, e: int = 1,
                 N: int = 8, e_max: int = 8,
                 config: GBConfig | None = None) -> Prop34Report:
    """Both directions of the closure/nilpotence correspondence.

    Forward: every generator of the Frobenius closure of (x_1^n, ..., x_t^n)
    beyond the ideal itself is killed, with order at most e, by the
    Frobenius chain into the matching power level.  Backward: every
    nilpotent witness of order at most e found in the truncated tower lies
    in the computed Frobenius closure at its level.  Both directions are
    vacuously true on rings with trivial closures and no nilpotent classes.
    """
    prefix = [R.parse(f) if isinstance(f, str) else f for f in prefix_elements]
    t = len(prefix)
    seq = make_sequence(R, prefix)
    ok_seq, bad = is_filter_regular_sequence(seq, config)
    if not ok_seq:
        raise AlgebraError(f"prefix is not filter regular at index {bad}")

    Qn = ideal(R, [f**n for f in prefix])
    closure = frobenius_closure(Qn, e_max, 2, config)
    forward: list = []
    forward_ok = True
    for g in closure.closure.groebner_basis(config):
        if Qn.contains(g, config):
            continue
        order = _nilpotency_order_in_uniform_powers(R, prefix, g, n, e_max, config)
        entry = {"gen": str(g), "order": order}
        if order is None or order > e:
            forward_ok = False
            entry["violating"] = True
        forward.append(entry)

    system = limit_system(R, seq, t, N, config)
    nil = nilpotent_part(system, e)
    backward: list = []
    backward_ok = True
    for w in nil.witnesses:
        level_ideal = ideal(R, [f**w.level for f in prefix])
        level_closure = frobenius_closure(level_ideal, e_max, 2, config)
        member = level_closure.closure.contains(R.parse(w.poly), config)
        entry = {"level": w.level, "order": w.order, "poly": w.poly,
                 "in_closure": member}
        if not member:
            backward_ok = False
            entry["violating"] = True
        backward.append(entry)

    return Prop34Report(
        fingerprint=ring_fingerprint(R),
        prefix=[str(f) for f in prefix],
        n=n,
        e=e,
        forward=forward,
        backward=backward,
        forward_ok=forward_ok,
        backward_ok=backward_ok,
        ok=forward_ok and backward_ok,
    )
