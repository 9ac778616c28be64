"""Buchberger engine and ideal arithmetic over F_p.

The engine uses sugar-strategy pair selection with the coprimality and chain
criteria, full normal-form reduction, and produces the reduced (monic,
auto-reduced, sorted) Groebner basis, which is the canonical form behind
ideal equality tests everywhere else.  Colon, saturation, intersection and
elimination are built on tag-variable eliminations.  Resource caps turn
runaway computations into explicit errors instead of hangs.

Ideals are IdealHandle objects: generator lists over an ambient polynomial
ring, optionally attached to a QuotientRing whose defining relations are
appended to every Groebner computation.
"""

from __future__ import annotations

import heapq
import itertools
import time
import weakref
from dataclasses import dataclass, field

from .algebra import (
    AlgebraError,
    Mono,
    MonomialOrder,
    PolyRing,
    Polynomial,
    RingMismatchError,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_weighted_degree,
    monomials_of_weighted_degree,
    parse_poly,
)


class ResourceCapExceeded(AlgebraError):
    """A Groebner run hit the pair budget or the degree cap."""

    def __init__(self, reason: str, stats: "GBStats"):
        super().__init__(reason)
        self.reason = reason
        self.stats = stats


class ImproperIdealError(AlgebraError):
    """Operation needs a proper ideal but received the unit ideal."""


class NotZeroDimensionalError(AlgebraError):
    """Standard monomial enumeration needs a zero-dimensional ideal."""


@dataclass(frozen=True)
class GBConfig:
    """Resource limits for a single Buchberger run."""

    max_pairs: int = 50_000
    max_degree: int = 120


DEFAULT_GB_CONFIG = GBConfig()


@dataclass
class GBStats:
    pairs_processed: int = 0
    zero_reductions: int = 0
    max_degree_seen: int = 0
    wall_seconds: float = 0.0
    basis_size: int = 0

    def to_dict(self, include_time: bool = False) -> dict:
        out = {
            "pairs_processed": self.pairs_processed,
            "zero_reductions": self.zero_reductions,
            "max_degree_seen": self.max_degree_seen,
            "basis_size": self.basis_size,
        }
        if include_time:
            out["wall_seconds"] = self.wall_seconds
        return out


# ---------------------------------------------------------------------------
# low-level reduction on raw term dicts


def _terms_degree(terms: dict) -> int:
    if not terms:
        return -1
    return max(mono_degree(m) for m in terms)


def _nf_terms(fterms: dict, reducers: list, p: int, order: MonomialOrder,
              track: bool = False):
    """Full normal form of a term dict against reducers [(lm, terms), ...].

    Every reducer must be monic with leading monomial lm.  Returns
    (remainder, quotients) where quotients is None unless track is set; with
    tracking, input == sum(quotients[i] * reducers[i]) + remainder.
    """
    work = dict(fterms)
    remainder: dict[Mono, int] = {}
    quotients = [dict() for _ in reducers] if track else None
    key = order.key
    while work:
        mono = max(work, key=key)
        coeff = work.pop(mono)
        reduced = False
        for idx, (lm, gterms) in enumerate(reducers):
            if mono_divides(lm, mono):
                shift = mono_div(mono, lm)
                for gm, gc in gterms.items():
                    if gm == lm:
                        continue
                    t = mono_mul(gm, shift)
                    v = (work.get(t, 0) - coeff * gc) % p
                    if v:
                        work[t] = v
                    elif t in work:
                        del work[t]
                if track:
                    q = quotients[idx]
                    q[shift] = (q.get(shift, 0) + coeff) % p
                reduced = True
                break
        if not reduced:
            remainder[mono] = coeff
    return remainder, quotients


def _monic_terms(terms: dict, p: int, order: MonomialOrder) -> tuple[Mono, dict]:
    lm = max(terms, key=order.key)
    c = terms[lm]
    if c != 1:
        inv = pow(c, -1, p)
        terms = {m: (v * inv) % p for m, v in terms.items()}
    return lm, terms


def _spoly_terms(lm_i: Mono, f_i: dict, lm_j: Mono, f_j: dict, p: int) -> dict:
    lcm = mono_lcm(lm_i, lm_j)
    si = mono_div(lcm, lm_i)
    sj = mono_div(lcm, lm_j)
    out: dict[Mono, int] = {}
    for m, c in f_i.items():
        out[mono_mul(m, si)] = c
    for m, c in f_j.items():
        t = mono_mul(m, sj)
        v = (out.get(t, 0) - c) % p
        if v:
            out[t] = v
        elif t in out:
            del out[t]
    return out


def buchberger_basis(polys, order: MonomialOrder, p: int,
                     config: GBConfig = DEFAULT_GB_CONFIG):
    """Reduced Groebner basis of the given polynomials (as term dicts or
    Polynomial objects).  Returns (list of monic term dicts sorted by leading
    monomial, GBStats).  Raises ResourceCapExceeded when a cap trips.
    """
    t0 = time.perf_counter()
    stats = GBStats()

    basis: list[dict] = []
    lms: list[Mono] = []
    sugars: list[int] = []
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def cap_degree(terms: dict):
        d = _terms_degree(terms)
        if d > stats.max_degree_seen:
            stats.max_degree_seen = d
        if d > config.max_degree:
            stats.wall_seconds = time.perf_counter() - t0
            raise ResourceCapExceeded(
                f"degree cap exceeded: {d} > {config.max_degree}", stats)

    def push_pairs(j: int):
        for i in range(j):
            lcm = mono_lcm(lms[i], lms[j])
            sugar = mono_degree(lcm) + max(sugars[i] - mono_degree(lms[i]),
                                           sugars[j] - mono_degree(lms[j]))
            pending.add((i, j))
            heapq.heappush(heap, (sugar, order.key(lcm), i, j))

    def add_element(terms: dict, sugar: int):
        cap_degree(terms)
        lm, monic = _monic_terms(terms, p, order)
        basis.append(monic)
        lms.append(lm)
        sugars.append(sugar)
        push_pairs(len(basis) - 1)

    for f in polys:
        terms = f.terms if isinstance(f, Polynomial) else f
        if not terms:
            continue
        cap_degree(terms)
        rem, _ = _nf_terms(terms, list(zip(lms, basis)), p, order)
        if rem:
            add_element(rem, _terms_degree(terms))

    while pending:
        sugar, lcm_key, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        stats.pairs_processed += 1
        if stats.pairs_processed > config.max_pairs:
            stats.wall_seconds = time.perf_counter() - t0
            raise ResourceCapExceeded(
                f"pair budget exhausted: {config.max_pairs}", stats)
        lcm = mono_lcm(lms[i], lms[j])
        # coprimality criterion: disjoint leading monomials reduce to zero
        if lcm == mono_mul(lms[i], lms[j]):
            continue
        # chain criterion: a third element dividing the lcm whose pairs with
        # i and j were both already handled makes this pair redundant
        redundant = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if not mono_divides(lms[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                redundant = True
                break
        if redundant:
            continue
        s = _spoly_terms(lms[i], basis[i], lms[j], basis[j], p)
        if not s:
            stats.zero_reductions += 1
            continue
        cap_degree(s)
        rem, _ = _nf_terms(s, list(zip(lms, basis)), p, order)
        if not rem:
            stats.zero_reductions += 1
            continue
        add_element(rem, sugar)

    reduced = _reduce_basis(basis, lms, p, order)
    stats.wall_seconds = time.perf_counter() - t0
    stats.basis_size = len(reduced)
    return reduced, stats


def _reduce_basis(basis: list[dict], lms: list[Mono], p: int,
                  order: MonomialOrder) -> list[dict]:
    """Minimalize by leading-monomial divisibility, then tail-reduce; the
    result is the reduced Groebner basis, unique for the order."""
    keep: list[int] = []
    for i, lm in enumerate(lms):
        dominated = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if mono_divides(other, lm) and (other != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    chosen = [(lms[i], basis[i]) for i in keep]
    chosen.sort(key=lambda pair: order.key(pair[0]))
    for idx, (lm, terms) in enumerate(chosen):
        others = [chosen[k] for k in range(len(chosen)) if k != idx]
        rem, _ = _nf_terms(terms, others, p, order)
        _, monic = _monic_terms(rem, p, order)
        chosen[idx] = (lm, monic)
    return [terms for _, terms in chosen]


def spairs_reduce_to_zero(gb_terms: list[dict], p: int,
                          order: MonomialOrder) -> tuple[bool, tuple[int, int] | None]:
    """Buchberger criterion audit: every S-polynomial of the basis must have
    normal form zero.  Returns (ok, first offending pair)."""
    lms = [max(t, key=order.key) for t in gb_terms]
    reducers = list(zip(lms, gb_terms))
    for i in range(len(gb_terms)):
        for j in range(i + 1, len(gb_terms)):
            s = _spoly_terms(lms[i], gb_terms[i], lms[j], gb_terms[j], p)
            rem, _ = _nf_terms(s, reducers, p, order)
            if rem:
                return False, (i, j)
    return True, None


# ---------------------------------------------------------------------------
# ideal handles and quotient rings

_GB_REGISTRY: "weakref.WeakSet[IdealHandle]" = weakref.WeakSet()


class IdealHandle:
    """An ideal given by generators over an ambient polynomial ring.

    When ``ring`` is a QuotientRing R = S/J the handle denotes the preimage
    ideal (own generators) + J in the ambient S; the quotient's relations are
    appended automatically in every Groebner computation, so membership and
    equality are those of the quotient ring.  The reduced basis is computed
    once and cached.
    """

    def __init__(self, ring, gens=(), config: GBConfig | None = None):
        if isinstance(ring, QuotientRing):
            self._quotient: QuotientRing | None = ring
            self._ambient = ring.ambient
        elif isinstance(ring, PolyRing):
            self._quotient = None
            self._ambient = ring
        else:
            raise AlgebraError(f"not a ring: {ring!r}")
        own: list[Polynomial] = []
        for g in gens:
            if isinstance(g, str):
                g = parse_poly(self._ambient, g)
            if not isinstance(g, Polynomial):
                raise AlgebraError(f"not a polynomial: {g!r}")
            if g.ring != self._ambient:
                raise RingMismatchError("generator from a different ring")
            if g:
                own.append(g)
        self.own_gens: tuple[Polynomial, ...] = tuple(own)
        self._config = config
        self._gb: tuple[Polynomial, ...] | None = None
        self._stats: GBStats | None = None

    @property
    def ring(self):
        return self._quotient if self._quotient is not None else self._ambient

    @property
    def ambient(self) -> PolyRing:
        return self._ambient

    @property
    def quotient(self):
        return self._quotient

    @property
    def generators(self) -> tuple[Polynomial, ...]:
        """Own generators plus the quotient relations, in the ambient ring."""
        if self._quotient is None:
            return self.own_gens
        return self.own_gens + self._quotient.relations.own_gens

    def groebner_basis(self, config: GBConfig | None = None) -> tuple[Polynomial, ...]:
        if self._gb is None:
            cfg = config or self._config or DEFAULT_GB_CONFIG
            terms, stats = buchberger_basis(self.generators, self._ambient.order,
                                            self._ambient.p, cfg)
            self._gb = tuple(Polynomial(self._ambient, t) for t in terms)
            self._stats = stats
            _GB_REGISTRY.add(self)
        return self._gb

    @property
    def gb_stats(self) -> GBStats | None:
        return self._stats

    def normal_form(self, f, config: GBConfig | None = None) -> Polynomial:
        if isinstance(f, str):
            f = parse_poly(self._ambient, f)
        if f.ring != self._ambient:
            raise RingMismatchError("polynomial from a different ring")
        gb = self.groebner_basis(config)
        reducers = [(g.leading_monomial(), g.terms) for g in gb]
        rem, _ = _nf_terms(f.terms, reducers, self._ambient.p, self._ambient.order)
        return Polynomial(self._ambient, rem)

    def contains(self, f, config: GBConfig | None = None) -> bool:
        return self.normal_form(f, config).is_zero()

    def contains_ideal(self, other: "IdealHandle", config: GBConfig | None = None) -> bool:
        return all(self.contains(g, config) for g in other.generators)

    def is_proper(self, config: GBConfig | None = None) -> bool:
        gb = self.groebner_basis(config)
        return not any(mono_degree(g.leading_monomial()) == 0 for g in gb)

    def is_zero_ideal(self, config: GBConfig | None = None) -> bool:
        return not self.groebner_basis(config)

    def equals(self, other: "IdealHandle", config: GBConfig | None = None) -> bool:
        if self._ambient != other._ambient:
            raise RingMismatchError("ideals over different ambient rings")
        return self.groebner_basis(config) == other.groebner_basis(config)

    def with_ring(self, ring) -> "IdealHandle":
        """Same own generators, reattached to another (compatible) ring."""
        return IdealHandle(ring, self.own_gens, self._config)

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.own_gens) or "0"
        return f"Ideal({inside})"


class QuotientRing:
    """R = S/J for a polynomial ring S and proper ideal J (possibly zero).

    The maximal ideal is always the image of (all variables); rings here are
    graded-local by convention.  Krull dimension is computed at construction.
    """

    def __init__(self, ambient: PolyRing, relations=(), label: str = "",
                 local: bool = True, config: GBConfig | None = None):
        self.ambient = ambient
        self.relations = IdealHandle(ambient, relations, config)
        if not self.relations.is_proper(config):
            raise ImproperIdealError("relations generate the unit ideal")
        self.label = label
        self.local = local
        self.dim = dimension(self.relations, config)

    @property
    def p(self) -> int:
        return self.ambient.p

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ambient.variables

    @property
    def grading(self):
        return self.ambient.grading

    def maximal_ideal(self) -> IdealHandle:
        return IdealHandle(self, self.ambient.gens())

    def zero_ideal(self) -> IdealHandle:
        return IdealHandle(self, ())

    def parse(self, text: str) -> Polynomial:
        return parse_poly(self.ambient, text)

    def nf(self, f) -> Polynomial:
        """Canonical representative of f modulo the relations."""
        return self.relations.normal_form(f)

    def is_regular(self) -> bool:
        return self.relations.is_zero_ideal()

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return (self.ambient == other.ambient
                and self.relations.groebner_basis() == other.relations.groebner_basis())

    def __hash__(self):
        return hash((self.ambient, self.relations.groebner_basis()))

    def __repr__(self):
        rel = ", ".join(str(g) for g in self.relations.own_gens)
        base = f"GF({self.p})[{', '.join(self.variables)}]"
        return f"{base}/({rel})" if rel else base


def ideal(ring, *gens, config: GBConfig | None = None) -> IdealHandle:
    """Convenience constructor; generators may be Polynomial or str."""
    if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
        gens = tuple(gens[0])
    return IdealHandle(ring, gens, config)


def normal_form(f, I: IdealHandle, config: GBConfig | None = None) -> Polynomial:
    return I.normal_form(f, config)


def is_member(f, I: IdealHandle, config: GBConfig | None = None) -> bool:
    return I.contains(f, config)


def ideal_equal(I: IdealHandle, K: IdealHandle, config: GBConfig | None = None) -> bool:
    return I.equals(K, config)


def ideal_sum(I: IdealHandle, K: IdealHandle) -> IdealHandle:
    if I.ambient != K.ambient:
        raise RingMismatchError("ideals over different ambient rings")
    return IdealHandle(I.ring, I.own_gens + K.own_gens)


def ring_fingerprint(R: QuotientRing) -> str:
    rel = ",".join(str(g) for g in R.relations.groebner_basis())
    return f"GF({R.p})[{','.join(R.variables)}]/({rel})"


# ---------------------------------------------------------------------------
# elimination-based operations


def fresh_names(existing, base: str, count: int) -> list[str]:
    taken = set(existing)
    out = []
    i = 0
    while len(out) < count:
        name = f"{base}{i}"
        if name not in taken:
            out.append(name)
            taken.add(name)
        i += 1
    return out


def _append_tag(terms: dict, tag_exp: int) -> dict:
    return {m + (tag_exp,): c for m, c in terms.items()}


def eliminate(I: IdealHandle, keep, config: GBConfig | None = None) -> IdealHandle:
    """Intersection of I with the subring on the kept variables.

    Runs a block-order Groebner computation eliminating the other variables;
    the handle must live over a bare polynomial ring (lift quotient ideals to
    the ambient ring first).
    """
    if I.quotient is not None:
        raise AlgebraError("eliminate expects an ideal over a bare polynomial ring")
    ring = I.ambient
    keep_idx = sorted(ring.variables.index(v) if isinstance(v, str) else int(v)
                      for v in keep)
    if len(set(keep_idx)) != len(keep_idx):
        raise AlgebraError("duplicate kept variables")
    elim_idx = tuple(i for i in range(ring.nvars) if i not in keep_idx)
    if not elim_idx:
        return IdealHandle(ring, I.own_gens, config)
    blocked = ring.with_order(MonomialOrder("block", elim_idx))
    work = IdealHandle(blocked, [Polynomial(blocked, g.terms) for g in I.own_gens],
                       config)
    gb = work.groebner_basis(config)
    small_vars = tuple(ring.variables[i] for i in keep_idx)
    small_grading = None
    if ring.grading is not None:
        small_grading = tuple(ring.grading[i] for i in keep_idx)
    small = PolyRing(ring.field, small_vars, MonomialOrder("grevlex"), small_grading)
    out = []
    for g in gb:
        if all(all(m[i] == 0 for i in elim_idx) for m in g.terms):
            out.append(Polynomial(small, {tuple(m[i] for i in keep_idx): c
                                          for m, c in g.terms.items()}))
    return IdealHandle(small, out, config)


def intersect(I: IdealHandle, K: IdealHandle,
              config: GBConfig | None = None) -> IdealHandle:
    """I cap K via the tag construction t*I + (1-t)*K, eliminating t."""
    if I.ambient != K.ambient:
        raise RingMismatchError("ideals over different ambient rings")
    ring = I.ambient
    tag = fresh_names(ring.variables, "t", 1)
    n = ring.nvars
    tagged = ring.extended(tuple(tag), MonomialOrder("block", (n,)))
    gens = []
    for g in I.generators:
        gens.append(Polynomial(tagged, _append_tag(g.terms, 1)))
    for g in K.generators:
        lifted = _append_tag(g.terms, 0)
        minus_t = _append_tag(g.terms, 1)
        p = ring.p
        combined = dict(lifted)
        for m, c in minus_t.items():
            v = (combined.get(m, 0) - c) % p
            if v:
                combined[m] = v
            elif m in combined:
                del combined[m]
        gens.append(Polynomial(tagged, combined))
    work = IdealHandle(tagged, gens, config)
    gb = work.groebner_basis(config)
    out = []
    for g in gb:
        if all(m[n] == 0 for m in g.terms):
            out.append(Polynomial(ring, {m[:n]: c for m, c in g.terms.items()}))
    home = I.ring if (I.quotient is not None and I.quotient == K.quotient) else ring
    return IdealHandle(home, out, config)


def exact_divide(g: Polynomial, f: Polynomial,
                 config: GBConfig | None = None) -> Polynomial:
    """The quotient g/f when f divides g exactly; raises otherwise."""
    if g.ring != f.ring:
        raise RingMismatchError("polynomials from different rings")
    if f.is_zero():
        raise AlgebraError("division by zero polynomial")
    ring = g.ring
    lm, c = f.leading_term()
    monic = f.monic()
    rem, quots = _nf_terms(g.terms, [(lm, monic.terms)], ring.p, ring.order,
                           track=True)
    if rem:
        raise AlgebraError("not an exact polynomial division")
    inv = ring.field.inv(c)
    q = {m: (v * inv) % ring.p for m, v in quots[0].items()}
    return Polynomial(ring, q)


def colon(I: IdealHandle, K: IdealHandle,
          config: GBConfig | None = None) -> IdealHandle:
    """The colon ideal (I : K) = {r : r*K inside I}, over the same ring."""
    if I.ambient != K.ambient:
        raise RingMismatchError("ideals over different ambient rings")
    ring = I.ambient
    divisors = [g for g in K.own_gens if g]
    if not divisors:
        # (I : 0) is the whole ring
        return IdealHandle(I.ring, [ring.one()], config)
    result: IdealHandle | None = None
    for f in divisors:
        principal = IdealHandle(ring, [f], config)
        inter = intersect(IdealHandle(ring, I.generators, config), principal, config)
        quotient_gens = [exact_divide(h, f, config) for h in inter.own_gens]
        piece = IdealHandle(I.ring, quotient_gens, config)
        if result is None:
            result = piece
        else:
            result = intersect(result, piece, config)
            result = IdealHandle(I.ring, result.own_gens, config)
    return result


def saturation(I: IdealHandle, K: IdealHandle,
               config: GBConfig | None = None,
               max_steps: int = 200) -> tuple[IdealHandle, int]:
    """Stable colon (I : K^infinity) along with the stabilization exponent s,
    the least s with (I : K^s) = (I : K^(s+1))."""
    current = I
    for s in range(max_steps):
        nxt = colon(current, K, config)
        if nxt.equals(current, config):
            return current, s
        current = nxt
    raise AlgebraError(f"saturation did not stabilize within {max_steps} steps")


def dimension(I: IdealHandle, config: GBConfig | None = None) -> int:
    """Krull dimension of ambient/(I), computed from the initial ideal as the
    largest set of variables meeting no leading-monomial support."""
    gb = I.groebner_basis(config)
    if any(mono_degree(g.leading_monomial()) == 0 for g in gb):
        raise ImproperIdealError("dimension of the zero ring")
    supports = [frozenset(i for i, e in enumerate(g.leading_monomial()) if e)
                for g in gb]
    n = I.ambient.nvars
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            s = set(subset)
            if not any(supp <= s for supp in supports):
                return size
    return 0


def std_monomials(I: IdealHandle, config: GBConfig | None = None) -> list[Mono]:
    """Monomials outside the initial ideal: a vector space basis of
    ambient/I.  Requires I zero-dimensional (finite staircase)."""
    gb = I.groebner_basis(config)
    if any(mono_degree(g.leading_monomial()) == 0 for g in gb):
        return []
    n = I.ambient.nvars
    lms = [g.leading_monomial() for g in gb]
    bounds = [None] * n
    for lm in lms:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    if any(b is None for b in bounds):
        raise NotZeroDimensionalError(
            "no pure power of some variable in the initial ideal")
    out = []
    for mono in itertools.product(*(range(b) for b in bounds)):
        if not any(mono_divides(lm, mono) for lm in lms):
            out.append(mono)
    key = I.ambient.order.key
    out.sort(key=lambda m: (mono_degree(m), key(m)))
    return out


def std_monomials_of_weighted_degree(I: IdealHandle, degree: int,
                                     config: GBConfig | None = None) -> list[Mono]:
    """Standard monomials of the given weighted degree (any dimension)."""
    gb = I.groebner_basis(config)
    lms = [g.leading_monomial() for g in gb]
    ring = I.ambient
    cands = monomials_of_weighted_degree(ring.nvars, degree, ring.weights)
    key = ring.order.key
    out = [m for m in cands if not any(mono_divides(lm, m) for lm in lms)]
    out.sort(key=key)
    return out


def vector_space_length(I: IdealHandle, config: GBConfig | None = None) -> int:
    """dim_k ambient/I for a zero-dimensional ideal."""
    return len(std_monomials(I, config))


def audit_cached_bases() -> list[str]:
    """Post-hoc S-pair audit over every live handle whose basis was computed.

    Returns human-readable failure descriptions; an empty list means every
    cached reduced basis satisfies the Buchberger criterion.
    """
    failures = []
    for handle in list(_GB_REGISTRY):
        gb = handle._gb
        if not gb:
            continue
        terms = [g.terms for g in gb]
        ok, pair = spairs_reduce_to_zero(terms, handle.ambient.p,
                                         handle.ambient.order)
        if not ok:
            failures.append(f"S-pair {pair} of {handle!r} does not reduce to zero")
    return failures


# ---------------------------------------------------------------------------
# (de)serialization of ring descriptions


def quotient_to_data(R: QuotientRing) -> dict:
    data = {
        "characteristic": R.p,
        "variables": list(R.variables),
        "relations": [str(g) for g in R.relations.own_gens],
        "label": R.label,
    }
    if R.grading is not None:
        data["grading"] = list(R.grading)
    return data


def quotient_from_data(data: dict, config: GBConfig | None = None) -> QuotientRing:
    from .algebra import PrimeField

    field = PrimeField(int(data["characteristic"]))
    grading = data.get("grading")
    ambient = PolyRing(field, data["variables"], MonomialOrder("grevlex"),
                       tuple(grading) if grading else None)
    return QuotientRing(ambient, list(data.get("relations", [])),
                        label=data.get("label", ""), config=config)
