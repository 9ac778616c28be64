"""Frobenius powers, q-th power preimages, Frobenius closure and test
exponents of ideals in prime characteristic.

The e-th Frobenius power of I = (g_1, ..., g_r) is I^[q] = (g_1^q, ..., g_r^q)
with q = p^e, raised term by term.  The closure chain is

    J_e = { x : x^q lies in I^[q] + J },

an ascending chain of ideals whose union is the Frobenius closure of I; each
J_e comes from an elimination: in S[w_1..w_n] the membership x^q in K becomes
linear algebra over the subring generated by the w_i = x_i^q, because
g(x)^q = g(x^q) over F_p.  This preimage is genuinely different from the
Frobenius root K^[1/q] (for K = (x^3), q = 2 the preimage is (x^2) while the
root is (x)), so no basis-decomposition shortcut applies.

The Frobenius test exponent of I is the least e with (closure)^[p^e] =
I^[p^e]; scanning it over sampled parameter ideals gives the empirical lower
bound for the ring-level test exponent that the rest of the package compares
against HSL numbers.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra import AlgebraError, MonomialOrder, Polynomial, frobenius_raise
from .filterreg import (
    FilterSequence,
    is_filter_regular_sequence,
    is_system_of_parameters,
    make_sequence,
    random_filter_regular_sop,
)
from .groebner import (
    GBConfig,
    IdealHandle,
    QuotientRing,
    ResourceCapExceeded,
    fresh_names,
    ideal,
    quotient_from_data,
    quotient_to_data,
    ring_fingerprint,
)
from .seeding import derive_seed


class InconsistencyError(AlgebraError):
    """An internal invariant failed (non-ascending chain, missing exponent)."""


def frobenius_power(I: IdealHandle, e: int,
                    config: GBConfig | None = None) -> IdealHandle:
    """The bracket power I^[p^e]: generators raised term by term.

    Quotient relations are carried by the handle, not raised: for I inside
    R = S/J the result denotes I^[q] + J, the correct object in R.
    """
    if e < 0:
        raise AlgebraError("Frobenius exponent must be >= 0")
    raised = [frobenius_raise(g, e) for g in I.own_gens]
    return IdealHandle(I.ring, raised, config)


def qpower_preimage(K: IdealHandle, e: int,
                    config: GBConfig | None = None) -> IdealHandle:
    """The ideal { x : x^(p^e) lies in K }, via elimination.

    Adjoin one tag variable w_i per original variable together with the
    relations w_i - x_i^q; rewriting x_i^q as w_i throughout K and
    eliminating the original variables leaves exactly the polynomials g(w)
    with g(x)^q = g(x^q) in K.  Generators of K are pre-reduced modulo the
    tag relations (splitting every exponent as q*a + r), which changes no
    ideal but keeps the elimination degrees low.
    """
    if e < 0:
        raise AlgebraError("Frobenius exponent must be >= 0")
    if e == 0:
        return IdealHandle(K.ring, K.own_gens, config)
    ring = K.ambient
    p = ring.p
    q = p**e
    n = ring.nvars
    tags = fresh_names(ring.variables, "w", n)
    ext = ring.extended(tuple(tags), MonomialOrder("block", tuple(range(n))))
    gens = []
    for g in K.generators:
        terms = {}
        for m, c in g.terms.items():
            lo = tuple(x % q for x in m)
            hi = tuple(x // q for x in m)
            mono = lo + hi
            terms[mono] = (terms.get(mono, 0) + c) % p
        gens.append(ext.poly(terms))
    zero = (0,) * n
    if K.quotient is not None:
        # freshman's dream: g^q raises termwise, so each quotient relation g
        # has g^q in the ideal already, and its rewrite is g with variables
        # renamed to tags -- a pure-tag generator that keeps the elimination
        # from rediscovering the relation's image at degree q
        for g in K.quotient.relations.own_gens:
            gens.append(ext.poly({zero + m: c for m, c in g.terms.items()}))
    for i in range(n):
        xi_q = tuple(q if k == i else 0 for k in range(n)) + zero
        wi = zero + tuple(1 if k == i else 0 for k in range(n))
        gens.append(ext.poly({wi: 1, xi_q: p - 1}))
    work = IdealHandle(ext, gens, config)
    gb = work.groebner_basis(config)
    out = []
    for g in gb:
        if all(all(m[i] == 0 for i in range(n)) for m in g.terms):
            out.append(Polynomial(ring, {m[n:]: c for m, c in g.terms.items()}))
    return IdealHandle(K.ring, out, config)


@dataclass
class ClosureResult:
    """Outcome of a Frobenius closure chain computation.

    stabilized_at is the first level e with J_e = J_{e+1} (None when the
    chain was still moving at e_max).  certified is True only when the chain
    never grew at all, in which case closure == I exactly by definition;
    otherwise the reported closure is the stabilized chain value under the
    window heuristic.
    """

    closure: IdealHandle
    stabilized_at: int | None
    window_checked: int
    certified: bool
    chain_lengths: list[int]
    stable: bool
    levels_computed: int

    def to_dict(self) -> dict:
        return {
            "closure": [str(g) for g in self.closure.groebner_basis()],
            "stabilized_at": self.stabilized_at,
            "window_checked": self.window_checked,
            "certified": self.certified,
            "chain_lengths": self.chain_lengths,
            "stable": self.stable,
            "levels_computed": self.levels_computed,
        }


def frobenius_closure(I: IdealHandle, e_max: int = 8, window: int = 2,
                      config: GBConfig | None = None) -> ClosureResult:
    """Ascending chain of q-th power preimages until `window` consecutive
    equalities are seen or e_max is reached."""
    if e_max < 1:
        raise AlgebraError("e_max must be >= 1")
    if window < 1:
        raise AlgebraError("window must be >= 1")
    start = IdealHandle(I.ring, I.own_gens, config)
    previous = start
    lengths = [len(previous.groebner_basis(config))]
    consecutive = 0
    stabilized_at: int | None = None
    levels = 0
    for e in range(1, e_max + 1):
        bracket = frobenius_power(I, e, config)
        current = qpower_preimage(bracket, e, config)
        levels = e
        if not current.contains_ideal(previous, config):
            raise InconsistencyError(f"closure chain not ascending at level {e}")
        lengths.append(len(current.groebner_basis(config)))
        if current.equals(previous, config):
            consecutive += 1
            if stabilized_at is None:
                stabilized_at = e - 1
        else:
            consecutive = 0
            stabilized_at = None
        previous = current
        if consecutive >= window:
            break
    stable = consecutive >= window
    certified = stable and previous.equals(start, config)
    return ClosureResult(previous, stabilized_at, window, certified, lengths,
                         stable, levels)


def fte_of_ideal(I: IdealHandle, closure: IdealHandle, e_max: int = 8,
                 config: GBConfig | None = None) -> int:
    """Least e with closure^[p^e] = I^[p^e], checked by membership of the
    raised closure generators.  The bracket of the larger ideal always
    contains the bracket of the smaller, so one inclusion suffices."""
    for e in range(e_max + 1):
        bracket = frobenius_power(I, e, config)
        if all(bracket.contains(frobenius_raise(g, e), config)
               for g in closure.own_gens):
            return e
    raise InconsistencyError(f"no Frobenius test exponent up to {e_max}")


def power_family_ideal(R: QuotientRing, base_elements, t: int, n: int) -> IdealHandle:
    """Parameter ideal (f_1^n, ..., f_t^n, f_{t+1}, ..., f_d) built from a
    system of parameters: the prefix-power families the scan walks."""
    elems = [R.parse(f) if isinstance(f, str) else f for f in base_elements]
    if not (1 <= t <= len(elems)):
        raise AlgebraError("prefix length out of range")
    gens = [f**n for f in elems[:t]] + list(elems[t:])
    return ideal(R, gens)


@dataclass
class ScanSample:
    kind: str
    descriptor: dict
    gens: list[str]
    fte: int | None = None
    closure_gens: list[str] | None = None
    stabilized_at: int | None = None
    certified: bool | None = None
    nontrivial: bool | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "descriptor": self.descriptor,
            "gens": self.gens,
            "fte": self.fte,
            "closure_gens": self.closure_gens,
            "stabilized_at": self.stabilized_at,
            "certified": self.certified,
            "nontrivial": self.nontrivial,
            "error": self.error,
        }


@dataclass
class FteScanReport:
    """Sampled lower bound for the ring-level Frobenius test exponent."""

    fingerprint: str
    ring_label: str
    seed: int
    n_random: int
    power_family_max: int
    base_sop: list[str]
    samples: list[ScanSample]
    max_fte: int | None
    any_failures: bool
    e_max: int
    window: int

    def to_dict(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "ring_label": self.ring_label,
            "seed": self.seed,
            "n_random": self.n_random,
            "power_family_max": self.power_family_max,
            "base_sop": self.base_sop,
            "samples": [s.to_dict() for s in self.samples],
            "max_fte": self.max_fte,
            "any_failures": self.any_failures,
            "e_max": self.e_max,
            "window": self.window,
        }


def _run_sample(R: QuotientRing, task: dict, e_max: int, window: int,
                config: GBConfig | None) -> ScanSample:
    kind = task["kind"]
    descriptor = task["descriptor"]
    try:
        if kind == "random-sop":
            fseq = random_filter_regular_sop(R, task["seed"], config=config)
            gens = list(fseq.elements)
        else:
            handle = power_family_ideal(R, task["base"], descriptor["t"],
                                        descriptor["n"])
            gens = list(handle.own_gens)
        sample = ScanSample(kind, descriptor, [str(g) for g in gens])
        I = ideal(R, gens)
        closure = frobenius_closure(I, e_max, window, config)
        fte = fte_of_ideal(I, closure.closure, e_max, config)
        sample.fte = fte
        sample.closure_gens = [str(g) for g in closure.closure.groebner_basis()]
        sample.stabilized_at = closure.stabilized_at
        sample.certified = closure.certified
        sample.nontrivial = not closure.closure.equals(I, config)
        if not closure.stable:
            sample.error = "closure chain did not stabilize within e_max"
        return sample
    except (ResourceCapExceeded, AlgebraError) as exc:
        sample = ScanSample(kind, descriptor, task.get("gens", []))
        sample.error = f"{type(exc).__name__}: {exc}"
        return sample


def _scan_worker(payload: dict) -> dict:
    """Top-level worker so process pools can pickle it."""
    R = quotient_from_data(payload["ring"])
    config = GBConfig(**payload["config"]) if payload.get("config") else None
    sample = _run_sample(R, payload["task"], payload["e_max"],
                         payload["window"], config)
    return sample.to_dict()


def parameter_base(R: QuotientRing, seed: int,
                   config: GBConfig | None = None) -> FilterSequence:
    """Base system of parameters for the power families.

    Coordinate variables are preferred when some dim(R)-subset of them is a
    filter regular system of parameters (sparse generators keep the
    elimination steps of the closure chain cheap); otherwise a seeded
    random search runs.
    """
    d = R.dim
    variables = R.ambient.gens()
    for combo in itertools.combinations(variables, d):
        if not is_system_of_parameters(R, list(combo), config):
            continue
        seq = make_sequence(R, combo)
        ok, _ = is_filter_regular_sequence(seq, config)
        if ok:
            return seq
    return random_filter_regular_sop(R, derive_seed(seed, "family-base"),
                                     config=config)


def fte_scan(R: QuotientRing, n_random: int = 5, power_family_max: int = 3,
             seed: int = 42, e_max: int = 8, window: int = 2, jobs: int = 1,
             config: GBConfig | None = None) -> FteScanReport:
    """Closure and test exponent for a deterministic batch of parameter
    ideals: n_random random filter regular systems of parameters plus the
    prefix-power families of one base system (see parameter_base).

    Per-sample failures (resource caps, exhausted searches) are recorded on
    the sample and the scan continues.  Requires dim(R) >= 1.
    """
    if R.dim < 1:
        raise AlgebraError("scan needs a ring of positive dimension")
    base = parameter_base(R, seed, config)
    base_strs = base.element_strings()
    tasks: list[dict] = []
    for k in range(n_random):
        tasks.append({
            "kind": "random-sop",
            "descriptor": {"index": k},
            "seed": derive_seed(seed, "random-sop", k),
        })
    for t in range(1, R.dim + 1):
        for n in range(1, power_family_max + 1):
            if n == 1 and t > 1:
                continue  # all t coincide with the base ideal at n = 1
            tasks.append({
                "kind": "power-family",
                "descriptor": {"t": t, "n": n},
                "base": base_strs,
            })
    if jobs > 1 and len(tasks) > 1:
        ring_data = quotient_to_data(R)
        payloads = [{
            "ring": ring_data,
            "task": task,
            "e_max": e_max,
            "window": window,
            "config": {"max_pairs": config.max_pairs, "max_degree": config.max_degree}
                      if config else None,
        } for task in tasks]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            dicts = list(pool.map(_scan_worker, payloads))
        samples = [ScanSample(**d) for d in dicts]
    else:
        samples = [_run_sample(R, task, e_max, window, config) for task in tasks]
    good = [s.fte for s in samples if s.fte is not None and s.error is None]
    return FteScanReport(
        fingerprint=ring_fingerprint(R),
        ring_label=R.label,
        seed=seed,
        n_random=n_random,
        power_family_max=power_family_max,
        base_sop=base_strs,
        samples=samples,
        max_fte=max(good) if good else None,
        any_failures=any(s.error is not None for s in samples),
        e_max=e_max,
        window=window,
    )
