"""Filter regular sequences and random systems of parameters.

A sequence x_1, ..., x_t in the maximal ideal m of R = S/J is filter regular
when each x_i avoids every associated prime of (x_1, ..., x_{i-1}) except
possibly m itself.  Rather than computing associated primes, each step is
certified through the colon-saturation criterion

    ((x_1..x_{i-1}) : x_i)  is contained in  ((x_1..x_{i-1}) : m^infinity),

which says that multiples killed by x_i are m-torsion.  Over an infinite
constant field a generic linear form works at every step; over a small F_p
the candidate pool is finite, so the random search retries and reports
exhaustion honestly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraError, Polynomial
from .groebner import (
    GBConfig,
    IdealHandle,
    QuotientRing,
    colon,
    dimension,
    ideal,
    saturation,
)
from .seeding import rng_for


class SearchExhausted(AlgebraError):
    """Random search failed to find an admissible element."""


@dataclass
class FilterSequence:
    """A verified filter regular sequence inside a target ideal (usually m).

    ``verified`` holds one flag per element, set by the construction or by
    is_filter_regular_sequence.  ``seed`` records how a random search was
    derived, None for hand-picked sequences.
    """

    ring: QuotientRing
    elements: tuple[Polynomial, ...]
    target: IdealHandle
    verified: tuple[bool, ...]
    seed: int | None = None

    def __len__(self):
        return len(self.elements)

    def prefix_ideal(self, i: int) -> IdealHandle:
        """The ideal generated by the first i elements, inside the ring."""
        return ideal(self.ring, list(self.elements[:i]))

    def element_strings(self) -> list[str]:
        return [str(f) for f in self.elements]


def make_sequence(R: QuotientRing, elements, target: IdealHandle | None = None,
                  seed: int | None = None) -> FilterSequence:
    """Wrap raw elements (str or Polynomial) without verifying them."""
    if target is None:
        target = R.maximal_ideal()
    elems = tuple(R.parse(f) if isinstance(f, str) else f for f in elements)
    return FilterSequence(R, elems, target, (False,) * len(elems), seed)


def filter_regular_failure(seq: FilterSequence,
                           config: GBConfig | None = None) -> int | None:
    """Index of the first element violating the colon-saturation criterion,
    or None when the whole sequence is filter regular."""
    R = seq.ring
    for f in seq.elements:
        if not seq.target.contains(f, config):
            raise AlgebraError("sequence element outside the target ideal")
    for i, f in enumerate(seq.elements):
        prefix = seq.prefix_ideal(i)
        quotient = colon(prefix, ideal(R, [f]), config)
        saturated, _ = saturation(prefix, seq.target, config)
        if not saturated.contains_ideal(quotient, config):
            return i
    return None


def is_filter_regular_sequence(seq: FilterSequence,
                               config: GBConfig | None = None) -> tuple[bool, int | None]:
    """(True, None) when filter regular, else (False, first bad index).

    Marks the verified flags on success.
    """
    bad = filter_regular_failure(seq, config)
    if bad is None:
        seq.verified = (True,) * len(seq.elements)
        return True, None
    return False, bad


def is_system_of_parameters(R: QuotientRing, elements,
                            config: GBConfig | None = None) -> bool:
    """True when the elements lie in m, are dim(R) many, and cut the
    dimension to zero."""
    elems = [R.parse(f) if isinstance(f, str) else f for f in elements]
    if len(elems) != R.dim:
        return False
    m = R.maximal_ideal()
    if not all(m.contains(f, config) for f in elems):
        return False
    q = ideal(R, elems)
    if not q.is_proper(config):
        return False
    return dimension(q, config) == 0


def random_filter_regular_sop(R: QuotientRing, seed: int,
                              max_tries: int = 60, restarts: int = 25,
                              config: GBConfig | None = None) -> FilterSequence:
    """Random linear forms built one at a time; each new element must keep
    the prefix filter regular and drop the dimension by one.

    Over tiny fields a prefix can be a dead end (every remaining linear form
    a zerodivisor where it should not be), so after max_tries failures at
    one step the whole sequence is rebuilt from a derived seed, up to
    `restarts` times.  Returns a fully verified FilterSequence of length
    dim(R) whose ideal is a parameter ideal; raises SearchExhausted when
    every restart dead-ends.
    """
    d = R.dim
    m = R.maximal_ideal()
    variables = R.ambient.gens()
    p = R.p
    last_fail = "step 1"
    for attempt in range(restarts):
        rng = rng_for(seed, "sop", attempt)
        chosen: list[Polynomial] = []
        for step in range(d):
            prefix = ideal(R, chosen)
            saturated, _ = saturation(prefix, m, config)
            found = None
            nv = len(variables)
            for _ in range(max_tries):
                # bias toward sparse forms: downstream Frobenius eliminations
                # stay cheap, and sparse parameters are just as admissible
                size = 1 + min(rng.randrange(nv), rng.randrange(nv))
                support = rng.sample(range(nv), size)
                coeffs = [0] * nv
                for i in support:
                    coeffs[i] = rng.randrange(1, p) if p > 2 else 1
                cand = R.ambient.zero()
                for c, v in zip(coeffs, variables):
                    if c:
                        cand = cand + c * v
                extended = ideal(R, chosen + [cand])
                try:
                    if dimension(extended, config) != d - step - 1:
                        continue
                except Exception:
                    continue
                quotient = colon(prefix, ideal(R, [cand]), config)
                if not saturated.contains_ideal(quotient, config):
                    continue
                found = cand
                break
            if found is None:
                last_fail = f"step {step + 1}"
                break
            chosen.append(found)
        else:
            return FilterSequence(R, tuple(chosen), m, (True,) * d, seed)
    raise SearchExhausted(
        f"no filter regular linear system of parameters after {restarts} "
        f"restarts of {max_tries} tries (last failure at {last_fail})")
