"""Groebner engine: bases, normal forms, ideal operations, quotient rings."""

import random

import pytest

from frobex.algebra import MonomialOrder, Polynomial, PolyRing, PrimeField
from frobex.groebner import (
    GBConfig,
    IdealHandle,
    ImproperIdealError,
    NotZeroDimensionalError,
    QuotientRing,
    ResourceCapExceeded,
    audit_cached_bases,
    buchberger_basis,
    colon,
    dimension,
    eliminate,
    exact_divide,
    fresh_names,
    ideal,
    ideal_sum,
    intersect,
    quotient_from_data,
    quotient_to_data,
    ring_fingerprint,
    saturation,
    spairs_reduce_to_zero,
    std_monomials,
    std_monomials_of_weighted_degree,
    vector_space_length,
)
from frobex.seeding import rng_for


def poly_ring(p, *names, grading=None):
    return PolyRing(PrimeField(p), names, MonomialOrder("grevlex"), grading)


def random_poly(rng, R, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        m = tuple(rng.randrange(max_deg + 1) for _ in range(R.nvars))
        terms[m] = rng.randrange(R.p)
    return R.poly(terms)


# --- bases ---

def test_twisted_cubic_reduced_basis():
    # classic grevlex example: (x^2 - y, x^3 - z) has reduced basis
    # {x^2 - y, x*y - z, y^2 - x*z}
    P = poly_ring(5, "x", "y", "z")
    I = ideal(P, "x^2 - y", "x^3 - z")
    gb = I.groebner_basis()
    assert {str(g) for g in gb} == {"x^2+4*y", "x*y+4*z", "y^2+4*x*z"}
    ok, pair = spairs_reduce_to_zero([g.terms for g in gb], P.p, P.order)
    assert ok and pair is None


def test_basis_is_monic_and_autoreduced():
    P = poly_ring(3, "x", "y")
    I = ideal(P, "2*x^2 + y", "2*y^2 + x*y + 1")
    gb = I.groebner_basis()
    lms = [g.leading_monomial() for g in gb]
    for g in gb:
        assert g.leading_term()[1] == 1
        for m in g.terms:
            if m == g.leading_monomial():
                continue
            assert not any(lm != g.leading_monomial() and _divides(lm, m) for lm in lms)
            assert not _divides(g.leading_monomial(), m)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def test_empty_and_zero_generators():
    P = poly_ring(2, "x", "y")
    assert ideal(P).is_zero_ideal()
    assert ideal(P, P.zero()).is_zero_ideal()
    gb, stats = buchberger_basis([], P.order, P.p)
    assert gb == [] and stats.basis_size == 0


def test_gb_stats_populated():
    P = poly_ring(5, "x", "y", "z")
    I = ideal(P, "x^2 - y", "x^3 - z")
    I.groebner_basis()
    stats = I.gb_stats
    assert stats.basis_size == 3
    assert stats.pairs_processed >= 1
    d = stats.to_dict()
    assert set(d) == {"pairs_processed", "zero_reductions", "max_degree_seen",
                      "basis_size"}
    assert "wall_seconds" in stats.to_dict(include_time=True)


def test_pair_budget_cap():
    P = poly_ring(3, "x", "y")
    I = ideal(P, "x^2 + y", "y^2 + x", config=GBConfig(max_pairs=0))
    with pytest.raises(ResourceCapExceeded) as err:
        I.groebner_basis()
    assert err.value.stats.pairs_processed >= 1


def test_degree_cap():
    P = poly_ring(3, "x", "y")
    I = ideal(P, "x^2 + y")
    with pytest.raises(ResourceCapExceeded):
        I.groebner_basis(GBConfig(max_degree=1))


def test_spair_audit_flags_incomplete_basis():
    P = poly_ring(5, "x", "y", "z")
    broken = [P.parse("x^2 - y").monic().terms, P.parse("x^3 - z").monic().terms]
    ok, pair = spairs_reduce_to_zero(broken, P.p, P.order)
    assert not ok and pair == (0, 1)


def test_audit_cached_bases_clean():
    P = poly_ring(2, "x", "y")
    ideal(P, "x^2 + x*y", "y^3").groebner_basis()
    assert audit_cached_bases() == []


# --- normal forms and membership ---

def test_normal_form_properties():
    P = poly_ring(5, "x", "y", "z")
    I = ideal(P, "x^2 - y", "x^3 - z")
    rng = rng_for(42, "gb", "nf")
    for _ in range(25):
        f, g = random_poly(rng, P), random_poly(rng, P)
        nf = I.normal_form
        assert nf(nf(f)) == nf(f)
        assert nf(f + g) == nf(nf(f) + nf(g))
        assert nf(f * g) == nf(nf(f) * nf(g))
        assert I.contains(f - nf(f))


def test_membership_of_random_combinations():
    P = poly_ring(2, "x", "y", "z")
    gens = [P.parse("x*y + z"), P.parse("y^2 + y")]
    I = ideal(P, *gens)
    rng = rng_for(42, "gb", "member")
    for _ in range(20):
        combo = P.zero()
        for g in gens:
            combo = combo + random_poly(rng, P, max_terms=3, max_deg=2) * g
        assert I.contains(combo)
    assert not I.contains("z")


def test_membership_in_quotient_ring():
    # relations take part in membership once the handle lives over a quotient
    R = QuotientRing(poly_ring(2, "x", "y"), ["x^2"])
    J = ideal(R, "y")
    assert J.contains("x^2")
    assert J.equals(ideal(R, "y + x^2"))
    assert not ideal(R.ambient, "y").contains("x^2")


def test_is_proper_and_equals():
    P = poly_ring(3, "x", "y")
    assert not ideal(P, "x", "x + 1").is_proper()
    assert ideal(P, "x + y").equals(ideal(P, "2*x + 2*y"))
    assert not ideal(P, "x").equals(ideal(P, "y"))


# --- ideal operations ---

def test_ideal_sum():
    P = poly_ring(2, "x", "y")
    assert ideal_sum(ideal(P, "x"), ideal(P, "y")).equals(ideal(P, "x", "y"))


def test_intersect_principal():
    P = poly_ring(2, "x", "y")
    assert intersect(ideal(P, "x"), ideal(P, "y")).equals(ideal(P, "x*y"))


def test_intersect_mixed():
    P = poly_ring(3, "x", "y", "z")
    got = intersect(ideal(P, "x", "y"), ideal(P, "y", "z"))
    assert got.equals(ideal(P, "y", "x*z"))


def test_colon_basics():
    P = poly_ring(2, "x", "y")
    I = ideal(P, "x^2", "x*y")
    assert colon(I, ideal(P, "x")).equals(ideal(P, "x", "y"))
    assert colon(I, ideal(P, "y")).equals(ideal(P, "x"))
    # colon by zero is the unit ideal
    assert not colon(I, ideal(P)).is_proper()


def test_colon_socle_in_quotient():
    R = QuotientRing(poly_ring(2, "x", "y"), ["x^2", "y^2"])
    soc = colon(ideal(R), ideal(R, "x", "y"))
    assert soc.equals(ideal(R, "x*y"))


def test_saturation_strips_embedded_component():
    P = poly_ring(2, "x", "y")
    m = ideal(P, "x", "y")
    sat, s = saturation(ideal(P, "x^2", "x*y"), m)
    assert sat.equals(ideal(P, "x"))
    assert s == 1
    sat2, s2 = saturation(ideal(P, "x"), m)
    assert sat2.equals(ideal(P, "x")) and s2 == 0


def test_eliminate():
    P = poly_ring(7, "x", "y", "z")
    I = ideal(P, "x - y^2", "y - z")
    got = eliminate(I, ["x", "z"])
    small = poly_ring(7, "x", "z")
    assert got.equals(ideal(small, "x - z^2"))


def test_eliminate_rejects_quotient_handles():
    R = QuotientRing(poly_ring(2, "x", "y"), ["x^2"])
    with pytest.raises(Exception):
        eliminate(ideal(R, "y"), ["x"])


def test_exact_divide():
    P = poly_ring(5, "x", "y")
    f = P.parse("x + 2*y")
    g = P.parse("x^2 + 3*x*y + y^2 + 1")
    assert exact_divide(f * g, f) == g
    with pytest.raises(Exception):
        exact_divide(P.parse("x^2 + y"), f)


# --- dimension and standard monomials ---

def test_dimension():
    P = poly_ring(2, "x", "y")
    assert dimension(ideal(P)) == 2
    assert dimension(ideal(P, "x^2", "x*y")) == 1
    assert dimension(ideal(P, "x", "y")) == 0
    P3 = poly_ring(2, "x", "y", "z")
    assert dimension(ideal(P3, "x^3 + y^3 + z^3")) == 2
    P4 = poly_ring(2, "x", "y", "u", "v")
    assert dimension(ideal(P4, "x*u", "x*v", "y*u", "y*v")) == 2
    with pytest.raises(ImproperIdealError):
        dimension(ideal(P, "x", "x + 1"))


def test_std_monomials():
    P = poly_ring(2, "x", "y")
    got = std_monomials(ideal(P, "x^2", "y^3"))
    assert got == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (1, 2)]
    assert vector_space_length(ideal(P, "x^2", "x*y", "y^2")) == 3
    assert std_monomials(ideal(P, "x", "x + 1")) == []
    with pytest.raises(NotZeroDimensionalError):
        std_monomials(ideal(P, "x^2"))


def test_std_monomials_of_weighted_degree():
    P = poly_ring(2, "x", "y")
    got = std_monomials_of_weighted_degree(ideal(P, "x^2"), 3)
    assert got == [(0, 3), (1, 2)]
    W = poly_ring(2, "x", "y", grading=(1, 2))
    got = std_monomials_of_weighted_degree(ideal(W, "x^4"), 4)
    assert got == [(0, 2), (2, 1)]


# --- quotient rings and serialization ---

def test_quotient_ring_basics():
    R = QuotientRing(poly_ring(2, "x", "y", "z"), ["x^3 + y^3 + z^3"],
                     label="cubic")
    assert R.p == 2 and R.dim == 2 and R.label == "cubic"
    assert not R.is_regular()
    assert R.nf(R.parse("x^3 + y^3 + z^3")).is_zero()
    assert len(R.maximal_ideal().own_gens) == 3
    with pytest.raises(ImproperIdealError):
        QuotientRing(poly_ring(2, "x", "y"), ["x", "x + 1"])


def test_quotient_data_roundtrip():
    R = QuotientRing(poly_ring(3, "x", "y"), ["x^2 + 2*y^2"], label="conic")
    data = quotient_to_data(R)
    assert data["characteristic"] == 3 and data["label"] == "conic"
    back = quotient_from_data(data)
    assert back == R
    assert ring_fingerprint(back) == ring_fingerprint(R)
    assert ring_fingerprint(R).startswith("GF(3)[x,y]/")


def test_quotient_data_grading_survives():
    W = PolyRing(PrimeField(2), ("x", "y"), MonomialOrder("grevlex"), (1, 2))
    R = QuotientRing(W, ["x^4 + y^2"])
    back = quotient_from_data(quotient_to_data(R))
    assert back.grading == (1, 2)
    assert back == R


def test_fresh_names_avoid_collisions():
    assert fresh_names(("t0", "x"), "t", 2) == ["t1", "t2"]
    assert fresh_names(("x", "y"), "w", 2) == ["w0", "w1"]


def test_with_ring_reattaches_generators():
    P = poly_ring(2, "x", "y")
    R = QuotientRing(P, ["x^2"])
    J = ideal(P, "y").with_ring(R)
    assert J.quotient is R
    assert J.contains("x^2")
