import random

import pytest
from hypothesis import given, settings, strategies as st

from galcodes.cyclotomic import TYPE_I
from galcodes.errors import DomainError
from galcodes.galois import construct_ring, generalized_frobenius
from galcodes.group_ring import (GroupRing, GroupRingElement, ambient,
                                 compose, compose_nested, conjugate,
                                 conjugate_involution,
                                 conjugate_involution_pairing,
                                 decompose_euclidean, decompose_hermitian,
                                 decompose_nested, dft, element_text,
                                 form_euclidean, form_hermitian, idft,
                                 involution, involution_pairing, parse_element,
                                 sylow_merge, sylow_split)
from galcodes.groups import AbelianGroup, sylow_decompose

Z4 = construct_ring(2, 2, 1)
Z2_GROUP = AbelianGroup((2,))


def rand_ring(p, r, s, factors):
    return GroupRing(construct_ring(p, r, s), AbelianGroup(factors))


# -- arithmetic -----------------------------------------------------------------

def test_monomial_multiplication():
    ring = rand_ring(2, 2, 1, (4,))
    g = ring.group
    for a in g.elements():
        for b in g.elements():
            assert ring.monomial(a) * ring.monomial(b) == ring.monomial(g.add(a, b))


def test_binomial_square_in_z4z2():
    ring = GroupRing(Z4, Z2_GROUP)
    x = ring.element({(0,): Z4.one(), (1,): Z4.one()})  # 1 + Y
    two = Z4.from_int(2)
    assert x * x == ring.element({(0,): two, (1,): two})


def test_one_and_zero():
    ring = rand_ring(3, 2, 1, (4,))
    rng = random.Random(7)
    for _ in range(10):
        x = ring.random_element(rng)
        assert x * ring.one() == x
        assert x * ring.zero() == ring.zero()
        assert x - x == ring.zero()


def test_scalar_multiplication():
    ring = GroupRing(Z4, Z2_GROUP)
    x = ring.element({(0,): Z4.one(), (1,): Z4.from_int(3)})
    assert Z4.from_int(2) * x == ring.element({(0,): Z4.from_int(2), (1,): Z4.from_int(2)})


def test_mixed_ring_rejected():
    a = rand_ring(2, 2, 1, (3,)).one()
    b = rand_ring(2, 2, 1, (5,)).one()
    with pytest.raises(DomainError):
        a + b


def test_shift():
    ring = GroupRing(Z4, AbelianGroup((4,)))
    x = ring.element({(0,): Z4.one(), (1,): Z4.from_int(2)})
    assert x.shift((2,)) == ring.element({(2,): Z4.one(), (3,): Z4.from_int(2)})
    assert x.shift((1,)) == x * ring.monomial((1,))


def test_from_coeff_list_matches_element_order():
    ring = GroupRing(Z4, AbelianGroup((2, 2)))
    x = ring.from_coeff_list([Z4.from_int(k) for k in (1, 2, 3, 0)])
    assert x.coefficient((0, 0)) == Z4.one()
    assert x.coefficient((0, 1)) == Z4.from_int(2)
    assert x.coefficient((1, 0)) == Z4.from_int(3)
    assert x.coefficient((1, 1)) == Z4.zero()


# -- bilinear forms -----------------------------------------------------------------

def test_euclidean_form_on_monomials():
    ring = rand_ring(2, 2, 1, (5,))
    g = ring.group
    for a in g.elements():
        for b in g.elements():
            v = form_euclidean(ring.monomial(a), ring.monomial(b))
            assert v == (Z4.one() if a == b else Z4.zero())


def test_euclidean_form_example():
    ring = GroupRing(Z4, Z2_GROUP)
    x = ring.element({(0,): Z4.one(), (1,): Z4.one()})
    assert form_euclidean(x, x) == Z4.from_int(2)


def test_hermitian_form_conjugates_second_argument():
    spec = construct_ring(2, 1, 2)
    ring = GroupRing(spec, AbelianGroup((3,)))
    xi = spec.xi
    x = ring.element({(0,): xi})
    # xi * xi^2 = 1 in GF(4)
    assert form_hermitian(x, x) == spec.one()


def test_hermitian_form_needs_even_degree():
    ring = rand_ring(2, 2, 1, (3,))
    with pytest.raises(DomainError):
        form_hermitian(ring.one(), ring.one())


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_forms_are_biadditive(data):
    ring = rand_ring(2, 2, 2, (3,))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    x, y, z = (ring.random_element(rng) for _ in range(3))
    assert form_euclidean(x + y, z) == form_euclidean(x, z) + form_euclidean(y, z)
    assert form_hermitian(x, y + z) == form_hermitian(x, y) + form_hermitian(x, z)


# -- involutions ---------------------------------------------------------------------

def test_involution_on_monomials():
    ring = rand_ring(2, 2, 1, (4,))
    g = ring.group
    for a in g.elements():
        assert involution(ring.monomial(a)) == ring.monomial(g.neg(a))
    assert involution(ring.one()) == ring.one()


def test_involution_is_a_ring_map():
    ring = rand_ring(3, 2, 1, (4,))
    rng = random.Random(3)
    for _ in range(10):
        x, y = ring.random_element(rng), ring.random_element(rng)
        assert involution(involution(x)) == x
        assert involution(x * y) == involution(x) * involution(y)
        assert involution(x + y) == involution(x) + involution(y)


def test_conjugate_involution():
    spec = construct_ring(2, 2, 2)
    ring = GroupRing(spec, AbelianGroup((3,)))
    xi = spec.xi
    x = ring.element({(1,): xi})
    assert conjugate_involution(x) == ring.element({(2,): conjugate(xi)})
    rng = random.Random(5)
    for _ in range(10):
        y = ring.random_element(rng)
        assert conjugate_involution(conjugate_involution(y)) == y


def test_pairings_match_full_ring_product():
    """The nested pairings are the P-identity coefficients of x times the
    involuted partner in the full group ring."""
    spec = construct_ring(2, 1, 2)
    g = AbelianGroup((6,))
    ring = GroupRing(spec, g)
    dec = sylow_decompose(g, 2)
    rng = random.Random(11)
    for _ in range(20):
        x, u = ring.random_element(rng), ring.random_element(rng)
        xs, us = sylow_split(x, dec), sylow_split(u, dec)
        plain = involution_pairing(xs, us)
        conj = conjugate_involution_pairing(xs, us)
        full_plain = x * involution(u)
        full_conj = x * conjugate_involution(u)
        for a in dec.coprime_part.elements():
            point = dec.join(a, dec.p_part.identity)
            assert plain.coefficient(a) == full_plain.coefficient(point)
            assert conj.coefficient(a) == full_conj.coefficient(point)


# -- Sylow re-indexing ------------------------------------------------------------------

def test_sylow_split_is_a_ring_isomorphism():
    spec = construct_ring(2, 1, 1)
    g = AbelianGroup((6,))
    ring = GroupRing(spec, g)
    dec = sylow_decompose(g, 2)
    elements = [ring.from_coeff_list([spec.from_int((k >> i) & 1) for i in range(6)])
                for k in range(64)]
    images = set()
    for x in elements:
        xs = sylow_split(x, dec)
        assert sylow_merge(xs, dec) == x
        images.add(xs)
    assert len(images) == 64
    rng = random.Random(2)
    for _ in range(40):
        x, y = ring.random_element(rng), ring.random_element(rng)
        assert sylow_split(x * y, dec) == sylow_split(x, dec) * sylow_split(y, dec)
        assert sylow_split(x + y, dec) == sylow_split(x, dec) + sylow_split(y, dec)


# -- character transform ------------------------------------------------------------------

def test_dft_of_one_is_all_ones():
    ctx = ambient(construct_ring(2, 2, 1), AbelianGroup((7,)))
    values = dft(ctx.ring.one(), ctx).values
    assert all(v == ctx.big.one() for v in values.values())


def test_dft_of_monomial_is_character_column():
    ctx = ambient(construct_ring(2, 1, 1), AbelianGroup((3,)))
    spec_values = dft(ctx.ring.monomial((1,)), ctx)
    for h in range(3):
        assert spec_values[(h,)] == ctx.zeta_pows[h]


def test_dft_turns_convolution_into_products():
    for p, r, s, factors in [(2, 2, 1, (3,)), (3, 2, 1, (4,)), (2, 1, 2, (5,)),
                             (3, 2, 2, (5,)), (2, 2, 2, (9,))]:
        ctx = ambient(construct_ring(p, r, s), AbelianGroup(factors))
        rng = random.Random(p * 100 + s)
        for _ in range(6):
            x, y = ctx.ring.random_element(rng), ctx.ring.random_element(rng)
            fx, fy, fxy = dft(x, ctx), dft(y, ctx), dft(x * y, ctx)
            for h in ctx.group.elements():
                assert fxy.values[h] == fx.values[h] * fy.values[h]


def test_dft_frobenius_coherence():
    """theta_s permutes the spectrum along h -> q*h, and the value at h is
    fixed by theta_(s*class size), pinning it into the component subring."""
    ctx = ambient(construct_ring(3, 2, 1), AbelianGroup((8,)))
    q = ctx.spec.residue_size
    rng = random.Random(4)
    for _ in range(8):
        x = ctx.ring.random_element(rng)
        values = dft(x, ctx).values
        for h in ctx.group.elements():
            moved = values[ctx.group.scale(q, h)]
            assert moved == generalized_frobenius(values[h], ctx.spec.s)
            nu = ctx.parts.class_containing(h).cardinality
            assert generalized_frobenius(values[h], ctx.spec.s * nu) == values[h]


def test_idft_round_trip():
    for p, r, s, factors in [(2, 2, 1, (7,)), (3, 2, 1, (8,)), (2, 1, 2, (5,)),
                             (2, 2, 2, (3, 3))]:
        ctx = ambient(construct_ring(p, r, s), AbelianGroup(factors))
        rng = random.Random(s * 10 + p)
        for _ in range(8):
            x = ctx.ring.random_element(rng)
            assert idft(dft(x, ctx)) == x


def test_dft_rejects_foreign_element():
    ctx = ambient(construct_ring(2, 2, 1), AbelianGroup((3,)))
    other = rand_ring(2, 2, 1, (5,))
    with pytest.raises(DomainError):
        dft(other.one(), ctx)


# -- component decomposition -----------------------------------------------------------------

DECOMP_CONFIGS = [(2, 2, 1, (7,)), (2, 2, 1, (3,)), (3, 2, 1, (8,)),
                  (2, 1, 2, (5,)), (2, 2, 2, (3,)), (3, 1, 2, (8,)),
                  (2, 2, 2, (15,)), (5, 2, 1, (4,))]


def test_decompose_one_gives_unit_components():
    for p, r, s, factors in DECOMP_CONFIGS:
        ctx = ambient(construct_ring(p, r, s), AbelianGroup(factors))
        d = decompose_euclidean(ctx.ring.one(), ctx)
        for i, v in d.singles.items():
            assert v == ctx.component_spec(ctx.parts.classes[i].cardinality).one()
        for i, (v, w) in d.pairs.items():
            one = ctx.component_spec(ctx.parts.classes[i].cardinality).one()
            assert v == one and w == one


def test_decompose_euclidean_round_trip_exhaustive():
    spec = construct_ring(2, 2, 1)
    ctx = ambient(spec, AbelianGroup((3,)))
    seen = set()
    for k in range(64):
        coeffs = [spec.from_int((k >> (2 * i)) & 3) for i in range(3)]
        x = ctx.ring.from_coeff_list(coeffs)
        d = decompose_euclidean(x, ctx)
        assert compose(d) == x
        flat = tuple(d.component_list())
        seen.add(flat)
    assert len(seen) == 64  # injective, hence bijective onto the product


def test_decompose_is_multiplicative_and_additive():
    for p, r, s, factors in DECOMP_CONFIGS:
        ctx = ambient(construct_ring(p, r, s), AbelianGroup(factors))
        rng = random.Random(p + s + len(factors))
        for _ in range(6):
            x, y = ctx.ring.random_element(rng), ctx.ring.random_element(rng)
            dx = decompose_euclidean(x, ctx)
            dy = decompose_euclidean(y, ctx)
            dxy = decompose_euclidean(x * y, ctx)
            assert dxy.singles == dx.multiply(dy).singles
            assert dxy.pairs == dx.multiply(dy).pairs
            dsum = decompose_euclidean(x + y, ctx)
            assert dsum.singles == dx.add(dy).singles
            if s % 2 == 0:
                hx = decompose_hermitian(x, ctx)
                hy = decompose_hermitian(y, ctx)
                hxy = decompose_hermitian(x * y, ctx)
                assert hxy.singles == hx.multiply(hy).singles
                assert hxy.pairs == hx.multiply(hy).pairs


def test_decompose_hermitian_round_trip():
    for p, r, s, factors in [(2, 1, 2, (5,)), (2, 2, 2, (3,)), (3, 1, 2, (8,)),
                             (2, 2, 2, (15,))]:
        ctx = ambient(construct_ring(p, r, s), AbelianGroup(factors))
        rng = random.Random(17)
        for _ in range(8):
            x = ctx.ring.random_element(rng)
            assert compose(decompose_hermitian(x, ctx)) == x


def test_decompose_hermitian_needs_even_degree():
    ctx = ambient(construct_ring(2, 2, 1), AbelianGroup((3,)))
    with pytest.raises(DomainError):
        decompose_hermitian(ctx.ring.one(), ctx)


# -- how the involutions act on components ----------------------------------------------------

def test_involution_acts_by_slot_type():
    """Support reversal becomes: identity on type-I slots, component
    conjugation on type-II slots, coordinate swap on type-III pairs."""
    for p, r, s, factors in [(2, 2, 1, (7,)), (2, 2, 1, (3,)), (3, 2, 1, (8,)),
                             (2, 1, 2, (5,)), (2, 2, 2, (15,))]:
        ctx = ambient(construct_ring(p, r, s), AbelianGroup(factors))
        rng = random.Random(p * 7 + s)
        for _ in range(8):
            x = ctx.ring.random_element(rng)
            d = decompose_euclidean(x, ctx)
            di = decompose_euclidean(involution(x), ctx)
            for i in ctx.parts.euclidean_singles:
                if ctx.parts.classes[i].euclidean_type == TYPE_I:
                    assert di.singles[i] == d.singles[i]
                else:
                    assert di.singles[i] == conjugate(d.singles[i])
            for i in d.pairs:
                assert di.pairs[i] == (d.pairs[i][1], d.pairs[i][0])


def test_conjugate_involution_acts_by_slot_type():
    """With the normalized pair layout the conjugate involution becomes
    component conjugation on type-II' slots and a plain swap on type-III'
    pairs."""
    for p, r, s, factors in [(2, 1, 2, (5,)), (2, 2, 2, (3,)), (3, 1, 2, (8,)),
                             (2, 2, 2, (15,)), (2, 1, 2, (9,))]:
        ctx = ambient(construct_ring(p, r, s), AbelianGroup(factors))
        rng = random.Random(p * 11 + len(factors))
        for _ in range(8):
            x = ctx.ring.random_element(rng)
            d = decompose_hermitian(x, ctx)
            di = decompose_hermitian(conjugate_involution(x), ctx)
            for i in ctx.parts.hermitian_singles:
                assert di.singles[i] == conjugate(d.singles[i])
            for i in d.pairs:
                assert di.pairs[i] == (d.pairs[i][1], d.pairs[i][0])


# -- nested decomposition -----------------------------------------------------------------------

def test_nested_decompose_round_trip_and_multiplicativity():
    for p, r, s, a_factors, p_factors in [(2, 2, 1, (3,), (2,)), (2, 1, 2, (5,), (2,)),
                                          (3, 2, 1, (4,), (3,)), (2, 2, 2, (3,), (4,))]:
        spec = construct_ring(p, r, s)
        ctx = ambient(spec, AbelianGroup(a_factors))
        p_group = AbelianGroup(p_factors)
        outer = GroupRing(ctx.ring, p_group)
        rng = random.Random(p + len(p_factors))

        def random_nested():
            return outer.element({b: ctx.ring.random_element(rng)
                                  for b in p_group.elements()})

        pairings = ["euclidean"] if s % 2 else ["euclidean", "hermitian"]
        for pairing in pairings:
            for _ in range(5):
                x, y = random_nested(), random_nested()
                dx = decompose_nested(x, ctx, pairing)
                assert compose_nested(dx, p_group) == x
                dxy = decompose_nested(x * y, ctx, pairing)
                prod = dx.multiply(decompose_nested(y, ctx, pairing))
                assert dxy.singles == prod.singles and dxy.pairs == prod.pairs


# -- text format ----------------------------------------------------------------------------------

def test_element_text_round_trip():
    ring = GroupRing(Z4, AbelianGroup((2, 2)))
    rng = random.Random(9)
    for _ in range(10):
        x = ring.random_element(rng)
        assert parse_element(ring, element_text(x)) == x


def test_element_text_example():
    ring = GroupRing(Z4, Z2_GROUP)
    x = ring.element({(0,): Z4.one(), (1,): Z4.from_int(2)})
    assert element_text(x) == "1;2"
    with pytest.raises(DomainError):
        parse_element(ring, "1;2;3")
