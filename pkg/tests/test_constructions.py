import pytest

from braidkit import catalog
from braidkit.constructions import (
    BiproductInput,
    InducedAction,
    TransmutedAlgebra,
    adjoint_coaction,
    biproduct,
    bosonise,
    braided_smash_coproduct,
    transmuted_product,
)
from braidkit.deffile import parse_element
from braidkit.errors import CrossedModuleViolation
from braidkit.ncpoly import NcElement
from braidkit.rewrite import Presentation
from braidkit.scalar import ONE, Q, QINV, Scalar
from braidkit.structuremap import BraidedHopf, ComoduleAlgebra

qp = Scalar.q_power


# -- adjoint coaction --------------------------------------------------------------

def test_adjoint_coaction_of_unit(glq2):
    p = glq2.presentation
    assert adjoint_coaction(glq2, p.one()) == NcElement.unit((p, p))


def test_adjoint_coaction_of_central_grouplike(glq2):
    p = glq2.presentation
    got = adjoint_coaction(glq2, p.gen("C"))
    assert got == NcElement.from_word((p, p), (("C",), ()))


def test_adjoint_coaction_of_alpha_hand_expansion(glq2):
    # frozen from the Sweedler expansion sum t_kl (x) S(t_1k) t_l1, normalized
    p = glq2.presentation
    got = adjoint_coaction(glq2, p.gen("alpha"))
    want = parse_element(
        "q^2 * alpha (x) alpha*delta*Cinv - (q^2 - 1) * alpha (x) 1"
        " + q * beta (x) gamma*delta*Cinv"
        " - q^2 * gamma (x) alpha*beta*Cinv"
        " - q^2 * delta (x) alpha*delta*Cinv + q^2 * delta (x) 1",
        (p, p),
    )
    assert got == want


def test_adjoint_coaction_is_a_coaction(glq2):
    p = glq2.presentation
    for g in p.gens:
        co = adjoint_coaction(glq2, p.gen(g))
        left = co.map_slot(0, lambda w: _adjoint_word(glq2, w), (p, p))
        right = co.map_slot(1, glq2.coproduct_word, (p, p))
        assert left == right, g


def _adjoint_word(H, word):
    return adjoint_coaction(H, NcElement.from_word((H.presentation,), (word,)))


def test_adjoint_coaction_kills_relations(glq2):
    p = glq2.presentation
    for relation in p.relations:
        image = adjoint_coaction(glq2, p.normal_form(relation))
        assert image.is_zero()


# -- transmuted product --------------------------------------------------------------

def test_transmuted_product_unit(glq2):
    p = glq2.presentation
    for g in p.gens:
        assert transmuted_product(glq2, p.one(), p.gen(g)) == p.gen(g)
        assert transmuted_product(glq2, p.gen(g), p.one()) == p.gen(g)


BMAT_RELATIONS = (
    ("ba = q^2 ab", ("b", "a"), ("a", "b"), "q^2"),
    ("ca = q^-2 ac", ("c", "a"), ("a", "c"), "q^-2"),
    ("da = ad", ("d", "a"), ("a", "d"), "1"),
)


def _tp(glq2, letter_pair):
    p = glq2.presentation
    m = catalog.BGLQ2_TO_GLQ2
    return transmuted_product(glq2, p.gen(m[letter_pair[0]]), p.gen(m[letter_pair[1]]))


def test_transmuted_commutation_relations(glq2):
    from braidkit.deffile import parse_scalar

    p = glq2.presentation
    for label, left, right, coeff in BMAT_RELATIONS:
        residual = _tp(glq2, left) - parse_scalar(coeff) * _tp(glq2, right)
        assert p.normal_form(residual).is_zero(), label


def test_transmuted_db_relation(glq2):
    # db = bd + (1 - q^-2) ab under the letter identification
    p = glq2.presentation
    residual = _tp(glq2, ("d", "b")) - _tp(glq2, ("b", "d")) \
        - (ONE - qp(-2)) * _tp(glq2, ("a", "b"))
    assert p.normal_form(residual).is_zero()


def test_transmuted_determinant_relation(glq2):
    p = glq2.presentation
    residual = _tp(glq2, ("a", "d")) - qp(2) * _tp(glq2, ("c", "b")) - p.gen("C")
    assert p.normal_form(residual).is_zero()


def test_transmuted_product_associative_on_generators(glq2):
    p = glq2.presentation
    gens = [p.gen(g) for g in p.gens]
    for u in gens:
        for v in gens:
            uv = transmuted_product(glq2, u, v)
            for w in gens:
                left = transmuted_product(glq2, uv, w)
                right = transmuted_product(glq2, u, transmuted_product(glq2, v, w))
                assert left == right


# -- bosonisation ----------------------------------------------------------------------

@pytest.fixture(scope="module")
def bos(glq2, aq2):
    return bosonise(glq2, aq2)


def test_bosonise_product_example(bos, glq2, aq2):
    # (1 (x) x)(alpha (x) 1) = sum alpha1 (x) x <| alpha2 = q^2 alpha (x) x
    x = aq2.presentation.gen("x").embed(bos.signature, (1,))
    al = glq2.presentation.gen("alpha").embed(bos.signature, (0,))
    assert bos.product(x, al) == qp(2) * parse_element("alpha (x) x", bos.signature)


def test_bosonise_hopf_part_embeds(bos, glq2):
    h = glq2.presentation.gen("alpha").embed(bos.signature, (0,))
    g = glq2.presentation.gen("delta").embed(bos.signature, (0,))
    assert bos.product(h, g) == parse_element("alpha*delta (x) 1", bos.signature)


def test_bosonise_coproduct_of_plane_generator(bos, aq2):
    x = aq2.presentation.gen("x").embed(bos.signature, (1,))
    got = bos.coproduct(x)
    sig4 = bos.signature + bos.signature
    want = parse_element(
        "1 (x) x (x) alpha (x) 1 + 1 (x) y (x) gamma (x) 1 + 1 (x) 1 (x) 1 (x) x",
        sig4,
    )
    assert got == want


def test_bosonise_coproduct_multiplicative(bos, glq2, aq2):
    gens = [glq2.presentation.gen(g).embed(bos.signature, (0,))
            for g in glq2.presentation.gens]
    gens += [aq2.presentation.gen(g).embed(bos.signature, (1,))
             for g in aq2.presentation.gens]
    for u in gens:
        for v in gens:
            lhs = bos.coproduct(bos.product(u, v))
            rhs = _square_product(bos, bos.coproduct(u), bos.coproduct(v))
            assert lhs == rhs


def _square_product(bundle, u4, v4):
    sig4 = bundle.signature + bundle.signature
    total = NcElement.zero(sig4)
    for w1, c1 in u4.terms.items():
        for w2, c2 in v4.terms.items():
            left = bundle.product(
                NcElement(bundle.signature, {(w1[0], w1[1]): ONE}),
                NcElement(bundle.signature, {(w2[0], w2[1]): ONE}),
            )
            right = bundle.product(
                NcElement(bundle.signature, {(w1[2], w1[3]): ONE}),
                NcElement(bundle.signature, {(w2[2], w2[3]): ONE}),
            )
            total = total + (c1 * c2) * (left @ right)
    return total


def test_bosonise_counit_multiplicative(bos, glq2, aq2):
    gens = [glq2.presentation.gen(g).embed(bos.signature, (0,))
            for g in glq2.presentation.gens]
    gens += [aq2.presentation.gen(g).embed(bos.signature, (1,))
             for g in aq2.presentation.gens]
    for u in gens:
        for v in gens:
            assert bos.counit(bos.product(u, v)) == bos.counit(u) * bos.counit(v)


def test_bosonise_projection_is_algebra_map(bos, glq2, aq2):
    p = glq2.presentation
    gens = [p.gen(g).embed(bos.signature, (0,)) for g in p.gens]
    gens += [aq2.presentation.gen(g).embed(bos.signature, (1,))
             for g in aq2.presentation.gens]
    for u in gens:
        for v in gens:
            lhs = bos.projection(bos.product(u, v))
            rhs = p.normal_form(bos.projection(u) * bos.projection(v))
            assert lhs == rhs


def test_bosonise_projection_respects_coproduct(bos, glq2, aq2):
    # project both legs of Delta and compare with Delta_H of the projection
    p = glq2.presentation
    for g in list(glq2.presentation.gens) + list(aq2.presentation.gens):
        if g in glq2.presentation.gens:
            el = p.gen(g).embed(bos.signature, (0,))
        else:
            el = bos.B.presentation.gen(g).embed(bos.signature, (1,))
        four = bos.coproduct(el)
        total = NcElement.zero((p, p))
        for (h1, b1, h2, b2), coeff in four.terms.items():
            eps = coeff
            for letter in b1:
                eps = eps * bos.B.counit_table[letter]
            for letter in b2:
                eps = eps * bos.B.counit_table[letter]
            if eps:
                total = total + eps * NcElement.from_word((p, p), (h1, h2))
        want = glq2.coproduct(bos.projection(el))
        assert total == want, g


def test_bosonise_antipode_axiom_on_generators(bos, glq2, aq2):
    gens = [glq2.presentation.gen(g).embed(bos.signature, (0,))
            for g in glq2.presentation.gens]
    gens += [aq2.presentation.gen(g).embed(bos.signature, (1,))
             for g in aq2.presentation.gens]
    for el in gens:
        four = bos.coproduct(el)
        left = NcElement.zero(bos.signature)
        right = NcElement.zero(bos.signature)
        for (h1, b1, h2, b2), coeff in four.terms.items():
            first = NcElement(bos.signature, {(h1, b1): ONE})
            second = NcElement(bos.signature, {(h2, b2): ONE})
            left = left + coeff * bos.product(bos.antipode(first), second)
            right = right + coeff * bos.product(first, bos.antipode(second))
        eps = bos.counit(el)
        assert left == eps * bos.one()
        assert right == eps * bos.one()


def test_bosonise_antipode_frozen_value(bos, aq2):
    # hand-derived: S(1 (x) x) = q^-3 gamma Cinv (x) y - q^-4 delta Cinv (x) x
    x = aq2.presentation.gen("x").embed(bos.signature, (1,))
    want = parse_element(
        "q^-3 * gamma*Cinv (x) y - q^-4 * delta*Cinv (x) x", bos.signature
    )
    assert bos.antipode(x) == want


# -- biproduct ------------------------------------------------------------------------

def test_biproduct_coincides_with_bosonisation(bos, glq2, aq2):
    bip = biproduct(BiproductInput.from_induced(glq2, aq2))
    gens = [glq2.presentation.gen(g).embed(bos.signature, (0,))
            for g in glq2.presentation.gens]
    gens += [aq2.presentation.gen(g).embed(bos.signature, (1,))
             for g in aq2.presentation.gens]
    for u in gens:
        for v in gens:
            assert bos.product(u, v) == bip.product(u, v)
    for u in gens:
        assert bos.coproduct(u) == bip.coproduct(u)


def test_biproduct_trivial_braided_part_recovers_hopf(glq2):
    # B = k: the smash product on H (x) k is just H
    k = Presentation("trivialk", ())
    k.complete()
    carrier = ComoduleAlgebra(k, {}, glq2)
    B = BraidedHopf(carrier, {}, {}, {})
    bundle = bosonise(glq2, B)
    p = glq2.presentation
    for g in p.gens:
        for h in p.gens:
            got = bundle.product(
                p.gen(g).embed(bundle.signature, (0,)),
                p.gen(h).embed(bundle.signature, (0,)),
            )
            want = p.normal_form(p.word(g, h)).embed(bundle.signature, (0,))
            assert got == want
    assert bundle.antipode(p.gen("alpha").embed(bundle.signature, (0,))) == \
        glq2.antipode(p.gen("alpha")).embed(bundle.signature, (0,))


def test_biproduct_rejects_corrupted_action(glq2, aq2):
    entries = InducedAction(aq2.carrier).table()
    entries[("x", "alpha")] = qp(3) * aq2.presentation.gen("x")
    with pytest.raises(CrossedModuleViolation) as info:
        biproduct(BiproductInput(glq2, aq2, entries))
    assert info.value.failures


# -- braided smash coproduct -------------------------------------------------------------

@pytest.fixture(scope="module")
def smash(glq2, aq2):
    return braided_smash_coproduct(glq2, aq2)


CROSS_RELATIONS = (
    ("x", "a", "a (x) x"),
    ("y", "a", "(q - q^-1) * b (x) x + a (x) y"),
    ("x", "b", "q^-1 * b (x) x"),
    ("y", "b", "q * b (x) y"),
    ("x", "c", "q * c (x) x"),
    ("y", "c", "(1 - q^-2) * d (x) x - (1 - q^-2) * a (x) x + q^-1 * c (x) y"),
    ("x", "d", "d (x) x"),
    ("y", "d", "d (x) y - q^-2 * (q - q^-1) * b (x) x"),
)


def test_smashcop_cross_relations(smash, glq2, aq2, bglq2):
    for bgen, hletter, expected in CROSS_RELATIONS:
        u = aq2.presentation.gen(bgen).embed(smash.signature, (1,))
        v = glq2.presentation.gen(catalog.BGLQ2_TO_GLQ2[hletter]).embed(
            smash.signature, (0,)
        )
        got = smash.product(u, v)
        want_b = parse_element(expected, (bglq2.presentation, aq2.presentation))
        want = catalog.rename_slot(want_b, 0, catalog.BGLQ2_TO_GLQ2, glq2.presentation)
        assert got == want, f"{bgen}{hletter}"


def test_smashcop_coproducts_of_plane_generators(smash, glq2, aq2):
    sig4 = smash.signature + smash.signature
    x = aq2.presentation.gen("x").embed(smash.signature, (1,))
    got = smash.coproduct(x)
    want = parse_element(
        "1 (x) x (x) alpha (x) 1 + 1 (x) y (x) gamma (x) 1 + 1 (x) 1 (x) 1 (x) x",
        sig4,
    )
    assert got == want
    y = aq2.presentation.gen("y").embed(smash.signature, (1,))
    got = smash.coproduct(y)
    want = parse_element(
        "1 (x) x (x) beta (x) 1 + 1 (x) y (x) delta (x) 1 + 1 (x) 1 (x) 1 (x) y",
        sig4,
    )
    assert got == want


def test_smashcop_transmuted_factor_multiplies_by_bmat(smash, glq2):
    # products inside the left factor are transmuted products
    m = catalog.BGLQ2_TO_GLQ2
    b = glq2.presentation.gen(m["b"]).embed(smash.signature, (0,))
    a = glq2.presentation.gen(m["a"]).embed(smash.signature, (0,))
    got = smash.product(b, a)
    want = transmuted_product(
        glq2, glq2.presentation.gen("beta"), glq2.presentation.gen("alpha")
    ).embed(smash.signature, (0,))
    assert got == want


def test_cobos_coproducts_agree_with_bosonisation(smash, bos, glq2, aq2):
    for g in glq2.presentation.gens:
        el = glq2.presentation.gen(g).embed(smash.signature, (0,))
        assert smash.coproduct(el) == bos.coproduct(el), g
    for g in aq2.presentation.gens:
        el = aq2.presentation.gen(g).embed(smash.signature, (1,))
        assert smash.coproduct(el) == bos.coproduct(el), g


def test_smashcop_counit(smash, glq2, aq2):
    el = glq2.presentation.gen("alpha").embed(smash.signature, (0,))
    assert smash.counit(el) == ONE
    el = aq2.presentation.gen("x").embed(smash.signature, (1,))
    assert smash.counit(el).is_zero()


def test_smashcop_product_associative_on_generators(smash, glq2, aq2):
    gens = [glq2.presentation.gen(g).embed(smash.signature, (0,))
            for g in ("alpha", "beta", "gamma", "delta")]
    gens += [aq2.presentation.gen(g).embed(smash.signature, (1,))
             for g in aq2.presentation.gens]
    for u in gens:
        for v in gens:
            uv = smash.product(u, v)
            for w in gens:
                assert smash.product(uv, w) == smash.product(u, smash.product(v, w))
