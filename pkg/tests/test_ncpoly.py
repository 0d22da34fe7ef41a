import random

import pytest

from braidkit.errors import BadGrouping, SignatureMismatch, UnknownGenerator
from braidkit.ncpoly import Alphabet, NcElement
from braidkit.scalar import ONE, Q, Scalar

from conftest import random_element


@pytest.fixture()
def b_alpha():
    return Alphabet("B", ("x", "y"))


@pytest.fixture()
def h_alpha():
    return Alphabet("H", ("a", "c"))


def el(sig, word, coeff=ONE):
    return NcElement.from_word(sig, word, coeff)


def test_tensor_mul_unit_slots(b_alpha, h_alpha):
    sig = (b_alpha, h_alpha)
    u = el(sig, (("x",), ()))
    v = el(sig, ((), ("a",)))
    assert u * v == el(sig, (("x",), ("a",)))


def test_tensor_mul_concatenates(b_alpha, h_alpha):
    sig = (b_alpha, h_alpha)
    u = el(sig, (("x",), ("a",)))
    v = el(sig, (("y",), ("c",)))
    assert u * v == el(sig, (("x", "y"), ("a", "c")))


def test_tensor_mul_bilinear(b_alpha, h_alpha):
    sig = (b_alpha, h_alpha)
    u = el(sig, (("x",), ()), Scalar.rational(2))
    v = el(sig, (("y",), ()), Q)
    assert u * v == el(sig, (("x", "y"), ()), 2 * Q)


def test_tensor_mul_signature_mismatch(b_alpha, h_alpha):
    with pytest.raises(SignatureMismatch):
        el((b_alpha,), (("x",),)) * el((h_alpha,), (("a",),))


def test_embed_unit_padding(b_alpha, h_alpha):
    x = el((b_alpha,), (("x",),))
    target = (h_alpha, b_alpha)
    assert x.embed(target, (1,)) == el(target, ((), ("x",)))
    a = el((h_alpha,), (("a",),))
    assert a.embed(target, (0,)) == el(target, (("a",), ()))


def test_embed_two_slots(b_alpha):
    sig2 = (b_alpha, b_alpha)
    sig4 = (b_alpha, b_alpha, b_alpha, b_alpha)
    u = el(sig2, (("x",), ("y",)))
    assert u.embed(sig4, (1, 3)) == el(sig4, ((), ("x",), (), ("y",)))


def test_embed_requires_injection(b_alpha):
    u = el((b_alpha, b_alpha), (("x",), ("y",)))
    with pytest.raises(SignatureMismatch):
        u.embed((b_alpha, b_alpha), (0, 0))


def test_regroup_roundtrip(b_alpha, h_alpha):
    sig = (b_alpha, h_alpha, b_alpha, h_alpha)
    u = el(sig, (("x",), ("a",), ("y",), ("c",)))
    grouped = u.select_slots((0, 2, 1, 3)).regroup([2, 2])
    assert grouped.signature == (b_alpha, h_alpha)
    assert grouped == el((b_alpha, h_alpha), (("x", "y"), ("a", "c")))


def test_regroup_unit():
    a = Alphabet("A", ("x",))
    u = NcElement.unit((a, a))
    assert u.regroup([2]) == NcElement.unit((a,))


def test_regroup_rejects_bad_partition(b_alpha, h_alpha):
    u = el((b_alpha, h_alpha), (("x",), ("a",)))
    with pytest.raises(BadGrouping):
        u.regroup([1])
    with pytest.raises(BadGrouping):
        u.regroup([2])  # mixed alphabets cannot merge


def test_tensor_mul_associative_random(b_alpha, h_alpha):
    rng = random.Random(3)
    sig = (b_alpha, h_alpha)
    for _ in range(500):
        u = random_element(rng, sig, degree=2, terms=2)
        v = random_element(rng, sig, degree=2, terms=2)
        w = random_element(rng, sig, degree=2, terms=2)
        assert (u * v) * w == u * (v * w)
        assert NcElement.unit(sig) * u == u
        assert u * NcElement.unit(sig) == u


def test_unknown_generator_rejected(b_alpha):
    with pytest.raises(UnknownGenerator):
        NcElement.from_word((b_alpha,), (("z",),))


def test_printing_and_order(b_alpha, h_alpha):
    sig = (b_alpha, h_alpha)
    u = el(sig, (("x", "y"), ("a",))) + (Q * Q) * NcElement.unit(sig)
    assert str(u) == "q^2*1(x)1 + x*y(x)a"
    assert str(NcElement.zero(sig)) == "0"


def test_outer_product(b_alpha, h_alpha):
    x = el((b_alpha,), (("x",),))
    a = el((h_alpha,), (("a",),), Q)
    assert x @ a == el((b_alpha, h_alpha), (("x",), ("a",)), Q)


def test_coefficient_lookup(b_alpha):
    u = el((b_alpha,), (("x",),), Q) + el((b_alpha,), (("y",),))
    assert u.coefficient((("x",),)) == Q
    assert u.coefficient((("y", "y"),)).is_zero()
