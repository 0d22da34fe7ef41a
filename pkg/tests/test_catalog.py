import pytest

from braidkit import catalog, verify
from braidkit.errors import UnknownEntry
from braidkit.ncpoly import NcElement
from braidkit.scalar import ONE, Q, Scalar
from braidkit.structuremap import BraidedHopf, DqtHopf, braiding


@pytest.mark.parametrize("name", catalog.NAMES)
def test_every_entry_loads_verified(name):
    bundle = catalog.load(name, verify=True)
    assert bundle is catalog.load(name)  # cached


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        catalog.load("nosuch")


def test_entry_kinds():
    assert isinstance(catalog.load("glq2", verify=False), DqtHopf)
    assert isinstance(catalog.load("bglq2", verify=False), BraidedHopf)
    assert isinstance(catalog.load("aq2", verify=False), BraidedHopf)
    assert isinstance(catalog.load("z2prime", verify=False), DqtHopf)


def test_glq2_has_expected_shape(glq2):
    p = glq2.presentation
    assert p.gens == ("alpha", "beta", "gamma", "delta", "C", "Cinv")
    assert len(p.relations) == 7
    # nine declared rules: seven relations plus the two inverse unit rules
    assert glq2.presentation.report.initial_rules == 9


def test_provenance_notes_present():
    for name in catalog.NAMES:
        entry = catalog.ENTRIES[name]
        assert entry.provenance, name
        for item, note in entry.provenance:
            assert isinstance(item, str) and isinstance(note, str)


def test_z2prime_structure(z2prime):
    p = z2prime.presentation
    assert p.gens == ("g",)
    assert z2prime.eval_R(("g",), ("g",)) == Scalar.rational(-1)
    assert p.is_zero(p.word("g", "g") - p.one())


def test_super_braiding_is_minus_swap(z2prime, superline):
    V = superline.carrier
    theta = V.presentation.gen("theta")
    got = braiding(V, V, theta @ theta)
    assert got == -(theta @ theta)


def test_superline_passes_braided_suite(superline):
    report = verify.verify_braided_hopf(superline)
    assert report.ok


def test_braided_line_braiding(braidedline):
    V = braidedline.carrier
    x = V.presentation.gen("x")
    assert braiding(V, V, x @ x) == Q * (x @ x)


def test_letter_identification_map():
    assert catalog.BGLQ2_TO_GLQ2 == {
        "a": "alpha", "b": "beta", "c": "gamma", "d": "delta",
        "D": "C", "Dinv": "Cinv",
    }
    assert catalog.GLQ2_TO_BGLQ2["C"] == "D"


def test_bglq2_coaction_is_adjoint_shaped(glq2, bglq2):
    # the determinant letter is coinvariant
    p = bglq2.presentation
    got = bglq2.carrier.coact(p.gen("D"))
    assert got == NcElement.from_word((p, glq2.presentation), (("D",), ()))


# -- regeneration oracles --------------------------------------------------------

def test_r_table_solver_reproduces_shipped_table(glq2):
    solved, report = catalog.solve_glq2_r_table()
    assert report["unique"], report
    assert report["consistent"], report
    assert report["equations"] == 16
    assert report["conflicts"] == []
    assert len(solved) == 36
    for key, value in solved.items():
        assert glq2.r_table[key] == value, key


def test_antipode_solver_reproduces_shipped_table(bglq2):
    solution = catalog.solve_bglq2_antipode()
    for g in bglq2.presentation.gens:
        assert solution[g] == bglq2.antipode_table[g], g


def test_build_fresh_is_equal_but_not_cached():
    fresh = catalog.build_fresh("aq2")
    cached = catalog.load("aq2", verify=False)
    assert fresh is not cached
    assert fresh.presentation.gens == cached.presentation.gens
