"""Built-in algebras: the q-deformed 2x2 matrix quantum group, its braided
version, the quantum plane, the sign-braided line, and the integer-graded
braided line, together with the derived structure tables and the oracle that
regenerates them.

Relation strings are kept in the exact form of their sources (translated into
the file syntax only); derived data (the R table, the matrix antipodes, the
braided-matrix coaction) is marked `derived` in the provenance notes and is
regenerated by solve_glq2_r_table / solve_bglq2_antipode in the test suite.
"""

from dataclasses import dataclass

from .constructions import adjoint_coaction
from .deffile import parse_element, parse_scalar
from .errors import BraidkitError, UnknownEntry
from .ncpoly import NcElement
from .rewrite import Presentation
from .scalar import ONE, Scalar
from .structuremap import BraidedHopf, ComoduleAlgebra, DqtHopf

NAMES = ("glq2", "bglq2", "aq2", "z2prime", "superline", "braidedline", "zgrade")


@dataclass
class CatalogEntry:
    name: str
    kind: str
    description: str
    provenance: tuple  # (item, note) pairs


# ---------------------------------------------------------------------------
# raw definition data
# ---------------------------------------------------------------------------

_GLQ2_GENS = ("alpha", "beta", "gamma", "delta", "C", "Cinv")

_GLQ2_RELATIONS = (
    ("alpha*beta = q^-1*beta*alpha", "q-matrix commutation"),
    ("alpha*gamma = q^-1*gamma*alpha", "q-matrix commutation"),
    ("beta*delta = q^-1*delta*beta", "q-matrix commutation"),
    ("gamma*delta = q^-1*delta*gamma", "q-matrix commutation"),
    ("beta*gamma = gamma*beta", "q-matrix commutation"),
    ("alpha*delta - delta*alpha = (q^-1 - q)*beta*gamma", "q-matrix commutation"),
    ("C = alpha*delta - q^-1*beta*gamma", "q-determinant, kept invertible"),
)

_GLQ2_COPRODUCT = {
    "alpha": "alpha (x) alpha + beta (x) gamma",
    "beta": "alpha (x) beta + beta (x) delta",
    "gamma": "gamma (x) alpha + delta (x) gamma",
    "delta": "gamma (x) beta + delta (x) delta",
    "C": "C (x) C",
    "Cinv": "Cinv (x) Cinv",
}

_GLQ2_COUNIT = {"alpha": "1", "beta": "0", "gamma": "0", "delta": "1",
                "C": "1", "Cinv": "1"}

# derived: the q-matrix inverse through the inverse determinant; certified by
# the antipode axiom in the verify suite rather than trusted.
_GLQ2_ANTIPODE = {
    "alpha": "delta*Cinv",
    "beta": "-q*beta*Cinv",
    "gamma": "-q^-1*gamma*Cinv",
    "delta": "alpha*Cinv",
    "C": "Cinv",
    "Cinv": "C",
}

# derived: solved from the quantum-plane and braided-matrix braidings plus
# the normalisation R(C (x) C) = q^6; regenerated by solve_glq2_r_table.
_GLQ2_R_NONZERO = {
    ("alpha", "alpha"): "q^2",
    ("alpha", "delta"): "q",
    ("delta", "alpha"): "q",
    ("delta", "delta"): "q^2",
    ("beta", "gamma"): "q^2 - 1",
    ("alpha", "C"): "q^3",
    ("delta", "C"): "q^3",
    ("C", "alpha"): "q^3",
    ("C", "delta"): "q^3",
    ("C", "C"): "q^6",
    ("alpha", "Cinv"): "q^-3",
    ("delta", "Cinv"): "q^-3",
    ("Cinv", "alpha"): "q^-3",
    ("Cinv", "delta"): "q^-3",
    ("C", "Cinv"): "q^-6",
    ("Cinv", "C"): "q^-6",
    ("Cinv", "Cinv"): "q^6",
}

_BGLQ2_GENS = ("a", "b", "c", "d", "D", "Dinv")

_BGLQ2_RELATIONS = (
    ("b*a = q^2*a*b", "braided-matrix commutation"),
    ("c*a = q^-2*a*c", "braided-matrix commutation"),
    ("d*a = a*d", "braided-matrix commutation"),
    ("b*c = c*b + (1 - q^-2)*a*d - (1 - q^-2)*a*a",
     "braided-matrix commutation, source form bc = cb + (1-q^-2)a(d-a)"),
    ("d*b = b*d + (1 - q^-2)*a*b", "braided-matrix commutation"),
    ("c*d = d*c + (1 - q^-2)*c*a", "braided-matrix commutation"),
    ("D = a*d - q^2*c*b", "braided determinant, kept invertible"),
)

_BGLQ2_COPRODUCT = {
    "a": "a (x) a + b (x) c",
    "b": "a (x) b + b (x) d",
    "c": "c (x) a + d (x) c",
    "d": "c (x) b + d (x) d",
    "D": "D (x) D",
    "Dinv": "Dinv (x) Dinv",
}

_BGLQ2_COUNIT = {"a": "1", "b": "0", "c": "0", "d": "1", "D": "1", "Dinv": "1"}

# derived: solved from the braided antipode equations over words of degree
# at most two; regenerated by solve_bglq2_antipode.
_BGLQ2_ANTIPODE = {
    "a": "q^2*d*Dinv - (q^2 - 1)*a*Dinv",
    "b": "-q^2*b*Dinv",
    "c": "-q^2*c*Dinv",
    "d": "a*Dinv",
    "D": "Dinv",
    "Dinv": "D",
}

# a <-> alpha etc.; explicit data, used by the transmutation checks.
BGLQ2_TO_GLQ2 = {"a": "alpha", "b": "beta", "c": "gamma", "d": "delta",
                 "D": "C", "Dinv": "Cinv"}
GLQ2_TO_BGLQ2 = {v: k for k, v in BGLQ2_TO_GLQ2.items()}

_AQ2_RELATIONS = (("y*x = q*x*y", "quantum-plane commutation"),)

_AQ2_COACTION = {
    "x": "x (x) alpha + y (x) gamma",
    "y": "x (x) beta + y (x) delta",
}

_AQ2_COPRODUCT = {"x": "x (x) 1 + 1 (x) x", "y": "y (x) 1 + 1 (x) y"}
_AQ2_COUNIT = {"x": "0", "y": "0"}
_AQ2_ANTIPODE = {"x": "-x", "y": "-y"}

ENTRIES = {
    "glq2": CatalogEntry(
        "glq2", "dqt_hopf",
        "q-deformed 2x2 matrix quantum group with invertible q-determinant",
        tuple(_GLQ2_RELATIONS) + (
            ("R table", "derived: solved from braiding constraints and R(C,C) = q^6"),
            ("antipode table", "derived: q-matrix inverse, certified by the antipode axiom"),
        ),
    ),
    "bglq2": CatalogEntry(
        "bglq2", "braided_hopf",
        "braided 2x2 matrices with invertible braided determinant",
        tuple(_BGLQ2_RELATIONS) + (
            ("coaction table", "derived: adjoint coaction transported along a<->alpha"),
            ("antipode table", "derived: solved from the braided antipode equations"),
        ),
    ),
    "aq2": CatalogEntry(
        "aq2", "braided_hopf",
        "quantum plane as a braided Hopf algebra with linear coaddition",
        tuple(_AQ2_RELATIONS) + (
            ("coaction table", "row-vector transformation under the matrix generators"),
        ),
    ),
    "z2prime": CatalogEntry(
        "z2prime", "dqt_hopf",
        "two-dimensional sign-braided Hopf algebra generating super vector spaces",
        (("g*g = 1", "grouplike of order two"),
         ("R(g,g) = -1", "derived: the unique choice making odd (x) odd braid to -swap")),
    ),
    "superline": CatalogEntry(
        "superline", "braided_hopf",
        "free braided line on one odd generator over z2prime",
        (("coaction theta -> theta (x) g", "odd grading"),),
    ),
    "braidedline": CatalogEntry(
        "braidedline", "braided_hopf",
        "braided line k[x] with braiding x (x) x -> q x (x) x",
        (("coaction x -> x (x) g", "derived convention: minimal integer grading"),),
    ),
    "zgrade": CatalogEntry(
        "zgrade", "dqt_hopf",
        "integer-grading Hopf algebra k[g, g^-1] with bicharacter R(g,g) = q",
        (("R(g,g) = q", "bicharacter on the grading group"),),
    ),
}


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _presentation(tag, gens, relations, inverses=()):
    p = Presentation(tag, gens)
    for g, ginv in inverses:
        p.add_inverse_pair(g, ginv)
    for text, _note in relations:
        lhs, rhs = text.split("=", 1)
        p.add_relation(parse_element(lhs, (p,)), parse_element(rhs, (p,)))
    p.complete()
    return p


def _tables(p, coproduct, counit, antipode, extra_sig=None):
    cop = {g: parse_element(t, (p, p)) for g, t in coproduct.items()}
    cou = {g: parse_scalar(t) for g, t in counit.items()}
    anti = {g: parse_element(t, (p,)) for g, t in antipode.items()}
    return cop, cou, anti


def _build_glq2():
    p = _presentation("glq2", _GLQ2_GENS, _GLQ2_RELATIONS, inverses=(("C", "Cinv"),))
    cop, cou, anti = _tables(p, _GLQ2_COPRODUCT, _GLQ2_COUNIT, _GLQ2_ANTIPODE)
    r_entries = {}
    for u in _GLQ2_GENS:
        for v in _GLQ2_GENS:
            text = _GLQ2_R_NONZERO.get((u, v), "0")
            r_entries[(u, v)] = parse_scalar(text)
    return DqtHopf(p, cop, cou, anti, r_entries)


def _build_bglq2():
    H = load("glq2", verify=False)
    p = _presentation("bglq2", _BGLQ2_GENS, _BGLQ2_RELATIONS, inverses=(("D", "Dinv"),))
    coaction = {
        g: bglq2_coaction_of(H, p, g) for g in _BGLQ2_GENS
    }
    carrier = ComoduleAlgebra(p, coaction, H)
    cop, cou, anti = _tables(p, _BGLQ2_COPRODUCT, _BGLQ2_COUNIT, _BGLQ2_ANTIPODE)
    return BraidedHopf(carrier, cop, cou, anti)


def bglq2_coaction_of(H, p, gen):
    """Coaction of a braided-matrix letter: the adjoint coaction of its
    matrix-group partner with the first leg read back in braided letters."""
    partner = H.presentation.gen(BGLQ2_TO_GLQ2[gen])
    adj = adjoint_coaction(H, partner)
    return rename_slot(adj, 0, GLQ2_TO_BGLQ2, p)


def _build_aq2():
    H = load("glq2", verify=False)
    p = _presentation("aq2", ("x", "y"), _AQ2_RELATIONS)
    coaction = {g: parse_element(t, (p, H.presentation)) for g, t in _AQ2_COACTION.items()}
    carrier = ComoduleAlgebra(p, coaction, H)
    cop, cou, anti = _tables(p, _AQ2_COPRODUCT, _AQ2_COUNIT, _AQ2_ANTIPODE)
    return BraidedHopf(carrier, cop, cou, anti)


def _build_z2prime():
    p = _presentation("z2prime", ("g",), (("g*g = 1", ""),))
    cop = {"g": parse_element("g (x) g", (p, p))}
    cou = {"g": ONE}
    anti = {"g": p.gen("g")}
    return DqtHopf(p, cop, cou, anti, {("g", "g"): Scalar.rational(-1)})


def _build_zgrade():
    p = _presentation("zgrade", ("g", "ginv"), (), inverses=(("g", "ginv"),))
    cop = {"g": parse_element("g (x) g", (p, p)),
           "ginv": parse_element("ginv (x) ginv", (p, p))}
    cou = {"g": ONE, "ginv": ONE}
    anti = {"g": p.gen("ginv"), "ginv": p.gen("g")}
    r_entries = {
        ("g", "g"): Scalar.q_power(1),
        ("g", "ginv"): Scalar.q_power(-1),
        ("ginv", "g"): Scalar.q_power(-1),
        ("ginv", "ginv"): Scalar.q_power(1),
    }
    return DqtHopf(p, cop, cou, anti, r_entries)


def _build_superline():
    H = load("z2prime", verify=False)
    p = _presentation("superline", ("theta",), ())
    coaction = {"theta": parse_element("theta (x) g", (p, H.presentation))}
    carrier = ComoduleAlgebra(p, coaction, H)
    cop = {"theta": parse_element("theta (x) 1 + 1 (x) theta", (p, p))}
    cou = {"theta": Scalar()}
    anti = {"theta": -p.gen("theta")}
    return BraidedHopf(carrier, cop, cou, anti)


def _build_braidedline():
    H = load("zgrade", verify=False)
    p = _presentation("braidedline", ("x",), ())
    coaction = {"x": parse_element("x (x) g", (p, H.presentation))}
    carrier = ComoduleAlgebra(p, coaction, H)
    cop = {"x": parse_element("x (x) 1 + 1 (x) x", (p, p))}
    cou = {"x": Scalar()}
    anti = {"x": -p.gen("x")}
    return BraidedHopf(carrier, cop, cou, anti)


_BUILDERS = {
    "glq2": _build_glq2,
    "bglq2": _build_bglq2,
    "aq2": _build_aq2,
    "z2prime": _build_z2prime,
    "superline": _build_superline,
    "braidedline": _build_braidedline,
    "zgrade": _build_zgrade,
}

_cache = {}
_verified = set()


def load(name, verify=True):
    """Load a catalog entry; with verify=True the full suite for its kind
    must pass (cached per process)."""
    if name not in _BUILDERS:
        raise UnknownEntry(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}")
    bundle = _cache.get(name)
    if bundle is None:
        bundle = _BUILDERS[name]()
        _cache[name] = bundle
    if verify and name not in _verified:
        from . import verify as verify_mod

        report = verify_mod.verify_bundle(bundle)
        report.raise_if_failed()
        _verified.add(name)
    return bundle


def build_fresh(name):
    """Rebuild an entry from its raw data, bypassing the cache (used to
    check that completion reports are stable across runs)."""
    if name not in _BUILDERS:
        raise UnknownEntry(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}")
    return _BUILDERS[name]()


def rename_slot(element, index, mapping, target):
    """Rename the generators of one slot through a letter map."""
    signature = list(element.signature)
    signature[index] = target
    terms = {}
    for word, coeff in element.terms.items():
        renamed = tuple(mapping[g] for g in word[index])
        key = word[:index] + (renamed,) + word[index + 1:]
        terms[key] = terms.get(key, Scalar()) + coeff
    return NcElement(tuple(signature), terms)


# ---------------------------------------------------------------------------
# regeneration oracles for the derived tables
# ---------------------------------------------------------------------------

_QPLANE_BRAIDINGS = (
    ("x", "x", "q^2 * x (x) x"),
    ("x", "y", "q * y (x) x"),
    ("y", "y", "q^2 * y (x) y"),
    ("y", "x", "q * x (x) y + (q^2 - 1) * y (x) x"),
)

_PSIAX_BRAIDINGS = (
    ("a", "x", "x (x) a + (1 - q^2) * y (x) c"),
    ("b", "x", "q^-1 * x (x) b + (q - q^-1) * y (x) a - (q - q^-1) * y (x) d"),
    ("c", "x", "q * x (x) c"),
    ("d", "x", "x (x) d + (1 - q^-2) * y (x) c"),
    ("a", "y", "y (x) a"),
    ("b", "y", "q * y (x) b"),
    ("c", "y", "q^-1 * y (x) c"),
    ("d", "y", "y (x) d"),
)

_MATRIX_LETTERS = ("alpha", "beta", "gamma", "delta")


def solve_glq2_r_table():
    """Re-derive the shipped R table from the printed braidings and the
    normalisation R(C (x) C) = q^6.

    The quantum-plane braiding lines give one linear equation per output
    word, which pins all sixteen base entries; the C and Cinv rows and
    columns follow from the pairing laws and convolution inversion.  The
    braided-matrix braiding lines and the q^6 normalisation are then checked
    against the candidate.  Returns (entries, report) where report records
    equation counts, uniqueness and consistency.
    """
    report = {"unknowns": 16, "equations": 0, "unique": True, "consistent": True,
              "conflicts": [], "checked_constraints": 0}
    solved = {}

    # coaction legs of the quantum plane: x_k |-> sum_i x_i (x) u[i][k]
    plane = {"x": (("x", "alpha"), ("y", "gamma")),
             "y": (("x", "beta"), ("y", "delta"))}

    aq2 = load("aq2", verify=False)
    for v, w, expected_text in _QPLANE_BRAIDINGS:
        expected = parse_element(
            expected_text, (aq2.presentation, aq2.presentation)
        )
        for bw, hw in plane[v]:
            for bw2, hw2 in plane[w]:
                coeff = expected.coefficient(((bw2,), (bw,)))
                key = (hw, hw2)
                report["equations"] += 1
                if key in solved and solved[key] != coeff:
                    report["consistent"] = False
                    report["conflicts"].append(key)
                solved[key] = coeff
    if len(solved) != 16:
        report["unique"] = False

    # extend to the determinant letters through the pairing laws:
    # C = alpha*delta - q^-1 beta*gamma, split along matrix coproducts.
    H = load("glq2", verify=False)
    qinv = Scalar.q_power(-1)

    def pair_row(u1, u2, g):
        # R(u1 u2 (x) g) = sum R(u1 (x) g1) R(u2 (x) g2)
        total = Scalar()
        for (g1, g2), coeff in H.coproduct_word((g,)).terms.items():
            if len(g1) == 1 and len(g2) == 1:
                total = total + coeff * solved[(u1, g1[0])] * solved[(u2, g2[0])]
        return total

    def pair_col(g, u1, u2):
        # R(g (x) u1 u2) = sum R(g1 (x) u2) R(g2 (x) u1)
        total = Scalar()
        for (g1, g2), coeff in H.coproduct_word((g,)).terms.items():
            if len(g1) == 1 and len(g2) == 1:
                total = total + coeff * solved[(g1[0], u2)] * solved[(g2[0], u1)]
        return total

    for g in _MATRIX_LETTERS:
        solved[("C", g)] = pair_row("alpha", "delta", g) - qinv * pair_row("beta", "gamma", g)
        solved[(g, "C")] = pair_col(g, "alpha", "delta") - qinv * pair_col(g, "beta", "gamma")
    solved[("C", "C")] = solved[("C", "alpha")] * solved[("C", "delta")] \
        - qinv * solved[("C", "beta")] * solved[("C", "gamma")]

    # convolution-inverse rows/columns: R(Cinv (x) -) inverts R(C (x) -)
    # along coproducts; the grouplike structure makes each pivot a monomial.
    for g in _MATRIX_LETTERS:
        solved[("Cinv", g)] = _char_inverse(H, solved, "C", g, row=True)
        solved[(g, "Cinv")] = _char_inverse(H, solved, "C", g, row=False)
    solved[("Cinv", "C")] = solved[("C", "C")].inv()
    solved[("C", "Cinv")] = solved[("C", "C")].inv()
    solved[("Cinv", "Cinv")] = solved[("C", "C")]

    # constraint checks: normalisation and the braided-matrix braidings.
    expected_cc = parse_scalar("q^6")
    report["checked_constraints"] += 1
    if solved[("C", "C")] != expected_cc:
        report["consistent"] = False
        report["conflicts"].append(("C", "C"))

    candidate = DqtHopf(
        H.presentation,
        {g: H.coproduct_table[g] for g in H.presentation.gens},
        {g: H.counit_table[g] for g in H.presentation.gens},
        {g: H.antipode_table[g] for g in H.presentation.gens},
        solved,
    )
    from .structuremap import braiding as _braiding

    bglq2 = load("bglq2", verify=False)
    b_carrier = ComoduleAlgebra(
        bglq2.presentation,
        {g: bglq2_coaction_of(candidate, bglq2.presentation, g) for g in _BGLQ2_GENS},
        candidate,
    )
    a_carrier = ComoduleAlgebra(
        aq2.presentation,
        {g: parse_element(t, (aq2.presentation, H.presentation))
         for g, t in _AQ2_COACTION.items()},
        candidate,
    )
    for v, w, expected_text in _PSIAX_BRAIDINGS:
        report["checked_constraints"] += 1
        arg = NcElement.from_word(
            (b_carrier.presentation, a_carrier.presentation), ((v,), (w,))
        )
        got = _braiding(b_carrier, a_carrier, arg)
        expected = parse_element(
            expected_text, (a_carrier.presentation, b_carrier.presentation)
        )
        if got != expected:
            report["consistent"] = False
            report["conflicts"].append((v, w))
    return solved, report


def _char_inverse(H, solved, grouplike, g, row):
    """Solve sum R(Ginv (x) g1) R(G (x) g2) = eps(g) (or its column mirror)
    for the single unknown with a monomial pivot."""
    unknowns = {}
    rhs = H.counit_word((g,))
    for (g1, g2), coeff in H.coproduct_word((g,)).terms.items():
        u, v = g1[0], g2[0]
        if row:
            pivot, other = u, solved[(grouplike, v)]
        else:
            pivot, other = v, solved[(u, grouplike)]
        value = coeff * other
        if value:
            unknowns[pivot] = unknowns.get(pivot, Scalar()) + value
    # the diagonal entry carries the invertible pivot; off-diagonal unknowns
    # have zero multiplier for these grouplike-paired characters.
    pivot_value = unknowns.pop(g, None)
    if pivot_value is None or any(v for v in unknowns.values()):
        raise BraidkitError(f"character inversion for {grouplike} is not triangular at {g}")
    return rhs * pivot_value.inv()


def solve_bglq2_antipode():
    """Re-derive the shipped braided-matrix antipode table by solving the
    antipode equations sum S(u1) u2 = eps(u) as one exact linear system.

    Each unknown S(letter) is expanded over the basis w * Dinv with w a word
    of degree <= 2 in the braided letters; collecting normal-form words gives
    a linear system over the coefficient ring, solved by elimination over its
    fraction field and verified to land back in Laurent polynomials.
    """
    B = load("bglq2", verify=False)
    p = B.presentation
    letters = ("a", "b", "c", "d")
    candidates = [("Dinv",)] + [(g, "Dinv") for g in letters] + [
        (g, h, "Dinv") for g in letters for h in letters
    ]
    # only normal-form words are linearly independent columns
    basis = [w for w in candidates if p.reduce_word(w).terms == {(w,): ONE}]
    columns = [(letter, bw) for letter in letters for bw in basis]
    col_index = {col: i for i, col in enumerate(columns)}
    rows = {}   # (target, normal word) -> coefficient vector
    rhs = {}
    for target in letters:
        for (u1, u2), coeff in B.coproduct_table[target].terms.items():
            for bw in basis:
                image = coeff * p.reduce_word(bw + u2)
                for word, value in image.terms.items():
                    key = (target, word[0])
                    row = rows.setdefault(key, {})
                    idx = col_index[(u1[0], bw)]
                    row[idx] = row.get(idx, Scalar()) + value
        eps = B.counit_table[target]
        if eps:
            rhs[(target, ())] = eps
            rows.setdefault((target, ()), {})
    assignment = _gauss_solve(rows, rhs, len(columns))
    solution = {}
    for letter in letters:
        entry = p.zero()
        for bw in basis:
            value = assignment[col_index[(letter, bw)]]
            if value:
                entry = entry + value * NcElement.from_word((p,), (bw,))
        solution[letter] = entry
    solution["D"] = p.gen("Dinv")
    solution["Dinv"] = p.gen("D")
    return solution


class _Frac:
    """num/den over Laurent scalars, just enough for exact elimination."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.is_monomial():
            num, den = num * den.inv(), ONE
        self.num = num
        self.den = den

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        return _Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return _Frac(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        return _Frac(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by zero fraction")
        return _Frac(self.num * other.den, self.den * other.num)

    def as_scalar(self):
        if self.den.is_one():
            return self.num
        quotient = _laurent_divide(self.num, self.den)
        if quotient is None:
            raise BraidkitError(f"solution ({self.num})/({self.den}) is not a Laurent polynomial")
        return quotient


def _laurent_divide(num, den):
    """Exact division of Laurent polynomials in q, or None if not exact."""
    if num.is_zero():
        return Scalar()
    remainder = dict(num._terms)
    den_terms = sorted(den._terms.items(), reverse=True)
    lead_exp, lead_coeff = den_terms[0]
    quotient = {}
    while remainder:
        top = max(remainder)
        factor_exp = top - lead_exp
        factor_coeff = remainder[top] / lead_coeff
        quotient[factor_exp] = factor_coeff
        for exp, coeff in den_terms:
            key = exp + factor_exp
            acc = remainder.get(key, 0) - coeff * factor_coeff
            if acc:
                remainder[key] = acc
            else:
                remainder.pop(key, None)
        if len(quotient) > 4 * (len(num._terms) + len(den._terms) + 4):
            return None
    return Scalar(quotient)


def _gauss_solve(rows, rhs, width):
    """Exact Gaussian elimination for a sparse system with a unique solution."""
    zero = _Frac(Scalar())
    matrix = []
    for key in sorted(rows, key=str):
        vec = [zero] * (width + 1)
        for idx, value in rows[key].items():
            vec[idx] = _Frac(value)
        vec[width] = _Frac(rhs.get(key, Scalar()))
        matrix.append(vec)
    pivots = {}
    row_at = 0
    for col in range(width):
        pivot_row = None
        for r in range(row_at, len(matrix)):
            if matrix[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        matrix[row_at], matrix[pivot_row] = matrix[pivot_row], matrix[row_at]
        pivot = matrix[row_at][col]
        matrix[row_at] = [v / pivot for v in matrix[row_at]]
        for r in range(len(matrix)):
            if r != row_at and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[row_at])]
        pivots[col] = row_at
        row_at += 1
    for r in range(row_at, len(matrix)):
        if matrix[r][width]:
            raise BraidkitError("inconsistent linear system")
    solution = {}
    for col in range(width):
        if col in pivots:
            solution[col] = matrix[pivots[col]][width].as_scalar()
        else:
            solution[col] = Scalar()
    return solution
