"""Generator tables for coproducts, counits, antipodes, coactions and the
dual-quasitriangular functional R, together with their extension laws.

Tables are given on generators only.  Coproducts and coactions extend
multiplicatively, counits multiplicatively to scalars, antipodes
anti-multiplicatively, and R extends to words through its bialgebra-pairing
laws: peeling the last letter of the second argument splits the first
argument's coproduct, and peeling the first letter of the first argument
splits the second's.  The braiding of two right comodules contracts their
coaction legs through R.
"""

from .errors import MissingEntry, SignatureMismatch
from .ncpoly import NcElement
from .scalar import ONE, Scalar

_TABLE_KINDS = ("coproduct", "counit", "antipode", "right_coaction")

# Safety valve for pairing recursion on adversarial user tables whose
# coproduct entries contain long words.
_MAX_PAIRING_DEPTH = 200


class GenTable:
    """Generator-indexed table for one structure map, entries normalized."""

    def __init__(self, kind, entries, presentation=None):
        if kind not in _TABLE_KINDS:
            raise ValueError(f"unknown table kind {kind!r}")
        self.kind = kind
        self.entries = dict(entries)
        if presentation is not None:
            missing = [g for g in presentation.gens if g not in self.entries]
            if missing:
                raise ValueError(f"{kind} table missing entries for {missing}")

    def __getitem__(self, gen):
        try:
            return self.entries[gen]
        except KeyError:
            raise MissingEntry(f"no {self.kind} entry for generator {gen!r}") from None


class DqtFunctional:
    """R on generator pairs.  Pairs must be tabled explicitly (zeros too);
    the unit rule R(1(x)h) = eps(h) = R(h(x)1) is applied by the evaluator."""

    def __init__(self, entries):
        self.entries = {tuple(k): v for k, v in entries.items()}

    def __getitem__(self, pair):
        try:
            return self.entries[pair]
        except KeyError:
            raise MissingEntry(f"no R entry for generator pair {pair}") from None


class HopfAlgebra:
    """An ordinary Hopf algebra presented by rewriting, with generator tables
    for coproduct, counit and antipode."""

    def __init__(self, presentation, coproduct, counit, antipode):
        self.presentation = presentation
        p = presentation
        self.coproduct_table = GenTable("coproduct", _normalized(coproduct, (p, p)), p)
        self.counit_table = GenTable("counit", dict(counit), p)
        self.antipode_table = GenTable("antipode", _normalized(antipode, (p,)), p)
        self._cop_cache = {}
        self._sweedler_cache = {}
        self._antipode_cache = {}

    @property
    def tag(self):
        return self.presentation.tag

    def one(self):
        return self.presentation.one()

    # -- word-level maps (multiplicative / anti-multiplicative extension) ----

    def coproduct_word(self, word):
        cached = self._cop_cache.get(word)
        if cached is None:
            p = self.presentation
            cached = NcElement.unit((p, p))
            for g in word:
                cached = p.normal_form(cached * self.coproduct_table[g])
            self._cop_cache[word] = cached
        return cached

    def counit_word(self, word):
        value = ONE
        for g in word:
            value = value * self.counit_table[g]
        return value

    def antipode_word(self, word):
        cached = self._antipode_cache.get(word)
        if cached is None:
            p = self.presentation
            cached = p.one()
            for g in word:
                cached = p.normal_form(self.antipode_table[g] * cached)
            self._antipode_cache[word] = cached
        return cached

    def sweedler_word(self, word, legs):
        """Iterated coproduct with the given number of legs (legs >= 1)."""
        if legs == 1:
            return NcElement.from_word((self.presentation,), (word,))
        key = (word, legs)
        cached = self._sweedler_cache.get(key)
        if cached is None:
            lower = self.sweedler_word(word, legs - 1)
            p = self.presentation
            cached = lower.map_slot(0, self.coproduct_word, (p, p))
            self._sweedler_cache[key] = cached
        return cached

    # -- element-level maps ---------------------------------------------------

    def coproduct(self, element):
        self._check(element)
        p = self.presentation
        return element.map_slot(0, self.coproduct_word, (p, p))

    def counit(self, element):
        self._check(element)
        value = Scalar()
        for word, coeff in element.terms.items():
            value = value + coeff * self.counit_word(word[0])
        return value

    def antipode(self, element):
        self._check(element)
        return element.map_slot(0, self.antipode_word, (self.presentation,))

    def sweedler(self, element, legs):
        self._check(element)
        sig = (self.presentation,) * legs
        return element.map_slot(0, lambda w: self.sweedler_word(w, legs), sig)

    def _check(self, element):
        if element.signature != (self.presentation,):
            raise SignatureMismatch(f"element is not a plain {self.tag} element")


class DqtHopf(HopfAlgebra):
    """A Hopf algebra carrying a dual-quasitriangular functional R."""

    def __init__(self, presentation, coproduct, counit, antipode, r_table):
        super().__init__(presentation, coproduct, counit, antipode)
        if not isinstance(r_table, DqtFunctional):
            r_table = DqtFunctional(r_table)
        self.r_table = r_table
        self._r_cache = {}

    def eval_R(self, u, v, _depth=0):
        """R on a pair of words, via the pairing laws down to table entries."""
        u, v = tuple(u), tuple(v)
        key = (u, v)
        cached = self._r_cache.get(key)
        if cached is not None:
            return cached
        if _depth > _MAX_PAIRING_DEPTH:
            raise MissingEntry(
                "R evaluation recursed too deep; coproduct table entries are "
                "too long for letterwise peeling"
            )
        if not u:
            value = self.counit_word(v)
        elif not v:
            value = self.counit_word(u)
        elif len(u) == 1 and len(v) == 1:
            value = self.r_table[(u[0], v[0])]
        elif len(v) > 1:
            last, prefix = (v[-1],), v[:-1]
            value = Scalar()
            for word, coeff in self.coproduct_word(u).terms.items():
                left = self.eval_R(word[0], last, _depth + 1)
                if not left:
                    continue
                value = value + coeff * left * self.eval_R(word[1], prefix, _depth + 1)
        else:
            first, rest = (u[0],), u[1:]
            value = Scalar()
            for word, coeff in self.coproduct_word(v).terms.items():
                left = self.eval_R(first, word[0], _depth + 1)
                if not left:
                    continue
                value = value + coeff * left * self.eval_R(rest, word[1], _depth + 1)
        self._r_cache[key] = value
        return value

    def eval_R_elem(self, u, v):
        value = Scalar()
        for wu, cu in u.terms.items():
            for wv, cv in v.terms.items():
                value = value + cu * cv * self.eval_R(wu[0], wv[0])
        return value

    def eval_R_inverse(self, u, v):
        """Convolution inverse of R: Rbar(u (x) v) = R(S(u) (x) v)."""
        u, v = tuple(u), tuple(v)
        image = self.antipode_word(u)
        value = Scalar()
        for word, coeff in image.terms.items():
            value = value + coeff * self.eval_R(word[0], v)
        return value

    def eval_R_inverse_elem(self, u, v):
        value = Scalar()
        for wu, cu in u.terms.items():
            for wv, cv in v.terms.items():
                value = value + cu * cv * self.eval_R_inverse(wu[0], wv[0])
        return value


class ComoduleAlgebra:
    """A presented algebra with a right coaction of a dqt Hopf algebra,
    extended multiplicatively from the generator table."""

    def __init__(self, presentation, coaction, over):
        self.presentation = presentation
        self.over = over
        sig = (presentation, over.presentation)
        self.coaction_table = GenTable("right_coaction", _normalized(coaction, sig), presentation)
        self._coact_cache = {}

    @property
    def tag(self):
        return self.presentation.tag

    def one(self):
        return self.presentation.one()

    def mul(self, u, v):
        """Product in the presented algebra (normalized concatenation)."""
        return self.presentation.normal_form(u * v)

    def coact_word(self, word):
        cached = self._coact_cache.get(word)
        if cached is None:
            sig = (self.presentation, self.over.presentation)
            cached = NcElement.unit(sig)
            for g in word:
                cached = _normalize_slots(cached * self.coaction_table[g])
            self._coact_cache[word] = cached
        return cached

    def coact(self, element):
        if element.signature != (self.presentation,):
            raise SignatureMismatch(f"element is not a plain {self.tag} element")
        sig = (self.presentation, self.over.presentation)
        return element.map_slot(0, self.coact_word, sig)


class BraidedHopf:
    """A braided Hopf algebra: a comodule algebra with braided coproduct,
    counit and antipode tables.  The braided extension laws themselves are
    evaluated in the braidedops module."""

    def __init__(self, carrier, coproduct, counit, antipode):
        self.carrier = carrier
        p = carrier.presentation
        self.coproduct_table = GenTable("coproduct", _normalized(coproduct, (p, p)), p)
        self.counit_table = GenTable("counit", dict(counit), p)
        self.antipode_table = GenTable("antipode", _normalized(antipode, (p,)), p)

    @property
    def presentation(self):
        return self.carrier.presentation

    @property
    def over(self):
        return self.carrier.over

    @property
    def tag(self):
        return self.carrier.tag


def braiding(V, W, element):
    """Braiding V (x) W -> W (x) V of right comodules over one dqt Hopf
    algebra: coact both legs and contract the two H legs through R."""
    H = _common_hopf(V, W)
    if element.signature != (V.presentation, W.presentation):
        raise SignatureMismatch("element does not live in V (x) W")
    out_sig = (W.presentation, V.presentation)
    terms = {}
    for word, coeff in element.terms.items():
        cv = V.coact_word(word[0])
        cw = W.coact_word(word[1])
        for vword, vcoeff in cv.terms.items():
            for wword, wcoeff in cw.terms.items():
                value = H.eval_R(vword[1], wword[1])
                if not value:
                    continue
                key = (wword[0], vword[0])
                acc = terms.get(key, Scalar()) + coeff * vcoeff * wcoeff * value
                if acc:
                    terms[key] = acc
                else:
                    del terms[key]
    return NcElement(out_sig, terms)


def braiding_inverse(V, W, element):
    """Inverse braiding W (x) V -> V (x) W, built from the convolution
    inverse of R; undoes braiding(V, W, -)."""
    H = _common_hopf(V, W)
    if element.signature != (W.presentation, V.presentation):
        raise SignatureMismatch("element does not live in W (x) V")
    out_sig = (V.presentation, W.presentation)
    terms = {}
    for word, coeff in element.terms.items():
        cw = W.coact_word(word[0])
        cv = V.coact_word(word[1])
        for vword, vcoeff in cv.terms.items():
            for wword, wcoeff in cw.terms.items():
                value = H.eval_R_inverse(vword[1], wword[1])
                if not value:
                    continue
                key = (vword[0], wword[0])
                acc = terms.get(key, Scalar()) + coeff * vcoeff * wcoeff * value
                if acc:
                    terms[key] = acc
                else:
                    del terms[key]
    return NcElement(out_sig, terms)


def induced_action(V, element, h):
    """The right action induced by the coaction: act by coacting and pairing
    the H leg with h through R."""
    H = V.over
    if h.signature != (H.presentation,):
        raise SignatureMismatch("second argument must live in the coacting Hopf algebra")
    terms = {}
    for word, coeff in element.terms.items():
        cv = V.coact_word(word[0])
        for hword, hcoeff in h.terms.items():
            for vword, vcoeff in cv.terms.items():
                value = H.eval_R(vword[1], hword[0])
                if not value:
                    continue
                key = (vword[0],)
                acc = terms.get(key, Scalar()) + coeff * hcoeff * vcoeff * value
                if acc:
                    terms[key] = acc
                else:
                    del terms[key]
    return NcElement((V.presentation,), terms)


def _common_hopf(V, W):
    if V.over is not W.over:
        raise SignatureMismatch(
            f"{V.tag} and {W.tag} are comodules over different Hopf algebras"
        )
    return V.over


def _normalize_slots(element):
    out = element
    for i, slot in enumerate(element.signature):
        out = out.map_slot(i, slot.reduce_word, (slot,))
    return out


def _normalized(entries, signature):
    out = {}
    for gen, value in entries.items():
        out[gen] = _normalize_slots(value) if isinstance(value, NcElement) else value
    return out
