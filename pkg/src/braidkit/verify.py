"""Axiom and property checking suites with machine-readable reports.

Homomorphic identities (coproducts, coactions, antipodes killing relations)
are complete once they hold on generators plus relation kills, so those
checks run at generator level; convolution-type identities (antipode axiom,
pairing laws) get bounded word sweeps instead.  Default bounds: words of
length <= 2 for pairings and kills, <= 3 for the antipode axiom.
"""

import itertools
import json
from dataclasses import dataclass, field

from .errors import VerificationFailed
from .ncpoly import NcElement
from .scalar import ONE, Scalar
from .structuremap import (
    BraidedHopf,
    ComoduleAlgebra,
    DqtHopf,
    HopfAlgebra,
    braiding,
    braiding_inverse,
)
from .braidedops import (
    antipode_product_law,
    braided_coproduct,
    braided_counit,
    braided_antipode,
    coproduct_product_law,
)
from .rewrite import Presentation


@dataclass
class CheckBounds:
    pairing_words: int = 2
    kill_words: int = 2
    antipode_words: int = 3

    @classmethod
    def with_degree(cls, degree):
        if degree is None:
            return cls()
        return cls(pairing_words=degree, kill_words=degree, antipode_words=degree)


@dataclass
class Check:
    suite: str
    check_id: str
    ok: bool
    residual: str

    def line(self):
        status = "pass" if self.ok else "FAIL"
        return f"{self.suite} {self.check_id} {status} residual={self.residual}"


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, suite, check_id, residual):
        ok = _is_zero(residual)
        self.checks.append(Check(suite, check_id, ok, "0" if ok else str(residual)))

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def ok(self):
        return all(check.ok for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.ok]

    def __str__(self):
        lines = [check.line() for check in self.checks]
        lines.append(
            f"summary: {len(self.checks)} checks, {len(self.failures)} failures"
        )
        return "\n".join(lines)

    def to_json(self):
        return json.dumps(
            {
                "ok": self.ok,
                "checks": [
                    {"suite": c.suite, "check": c.check_id, "ok": c.ok,
                     "residual": c.residual}
                    for c in self.checks
                ],
            },
            indent=2,
        )

    def raise_if_failed(self):
        if not self.ok:
            raise VerificationFailed(self)


def _is_zero(residual):
    if isinstance(residual, NcElement):
        return residual.is_zero()
    if isinstance(residual, Scalar):
        return residual.is_zero()
    raise TypeError(f"residual of unexpected type {type(residual)!r}")


def words_up_to(gens, length):
    """All words over gens of length <= length, in deterministic order."""
    out = [()]
    for n in range(1, length + 1):
        out.extend(itertools.product(gens, repeat=n))
    return out


def _wstr(word):
    return "*".join(word) if word else "1"


def _relations(presentation):
    return list(presentation.relations) + list(presentation._implied)


# ---------------------------------------------------------------------------
# ordinary Hopf algebras
# ---------------------------------------------------------------------------

def verify_hopf(H, bounds=None):
    bounds = bounds or CheckBounds()
    p = H.presentation
    suite = f"hopf:{H.tag}"
    report = Report()
    two = (p, p)
    for i, relation in enumerate(_relations(p)):
        image = relation.map_slot(0, H.coproduct_word, two)
        report.add(suite, f"coproduct-kills[{i}]", p.normal_form(image))
        report.add(suite, f"counit-kills[{i}]", H.counit(relation))
        image = relation.map_slot(0, H.antipode_word, (p,))
        report.add(suite, f"antipode-kills[{i}]", p.normal_form(image))
    for g in p.gens:
        cop = H.coproduct_word((g,))
        left = cop.map_slot(0, H.coproduct_word, two)
        right = cop.map_slot(1, H.coproduct_word, two)
        report.add(suite, f"coassoc[{g}]", left - right)
        report.add(
            suite, f"counit-left[{g}]",
            _contract_counit(H, cop, 0) - p.gen(g),
        )
        report.add(
            suite, f"counit-right[{g}]",
            _contract_counit(H, cop, 1) - p.gen(g),
        )
    for word in words_up_to(p.gens, bounds.antipode_words):
        cop = H.coproduct_word(word)
        eps = H.counit_word(word) * p.one()
        left = cop.map_slot(0, H.antipode_word, (p,)).regroup([2])
        right = cop.map_slot(1, H.antipode_word, (p,)).regroup([2])
        report.add(suite, f"antipode-left[{_wstr(word)}]", p.normal_form(left) - eps)
        report.add(suite, f"antipode-right[{_wstr(word)}]", p.normal_form(right) - eps)
    return report


def _contract_counit(H, element, slot):
    p = H.presentation
    total = NcElement.zero((p,))
    for word, coeff in element.terms.items():
        value = coeff * H.counit_word(word[slot])
        if value:
            keep = word[1 - slot]
            total = total + value * NcElement.from_word((p,), (keep,))
    return total


# ---------------------------------------------------------------------------
# dual quasitriangular structures
# ---------------------------------------------------------------------------

def verify_dqt(H, bounds=None):
    bounds = bounds or CheckBounds()
    p = H.presentation
    suite = f"dqt:{H.tag}"
    report = Report()
    hs = words_up_to(p.gens, bounds.pairing_words)
    short = words_up_to(p.gens, 1)

    for h in hs:
        cop = H.coproduct_word(h)
        for g in short:
            for f in short:
                lhs = H.eval_R(h, g + f)
                rhs = Scalar()
                for (h1, h2), coeff in cop.terms.items():
                    rhs = rhs + coeff * H.eval_R(h1, f) * H.eval_R(h2, g)
                report.add(
                    suite, f"law1[{_wstr(h)}|{_wstr(g)},{_wstr(f)}]", lhs - rhs
                )
                lhs = H.eval_R(g + f, h)
                rhs = Scalar()
                for (h1, h2), coeff in cop.terms.items():
                    rhs = rhs + coeff * H.eval_R(g, h1) * H.eval_R(f, h2)
                report.add(
                    suite, f"law2[{_wstr(g)},{_wstr(f)}|{_wstr(h)}]", lhs - rhs
                )

    for h in hs:
        hcop = H.coproduct_word(h)
        for g in hs:
            gcop = H.coproduct_word(g)
            lhs = NcElement.zero((p,))
            rhs = NcElement.zero((p,))
            for (g1, g2), cg in gcop.terms.items():
                for (h1, h2), ch in hcop.terms.items():
                    coeff = cg * ch
                    value = H.eval_R(h2, g2)
                    if value:
                        lhs = lhs + (coeff * value) * p.reduce_word(g1 + h1)
                    value = H.eval_R(h1, g1)
                    if value:
                        rhs = rhs + (coeff * value) * p.reduce_word(h2 + g2)
            report.add(suite, f"law3[{_wstr(h)}|{_wstr(g)}]", lhs - rhs)

    kill_words = words_up_to(p.gens, bounds.kill_words)
    for i, relation in enumerate(_relations(p)):
        for w in kill_words:
            wel = NcElement.from_word((p,), (w,))
            report.add(
                suite, f"kills-left[{i}|{_wstr(w)}]", H.eval_R_elem(relation, wel)
            )
            report.add(
                suite, f"kills-right[{i}|{_wstr(w)}]", H.eval_R_elem(wel, relation)
            )

    for g in p.gens:
        gcop = H.coproduct_word((g,))
        for h in p.gens:
            hcop = H.coproduct_word((h,))
            eps = H.counit_word((g,)) * H.counit_word((h,))
            conv_left = Scalar()
            conv_right = Scalar()
            for (g1, g2), cg in gcop.terms.items():
                for (h1, h2), ch in hcop.terms.items():
                    coeff = cg * ch
                    conv_left = conv_left + coeff * H.eval_R_inverse(g1, h1) * H.eval_R(g2, h2)
                    conv_right = conv_right + coeff * H.eval_R(g1, h1) * H.eval_R_inverse(g2, h2)
            report.add(suite, f"convolution-left[{g},{h}]", conv_left - eps)
            report.add(suite, f"convolution-right[{g},{h}]", conv_right - eps)
    return report


# ---------------------------------------------------------------------------
# comodule algebras
# ---------------------------------------------------------------------------

def verify_comodule(V):
    p = V.presentation
    H = V.over
    suite = f"comodule:{V.tag}"
    report = Report()
    sig = (p, H.presentation)
    for i, relation in enumerate(_relations(p)):
        image = relation.map_slot(0, V.coact_word, sig)
        report.add(suite, f"coaction-kills[{i}]", _normalize(image))
    for g in p.gens:
        co = V.coact_word((g,))
        counit_side = NcElement.zero((p,))
        for (b, h), coeff in co.terms.items():
            value = coeff * H.counit_word(h)
            if value:
                counit_side = counit_side + value * NcElement.from_word((p,), (b,))
        report.add(suite, f"coaction-counit[{g}]", counit_side - p.gen(g))
        left = co.map_slot(0, V.coact_word, sig)
        right = co.map_slot(1, H.coproduct_word, (H.presentation, H.presentation))
        report.add(suite, f"coaction-coassoc[{g}]", left - right)
    return report


def braid_relation_failures(V, triples=None):
    """Residuals of the braid relation on V (x) V (x) V generator triples."""
    p = V.presentation
    gens = triples or list(itertools.product(p.gens, repeat=3))
    failures = []
    for u, v, w in gens:
        el = NcElement.from_word((p, p, p), ((u,), (v,), (w,)))
        lhs = _braid_at(V, _braid_at(V, _braid_at(V, el, 0), 1), 0)
        rhs = _braid_at(V, _braid_at(V, _braid_at(V, el, 1), 0), 1)
        residual = lhs - rhs
        if not residual.is_zero():
            failures.append(((u, v, w), residual))
    return failures


def _braid_at(V, element, i):
    """Apply the braiding to slots (i, i+1) of a multi-slot element over V."""
    p = V.presentation
    total = NcElement.zero(element.signature)
    for word, coeff in element.terms.items():
        pair = NcElement.from_word((p, p), (word[i], word[i + 1]))
        for pword, pcoeff in braiding(V, V, pair).terms.items():
            new_word = word[:i] + pword + word[i + 2:]
            total = total + (coeff * pcoeff) * NcElement(element.signature, {new_word: ONE})
    return total


# ---------------------------------------------------------------------------
# braided Hopf algebras
# ---------------------------------------------------------------------------

def verify_braided_hopf(B, bounds=None):
    bounds = bounds or CheckBounds()
    p = B.presentation
    suite = f"braided:{B.tag}"
    report = verify_comodule(B.carrier)
    two = (p, p)
    for i, relation in enumerate(_relations(p)):
        report.add(
            suite, f"coproduct-kills[{i}]", _normalize(braided_coproduct(B, relation))
        )
        report.add(suite, f"counit-kills[{i}]", braided_counit(B, relation))
        report.add(
            suite, f"antipode-kills[{i}]", p.normal_form(braided_antipode(B, relation))
        )
    for g in p.gens:
        cop = braided_coproduct(B, p.gen(g))
        left = cop.map_slot(0, lambda w: _bcop_word(B, w), two)
        right = cop.map_slot(1, lambda w: _bcop_word(B, w), two)
        report.add(suite, f"coassoc[{g}]", left - right)
        report.add(suite, f"counit-left[{g}]", _contract_braided_counit(B, cop, 0) - p.gen(g))
        report.add(suite, f"counit-right[{g}]", _contract_braided_counit(B, cop, 1) - p.gen(g))
    for word in words_up_to(p.gens, bounds.antipode_words):
        cop = _bcop_word(B, word)
        eps = braided_counit(B, NcElement.from_word((p,), (word,))) * p.one()
        left = cop.map_slot(0, lambda w: _banti_word(B, w), (p,)).regroup([2])
        right = cop.map_slot(1, lambda w: _banti_word(B, w), (p,)).regroup([2])
        report.add(suite, f"antipode-left[{_wstr(word)}]", p.normal_form(left) - eps)
        report.add(suite, f"antipode-right[{_wstr(word)}]", p.normal_form(right) - eps)
    for g in p.gens:
        for h in p.gens:
            got = _bcop_word(B, (g, h))
            report.add(
                suite, f"coproduct-product-law[{g},{h}]",
                got - coproduct_product_law(B, g, h),
            )
            got = _banti_word(B, (g, h))
            report.add(
                suite, f"antipode-product-law[{g},{h}]",
                got - antipode_product_law(B, g, h),
            )
    return report


def _bcop_word(B, word):
    return braided_coproduct(B, NcElement.from_word((B.presentation,), (word,)))


def _banti_word(B, word):
    return braided_antipode(B, NcElement.from_word((B.presentation,), (word,)))


def _contract_braided_counit(B, element, slot):
    p = B.presentation
    total = NcElement.zero((p,))
    for word, coeff in element.terms.items():
        acc = coeff
        for g in word[slot]:
            acc = acc * B.counit_table[g]
        if acc:
            total = total + acc * NcElement.from_word((p,), (word[1 - slot],))
    return total


# ---------------------------------------------------------------------------
# crossed modules
# ---------------------------------------------------------------------------

def verify_crossed_module(B, action):
    from .constructions import (
        action_relation_failures,
        crossed_module_failures,
        module_coalgebra_failures,
    )

    suite = f"crossed:{B.tag}"
    report = Report()
    for (label, residual) in crossed_module_failures(B.carrier, action):
        report.add(suite, f"compat{list(label)}", residual)
    if not report.checks:
        report.add(suite, "compat[all-generator-pairs]", NcElement.zero((B.presentation,)))
    failures = module_coalgebra_failures(B, action)
    report_ok = not failures
    for (label, residual) in failures:
        report.add(suite, f"module-coalgebra{list(label)}", residual)
    if report_ok:
        report.add(suite, "module-coalgebra[all-generator-pairs]",
                   NcElement.zero((B.presentation,)))
    failures = action_relation_failures(B.presentation, action)
    for (label, residual) in failures:
        report.add(suite, f"action-kills{list(label)}", residual)
    if not failures:
        report.add(suite, "action-kills[all-relations]", NcElement.zero((B.presentation,)))
    return report


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def verify_bundle(bundle, bounds=None):
    if isinstance(bundle, DqtHopf):
        report = verify_hopf(bundle, bounds)
        report.extend(verify_dqt(bundle, bounds))
        return report
    if isinstance(bundle, BraidedHopf):
        return verify_braided_hopf(bundle, bounds)
    if isinstance(bundle, HopfAlgebra):
        return verify_hopf(bundle, bounds)
    if isinstance(bundle, ComoduleAlgebra):
        return verify_comodule(bundle)
    if isinstance(bundle, Presentation):
        return Report()
    raise TypeError(f"cannot verify object of type {type(bundle).__name__}")


def _normalize(element):
    out = element
    for i, slot in enumerate(element.signature):
        out = out.map_slot(i, slot.reduce_word, (slot,))
    return out
