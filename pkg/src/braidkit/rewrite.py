"""Presented algebras: oriented rewrite rules, normal forms, completion.

Relations are oriented into rules lhs -> rhs under the degree-lexicographic
term order (generator precedence = declaration order), so every rule strictly
decreases the leading word.  complete() resolves all critical pairs whose
overlap word fits inside the degree bound, adjoining oriented rules until a
fixpoint; after that, equality of normal forms decides equality in the
algebra up to that bound, and normal_form is strategy-independent.
"""

from dataclasses import dataclass, field

from .errors import (
    CompletionBudgetExceeded,
    NonTerminating,
    SignatureMismatch,
    UnorientablePair,
)
from .ncpoly import Alphabet, NcElement
from .scalar import ONE, Scalar

DEFAULT_STEP_BUDGET = 10 ** 6
DEFAULT_DEGREE_BOUND = 4
MAX_RULES = 500


@dataclass
class RewriteRule:
    """Oriented rule lhs -> rhs; every rhs word is strictly below lhs."""

    lhs: tuple
    rhs: NcElement

    def __str__(self):
        return f"{'*'.join(self.lhs)} -> {self.rhs}"


@dataclass
class ConfluenceReport:
    """Outcome of a completion run, printable as a stable golden file."""

    tag: str
    degree_bound: int
    initial_rules: int
    passes: int = 0
    pairs_checked: int = 0
    rules_added: list = field(default_factory=list)
    final_rules: list = field(default_factory=list)
    confluent: bool = False

    def __str__(self):
        lines = [
            f"confluence report for {self.tag}",
            f"degree bound: {self.degree_bound}",
            f"initial rules: {self.initial_rules}",
            f"passes: {self.passes}",
            f"critical pairs checked: {self.pairs_checked}",
            f"rules added during completion: {len(self.rules_added)}",
        ]
        for text in self.rules_added:
            lines.append(f"  + {text}")
        lines.append(f"final rules: {len(self.final_rules)}")
        for text in self.final_rules:
            lines.append(f"  {text}")
        lines.append(f"confluent to degree {self.degree_bound}: {'yes' if self.confluent else 'no'}")
        return "\n".join(lines) + "\n"


class Presentation(Alphabet):
    """An associative unital algebra given by generators and oriented rules.

    Construction: declare generators (and inverse pairs), add relations as
    equal pairs of single-slot elements, then call complete().  After
    completion the presentation is frozen; normal_form results are cached
    per word and safe to share across threads.
    """

    def __init__(self, tag, gens, degree_bound=DEFAULT_DEGREE_BOUND,
                 step_budget=DEFAULT_STEP_BUDGET):
        super().__init__(tag, gens)
        self.degree_bound = degree_bound
        self.step_budget = step_budget
        self.rules = []
        self.relations = []          # declared relation elements (lhs - rhs)
        self.inverse_pairs = []      # (g, ginv); unit rules adjoined automatically
        self._implied = []           # g*ginv - 1, ginv*g - 1 from inverse pairs
        self.report = None
        self._frozen = False
        self._nf_cache = {}

    # -- element constructors -------------------------------------------------

    def zero(self):
        return NcElement.zero((self,))

    def one(self):
        return NcElement.unit((self,))

    def gen(self, name):
        self.check_word((name,))
        return NcElement((self,), {((name,),): ONE})

    def word(self, *names):
        self.check_word(names)
        return NcElement((self,), {(tuple(names),): ONE})

    def element(self, terms):
        """Build an element from {word-tuple: Scalar} over this algebra."""
        return NcElement((self,), {(tuple(w),): c for w, c in terms.items()})

    # -- building the presentation ----------------------------------------------

    def add_relation(self, lhs, rhs):
        """Record lhs = rhs (single-slot elements over this algebra)."""
        if self._frozen:
            raise RuntimeError(f"{self.tag} is frozen; relations must precede complete()")
        diff = lhs - rhs
        self.relations.append(diff)

    def add_inverse_pair(self, gen, inv):
        """Declare inv as the two-sided inverse of gen (adjoins unit rules)."""
        if self._frozen:
            raise RuntimeError(f"{self.tag} is frozen")
        self.check_word((gen, inv))
        self.inverse_pairs.append((gen, inv))
        self._implied.append(self.word(gen, inv) - self.one())
        self._implied.append(self.word(inv, gen) - self.one())

    # -- term order helpers --------------------------------------------------------

    def _leading(self, element):
        """Leading word of a nonzero single-slot element (max in deg-lex)."""
        return max((word[0] for word in element.terms), key=self.word_key)

    def _orient(self, element):
        """Turn a relation element (== 0) into a rule on its leading word."""
        if element.is_zero():
            return None
        lead = self._leading(element)
        coeff = element.terms[(lead,)]
        try:
            inv = coeff.inv()
        except Exception as exc:
            raise UnorientablePair(
                f"cannot orient relation with non-unit leading coefficient {coeff}"
            ) from exc
        rest = element - NcElement((self,), {(lead,): coeff})
        rhs = (-inv) * rest
        for word in rhs.terms:
            if self.word_key(word[0]) >= self.word_key(lead):
                raise UnorientablePair(f"rhs word {word[0]} not below lhs {lead}")
        return RewriteRule(lhs=lead, rhs=rhs)

    # -- single-slot rewriting -------------------------------------------------------

    def _find_redex(self, word, longest=False):
        """Leftmost redex; at a given position prefer the shortest matching
        lhs unless longest=True (the two strategies must agree after
        completion, which the test suite checks)."""
        n = len(word)
        for pos in range(n):
            found = None
            for rule in self.rules:
                k = len(rule.lhs)
                if pos + k <= n and word[pos:pos + k] == rule.lhs:
                    if found is None:
                        found = rule
                    elif longest and len(rule.lhs) > len(found.lhs):
                        found = rule
                    elif not longest and len(rule.lhs) < len(found.lhs):
                        found = rule
            if found is not None:
                return pos, found
        return None

    def reduce_word(self, word, longest=False):
        """Normal form of a single word as an NcElement; cached when frozen."""
        word = tuple(word)
        cache = self._nf_cache if (self._frozen and not longest) else None
        if cache is not None:
            hit = cache.get(word)
            if hit is not None:
                return hit
        pending = {word: ONE}
        done = {}
        steps = 0
        while pending:
            w, coeff = pending.popitem()
            hit = cache.get(w) if cache is not None else None
            if hit is not None:
                for rw, rc in hit.terms.items():
                    _accumulate(done, rw[0], coeff * rc)
                continue
            redex = self._find_redex(w, longest=longest)
            if redex is None:
                _accumulate(done, w, coeff)
                continue
            pos, rule = redex
            steps += 1
            if steps > self.step_budget:
                raise NonTerminating(
                    f"rewriting exceeded {self.step_budget} steps in {self.tag}"
                )
            prefix, suffix = w[:pos], w[pos + len(rule.lhs):]
            for rword, rcoeff in rule.rhs.terms.items():
                _accumulate(pending, prefix + rword[0] + suffix, coeff * rcoeff)
        result = NcElement((self,), {(w,): c for w, c in done.items()})
        if cache is not None:
            cache[word] = result
        return result

    def normal_form(self, element, longest=False):
        """Normal form of an element; every slot must be over this algebra."""
        for alpha in element.signature:
            if alpha != self:
                raise SignatureMismatch(
                    f"normal_form({self.tag}) applied to slot over {alpha.tag}"
                )
        out = element
        for i in range(len(element.signature)):
            out = out.map_slot(i, lambda w: self.reduce_word(w, longest=longest), (self,))
        return out

    def is_zero(self, element):
        return self.normal_form(element).is_zero()

    # -- completion ----------------------------------------------------------------

    def complete(self):
        """Resolve critical pairs up to the degree bound; freeze on success."""
        declared = self.relations + self._implied
        report = ConfluenceReport(
            tag=self.tag,
            degree_bound=self.degree_bound,
            initial_rules=len(declared),
        )
        self.rules = []
        for relation in sorted(declared, key=self._relation_key):
            self._adjoin(relation, report, record=False)
        while True:
            report.passes += 1
            new_relation = self._find_unresolved_pair(report)
            if new_relation is None:
                break
            self._adjoin(new_relation, report, record=True)
            if len(self.rules) > MAX_RULES:
                raise CompletionBudgetExceeded(
                    f"completion of {self.tag} exceeded {MAX_RULES} rules"
                )
            if report.passes > MAX_RULES:
                raise CompletionBudgetExceeded(f"completion of {self.tag} did not settle")
        report.final_rules = [str(rule) for rule in self.rules]
        report.confluent = True
        self.report = report
        self._frozen = True
        self._nf_cache = {}
        return report

    def _relation_key(self, relation):
        if relation.is_zero():
            return (0, ())
        return self.word_key(self._leading(relation))

    def _adjoin(self, relation, report, record):
        """Normalize a relation against current rules, orient, interreduce."""
        reduced = self.normal_form_unfrozen(relation)
        rule = self._orient(reduced)
        if rule is None:
            return
        self.rules.append(rule)
        self.rules.sort(key=lambda r: self.word_key(r.lhs))
        if record:
            report.rules_added.append(str(rule))
        self._interreduce(report, record)

    def normal_form_unfrozen(self, element):
        saved = self._frozen
        self._frozen = False
        try:
            return self.normal_form(element)
        finally:
            self._frozen = saved

    def _interreduce(self, report, record):
        changed = True
        while changed:
            changed = False
            for rule in list(self.rules):
                others = [r for r in self.rules if r is not rule]
                if _reducible_by(rule.lhs, others):
                    self.rules.remove(rule)
                    relation = NcElement((self,), {(rule.lhs,): ONE}) - rule.rhs
                    reduced = self.normal_form_unfrozen(relation)
                    new_rule = self._orient(reduced)
                    if new_rule is not None:
                        self.rules.append(new_rule)
                        self.rules.sort(key=lambda r: self.word_key(r.lhs))
                        if record:
                            report.rules_added.append(str(new_rule))
                    changed = True
                    break
                rhs_nf = self.normal_form_unfrozen(rule.rhs)
                if rhs_nf != rule.rhs:
                    rule.rhs = rhs_nf
                    changed = True

    def _find_unresolved_pair(self, report):
        """First critical pair (deterministic order) whose two reducts differ."""
        rules = list(self.rules)
        for r1 in rules:
            for r2 in rules:
                for overlap in range(1, min(len(r1.lhs), len(r2.lhs))):
                    if r1.lhs[len(r1.lhs) - overlap:] != r2.lhs[:overlap]:
                        continue
                    word = r1.lhs + r2.lhs[overlap:]
                    if len(word) > self.degree_bound:
                        continue
                    report.pairs_checked += 1
                    left = self._apply_at(word, 0, r1)
                    right = self._apply_at(word, len(r1.lhs) - overlap, r2)
                    diff = self.normal_form_unfrozen(left - right)
                    if not diff.is_zero():
                        return diff
        return None

    def _apply_at(self, word, pos, rule):
        prefix, suffix = word[:pos], word[pos + len(rule.lhs):]
        terms = {}
        for rword, rcoeff in rule.rhs.terms.items():
            key = (prefix + rword[0] + suffix,)
            terms[key] = terms.get(key, Scalar()) + rcoeff
        return NcElement((self,), terms)


def _reducible_by(word, rules):
    n = len(word)
    for rule in rules:
        k = len(rule.lhs)
        for pos in range(n - k + 1):
            if word[pos:pos + k] == rule.lhs:
                return True
    return False


def _accumulate(mapping, key, coeff):
    acc = mapping.get(key, Scalar()) + coeff
    if acc:
        mapping[key] = acc
    else:
        mapping.pop(key, None)


def normalize(element):
    """Normalize every slot by its own presentation (signature slots must be
    Presentation instances)."""
    out = element
    for i, slot in enumerate(element.signature):
        out = out.map_slot(i, slot.reduce_word, (slot,))
    return out
