"""Definition-file grammar: parsing and canonical export.

A definition file describes one algebra in line-oriented sections:

    [meta]                      name, kind, degree_bound
    [generators]                generator names; `inverse g ginv` lines
    [relations]                 lines `lhs = rhs` in element syntax
    [coproduct] [counit] [antipode]   generator tables
    [coaction over=NAME]        right coaction table
    [R]                         lines `g,h = scalar`

Element syntax: `x*y (x) a + q^2 * 1 (x) b`, with `(x)` separating tensor
slots, `1` the empty word, and scalars as sums of terms c*q^n (parenthesised
when they multiply a word).  See FORMAT.md; `braidkit export` emits this
format, and export -> parse -> export is byte-identical.
"""

from fractions import Fraction

from .errors import ParseError, UnknownEntry, UnknownGenerator
from .ncpoly import NcElement
from .rewrite import Presentation
from .scalar import ONE, Scalar
from .structuremap import BraidedHopf, ComoduleAlgebra, DqtHopf, HopfAlgebra

KINDS = ("presentation", "hopf", "dqt_hopf", "comodule_algebra", "braided_hopf")


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------

class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self):
        return f"{self.kind}({self.value!r})"


def _tokenize(text, line=1):
    tokens = []
    i, n, col = 0, len(text), 1
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            col += 1
            continue
        if text.startswith("(x)", i):
            tokens.append(_Token("TENSOR", "(x)", line, col))
            i += 3
            col += 3
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        simple = {"*": "STAR", "+": "PLUS", "-": "MINUS", "^": "CARET",
                  "/": "SLASH", "(": "LPAREN", ")": "RPAREN", ",": "COMMA",
                  "=": "EQUALS"}
        if ch in simple:
            tokens.append(_Token(simple[ch], ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("END", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.value!r}", tok.line, tok.col)
        return tok

    def fail(self, message):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    # -- scalars ------------------------------------------------------------

    def scalar_expr(self):
        value = self.scalar_term()
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.next().kind
            term = self.scalar_term()
            value = value + term if op == "PLUS" else value - term
        return value

    def scalar_term(self):
        sign = 1
        while self.peek().kind in ("PLUS", "MINUS"):
            if self.next().kind == "MINUS":
                sign = -sign
        value = self.scalar_factor()
        while self.peek().kind == "STAR":
            self.next()
            value = value * self.scalar_factor()
        return Scalar.rational(sign) * value

    def scalar_factor(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            num = tok.value
            if self.peek().kind == "SLASH":
                self.next()
                den = self.expect("INT").value
                return Scalar.rational(Fraction(num, den))
            return Scalar.rational(num)
        if tok.kind == "NAME" and tok.value == "q":
            self.next()
            return Scalar.q_power(self._optional_exponent())
        if tok.kind == "LPAREN":
            self.next()
            value = self.scalar_expr()
            self.expect("RPAREN")
            return value
        self.fail(f"expected a scalar, found {tok.value!r}")

    def _optional_exponent(self):
        if self.peek().kind != "CARET":
            return 1
        self.next()
        sign = 1
        if self.peek().kind == "MINUS":
            self.next()
            sign = -1
        return sign * self.expect("INT").value

    # -- elements -------------------------------------------------------------

    def element(self, signature):
        total = NcElement.zero(signature)
        total = total + self.element_term(signature)
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.next().kind
            term = self.element_term(signature)
            total = total + term if op == "PLUS" else total - term
        return total

    def element_term(self, signature):
        sign = 1
        while self.peek().kind in ("PLUS", "MINUS"):
            if self.next().kind == "MINUS":
                sign = -sign
        coeff = Scalar.rational(sign)
        slots = []
        word, coeff = self.slot_part(signature, len(slots), coeff)
        slots.append(word)
        while self.peek().kind == "TENSOR":
            self.next()
            if len(slots) >= len(signature):
                self.fail(f"too many tensor slots (signature has {len(signature)})")
            word, coeff = self.slot_part(signature, len(slots), coeff)
            slots.append(word)
        if len(slots) == 1 and slots[0] == () and len(signature) != 1:
            # a pure scalar term is a multiple of the unit in any signature
            slots = [() for _ in signature]
        if len(slots) != len(signature):
            self.fail(f"expected {len(signature)} tensor slots, found {len(slots)}")
        return coeff * NcElement.from_word(signature, slots)

    def slot_part(self, signature, index, coeff):
        """One slot: '*'-joined factors; scalars fold into the coefficient,
        names append to the word, INT 1 marks the empty word."""
        word = []
        while True:
            tok = self.peek()
            if tok.kind == "NAME" and tok.value != "q":
                self.next()
                if index >= len(signature):
                    raise ParseError("too many tensor slots", tok.line, tok.col)
                if tok.value not in signature[index].gens:
                    raise UnknownGenerator(
                        f"{tok.value!r} is not a generator of {signature[index].tag}"
                        f" (line {tok.line}, column {tok.col})"
                    )
                word.append(tok.value)
            elif tok.kind == "INT" and tok.value == 1 and self._plain_one():
                self.next()
            else:
                coeff = coeff * self.scalar_factor()
            if self.peek().kind != "STAR":
                return tuple(word), coeff
            self.next()

    def _plain_one(self):
        return self.tokens[self.pos + 1].kind not in ("SLASH", "CARET")


def parse_scalar(text, line=1):
    parser = _Parser(_tokenize(text, line))
    value = parser.scalar_expr()
    parser.expect("END")
    return value


def parse_element(text, signature, line=1):
    parser = _Parser(_tokenize(text, line))
    value = parser.element(tuple(signature))
    parser.expect("END")
    return value


# ---------------------------------------------------------------------------
# definition files
# ---------------------------------------------------------------------------

def parse_definition(text, resolver=None, verify=True):
    """Parse one definition file into a verified bundle.

    resolver maps an `over=` name to a DqtHopf (the catalog's load, say).
    Returns (name, bundle) where the bundle kind follows [meta] kind.
    """
    sections = _split_sections(text)
    meta = dict(_key_values(sections.pop("meta", [])))
    name = meta.get("name")
    if not name:
        raise ParseError("missing `name = ...` in [meta] section")
    kind = meta.get("kind", "presentation")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r} in [meta]")
    degree_bound = int(meta.get("degree_bound", 4))

    gen_lines = sections.pop("generators", None)
    if not gen_lines:
        raise ParseError("missing [generators] section")
    gens, inverses = [], []
    for line_no, line in gen_lines:
        parts = line.split()
        if parts[0] == "inverse":
            if len(parts) != 3:
                raise ParseError("inverse lines read `inverse g ginv`", line_no)
            inverses.append((parts[1], parts[2]))
        else:
            gens.extend(parts)
    presentation = Presentation(name, gens, degree_bound=degree_bound)
    for g, ginv in inverses:
        presentation.add_inverse_pair(g, ginv)
    for line_no, line in sections.pop("relations", []):
        lhs_text, rhs_text = _split_equals(line, line_no)
        lhs = parse_element(lhs_text, (presentation,), line_no)
        rhs = parse_element(rhs_text, (presentation,), line_no)
        presentation.add_relation(lhs, rhs)
    presentation.complete()

    coaction_section = None
    over = None
    for key in list(sections):
        if key == "coaction" or key.startswith("coaction "):
            over_name = _coaction_over(key)
            if resolver is None:
                raise ParseError(f"no resolver available for `over={over_name}`")
            over = resolver(over_name)
            coaction_section = sections.pop(key)

    bundle = _assemble(kind, presentation, sections, over, coaction_section)
    if sections:
        raise ParseError(f"unused sections: {sorted(sections)}")
    if verify and kind != "presentation":
        from . import verify as verify_mod

        report = verify_mod.verify_bundle(bundle)
        report.raise_if_failed()
    return name, bundle


def _assemble(kind, presentation, sections, over, coaction_section):
    if kind == "presentation":
        return presentation

    def table(section_name, signature):
        lines = sections.pop(section_name, None)
        if lines is None:
            raise ParseError(f"kind {kind!r} requires a [{section_name}] section")
        entries = {}
        for line_no, line in lines:
            lhs, rhs = _split_equals(line, line_no)
            gen = lhs.strip()
            if gen not in presentation.gens:
                raise UnknownGenerator(f"{gen!r} is not a generator (line {line_no})")
            entries[gen] = parse_element(rhs, signature, line_no)
        return entries

    def counit_table():
        lines = sections.pop("counit", None)
        if lines is None:
            raise ParseError(f"kind {kind!r} requires a [counit] section")
        entries = {}
        for line_no, line in lines:
            lhs, rhs = _split_equals(line, line_no)
            entries[lhs.strip()] = parse_scalar(rhs, line_no)
        return entries

    if kind in ("hopf", "dqt_hopf"):
        cop = table("coproduct", (presentation, presentation))
        cou = counit_table()
        anti = table("antipode", (presentation,))
        if kind == "hopf":
            return HopfAlgebra(presentation, cop, cou, anti)
        r_lines = sections.pop("R", None)
        if r_lines is None:
            raise ParseError("kind 'dqt_hopf' requires an [R] section")
        r_entries = {}
        for line_no, line in r_lines:
            lhs, rhs = _split_equals(line, line_no)
            names = [part.strip() for part in lhs.split(",")]
            if len(names) != 2:
                raise ParseError("R lines read `g,h = scalar`", line_no)
            for gen in names:
                if gen not in presentation.gens:
                    raise UnknownGenerator(f"{gen!r} is not a generator (line {line_no})")
            r_entries[tuple(names)] = parse_scalar(rhs, line_no)
        return DqtHopf(presentation, cop, cou, anti, r_entries)

    if over is None or coaction_section is None:
        raise ParseError(f"kind {kind!r} requires a [coaction over=NAME] section")
    coaction = {}
    for line_no, line in coaction_section:
        lhs, rhs = _split_equals(line, line_no)
        gen = lhs.strip()
        if gen not in presentation.gens:
            raise UnknownGenerator(f"{gen!r} is not a generator (line {line_no})")
        coaction[gen] = parse_element(rhs, (presentation, over.presentation), line_no)
    carrier = ComoduleAlgebra(presentation, coaction, over)
    if kind == "comodule_algebra":
        return carrier
    cop = table("coproduct", (presentation, presentation))
    cou = counit_table()
    anti = table("antipode", (presentation,))
    return BraidedHopf(carrier, cop, cou, anti)


def _split_sections(text):
    sections = {}
    current = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError("unterminated section header", line_no)
            header = line[1:-1].strip()
            if header in sections:
                raise ParseError(f"duplicate section [{header}]", line_no)
            sections[header] = []
            current = sections[header]
            continue
        if current is None:
            raise ParseError("content before the first section header", line_no)
        current.append((line_no, line))
    return sections


def _key_values(lines):
    for line_no, line in lines:
        key, value = _split_equals(line, line_no)
        yield key.strip(), value.strip()


def _split_equals(line, line_no):
    if "=" not in line:
        raise ParseError("expected `lhs = rhs`", line_no)
    lhs, rhs = line.split("=", 1)
    return lhs, rhs


def _coaction_over(header):
    rest = header[len("coaction"):].strip()
    if not rest.startswith("over="):
        raise ParseError("coaction section header reads [coaction over=NAME]")
    return rest[len("over="):].strip()


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def export_definition(name, bundle):
    """Canonical definition-file text for a bundle (stable across runs)."""
    if isinstance(bundle, BraidedHopf):
        kind = "braided_hopf"
        presentation = bundle.presentation
    elif isinstance(bundle, ComoduleAlgebra):
        kind = "comodule_algebra"
        presentation = bundle.presentation
    elif isinstance(bundle, DqtHopf):
        kind = "dqt_hopf"
        presentation = bundle.presentation
    elif isinstance(bundle, HopfAlgebra):
        kind = "hopf"
        presentation = bundle.presentation
    elif isinstance(bundle, Presentation):
        kind = "presentation"
        presentation = bundle
    else:
        raise UnknownEntry(f"cannot export object of type {type(bundle).__name__}")

    lines = ["[meta]", f"name = {name}", f"kind = {kind}",
             f"degree_bound = {presentation.degree_bound}", ""]
    lines.append("[generators]")
    lines.append(" ".join(presentation.gens))
    for g, ginv in presentation.inverse_pairs:
        lines.append(f"inverse {g} {ginv}")
    lines.append("")
    lines.append("[relations]")
    for relation in sorted(presentation.relations, key=presentation._relation_key):
        lines.append(_relation_str(presentation, relation))
    lines.append("")

    def emit_table(header, table, formatter=str):
        lines.append(header)
        for g in presentation.gens:
            lines.append(f"{g} = {formatter(table[g])}")
        lines.append("")

    if kind in ("hopf", "dqt_hopf"):
        emit_table("[coproduct]", bundle.coproduct_table)
        emit_table("[counit]", bundle.counit_table)
        emit_table("[antipode]", bundle.antipode_table)
        if kind == "dqt_hopf":
            lines.append("[R]")
            for g in presentation.gens:
                for h in presentation.gens:
                    lines.append(f"{g},{h} = {bundle.r_table[(g, h)]}")
            lines.append("")
    elif kind in ("comodule_algebra", "braided_hopf"):
        carrier = bundle.carrier if kind == "braided_hopf" else bundle
        lines.append(f"[coaction over={carrier.over.tag}]")
        for g in presentation.gens:
            lines.append(f"{g} = {carrier.coaction_table[g]}")
        lines.append("")
        if kind == "braided_hopf":
            emit_table("[coproduct]", bundle.coproduct_table)
            emit_table("[counit]", bundle.counit_table)
            emit_table("[antipode]", bundle.antipode_table)
    return "\n".join(lines)


def _relation_str(presentation, relation):
    # orient the declared relation as stored, without normalizing it away
    # against the completed rules
    rule = presentation._orient(relation)
    if rule is None:
        return "0 = 0"
    return f"{'*'.join(rule.lhs)} = {rule.rhs}"
