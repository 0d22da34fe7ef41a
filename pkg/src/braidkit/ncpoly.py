"""Tensor-graded noncommutative polynomials over named generators.

An NcElement is a finite linear combination of tensor words.  A tensor word
has one slot per tensor factor; each slot holds a word (tuple of generator
names) over the alphabet declared for that slot.  Elements of B, B(x)B,
H(x)B(x)H(x)B and so on all live here; rewriting to normal form is the job
of the rewrite module.
"""

from .errors import BadGrouping, SignatureMismatch, UnknownGenerator
from .scalar import ONE, Scalar


class Alphabet:
    """Ordered generator names for one algebra; the identity of a tensor slot.

    The declaration order of the generators fixes the term order used for
    canonical printing and for rewriting (degree-lexicographic).
    """

    def __init__(self, tag, gens):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {tag}: {gens}")
        for name in gens:
            if name == "q" or not name.isidentifier():
                raise ValueError(f"bad generator name {name!r} in {tag}")
        self.tag = tag
        self.gens = gens
        self._index = {name: i for i, name in enumerate(gens)}

    def gen_index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator(f"{name!r} is not a generator of {self.tag}") from None

    def word_key(self, word):
        """Degree-lexicographic sort key of a word over this alphabet."""
        return (len(word), tuple(self._index[g] for g in word))

    def check_word(self, word):
        for g in word:
            if g not in self._index:
                raise UnknownGenerator(f"{g!r} is not a generator of {self.tag}")

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.tag == other.tag and self.gens == other.gens

    def __hash__(self):
        return hash((self.tag, self.gens))

    def __repr__(self):
        return f"<{type(self).__name__} {self.tag}>"


class NcElement:
    """A linear combination of tensor words with Scalar coefficients.

    Immutable; zero coefficients are never stored.  Equality is literal
    equality of term maps, so elements should be normalized (rewrite module)
    before being compared across a presented algebra.
    """

    __slots__ = ("signature", "terms")

    def __init__(self, signature, terms=None):
        self.signature = tuple(signature)
        clean = {}
        if terms:
            for word, coeff in terms.items():
                if coeff:
                    clean[word] = coeff
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(signature):
        return NcElement(signature)

    @staticmethod
    def unit(signature):
        signature = tuple(signature)
        empty = tuple(() for _ in signature)
        return NcElement(signature, {empty: ONE})

    @staticmethod
    def from_word(signature, word, coeff=ONE):
        signature = tuple(signature)
        word = tuple(tuple(slot) for slot in word)
        if len(word) != len(signature):
            raise SignatureMismatch("word has wrong number of slots")
        for slot, alpha in zip(word, signature):
            alpha.check_word(slot)
        return NcElement(signature, {word: coeff})

    # -- basic queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def sorted_items(self):
        keyfn = lambda word: tuple(
            alpha.word_key(slot) for slot, alpha in zip(word, self.signature)
        )
        return sorted(self.terms.items(), key=lambda kv: keyfn(kv[0]))

    def coefficient(self, word):
        word = tuple(tuple(slot) for slot in word)
        return self.terms.get(word, Scalar())

    # -- linear structure -----------------------------------------------------

    def _require_same_signature(self, other):
        if self.signature != other.signature:
            raise SignatureMismatch(
                f"signatures differ: {_sig_str(self.signature)} vs {_sig_str(other.signature)}"
            )

    def __add__(self, other):
        self._require_same_signature(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = terms.get(word, Scalar()) + coeff
            if acc:
                terms[word] = acc
            else:
                terms.pop(word, None)
        out = NcElement.__new__(NcElement)
        out.signature = self.signature
        out.terms = terms
        return out

    def __neg__(self):
        out = NcElement.__new__(NcElement)
        out.signature = self.signature
        out.terms = {word: -coeff for word, coeff in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        if not isinstance(scalar, Scalar):
            scalar = Scalar.rational(scalar)
        if scalar.is_zero():
            return NcElement(self.signature)
        out = NcElement.__new__(NcElement)
        out.signature = self.signature
        out.terms = {word: coeff * scalar for word, coeff in self.terms.items()}
        return out

    def __rmul__(self, scalar):
        return self.scale(scalar)

    # -- multiplicative structure ----------------------------------------------

    def __mul__(self, other):
        """Slotwise concatenation product (free product per tensor factor)."""
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        self._require_same_signature(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = tuple(s1 + s2 for s1, s2 in zip(w1, w2))
                acc = terms.get(word, Scalar()) + c1 * c2
                if acc:
                    terms[word] = acc
                else:
                    del terms[word]
        out = NcElement.__new__(NcElement)
        out.signature = self.signature
        out.terms = terms
        return out

    def __matmul__(self, other):
        """Outer tensor product: concatenates signatures."""
        signature = self.signature + other.signature
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                terms[w1 + w2] = terms.get(w1 + w2, Scalar()) + c1 * c2
        return NcElement(signature, terms)

    # -- slot manipulation -------------------------------------------------------

    def embed(self, target_signature, slot_assignment):
        """Place this element into a larger signature, unit words elsewhere.

        slot_assignment[i] is the target slot for source slot i; the map must
        be injective and respect slot alphabets.
        """
        target_signature = tuple(target_signature)
        if len(slot_assignment) != len(self.signature):
            raise SignatureMismatch("slot assignment has wrong length")
        if len(set(slot_assignment)) != len(slot_assignment):
            raise SignatureMismatch("slot assignment must be injective")
        for src, dst in enumerate(slot_assignment):
            if not 0 <= dst < len(target_signature):
                raise SignatureMismatch(f"target slot {dst} out of range")
            if target_signature[dst] != self.signature[src]:
                raise SignatureMismatch(
                    f"slot {src} ({self.signature[src].tag}) cannot embed into "
                    f"target slot {dst} ({target_signature[dst].tag})"
                )
        terms = {}
        for word, coeff in self.terms.items():
            slots = [() for _ in target_signature]
            for src, dst in enumerate(slot_assignment):
                slots[dst] = word[src]
            terms[tuple(slots)] = coeff
        return NcElement(target_signature, terms)

    def regroup(self, grouping):
        """Reassociate slots into contiguous blocks by concatenating words.

        grouping is a list of block sizes summing to the slot count; each
        block must consist of slots over one alphabet and is merged into a
        single slot whose words concatenate left to right.
        """
        if any(size < 1 for size in grouping) or sum(grouping) != len(self.signature):
            raise BadGrouping(f"{grouping} does not partition {len(self.signature)} slots")
        bounds = []
        start = 0
        for size in grouping:
            block = self.signature[start:start + size]
            if any(alpha != block[0] for alpha in block[1:]):
                raise BadGrouping("cannot merge slots over different alphabets")
            bounds.append((start, start + size))
            start += size
        signature = tuple(self.signature[a] for a, _ in bounds)
        terms = {}
        for word, coeff in self.terms.items():
            merged = tuple(sum(word[a:b], ()) for a, b in bounds)
            terms[merged] = terms.get(merged, Scalar()) + coeff
        return NcElement(signature, terms)

    def select_slots(self, slots):
        """Keep only the given slots, in the given order (a projection of words)."""
        signature = tuple(self.signature[i] for i in slots)
        terms = {}
        for word, coeff in self.terms.items():
            key = tuple(word[i] for i in slots)
            terms[key] = terms.get(key, Scalar()) + coeff
        return NcElement(signature, terms)

    def map_slot(self, index, fn, out_signature):
        """Replace slot `index` by the image of its word under `fn`, bilinearly.

        fn maps a word to an NcElement over out_signature (any number of
        slots); the image's slots are spliced in place of the original slot.
        """
        out_signature = tuple(out_signature)
        signature = self.signature[:index] + out_signature + self.signature[index + 1:]
        terms = {}
        for word, coeff in self.terms.items():
            image = fn(word[index])
            for iword, icoeff in image.terms.items():
                new_word = word[:index] + iword + word[index + 1:]
                acc = terms.get(new_word, Scalar()) + coeff * icoeff
                if acc:
                    terms[new_word] = acc
                else:
                    del terms[new_word]
        return NcElement(signature, terms)

    def contract_pair(self, i, j, pairing):
        """Contract slots i and j (i < j) through a scalar pairing of words."""
        if not 0 <= i < j < len(self.signature):
            raise BadGrouping(f"bad contraction slots ({i}, {j})")
        signature = tuple(a for k, a in enumerate(self.signature) if k not in (i, j))
        terms = {}
        for word, coeff in self.terms.items():
            value = pairing(word[i], word[j])
            if not value:
                continue
            new_word = tuple(s for k, s in enumerate(word) if k not in (i, j))
            acc = terms.get(new_word, Scalar()) + coeff * value
            if acc:
                terms[new_word] = acc
            else:
                del terms[new_word]
        return NcElement(signature, terms)

    # -- comparison / printing -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NcElement):
            return NotImplemented
        return self.signature == other.signature and self.terms == other.terms

    def __hash__(self):
        return hash((self.signature, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, coeff in self.sorted_items():
            body = _word_str(word)
            stext = str(coeff)
            if coeff.is_one():
                text = body
            elif stext == "-1":
                text = "-" + body
            elif coeff.is_monomial():
                text = f"{stext}*{body}"
            else:
                text = f"({stext})*{body}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(" - " + text[1:])
            else:
                parts.append(" + " + text)
        return "".join(parts)

    def __repr__(self):
        return f"<NcElement {_sig_str(self.signature)}: {self}>"


def _word_str(word):
    return "(x)".join("*".join(slot) if slot else "1" for slot in word)


def _sig_str(signature):
    return "(x)".join(alpha.tag for alpha in signature)
