"""Exact coefficient arithmetic: Laurent polynomials in q over the rationals.

Every formula handled by this package closes over Laurent polynomials, so the
coefficient field is deliberately restricted to them.  Multiplicative inverses
exist exactly for unit monomials c*q^n; anything else raises NotAUnit rather
than silently widening to rational functions.
"""

from fractions import Fraction

from .errors import NotAUnit


class Scalar:
    """A Laurent polynomial in q with Fraction coefficients.

    Stored as a map exponent -> coefficient with no zero coefficients
    (canonical form).  Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[int(exp)] = coeff
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(value, den=None):
        value = Fraction(value) if den is None else Fraction(value, den)
        return Scalar({0: value})

    @staticmethod
    def q_power(n, coeff=1):
        return Scalar({n: Fraction(coeff)})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return self._terms == {0: Fraction(1)}

    def is_monomial(self):
        return len(self._terms) == 1

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            acc = terms.get(exp, 0) + coeff
            if acc:
                terms[exp] = acc
            else:
                terms.pop(exp, None)
        out = Scalar.__new__(Scalar)
        out._terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Scalar.__new__(Scalar)
        out._terms = {exp: -coeff for exp, coeff in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                acc = terms.get(exp, 0) + c1 * c2
                if acc:
                    terms[exp] = acc
                else:
                    del terms[exp]
        out = Scalar.__new__(Scalar)
        out._terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse, defined only for unit monomials c*q^n."""
        if len(self._terms) != 1:
            raise NotAUnit(f"{self} is not a unit monomial")
        (exp, coeff), = self._terms.items()
        return Scalar({-exp: Fraction(1) / coeff})

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            coeff = self._terms[exp]
            body = _term_str(exp, coeff)
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(" - " + body[1:])
            else:
                parts.append(" + " + body)
        return "".join(parts)

    def __repr__(self):
        return f"Scalar({self})"


def _term_str(exp, coeff):
    if exp == 0:
        return str(coeff)
    if exp == 1:
        qpart = "q"
    else:
        qpart = f"q^{exp}"
    if coeff == 1:
        return qpart
    if coeff == -1:
        return "-" + qpart
    return f"{coeff}*{qpart}"


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.rational(value)
    return NotImplemented


ZERO = Scalar()
ONE = Scalar.rational(1)
Q = Scalar.q_power(1)
QINV = Scalar.q_power(-1)
