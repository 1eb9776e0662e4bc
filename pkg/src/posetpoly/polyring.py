"""Sparse multivariate polynomials with integer coefficients.

Variables are plain names; nothing here depends on a poset except the
parser, which checks that every variable it reads is a node of the given
poset. Coefficients are arbitrary-precision integers, so the ring has no
zero-divisors. Values are immutable and safe to share.

Canonical text order is graded lexicographic: higher total degree first,
ties broken by comparing the monomials as words of variable names.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .errors import ParseError, UnknownVariableError
from .poset import Poset, VarId


class Monomial:
    """A product of variables with positive integer exponents; the empty product is 1."""

    __slots__ = ("_exps",)

    def __init__(self, exponents: Mapping[VarId, int] | Iterable[tuple[VarId, int]] = ()):
        items = dict(exponents)
        for var, exp in items.items():
            if not isinstance(var, str) or not var:
                raise ValueError(f"variable names must be non-empty strings, got {var!r}")
            if not isinstance(exp, int) or exp < 1:
                raise ValueError(f"exponent of {var!r} must be a positive integer, got {exp!r}")
        self._exps = tuple(sorted(items.items()))

    @property
    def pairs(self) -> tuple[tuple[VarId, int], ...]:
        """(variable, exponent) pairs sorted by variable name."""
        return self._exps

    def degree(self) -> int:
        return sum(exp for _, exp in self._exps)

    def variables(self) -> tuple[VarId, ...]:
        return tuple(var for var, _ in self._exps)

    def contains(self, var: VarId) -> bool:
        """True iff the variable occurs with positive exponent."""
        return any(v == var for v, _ in self._exps)

    def exponent(self, var: VarId) -> int:
        for v, exp in self._exps:
            if v == var:
                return exp
        return 0

    def is_one(self) -> bool:
        return not self._exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self._exps)
        for var, exp in other._exps:
            merged[var] = merged.get(var, 0) + exp
        return Monomial(merged)

    def sort_key(self) -> tuple[int, tuple[tuple[VarId, int], ...]]:
        """Ascending graded-lexicographic key; min under it is the least monomial.

        Within one degree, comparing (variable, -exponent) pairs agrees with
        comparing the monomials as expanded words of variable names.
        """
        return (self.degree(), tuple((v, -e) for v, e in self._exps))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exps == other._exps

    def __hash__(self) -> int:
        return hash(self._exps)

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self._exps)

    def __repr__(self) -> str:
        return f"Monomial({dict(self._exps)!r})"


MONOMIAL_ONE = Monomial()

NEG_INFINITY = float("-inf")


class Polynomial:
    """A finite map from monomials to nonzero integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        cleaned: dict[Monomial, int] = {}
        for monomial, coeff in dict(terms).items():
            if not isinstance(coeff, int):
                raise ValueError(f"coefficients must be integers, got {coeff!r}")
            if coeff != 0:
                cleaned[monomial] = coeff
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({MONOMIAL_ONE: 1})

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls({MONOMIAL_ONE: value} if value else {})

    @classmethod
    def variable(cls, name: VarId, exponent: int = 1) -> "Polynomial":
        return cls({Monomial({name: exponent}): 1})

    def coefficient(self, monomial: Monomial) -> int:
        return self._terms.get(monomial, 0)

    def support(self) -> frozenset[Monomial]:
        """The monomials that appear, i.e. carry a nonzero coefficient."""
        return frozenset(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: degree descending, then word order."""
        return sorted(
            self._terms.items(),
            key=lambda item: (-item[0].degree(), item[0].sort_key()[1]),
        )

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def term_count(self) -> int:
        return len(self._terms)

    def degree(self) -> Union[int, float]:
        """Maximum total degree of the appearing monomials; -inf for the zero polynomial."""
        if not self._terms:
            return NEG_INFINITY
        return max(m.degree() for m in self._terms)

    def variables(self) -> list[VarId]:
        """Sorted names of all variables occurring in appearing monomials."""
        seen: set[VarId] = set()
        for monomial in self._terms:
            seen.update(monomial.variables())
        return sorted(seen)

    def max_abs_coefficient(self) -> int:
        return max((abs(c) for c in self._terms.values()), default=0)

    def _coerced(self, other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        merged = dict(self._terms)
        for monomial, coeff in rhs._terms.items():
            total = merged.get(monomial, 0) + coeff
            if total:
                merged[monomial] = total
            else:
                merged.pop(monomial, None)
        result = Polynomial.__new__(Polynomial)
        result._terms = merged
        return result

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        result = Polynomial.__new__(Polynomial)
        result._terms = {m: -c for m, c in self._terms.items()}
        return result

    def __sub__(self, other: object) -> "Polynomial":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        product: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in rhs._terms.items():
                monomial = m1 * m2
                total = product.get(monomial, 0) + c1 * c2
                if total:
                    product[monomial] = total
                else:
                    product.pop(monomial, None)
        result = Polynomial.__new__(Polynomial)
        result._terms = product
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = Polynomial.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    """Coefficient-wise sum with zero terms removed."""
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Distributive product; monomial product adds exponents."""
    return f * g


def degree(f: Polynomial) -> Union[int, float]:
    """Total degree of f, or -inf when f is zero."""
    return f.degree()


def format_poly(f: Polynomial) -> str:
    """Canonical text for f; parse_poly(format_poly(f)) recovers f."""
    terms = f.sorted_terms()
    if not terms:
        return "0"
    pieces: list[str] = []
    for index, (monomial, coeff) in enumerate(terms):
        body = _format_term(monomial, abs(coeff))
        if index == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(pieces)


def _format_term(monomial: Monomial, magnitude: int) -> str:
    if monomial.is_one():
        return str(magnitude)
    if magnitude == 1:
        return str(monomial)
    return f"{magnitude}*{monomial}"


# --- parsing ---------------------------------------------------------------
#
# poly   := ['-'] term (('+'|'-') term)*
# term   := intlit ('*' factor)* | factor ('*' factor)*
# factor := varid ('^' posint)?
# intlit := digit+ ; posint := nonzero digit followed by digits

_OPS = frozenset("+-*^")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _PolyParser:
    def __init__(self, text: str, poset: Poset):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.poset = poset

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> Polynomial:
        terms: dict[Monomial, int] = {}
        sign = 1
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.take()
            sign = -1
        self._term(terms, sign)
        while True:
            kind, text, offset = self.peek()
            if kind == "end":
                break
            if kind == "op" and text in "+-":
                self.take()
                self._term(terms, 1 if text == "+" else -1)
            else:
                raise ParseError(f"expected '+', '-' or end of input, got {text!r}", offset)
        return Polynomial(terms)

    def _term(self, terms: dict[Monomial, int], sign: int) -> None:
        kind, text, offset = self.peek()
        exponents: dict[VarId, int] = {}
        if kind == "int":
            self.take()
            coeff = int(text)
        elif kind == "name":
            coeff = 1
            var, exp = self._factor()
            exponents[var] = exponents.get(var, 0) + exp
        else:
            raise ParseError(f"expected a term, got {text!r}" if text else "expected a term", offset)
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.take()
                var, exp = self._factor()
                exponents[var] = exponents.get(var, 0) + exp
            else:
                break
        monomial = Monomial(exponents)
        total = terms.get(monomial, 0) + sign * coeff
        if total:
            terms[monomial] = total
        else:
            terms.pop(monomial, None)

    def _factor(self) -> tuple[VarId, int]:
        kind, text, offset = self.take()
        if kind != "name":
            raise ParseError(f"expected a variable, got {text!r}" if text else "expected a variable", offset)
        if text not in self.poset.nodes:
            raise UnknownVariableError(f"unknown variable {text!r} at position {offset}")
        var = text
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.take()
            kind, text, offset = self.take()
            if kind != "int" or text[0] == "0":
                raise ParseError("exponent must be a positive integer without leading zeros", offset)
            return var, int(text)
        return var, 1


def parse_poly(text: str, P: Poset) -> Polynomial:
    """Parse polynomial text; every variable must be a node of P."""
    return _PolyParser(text, P).parse()
