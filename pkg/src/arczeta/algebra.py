"""Exact arithmetic in Z[u, 1/u] and in truncated power series over it.

Virtual Poincare polynomials live in Z[u]; zeta-function coefficients pick
up negative powers of u through the normalizing factor u^(-n*dim), and the
zeta functions themselves are formal series in T carried with an explicit
truncation order.  Both rings are implemented exactly over Python's
arbitrary-precision integers: there is no floating point anywhere.

All values are immutable and hashable, and every operation is a pure
function, so they can be shared freely between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import OrderMismatch, PoleAtZero, ZeroPolynomial

__all__ = [
    "LaurentPolynomial",
    "TruncatedSeries",
    "ZERO",
    "ONE",
    "U",
    "geometric_sum",
]


class LaurentPolynomial:
    """Integer-coefficient polynomial in u with possibly negative exponents.

    Terms are stored sparsely as {exponent: coefficient} with zero
    coefficients pruned on every operation, so structural equality is
    mathematical equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be int")
            total = clean.get(exp, 0) + coeff
            if total:
                clean[exp] = total
            elif exp in clean:
                del clean[exp]
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def constant(cls, value: int) -> "LaurentPolynomial":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Largest exponent present; the zero polynomial has none."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        """Smallest exponent present; the zero polynomial has none."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no valuation")
        return min(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "LaurentPolynomial | None":
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int):
            return LaurentPolynomial({0: value})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = merged.get(exp, 0) + coeff
            if total:
                merged[exp] = total
            elif exp in merged:
                del merged[exp]
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = merged
        return result

    __radd__ = __add__

    def __neg__(self):
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = {exp: -coeff for exp, coeff in self._terms.items()}
        return result

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                total = product.get(exp, 0) + c1 * c2
                if total:
                    product[exp] = total
                elif exp in product:
                    del product[exp]
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = product
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return hash(self._terms[0])
        return hash(tuple(sorted(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    # -- the operations the rest of the package relies on -------------------

    def factor_monomial(self) -> tuple[int, "LaurentPolynomial"]:
        """Write self = u^shift * reduced with reduced(0) != 0.

        The shift is the minimal exponent occurring, so the reduced part has
        a nonzero constant term.
        """
        if not self._terms:
            raise ZeroPolynomial("cannot factor a monomial out of zero")
        shift = min(self._terms)
        reduced = LaurentPolynomial.__new__(LaurentPolynomial)
        reduced._terms = {exp - shift: coeff for exp, coeff in self._terms.items()}
        return shift, reduced

    def evaluate(self, value) -> Fraction:
        """Exact evaluation at a rational point.

        Evaluation at 0 is allowed only when no negative exponents occur.
        """
        point = Fraction(value)
        if point == 0:
            if self._terms and min(self._terms) < 0:
                raise PoleAtZero("evaluation at 0 with negative exponents present")
            return Fraction(self._terms.get(0, 0))
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            total += coeff * point**exp
        return total

    # -- rendering ----------------------------------------------------------

    def to_text(self) -> str:
        """Render in caret notation, highest exponent first: "u^3 + u^2 - u"."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp in sorted(self._terms, reverse=True):
            coeff = self._terms[exp]
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                upart = "u" if exp == 1 else f"u^{exp}"
                body = upart if mag == 1 else f"{mag}*{upart}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()!r})"

    _TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[u^*+-]))")

    @classmethod
    def from_text(cls, text: str) -> "LaurentPolynomial":
        """Parse the to_text format back into a polynomial."""
        tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            match = cls._TOKEN.match(text, pos)
            if match is None:
                if text[pos:].strip():
                    raise ValueError(f"unexpected character in polynomial: {text[pos:]!r}")
                break
            pos = match.end()
            if match.group("num") is not None:
                tokens.append(("num", match.group("num"), match.start()))
            else:
                tokens.append((match.group("sym"), match.group("sym"), match.start()))

        terms: dict[int, int] = {}
        i = 0

        def peek(kind):
            return i < len(tokens) and tokens[i][0] == kind

        if not tokens:
            raise ValueError("empty polynomial text")
        while i < len(tokens):
            sign = 1
            if peek("+") or peek("-"):
                sign = -1 if tokens[i][0] == "-" else 1
                i += 1
            coeff = 1
            has_coeff = False
            if peek("num"):
                coeff = int(tokens[i][1])
                has_coeff = True
                i += 1
            if peek("*"):
                i += 1
                if not peek("u"):
                    raise ValueError("expected u after '*'")
            if peek("u"):
                i += 1
                exp = 1
                if peek("^"):
                    i += 1
                    esign = 1
                    if peek("-"):
                        esign = -1
                        i += 1
                    if not peek("num"):
                        raise ValueError("expected digits after '^'")
                    exp = esign * int(tokens[i][1])
                    i += 1
            else:
                if not has_coeff:
                    raise ValueError("expected a coefficient or u")
                exp = 0
            terms[exp] = terms.get(exp, 0) + sign * coeff
        return cls(terms)

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> list[list]:
        """[[exponent, coefficient-as-decimal-string], ...] sorted by exponent."""
        return [[exp, str(self._terms[exp])] for exp in sorted(self._terms)]

    @classmethod
    def from_json(cls, data) -> "LaurentPolynomial":
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be a list of [exponent, coefficient]")
        terms: dict[int, int] = {}
        for entry in data:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ValueError(f"bad polynomial term {entry!r}")
            exp, coeff = entry
            if not isinstance(exp, int):
                raise ValueError(f"exponent must be an integer, got {exp!r}")
            terms[exp] = terms.get(exp, 0) + int(coeff)
        return cls(terms)


ZERO = LaurentPolynomial.zero()
ONE = LaurentPolynomial.one()
U = LaurentPolynomial.monomial(1)


def geometric_sum(length: int) -> LaurentPolynomial:
    """1 + u + ... + u^(length-1); the empty sum for length 0."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    return LaurentPolynomial({k: 1 for k in range(length)})


class TruncatedSeries:
    """Formal power series in T with LaurentPolynomial coefficients.

    A series carries a truncation order N: coefficients are kept for
    1 <= n <= N only, and arithmetic never reports anything beyond T^N.
    Index 0 does not exist; all series here vanish at T = 0.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coefficients: Mapping[int, LaurentPolynomial] = ()):
        if not isinstance(order, int) or order < 1:
            raise ValueError("truncation order must be a positive integer")
        items = (
            coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        )
        clean: dict[int, LaurentPolynomial] = {}
        for n, poly in items:
            if not isinstance(n, int) or n < 1 or n > order:
                raise ValueError(f"series index {n!r} outside 1..{order}")
            if not isinstance(poly, LaurentPolynomial):
                raise TypeError("coefficients must be LaurentPolynomial")
            if not poly.is_zero():
                clean[n] = poly
        self._order = order
        self._coeffs = clean

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    @property
    def order(self) -> int:
        return self._order

    def coefficient(self, n: int) -> LaurentPolynomial:
        if not isinstance(n, int) or n < 1 or n > self._order:
            raise ValueError(f"series index {n!r} outside 1..{self._order}")
        return self._coeffs.get(n, ZERO)

    def coefficients(self) -> dict[int, LaurentPolynomial]:
        """The nonzero coefficients, as a {n: polynomial} copy."""
        return dict(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check_order(self, other: "TruncatedSeries"):
        if self._order != other._order:
            raise OrderMismatch(
                f"series orders differ: {self._order} != {other._order}"
            )

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        merged = dict(self._coeffs)
        for n, poly in other._coeffs.items():
            merged[n] = merged.get(n, ZERO) + poly
        return TruncatedSeries(self._order, merged)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        merged = dict(self._coeffs)
        for n, poly in other._coeffs.items():
            merged[n] = merged.get(n, ZERO) - poly
        return TruncatedSeries(self._order, merged)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        product: dict[int, LaurentPolynomial] = {}
        for i, pi in self._coeffs.items():
            for j, pj in other._coeffs.items():
                n = i + j
                if n > self._order:
                    continue
                product[n] = product.get(n, ZERO) + pi * pj
        return TruncatedSeries(self._order, product)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._order, tuple(sorted(self._coeffs.items()))))

    def to_text(self) -> str:
        parts = [
            f"({self._coeffs[n].to_text()})*T^{n}" for n in sorted(self._coeffs)
        ]
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(T^{self._order + 1})"

    __str__ = to_text

    def __repr__(self):
        return f"TruncatedSeries({self.to_text()!r})"

    _TERM = re.compile(r"\(([^()]*)\)\*T\^(\d+)")
    _TAIL = re.compile(r"\s*O\(T\^(\d+)\)\s*$")

    @classmethod
    def from_text(cls, text: str) -> "TruncatedSeries":
        tail = cls._TAIL.search(text)
        if tail is None:
            raise ValueError("series text must end with O(T^N+1)")
        order = int(tail.group(1)) - 1
        coeffs = {
            int(n): LaurentPolynomial.from_text(body)
            for body, n in cls._TERM.findall(text[: tail.start()])
        }
        return cls(order, coeffs)

    def to_json(self) -> dict:
        return {
            "order": self._order,
            "terms": [[n, self._coeffs[n].to_json()] for n in sorted(self._coeffs)],
        }

    @classmethod
    def from_json(cls, data) -> "TruncatedSeries":
        if not isinstance(data, dict) or "order" not in data:
            raise ValueError("series JSON must be an object with 'order' and 'terms'")
        coeffs = {
            int(n): LaurentPolynomial.from_json(poly)
            for n, poly in data.get("terms", [])
        }
        return cls(data["order"], coeffs)
