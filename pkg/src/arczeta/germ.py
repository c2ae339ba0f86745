"""Polynomial germ analysis: parsing, Hessian inertia, jet splitting,
signature recovery from zeta coefficients, and the germ discriminator.

A germ is a multivariate polynomial with exact rational coefficients and
zero constant term, considered near the origin of R^nvars.  For a germ
that is singular at the origin (vanishing linear part), Sylvester's law
of inertia attaches to its Hessian a pair (plus, minus) of positive and
negative squares which is invariant under invertible linear changes of
coordinates; split_jet realizes the corresponding normal form

    f(change(x)) = diagonal quadratic in the first rank variables
                   + remainder of order >= 3 in the last corank variables

up to a chosen jet order, by congruence diagonalization followed by
iterated completion of squares on truncated polynomials.  No square roots
are taken anywhere: the diagonal entries stay rational with the inertia
sign pattern, square factors are scaled away rationally, and the final
irrational rescaling to literal +-1 coefficients is intentionally left
implicit since only the signs matter.

recover_signature inverts the signed T^2 zeta coefficients of a diagonal
quadratic germ: factoring out the maximal power of u leaves u^k - 1
(giving count k) or u^k + 1 (giving count k + 1), for each sign class
independently.  The naive T^2 coefficient only determines min and max of
the two counts, and not even that on the max = min + 1 family, where it
collapses to 1 - u^-1; recover_minmax reports that ambiguity as a value.
"""

from __future__ import annotations

import json as _json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Mapping, Sequence

from .algebra import LaurentPolynomial, TruncatedSeries
from .arcspace import (
    MINUS,
    NAIVE,
    PLUS,
    QuadraticGerm,
    naive_t2_coefficient,
    zeta_series,
)
from .errors import (
    DimensionMismatch,
    GermSyntaxError,
    InvalidGerm,
    NotAGerm,
    NotSignatureForm,
    NotSingularAtOrigin,
)

__all__ = [
    "PolynomialGerm",
    "parse_germ",
    "Inertia",
    "hessian_inertia",
    "congruence_diagonalize",
    "charpoly_inertia",
    "determinant",
    "linear_part",
    "SplitResult",
    "split_jet",
    "verify_split",
    "recover_signature",
    "NaiveRecovery",
    "recover_minmax",
    "DiscriminationResult",
    "discriminate",
]


# ---------------------------------------------------------------------------
# Sparse polynomials with rational coefficients, vanishing at the origin
# ---------------------------------------------------------------------------


class PolynomialGerm:
    """Sparse polynomial over Q with zero constant term.

    Terms map exponent vectors (tuples of nonnegative ints, one slot per
    variable) to nonzero Fractions.  Instances are immutable.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Fraction] = ()):
        if not isinstance(nvars, int) or nvars < 1:
            raise ValueError(f"nvars must be a positive integer, got {nvars!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple, Fraction] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars or any(not isinstance(e, int) or e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {nvars} variables")
            coeff = Fraction(coeff)
            total = clean.get(exps, Fraction(0)) + coeff
            if total:
                clean[exps] = total
            elif exps in clean:
                del clean[exps]
        zero_exp = (0,) * nvars
        if zero_exp in clean:
            raise NotAGerm(f"nonzero constant term {clean[zero_exp]}")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("PolynomialGerm is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "PolynomialGerm":
        return cls(nvars)

    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def order(self) -> int | None:
        """Minimal total degree of a nonzero term; None for the zero germ."""
        if not self._terms:
            return None
        return min(sum(e) for e in self._terms)

    def degree(self) -> int | None:
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def coefficient(self, exps: tuple) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def variables_used(self) -> set[int]:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e)
        return used

    def has_zero_linear_part(self) -> bool:
        return all(sum(e) != 1 for e in self._terms)

    def terms_of_degree(self, degree: int) -> dict[tuple, Fraction]:
        return {e: c for e, c in self._terms.items() if sum(e) == degree}

    def truncate(self, max_degree: int) -> "PolynomialGerm":
        return PolynomialGerm(
            self.nvars, {e: c for e, c in self._terms.items() if sum(e) <= max_degree}
        )

    # -- arithmetic ---------------------------------------------------------

    def _same_space(self, other: "PolynomialGerm"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable counts")

    def __add__(self, other):
        if not isinstance(other, PolynomialGerm):
            return NotImplemented
        self._same_space(other)
        merged = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = merged.get(exps, Fraction(0)) + coeff
            if total:
                merged[exps] = total
            elif exps in merged:
                del merged[exps]
        return PolynomialGerm(self.nvars, merged)

    def __neg__(self):
        return PolynomialGerm(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PolynomialGerm):
            return NotImplemented
        return self + (-other)

    def scaled(self, factor) -> "PolynomialGerm":
        factor = Fraction(factor)
        if not factor:
            return PolynomialGerm.zero(self.nvars)
        return PolynomialGerm(self.nvars, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, PolynomialGerm):
            return NotImplemented
        self._same_space(other)
        return self._mul_trunc(other, None)

    __rmul__ = __mul__

    def _mul_trunc(self, other: "PolynomialGerm", max_degree: int | None) -> "PolynomialGerm":
        product: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            for e2, c2 in other._terms.items():
                if max_degree is not None and d1 + sum(e2) > max_degree:
                    continue
                exps = tuple(a + b for a, b in zip(e1, e2))
                total = product.get(exps, Fraction(0)) + c1 * c2
                if total:
                    product[exps] = total
                elif exps in product:
                    del product[exps]
        return PolynomialGerm(self.nvars, product)

    def _pow_trunc(self, n: int, max_degree: int | None) -> "PolynomialGerm":
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result._mul_trunc(base, max_degree)
            n >>= 1
            if n:
                base = base._mul_trunc(base, max_degree)
        if result is None:
            raise ValueError("power 0 of a germ is not a germ")
        return result

    def __eq__(self, other):
        if not isinstance(other, PolynomialGerm):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self._terms.items()))))

    # -- substitution -------------------------------------------------------

    def substitute(
        self, replacements: Sequence["PolynomialGerm"], max_degree: int | None = None
    ) -> "PolynomialGerm":
        """Compose with the map x_i -> replacements[i], all in the same space.

        Each replacement must itself vanish at the origin, so composition
        preserves germs and cannot lower the total degree of a term.
        """
        if len(replacements) != self.nvars:
            raise ValueError("need one replacement polynomial per variable")
        result = PolynomialGerm.zero(self.nvars)
        for exps, coeff in self._terms.items():
            piece = None
            for i, e in enumerate(exps):
                if not e:
                    continue
                factor = replacements[i]._pow_trunc(e, max_degree)
                piece = factor if piece is None else piece._mul_trunc(factor, max_degree)
            result = result + piece.scaled(coeff)
        return result

    def substitute_single(
        self, index: int, replacement: "PolynomialGerm", max_degree: int | None = None
    ) -> "PolynomialGerm":
        """Compose with the map that rewrites one variable and fixes the rest."""
        accumulated: dict[tuple, Fraction] = {}

        def put(exps: tuple, value: Fraction):
            total = accumulated.get(exps, Fraction(0)) + value
            if total:
                accumulated[exps] = total
            elif exps in accumulated:
                del accumulated[exps]

        powers: dict[int, PolynomialGerm] = {}
        for exps, coeff in self._terms.items():
            e = exps[index]
            if not e:
                if max_degree is None or sum(exps) <= max_degree:
                    put(exps, coeff)
                continue
            if e not in powers:
                powers[e] = replacement._pow_trunc(e, max_degree)
            rest = list(exps)
            rest[index] = 0
            rest_degree = sum(rest)
            for pexps, pcoeff in powers[e]._terms.items():
                if max_degree is not None and rest_degree + sum(pexps) > max_degree:
                    continue
                put(tuple(a + b for a, b in zip(rest, pexps)), coeff * pcoeff)
        return PolynomialGerm(self.nvars, accumulated)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "PolynomialGerm":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    # -- Hessian ------------------------------------------------------------

    def hessian(self) -> list[list[Fraction]]:
        """The matrix of second partials at the origin (exact)."""
        n = self.nvars
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for exps, coeff in self.terms_of_degree(2).items():
            support = [i for i, e in enumerate(exps) if e]
            if len(support) == 1:
                i = support[0]
                matrix[i][i] = 2 * coeff
            else:
                i, j = support
                matrix[i][j] = coeff
                matrix[j][i] = coeff
        return matrix

    # -- rendering ----------------------------------------------------------

    @staticmethod
    def _term_key(exps: tuple):
        # degree first, then earlier variables first within a degree
        return (sum(exps), tuple(-e for e in exps))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps in sorted(self._terms, key=self._term_key):
            coeff = self._terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e:
                    factors.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"PolynomialGerm({self.nvars}, {self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                [list(exps), str(self._terms[exps])]
                for exps in sorted(self._terms, key=self._term_key)
            ],
        }

    @classmethod
    def from_json(cls, data) -> "PolynomialGerm":
        if not isinstance(data, dict) or "nvars" not in data:
            raise ValueError("germ JSON must be an object with 'nvars' and 'terms'")
        nvars = data["nvars"]
        terms: dict[tuple, Fraction] = {}
        for entry in data.get("terms", []):
            if not isinstance(entry, list) or len(entry) != 2:
                raise ValueError(f"bad germ term {entry!r}")
            exps, coeff = entry
            exps = tuple(exps)
            terms[exps] = terms.get(exps, Fraction(0)) + Fraction(str(coeff))
        return cls(nvars, terms)


# ---------------------------------------------------------------------------
# Text grammar:  term (('+'|'-') term)*, term = [rational '*'] xK[^E] ('*' xK[^E])*
# ---------------------------------------------------------------------------


def parse_germ(text: str, nvars: int | None = None) -> PolynomialGerm:
    """Parse a germ from the text grammar, or from germ JSON if text is '{...}'.

    Variables are x1, x2, ...; the variable count is inferred from the
    highest index used unless nvars is given.  Whitespace is insignificant.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = _json.loads(stripped)
        except _json.JSONDecodeError as exc:
            raise GermSyntaxError(f"invalid germ JSON: {exc.msg}", exc.pos)
        return PolynomialGerm.from_json(data)
    return _parse_germ_text(text, nvars)


def _parse_germ_text(text: str, nvars: int | None) -> PolynomialGerm:
    pos = 0
    size = len(text)

    def skip_ws():
        nonlocal pos
        while pos < size and text[pos].isspace():
            pos += 1

    def read_int(expected: str) -> tuple[int, int]:
        nonlocal pos
        start = pos
        while pos < size and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise GermSyntaxError(f"expected {expected}", start)
        return int(text[start:pos]), start

    def parse_factor():
        nonlocal pos
        if pos < size and text[pos].isdigit():
            start = pos
            numerator, _ = read_int("a number")
            denominator = 1
            skip_ws()
            if pos < size and text[pos] == "/":
                pos += 1
                skip_ws()
                denominator, at = read_int("a denominator")
                if denominator == 0:
                    raise GermSyntaxError("zero denominator", at)
            return ("coeff", Fraction(numerator, denominator), start)
        if pos < size and text[pos] == "x":
            start = pos
            pos += 1
            index, at = read_int("a variable index after 'x'")
            if index < 1:
                raise GermSyntaxError("variable index must be at least 1", at)
            exponent = 1
            skip_ws()
            if pos < size and text[pos] == "^":
                pos += 1
                skip_ws()
                exponent, at = read_int("digits after '^'")
                if exponent < 1:
                    raise GermSyntaxError("exponent must be at least 1", at)
            return ("var", index, exponent, start)
        raise GermSyntaxError("expected a coefficient or a variable", pos)

    raw_terms: list[tuple[Fraction, dict[int, int]]] = []
    max_index = 0
    skip_ws()
    if pos == size:
        raise GermSyntaxError("empty polynomial", pos)
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1

    while True:
        skip_ws()
        factors = []
        while True:
            factors.append(parse_factor())
            skip_ws()
            if pos < size and text[pos] == "*":
                pos += 1
                skip_ws()
                continue
            break
        coeff = Fraction(sign)
        powers: dict[int, int] = {}
        for slot, factor in enumerate(factors):
            if factor[0] == "coeff":
                if slot != 0:
                    raise GermSyntaxError("coefficient must come first in a term", factor[2])
                coeff *= factor[1]
            else:
                _, index, exponent, _ = factor
                powers[index - 1] = powers.get(index - 1, 0) + exponent
                max_index = max(max_index, index)
        raw_terms.append((coeff, powers))
        skip_ws()
        if pos == size:
            break
        if text[pos] not in "+-":
            raise GermSyntaxError("expected '+' or '-' between terms", pos)
        sign = -1 if text[pos] == "-" else 1
        pos += 1

    if nvars is None:
        nvars = max(max_index, 1)
    elif nvars < max_index:
        raise InvalidGerm(
            f"declared {nvars} variable(s) but the polynomial uses x{max_index}"
        )
    terms: dict[tuple, Fraction] = {}
    for coeff, powers in raw_terms:
        exps = tuple(powers.get(i, 0) for i in range(nvars))
        terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return PolynomialGerm(nvars, terms)


# ---------------------------------------------------------------------------
# Inertia by exact congruence diagonalization, with a char-poly cross-check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Inertia:
    """Sylvester inertia of a quadratic form: plus/minus square counts."""

    plus: int
    minus: int
    corank: int

    @property
    def rank(self) -> int:
        return self.plus + self.minus

    @property
    def index(self) -> int:
        return self.minus

    def to_json(self) -> dict:
        return {
            "s": self.plus,
            "t": self.minus,
            "rank": self.rank,
            "corank": self.corank,
            "index": self.index,
        }


def congruence_diagonalize(matrix) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Symmetric Gaussian elimination: returns (P, diag) with P^T H P diagonal.

    A zero diagonal pivot with a nonzero off-diagonal entry is repaired by
    the hyperbolic move x_k -> x_k + x_j before eliminating.
    """
    n = len(matrix)
    H = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in H):
        raise ValueError("matrix must be square")
    if any(H[i][j] != H[j][i] for i in range(n) for j in range(i)):
        raise ValueError("matrix must be symmetric")
    P = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]

    def add_column(dst, src, factor):
        for r in range(n):
            H[r][dst] += factor * H[r][src]
        for r in range(n):
            H[dst][r] += factor * H[src][r]
        for r in range(n):
            P[r][dst] += factor * P[r][src]

    def swap_columns(a, b):
        for r in range(n):
            H[r][a], H[r][b] = H[r][b], H[r][a]
        H[a], H[b] = H[b], H[a]
        for r in range(n):
            P[r][a], P[r][b] = P[r][b], P[r][a]

    for k in range(n):
        if H[k][k] == 0:
            pivot = next((j for j in range(k + 1, n) if H[j][j] != 0), None)
            if pivot is not None:
                swap_columns(k, pivot)
            else:
                off = next((j for j in range(k + 1, n) if H[k][j] != 0), None)
                if off is None:
                    continue  # row k already zero on the remaining block
                add_column(k, off, Fraction(1))
        for j in range(k + 1, n):
            if H[k][j]:
                add_column(j, k, -H[k][j] / H[k][k])
    return P, [H[i][i] for i in range(n)]


def determinant(matrix) -> Fraction:
    """Exact determinant by fraction-based Gaussian elimination."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    result = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if rows[r][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            result = -result
        result *= rows[k][k]
        inverse = 1 / rows[k][k]
        for r in range(k + 1, n):
            if rows[r][k]:
                factor = rows[r][k] * inverse
                for c in range(k, n):
                    rows[r][c] -= factor * rows[k][c]
    return result


def linear_part(change: Sequence[PolynomialGerm]) -> list[list[Fraction]]:
    """The matrix of degree-1 coefficients of a coordinate change."""
    n = len(change)
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i, component in enumerate(change):
        for exps, coeff in component.terms_of_degree(1).items():
            j = next(k for k, e in enumerate(exps) if e)
            matrix[i][j] = coeff
    return matrix


def _require_singular(germ: PolynomialGerm):
    if not isinstance(germ, PolynomialGerm):
        raise TypeError(f"expected a PolynomialGerm, got {germ!r}")
    if not germ.has_zero_linear_part():
        raise NotSingularAtOrigin("the linear part does not vanish at the origin")


def hessian_inertia(germ: PolynomialGerm) -> Inertia:
    """Exact inertia of the Hessian at the origin (Sylvester's law)."""
    _require_singular(germ)
    _, diag = congruence_diagonalize(germ.hessian())
    plus = sum(1 for d in diag if d > 0)
    minus = sum(1 for d in diag if d < 0)
    return Inertia(plus=plus, minus=minus, corank=germ.nvars - plus - minus)


def charpoly_inertia(matrix) -> tuple[int, int]:
    """Eigenvalue sign counts from the characteristic polynomial.

    Clears denominators (a positive scaling preserves signs), runs the
    Faddeev-LeVerrier recursion over the integers, and counts positive and
    negative roots by Descartes' rule, which is exact here because a
    symmetric matrix has only real eigenvalues.  This is a deliberately
    different route from congruence_diagonalize, used to cross-check it.
    """
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
        raise ValueError("matrix must be symmetric")
    scale = 1
    for row in rows:
        for x in row:
            d = x.denominator
            scale = scale * d // _gcd(scale, d)
    A = [[int(x * scale) for x in row] for row in rows]

    coeffs = [1]
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AM = [
            [sum(A[i][r] * M[r][j] for r in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(AM[i][i] for i in range(n))
        quotient, residue = divmod(trace, k)
        assert residue == 0, "Faddeev-LeVerrier division must be exact"
        c = -quotient
        coeffs.append(c)
        M = [
            [AM[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)
        ]

    def sign_changes(sequence):
        signs = [1 if x > 0 else -1 for x in sequence if x]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    positive = sign_changes(coeffs)
    negated = [c * (-1) ** (n - k) for k, c in enumerate(coeffs)]
    negative = sign_changes(negated)
    zero = 0
    for c in reversed(coeffs):
        if c:
            break
        zero += 1
    assert positive + negative + zero == n
    return positive, negative


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# Jet-level splitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplitResult:
    """A coordinate change realizing the split normal form to a jet order.

    change:          one polynomial per variable, rational jets with an
                     invertible linear part;
    quadratic_part:  diagonal quadratic in the first rank variables, with
                     the inertia sign pattern (positives first);
    remainder:       order >= 3, in the last corank variables only;
    and f(change(x)) - quadratic_part - remainder has no term of total
    degree <= jet_order.
    """

    change: tuple
    quadratic_part: PolynomialGerm
    remainder: PolynomialGerm
    inertia: Inertia
    jet_order: int

    def to_json(self) -> dict:
        return {
            "jet_order": self.jet_order,
            "inertia": self.inertia.to_json(),
            "change": [component.to_json() for component in self.change],
            "quadratic_part": self.quadratic_part.to_json(),
            "remainder": self.remainder.to_json(),
        }


def _square_root_part(value: int) -> int:
    """The largest r with r*r dividing value (small primes, then a square test)."""
    root = 1
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while value % (p * p) == 0:
            value //= p * p
            root *= p
    residue = isqrt(value)
    if residue * residue == value:
        root *= residue
    return root


def split_jet(germ: PolynomialGerm, jet_order: int) -> SplitResult:
    """Split a singular germ into diagonal quadratic + higher-order remainder.

    Stage 1 diagonalizes the quadratic part by rational congruence, orders
    the variables as (positive squares, negative squares, kernel), and
    strips rational square factors from the diagonal entries.  Stage 2
    walks the degrees 3..jet_order and absorbs every term divisible by a
    rank variable x_i (coefficient c, term c * x_i * m) through the
    substitution x_i -> x_i - c/(2 l_i) * m, where l_i is the diagonal
    coefficient; each substitution cancels its target and only creates
    terms of strictly higher degree, so the sweep terminates.
    """
    if not isinstance(jet_order, int) or jet_order < 3:
        raise ValueError(f"jet_order must be an integer >= 3, got {jet_order!r}")
    _require_singular(germ)
    nv = germ.nvars

    P, diag = congruence_diagonalize(germ.hessian())
    lam = [d / 2 for d in diag]
    positives = [i for i, v in enumerate(lam) if v > 0]
    negatives = [i for i, v in enumerate(lam) if v < 0]
    kernel = [i for i, v in enumerate(lam) if v == 0]
    column_order = positives + negatives + kernel
    plus, minus = len(positives), len(negatives)
    rank = plus + minus

    columns = []
    for new_index, old_index in enumerate(column_order):
        scale = Fraction(1)
        if new_index < rank:
            value = abs(lam[old_index])
            rho = Fraction(
                _square_root_part(value.numerator), _square_root_part(value.denominator)
            )
            scale = 1 / rho
        columns.append([P[r][old_index] * scale for r in range(nv)])

    change = [
        PolynomialGerm(
            nv,
            {
                tuple(1 if j == c else 0 for j in range(nv)): columns[c][i]
                for c in range(nv)
                if columns[c][i]
            },
        )
        for i in range(nv)
    ]
    current = germ.truncate(jet_order).substitute(change, max_degree=jet_order)

    diagonal_coeff = []
    for i in range(rank):
        exps = tuple(2 if j == i else 0 for j in range(nv))
        diagonal_coeff.append(current.coefficient(exps))

    for degree in range(3, jet_order + 1):
        while True:
            offender = None
            for exps in sorted(current.terms_of_degree(degree)):
                pivot = next((i for i in range(rank) if exps[i]), None)
                if pivot is not None:
                    offender = (exps, pivot)
                    break
            if offender is None:
                break
            exps, pivot = offender
            coeff = current.coefficient(exps)
            rest = list(exps)
            rest[pivot] -= 1
            shift = PolynomialGerm(
                nv, {tuple(rest): coeff / (2 * diagonal_coeff[pivot])}
            )
            replacement = PolynomialGerm.variable(nv, pivot) - shift
            current = current.substitute_single(pivot, replacement, jet_order)
            change = [
                component.substitute_single(pivot, replacement, jet_order)
                for component in change
            ]

    quadratic_part = PolynomialGerm(nv, current.terms_of_degree(2))
    remainder = current - quadratic_part

    # engine sanity: the invariants promised by SplitResult
    for exps, coeff in quadratic_part.terms().items():
        support = [i for i, e in enumerate(exps) if e]
        assert len(support) == 1 and support[0] < rank
        assert (coeff > 0) == (support[0] < plus)
    assert remainder.is_zero() or remainder.order() >= 3
    assert all(i >= rank for i in remainder.variables_used())

    return SplitResult(
        change=tuple(change),
        quadratic_part=quadratic_part,
        remainder=remainder,
        inertia=Inertia(plus=plus, minus=minus, corank=nv - rank),
        jet_order=jet_order,
    )


def verify_split(germ: PolynomialGerm, result: SplitResult) -> bool:
    """Check every SplitResult invariant against a full re-expansion of f."""
    if determinant(linear_part(result.change)) == 0:
        return False
    composed = germ.substitute(result.change)
    residual = composed - result.quadratic_part - result.remainder
    if any(sum(exps) <= result.jet_order for exps in residual.terms()):
        return False
    if not result.remainder.is_zero():
        if result.remainder.order() < 3:
            return False
        if any(i < result.inertia.rank for i in result.remainder.variables_used()):
            return False
    return True


# ---------------------------------------------------------------------------
# Signature recovery from T^2 zeta coefficients
# ---------------------------------------------------------------------------


def _count_from_signed(coefficient: LaurentPolynomial, label: str) -> int:
    if coefficient.is_zero():
        return 0
    _, reduced = coefficient.factor_monomial()
    terms = reduced.terms()
    if terms == {0: 2}:
        return 1
    if len(terms) == 2 and 0 in terms:
        top = max(terms)
        if top >= 1 and terms[top] == 1:
            if terms[0] == 1:
                return top + 1
            if terms[0] == -1:
                return top
    raise NotSignatureForm(
        f"{label} coefficient reduces to {reduced.to_text()}, not u^k + 1 or u^k - 1"
    )


def recover_signature(
    c_plus: LaurentPolynomial, c_minus: LaurentPolynomial
) -> tuple[int, int]:
    """Invert the signed T^2 coefficients back to the square counts.

    Factoring the maximal power of u out of the plus coefficient leaves
    u^k - 1 (count k) or u^k + 1, including the constant 2 at k = 0
    (count k + 1); zero means the count is 0.  Same for the minus side.
    """
    return (
        _count_from_signed(c_plus, "plus"),
        _count_from_signed(c_minus, "minus"),
    )


@dataclass(frozen=True)
class NaiveRecovery:
    """Outcome of reading (min, max) off a naive T^2 coefficient.

    Ambiguity is a value, not an error: the max = min + 1 family collapses
    to the same coefficient for every min.
    """

    status: str  # "determined" or "ambiguous"
    m: int | None = None
    M: int | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        if self.status == "determined":
            return {"status": "determined", "m": self.m, "M": self.M}
        return {"status": "ambiguous", "reason": self.reason}


def recover_minmax(coefficient: LaurentPolynomial) -> NaiveRecovery:
    """Pattern-match a naive T^2 coefficient 1 - u^-1 + u^-(m+1) - u^-M.

    The four-monomial pattern determines (m, M); it degenerates to
    1 - 2u^-1 + u^-2 at m = M = 1 (still determined), collapses to
    1 - u^-1 whenever M = m + 1 (ambiguous), and to 1 - u^-M when one sign
    class is empty, which is reported ambiguous because its reading
    depends on the convention for the value of the cone at min = 0.
    """
    terms = coefficient.terms()
    if terms == {0: 1, -1: -1}:
        return NaiveRecovery(
            status="ambiguous",
            reason="max = min + 1 family: every such pair gives 1 - u^-1",
        )
    if terms == {0: 1, -1: -2, -2: 1}:
        return NaiveRecovery(status="determined", m=1, M=1)
    if len(terms) == 2 and terms.get(0) == 1:
        other = next(e for e in terms if e != 0)
        if other <= -2 and terms[other] == -1:
            return NaiveRecovery(
                status="ambiguous",
                reason=(
                    "min = 0 pattern 1 - u^-M: the reading of M depends on the "
                    "convention for the cone value at min = 0"
                ),
            )
    if len(terms) == 4 and terms.get(0) == 1 and terms.get(-1) == -1:
        rest = {e: c for e, c in terms.items() if e not in (0, -1)}
        plus_exps = [e for e, c in rest.items() if c == 1]
        minus_exps = [e for e, c in rest.items() if c == -1]
        if len(plus_exps) == 1 and len(minus_exps) == 1:
            m = -plus_exps[0] - 1
            big = -minus_exps[0]
            if m >= 1 and big >= m and coefficient == naive_t2_coefficient(m, big):
                return NaiveRecovery(status="determined", m=m, M=big)
    raise NotSignatureForm(
        f"{coefficient.to_text()} is not a naive T^2 coefficient of a signature quadric"
    )


# ---------------------------------------------------------------------------
# The discriminator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiscriminationResult:
    """Comparison of the zeta data of two germs' quadratic parts.

    A differing coefficient refutes equivalence of the quadratic parts
    outright; for inputs with higher-order terms the verdict is flagged
    conditional on the reduction to the quadratic part.
    """

    distinguished: bool
    selector: str | None
    n: int | None
    order: int
    conditional: bool
    inertia_f: Inertia
    inertia_g: Inertia

    def to_json(self) -> dict:
        payload = {
            "verdict": "distinguished" if self.distinguished else "not_distinguished_up_to",
            "order": self.order,
            "conditional": self.conditional,
            "inertia_f": self.inertia_f.to_json(),
            "inertia_g": self.inertia_g.to_json(),
        }
        if self.distinguished:
            payload["selector"] = self.selector
            payload["n"] = self.n
        return payload


def _quadratic_zeta(nvars: int, inertia: Inertia, selector: str, order: int) -> TruncatedSeries:
    if inertia.rank == 0:
        return TruncatedSeries.zero(order)
    return zeta_series(
        QuadraticGerm(dim=nvars, plus=inertia.plus, minus=inertia.minus),
        selector,
        order,
    )


def discriminate(
    f: PolynomialGerm, g: PolynomialGerm, order: int = 6
) -> DiscriminationResult:
    """Compare the naive and signed zeta series of two germs up to T^order.

    Both germs are reduced to their diagonal quadratic parts via Hessian
    inertia; any coefficient mismatch yields a (selector, n) witness.
    """
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")
    if f.nvars != g.nvars:
        raise DimensionMismatch(
            f"germs live in {f.nvars} and {g.nvars} variables"
        )
    _require_singular(f)
    _require_singular(g)
    inertia_f = hessian_inertia(f)
    inertia_g = hessian_inertia(g)
    conditional = any(
        sum(exps) >= 3 for germ in (f, g) for exps in germ.terms()
    )

    pairs = {
        selector: (
            _quadratic_zeta(f.nvars, inertia_f, selector, order),
            _quadratic_zeta(g.nvars, inertia_g, selector, order),
        )
        for selector in (NAIVE, PLUS, MINUS)
    }
    # earliest differing order wins; selectors tie-break naive, plus, minus
    for n in range(1, order + 1):
        for selector in (NAIVE, PLUS, MINUS):
            series_f, series_g = pairs[selector]
            if series_f.coefficient(n) != series_g.coefficient(n):
                return DiscriminationResult(
                    distinguished=True,
                    selector=selector,
                    n=n,
                    order=order,
                    conditional=conditional,
                    inertia_f=inertia_f,
                    inertia_g=inertia_g,
                )
    return DiscriminationResult(
        distinguished=False,
        selector=None,
        n=None,
        order=order,
        conditional=conditional,
        inertia_f=inertia_f,
        inertia_g=inertia_g,
    )
