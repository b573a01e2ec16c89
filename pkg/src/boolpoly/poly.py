"""Exact arithmetic for polynomials over the two-element Boolean semifield.

The Boolean semifield has elements {0, 1} with idempotent addition
(1 + 1 = 1).  A polynomial with such coefficients is determined entirely by
its support, the finite set of exponents carrying coefficient 1, and the
semiring operations become set operations:

    f + g   has support  Supp(f) | Supp(g)
    f * g   has support  {a + b : a in Supp(f), b in Supp(g)}   (Minkowski sum)

Values are immutable and always canonical: the support is sorted and
duplicate-free, the zero polynomial is the empty support, and the unit is
the support {0}.  Univariate exponents are plain non-negative ints; with
n >= 2 variables an exponent is an n-tuple of non-negative ints, ordered
lexicographically.  Nothing here assumes a dense exponent range, so sparse
high-degree supports cost no more than low-degree ones.

Text format: terms joined by '+', each term a '*'-separated product of
factors "1", "x", "x^3", or (multivariate) "x1^2*x2".  "x"/"y" are accepted
as aliases for "x1"/"x2".  JSON format: {"nvars": 1, "support": [0, 2, 3]},
with exponent vectors as arrays when nvars > 1.  Parsers accept unsorted
and duplicated terms and canonicalize.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class VariableMismatchError(ValueError):
    """Raised when combining polynomials over different variable counts."""


class PolyParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


def _canonical_support(support: Iterable, nvars: int) -> tuple:
    items = set()
    for e in support:
        if nvars == 1:
            if isinstance(e, tuple):
                if len(e) != 1:
                    raise VariableMismatchError(
                        f"exponent {e!r} has {len(e)} coordinates, expected 1"
                    )
                e = e[0]
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponent must be a non-negative int, got {e!r}")
            items.add(e)
        else:
            e = tuple(e)
            if len(e) != nvars:
                raise VariableMismatchError(
                    f"exponent {e!r} has {len(e)} coordinates, expected {nvars}"
                )
            for c in e:
                if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                    raise ValueError(f"exponent coordinate must be a non-negative int, got {c!r}")
            items.add(e)
    return tuple(sorted(items))


@dataclass(frozen=True, slots=True)
class Poly:
    """A Boolean polynomial, canonically represented by its exponent support."""

    support: tuple
    nvars: int = 1

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("nvars must be >= 1")
        object.__setattr__(self, "support", _canonical_support(self.support, self.nvars))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int = 1) -> "Poly":
        return cls((), nvars)

    @classmethod
    def one(cls, nvars: int = 1) -> "Poly":
        return cls((0,) if nvars == 1 else ((0,) * nvars,), nvars)

    @classmethod
    def variable(cls, index: int = 0, nvars: int = 1) -> "Poly":
        """The polynomial x_{index+1} (plain x when univariate)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        if nvars == 1:
            return cls((1,), 1)
        e = [0] * nvars
        e[index] = 1
        return cls((tuple(e),), nvars)

    @classmethod
    def monomial(cls, exponent, nvars: int = 1) -> "Poly":
        return cls((exponent,), nvars)

    # -- predicates / measures --------------------------------------------

    def is_zero(self) -> bool:
        return not self.support

    def is_one(self) -> bool:
        return self == Poly.one(self.nvars)

    def degree(self) -> int:
        """Largest exponent of a nonzero univariate polynomial."""
        if self.nvars != 1:
            raise VariableMismatchError("degree is univariate; use total_degree")
        if not self.support:
            raise ValueError("the zero polynomial has no degree")
        return self.support[-1]

    def total_degree(self) -> int:
        """Largest coordinate sum over the support (equals degree when nvars=1)."""
        if not self.support:
            raise ValueError("the zero polynomial has no degree")
        if self.nvars == 1:
            return self.support[-1]
        return max(sum(e) for e in self.support)

    def penultimate_in_support(self) -> bool:
        """Whether x^(deg-1) appears in a nonzero univariate polynomial.

        A degree-0 polynomial reports False (there is no exponent deg-1).
        """
        d = self.degree()
        return d >= 1 and (d - 1) in set(self.support)

    def has_constant_term(self) -> bool:
        if not self.support:
            return False
        zero = 0 if self.nvars == 1 else (0,) * self.nvars
        return self.support[0] == zero

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.nvars != other.nvars:
            raise VariableMismatchError(
                f"cannot combine polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        return Poly(set(self.support) | set(other.support), self.nvars)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        if not self.support or not other.support:
            return Poly.zero(self.nvars)
        if self.nvars == 1:
            prod = {a + b for a in self.support for b in other.support}
        else:
            prod = {
                tuple(x + y for x, y in zip(a, b))
                for a in self.support
                for b in other.support
            }
        return Poly(prod, self.nvars)

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shifted(self, offset) -> "Poly":
        """Multiply by the monomial with the given exponent (support shift)."""
        if self.nvars == 1:
            if offset < 0:
                raise ValueError("shift must be non-negative")
            return Poly(tuple(e + offset for e in self.support), 1)
        offset = tuple(offset)
        if any(c < 0 for c in offset):
            raise ValueError("shift must be non-negative")
        return Poly(
            tuple(tuple(x + y for x, y in zip(e, offset)) for e in self.support),
            self.nvars,
        )

    def normalized(self) -> "Poly":
        """Divide out the largest common monomial factor.

        Univariate: subtract the minimal exponent.  Multivariate: subtract
        the componentwise minimum of the support.  Zero is returned as is.
        """
        if not self.support:
            return self
        if self.nvars == 1:
            m = self.support[0]
            return Poly(tuple(e - m for e in self.support), 1) if m else self
        mins = tuple(min(e[i] for e in self.support) for i in range(self.nvars))
        if not any(mins):
            return self
        return Poly(
            tuple(tuple(x - y for x, y in zip(e, mins)) for e in self.support),
            self.nvars,
        )

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def to_json_dict(self) -> dict:
        support = [list(e) for e in self.support] if self.nvars > 1 else list(self.support)
        return {"nvars": self.nvars, "support": support}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Poly":
        nvars = int(data["nvars"])
        support = data["support"]
        if nvars > 1:
            support = [tuple(e) for e in support]
        return cls(tuple(support), nvars)


def product(polys: Iterable[Poly], nvars: int = 1) -> Poly:
    """Product of an iterable of polynomials; the empty product is 1."""
    result = Poly.one(nvars)
    for p in polys:
        result = result * p
    return result


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(r"\s*(1|x\d*|y)\s*(?:\^\s*(\d+))?\s*$")


def _split_tracking(text: str, sep: str) -> Iterator[tuple[str, int]]:
    start = 0
    for i, ch in enumerate(text):
        if ch == sep:
            yield text[start:i], start
            start = i + 1
    yield text[start:], start


def _var_index(token: str, position: int) -> int:
    """1-based variable index for a variable token ('x' -> 1, 'y' -> 2, 'x3' -> 3)."""
    if token == "x":
        return 1
    if token == "y":
        return 2
    idx = int(token[1:])
    if idx < 1:
        raise PolyParseError(f"variable index must be >= 1, got {token!r}", position)
    return idx


def parse_poly(text: str, nvars: int | None = None) -> Poly:
    """Parse the text format; unsorted and duplicated terms are canonicalized.

    With nvars=None the variable count is inferred from the largest variable
    index mentioned (1 if the text uses no variables).
    """
    if not text.strip():
        raise PolyParseError("empty polynomial", 0)
    if text.strip() == "0":
        return Poly.zero(nvars or 1)

    terms: list[dict[int, int]] = []
    max_index = 1
    for term, tpos in _split_tracking(text, "+"):
        if not term.strip():
            raise PolyParseError("empty term", tpos)
        exps: dict[int, int] = {}
        for factor, fpos in _split_tracking(term, "*"):
            if not factor.strip():
                raise PolyParseError("empty factor", tpos + fpos)
            m = _FACTOR_RE.match(factor)
            if m is None:
                raise PolyParseError(f"cannot parse factor {factor.strip()!r}", tpos + fpos)
            token, expo = m.group(1), m.group(2)
            if token == "1":
                if expo is not None:
                    raise PolyParseError("'1' does not take an exponent", tpos + fpos)
                continue
            idx = _var_index(token, tpos + fpos)
            max_index = max(max_index, idx)
            exps[idx] = exps.get(idx, 0) + (1 if expo is None else int(expo))
        terms.append(exps)

    n = nvars if nvars is not None else max_index
    if max_index > n:
        raise PolyParseError(f"variable x{max_index} exceeds nvars={n}", 0)
    support = []
    for exps in terms:
        if n == 1:
            support.append(exps.get(1, 0))
        else:
            support.append(tuple(exps.get(i + 1, 0) for i in range(n)))
    return Poly(tuple(support), n)


def _format_exponent(e, nvars: int) -> str:
    if nvars == 1:
        if e == 0:
            return "1"
        return "x" if e == 1 else f"x^{e}"
    if not any(e):
        return "1"
    parts = []
    for i, c in enumerate(e):
        if c == 0:
            continue
        name = f"x{i + 1}"
        parts.append(name if c == 1 else f"{name}^{c}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    if not p.support:
        return "0"
    return "+".join(_format_exponent(e, p.nvars) for e in p.support)


# ---------------------------------------------------------------------------
# support enumeration helpers (used by bounded scans elsewhere)
# ---------------------------------------------------------------------------

def iter_supports_univariate(degree_bound: int) -> Iterator[tuple[int, ...]]:
    """All nonzero supports within {0..degree_bound}, in lexicographic order."""
    exps = list(range(degree_bound + 1))

    def rec(prefix: list[int], start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, len(exps)):
            prefix.append(exps[i])
            yield tuple(prefix)
            yield from rec(prefix, i + 1)
            prefix.pop()

    yield from rec([], 0)


def simplex_monomials(total_degree: int, nvars: int) -> list:
    """Exponents of total degree <= total_degree, in canonical (lex) order."""
    if nvars == 1:
        return list(range(total_degree + 1))

    def rec(remaining: int, coords: list[int]) -> Iterator[tuple[int, ...]]:
        if len(coords) == nvars - 1:
            for c in range(remaining + 1):
                yield tuple(coords + [c])
            return
        for c in range(remaining + 1):
            yield from rec(remaining - c, coords + [c])

    return sorted(rec(total_degree, []))
