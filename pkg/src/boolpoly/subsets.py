"""Prime subsets of the positive integers and their complement submonoids.

Here N = {1, 2, 3, ...}.  A subset A of N is prime when a + b in A forces
a in A or b in A; equivalently N - A is closed under addition.  The empty
set is prime, and every nonempty prime subset contains 1.

Since submonoids of N are finitely generated, each prime subset is indexed
by d, the gcd of the minimal generators of its complement:

  * d = 1: A is finite.  We record alpha = max(A) + 1 (alpha = 1 when A is
    empty).
  * d >= 2: A is infinite and N - A = {d*s : s in S} for a numerical
    semigroup S with Frobenius element F; the threshold A_bound = (F+1)*d
    marks the point past which every multiple of d lies outside A.

Infinite prime subsets are constructed from the finite certificate (d, S)
rather than recovered from raw infinite sets; a prefix constructor is
provided and validated against the (d, S) form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Union


class NotPrimeSubsetError(ValueError):
    """The set is not prime; carries the first violating pair (a, b)."""

    def __init__(self, violation: tuple[int, int], message: str | None = None):
        a, b = violation
        super().__init__(
            message or f"not a prime subset: {a}+{b} is in the set but neither summand is"
        )
        self.violation = violation


def _validated_elements(elements: Iterable[int]) -> frozenset[int]:
    out = set()
    for e in elements:
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise ValueError(f"prime subsets live in {{1,2,3,...}}; got {e!r}")
        out.add(e)
    return frozenset(out)


def _finite_violation(elements: frozenset[int]) -> tuple[int, int] | None:
    """First (a, b) with a+b in the set and a, b both outside, scanning (a, b) ascending."""
    for n in sorted(elements):
        for a in range(1, n // 2 + 1):
            b = n - a
            if a not in elements and b not in elements:
                return (a, b)
    return None


# ---------------------------------------------------------------------------
# numerical semigroups
# ---------------------------------------------------------------------------

class NumericalSemigroup:
    """Additively closed subset of N with gcd-1 generators (hence cofinite).

    The generating set is reduced to the unique minimal one.  Membership is
    answered from the Apery-style table ``dist``: dist[r] is the smallest
    semigroup element (or 0) congruent to r modulo the least generator, so
    n lies in the semigroup iff dist[n mod g0] <= n.  The Frobenius element
    is max(dist) - g0, with the convention frobenius = 0 for <1>.
    """

    __slots__ = ("generators", "frobenius", "_dist")

    def __init__(self, generators: Iterable[int]):
        gens = sorted({int(g) for g in generators})
        if not gens or gens[0] < 1:
            raise ValueError("generators must be positive integers")
        d = 0
        for g in gens:
            d = gcd(d, g)
        if d != 1:
            raise ValueError(f"gcd of generators is {d}, not 1; Frobenius element undefined")

        g0 = gens[0]
        # dist[r]: least element of the semigroup (including 0) with residue r mod g0.
        # Bellman-Ford over the residue graph; len(gens)*g0 rounds suffice.
        inf = float("inf")
        dist = [inf] * g0
        dist[0] = 0
        for _ in range(g0):
            changed = False
            for r in range(g0):
                if dist[r] is inf:
                    continue
                for g in gens:
                    nr = (r + g) % g0
                    nd = dist[r] + g
                    if nd < dist[nr]:
                        dist[nr] = nd
                        changed = True
            if not changed:
                break
        self._dist = [int(x) for x in dist]
        self.frobenius = max(0, max(self._dist) - g0)

        # minimality: drop any generator expressible by the others
        minimal = []
        for g in gens:
            others = [h for h in gens if h != g]
            if not others or not _representable(g, others):
                minimal.append(g)
        self.generators = tuple(minimal)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n == 0:
            return True
        g0 = self.generators[0] if self.generators else 1
        g0 = min(self.generators)
        return self._dist[n % g0] <= n

    def elements_up_to(self, bound: int) -> list[int]:
        return [n for n in range(1, bound + 1) if self.contains(n)]

    def is_interval(self) -> bool:
        """Whether the semigroup is {a1, a1+1, a1+2, ...} for a1 = min generator."""
        return self.frobenius == min(self.generators) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup{self.generators}"


def _representable(n: int, gens: list[int]) -> bool:
    reachable = [False] * (n + 1)
    reachable[0] = True
    for v in range(1, n + 1):
        for g in gens:
            if g <= v and reachable[v - g]:
                reachable[v] = True
                break
    return reachable[n]


def frobenius(generators: Iterable[int]) -> int:
    """Largest positive integer not representable over the generators.

    Requires gcd 1.  When 1 is itself representable from the start (the
    semigroup has no gaps) the result is 0 by convention, so that the
    threshold (F+1)*d degenerates correctly.
    """
    return NumericalSemigroup(generators).frobenius


# ---------------------------------------------------------------------------
# prime subsets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FinitePrimeSubset:
    """An explicit finite prime subset (class d = 1).  Validated at construction."""

    elements: frozenset[int]

    def __init__(self, elements: Iterable[int]):
        object.__setattr__(self, "elements", _validated_elements(elements))
        violation = _finite_violation(self.elements)
        if violation is not None:
            raise NotPrimeSubsetError(violation)

    @property
    def is_empty(self) -> bool:
        return not self.elements

    @property
    def alpha(self) -> int:
        """max(A) + 1, with the empty-set convention alpha = 1."""
        return (max(self.elements) + 1) if self.elements else 1

    def contains(self, a: int) -> bool:
        return a in self.elements

    def elements_up_to(self, bound: int) -> list[int]:
        return sorted(e for e in self.elements if e <= bound)

    def to_json_dict(self) -> dict:
        return {"finite": sorted(self.elements)}

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.elements))) + "}"


@dataclass(frozen=True)
class CofinitePrimeSubset:
    """An infinite prime subset given by its complement N - A = d*S (class d >= 2)."""

    d: int
    semigroup: NumericalSemigroup

    def __init__(self, d: int, semigroup: NumericalSemigroup | Iterable[int]):
        if not isinstance(semigroup, NumericalSemigroup):
            semigroup = NumericalSemigroup(semigroup)
        if not isinstance(d, int) or d < 2:
            raise ValueError(f"cofinite prime subsets need d >= 2, got {d!r}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "semigroup", semigroup)

    @property
    def is_empty(self) -> bool:
        return False

    @property
    def frobenius(self) -> int:
        return self.semigroup.frobenius

    @property
    def big_A(self) -> int:
        """The threshold (F+1)*d: every multiple of d at or past it avoids A."""
        return (self.semigroup.frobenius + 1) * self.d

    def contains(self, a: int) -> bool:
        if a < 1:
            return False
        return not (a % self.d == 0 and self.semigroup.contains(a // self.d))

    def contains_d(self) -> bool:
        return not self.semigroup.contains(1)

    def elements_up_to(self, bound: int) -> list[int]:
        return [a for a in range(1, bound + 1) if self.contains(a)]

    def complement_up_to(self, bound: int) -> list[int]:
        return [a for a in range(1, bound + 1) if not self.contains(a)]

    def to_json_dict(self) -> dict:
        return {"d": self.d, "semigroup": list(self.semigroup.generators)}

    def __str__(self) -> str:
        return f"d={self.d};S=" + ",".join(map(str, self.semigroup.generators))

    @classmethod
    def from_prefix(cls, prefix: Iterable[int], d: int, bound: int) -> "CofinitePrimeSubset":
        """Build from an observed membership prefix on [1..bound] plus declared d.

        The complement prefix must consist of multiples of d whose quotients
        generate a semigroup reproducing the prefix exactly; otherwise the
        prefix is not a valid window of any (d, S) subset.
        """
        prefix_set = _validated_elements(prefix)
        if any(e > bound for e in prefix_set):
            raise ValueError("prefix contains elements beyond the declared bound")
        complement = [n for n in range(1, bound + 1) if n not in prefix_set]
        if not complement:
            raise ValueError("empty complement on the window; cannot certify an infinite subset")
        if any(c % d for c in complement):
            raise ValueError(f"complement element not divisible by d={d}")
        quotients = [c // d for c in complement]
        gens = _minimal_generators_from_prefix(quotients)
        subset = cls(d, NumericalSemigroup(gens))
        if subset.elements_up_to(bound) != sorted(prefix_set):
            raise ValueError("prefix is not consistent with any (d, S) subset on the window")
        return subset


PrimeSubset = Union[FinitePrimeSubset, CofinitePrimeSubset]


def _minimal_generators_from_prefix(values: list[int]) -> list[int]:
    """Minimal generators of the semigroup whose window of elements is given.

    Complete for generators within the window because semigroups are graded:
    an element is a generator iff it is not a sum of two smaller elements.
    """
    vals = sorted(set(values))
    vset = set(vals)
    gens = [v for v in vals if not any(w in vset and (v - w) in vset for w in vals if w < v)]
    if not gens:
        raise ValueError("no generators found in prefix window")
    return gens


def as_prime_subset(value) -> PrimeSubset:
    """Coerce raw iterables of ints to a validated FinitePrimeSubset."""
    if isinstance(value, (FinitePrimeSubset, CofinitePrimeSubset)):
        return value
    return FinitePrimeSubset(value)


def is_prime_subset(subset, check_bound: int | None = None):
    """Primality check; returns (ok, violating_pair_or_None).

    Finite sets (raw iterables or FinitePrimeSubset) get a complete check:
    only finitely many sums land inside.  Cofinite subsets are prime by
    construction, but the pair scan is re-run up to check_bound anyway.
    """
    if isinstance(subset, CofinitePrimeSubset):
        bound = check_bound if check_bound is not None else 2 * subset.big_A + 2 * subset.d
        for n in range(2, bound + 1):
            if not subset.contains(n):
                continue
            for a in range(1, n // 2 + 1):
                if not subset.contains(a) and not subset.contains(n - a):
                    return False, (a, n - a)
        return True, None
    if isinstance(subset, FinitePrimeSubset):
        elements = subset.elements
    else:
        elements = _validated_elements(subset)
        if check_bound is not None and elements and max(elements) > check_bound:
            raise ValueError("check_bound must cover the largest element")
    violation = _finite_violation(elements)
    return (violation is None), violation


def complement_generators(subset) -> tuple[int, ...]:
    """Minimal generating set of N - A for a finite prime subset A.

    Raises NotPrimeSubsetError (with the violating pair) when A is not prime.
    """
    if isinstance(subset, CofinitePrimeSubset):
        return tuple(subset.d * a for a in subset.semigroup.generators)
    if not isinstance(subset, FinitePrimeSubset):
        subset = FinitePrimeSubset(subset)  # raises with the violating pair
    elements = subset.elements
    top = max(elements) if elements else 0
    first = next(n for n in range(1, top + 2) if n not in elements)
    bound = top + first  # any complement element past this splits as first + (smaller complement element)
    in_complement = [False] + [n not in elements for n in range(1, bound + 1)]
    reachable = [False] * (bound + 1)
    reachable[0] = True
    gens = []
    for n in range(1, bound + 1):
        if not in_complement[n]:
            continue
        if not reachable[n]:
            gens.append(n)
        for j in range(n, bound + 1):
            if reachable[j - n] and in_complement[j]:
                reachable[j] = True
    return tuple(gens)


@dataclass(frozen=True)
class ClassParams:
    """The Theorem-class parameters attached to a prime subset."""

    d: int
    alpha: int | None = None
    frobenius: int | None = None
    big_A: int | None = None
    semigroup: NumericalSemigroup | None = None
    complement_generators: tuple[int, ...] = ()

    def to_json_dict(self) -> dict:
        out: dict = {"d": self.d, "complement_generators": list(self.complement_generators)}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        if self.frobenius is not None:
            out["frobenius"] = self.frobenius
            out["big_A"] = self.big_A
            out["semigroup"] = list(self.semigroup.generators)
        return out


def class_params(subset: PrimeSubset) -> ClassParams:
    """d = gcd of the complement's minimal generators, plus alpha or (F, (F+1)d)."""
    subset = as_prime_subset(subset)
    if isinstance(subset, FinitePrimeSubset):
        gens = complement_generators(subset)
        d = 0
        for g in gens:
            d = gcd(d, g)
        return ClassParams(d=d, alpha=subset.alpha, complement_generators=gens)
    return ClassParams(
        d=subset.d,
        frobenius=subset.frobenius,
        big_A=subset.big_A,
        semigroup=subset.semigroup,
        complement_generators=tuple(subset.d * a for a in subset.semigroup.generators),
    )


def infer_prime_subset(elements: Iterable[int], bound: int) -> PrimeSubset:
    """Reconstruct a prime subset from its observed window A & [1..bound].

    d is read off as the gcd of the complement window; d = 1 yields the
    finite subset as observed (requiring max < bound so the window plausibly
    saw all of it), d >= 2 yields the (d, S) form validated against the
    window.  The certificate is only as good as the window: callers must
    treat the result as bounded evidence.
    """
    observed = _validated_elements(elements)
    if any(e > bound for e in observed):
        raise ValueError("observed elements beyond the window bound")
    complement = [n for n in range(1, bound + 1) if n not in observed]
    if not complement:
        raise ValueError(f"window [1..{bound}] is entirely inside the subset; cannot classify")
    d = 0
    for c in complement:
        d = gcd(d, c)
    if d == 1:
        if observed and max(observed) >= bound:
            raise ValueError("window too small: largest observed element touches the bound")
        return FinitePrimeSubset(observed)
    return CofinitePrimeSubset.from_prefix(observed, d, bound)


# ---------------------------------------------------------------------------
# text / JSON forms
# ---------------------------------------------------------------------------

_DS_RE = re.compile(r"^\s*d\s*=\s*(\d+)\s*;\s*S\s*=\s*([\d\s,]+)$")


def parse_subset(text: str) -> PrimeSubset:
    """Parse "1,2,5" (finite, "" for empty) or "d=2;S=2,3" (cofinite)."""
    text = text.strip()
    m = _DS_RE.match(text)
    if m:
        d = int(m.group(1))
        gens = [int(t) for t in m.group(2).split(",") if t.strip()]
        return CofinitePrimeSubset(d, NumericalSemigroup(gens))
    if not text:
        return FinitePrimeSubset(())
    return FinitePrimeSubset(int(t) for t in text.split(",") if t.strip())


def subset_from_json_dict(data: dict) -> PrimeSubset:
    if "finite" in data:
        return FinitePrimeSubset(data["finite"])
    return CofinitePrimeSubset(int(data["d"]), NumericalSemigroup(data["semigroup"]))
