"""Ideals of Boolean polynomial semirings: exact membership, bounded primality.

Because addition is idempotent, an element of the ideal generated by G is a
finite union of monomial shifts of generators.  That gives an exact decision
procedure (shifted cover): f lies in <G> iff Supp(f) equals the union of all
shifted generator supports contained in Supp(f).  A shift fitting inside
Supp(f) cannot raise degree, so enumerating family generators up to deg(f)
is complete even for infinite families.

Primality of an infinite ideal is not decidable by finite scanning, so
``primality_search`` is explicit about its bound: it either returns the
first counterexample pair in a documented deterministic order or certifies
that none exists among polynomials with support inside {0..D}.  The scan
order is reproducible regardless of worker count: workers report their local
minimum and a reducer keeps the globally least pair.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .poly import Poly, VariableMismatchError, parse_poly


# ---------------------------------------------------------------------------
# ideal specifications
# ---------------------------------------------------------------------------

class IdealSpec:
    """Common behaviour of generator-backed ideal descriptions.

    Subclasses provide ``generators_up_to(degree)``, complete and canonical:
    every generator of degree <= the bound, each nonzero, sorted by
    (degree, support), duplicate-free.  ``shift_invariant`` marks ideals all
    of whose generators carry a constant term; for those, membership is
    unchanged under multiplication by monomials, which bounded scans exploit.
    Subclasses may add ``fast_support_member(support)``, an O(|support|)-ish
    membership test equivalent to the shifted cover (tests enforce the
    equivalence).
    """

    nvars: int = 1
    shift_invariant: bool = False

    def generators_up_to(self, degree: int) -> tuple[Poly, ...]:
        raise NotImplementedError

    def describe(self) -> str:
        return type(self).__name__

    def to_json_dict(self) -> dict:
        raise NotImplementedError


def _canonical_generator_list(gens: Iterable[Poly]) -> tuple[Poly, ...]:
    unique = {g for g in gens if not g.is_zero()}
    return tuple(sorted(unique, key=lambda g: (g.total_degree(), g.support)))


class ExplicitSpec(IdealSpec):
    """An ideal given by an explicit finite generator list."""

    def __init__(self, generators: Iterable, nvars: int | None = None):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_poly(g, nvars)
            gens.append(g)
        if gens:
            n = nvars if nvars is not None else gens[0].nvars
        else:
            n = nvars if nvars is not None else 1
        for g in gens:
            if g.nvars != n:
                raise VariableMismatchError("generators use inconsistent variable counts")
            if g.is_zero():
                raise ValueError("explicit generators must be nonzero")
        self.nvars = n
        self.generators = _canonical_generator_list(gens)
        self.shift_invariant = bool(self.generators) and all(
            g.has_constant_term() for g in self.generators
        )

    def generators_up_to(self, degree: int) -> tuple[Poly, ...]:
        return tuple(g for g in self.generators if g.total_degree() <= degree)

    def describe(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def to_json_dict(self) -> dict:
        return {"explicit": [str(g) for g in self.generators]}

    def __eq__(self, other):
        return isinstance(other, ExplicitSpec) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)


class PredicateSpec(IdealSpec):
    """An ideal known only through a membership characterization.

    Such specs cannot enumerate generators, so positive verdicts carry no
    cover; they exist to compare a generator presentation against an
    alternative description of the same set.
    """

    def __init__(self, name: str, predicate: Callable[[Poly], bool], nvars: int = 1):
        self.name = name
        self.membership_predicate = predicate
        self.nvars = nvars

    def generators_up_to(self, degree: int) -> tuple[Poly, ...]:
        raise NotImplementedError(f"{self.name} is characterization-only")

    def describe(self) -> str:
        return f"{{f : {self.name}}}"


def penultimate_exponent_spec() -> PredicateSpec:
    """{f : x^(deg f - 1) lies in Supp(f)}, plus 0 — a membership-only description."""
    return PredicateSpec(
        "x^(deg-1) in Supp(f)",
        lambda f: f.is_zero() or f.penultimate_in_support(),
    )


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipVerdict:
    """Membership answer with a shifted-cover witness when available.

    For a positive verdict from a generator-backed spec, ``cover`` lists
    (generator, shift) pairs whose shifted supports each sit inside Supp(f)
    and union to it exactly.  Characterization-backed specs return
    cover=None.  Negative verdicts list the exponents no fitted shift can
    reach.
    """

    is_member: bool
    cover: tuple | None = None
    uncovered: tuple | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"is_member": self.is_member}
        if self.cover is not None:
            out["cover"] = [
                {"generator": str(g), "shift": list(k) if isinstance(k, tuple) else k}
                for g, k in self.cover
            ]
        if self.uncovered is not None:
            out["uncovered"] = [list(e) if isinstance(e, tuple) else e for e in self.uncovered]
        return out


def _shift_exponent(e, k, nvars: int):
    if nvars == 1:
        return e + k
    return tuple(x + y for x, y in zip(e, k))


def _candidate_shifts(support: Sequence, base, nvars: int):
    """Shifts k with k + base inside the support; complete since base must land there."""
    out = []
    for s in support:
        if nvars == 1:
            k = s - base
            if k >= 0:
                out.append(k)
        else:
            k = tuple(x - y for x, y in zip(s, base))
            if all(c >= 0 for c in k):
                out.append(k)
    return out


def fitted_shifts(f: Poly, generators: Iterable[Poly]):
    """All (generator, shift, shifted_support) with the shifted support inside Supp(f)."""
    supp = set(f.support)
    out = []
    for g in generators:
        if g.total_degree() > f.total_degree():
            continue
        base = g.support[0]
        for k in _candidate_shifts(f.support, base, f.nvars):
            shifted = tuple(_shift_exponent(e, k, f.nvars) for e in g.support)
            if all(e in supp for e in shifted):
                out.append((g, k, shifted))
    return out


def member(f: Poly, spec: IdealSpec) -> MembershipVerdict:
    """Exact shifted-cover membership; the zero polynomial belongs to every ideal."""
    if f.nvars != spec.nvars:
        raise VariableMismatchError(
            f"polynomial has {f.nvars} variables, spec has {spec.nvars}"
        )
    if f.is_zero():
        return MembershipVerdict(True, cover=())
    predicate = getattr(spec, "membership_predicate", None)
    if predicate is not None:
        return MembershipVerdict(bool(predicate(f)), cover=None)

    gens = spec.generators_up_to(f.total_degree())
    fits = fitted_shifts(f, gens)
    supp = set(f.support)
    union = set()
    for _, _, shifted in fits:
        union.update(shifted)
    if union != supp:
        return MembershipVerdict(False, uncovered=tuple(sorted(supp - union)))

    # greedy pruned cover, deterministic: keep a fit only if it adds coverage
    cover = []
    acc: set = set()
    for g, k, shifted in sorted(fits, key=lambda t: (t[1] if f.nvars > 1 else (t[1],), t[0].support)):
        new = [e for e in shifted if e not in acc]
        if new:
            cover.append((g, k))
            acc.update(shifted)
        if len(acc) == len(supp):
            break
    return MembershipVerdict(True, cover=tuple(cover))


def is_member(f: Poly, spec: IdealSpec) -> bool:
    """Boolean membership; uses a spec's fast path when it has one."""
    if f.is_zero():
        return True
    fast = getattr(spec, "fast_support_member", None)
    if fast is not None and f.nvars == spec.nvars:
        return fast(f.support)
    return member(f, spec).is_member


def enumerate_generators(spec: IdealSpec, degree: int) -> tuple[Poly, ...]:
    """Every generator of the spec with degree <= the bound, canonical and complete."""
    if degree < 0:
        raise ValueError("degree bound must be >= 0")
    return spec.generators_up_to(degree)


def extract_A(spec: IdealSpec, bound: int) -> frozenset[int]:
    """{a <= bound : 1 + x^a belongs to the ideal} (univariate)."""
    if spec.nvars != 1:
        raise VariableMismatchError("extract_A is univariate")
    return frozenset(a for a in range(1, bound + 1) if is_member(Poly((0, a)), spec))


def contains_x(spec: IdealSpec) -> bool:
    """Whether the ideal contains the monomial x (the category test)."""
    return is_member(Poly.variable(0, spec.nvars), spec)


# ---------------------------------------------------------------------------
# bounded ideal equality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EqualityVerdict:
    equal: bool
    witness: Poly | None = None
    witness_member_of: str | None = None  # "left" or "right"

    def to_json_dict(self) -> dict:
        out: dict = {"equal": self.equal}
        if self.witness is not None:
            out["witness"] = str(self.witness)
            out["witness_member_of"] = self.witness_member_of
        return out


def _enumerable(spec: IdealSpec) -> bool:
    return getattr(spec, "membership_predicate", None) is None


def equal_up_to(spec_a: IdealSpec, spec_b: IdealSpec, degree: int) -> EqualityVerdict:
    """Membership agreement for every polynomial with support within the bound.

    When both sides enumerate generators, mutual generator membership at the
    bound settles it: any member of degree <= D is covered by generators of
    degree <= D, each of which the other ideal then contains.  Otherwise the
    full support window is scanned and the first disagreement returned.
    """
    if spec_a.nvars != spec_b.nvars:
        raise VariableMismatchError("cannot compare ideals over different variable counts")
    if _enumerable(spec_a) and _enumerable(spec_b):
        for g in spec_a.generators_up_to(degree):
            if not is_member(g, spec_b):
                return EqualityVerdict(False, witness=g, witness_member_of="left")
        for g in spec_b.generators_up_to(degree):
            if not is_member(g, spec_a):
                return EqualityVerdict(False, witness=g, witness_member_of="right")
        return EqualityVerdict(True)

    from .poly import iter_supports_univariate, simplex_monomials

    if spec_a.nvars == 1:
        candidates = (Poly(s) for s in iter_supports_univariate(degree))
    else:
        monos = simplex_monomials(degree, spec_a.nvars)
        candidates = (
            Poly(tuple(monos[i] for i in range(len(monos)) if mask >> i & 1), spec_a.nvars)
            for mask in range(1, 1 << len(monos))
        )
    for f in candidates:
        in_a = is_member(f, spec_a)
        in_b = is_member(f, spec_b)
        if in_a != in_b:
            return EqualityVerdict(False, witness=f, witness_member_of="left" if in_a else "right")
    return EqualityVerdict(True)


# ---------------------------------------------------------------------------
# bounded primality search (univariate mask engine)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimalityReport:
    """Outcome of the bounded scan: evidence, not proof, at the stated bound."""

    outcome: str  # "prime_up_to_bound" | "counterexample"
    bound: int
    f: Poly | None = None
    g: Poly | None = None
    product_witness: MembershipVerdict | None = None

    @property
    def is_prime_up_to_bound(self) -> bool:
        return self.outcome == "prime_up_to_bound"

    def to_json_dict(self) -> dict:
        out: dict = {"outcome": self.outcome, "bound": self.bound}
        if self.f is not None:
            out["f"] = str(self.f)
            out["g"] = str(self.g)
            out["product"] = str(self.f * self.g)
            if self.product_witness is not None:
                out["product_witness"] = self.product_witness.to_json_dict()
        return out


def _support_of_mask(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _mask_of_support(support: Sequence[int]) -> int:
    m = 0
    for e in support:
        m |= 1 << e
    return m


def _minkowski_mask(m1: int, m2: int) -> int:
    r = 0
    b = 0
    g = m2
    while g:
        if g & 1:
            r |= m1 << b
        g >>= 1
        b += 1
    return r


class _MaskMembership:
    """Membership on bitmask supports with per-spec memoization.

    Uses the spec's fast support test when present, otherwise the generic
    shifted cover over generators enumerated once to the given degree limit.
    Shift-invariant specs are memoized on the normalized mask.
    """

    def __init__(self, spec: IdealSpec, max_degree: int):
        self.spec = spec
        self.fast = getattr(spec, "fast_support_member", None)
        self.memo: dict[int, bool] = {}
        self.normalize = spec.shift_invariant
        if self.fast is None:
            gens = spec.generators_up_to(max_degree)
            self.gen_masks = [
                (_mask_of_support(g.support), g.support[-1], g.support[0]) for g in gens
            ]

    def __call__(self, mask: int) -> bool:
        if mask == 0:
            return True
        key = mask >> ((mask & -mask).bit_length() - 1) if self.normalize else mask
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        support = _support_of_mask(key)
        if self.fast is not None:
            result = bool(self.fast(support))
        else:
            result = self._cover(key, support)
        self.memo[key] = result
        return result

    def _cover(self, mask: int, support: tuple[int, ...]) -> bool:
        deg = support[-1]
        acc = 0
        for gmask, gdeg, gmin in self.gen_masks:
            if gdeg > deg:
                continue
            for s in support:
                k = s - gmin
                if k < 0:
                    continue
                shifted = gmask << k
                if shifted & ~mask == 0:
                    acc |= shifted
            if acc == mask:
                return True
        return acc == mask


def _ordered_candidates(degree_bound: int) -> list[tuple[tuple[int, ...], int]]:
    """All nonzero supports within {0..D} as (support, mask), in lexicographic order."""
    from .poly import iter_supports_univariate

    return [(s, _mask_of_support(s)) for s in iter_supports_univariate(degree_bound)]


def _scan_pairs(spec: IdealSpec, degree_bound: int, f_filter=None):
    """Least counterexample pair in the order (deg f + deg g, supp f, supp g).

    Scans unordered pairs of non-members (member factors can never appear in
    a counterexample); within the schedule f is the lexicographically
    smaller support.  Returns (key, f_support, g_support) or None.
    """
    candidates = _ordered_candidates(degree_bound)
    membership = _MaskMembership(spec, 2 * degree_bound)
    nonmembers = [(s, m) for s, m in candidates if not membership(m)]
    by_degree: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for s, m in nonmembers:
        by_degree.setdefault(s[-1], []).append((s, m))

    for total in range(0, 2 * degree_bound + 1):
        for fs, fm in nonmembers:
            if f_filter is not None and not f_filter(fs):
                continue
            gdeg = total - fs[-1]
            if gdeg < 0 or gdeg > degree_bound:
                continue
            for gs, gm in by_degree.get(gdeg, ()):
                if gs < fs:
                    continue
                if membership(_minkowski_mask(fm, gm)):
                    return (total, fs, gs), fs, gs
    return None


def _scan_partition(args):
    spec, degree_bound, worker_index, worker_count = args
    return _scan_pairs(
        spec,
        degree_bound,
        f_filter=lambda fs: (hash(fs) % worker_count) == worker_index,
    )


def primality_search(spec: IdealSpec, degree_bound: int, workers: int = 1) -> PrimalityReport:
    """Exhaustive counterexample scan over supports within {0..degree_bound}.

    Reports the first pair (f, g) in the order (deg f + deg g, then the two
    supports lexicographically) with f*g a member while neither factor is;
    the pair is returned with the lexicographically larger support first,
    the orientation products are conventionally written in.  With several
    workers the candidate space is partitioned and the least key wins, so
    the result does not depend on scheduling.
    """
    if spec.nvars != 1:
        raise VariableMismatchError("primality_search is univariate; see the multivariate search")
    if workers > 1:
        jobs = [(spec, degree_bound, i, workers) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for r in pool.map(_scan_partition, jobs) if r is not None]
        found = min(results, default=None)
    else:
        found = _scan_pairs(spec, degree_bound)

    if found is None:
        return PrimalityReport("prime_up_to_bound", degree_bound)
    _, fs, gs = found
    f, g = Poly(max(fs, gs)), Poly(min(fs, gs))
    return PrimalityReport(
        "counterexample",
        degree_bound,
        f=f,
        g=g,
        product_witness=member(f * g, spec),
    )


def spec_from_json_dict(data: dict) -> IdealSpec:
    """Inverse of the ideal-spec JSON forms ({"explicit": ...} / {"family": ...})."""
    if "explicit" in data:
        return ExplicitSpec(data["explicit"], nvars=data.get("nvars"))
    if "family" in data:
        from .classify import family_from_json_dict

        return family_from_json_dict(data["family"])
    raise ValueError("unrecognized ideal spec JSON")
