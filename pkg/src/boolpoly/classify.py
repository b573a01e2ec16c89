"""Classification of prime ideals not containing x, by prime-subset class.

Every prime ideal P determines the prime subset A_P = {a : 1 + x^a in P}.
Writing d for the gcd of the minimal generators of N - A_P, the prime
ideals in each class admit exactly two shapes (plus the ideals containing
x, which are determined by A_P alone):

  * the "anchored" ideal <{1 + x^a + x^m : a in A, m >= 0}> — one ideal per
    class, the larger exponent floating freely over an anchor in A;
  * a "star" ideal <{1 + x^m + x^(m+a) : a in A, m >= 0} u Q> — the two
    upper exponents slide together at gap a; when d > 1 the family also
    carries anchored trinomials for anchors a < d, a >= (F+1)d, or d ∤ a.
    Q ranges over polynomials satisfying the three-clause star property,
    which is why star ideals come in infinite profusion.

Which shape a given prime ideal has is detected through bounded membership
probes: a single probe of the right form pins the branch, and the two
branches exclude each other.  All verdicts here are evidence at the stated
degree bound; the classification report says so explicitly.

Each family's ``fast_support_member`` closes the shifted-cover criterion
into a direct support test (derivations in the docstrings); the test suite
checks these against the generic cover algorithm on exhaustive windows.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .poly import Poly, parse_poly
from .subsets import (
    CofinitePrimeSubset,
    FinitePrimeSubset,
    PrimeSubset,
    as_prime_subset,
    class_params,
    infer_prime_subset,
    is_prime_subset,
    subset_from_json_dict,
)
from . import ideals
from .ideals import IdealSpec, MembershipVerdict, PrimalityReport, member, is_member


class InvalidFamilyError(ValueError):
    """A family description violating its structural invariants."""


class NonPrimeIdealError(ValueError):
    """Classification was asked for an ideal the bounded search refutes."""

    def __init__(self, report: PrimalityReport):
        super().__init__(
            f"not prime at bound {report.bound}: ({report.f})*({report.g}) is a member, factors are not"
        )
        self.report = report


class InconclusiveClassificationError(ValueError):
    """The degree bound was too small to pin the classification down."""


class InconsistentBranchError(ValueError):
    """Both branch probes fired, contradicting their mutual exclusion."""


# ---------------------------------------------------------------------------
# property star
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarVerdict:
    satisfied: bool
    failing_clause: int | None  # 1, 2, or 3
    clauses: tuple[bool, bool, bool]


def property_star(f: Poly, subset, constant_as_anchor: bool = True) -> StarVerdict:
    """The three-clause condition on f = 1 + x^(m_1) + ... + x^(m_r).

    (1) no m_i lies in A; (2) some difference m_j - m_i lies in A; (3) some
    exponent m_t has |m_t - m_j| outside A for every j.  Whether t may be
    the constant exponent 0 is ambiguous in clause (3); with
    constant_as_anchor (default) it may, making (3) follow from (1), and
    this is the reading under which trinomial members of the sliding family
    still qualify.  The strict reading (t among the m_i only) rejects
    exactly those, and the two readings agree on every polynomial outside
    the sliding family — so they generate identical ideals.
    """
    subset = as_prime_subset(subset) if not isinstance(subset, (FinitePrimeSubset, CofinitePrimeSubset)) else subset
    if f.nvars != 1 or f.is_zero() or not f.has_constant_term():
        raise ValueError("property star applies to univariate f with 1 in Supp(f)")
    exponents = [e for e in f.support if e > 0]
    if not exponents:
        raise ValueError("property star needs at least one nonconstant term")

    c1 = all(not subset.contains(m) for m in exponents)
    c2 = any(
        subset.contains(mj - mi) for mi in exponents for mj in exponents if mj > mi
    )
    anchors = ([0] if constant_as_anchor else []) + exponents
    c3 = any(
        all(not subset.contains(abs(t - mj)) for mj in exponents) for t in anchors
    )
    clauses = (c1, c2, c3)
    failing = next((i + 1 for i, ok in enumerate(clauses) if not ok), None)
    return StarVerdict(all(clauses), failing, clauses)


# ---------------------------------------------------------------------------
# the ideal families
# ---------------------------------------------------------------------------

def _validate_extra_generators(extra: Iterable, subset) -> tuple[Poly, ...]:
    out = []
    for q in extra:
        if isinstance(q, str):
            q = parse_poly(q, 1)
        if not q.has_constant_term():
            raise InvalidFamilyError(f"extra generator {q} lacks a constant term")
        verdict = property_star(q, subset)
        if not verdict.satisfied:
            raise InvalidFamilyError(
                f"extra generator {q} fails star clause ({verdict.failing_clause})"
            )
        out.append(q)
    return tuple(sorted(set(out), key=lambda p: (p.degree(), p.support)))


class CategoryOneFamily(IdealSpec):
    """<x, {1 + x^a : a in A}> — the prime ideals containing the variable.

    Membership: f is a member iff f = 0, or 1 is not in Supp(f) (every
    monomial is then a multiple of x), or some exponent of f lies in A
    (cover 1 and that exponent by the binomial, the rest by shifts of x).
    """

    kind = "IA"
    shift_invariant = False

    def __init__(self, subset):
        self.subset = as_prime_subset(subset)
        self.nvars = 1

    def generators_up_to(self, degree: int) -> tuple[Poly, ...]:
        gens = []
        if degree >= 1:
            gens.append(Poly.variable())
        gens.extend(Poly((0, a)) for a in self.subset.elements_up_to(degree))
        return tuple(sorted(gens, key=lambda g: (g.degree(), g.support)))

    def fast_support_member(self, support: Sequence[int]) -> bool:
        if not support:
            return True
        if support[0] != 0:
            return True
        return any(self.subset.contains(s) for s in support)

    def describe(self) -> str:
        return f"IA({self.subset})"

    def to_json_dict(self) -> dict:
        return {"family": {"kind": self.kind, "A": self.subset.to_json_dict()}}

    def __eq__(self, other):
        return isinstance(other, CategoryOneFamily) and self.subset == other.subset

    def __hash__(self):
        return hash((self.kind, self.subset))


class AnchoredFamily(IdealSpec):
    """<{1 + x^a + x^m : a in A, m >= 0}> — trinomials anchored at an exponent of A.

    Shifted generators are the sets {k, k+a, u} with a in A and u >= k, so
    after dividing out the trailing monomial (all generators carry a
    constant term), a nonzero f is a member iff some exponent of the
    normalized support lies in A: that exponent anchors a fit covering 0,
    itself, and any third point, and every other point is reachable as the
    free exponent u.
    """

    kind = "JA"
    shift_invariant = True

    def __init__(self, subset):
        self.subset = as_prime_subset(subset)
        self.nvars = 1

    def generators_up_to(self, degree: int) -> tuple[Poly, ...]:
        gens = set()
        for a in self.subset.elements_up_to(degree):
            for m in range(0, degree + 1):
                gens.add(Poly((0, a, m)))
        return tuple(sorted(gens, key=lambda g: (g.degree(), g.support)))

    def fast_support_member(self, support: Sequence[int]) -> bool:
        if not support:
            return True
        base = support[0]
        return any(self.subset.contains(s - base) for s in support)

    def describe(self) -> str:
        return f"JA({self.subset})"

    def to_json_dict(self) -> dict:
        return {"family": {"kind": self.kind, "A": self.subset.to_json_dict()}}

    def __eq__(self, other):
        return isinstance(other, AnchoredFamily) and self.subset == other.subset

    def __hash__(self):
        return hash((self.kind, self.subset))


def _sliding_cover(support: Sequence[int], subset) -> set[int]:
    """Exponents covered by fits of {1 + x^m + x^(m+a) : a in A, m >= 0}.

    Shifted generator supports are the triples {k, t, t+a}, t >= k, a in A,
    all inside the support.  Writing T for the largest t opening an
    A-gapped pair (t, t+a) within the support, an exponent s (support
    normalized to start at 0) is covered iff s <= T (s can serve as the
    base k) or s - a is present for some a in A (s closes a pair).
    """
    sset = set(support)
    top = support[-1]
    t_max = -1
    for t in support:
        if any(subset.contains(u - t) for u in sset if u > t):
            t_max = max(t_max, t)
    covered = set()
    for s in support:
        if s <= t_max:
            covered.add(s)
        elif any(subset.contains(s - u) for u in sset if u < s):
            covered.add(s)
    return covered


def _extra_cover(support: Sequence[int], extra: Sequence[Poly]) -> set[int]:
    sset = set(support)
    covered: set[int] = set()
    for q in extra:
        qs = q.support
        if qs[-1] > support[-1]:
            continue
        for s in support:
            k = s - qs[0]
            if k < 0:
                continue
            shifted = [e + k for e in qs]
            if all(e in sset for e in shifted):
                covered.update(shifted)
    return covered


class StarFamily(IdealSpec):
    """<{1 + x^m + x^(m+a) : a in A, m >= 0} u Q> for finite nonempty A (class d = 1)."""

    kind = "star-d1"
    shift_invariant = True

    def __init__(self, subset, extra: Iterable = ()):
        self.subset = as_prime_subset(subset)
        if not isinstance(self.subset, FinitePrimeSubset):
            raise InvalidFamilyError("class d = 1 requires a finite prime subset")
        if self.subset.is_empty:
            raise InvalidFamilyError("star families need a nonempty prime subset")
        self.extra = _validate_extra_generators(extra, self.subset)
        self.nvars = 1

    def generators_up_to(self, degree: int) -> tuple[Poly, ...]:
        gens = set()
        for a in self.subset.elements_up_to(degree):
            for m in range(0, degree - a + 1):
                gens.add(Poly((0, m, m + a)))
        gens.update(q for q in self.extra if q.degree() <= degree)
        return tuple(sorted(gens, key=lambda g: (g.degree(), g.support)))

    def fast_support_member(self, support: Sequence[int]) -> bool:
        if not support:
            return True
        base = support[0]
        support = tuple(s - base for s in support)
        covered = _sliding_cover(support, self.subset)
        if len(covered) < len(support):
            covered |= _extra_cover(support, self.extra)
        return len(covered) == len(support)

    def describe(self) -> str:
        inner = f"star({self.subset}"
        if self.extra:
            inner += "; Q=" + ",".join(str(q) for q in self.extra)
        return inner + ")"

    def to_json_dict(self) -> dict:
        return {
            "family": {
                "kind": self.kind,
                "A": self.subset.to_json_dict(),
                "Q": [str(q) for q in self.extra],
            }
        }

    def __eq__(self, other):
        return (
            isinstance(other, StarFamily)
            and self.subset == other.subset
            and self.extra == other.extra
        )

    def __hash__(self):
        return hash((self.kind, self.subset, self.extra))


class CofiniteStarFamily(IdealSpec):
    """The class d > 1 star shape, for cofinite A containing d.

    Generators: the sliding trinomials {1 + x^m + x^(m+a) : a in A, m >= 0}
    together with the anchored trinomials {1 + x^a + x^m : m >= 1} for the
    anchors a in A with a < d, a >= (F+1)d, or d ∤ a, plus Q.  The anchored
    part adds cover fits {k, k+a, u} with u > k over those anchors: the
    least base k opening an anchored pair covers everything above it.
    """

    kind = "star-dgt1"
    shift_invariant = True

    def __init__(self, subset, extra: Iterable = ()):
        if not isinstance(subset, CofinitePrimeSubset):
            raise InvalidFamilyError("class d > 1 requires a cofinite prime subset")
        if not subset.contains_d():
            raise InvalidFamilyError(
                f"d = {subset.d} lies outside the subset; only the anchored ideal exists there"
            )
        self.subset = subset
        self.extra = _validate_extra_generators(extra, subset)
        self.nvars = 1

    def _is_free_anchor(self, a: int) -> bool:
        s = self.subset
        return s.contains(a) and (a < s.d or a >= s.big_A or a % s.d != 0)

    def free_anchors_up_to(self, bound: int) -> list[int]:
        return [a for a in range(1, bound + 1) if self._is_free_anchor(a)]

    def generators_up_to(self, degree: int) -> tuple[Poly, ...]:
        gens = set()
        for a in self.subset.elements_up_to(degree):
            for m in range(0, degree - a + 1):
                gens.add(Poly((0, m, m + a)))
        for a in self.free_anchors_up_to(degree):
            for m in range(1, degree + 1):
                gens.add(Poly((0, a, m)))
        gens.update(q for q in self.extra if q.degree() <= degree)
        return tuple(sorted(gens, key=lambda g: (g.degree(), g.support)))

    def fast_support_member(self, support: Sequence[int]) -> bool:
        if not support:
            return True
        base = support[0]
        support = tuple(s - base for s in support)
        sset = set(support)
        covered = _sliding_cover(support, self.subset)
        if len(covered) < len(support):
            # anchored fits {k, k+a, u}: k opens an anchored pair, u > k free
            k_min = None
            for k in support:
                if any(u > k and self._is_free_anchor(u - k) for u in sset):
                    k_min = k
                    break
            for s in support:
                if s in covered:
                    continue
                if k_min is not None and s > k_min:
                    covered.add(s)
                elif any(
                    (u > s and self._is_free_anchor(u - s)) or (u < s and self._is_free_anchor(s - u))
                    for u in sset
                ):
                    covered.add(s)
        if len(covered) < len(support):
            covered |= _extra_cover(support, self.extra)
        return len(covered) == len(support)

    def describe(self) -> str:
        inner = f"star({self.subset}"
        if self.extra:
            inner += "; Q=" + ",".join(str(q) for q in self.extra)
        return inner + ")"

    def to_json_dict(self) -> dict:
        return {
            "family": {
                "kind": self.kind,
                "A": self.subset.to_json_dict(),
                "Q": [str(q) for q in self.extra],
            }
        }

    def __eq__(self, other):
        return (
            isinstance(other, CofiniteStarFamily)
            and self.subset == other.subset
            and self.extra == other.extra
        )

    def __hash__(self):
        return hash((self.kind, self.subset, self.extra))


_FAMILY_KINDS = {
    "IA": CategoryOneFamily,
    "JA": AnchoredFamily,
    "star-d1": StarFamily,
    "star-dgt1": CofiniteStarFamily,
}


def build_family(kind: str, subset, extra: Iterable = ()) -> IdealSpec:
    """Construct a family spec by kind: "IA", "JA", "star-d1", "star-dgt1"."""
    key = kind.strip()
    if key not in _FAMILY_KINDS:
        raise InvalidFamilyError(f"unknown family kind {kind!r}")
    cls = _FAMILY_KINDS[key]
    if cls in (StarFamily, CofiniteStarFamily):
        return cls(subset, extra)
    if list(extra):
        raise InvalidFamilyError(f"family {kind!r} takes no extra generators")
    return cls(subset)


def family_from_json_dict(data: dict) -> IdealSpec:
    subset = subset_from_json_dict(data["A"])
    return build_family(data["kind"], subset, data.get("Q", ()))


# ---------------------------------------------------------------------------
# branch detection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BranchVerdict:
    branch: str | None  # "JA" | "star" | None when inconclusive
    witness: Poly | None
    probes: int

    def to_json_dict(self) -> dict:
        return {
            "branch": self.branch,
            "witness": None if self.witness is None else str(self.witness),
            "probes": self.probes,
        }


def detect_branch_d1(spec: IdealSpec, subset: FinitePrimeSubset, degree_bound: int) -> BranchVerdict:
    """Branch dichotomy for a finite class (d = 1), by membership probes.

    An anchored probe is 1 + x^a + x^m with a in A and m, m-a both outside
    A; a sliding probe is 1 + x^n + x^(n+a) with n, n+a outside A.  One
    membership of either shape forces the whole corresponding family in, and
    the two containments exclude each other, so the first hit decides.
    """
    if subset.is_empty:
        raise InconclusiveClassificationError("branch detection needs a nonempty subset")
    anchored_witness = None
    sliding_witness = None
    probes = 0
    for a in sorted(subset.elements):
        for m in range(a + 1, degree_bound + 1):
            if subset.contains(m) or subset.contains(m - a):
                continue
            probes += 1
            probe = Poly((0, a, m))
            if is_member(probe, spec):
                anchored_witness = probe
                break
        if anchored_witness:
            break
    for a in sorted(subset.elements):
        for n in range(1, degree_bound - a + 1):
            if subset.contains(n) or subset.contains(n + a):
                continue
            probes += 1
            probe = Poly((0, n, n + a))
            if is_member(probe, spec):
                sliding_witness = probe
                break
        if sliding_witness:
            break
    if anchored_witness and sliding_witness:
        raise InconsistentBranchError(
            f"both {anchored_witness} and {sliding_witness} are members; the branches exclude each other"
        )
    if anchored_witness:
        return BranchVerdict("JA", anchored_witness, probes)
    if sliding_witness:
        return BranchVerdict("star", sliding_witness, probes)
    return BranchVerdict(None, None, probes)


def detect_branch_dgt1(
    spec: IdealSpec, subset: CofinitePrimeSubset, degree_bound: int
) -> BranchVerdict:
    """Branch dichotomy for class d > 1 with d in A and S an interval.

    Anchored probe: 1 + x^d + x^m with m outside A and m != (F+1)d.
    Sliding probe: 1 + x^m + x^(m+td) with m outside A, m >= (F+1)d, t >= 1.
    The equivalences behind these probes are stated for semigroups of the
    interval form {a1, a1+1, ...}; other shapes are refused rather than
    guessed at.
    """
    if not subset.contains_d():
        raise InvalidFamilyError("the branch dichotomy applies only when d lies in the subset")
    if not subset.semigroup.is_interval():
        raise InconclusiveClassificationError(
            f"semigroup {subset.semigroup} is not of interval form; branch probes not validated there"
        )
    big_a = subset.big_A
    d = subset.d
    anchored_witness = None
    sliding_witness = None
    probes = 0
    for m in range(1, degree_bound + 1):
        if subset.contains(m) or m == big_a:
            continue
        probes += 1
        probe = Poly((0, d, m))
        if is_member(probe, spec):
            anchored_witness = probe
            break
    for m in range(big_a, degree_bound + 1):
        if subset.contains(m):
            continue
        found = None
        for t in range(1, (degree_bound - m) // d + 1):
            probes += 1
            probe = Poly((0, m, m + t * d))
            if is_member(probe, spec):
                found = probe
                break
        if found is not None:
            sliding_witness = found
            break
    if anchored_witness and sliding_witness:
        raise InconsistentBranchError(
            f"both {anchored_witness} and {sliding_witness} are members; the branches exclude each other"
        )
    if anchored_witness:
        return BranchVerdict("JA", anchored_witness, probes)
    if sliding_witness:
        return BranchVerdict("star", sliding_witness, probes)
    return BranchVerdict(None, None, probes)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    """Where a prime ideal sits in the classification, as bounded evidence."""

    category: str  # "I" or "II"
    subset: PrimeSubset
    d: int
    branch: str | None  # None for category I, else "JA" | "star"
    extra_generators: tuple[Poly, ...]
    bound: int
    big_A: int | None = None
    evidence: tuple = ()
    roundtrip_equal: bool | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "category": self.category,
            "A": self.subset.to_json_dict(),
            "d": self.d,
            "branch": self.branch,
            "Q": [str(q) for q in self.extra_generators],
            "bound": self.bound,
            "evidence": list(self.evidence),
        }
        if self.big_A is not None:
            out["big_A"] = self.big_A
        if self.roundtrip_equal is not None:
            out["roundtrip_equal"] = self.roundtrip_equal
        return out


def recovered_family(report: ClassificationReport) -> IdealSpec:
    """The family spec a classification report describes."""
    if report.category == "I":
        return CategoryOneFamily(report.subset)
    if report.branch == "JA":
        return AnchoredFamily(report.subset)
    if isinstance(report.subset, FinitePrimeSubset):
        return StarFamily(report.subset, report.extra_generators)
    return CofiniteStarFamily(report.subset, report.extra_generators)


def _recover_extra_generators(
    spec: IdealSpec, base: IdealSpec, subset, degree_bound: int
) -> tuple[Poly, ...]:
    """Members up to the bound with constant term, satisfying star, not base-covered.

    The bounded, canonical stand-in for the family's Q: the description
    allows arbitrary (possibly infinite) Q, so the report lists every
    degree <= D witness that the base family alone does not explain.
    """
    out = []
    from .poly import iter_supports_univariate

    for support in iter_supports_univariate(degree_bound):
        if support[0] != 0 or len(support) < 2:
            continue
        f = Poly(support)
        if not is_member(f, spec) or is_member(f, base):
            continue
        if property_star(f, subset).satisfied:
            out.append(f)
    return tuple(out)


def classify(spec: IdealSpec, degree_bound: int, workers: int = 1) -> ClassificationReport:
    """Run the full decision tree on a (presumed prime) univariate ideal.

    Primality evidence is gathered first at the bound (non-prime input
    raises NonPrimeIdealError with the counterexample).  The subset A is
    read off binomial memberships on the window [1..bound] and validated
    prime; the category comes from membership of x; the branch from the
    probe dichotomy.  Every ingredient is bounded evidence, and the
    reconstructed family is replayed against the input at the bound as a
    final cross-check.
    """
    evidence = []
    search = ideals.primality_search(spec, degree_bound, workers=workers)
    if not search.is_prime_up_to_bound:
        raise NonPrimeIdealError(search)
    evidence.append({"primality": search.to_json_dict()})

    extracted = ideals.extract_A(spec, degree_bound)
    ok, violation = is_prime_subset(extracted, check_bound=2 * degree_bound)
    if not ok:
        raise InconclusiveClassificationError(
            f"extracted subset {sorted(extracted)} is not prime (pair {violation}); "
            "a larger bound is needed or the input is not an ideal"
        )

    if ideals.contains_x(spec):
        subset = infer_prime_subset(extracted, degree_bound)
        params = class_params(subset)
        evidence.append({"contains_x": True, "extracted": sorted(extracted)})
        report = ClassificationReport(
            category="I",
            subset=subset,
            d=params.d,
            branch=None,
            extra_generators=(),
            bound=degree_bound,
            big_A=params.big_A,
            evidence=tuple(evidence),
        )
        rebuilt = recovered_family(report)
        equal = ideals.equal_up_to(spec, rebuilt, degree_bound)
        return replace(report, roundtrip_equal=equal.equal)

    if not extracted:
        raise InconclusiveClassificationError(
            "no binomial members found up to the bound; nothing to classify against"
        )
    subset = infer_prime_subset(extracted, degree_bound)
    params = class_params(subset)
    evidence.append({"contains_x": False, "extracted": sorted(extracted)})

    if params.d == 1:
        verdict = detect_branch_d1(spec, subset, degree_bound)
    elif not subset.contains_d():
        # with d > 1 and d outside A only the anchored ideal exists
        verdict = BranchVerdict("JA", None, 0)
        evidence.append({"branch_forced": f"d={params.d} lies outside A"})
    else:
        verdict = detect_branch_dgt1(spec, subset, degree_bound)

    if verdict.branch is None:
        raise InconclusiveClassificationError(
            f"no branch probe fired up to degree {degree_bound}; raise the bound"
        )
    evidence.append({"branch_probe": verdict.to_json_dict()})

    extra: tuple[Poly, ...] = ()
    if verdict.branch == "star":
        if isinstance(subset, FinitePrimeSubset):
            base = StarFamily(subset)
        else:
            base = CofiniteStarFamily(subset)
        extra = _recover_extra_generators(spec, base, subset, degree_bound)

    report = ClassificationReport(
        category="II",
        subset=subset,
        d=params.d,
        branch=verdict.branch,
        extra_generators=extra,
        bound=degree_bound,
        big_A=params.big_A,
        evidence=tuple(evidence),
    )
    rebuilt = recovered_family(report)
    equal = ideals.equal_up_to(spec, rebuilt, degree_bound)
    return replace(report, roundtrip_equal=equal.equal)
