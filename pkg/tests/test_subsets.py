"""Prime subsets, complement submonoids, Frobenius elements."""

import itertools

import pytest

from boolpoly.subsets import (
    ClassParams,
    CofinitePrimeSubset,
    FinitePrimeSubset,
    NotPrimeSubsetError,
    NumericalSemigroup,
    as_prime_subset,
    class_params,
    complement_generators,
    frobenius,
    infer_prime_subset,
    is_prime_subset,
    parse_subset,
    subset_from_json_dict,
)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def closure_contains(gens, bound):
    """All sums of the generators up to bound, by saturation (independent oracle)."""
    reachable = {0}
    changed = True
    while changed:
        changed = False
        for r in sorted(reachable):
            for g in gens:
                v = r + g
                if v <= bound and v not in reachable:
                    reachable.add(v)
                    changed = True
    reachable.discard(0)
    return reachable


def frobenius_oracle(p, q):
    """Coin-problem scan for two coprime generators."""
    bound = p * q
    reachable = closure_contains([p, q], bound)
    gaps = [n for n in range(1, bound + 1) if n not in reachable]
    return max(gaps) if gaps else 0


def complement_closed(a_set, bound):
    """Brute-force: is {1..bound} - A closed under addition (sums <= bound)?"""
    comp = [n for n in range(1, bound + 1) if n not in a_set]
    return all(x + y > bound or (x + y) not in a_set for x in comp for y in comp)


# ---------------------------------------------------------------------------
# primality of subsets
# ---------------------------------------------------------------------------

def test_singleton_one_is_prime():
    ok, violation = is_prime_subset({1})
    assert ok and violation is None


def test_empty_set_is_prime():
    ok, _ = is_prime_subset(set())
    assert ok


def test_singleton_two_is_not_prime():
    ok, violation = is_prime_subset({2})
    assert not ok
    assert violation == (1, 1)


def test_duality_with_complement_closure_exhaustive():
    for r in range(9):
        for a in itertools.combinations(range(1, 9), r):
            ok, _ = is_prime_subset(set(a))
            assert ok == complement_closed(set(a), 16), a


def test_nonempty_prime_contains_one():
    for r in range(1, 6):
        for a in itertools.combinations(range(1, 9), r):
            ok, _ = is_prime_subset(set(a))
            if ok:
                assert 1 in a


def test_finite_constructor_rejects_non_prime():
    with pytest.raises(NotPrimeSubsetError) as e:
        FinitePrimeSubset({2})
    assert e.value.violation == (1, 1)


def test_cofinite_is_prime_and_recheckable():
    a = CofinitePrimeSubset(2, NumericalSemigroup([2, 3]))
    ok, violation = is_prime_subset(a, check_bound=40)
    assert ok and violation is None


# ---------------------------------------------------------------------------
# complement generators
# ---------------------------------------------------------------------------

def test_complement_generators_of_singleton_one():
    assert complement_generators({1}) == (2, 3)


def test_complement_generators_of_one_two_three():
    assert complement_generators({1, 2, 3}) == (4, 5, 6, 7)


def test_complement_generators_of_empty():
    assert complement_generators(set()) == (1,)


def test_complement_generators_rejects_non_prime_with_pair():
    with pytest.raises(NotPrimeSubsetError) as e:
        complement_generators({2})
    assert e.value.violation == (1, 1)


def test_complement_generators_regenerate_complement():
    for a in [{1}, {1, 2}, {1, 2, 3}, {1, 3}, {1, 2, 4}, set()]:
        gens = complement_generators(a)
        bound = (max(a) if a else 0) + max(gens) + 5
        regenerated = closure_contains(gens, bound)
        expected = {n for n in range(1, bound + 1) if n not in a}
        assert regenerated == expected, a


def test_complement_generators_minimality():
    for a in [{1}, {1, 2}, {1, 2, 3}, {1, 3}]:
        gens = complement_generators(a)
        bound = (max(a) if a else 0) + max(gens) + frobenius(gens) + 5
        full = closure_contains(gens, bound)
        for g in gens:
            rest = [h for h in gens if h != g]
            assert closure_contains(rest, bound) != full, (a, g)


# ---------------------------------------------------------------------------
# Frobenius
# ---------------------------------------------------------------------------

def test_frobenius_three_five():
    assert frobenius([3, 5]) == 7


def test_frobenius_three_four():
    assert frobenius([3, 4]) == 5


def test_frobenius_with_one_has_no_gaps():
    assert frobenius([1]) == 0
    assert frobenius([1, 7]) == 0


def test_frobenius_requires_gcd_one():
    with pytest.raises(ValueError):
        frobenius([4, 6])


def test_frobenius_matches_oracle_for_coprime_pairs():
    from math import gcd
    for p in range(2, 13):
        for q in range(p + 1, 13):
            if gcd(p, q) == 1:
                assert frobenius([p, q]) == frobenius_oracle(p, q) == p * q - p - q


def test_semigroup_membership_and_minimality():
    s = NumericalSemigroup([2, 3, 4])
    assert s.generators == (2, 3)
    assert s.frobenius == 1
    assert [n for n in range(1, 8) if s.contains(n)] == [2, 3, 4, 5, 6, 7]
    assert s.is_interval()
    t = NumericalSemigroup([3, 5])
    assert not t.is_interval()
    assert t.elements_up_to(11) == [3, 5, 6, 8, 9, 10, 11]


# ---------------------------------------------------------------------------
# membership and class parameters
# ---------------------------------------------------------------------------

def test_cofinite_contains_examples():
    a = CofinitePrimeSubset(2, NumericalSemigroup([2, 3]))
    assert not a.contains(4)   # 4 = 2*2 with 2 in S
    assert a.contains(2)       # 1 not in S
    assert a.contains(1)
    assert a.elements_up_to(12) == [1, 2, 3, 5, 7, 9, 11]


def test_finite_contains():
    assert FinitePrimeSubset({1}).contains(1)
    assert not FinitePrimeSubset({1}).contains(2)


def test_class_params_finite_singleton():
    p = class_params(FinitePrimeSubset({1}))
    assert p.d == 1 and p.alpha == 2
    assert p.complement_generators == (2, 3)


def test_class_params_cofinite():
    p = class_params(CofinitePrimeSubset(2, NumericalSemigroup([2, 3])))
    assert p.d == 2 and p.frobenius == 1 and p.big_A == 4
    assert p.complement_generators == (4, 6)


def test_class_params_empty():
    p = class_params(FinitePrimeSubset(()))
    assert p.d == 1 and p.alpha == 1


def test_cofinite_multiples_of_d_past_threshold_are_outside():
    for d, gens in [(2, [2, 3]), (3, [2, 3]), (2, [3, 4])]:
        a = CofinitePrimeSubset(d, NumericalSemigroup(gens))
        start = a.big_A
        for k in range(0, 10):
            assert not a.contains(start + k * d), (d, gens, k)


def test_contains_d_tracks_semigroup():
    assert CofinitePrimeSubset(2, NumericalSemigroup([2, 3])).contains_d()
    assert not CofinitePrimeSubset(3, NumericalSemigroup([1])).contains_d()


# ---------------------------------------------------------------------------
# prefix construction and inference
# ---------------------------------------------------------------------------

def test_from_prefix_round_trip():
    a = CofinitePrimeSubset(2, NumericalSemigroup([2, 3]))
    prefix = a.elements_up_to(14)
    b = CofinitePrimeSubset.from_prefix(prefix, 2, 14)
    assert b == a


def test_from_prefix_rejects_inconsistent_window():
    with pytest.raises(ValueError):
        CofinitePrimeSubset.from_prefix([1, 2, 3, 4, 5], 2, 5)


def test_infer_prime_subset_finite():
    got = infer_prime_subset({1, 2}, 10)
    assert got == FinitePrimeSubset({1, 2})


def test_infer_prime_subset_cofinite():
    a = CofinitePrimeSubset(3, NumericalSemigroup([2, 3]))
    got = infer_prime_subset(a.elements_up_to(15), 15)
    assert got == a


def test_infer_rejects_window_touching_bound():
    with pytest.raises(ValueError):
        infer_prime_subset({1, 2, 3, 5, 8}, 8)


# ---------------------------------------------------------------------------
# text / JSON
# ---------------------------------------------------------------------------

def test_parse_subset_forms():
    assert parse_subset("1,2,5").elements == frozenset({1, 2, 5})
    c = parse_subset("d=2;S=2,3")
    assert isinstance(c, CofinitePrimeSubset)
    assert c.d == 2 and c.semigroup.generators == (2, 3)
    assert parse_subset("").elements == frozenset()


def test_json_round_trip():
    for a in [FinitePrimeSubset({1, 2}), CofinitePrimeSubset(2, NumericalSemigroup([2, 3]))]:
        assert subset_from_json_dict(a.to_json_dict()) == a


def test_as_prime_subset_coerces_and_validates():
    assert as_prime_subset({1}).elements == frozenset({1})
    with pytest.raises(NotPrimeSubsetError):
        as_prime_subset({3})
