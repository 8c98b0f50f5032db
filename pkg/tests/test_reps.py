from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sp2n.reps import (
    ModuleKind,
    g_effective_weight_set,
    has_zero_weight,
    minkowski_sum,
    twist_decompose,
    weight_set,
    zero_in_weight_set,
)
from sp2n.weights import (
    EpsWeight,
    Weight,
    WeightSet,
    contains_zero,
    delta,
    dominates,
    fundamental,
    to_eps,
    weyl_orbit,
    zero_weight,
)

IRR2 = ModuleKind.IRREDUCIBLE_2
WEYL = ModuleKind.WEYL

TWELVE = {
    EpsWeight(v)
    for v in [
        (2, 1), (2, -1), (-2, 1), (-2, -1),
        (1, 2), (1, -2), (-1, 2), (-1, -2),
        (1, 0), (-1, 0), (0, 1), (0, -1),
    ]
}


def _restricted(n):
    return (Weight(bits) for bits in product((0, 1), repeat=n))


def test_weight_set_examples():
    ws = weight_set(fundamental(2, 2), IRR2)
    assert ws.members == {EpsWeight((s1, s2)) for s1 in (1, -1) for s2 in (1, -1)}
    assert not contains_zero(ws)

    assert weight_set(Weight((1, 1)), IRR2).members == TWELVE

    weyl = weight_set(fundamental(2, 2), WEYL)
    assert len(weyl) == 5
    assert contains_zero(weyl)


def test_weight_set_validation():
    with pytest.raises(ValueError):
        weight_set(Weight((2, 0)), IRR2)
    with pytest.raises(ValueError):
        weight_set(Weight((-1, 0)), WEYL)
    weight_set(Weight((2, 0)), WEYL)  # any dominant weight is fine for Weyl


def test_minkowski_examples():
    a = weyl_orbit(to_eps(fundamental(2, 1)))
    b = weyl_orbit(to_eps(fundamental(2, 2)))
    zero = WeightSet(2, frozenset({EpsWeight((0, 0))}), weyl_closed=True)
    assert minkowski_sum(zero, a).members == a.members
    assert minkowski_sum(a, b).members == TWELVE
    assert minkowski_sum(a, b).members == minkowski_sum(b, a).members
    with pytest.raises(ValueError):
        minkowski_sum(a, weyl_orbit(EpsWeight((1, 0, 0))))


def _vector_sets(n):
    vec = st.tuples(*([st.integers(-2, 2)] * n))
    return st.frozensets(vec.map(EpsWeight), min_size=1, max_size=6).map(
        lambda ms: WeightSet(n, ms)
    )


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(_vector_sets(n), _vector_sets(n), _vector_sets(n))))
def test_minkowski_algebra(abc):
    a, b, c = abc
    assert minkowski_sum(a, b).members == minkowski_sum(b, a).members
    left = minkowski_sum(minkowski_sum(a, b), c)
    right = minkowski_sum(a, minkowski_sum(b, c))
    assert left.members == right.members
    assert len(minkowski_sum(a, b)) <= len(a) * len(b)


def test_has_zero_weight_examples():
    assert has_zero_weight(Weight((1, 1, 1)), IRR2)
    assert not has_zero_weight(Weight((0, 0, 1)), IRR2)
    assert has_zero_weight(Weight((0, 1, 0)), IRR2)


def test_has_zero_weight_matches_membership():
    for n in range(1, 5):
        for w in _restricted(n):
            for kind in (IRR2, WEYL):
                closed = has_zero_weight(w, kind)
                assert closed == contains_zero(weight_set(w, kind)), (w, kind)
                assert closed == zero_in_weight_set(w, kind), (w, kind)


def test_twist_decompose_examples():
    assert twist_decompose(Weight((2, 0))) == [(1, Weight((1, 0)))]
    assert twist_decompose(Weight((3, 1))) == [(0, Weight((1, 1))), (1, Weight((1, 0)))]
    assert twist_decompose(Weight((1, 0))) == [(0, Weight((1, 0)))]
    assert twist_decompose(zero_weight(3)) == []
    with pytest.raises(ValueError):
        twist_decompose(Weight((-1, 2)))


def test_twist_decompose_reconstructs():
    for coeffs in product(range(6), repeat=3):
        w = Weight(coeffs)
        acc = zero_weight(3)
        for level, mu in twist_decompose(w):
            assert mu.is_restricted() and not mu.is_zero()
            acc = acc + (2**level) * mu
        assert acc == w


def test_g_effective_examples():
    assert g_effective_weight_set(Weight((0, 2))).members == weight_set(fundamental(2, 2)).members
    assert g_effective_weight_set(Weight((1, 1))).members == TWELVE
    assert g_effective_weight_set(zero_weight(2)).members == {EpsWeight((0, 0))}
    for w in _restricted(3):
        assert g_effective_weight_set(w).members == weight_set(w).members


def _weyl_closed(ws):
    members = ws.members
    n = ws.rank
    for m in members:
        c = m.coords
        if EpsWeight(tuple(-x for x in c)) not in members:
            return False
        if EpsWeight((c[0] * -1,) + c[1:]) not in members:
            return False
        for i in range(n - 1):  # adjacent transpositions generate the permutations
            swapped = list(c)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if EpsWeight(tuple(swapped)) not in members:
                return False
    return True


def test_weight_sets_are_weyl_closed():
    for n in range(1, 6):
        for w in _restricted(n):
            assert _weyl_closed(weight_set(w, IRR2)), w
    assert _weyl_closed(weight_set(Weight((2, 1)), WEYL))


def test_additivity_for_restricted_sums():
    # disjointly supported restricted weights: the set of the sum is the
    # Minkowski sum of the sets
    for n in range(1, 5):
        for split in product((0, 1, 2), repeat=n):
            lam = Weight(tuple(1 if s == 1 else 0 for s in split))
            om = Weight(tuple(1 if s == 2 else 0 for s in split))
            both = lam + om
            assert weight_set(both, IRR2).members == minkowski_sum(
                weight_set(lam, IRR2), weight_set(om, IRR2)
            ).members, (lam, om)


def test_zero_weight_three_way_equivalence():
    for n in range(1, 7):
        wn = fundamental(n, n)
        for bits in product((0, 1), repeat=n - 1):
            w = Weight(bits + (1,))
            d = delta(w)
            zero = zero_in_weight_set(w, IRR2)
            assert zero == (d % 2 == 0 and d > 2 * n - 1), w
            assert zero == dominates(w - wn, wn), w


def test_even_fundamentals_appear_alongside_zero():
    for n in range(1, 6):
        for bits in product((0, 1), repeat=n - 1):
            w = Weight(bits + (1,))
            ws = weight_set(w, IRR2)
            if contains_zero(ws):
                for i in range(2, n + 1, 2):
                    assert to_eps(fundamental(n, i)) in ws.members, (w, i)


def test_high_delta_top_weights():
    # top coefficient set with delta >= 2n: radical case has the zero
    # weight, otherwise specific small weights appear
    for n in range(2, 6):
        for bits in product((0, 1), repeat=n - 1):
            w = Weight(bits + (1,))
            if delta(w) < 2 * n:
                continue
            ws = weight_set(w, IRR2)
            if delta(w) % 2 == 0:
                assert contains_zero(ws)
            else:
                assert to_eps(fundamental(n, 1)) in ws.members
                assert EpsWeight((2, 1) + (0,) * (n - 2)) in ws.members
                assert EpsWeight((3,) + (0,) * (n - 1)) in ws.members
                if n > 2:
                    assert to_eps(fundamental(n, 3)) in ws.members


def test_weyl_contains_irreducible():
    for n in range(1, 6):
        for w in _restricted(n):
            assert weight_set(w, IRR2).members <= weight_set(w, WEYL).members, w
