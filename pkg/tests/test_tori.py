from itertools import product

import pytest

from sp2n.reps import ModuleKind, weight_set
from sp2n.tori import (
    SweepLimitError,
    TorusElement,
    TorusShape,
    block_sums,
    enumerate_shapes,
    eval_weight,
    factor_orders,
    occurs_in_omega_n,
    parse_torus_label,
    restricts_trivially,
    singer_index,
    singer_shape,
    t_sharp,
    torus_order,
    trivial_constituent,
    unisingular_on_torus,
)
from sp2n.weights import EpsWeight, Weight, WeightSet, fundamental, gamma, is_radical, to_eps, weyl_orbit

IRR2 = ModuleKind.IRREDUCIBLE_2


def test_shape_canonical_order_and_validation():
    assert TorusShape(((1, 1), (2, -1))).blocks == ((2, -1), (1, 1))
    assert TorusShape(((1, 1), (1, -1))).blocks == ((1, -1), (1, 1))
    with pytest.raises(ValueError):
        TorusShape(((0, 1),))
    with pytest.raises(ValueError):
        TorusShape(((2, 0),))


def test_enumerate_shapes_examples():
    assert [str(sh) for sh in enumerate_shapes(1)] == ["-1", "1"]
    assert [str(sh) for sh in enumerate_shapes(2)] == ["-2", "2", "-1,-1", "-1,1", "1,1"]
    for n in range(1, 7):
        shapes = enumerate_shapes(n)
        assert len(shapes) == len(set(shapes))
        assert t_sharp(n) in shapes
        assert all(sh.rank == n for sh in shapes)
    with pytest.raises(ValueError):
        enumerate_shapes(0)


def _signed_partition_count(n):
    # coefficient of x^n in prod_k 1/(1-x^k)^2
    counts = [1] + [0] * n
    for k in range(1, n + 1):
        for _ in range(2):
            for m in range(k, n + 1):
                counts[m] += counts[m - k]
    return counts[n]


def test_enumerate_shapes_count_matches_generating_function():
    for n in range(1, 13):
        assert len(enumerate_shapes(n)) == _signed_partition_count(n), n


def test_torus_order_examples():
    for n in range(1, 8):
        assert torus_order(singer_shape(n)) == 2**n + 1
    assert torus_order(t_sharp(3)) == 27
    assert torus_order(TorusShape(((1, 1), (1, 1)))) == 1


def test_singer_index_examples():
    assert singer_index(singer_shape(2)) == 1
    assert singer_index(t_sharp(4)) == 4
    assert singer_index(TorusShape(((2, 1), (1, 1)))) == 0


def test_block_sums_examples():
    sh = singer_shape(2)
    assert block_sums(EpsWeight((1, 0)), sh) == (1,)
    assert block_sums(EpsWeight((1, 1)), sh) == (3,)
    assert block_sums(EpsWeight((0, 0, 0)), t_sharp(3)) == (0, 0, 0)
    with pytest.raises(ValueError):
        block_sums(EpsWeight((1, 0, 0)), sh)


def test_restricts_trivially():
    assert not restricts_trivially(EpsWeight((1, 0)), singer_shape(2))
    assert restricts_trivially(EpsWeight((3,)), TorusShape(((1, -1),)))
    assert restricts_trivially(EpsWeight((0, 0)), singer_shape(2))


def test_trivial_constituent_examples():
    ws2 = weight_set(fundamental(2, 2), IRR2)
    assert not trivial_constituent(ws2, singer_shape(2))
    assert trivial_constituent(ws2, TorusShape(((1, 1), (1, 1))))
    with_zero = WeightSet(2, frozenset({EpsWeight((0, 0)), EpsWeight((1, 0))}))
    for sh in enumerate_shapes(2):
        assert trivial_constituent(with_zero, sh)


def test_occurs_in_omega_n():
    assert occurs_in_omega_n((3,), singer_shape(2))
    assert not occurs_in_omega_n((0,), singer_shape(2))
    assert occurs_in_omega_n((0,), TorusShape(((2, 1),)))
    with pytest.raises(ValueError):
        occurs_in_omega_n((0, 0), singer_shape(2))


def test_omega_n_residue_tuples_match_sign_pattern():
    # the orbit of the top fundamental weight realizes exactly the tuples
    # that are nonzero on every negative block
    for n in range(1, 5):
        orbit = weyl_orbit(to_eps(fundamental(n, n)))
        for sh in enumerate_shapes(n):
            if torus_order(sh) > 10**4:
                continue
            realized = {block_sums(mu, sh) for mu in orbit}
            expected = {
                tup
                for tup in product(*(range(o) for o in factor_orders(sh)))
                if occurs_in_omega_n(tup, sh)
            }
            assert realized == expected, sh


def test_eval_weight_examples():
    t = TorusElement(singer_shape(2), (1,))
    assert eval_weight(EpsWeight((1, 0)), t) == 1
    ident = TorusElement(TorusShape(((1, -1), (1, -1))), (0, 0))
    assert eval_weight(EpsWeight((1, -1)), ident) == 0
    assert eval_weight(EpsWeight((0, 0)), t) == 0


def test_torus_element_validation():
    with pytest.raises(ValueError):
        TorusElement(singer_shape(2), (5,))
    with pytest.raises(ValueError):
        TorusElement(singer_shape(2), (1, 1))
    assert TorusElement(singer_shape(3), (3,)).order == 3


def test_unisingular_on_torus_examples():
    assert not unisingular_on_torus(weight_set(fundamental(2, 1), IRR2), singer_shape(2))
    with_zero = WeightSet(2, frozenset({EpsWeight((0, 0))}))
    assert unisingular_on_torus(with_zero, singer_shape(2))
    assert unisingular_on_torus(weight_set(Weight((1, 1)), IRR2), singer_shape(2))


def test_sweep_limit_enforced(monkeypatch):
    ws = weight_set(fundamental(2, 2), IRR2)
    with pytest.raises(SweepLimitError):
        unisingular_on_torus(ws, singer_shape(2), limit=3)
    monkeypatch.setenv("SWEEP_LIMIT", "2")
    with pytest.raises(SweepLimitError):
        unisingular_on_torus(ws, singer_shape(2))
    monkeypatch.setenv("SWEEP_LIMIT", "100")
    assert not unisingular_on_torus(ws, singer_shape(2))


def test_singer_torus_misses_odd_fundamentals():
    # on the cyclic torus of order 2^n + 1, the fundamental modules without
    # a trivial constituent are exactly the last one and the odd ones
    for n in range(1, 9):
        sh = singer_shape(n)
        for i in range(1, n + 1):
            ws = weight_set(fundamental(n, i), IRR2)
            expected_missing = i == n or i % 2 == 1
            assert trivial_constituent(ws, sh) == (not expected_missing), (n, i)


def test_orbit_character_of_w1_plus_w2():
    # the orbit of w_1 + w_2 has no trivially-restricting member exactly on
    # the all-unit-block shapes with at least n-1 negative blocks
    for n in range(2, 5):
        lam = fundamental(n, 1) + fundamental(n, 2)
        orbit = weyl_orbit(to_eps(lam))
        for sh in enumerate_shapes(n):
            fails = not trivial_constituent(orbit, sh)
            all_units = all(k == 1 for k, _ in sh.blocks)
            expected = all_units and singer_index(sh) >= n - 1
            assert fails == expected, sh


def test_module_of_w1_plus_w2_on_tori():
    # at the module level the restriction misses a trivial constituent only
    # on the all-order-3 torus, yet every single element still has a fixed
    # vector there (each lies in another torus too): the sweep stays clean
    for n in range(2, 5):
        lam = fundamental(n, 1) + fundamental(n, 2)
        ws = weight_set(lam, IRR2)
        for sh in enumerate_shapes(n):
            assert trivial_constituent(ws, sh) == (sh != t_sharp(n)), sh
            assert unisingular_on_torus(ws, sh), sh


def test_t_sharp_closed_form():
    # trivial constituent on the all-order-3 torus: radical or coefficient
    # sum above 2 when the top coefficient vanishes, delta at least 2n
    # otherwise
    for n in range(1, 6):
        sh = t_sharp(n)
        for bits in product((0, 1), repeat=n):
            w = Weight(bits)
            ws = weight_set(w, IRR2)
            got = trivial_constituent(ws, sh)
            if bits[-1] == 0:
                expected = is_radical(w) or gamma(w) > 2
            else:
                expected = sum(i * a for i, a in enumerate(bits, 1)) >= 2 * n
            assert got == expected, w


def test_parse_torus_label():
    sh = parse_torus_label("-3,2,1")
    assert sh.blocks == ((3, -1), (2, 1), (1, 1))
    assert str(sh) == "-3,2,1"
    with pytest.raises(ValueError):
        parse_torus_label("0,1")
    with pytest.raises(ValueError):
        parse_torus_label("x")
