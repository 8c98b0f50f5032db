"""Weight sets of irreducible 2-modular and Weyl modules of type C_n.

Only weight SETS are computed, never multiplicities: for a semisimple
group element the eigenvalues of a representation are exactly the values
of its weights, so eigenvalue-1 questions need sets only.

For a Weyl module, and for a 2-restricted irreducible with a_n = 0, the
weight set is the saturated set of the highest weight (union of orbits of
all subdominant weights).  The single exceptional case is a 2-restricted
irreducible with a_n = 1, where the module is the tensor product of the
a_n = 0 part with the spin-like module of highest weight w_n, and the
weight set is the corresponding Minkowski sum.
"""

from enum import Enum
from functools import lru_cache

from .weights import (
    EpsWeight,
    Weight,
    WeightSet,
    contains_zero,
    delta,
    dominant_below,
    fundamental,
    is_radical,
    to_eps,
    weyl_orbit,
)


class ModuleKind(Enum):
    IRREDUCIBLE_2 = "irr2"
    WEYL = "weyl"


def weight_set(w: Weight, kind: ModuleKind = ModuleKind.IRREDUCIBLE_2) -> WeightSet:
    """The set of weights of the module of highest weight w.

    Results are memoized per (coefficients, kind); correctness does not
    depend on the cache.
    """
    _validate(w, kind)
    return _weight_set_cached(w.coeffs, kind)


def _validate(w: Weight, kind: ModuleKind) -> None:
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    if kind is ModuleKind.IRREDUCIBLE_2 and not w.is_restricted():
        raise ValueError(f"{w} is not 2-restricted")


@lru_cache(maxsize=None)
def _weight_set_cached(coeffs: tuple[int, ...], kind: ModuleKind) -> WeightSet:
    w = Weight(coeffs)
    if kind is ModuleKind.WEYL or coeffs[-1] == 0:
        return _saturated(w)
    # a_n = 1: tensor factorization; w - w_n has a_n = 0, no recursion needed
    wn = fundamental(w.rank, w.rank)
    return minkowski_sum(_weight_set_cached((w - wn).coeffs, ModuleKind.IRREDUCIBLE_2),
                         weyl_orbit(to_eps(wn)))


def _saturated(w: Weight) -> WeightSet:
    members: set[EpsWeight] = set()
    for mu in dominant_below(w):
        members |= weyl_orbit(to_eps(mu)).members
    return WeightSet(w.rank, frozenset(members), weyl_closed=True)


def minkowski_sum(a: WeightSet, b: WeightSet) -> WeightSet:
    """{x + y : x in a, y in b}, deduplicated."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    small, big = sorted((a, b), key=len)
    big_coords = [m.coords for m in big.members]
    sums: set[tuple[int, ...]] = set()
    for s in small.members:
        sc = s.coords
        for bc in big_coords:
            sums.add(tuple(x + y for x, y in zip(sc, bc)))
    return WeightSet(a.rank, frozenset(EpsWeight(t) for t in sums),
                     a.weyl_closed and b.weyl_closed)


def has_zero_weight(w: Weight, kind: ModuleKind = ModuleKind.IRREDUCIBLE_2) -> bool:
    """Closed form for membership of the zero weight.

    Weyl modules and a_n = 0 irreducibles: zero occurs iff w is radical.
    a_n = 1 irreducibles: zero occurs iff delta(w) is even and >= 2n.
    """
    _validate(w, kind)
    if kind is ModuleKind.WEYL or w.coeffs[-1] == 0:
        return is_radical(w)
    return delta(w) % 2 == 0 and delta(w) >= 2 * w.rank


def twist_decompose(w: Weight) -> list[tuple[int, Weight]]:
    """Coordinate-wise binary expansion w = sum of 2^level * mu_level.

    Each mu_level is 2-restricted and nonzero; the zero weight decomposes
    into the empty list.
    """
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    out: list[tuple[int, Weight]] = []
    rest = list(w.coeffs)
    level = 0
    while any(rest):
        bits = tuple(a & 1 for a in rest)
        if any(bits):
            out.append((level, Weight(bits)))
        rest = [a >> 1 for a in rest]
        level += 1
    return out


def g_effective_weight_set(w: Weight) -> WeightSet:
    """Weight set governing eigenvalues of the w-representation on the finite group.

    Frobenius twists act trivially on group elements defined over the prime
    field, so the tensor factors of the twist decomposition contribute their
    untwisted weight sets; the result is their Minkowski sum.  For the zero
    weight the set is {0}.
    """
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    return _g_effective_cached(w.coeffs)


@lru_cache(maxsize=None)
def _g_effective_cached(coeffs: tuple[int, ...]) -> WeightSet:
    w = Weight(coeffs)
    acc = WeightSet(w.rank, frozenset({EpsWeight((0,) * w.rank)}), weyl_closed=True)
    for _, mu in twist_decompose(w):
        acc = minkowski_sum(acc, weight_set(mu, ModuleKind.IRREDUCIBLE_2))
    return acc


def zero_in_weight_set(w: Weight, kind: ModuleKind = ModuleKind.IRREDUCIBLE_2) -> bool:
    """Exact membership of the zero weight, computed set-theoretically.

    Identical to `contains_zero(weight_set(w, kind))` but avoids
    materializing the Minkowski sum in the a_n = 1 case: zero lies in
    A + B iff A meets -B, and the orbit of w_n is symmetric.
    """
    _validate(w, kind)
    if kind is ModuleKind.WEYL or w.coeffs[-1] == 0:
        return contains_zero(weight_set(w, kind))
    wn = fundamental(w.rank, w.rank)
    sat = weight_set(w - wn, ModuleKind.IRREDUCIBLE_2)
    return any(m in sat.members for m in weyl_orbit(to_eps(wn)).members)
