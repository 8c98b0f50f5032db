"""Decision procedures with citation traces.

Every verdict cites the rule tags that produced it (the same tags name
the verification suites), and records whether a brute-force fallback ran.
Closed forms are used only where a rule covers the input; the remaining
cases fall back to direct evaluation of weight sets on canonical torus
forms, quantified over every generator choice.
"""

from dataclasses import dataclass

from .elements import (
    SemisimpleElement,
    generator_tuples,
    has_eigenvalue_one_omega_n,
    singer_height,
    singer_index_element,
    to_torus_element,
)
from .reps import ModuleKind, twist_decompose, weight_set
from .tori import TorusShape, eval_weight, singer_index, t_sharp, trivial_constituent
from .weights import Weight, delta, fundamental, gamma, is_radical

YES = "yes"
NO = "no"
UNDETERMINED = "undetermined-by-criteria"


@dataclass(frozen=True)
class Verdict:
    decision: str
    citations: tuple[str, ...]
    fallback_used: bool = False

    def to_dict(self) -> dict:
        return {
            "decision": self.decision,
            "citations": list(self.citations),
            "fallback_used": self.fallback_used,
        }


def _check_restricted(w: Weight) -> None:
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    if not w.is_restricted():
        raise ValueError(f"{w} is not 2-restricted")


def abelian_all(w: Weight) -> Verdict:
    """Trivial constituent on every abelian subgroup (equivalently every torus)."""
    _check_restricted(w)
    if w.coeffs[-1] == 0:
        ok = gamma(w) > 2 or delta(w) % 2 == 0
    else:
        ok = delta(w) >= 2 * w.rank
    return Verdict(YES if ok else NO, ("Thm-ff3", "Thm-ee3"))


def unisingular(w: Weight) -> Verdict:
    """Eigenvalue 1 for every group element."""
    _check_restricted(w)
    n = w.rank
    if w.coeffs[-1] == 0:
        bad = gamma(w) == 1 and delta(w) % 2 == 1  # w is an odd fundamental weight
        return Verdict(NO if bad else YES, ("Thm-si1",))
    ok = delta(w) >= n + singer_height(n)[0]
    return Verdict(YES if ok else NO, ("Thm-si1", "Thm-fr1"))


def prime_power_all(w: Weight) -> bool:
    """True guarantees eigenvalue 1 for every element of prime power order.

    Holds for every highest weight except the fundamental ones with odd
    index or index n.
    """
    _check_restricted(w)
    if gamma(w) != 1:
        return True
    i = delta(w)  # the index of the fundamental weight
    return not (i % 2 == 1 or i == w.rank)


def singer_cycle_has_one(w: Weight) -> bool:
    """Eigenvalue 1 at a generator of the cyclic torus of order 2^n + 1.

    Fails exactly for a single twisted fundamental weight with odd index
    or index n.
    """
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    comps = twist_decompose(w)
    if len(comps) != 1:
        return True
    mu = comps[0][1]
    if gamma(mu) != 1:
        return True
    i = delta(mu)
    return not (i % 2 == 1 or i == w.rank)


def torus_trivial(w: Weight, shape: TorusShape) -> Verdict:
    """Trivial constituent of the restriction to one torus class."""
    _check_restricted(w)
    if w.rank != shape.rank:
        raise ValueError(f"rank mismatch: {w.rank} vs {shape.rank}")
    n = w.rank
    if w.coeffs[-1] == 1:
        ok = delta(w) >= n + singer_index(shape)
        return Verdict(YES if ok else NO, ("Thm-s10",))
    if is_radical(w):
        return Verdict(YES, ("Lem-pr4",))
    if shape == t_sharp(n):
        return Verdict(YES if gamma(w) > 2 else NO, ("Lem-t33",))
    if gamma(w) != 1:
        return Verdict(YES, ("Lem-cc2",))
    # odd fundamental weight on a general torus: no closed form, sweep directly
    found = trivial_constituent(weight_set(w, ModuleKind.IRREDUCIBLE_2), shape)
    return Verdict(YES if found else NO, ("direct",), fallback_used=True)


def _direct_has_one(w: Weight, g: SemisimpleElement, us: tuple[int, ...]) -> bool:
    t = to_torus_element(g, us)
    return any(eval_weight(mu, t) == 0 for mu in weight_set(w, ModuleKind.IRREDUCIBLE_2))


def element_has_one(w: Weight, g: SemisimpleElement) -> Verdict:
    """Eigenvalue 1 of one semisimple element on the irreducible of highest weight w."""
    _check_restricted(w)
    if w.rank != g.rank:
        raise ValueError(f"rank mismatch: {w.rank} vs {g.rank}")
    n = w.rank
    if w.coeffs[-1] == 1:
        ok = delta(w) >= n + singer_index_element(g)
        return Verdict(YES if ok else NO, ("Thm-fr1",))
    if is_radical(w):
        return Verdict(YES, ("Lem-pr4",))
    if gamma(w) != 1:
        return Verdict(YES, ("Lem-cc2",))
    # odd fundamental weight: evaluate directly, over every generator choice
    results = {_direct_has_one(w, g, us) for us in generator_tuples(g)}
    if results == {True}:
        return Verdict(YES, ("direct",), fallback_used=True)
    if results == {False}:
        return Verdict(NO, ("direct",), fallback_used=True)
    # mixed outcomes would mean the verdict depends on the generator choice;
    # never observed, but reported rather than averaged away
    return Verdict(UNDETERMINED, ("direct",), fallback_used=True)


def th7_blocks(w: Weight, block_sizes: list[int], kind: ModuleKind = ModuleKind.IRREDUCIBLE_2) -> bool:
    """Whether every weight of the module vanishes on one of the given
    blocks of leading epsilon coordinates."""
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    if any(b < 1 for b in block_sizes):
        raise ValueError("block sizes must be positive")
    if sum(block_sizes) > w.rank:
        raise ValueError(f"blocks cover {sum(block_sizes)} coordinates, rank is {w.rank}")
    spans = []
    pos = 0
    for b in block_sizes:
        spans.append((pos, pos + b))
        pos += b
    for mu in weight_set(w, kind):
        c = mu.coords
        if not any(all(c[i] == 0 for i in range(lo, hi)) for lo, hi in spans):
            return False
    return True


def p88_guarantee(g: SemisimpleElement) -> bool:
    """Eigenvalue 1 on the first and last fundamental modules guarantees
    eigenvalue 1 in every irreducible of the ambient algebraic group."""
    n = g.rank
    return (
        element_has_one(fundamental(n, 1), g).decision == YES
        and has_eigenvalue_one_omega_n(g)
    )


@dataclass(frozen=True)
class HasOne:
    citations: tuple[str, ...] = ()


@dataclass(frozen=True)
class FundamentalTwistException:
    index: int
    citations: tuple[str, ...] = ()


@dataclass(frozen=True)
class TensorCase:
    base: Weight
    twist_level: int
    base_delta: int
    citations: tuple[str, ...] = ()


def p49_classify(w: Weight, g: SemisimpleElement):
    """Trichotomy for an arbitrary dominant weight against one element.

    HasOne is established by the implemented chain of criteria; a single
    twisted fundamental with odd index or index n is the known exception
    family; everything else surfaces as TensorCase data (base weight,
    twist level of the top fundamental factor, and the delta of the
    untwisted base against the element's Singer index), which is a
    "not guaranteed" status rather than a proof of absence.
    """
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    if w.rank != g.rank:
        raise ValueError(f"rank mismatch: {w.rank} vs {g.rank}")
    n = w.rank
    comps = twist_decompose(w)
    if not comps:
        return HasOne(("Lem-pr4",))
    if len(comps) == 1 and gamma(comps[0][1]) == 1:
        i = delta(comps[0][1])
        if i % 2 == 1 or i == n:
            return FundamentalTwistException(i, ("Prop-p49", "Thm-th2"))
    top_levels = [lvl for lvl, mu in comps if mu.coeffs[-1] == 1]
    if not top_levels:
        return HasOne(("Thm-si1", "Lem-cc2", "Lem-ft2"))
    if len(top_levels) >= 2:
        return HasOne(("Cor-wwn",))
    wn = fundamental(n, n)
    nus = [(lvl, mu - wn if lvl in top_levels else mu) for lvl, mu in comps]
    nus = [(lvl, nu) for lvl, nu in nus if not nu.is_zero()]
    d = sum(delta(nu) for _, nu in nus)
    if d >= singer_index_element(g):
        return HasOne(("Thm-fr1", "Lem-tp1"))
    base = Weight((0,) * n)
    for lvl, nu in nus:
        base = base + (2**lvl) * nu
    return TensorCase(base, top_levels[0], d, ("Prop-p49",))
