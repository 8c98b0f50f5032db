"""Semisimple elements of Sp_2n(2) in minimal block form.

A block (d, o, sign) records an orthogonally indecomposable piece of the
natural module: half-dimension d, order o of the element on the piece,
sign -1 for irreducible action (o divides 2^d + 1) and +1 for a dual pair
of halves (o divides 2^d - 1).  Minimality pins the multiplicative order
of 2 modulo o to 2d, respectively d, so blocks cannot be split further;
non-minimal data is rejected rather than re-decomposed.

The coprimality graph on blocks has an edge where two block orders share
a factor; an isolated block of full order 2^d + 1 is "singular".  The
number of singular blocks is the element's Singer index, and the Singer
height of n is the largest possible Singer index at rank n.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, lcm

from .arith import DEFAULT_FACTOR_BOUND, divisors, mult_order
from .tori import TorusElement, TorusShape


@dataclass(frozen=True)
class SemisimpleElement:
    """Blocks (d_i, o_i, sign_i); validated on construction."""

    blocks: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        blocks = tuple((int(d), int(o), int(s)) for d, o, s in self.blocks)
        if not blocks:
            raise ValueError("an element needs at least one block")
        for d, o, s in blocks:
            if d < 1 or o < 1:
                raise ValueError(f"block ({d},{o},{s}) has nonpositive fields")
            if s not in (1, -1):
                raise ValueError(f"block sign must be +1 or -1, got {s}")
            if (2**d - s) % o != 0:
                raise ValueError(f"order {o} does not divide 2^{d} {'+' if s == -1 else '-'} 1")
            if o == 1:
                if d != 1 or s != 1:
                    raise ValueError("an identity block must be (1, 1, +1)")
            else:
                need = 2 * d if s == -1 else d
                have = mult_order(2, o)
                if have != need:
                    raise ValueError(
                        f"block ({d},{o},{s}) is not minimal: order of 2 mod {o} is {have}, expected {need}"
                    )
        object.__setattr__(self, "blocks", blocks)

    @property
    def rank(self) -> int:
        return sum(d for d, _, _ in self.blocks)

    @property
    def order(self) -> int:
        return lcm(*(o for _, o, _ in self.blocks))

    def __str__(self) -> str:
        return ";".join(f"{d}:{o}:{'-' if s == -1 else '+'}" for d, o, s in self.blocks)


@dataclass(frozen=True)
class GammaGraph:
    """Coprimality graph on block indices (0-based), with its singular vertices."""

    vertices: int
    edges: frozenset[tuple[int, int]]
    singular: tuple[int, ...]


def build_element(blocks) -> SemisimpleElement:
    """Validate and build an element from (d, o, sign) triples."""
    return SemisimpleElement(tuple(tuple(b) for b in blocks))


def identity_element(n: int) -> SemisimpleElement:
    return SemisimpleElement(((1, 1, 1),) * n)


def singer_cycle(n: int) -> SemisimpleElement:
    """A generator of the cyclic torus of order 2^n + 1, as block data."""
    return SemisimpleElement(((n, 2**n + 1, -1),))


def gamma_graph(g: SemisimpleElement) -> GammaGraph:
    blocks = g.blocks
    k = len(blocks)
    edges = frozenset(
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if gcd(blocks[i][1], blocks[j][1]) > 1
    )
    linked = {v for e in edges for v in e}
    singular = tuple(
        i for i, (d, o, s) in enumerate(blocks) if i not in linked and o == 2**d + 1
    )
    return GammaGraph(k, edges, singular)


def singer_index_element(g: SemisimpleElement) -> int:
    return len(gamma_graph(g).singular)


@lru_cache(maxsize=None)
def singer_height(n: int) -> tuple[int, frozenset[int]]:
    """Largest l admitting parts n_1 + ... + n_l <= n with 2^(n_i) + 1 pairwise coprime.

    Exhaustive search over non-decreasing part sequences; repeated parts
    are never coprime, so distinctness is forced by the gcd test rather
    than assumed.  Returns the value and the first maximal witness found.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    best_size = 0
    best: tuple[int, ...] = ()

    def rec(start: int, budget: int, acc: list[int]) -> None:
        nonlocal best_size, best
        if len(acc) > best_size:
            best_size = len(acc)
            best = tuple(acc)
        for p in range(start, budget + 1):
            v = 2**p + 1
            if all(gcd(v, 2**q + 1) == 1 for q in acc):
                acc.append(p)
                rec(p, budget - p, acc)
                acc.pop()

    rec(1, n, [])
    return best_size, frozenset(best)


def singer_height_fast(n: int) -> tuple[int, frozenset[int]]:
    """Closed form: 2^a + 1 and 2^b + 1 are coprime iff a and b have
    different 2-adic valuations, so an optimal witness is 1, 2, 4, ...
    and the value is the largest l with 2^l - 1 <= n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    l = (n + 1).bit_length() - 1
    return l, frozenset(2**i for i in range(l))


def max_singer_element(n: int) -> SemisimpleElement:
    """An element of rank n whose Singer index attains the Singer height."""
    _, witness = singer_height(n)
    blocks = [(p, 2**p + 1, -1) for p in sorted(witness)]
    blocks += [(1, 1, 1)] * (n - sum(sorted(witness)))
    return SemisimpleElement(tuple(blocks))


def has_eigenvalue_one_omega_n(g: SemisimpleElement) -> bool:
    """Eigenvalue 1 on the top fundamental module iff no singular block exists."""
    return not gamma_graph(g).singular


def omega_n_eigenvalue_orders(g: SemisimpleElement, factor_bound: int = DEFAULT_FACTOR_BOUND) -> frozenset[int]:
    """Orders of the roots of unity occurring as eigenvalues on the top
    fundamental module: the divisors of the element order sharing a
    factor with every singular block order."""
    singular_orders = [g.blocks[i][1] for i in gamma_graph(g).singular]
    return frozenset(
        e for e in divisors(g.order, factor_bound)
        if all(gcd(e, o) > 1 for o in singular_orders)
    )


def to_torus_element(g: SemisimpleElement, generators: tuple[int, ...] | None = None) -> TorusElement:
    """Embed g into the canonical form of a compatible torus.

    Block i of shape (d_i, sign_i) has factor order O_i = 2^(d_i) - sign_i;
    the exponent (O_i / o_i) * u_i realizes an element of order o_i for any
    unit u_i modulo o_i.  Default generators are all 1.
    """
    us = generators if generators is not None else (1,) * len(g.blocks)
    if len(us) != len(g.blocks):
        raise ValueError("one generator choice per block required")
    for u, (_, o, _) in zip(us, g.blocks):
        if gcd(u, o) != 1:
            raise ValueError(f"generator {u} is not a unit modulo {o}")
    # sort pairs with the shape's canonical key so exponents stay aligned
    pairs = sorted(zip(g.blocks, us), key=lambda p: (-p[0][0], p[0][2]))
    shape = TorusShape(tuple((d, s) for (d, _, s), _ in pairs))
    exps = []
    for (d, o, s), u in pairs:
        big = 2**d - s
        exps.append((big // o) * u % big if big > 1 else 0)
    return TorusElement(shape, tuple(exps))


def generator_tuples(g: SemisimpleElement):
    """All generator choices (u_1, ..., u_k), u_i a unit modulo o_i."""
    unit_ranges = [[u for u in range(1, o + 1) if gcd(u, o) == 1] for _, o, _ in g.blocks]
    return product(*unit_ranges)


def valid_blocks(d: int) -> list[tuple[int, int, int]]:
    """All minimal blocks of half-dimension d."""
    out = []
    for s in (-1, 1):
        top = 2**d - s
        for o in divisors(top):
            if o == 1:
                if d == 1 and s == 1:
                    out.append((d, o, s))
            elif mult_order(2, o) == (2 * d if s == -1 else d):
                out.append((d, o, s))
    return out


def enumerate_elements(n: int) -> list[SemisimpleElement]:
    """All valid elements of rank n, one per block multiset."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    out: list[SemisimpleElement] = []

    def rec(remaining: int, bound: tuple[int, int, int] | None, acc: list[tuple[int, int, int]]) -> None:
        if remaining == 0:
            out.append(SemisimpleElement(tuple(acc)))
            return
        for d in range(remaining, 0, -1):
            for b in valid_blocks(d):
                if bound is not None and _block_key(b) < _block_key(bound):
                    continue
                acc.append(b)
                rec(remaining - d, b, acc)
                acc.pop()

    rec(n, None, [])
    return out


def _block_key(b: tuple[int, int, int]) -> tuple[int, int, int]:
    d, o, s = b
    return (-d, s, -o)


def parse_element(text: str) -> SemisimpleElement:
    """Parse semicolon-separated "d:o:sign" triples, e.g. "1:3:-;2:5:-"."""
    blocks = []
    for part in text.strip().split(";"):
        fields = part.split(":")
        if len(fields) != 3 or fields[2] not in ("+", "-"):
            raise ValueError(f"cannot parse element block {part!r}")
        blocks.append((int(fields[0]), int(fields[1]), -1 if fields[2] == "-" else 1))
    return build_element(blocks)
