"""Maximal tori of Sp_2n(2) as signed partitions, and weight restriction.

A torus shape is a list of blocks (k, sign) with cyclic factor order
2^k - sign; sign -1 marks a block acting irreducibly (a Singer factor).
On the canonical diagonal form of a block the epsilon coordinate at
offset j evaluates on the block generator as zeta^(2^j), so a weight
restricts to a block as the residue sum(c_j * 2^j) modulo the factor
order.  All wrap-around relations are automatic in the modular
arithmetic.
"""

import os
from dataclasses import dataclass
from itertools import product
from math import gcd, lcm

from .weights import EpsWeight, WeightSet

DEFAULT_SWEEP_LIMIT = 10**6


class SweepLimitError(RuntimeError):
    """Raised when a brute-force sweep would exceed its configured bound."""


@dataclass(frozen=True)
class TorusShape:
    """Signed partition (k_i, sign_i); blocks kept in canonical order."""

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        blocks = tuple((int(k), int(s)) for k, s in self.blocks)
        for k, s in blocks:
            if k < 1:
                raise ValueError(f"block rank must be positive, got {k}")
            if s not in (1, -1):
                raise ValueError(f"block sign must be +1 or -1, got {s}")
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=lambda b: (-b[0], b[1]))))

    @property
    def rank(self) -> int:
        return sum(k for k, _ in self.blocks)

    def __str__(self) -> str:
        return ",".join(str(s * k) for k, s in self.blocks)


@dataclass(frozen=True)
class TorusElement:
    """An element of a torus in canonical form: one exponent per cyclic factor."""

    shape: TorusShape
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(m) for m in self.exponents))
        orders = factor_orders(self.shape)
        if len(self.exponents) != len(orders):
            raise ValueError("one exponent per block required")
        for m, o in zip(self.exponents, orders):
            if not 0 <= m < o:
                raise ValueError(f"exponent {m} out of range for factor order {o}")

    @property
    def order(self) -> int:
        return lcm(*(o // gcd(m, o) for m, o in zip(self.exponents, factor_orders(self.shape))))


def factor_orders(shape: TorusShape) -> tuple[int, ...]:
    return tuple(2**k - s for k, s in shape.blocks)


def torus_order(shape: TorusShape) -> int:
    out = 1
    for o in factor_orders(shape):
        out *= o
    return out


def singer_index(shape: TorusShape) -> int:
    """Number of blocks with sign -1."""
    return sum(1 for _, s in shape.blocks if s == -1)


def singer_shape(n: int) -> TorusShape:
    """The cyclic torus of order 2^n + 1."""
    return TorusShape(((n, -1),))


def t_sharp(n: int) -> TorusShape:
    """The torus with n cyclic factors of order 3."""
    return TorusShape(((1, -1),) * n)


def enumerate_shapes(n: int) -> list[TorusShape]:
    """All signed partitions of n, canonically ordered, no duplicates."""
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    shapes: list[TorusShape] = []
    for parts in _partitions(n, n):
        # distinct part sizes, largest first; each size gets 0..count minus signs
        sizes = sorted(set(parts), reverse=True)
        counts = [parts.count(k) for k in sizes]
        for minus in product(*(range(c, -1, -1) for c in counts)):
            blocks = []
            for k, c, m in zip(sizes, counts, minus):
                blocks += [(k, -1)] * m + [(k, 1)] * (c - m)
            shapes.append(TorusShape(tuple(blocks)))
    return shapes


def _partitions(n: int, max_part: int) -> list[list[int]]:
    if n == 0:
        return [[]]
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - k, k):
            out.append([k] + rest)
    return out


def block_sums(mu: EpsWeight, shape: TorusShape) -> tuple[int, ...]:
    """Residues of mu on each cyclic factor, consuming coordinates in block order."""
    if mu.rank != shape.rank:
        raise ValueError(f"rank mismatch: {mu.rank} vs {shape.rank}")
    residues = []
    pos = 0
    for k, s in shape.blocks:
        o = 2**k - s
        r = 0
        for j in range(k):
            r += mu.coords[pos + j] << j
        residues.append(r % o)
        pos += k
    return tuple(residues)


def restricts_trivially(mu: EpsWeight, shape: TorusShape) -> bool:
    """True when the character attached to mu is trivial on the whole torus."""
    return not any(block_sums(mu, shape))


def trivial_constituent(ws: WeightSet, shape: TorusShape) -> bool:
    """True when some weight of ws restricts trivially to the torus."""
    if ws.rank != shape.rank:
        raise ValueError(f"rank mismatch: {ws.rank} vs {shape.rank}")
    return any(restricts_trivially(mu, shape) for mu in ws.members)


def occurs_in_omega_n(residues: tuple[int, ...], shape: TorusShape) -> bool:
    """Whether a character with these block residues occurs in the top
    fundamental module restricted to the torus: it must be nontrivial on
    every sign -1 factor; sign +1 factors are unconstrained."""
    if len(residues) != len(shape.blocks):
        raise ValueError("one residue per block required")
    return all(r != 0 for r, (_, s) in zip(residues, shape.blocks) if s == -1)


def eval_weight(mu: EpsWeight, t: TorusElement) -> int:
    """Value of mu at t as a residue modulo lcm of the factor orders.

    Zero means the character value is 1.
    """
    orders = factor_orders(t.shape)
    L = lcm(*orders)
    rs = block_sums(mu, t.shape)
    return sum((L // o) * m * r for o, m, r in zip(orders, t.exponents, rs)) % L


def sweep_limit(explicit: int | None = None) -> int:
    """Resolve the sweep bound: explicit argument, SWEEP_LIMIT env var, default."""
    if explicit is not None:
        return explicit
    env = os.environ.get("SWEEP_LIMIT")
    return int(env) if env else DEFAULT_SWEEP_LIMIT


def unisingular_on_torus(ws: WeightSet, shape: TorusShape, limit: int | None = None) -> bool:
    """Brute-force sweep: does every torus element take value 1 on some weight?

    Enumerates every exponent tuple of the canonical form; errors out if
    the torus order exceeds the sweep limit rather than truncating.
    """
    if ws.rank != shape.rank:
        raise ValueError(f"rank mismatch: {ws.rank} vs {shape.rank}")
    bound = sweep_limit(limit)
    if torus_order(shape) > bound:
        raise SweepLimitError(f"torus order {torus_order(shape)} exceeds sweep limit {bound}")
    orders = factor_orders(shape)
    L = lcm(*orders)
    coefs = [L // o for o in orders]
    # rows with vanishing residues sort first so sweeps short-circuit early
    rows = sorted(
        (tuple(c * r for c, r in zip(coefs, block_sums(mu, shape))) for mu in ws.members),
        key=lambda row: sum(row),
    )
    if rows and not any(rows[0]):
        return True  # a weight trivial on the whole torus covers every element
    for m in product(*(range(o) for o in orders)):
        if not any(sum(x * mi for x, mi in zip(row, m)) % L == 0 for row in rows):
            return False
    return True


def parse_torus_label(text: str) -> TorusShape:
    """Parse a comma-separated signed-part label such as "-3,2,1"."""
    try:
        parts = [int(p) for p in text.strip().split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse torus label {text!r}") from exc
    if any(p == 0 for p in parts):
        raise ValueError("torus label parts must be nonzero")
    return TorusShape(tuple((abs(p), 1 if p > 0 else -1) for p in parts))
