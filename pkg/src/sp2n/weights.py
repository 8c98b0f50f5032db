"""Weight-lattice combinatorics for root systems of type C_n.

A weight is an integer string (a_1, ..., a_n) over the fundamental basis.
The epsilon basis is the derived view with coordinates
c_j = a_j + a_{j+1} + ... + a_n, so that the j-th fundamental weight is
e_1 + ... + e_j.  The simple roots are e_i - e_{i+1} for i < n together
with the long root 2*e_n.  All arithmetic is exact (Python integers).

The closed-form dominance test (`dominates`) is a fast path; the
subtraction search (`dominates_oracle`) is the definition of record and
the two are cross-checked exhaustively by the test suite.
"""

from dataclasses import dataclass
from itertools import permutations, product


@dataclass(frozen=True, slots=True)
class Weight:
    """Integer coefficients over the fundamental basis; rank = len(coeffs)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("rank must be at least 1")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def is_restricted(self) -> bool:
        """True when every coefficient lies in {0, 1}."""
        return all(a in (0, 1) for a in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "Weight") -> "Weight":
        _same_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coeffs))

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.coeffs)


@dataclass(frozen=True, slots=True)
class EpsWeight:
    """Integer coordinates over the epsilon basis; rank = len(coords)."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) < 1:
            raise ValueError("rank must be at least 1")

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "EpsWeight") -> "EpsWeight":
        _same_rank(self, other)
        return EpsWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "EpsWeight":
        return EpsWeight(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        return "e:" + ",".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class WeightSet:
    """A finite set of epsilon-basis weights of one fixed rank.

    `weyl_closed` marks sets known to be stable under coordinate
    permutations and sign changes (hence equal to their negative).
    """

    rank: int
    members: frozenset[EpsWeight]
    weyl_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for m in self.members:
            if m.rank != self.rank:
                raise ValueError(f"member {m} has rank {m.rank}, expected {self.rank}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item) -> bool:
        return item in self.members


def _same_rank(a, b) -> None:
    ra = a.rank if hasattr(a, "rank") else len(a)
    rb = b.rank if hasattr(b, "rank") else len(b)
    if ra != rb:
        raise ValueError(f"rank mismatch: {ra} vs {rb}")


def zero_weight(rank: int) -> Weight:
    return Weight((0,) * rank)


def fundamental(rank: int, i: int) -> Weight:
    """The i-th fundamental weight (1-based), as a coefficient string."""
    if not 1 <= i <= rank:
        raise ValueError(f"fundamental index {i} out of range for rank {rank}")
    return Weight(tuple(1 if j == i else 0 for j in range(1, rank + 1)))


def simple_root(rank: int, i: int) -> EpsWeight:
    """The i-th simple root in epsilon coordinates: e_i - e_{i+1}, or 2*e_n."""
    if not 1 <= i <= rank:
        raise ValueError(f"simple root index {i} out of range for rank {rank}")
    v = [0] * rank
    if i < rank:
        v[i - 1], v[i] = 1, -1
    else:
        v[rank - 1] = 2
    return EpsWeight(tuple(v))


def to_eps(w: Weight) -> EpsWeight:
    """Change of basis: c_j = a_j + a_{j+1} + ... + a_n."""
    acc = 0
    out = [0] * w.rank
    for j in range(w.rank - 1, -1, -1):
        acc += w.coeffs[j]
        out[j] = acc
    return EpsWeight(tuple(out))


def from_eps(e: EpsWeight) -> Weight:
    """Inverse change of basis: a_i = c_i - c_{i+1} with c_{n+1} = 0."""
    c = e.coords
    return Weight(tuple(c[i] - (c[i + 1] if i + 1 < len(c) else 0) for i in range(len(c))))


def delta(w: Weight) -> int:
    """Sum of i * a_i; equivalently the sum of the epsilon coordinates."""
    return sum(i * a for i, a in enumerate(w.coeffs, start=1))


def gamma(w: Weight) -> int:
    """Sum of the fundamental coefficients a_i."""
    return sum(w.coeffs)


def is_radical(w: Weight) -> bool:
    """True when w lies in the root lattice, i.e. delta(w) is even."""
    return delta(w) % 2 == 0


def dominates(hi: Weight, lo: Weight) -> bool:
    """True when hi - lo is a nonnegative integer combination of simple roots.

    Closed form in epsilon coordinates: with d = eps(hi) - eps(lo), the
    multiplicity of the i-th short simple root is the prefix sum
    d_1 + ... + d_i and the multiplicity of the long root is half the
    total; all must be nonnegative integers.
    """
    _same_rank(hi, lo)
    d = [x - y for x, y in zip(to_eps(hi).coords, to_eps(lo).coords)]
    run = 0
    for v in d[:-1]:
        run += v
        if run < 0:
            return False
    total = run + d[-1]
    return total >= 0 and total % 2 == 0


def dominates_oracle(hi: Weight, lo: Weight) -> bool:
    """Decide hi - lo in R+ by explicit search over simple-root subtractions.

    States are epsilon-coordinate vectors; a move subtracts one simple root.
    A state is pruned when the zero vector is provably unreachable from it:
    prefix sums of the coordinates never increase under any move, and the
    full coordinate sum only ever changes by 2 (so its parity is invariant).
    """
    _same_rank(hi, lo)
    n = hi.rank
    start = tuple(x - y for x, y in zip(to_eps(hi).coords, to_eps(lo).coords))
    target = (0,) * n
    roots = [simple_root(n, i).coords for i in range(1, n + 1)]

    def viable(v: tuple[int, ...]) -> bool:
        run = 0
        for x in v[:-1]:
            run += x
            if run < 0:
                return False
        total = run + v[-1]
        return total >= 0 and total % 2 == 0

    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        if v == target:
            return True
        if not viable(v):
            continue
        for r in roots:
            child = tuple(a - b for a, b in zip(v, r))
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return False


def dominant_weights_up_to(rank: int, max_delta: int) -> list[Weight]:
    """All dominant weights of the given rank with delta at most max_delta."""
    if rank < 1:
        raise ValueError("rank must be at least 1")
    out: list[Weight] = []
    acc: list[int] = []

    def rec(i: int, remaining: int) -> None:
        if i > rank:
            out.append(Weight(tuple(acc)))
            return
        for a in range(remaining // i + 1):
            acc.append(a)
            rec(i + 1, remaining - a * i)
            acc.pop()

    rec(1, max_delta)
    return out


def dominant_below(w: Weight) -> frozenset[Weight]:
    """All dominant weights mu with dominates(w, mu), including w itself.

    Bounded search: candidates are the dominant weights with delta at most
    delta(w) and the same delta parity (dominance preserves parity).
    """
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    dw = delta(w)
    return frozenset(
        mu
        for mu in dominant_weights_up_to(w.rank, dw)
        if (dw - delta(mu)) % 2 == 0 and dominates(w, mu)
    )


def weyl_orbit(e: EpsWeight) -> WeightSet:
    """All distinct vectors obtained by permuting coordinates and flipping signs."""
    mags = tuple(sorted(abs(c) for c in e.coords))
    members: set[EpsWeight] = set()
    for perm in set(permutations(mags)):
        positions = [i for i, c in enumerate(perm) if c]
        for signs in product((1, -1), repeat=len(positions)):
            v = list(perm)
            for p, s in zip(positions, signs):
                v[p] = s * v[p]
            members.add(EpsWeight(tuple(v)))
    return WeightSet(e.rank, frozenset(members), weyl_closed=True)


def dominant_representative(e: EpsWeight) -> Weight:
    """The unique dominant weight in the orbit of e under permutations and sign flips."""
    return from_eps(EpsWeight(tuple(sorted((abs(c) for c in e.coords), reverse=True))))


def contains_zero(ws: WeightSet) -> bool:
    return EpsWeight((0,) * ws.rank) in ws.members


def dominant_members(ws: WeightSet) -> list[Weight]:
    """The dominant weights whose orbits meet ws, sorted by coefficient string."""
    reps = {dominant_representative(m) for m in ws.members if _is_dominant_eps(m)}
    return sorted(reps, key=lambda w: w.coeffs)


def _is_dominant_eps(e: EpsWeight) -> bool:
    c = e.coords
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1)) and c[-1] >= 0


def format_weight(w: Weight) -> str:
    return str(w)


def format_eps(e: EpsWeight) -> str:
    return str(e)


def parse_weight(text: str) -> Weight | EpsWeight:
    """Parse "a1,a2,..." as a Weight or "e:c1,c2,..." as an EpsWeight."""
    body = text.strip()
    eps = body.startswith("e:")
    if eps:
        body = body[2:]
    try:
        values = tuple(int(part) for part in body.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse weight {text!r}") from exc
    return EpsWeight(values) if eps else Weight(values)
