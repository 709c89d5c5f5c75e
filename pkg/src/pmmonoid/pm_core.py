"""
The finite monoid R_n of pairs (permutation, ordered set partition).

R_n is the bicrossed product of the symmetric group S_n with the monoid P_n of ordered set
partitions of {1, ..., n}. Everything is 1-based. Permutations compose with the right factor acting
first, (ab)(k) = a(b(k)), and the product of elements is

    (s, p) . (t, q) = (s t, t^-1(p) * q)

where t^-1(p) is the blockwise preimage and * interleaves block intersections with the first
factor's index varying fastest.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import math
import random
from typing import Iterable, Iterator, Sequence

ENUMERATION_GUARD = 6


@dataclasses.dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} in one-line notation: images[j-1] = sigma(j)."""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """The adjacent transposition s_i = (i, i+1)."""
        if not 1 <= i < n:
            raise ValueError(f"transposition index {i} out of range 1..{n - 1}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = i + 1, i
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return perm_compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, v in enumerate(self.images, start=1):
            inv[v - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.images, start=1))


def perm_compose(a: Permutation, b: Permutation) -> Permutation:
    """
    The composite a o b, with b applied first.

    >>> s1, s2 = Permutation.transposition(3, 1), Permutation.transposition(3, 2)
    >>> perm_compose(s1, s2)(3)
    1
    """
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return Permutation(tuple(a.images[k - 1] for k in b.images))


@dataclasses.dataclass(frozen=True)
class OrderedSetPartition:
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("ordered set partition has an empty block")
            if seen & b:
                raise ValueError(f"blocks overlap: {self.blocks}")
            seen |= b
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError(f"blocks do not cover 1..{len(seen)}: {self.blocks}")

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> OrderedSetPartition:
        return cls(tuple(frozenset(b) for b in blocks))

    @classmethod
    def full(cls, n: int) -> OrderedSetPartition:
        return cls((frozenset(range(1, n + 1)),))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __mul__(self, other: OrderedSetPartition) -> OrderedSetPartition:
        return partition_product(self, other)

    def image(self, perm: Permutation) -> OrderedSetPartition:
        """Blockwise image sigma(p), block order kept."""
        return OrderedSetPartition(tuple(frozenset(perm(j) for j in b) for b in self.blocks))

    def preimage(self, perm: Permutation) -> OrderedSetPartition:
        return self.image(perm.inverse())

    def block_of(self, j: int) -> int:
        """1-based index of the block containing j."""
        for t, b in enumerate(self.blocks, start=1):
            if j in b:
                return t
        raise ValueError(f"{j} is not covered by the partition")

    def sorted_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(b)) for b in self.blocks)

    def __str__(self):
        return "(" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.sorted_blocks()) + ")"


def partition_product(p: OrderedSetPartition, q: OrderedSetPartition) -> OrderedSetPartition:
    """
    (p_1..p_m) * (q_1..q_m') = (p_1 & q_1, ..., p_m & q_1, ..., p_1 & q_m', ..., p_m & q_m'),
    empty intersections dropped.

    >>> print(OrderedSetPartition.of({1, 2}, {3}) * OrderedSetPartition.of({1}, {2, 3}))
    ({1}, {2}, {3})
    """
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return OrderedSetPartition(tuple(a & b for b in q.blocks for a in p.blocks if a & b))


@dataclasses.dataclass(frozen=True)
class StandardComposition:
    """
    Cuts 1 <= k_1 < ... < k_{m-1} < n naming the partition ({1..k_1}, {k_1+1..k_2}, ..., {k_{m-1}+1..n}).
    Empty cuts mean a single block.
    """
    n: int
    cuts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cuts", tuple(self.cuts))
        if self.n < 1:
            raise ValueError("n must be positive")
        prev = 0
        for k in self.cuts:
            if not prev < k < self.n:
                raise ValueError(f"cuts must be strictly increasing in 1..{self.n - 1}: {self.cuts}")
            prev = k

    def partition(self) -> OrderedSetPartition:
        bounds = (0, *self.cuts, self.n)
        return OrderedSetPartition(tuple(frozenset(range(a + 1, b + 1)) for a, b in zip(bounds, bounds[1:])))

    def block_sizes(self) -> tuple[int, ...]:
        bounds = (0, *self.cuts, self.n)
        return tuple(b - a for a, b in zip(bounds, bounds[1:]))

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> StandardComposition:
        return cls(sum(sizes), tuple(itertools.accumulate(sizes))[:-1])

    def __str__(self):
        return "e[" + ",".join(map(str, self.cuts)) + "]"


def standard_compositions(n: int) -> list[StandardComposition]:
    """All cut sequences for n (the index set of the idempotent cross-section), fewest blocks first."""
    out = []
    for m in range(n):
        for cuts in itertools.combinations(range(1, n), m):
            out.append(StandardComposition(n, cuts))
    return out


@dataclasses.dataclass(frozen=True)
class PMElement:
    perm: Permutation
    partition: OrderedSetPartition

    def __post_init__(self):
        if self.perm.n != self.partition.n:
            raise ValueError(f"size mismatch: {self.perm.n} vs {self.partition.n}")

    @classmethod
    def unit(cls, n: int) -> PMElement:
        return cls(Permutation.identity(n), OrderedSetPartition.full(n))

    @classmethod
    def s(cls, n: int, i: int) -> PMElement:
        return cls(Permutation.transposition(n, i), OrderedSetPartition.full(n))

    @classmethod
    def e(cls, comp: StandardComposition) -> PMElement:
        return cls(Permutation.identity(comp.n), comp.partition())

    @property
    def n(self) -> int:
        return self.perm.n

    def __mul__(self, other: PMElement) -> PMElement:
        return rn_product(self, other)

    def star(self) -> PMElement:
        return rn_star(self)

    def to_json(self) -> dict:
        return {"n": self.n, "perm": list(self.perm.images), "partition": [list(b) for b in self.partition.sorted_blocks()]}

    @classmethod
    def from_json(cls, data: dict) -> PMElement:
        el = cls(Permutation(tuple(data["perm"])), OrderedSetPartition(tuple(frozenset(b) for b in data["partition"])))
        if "n" in data and data["n"] != el.n:
            raise ValueError(f"declared n={data['n']} does not match element size {el.n}")
        return el

    def __str__(self):
        return f"({list(self.perm.images)}, {self.partition})"


def rn_product(a: PMElement, b: PMElement) -> PMElement:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return PMElement(a.perm * b.perm, partition_product(a.partition.preimage(b.perm), b.partition))


def rn_star(a: PMElement) -> PMElement:
    """The inverse-monoid partner (sigma^-1, sigma(p))."""
    return PMElement(a.perm.inverse(), a.partition.image(a.perm))


# Enumeration -----------------------------------------------------------------------------------------

def _check_guard(n: int):
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATION_GUARD:
        raise ValueError(f"enumeration guard exceeded: n={n} > {ENUMERATION_GUARD}")


def permutations(n: int) -> list[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def _ordered_partitions(elements: tuple[int, ...]) -> Iterator[tuple[frozenset[int], ...]]:
    if not elements:
        yield ()
        return
    for size in range(1, len(elements) + 1):
        for first in itertools.combinations(elements, size):
            rest = tuple(x for x in elements if x not in first)
            for tail in _ordered_partitions(rest):
                yield (frozenset(first), *tail)


def ordered_set_partitions(n: int) -> list[OrderedSetPartition]:
    """P_n ordered by number of blocks, then lexicographically by sorted block contents."""
    parts = [OrderedSetPartition(bs) for bs in _ordered_partitions(tuple(range(1, n + 1)))]
    return sorted(parts, key=lambda p: (len(p), p.sorted_blocks()))


def enumerate_rn(n: int) -> list[PMElement]:
    """All of R_n: permutations (lexicographic) outer, partitions inner."""
    _check_guard(n)
    parts = ordered_set_partitions(n)
    return [PMElement(s, p) for s in permutations(n) for p in parts]


@functools.lru_cache(maxsize=None)
def stirling2(n: int, m: int) -> int:
    """
    Stirling numbers of the second kind.

    >>> stirling2(4, 2), stirling2(3, 2)
    (7, 3)
    """
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    if n == m:
        return 1
    if m == 0:
        return 0
    return m * stirling2(n - 1, m) + stirling2(n - 1, m - 1)


def ordered_bell(n: int) -> int:
    return sum(math.factorial(m) * stirling2(n, m) for m in range(1, n + 1))


def rn_count_stirling(n: int) -> int:
    """n! * sum_m m! S(n, m)."""
    return math.factorial(n) * ordered_bell(n)


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first, *rest)


def rn_count_multinomial(n: int) -> int:
    """Sum over compositions r_1 + ... + r_m = n of prod_i C(n - r_1 - ... - r_{i-1}, r_i)^2 r_i!."""
    total = 0
    for comp in _compositions(n):
        term, left = 1, n
        for r in comp:
            term *= math.comb(left, r) ** 2 * math.factorial(r)
            left -= r
        total += term
    return total


def idempotents(n: int) -> set[PMElement]:
    """{(id, p) : p in P_n}."""
    _check_guard(n)
    ident = Permutation.identity(n)
    return {PMElement(ident, p) for p in ordered_set_partitions(n)}


# Structure -------------------------------------------------------------------------------------------

def lambda_of(a: PMElement) -> StandardComposition:
    """Cumulative block sizes of the partition; indexes the double coset W e W containing a."""
    return StandardComposition.from_sizes([len(b) for b in a.partition.blocks])


def standardize_partition(p: OrderedSetPartition) -> tuple[Permutation, StandardComposition]:
    """
    The permutation w, order preserving on each block, with w(p) standard, and the resulting cuts.

    >>> w, q = standardize_partition(OrderedSetPartition.of({2}, {1, 3}))
    >>> w.images, q.cuts
    ((2, 1, 3), (1,))
    """
    images = [0] * p.n
    nxt = 1
    for b in p.blocks:
        for j in sorted(b):
            images[j - 1] = nxt
            nxt += 1
    q = StandardComposition.from_sizes([len(b) for b in p.blocks])
    return Permutation(tuple(images)), q


def wew_class(e: StandardComposition) -> set[PMElement]:
    """{w1 e w2 : w1, w2 in S_n}, by brute force."""
    idem = PMElement.e(e)
    full = OrderedSetPartition.full(e.n)
    units = [PMElement(s, full) for s in permutations(e.n)]
    return {u * idem * v for u in units for v in units}


@dataclasses.dataclass(frozen=True)
class MatrixTupleSymbolic:
    """0/1 matrix tuple; term t lists its nonzero (row, col) positions."""
    n: int
    terms: tuple[frozenset[tuple[int, int]], ...]


def to_matrix_tuple(a: PMElement) -> MatrixTupleSymbolic:
    """
    >>> a = PMElement(Permutation((2, 1, 3)), OrderedSetPartition.of({1, 2}, {3}))
    >>> [sorted(t) for t in to_matrix_tuple(a).terms]
    [[(1, 2), (2, 1)], [(3, 3)]]
    """
    return MatrixTupleSymbolic(a.n, tuple(frozenset((a.perm(j), j) for j in b) for b in a.partition.blocks))


def from_matrix_tuple(t: MatrixTupleSymbolic) -> PMElement:
    images = [0] * t.n
    blocks = []
    for term in t.terms:
        blocks.append(frozenset(col for _, col in term))
        for row, col in term:
            if images[col - 1]:
                raise ValueError(f"column {col} used twice")
            images[col - 1] = row
    return PMElement(Permutation(tuple(images)), OrderedSetPartition(tuple(blocks)))


# Matched pair ----------------------------------------------------------------------------------------
#
# The matched pair (S, B, sigma) has S = P_n and B = S_n with
#     p -> w = w            (left action of S on B)
#     p <- w = w^-1(p)      (right action of B on S)
# and the bicrossed product B x S reproduces rn_product.

def mp_left(p: OrderedSetPartition, w: Permutation) -> Permutation:
    return w


def mp_right(p: OrderedSetPartition, w: Permutation) -> OrderedSetPartition:
    return p.preimage(w)


def bicrossed_product(x: tuple[Permutation, OrderedSetPartition], y: tuple[Permutation, OrderedSetPartition]):
    (b, s), (c, t) = x, y
    return b * mp_left(s, c), mp_right(s, c) * t


def _axiom_holds(axiom: int, s, t, b, c) -> bool:
    n = b.n
    one_s, one_b = OrderedSetPartition.full(n), Permutation.identity(n)
    if axiom == 1:
        return mp_left(s, mp_left(t, b)) == mp_left(s * t, b)
    if axiom == 2:
        return mp_right(s * t, b) == mp_right(s, mp_left(t, b)) * mp_right(t, b)
    if axiom == 3:
        return mp_right(mp_right(s, b), c) == mp_right(s, b * c)
    if axiom == 4:
        return mp_left(s, b * c) == mp_left(s, b) * mp_left(mp_right(s, b), c)
    if axiom == 5:
        return mp_left(one_s, b) == b
    if axiom == 6:
        return mp_left(s, one_b) == one_b
    if axiom == 7:
        return mp_right(s, one_b) == s
    if axiom == 8:
        return mp_right(one_s, b) == one_s
    raise ValueError(f"unknown axiom {axiom}")


@dataclasses.dataclass
class MatchedPairReport:
    n: int
    checks: dict[int, int]
    counterexample: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __str__(self):
        status = "ok" if self.ok else f"FAILED at axiom {self.counterexample[0]}: {self.counterexample[1:]}"
        return f"matched pair n={self.n}: {sum(self.checks.values())} checks, {status}"


def matched_pair_check(n: int, samples: int | None = None, seed: int = 0) -> MatchedPairReport:
    """
    Check the eight matched-pair axioms for (P_n, S_n). Exhaustive over (s, t, b, c) quadruples
    restricted to the variables each axiom uses when samples is None; otherwise random quadruples.
    """
    parts = ordered_set_partitions(n)
    perms = permutations(n)
    report = MatchedPairReport(n, {k: 0 for k in range(1, 9)})

    def run(quads):
        for axiom, (s, t, b, c) in quads:
            report.checks[axiom] += 1
            if not _axiom_holds(axiom, s, t, b, c):
                report.counterexample = (axiom, s, t, b, c)
                return

    s0, b0 = parts[0], perms[0]
    if samples is None:
        uses = {1: "stb", 2: "stb", 3: "sbc", 4: "sbc", 5: "b", 6: "s", 7: "s", 8: "b"}
        pools = {"s": parts, "t": parts, "b": perms, "c": perms}

        def quads():
            for axiom, vars_ in uses.items():
                for combo in itertools.product(*(pools[v] for v in vars_)):
                    vals = dict(zip(vars_, combo))
                    yield axiom, (vals.get("s", s0), vals.get("t", s0), vals.get("b", b0), vals.get("c", b0))
        run(quads())
    else:
        rng = random.Random(seed)

        def quads():
            for _ in range(samples):
                q = (rng.choice(parts), rng.choice(parts), rng.choice(perms), rng.choice(perms))
                for axiom in range(1, 9):
                    yield axiom, q
        run(quads())
    return report


def random_element(n: int, rng: random.Random) -> PMElement:
    """Uniform-ish random element without enumerating P_n: random permutation and random ordered partition."""
    images = list(range(1, n + 1))
    rng.shuffle(images)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    blocks, cur = [], [order[0]]
    for j in order[1:]:
        if rng.random() < 0.5:
            blocks.append(cur)
            cur = []
        cur.append(j)
    blocks.append(cur)
    return PMElement(Permutation(tuple(images)), OrderedSetPartition(tuple(frozenset(b) for b in blocks)))
