"""
Words over {s_1, ..., s_{n-1}, e_cuts}, their evaluation in R_n, and the defining relations re1..re5.

Equality in R_n is decided by evaluation. Relation instances are purely syntactic pairs of words,
so checking one exercises eval_word on both sides.
"""
from __future__ import annotations

import dataclasses
import itertools
import random
from typing import Iterator, Mapping, Sequence

from .pm_core import (
    OrderedSetPartition,
    Permutation,
    PMElement,
    StandardComposition,
    enumerate_rn,
    standard_compositions,
    standardize_partition,
)
from .words import E, Letter, S, Word, validate_letter

SCHEMAS = ("re1", "re2", "re3", "re4", "re5")


class RelationError(ValueError):
    """Parameters violate a relation schema's side conditions."""


def letter_element(letter: Letter, n: int) -> PMElement:
    validate_letter(letter, n, "braid")
    if isinstance(letter, S):
        return PMElement.s(n, letter.i)
    return PMElement.e(StandardComposition(n, letter.cuts))


def eval_word(word: Sequence[Letter], n: int) -> PMElement:
    """
    Fold of the R_n product over the generator images. Braid letters s_i^-1 evaluate like s_i.

    >>> from .words import parse_word
    >>> eval_word(parse_word("s1 s1", 2).letters, 2) == PMElement.unit(2)
    True
    """
    x = PMElement.unit(n)
    for letter in word:
        x = x * letter_element(letter, n)
    return x


def perm_of(word: Sequence[Letter], n: int) -> Permutation:
    """Permutation of a word of s letters (signs ignored)."""
    p = Permutation.identity(n)
    for x in word:
        if not isinstance(x, S):
            raise ValueError("expected s letters only")
        p = p * Permutation.transposition(n, x.i)
    return p


def perm_to_word(perm: Permutation) -> Word:
    """
    Bubble-sort expression s_{i_1} ... s_{i_t} whose product is perm.

    Right multiplication by s_i swaps entries i and i+1 of the one-line notation, so the swaps that
    sort perm to the identity, read in reverse, spell perm.

    >>> perm_to_word(Permutation((2, 3, 1)))
    (S(i=1, sign=1), S(i=2, sign=1))
    """
    a = list(perm.images)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(a) - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                swaps.append(i + 1)
                changed = True
    return tuple(S(i) for i in reversed(swaps))


def i_star(i: int, cuts: StandardComposition) -> int | None:
    """Index j of the block of the standard partition containing {i, i+1}, if any."""
    if not 1 <= i < cuts.n:
        raise ValueError(f"i={i} out of range 1..{cuts.n - 1}")
    for j, block in enumerate(cuts.partition().blocks, start=1):
        if i in block:
            return j if i + 1 in block else None
    return None


def compute_q(kcuts: StandardComposition, perm_word: Sequence[Letter], lcuts: StandardComposition):
    """
    Returns (q, w) where r = k * phi_{pi^-1}(l) is the product of the k partition with the blockwise
    image of the l partition under the word's permutation pi, and w is the canonical standardizer of r
    with w(r) = q.
    """
    n = kcuts.n
    if lcuts.n != n:
        raise ValueError("size mismatch")
    pi = perm_of(perm_word, n)
    r = kcuts.partition() * lcuts.partition().image(pi)
    w, q = standardize_partition(r)
    return q, w


def ad_word(sigma_word: Sequence[Letter], e: E, braid: bool = False) -> Word:
    """Ad(sigma)(e) = sigma^-1 e sigma, expanded as a word."""
    sigma_word = tuple(sigma_word)
    if braid:
        inv = tuple(x.inverse() for x in reversed(sigma_word))
    else:
        inv = tuple(reversed(sigma_word))
    return inv + (e,) + sigma_word


@dataclasses.dataclass(frozen=True)
class RelationInstance:
    schema: str
    lhs: Word
    rhs: Word
    params: Mapping = dataclasses.field(default_factory=dict, compare=False, hash=False)


def _need_cuts(value, n: int) -> StandardComposition:
    if isinstance(value, StandardComposition):
        if value.n != n:
            raise RelationError(f"composition is for n={value.n}, expected {n}")
        return value
    try:
        return StandardComposition(n, tuple(value))
    except ValueError as exc:
        raise RelationError(str(exc)) from None


def _need_index(i: int, n: int, upper: int | None = None) -> int:
    upper = n - 1 if upper is None else upper
    if not 1 <= i <= upper:
        raise RelationError(f"index {i} out of range 1..{upper}")
    return i


def check_re5_side_condition(k: StandardComposition, middle: Sequence[Letter]):
    if middle:
        i1 = middle[0].i
        if i_star(i1, k) is not None:
            raise RelationError(f"{{{i1},{i1 + 1}}} lies inside a block of {k}")


def instantiate_relation(schema: str, params: Mapping, n: int) -> RelationInstance:
    """
    Build a concrete relation.

    params per schema: re1 {i}; re2 {i, j}; re3 {i}; re4 {i, cuts};
    re5 {k, middle, l} with middle a sequence of s-letter indices.
    """
    if schema == "re1":
        i = _need_index(params["i"], n)
        return RelationInstance(schema, (S(i), S(i)), (), dict(params))
    if schema == "re2":
        i, j = _need_index(params["i"], n), _need_index(params["j"], n)
        if abs(i - j) < 2:
            raise RelationError(f"re2 needs |i-j| >= 2, got i={i}, j={j}")
        return RelationInstance(schema, (S(i), S(j)), (S(j), S(i)), dict(params))
    if schema == "re3":
        i = _need_index(params["i"], n, n - 2)
        return RelationInstance(schema, (S(i), S(i + 1), S(i)), (S(i + 1), S(i), S(i + 1)), dict(params))
    if schema == "re4":
        i = _need_index(params["i"], n)
        cuts = _need_cuts(params["cuts"], n)
        if i_star(i, cuts) is None:
            raise RelationError(f"{{{i},{i + 1}}} is not inside a block of {cuts}")
        e = E(cuts.cuts)
        return RelationInstance(schema, (e, S(i)), (S(i), e), dict(params))
    if schema == "re5":
        k = _need_cuts(params["k"], n)
        l = _need_cuts(params["l"], n)
        middle = tuple(S(_need_index(i, n)) for i in params["middle"])
        check_re5_side_condition(k, middle)
        q, w = compute_q(k, middle, l)
        lhs = (E(k.cuts), *middle, E(l.cuts))
        rhs = ad_word(perm_to_word(w), E(q.cuts)) + middle
        return RelationInstance(schema, lhs, rhs, dict(params))
    raise RelationError(f"unknown schema {schema!r}")


def check_relation(inst: RelationInstance, n: int) -> bool:
    return eval_word(inst.lhs, n) == eval_word(inst.rhs, n)


def all_instances(schema: str, n: int) -> Iterator[RelationInstance]:
    """Every instance of re1..re4 for this n."""
    idx = range(1, n)
    if schema == "re1":
        for i in idx:
            yield instantiate_relation(schema, {"i": i}, n)
    elif schema == "re2":
        for i, j in itertools.product(idx, idx):
            if abs(i - j) >= 2:
                yield instantiate_relation(schema, {"i": i, "j": j}, n)
    elif schema == "re3":
        for i in range(1, n - 1):
            yield instantiate_relation(schema, {"i": i}, n)
    elif schema == "re4":
        for i in idx:
            for comp in standard_compositions(n):
                if i_star(i, comp) is not None:
                    yield instantiate_relation(schema, {"i": i, "cuts": comp.cuts}, n)
    else:
        raise ValueError(f"{schema} has no finite instance list")


def re5_instances(n: int, max_middle: int) -> Iterator[RelationInstance]:
    """Every re5 instance whose middle word has length <= max_middle."""
    comps = standard_compositions(n)
    for r in range(max_middle + 1):
        for middle in itertools.product(range(1, n), repeat=r):
            for k in comps:
                if middle and i_star(middle[0], k) is not None:
                    continue
                for l in comps:
                    yield instantiate_relation("re5", {"k": k.cuts, "middle": middle, "l": l.cuts}, n)


def sample_re5(n: int, rng: random.Random, max_middle: int = 6) -> RelationInstance:
    comps = standard_compositions(n)
    while True:
        k, l = rng.choice(comps), rng.choice(comps)
        middle = tuple(rng.randrange(1, n) for _ in range(rng.randint(0, max_middle)))
        if middle and i_star(middle[0], k) is not None:
            continue
        return instantiate_relation("re5", {"k": k.cuts, "middle": middle, "l": l.cuts}, n)


def normal_form(a: PMElement) -> Word:
    """
    A word w1 e_q w2 evaluating to a, with (w, q) the canonical standardization of a's partition,
    w2 spelling w and w1 spelling sigma w^-1. The unit idempotent is omitted.
    """
    w, q = standardize_partition(a.partition)
    middle: Word = (E(q.cuts),) if q.cuts else ()
    return perm_to_word(a.perm * w.inverse()) + middle + perm_to_word(w)


# Bounded congruence ----------------------------------------------------------------------------------

def alphabet(n: int) -> list[Letter]:
    """Generators with the unit idempotent e[] left out: it denotes the empty word."""
    return [S(i) for i in range(1, n)] + [E(c.cuts) for c in standard_compositions(n) if c.cuts]


def _strip_unit(word: Sequence[Letter]) -> Word:
    return tuple(x for x in word if not (isinstance(x, E) and not x.cuts))


def relation_pairs(n: int, max_len: int) -> list[tuple[Word, Word]]:
    """All relation instances (unit idempotents erased) with both sides of length <= max_len."""
    pairs = set()
    insts = [inst for schema in ("re1", "re2", "re3", "re4") for inst in all_instances(schema, n)]
    insts.extend(re5_instances(n, max(0, max_len - 2)))
    for inst in insts:
        lhs, rhs = _strip_unit(inst.lhs), _strip_unit(inst.rhs)
        if lhs != rhs and len(lhs) <= max_len and len(rhs) <= max_len:
            pairs.add((lhs, rhs))
    return sorted(pairs, key=lambda p: (len(p[0]), len(p[1]), str(p)))


@dataclasses.dataclass
class CongruenceReport:
    n: int
    max_len: int
    slack: int
    words: int
    classes: int
    fibers: int
    split_fibers: int
    merged_classes: int

    @property
    def ok(self) -> bool:
        return self.split_fibers == 0 and self.merged_classes == 0 and self.classes == self.fibers


def bounded_congruence(n: int, max_len: int, slack: int = 3) -> CongruenceReport:
    """
    Union-find over all words of length <= max_len + slack, joining u x v ~ u y v for every relation
    x = y that keeps both sides within that bound. The classes met by words of length <= max_len and
    by the normal forms are compared against the fibers of eval_word on the same words; the slack lets
    a derivation pass through longer words.
    """
    alpha = alphabet(n)
    bound = max_len + slack
    # one character per letter keeps slicing and hashing cheap
    code = {x: chr(ord("a") + k) for k, x in enumerate(alpha)}
    decode = {c: x for x, c in code.items()}

    def enc(word: Sequence[Letter]) -> str:
        return "".join(code[x] for x in _strip_unit(word))

    words = [""]
    for length in range(1, bound + 1):
        words.extend("".join(t) for t in itertools.product(code.values(), repeat=length))
    index = {w: k for k, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    by_lhs: dict[str, list[str]] = {}
    for lhs, rhs in relation_pairs(n, bound):
        a, b = enc(lhs), enc(rhs)
        by_lhs.setdefault(a, []).append(b)
        by_lhs.setdefault(b, []).append(a)
    lengths = sorted({len(k) for k in by_lhs})

    for w, k in index.items():
        for L in lengths:
            for pos in range(len(w) - L + 1):
                for repl in by_lhs.get(w[pos:pos + L], ()):
                    kv = index.get(w[:pos] + repl + w[pos + L:])
                    if kv is not None:
                        a, b = find(k), find(kv)
                        if a != b:
                            parent[a] = b

    considered = {w for w in words if len(w) <= max_len}
    normal_forms = {enc(normal_form(a)) for a in enumerate_rn(n)}
    if any(len(w) > bound for w in normal_forms):
        raise ValueError(f"bound {bound} is shorter than the longest normal form")
    considered |= normal_forms

    fiber_roots: dict[PMElement, set[int]] = {}
    root_values: dict[int, set[PMElement]] = {}
    for w in considered:
        val, root = eval_word([decode[c] for c in w], n), find(index[w])
        fiber_roots.setdefault(val, set()).add(root)
        root_values.setdefault(root, set()).add(val)
    return CongruenceReport(
        n=n,
        max_len=max_len,
        slack=slack,
        words=len(words),
        classes=len(root_values),
        fibers=len(fiber_roots),
        split_fibers=sum(1 for r in fiber_roots.values() if len(r) > 1),
        merged_classes=sum(1 for v in root_values.values() if len(v) > 1),
    )
