"""
Braid PM-monoid elements as layered partial automorphisms of the free group.

A layer sends x_l to w_l^-1 x_{t(l)} w_l for each l in its domain, where t is injective and w_l is a
reduced word in the generators of the layer's image. An element is an ordered sequence of layers
whose domains partition {1..n} and whose images partition {1..n}.

Because the centralizer of x_a in a free group is <x_a>, the conjugator w_l is only determined up to
left multiplication by powers of x_{t(l)}. Conjugators are stored with every leading x_{t(l)}^{+-1}
stripped, which makes structural equality decide equality of the underlying partial maps.
"""
from __future__ import annotations

import dataclasses
import functools
import random
from typing import Iterable, Mapping, Sequence

from .freegroup import FreeWord, IDENTITY, artin_action, descending_product, free_reduce, kill
from .pm_core import OrderedSetPartition, Permutation, PMElement, StandardComposition, standard_compositions
from .presentation import (RelationError, RelationInstance, ad_word, check_re5_side_condition, compute_q,
                           eval_word, i_star, perm_to_word)
from .words import E, Letter, S, Word, inverse_braid, project, validate_letter

BRAID_SCHEMAS = ("re1-", "re2-", "re3-", "re4-", "re5-")


def canonical_conjugator(w: FreeWord, target: int) -> FreeWord:
    """Strip leading x_target^{+-1} letters, which commute with x_target and do not change the conjugate."""
    letters = w.letters
    k = 0
    while k < len(letters) and letters[k][0] == target:
        k += 1
    return FreeWord(letters[k:])


@dataclasses.dataclass(frozen=True)
class AutLayer:
    """Partial isomorphism; the three tuples are aligned and sorted by domain index."""
    domain: tuple[int, ...]
    target: tuple[int, ...]
    conjugator: tuple[FreeWord, ...]

    @classmethod
    def of(cls, data: Mapping[int, tuple[int, FreeWord]]) -> AutLayer:
        """Build from {l: (target, conjugator)}, canonicalizing the conjugators."""
        dom = tuple(sorted(data))
        return cls(dom, tuple(data[l][0] for l in dom),
                   tuple(canonical_conjugator(data[l][1], data[l][0]) for l in dom))

    @classmethod
    def identity(cls, block: Iterable[int]) -> AutLayer:
        dom = tuple(sorted(block))
        return cls(dom, dom, (IDENTITY,) * len(dom))

    def image(self) -> frozenset[int]:
        return frozenset(self.target)

    def items(self):
        return zip(self.domain, self.target, self.conjugator)

    def lookup(self) -> dict[int, tuple[int, FreeWord]]:
        return {l: (t, c) for l, t, c in self.items()}

    def apply(self, w: FreeWord) -> FreeWord:
        """Extend to the whole free group by sending generators outside the domain to the identity."""
        table = self.lookup()
        out = []
        for i, s in w.letters:
            if i not in table:
                continue
            t, c = table[i]
            img = c.inverse().letters + ((t, s),) + c.letters
            out.extend(img)
        return free_reduce(out)

    def restrict(self, keep: frozenset[int]) -> AutLayer:
        """Drop strands outside `keep` and kill their image generators in the remaining conjugators."""
        kept_images = frozenset(t for l, t in zip(self.domain, self.target) if l in keep)
        return AutLayer.of({l: (t, kill(c, kept_images)) for l, t, c in self.items() if l in keep})

    def validate(self, n: int):
        if not self.domain:
            raise ValueError("empty layer")
        if list(self.domain) != sorted(set(self.domain)):
            raise ValueError(f"domain must be strictly increasing: {self.domain}")
        if len(set(self.target)) != len(self.target):
            raise ValueError(f"target is not injective: {self.target}")
        if any(not 1 <= x <= n for x in self.domain + self.target):
            raise ValueError(f"index out of range 1..{n}")
        img = self.image()
        for l, t, c in self.items():
            if not c.support() <= img:
                raise ValueError(f"conjugator of {l} uses letters outside the image block {sorted(img)}: {c}")
            if c != canonical_conjugator(c, t):
                raise ValueError(f"conjugator of {l} is not canonical: {c}")

    def to_json(self) -> dict:
        return {"domain": list(self.domain),
                "target": {str(l): t for l, t in zip(self.domain, self.target)},
                "conjugator": {str(l): str(c) for l, c in zip(self.domain, self.conjugator)}}

    @classmethod
    def from_json(cls, data: Mapping, n: int | None = None) -> AutLayer:
        return cls.of({int(l): (int(data["target"][str(l)]), FreeWord.parse(data["conjugator"].get(str(l), ""), n))
                       for l in data["domain"]})


@dataclasses.dataclass(frozen=True)
class LayeredAut:
    n: int
    layers: tuple[AutLayer, ...]

    def __post_init__(self):
        self.validate()

    @classmethod
    def unit(cls, n: int) -> LayeredAut:
        return cls(n, (AutLayer.identity(range(1, n + 1)),))

    def validate(self):
        seen_dom: set[int] = set()
        seen_img: set[int] = set()
        for layer in self.layers:
            layer.validate(self.n)
            if seen_dom & set(layer.domain):
                raise ValueError("layer domains overlap")
            if seen_img & layer.image():
                raise ValueError("layer images overlap")
            seen_dom |= set(layer.domain)
            seen_img |= layer.image()
        full = set(range(1, self.n + 1))
        if seen_dom != full or seen_img != full:
            raise ValueError("layer domains and images must each cover 1..n")

    def __mul__(self, other: LayeredAut) -> LayeredAut:
        return layered_product(self, other)

    def to_json(self) -> dict:
        return {"n": self.n, "layers": [layer.to_json() for layer in self.layers]}

    @classmethod
    def from_json(cls, data: Mapping) -> LayeredAut:
        n = data["n"]
        return cls(n, tuple(AutLayer.from_json(x, n) for x in data["layers"]))

    def __str__(self):
        parts = []
        for layer in self.layers:
            maps = ", ".join(f"x{l}->{'(' + str(c) + ')^-1 ' if c else ''}x{t}{' (' + str(c) + ')' if c else ''}"
                             for l, t, c in layer.items())
            parts.append("{" + maps + "}")
        return " | ".join(parts)


def phi_gen(letter: Letter, n: int) -> LayeredAut:
    """
    Image of a single generator.

    >>> print(phi_gen(S(1), 2))
    {x1->(x1)^-1 x2 (x1), x2->x1}
    """
    validate_letter(letter, n, "braid")
    if isinstance(letter, E):
        return LayeredAut(n, tuple(AutLayer.identity(b) for b in letter.composition(n).partition().blocks))
    i = letter.i
    table = {l: (l, IDENTITY) for l in range(1, n + 1)}
    if letter.sign == 1:
        table[i] = (i + 1, FreeWord.gen(i))
        table[i + 1] = (i, IDENTITY)
    else:
        table[i] = (i + 1, IDENTITY)
        table[i + 1] = (i, FreeWord.gen(i + 1, -1))
    return LayeredAut(n, (AutLayer.of(table),))


def _compose_layers(f: AutLayer, g: AutLayer) -> AutLayer | None:
    """f o g on the strands of g that land in f's domain, or None if there are none."""
    dom_f = frozenset(f.domain)
    survivors = frozenset(l for l, t in zip(g.domain, g.target) if t in dom_f)
    if not survivors:
        return None
    g_r = g.restrict(survivors)
    f_r = f.restrict(g_r.image())
    f_table = f_r.lookup()
    out = {}
    for l, t, c in g_r.items():
        ft, fc = f_table[t]
        out[l] = (ft, fc * f_r.apply(c))
    return AutLayer.of(out)


def layered_product(F: LayeredAut, G: LayeredAut) -> LayeredAut:
    """
    Product F*G (G acts first): layers indexed by (i, j) with G's index j outer and F's index i inner.

    >>> layered_product(phi_gen(S(1), 3), phi_gen(S(1, -1), 3)) == LayeredAut.unit(3)
    True
    """
    if F.n != G.n:
        raise ValueError(f"size mismatch: {F.n} vs {G.n}")
    layers = []
    for g in G.layers:
        for f in F.layers:
            h = _compose_layers(f, g)
            if h is not None:
                layers.append(h)
    return LayeredAut(F.n, tuple(layers))


def phi_word(word: Sequence[Letter], n: int) -> LayeredAut:
    return functools.reduce(layered_product, (phi_gen(x, n) for x in word), LayeredAut.unit(n))


def words_equal(w1: Sequence[Letter], w2: Sequence[Letter], n: int) -> bool:
    return phi_word(w1, n) == phi_word(w2, n)


def shadow(F: LayeredAut) -> PMElement:
    images = [0] * F.n
    for layer in F.layers:
        for l, t in zip(layer.domain, layer.target):
            images[l - 1] = t
    return PMElement(Permutation(tuple(images)), OrderedSetPartition(tuple(frozenset(x.domain) for x in F.layers)))


def _braid_letters(word: Sequence[Letter]) -> list[tuple[int, int]]:
    if any(isinstance(x, E) for x in word):
        raise ValueError("word contains an idempotent letter")
    return [(x.i, x.sign) for x in word]


def artin_total_word_check(word: Sequence[Letter], n: int) -> bool:
    """
    True iff the Artin action of the braid word fixes x_n ... x_2 x_1.

    >>> artin_total_word_check((S(1),), 2)
    True
    """
    return artin_action(_braid_letters(word), n)(descending_product(n)) == descending_product(n)


# Relations ------------------------------------------------------------------------------------------

def _cut_set(comp: StandardComposition) -> frozenset[int]:
    return frozenset(comp.cuts)


def check_re4_side_condition(b1: Sequence[Letter], e: E, b2: Sequence[Letter], n: int):
    """
    The braid b1 b2 must be trivial on every block of e, read as: the permutation of b2 keeps each
    block in place, and on each block I the Artin action of b1 b2, with the generators outside I
    killed, fixes every x_l for l in I.
    """
    blocks = e.composition(n).partition().blocks
    p2 = eval_word(project(b2), n).perm
    alpha = artin_action(_braid_letters(tuple(b1) + tuple(b2)), n)
    for block in blocks:
        if {p2(l) for l in block} != set(block):
            raise RelationError(f"the right braid moves block {sorted(block)}")
        for l in block:
            if kill(alpha.image(l), block) != FreeWord.gen(l):
                raise RelationError(f"the braid is not trivial on block {sorted(block)} (strand {l})")


def instantiate_braid_relation(schema: str, params: Mapping, n: int) -> RelationInstance:
    """
    params per schema: re1- {i, sign}; re2- {i, j}; re3- {i};
    re4- {left, cuts, right} with left/right braid words; re5- {k, middle, l, lift}, middle a braid
    word and lift an optional braid word mapping to the standardizing permutation.
    """
    if schema == "re1-":
        i = params["i"]
        if not 1 <= i < n:
            raise RelationError(f"index {i} out of range 1..{n - 1}")
        sign = params.get("sign", 1)
        return RelationInstance(schema, (S(i, sign), S(i, -sign)), (), dict(params))
    if schema in ("re2-", "re3-"):
        from .presentation import instantiate_relation
        base = instantiate_relation(schema[:-1], params, n)
        return RelationInstance(schema, base.lhs, base.rhs, dict(params))
    if schema == "re4-":
        b1, b2 = tuple(params["left"]), tuple(params["right"])
        for x in b1 + b2:
            if not isinstance(x, S):
                raise RelationError("re4- braids may only contain s letters")
            validate_letter(x, n, "braid")
        e = E(tuple(params["cuts"]))
        try:
            e.composition(n)
        except ValueError as exc:
            raise RelationError(str(exc)) from None
        check_re4_side_condition(b1, e, b2, n)
        return RelationInstance(schema, b1 + (e,) + b2, (e,), dict(params))
    if schema == "re5-":
        k = StandardComposition(n, tuple(params["k"]))
        l = StandardComposition(n, tuple(params["l"]))
        middle = tuple(params["middle"])
        for x in middle:
            validate_letter(x, n, "braid")
            if not isinstance(x, S):
                raise RelationError("re5- middle word may only contain s letters")
        check_re5_side_condition(k, middle)
        q, w = compute_q(k, project(middle), l)
        lift = params.get("lift")
        if lift is None:
            lift = perm_to_word(w)
        elif eval_word(project(lift), n).perm != w:
            raise RelationError("lift does not map to the standardizing permutation")
        lhs = (E(k.cuts), *middle, E(l.cuts))
        rhs = ad_word(tuple(lift), E(q.cuts), braid=True) + middle
        return RelationInstance(schema, lhs, rhs, dict(params))
    raise RelationError(f"unknown schema {schema!r}")


def relation_soundness(schema: str, params: Mapping, n: int) -> bool:
    inst = instantiate_braid_relation(schema, params, n)
    return words_equal(inst.lhs, inst.rhs, n)


def all_braid_instances(schema: str, n: int):
    """Every instance of re1-, re2-, re3- at size n."""
    if schema == "re1-":
        for i in range(1, n):
            for sign in (1, -1):
                yield instantiate_braid_relation(schema, {"i": i, "sign": sign}, n)
    elif schema == "re2-":
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) >= 2:
                    yield instantiate_braid_relation(schema, {"i": i, "j": j}, n)
    elif schema == "re3-":
        for i in range(1, n - 1):
            yield instantiate_braid_relation(schema, {"i": i}, n)
    else:
        raise ValueError(f"{schema} has no finite instance list")


def random_braid_word(n: int, length: int, rng: random.Random, letters: Sequence[int] | None = None) -> Word:
    pool = list(range(1, n)) if letters is None else list(letters)
    if not pool:
        return ()
    return tuple(S(rng.choice(pool), rng.choice((1, -1))) for _ in range(length))


def random_word(n: int, length: int, rng: random.Random, e_rate: float = 0.3) -> Word:
    comps = standard_compositions(n)
    out = []
    for _ in range(length):
        if n == 1 or rng.random() < e_rate:
            out.append(E(rng.choice(comps).cuts))
        else:
            out.append(S(rng.randrange(1, n), rng.choice((1, -1))))
    return tuple(out)


def sample_re4(n: int, rng: random.Random, max_len: int = 4) -> RelationInstance:
    """
    Build b1 e b2 = e with b2 = c1 a and b1 = a^-1 c2, where a is a block-internal braid and c1, c2 are
    products of full twists across cuts (each optionally conjugated by a block-internal braid); such
    twists die once the other block is killed.
    """
    comp = rng.choice(standard_compositions(n))
    cuts = _cut_set(comp)
    internal = [i for i in range(1, n) if i not in cuts]

    def twists() -> Word:
        out: list[Letter] = []
        for _ in range(rng.randint(0, 2)):
            if not cuts:
                break
            k = rng.choice(sorted(cuts))
            sign = rng.choice((1, -1))
            u = random_braid_word(n, rng.randint(0, 2), rng, internal)
            out.extend(inverse_braid(u) + (S(k, sign), S(k, sign)) + u)
        return tuple(out)

    a = random_braid_word(n, rng.randint(0, max_len), rng, internal)
    b2 = twists() + a
    b1 = inverse_braid(a) + twists()
    if rng.random() < 0.3:
        u = random_braid_word(n, rng.randint(1, 2), rng)
        pos = rng.randint(0, len(b1))
        b1 = b1[:pos] + u + inverse_braid(u) + b1[pos:]
    return instantiate_braid_relation("re4-", {"left": b1, "cuts": comp.cuts, "right": b2}, n)


def sample_re5(n: int, rng: random.Random, max_middle: int = 5, lift: str = "positive") -> RelationInstance:
    """Random (re5-) instance; `lift` chooses the signs of the standardizer lift: positive, negative or random."""
    comps = standard_compositions(n)
    while True:
        k, l = rng.choice(comps), rng.choice(comps)
        middle = random_braid_word(n, rng.randint(0, max_middle), rng)
        if middle and i_star(middle[0].i, k) is not None:
            continue
        _, w = compute_q(k, project(middle), l)
        base = perm_to_word(w)
        if lift == "positive":
            chosen = base
        elif lift == "negative":
            chosen = tuple(S(x.i, -1) for x in base)
        elif lift == "random":
            chosen = tuple(S(x.i, rng.choice((1, -1))) for x in base)
        else:
            raise ValueError(f"unknown lift {lift!r}")
        return instantiate_braid_relation(
            "re5-", {"k": k.cuts, "middle": middle, "l": l.cuts, "lift": chosen}, n)
