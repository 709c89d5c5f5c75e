"""
Reduced words in the free group F(x_1, ..., x_n) and substitution endomorphisms.

A letter is a pair (index, sign) with 1 <= index <= n and sign in {+1, -1}. Words are kept freely
reduced, so structural equality of FreeWord values is equality in the free group.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable, Sequence

Letter = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class FreeWord:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for (a, s), (b, t) in zip(self.letters, self.letters[1:]):
            if a == b and s == -t:
                raise ValueError(f"word is not freely reduced: {self.letters}")

    @classmethod
    def gen(cls, i: int, sign: int = 1) -> FreeWord:
        return cls(((i, sign),))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> FreeWord:
        """
        Parse the space separated form used for serialization.

        >>> str(FreeWord.parse("x1 x2 x2^-1 x3^-1"))
        'x1 x3^-1'
        """
        raw = []
        for token in text.split():
            sign = 1
            if token.endswith("^-1"):
                sign = -1
                token = token[:-3]
            if not (token.startswith("x") and token[1:].isdigit()):
                raise ValueError(f"bad free group letter {token!r}")
            raw.append((int(token[1:]), sign))
        return free_reduce(raw, n)

    def __str__(self):
        return " ".join(f"x{i}" if s == 1 else f"x{i}^-1" for i, s in self.letters)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return free_reduce(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def support(self) -> frozenset[int]:
        """Indices of the generators occurring in the word."""
        return frozenset(i for i, _ in self.letters)


IDENTITY = FreeWord()


def free_reduce(letters: Iterable[Letter], n: int | None = None) -> FreeWord:
    """
    Freely reduce a raw letter sequence with a single stack pass.

    >>> str(free_reduce([(1, 1), (2, 1), (2, -1), (1, 1)]))
    'x1 x1'
    >>> free_reduce([(1, 1), (1, -1)]) == IDENTITY
    True
    """
    stack: list[Letter] = []
    for i, s in letters:
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {s}")
        if i < 1 or (n is not None and i > n):
            raise ValueError(f"generator index {i} out of range 1..{n}")
        if stack and stack[-1] == (i, -s):
            stack.pop()
        else:
            stack.append((i, s))
    return FreeWord(tuple(stack))


def kill(w: FreeWord, keep: Iterable[int]) -> FreeWord:
    """Send every generator outside `keep` to the identity."""
    keep = frozenset(keep)
    return free_reduce(letter for letter in w.letters if letter[0] in keep)


@dataclasses.dataclass(frozen=True)
class FreeEndo:
    """An endomorphism of F_n, given by the images of x_1, ..., x_n (images[0] is the image of x_1)."""
    images: tuple[FreeWord, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, w: FreeWord) -> FreeWord:
        return endo_apply(self, w)

    def __mul__(self, other: FreeEndo) -> FreeEndo:
        return endo_compose(self, other)

    def image(self, i: int) -> FreeWord:
        return self.images[i - 1]


def identity_endo(n: int) -> FreeEndo:
    return FreeEndo(tuple(FreeWord.gen(i) for i in range(1, n + 1)))


def endo_apply(f: FreeEndo, w: FreeWord) -> FreeWord:
    out: list[Letter] = []
    for i, s in w.letters:
        img = f.images[i - 1]
        out.extend(img.letters if s == 1 else img.inverse().letters)
    return free_reduce(out)


def endo_compose(f: FreeEndo, g: FreeEndo) -> FreeEndo:
    """The endomorphism f o g, which applies g first."""
    if f.n != g.n:
        raise ValueError(f"rank mismatch: {f.n} vs {g.n}")
    return FreeEndo(tuple(endo_apply(f, img) for img in g.images))


def tau(k: int, n: int) -> FreeEndo:
    """
    Artin generator: x_k -> x_k^-1 x_{k+1} x_k, x_{k+1} -> x_k, other generators fixed.

    >>> str(tau(1, 2)(FreeWord.gen(1)))
    'x1^-1 x2 x1'
    """
    if not 1 <= k < n:
        raise ValueError(f"tau index {k} out of range 1..{n - 1}")
    images = list(identity_endo(n).images)
    images[k - 1] = free_reduce([(k, -1), (k + 1, 1), (k, 1)])
    images[k] = FreeWord.gen(k)
    return FreeEndo(tuple(images))


def tau_inverse(k: int, n: int) -> FreeEndo:
    """Explicit inverse of tau(k): x_k -> x_{k+1}, x_{k+1} -> x_{k+1} x_k x_{k+1}^-1."""
    if not 1 <= k < n:
        raise ValueError(f"tau index {k} out of range 1..{n - 1}")
    images = list(identity_endo(n).images)
    images[k - 1] = FreeWord.gen(k + 1)
    images[k] = free_reduce([(k + 1, 1), (k, 1), (k + 1, -1)])
    return FreeEndo(tuple(images))


def artin_action(letters: Sequence[tuple[int, int]], n: int) -> FreeEndo:
    """Compose tau_{i}^{sign} over a braid word; the leftmost letter is applied last."""
    gens = [tau(i, n) if s == 1 else tau_inverse(i, n) for i, s in letters]
    return functools.reduce(endo_compose, gens, identity_endo(n))


def descending_product(n: int) -> FreeWord:
    """The word x_n ... x_2 x_1."""
    return FreeWord(tuple((i, 1) for i in range(n, 0, -1)))
