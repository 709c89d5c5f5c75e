"""
Generator letters and the textual word grammar shared by R_n words and braid words.

Grammar: whitespace separated tokens ``s<i>``, ``s<i>^-1`` (braid mode only), ``e[<k1>,<k2>,...]``
with strictly increasing cuts in 1..n-1, and ``e[]`` for the unit idempotent.
"""
from __future__ import annotations

import dataclasses
import re
from typing import Sequence, Union

from .pm_core import StandardComposition

MODES = ("rn", "braid")


@dataclasses.dataclass(frozen=True)
class S:
    i: int
    sign: int = 1

    def inverse(self) -> S:
        return S(self.i, -self.sign)

    def __str__(self):
        return f"s{self.i}" if self.sign == 1 else f"s{self.i}^-1"


@dataclasses.dataclass(frozen=True)
class E:
    cuts: tuple[int, ...] = ()

    def composition(self, n: int) -> StandardComposition:
        return StandardComposition(n, self.cuts)

    def __str__(self):
        return "e[" + ",".join(map(str, self.cuts)) + "]"


Letter = Union[S, E]
Word = tuple[Letter, ...]


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"{message} (token {token!r} at offset {position})")
        self.position = position
        self.token = token


@dataclasses.dataclass(frozen=True)
class ParsedWord:
    letters: Word
    spans: tuple[tuple[int, int], ...]
    mode: str


_TOKEN = re.compile(r"\S+")
_S = re.compile(r"s(\d+)(\^-1)?$")
_E = re.compile(r"e\[([0-9,\s]*)\]$")


def validate_letter(letter: Letter, n: int, mode: str = "braid"):
    if isinstance(letter, S):
        if not 1 <= letter.i < n:
            raise ValueError(f"s{letter.i} out of range for n={n}")
        if letter.sign not in (1, -1) or (mode == "rn" and letter.sign != 1):
            raise ValueError(f"inverse letters are not allowed in {mode} mode")
    elif isinstance(letter, E):
        StandardComposition(n, letter.cuts)
    else:
        raise TypeError(f"not a generator letter: {letter!r}")


def parse_word(text: str, n: int, mode: str = "rn") -> ParsedWord:
    """
    >>> [str(x) for x in parse_word("s1^-1 e[1,2] s2", 3, "braid").letters]
    ['s1^-1', 'e[1,2]', 's2']
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    letters, spans = [], []
    for m in _TOKEN.finditer(text):
        tok, pos = m.group(), m.start()
        if ms := _S.match(tok):
            if ms.group(2) and mode == "rn":
                raise WordSyntaxError("inverse letters are only allowed in braid mode", pos, tok)
            letter: Letter = S(int(ms.group(1)), -1 if ms.group(2) else 1)
            if not 1 <= letter.i < n:
                raise WordSyntaxError(f"generator index out of range 1..{n - 1}", pos, tok)
        elif me := _E.match(tok):
            body = me.group(1).strip()
            try:
                cuts = tuple(int(c) for c in body.split(",")) if body else ()
            except ValueError:
                raise WordSyntaxError("malformed cut list", pos, tok) from None
            if any(not 1 <= k < n for k in cuts):
                raise WordSyntaxError(f"cut out of range 1..{n - 1}", pos, tok)
            if any(a >= b for a, b in zip(cuts, cuts[1:])):
                raise WordSyntaxError("cuts must be strictly increasing", pos, tok)
            letter = E(cuts)
        else:
            raise WordSyntaxError("unknown token", pos, tok)
        letters.append(letter)
        spans.append((pos, m.end()))
    return ParsedWord(tuple(letters), tuple(spans), mode)


def format_word(word: Sequence[Letter]) -> str:
    return " ".join(str(x) for x in word)


def project(word: Sequence[Letter]) -> Word:
    """Forget signs: s_i^{+-1} -> s_i."""
    return tuple(S(x.i) if isinstance(x, S) else x for x in word)


def inverse_braid(word: Sequence[Letter]) -> Word:
    """Inverse of a word made of s letters only."""
    if any(isinstance(x, E) for x in word):
        raise ValueError("only braid letters can be inverted")
    return tuple(x.inverse() for x in reversed(word))
