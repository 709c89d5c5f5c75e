import re

from pmmonoid.diagram import render_svg
from pmmonoid.words import parse_word


def svg(text, n, mode="braid"):
    return render_svg(parse_word(text, n, mode).letters, n)


def test_unit_word_has_straight_strands():
    doc = svg("", 3)
    assert doc.count('class="layer"') == 1
    lines = re.findall(r'<line class="strand" x1="(\S+)" y1="\S+" x2="(\S+)"', doc)
    assert len(lines) == 3 and all(a == b for a, b in lines)


def test_idempotent_gives_two_bands():
    doc = svg("e[2]", 3)
    bands = doc.split('<g class="layer"')[1:]
    assert len(bands) == 2
    assert bands[0].count('fill="black"') == 4 and bands[0].count('fill="white"') == 2
    assert bands[1].count('fill="black"') == 2 and bands[1].count('fill="white"') == 4


def test_crossing_over_under():
    over = svg("s1", 2)
    under = svg("s1^-1", 2)
    assert over.count('class="strand"') == 3 and under.count('class="strand"') == 3
    # s1: the strand starting at position 1 is drawn unbroken
    assert '<line class="strand" x1="20" y1="20" x2="60" y2="50"/>' in over
    assert '<line class="strand" x1="60" y1="20" x2="20" y2="50"/>' in under


def test_deterministic():
    assert svg("s1 e[1] s2^-1 s1", 3) == svg("s1 e[1] s2^-1 s1", 3)
