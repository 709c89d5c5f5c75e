"""
Write a schematic SVG for a braid PM-monoid word: one band per layer.
"""
import sys

from pmmonoid.diagram import render_svg
from pmmonoid.words import parse_word

text = sys.argv[1] if len(sys.argv) > 1 else "s1 e[1] s2^-1 s1"
out = sys.argv[2] if len(sys.argv) > 2 else "word.svg"
with open(out, "w") as fh:
    fh.write(render_svg(parse_word(text, 3, "braid").letters, 3))
print("wrote", out)
