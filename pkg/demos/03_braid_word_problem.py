"""
Braid PM-monoid words are compared through their images as layered partial free-group isomorphisms.
"""
from pmmonoid.braid_pm import phi_word, shadow, words_equal
from pmmonoid.words import parse_word

n = 3


def w(text):
    return parse_word(text, n, "braid").letters


# %% The image of a generator and of an idempotent
print("phi(s1)   =", phi_word(w("s1"), n))
print("phi(e[1]) =", phi_word(w("e[1]"), n))

# %% Layers of a product: strands that leave a block are cut, and crossings with them vanish
print("phi(s1 e[1]) =", phi_word(w("s1 e[1]"), n))

# %% Deciding equality
for a, b in [("s1 s2 s1", "s2 s1 s2"), ("s1 s1^-1", ""), ("s1", "s1^-1"), ("s1^-1 e[2] s1", "e[2]"),
             ("e[2] s2 s1 s2 e[1]", "s2^-1 s1^-1 e[1] s1 s2 s2 s1 s2")]:
    print(f"{a!r:>22} vs {b!r:<36} equal: {words_equal(w(a), w(b), n)}")

# %% Forgetting the conjugators recovers the R_n value
print("shadow:", shadow(phi_word(w("s1^-1 e[1] s2"), n)))
