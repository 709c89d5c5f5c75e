"""
Words in the generators s_i and e[...] and the relations that present R_n.
"""
from pmmonoid.presentation import bounded_congruence, eval_word, instantiate_relation, normal_form
from pmmonoid.words import format_word, parse_word

n = 3

# %% Evaluate a word and recover a normal form
word = parse_word("e[1] s1 s2 e[2]", n).letters
value = eval_word(word, n)
print(format_word(word), "->", value, "-> normal form", format_word(normal_form(value)))

# %% One instance of the mixed relation: e_k (middle) e_l = Ad(w)(e_q) (middle)
inst = instantiate_relation("re5", {"k": (2,), "middle": (2, 1, 2), "l": (1,)}, n)
print(format_word(inst.lhs), "=", format_word(inst.rhs), ":", eval_word(inst.lhs, n) == eval_word(inst.rhs, n))

# %% The same identity with conjugating word s1 s2 instead of s2 s1 does not hold
bad = parse_word("s1 s2 e[1] s2 s1 s2 s1 s2", n).letters
print("with s1 s2:", eval_word(bad, n), "vs", eval_word(inst.lhs, n))

# %% The relations generate exactly the kernel of evaluation on short words
print(bounded_congruence(2, 4))
