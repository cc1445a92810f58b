"""Probe candidate normal-form procedures for the once-variables-increasing
reduction, against the published per-type counts 134,134,134,134,86,86,49,52."""
import itertools
from straighten import make_types, substitute, canonicalize, OP_TETRAD
from oracle_monomials import multideg_words, plain_words

mult = [6, 1, 1, 1, 1]
degree = 10
types = make_types(degree)
once = {1, 2, 3, 4}


def sort_once(word):
    """Sort once-variable letters into increasing order in place; return
    (sorted word, sign of the sorting permutation)."""
    pos = [i for i, x in enumerate(word) if x in once]
    vals = [word[i] for i in pos]
    inv = sum(1 for i in range(len(vals)) for j in range(i + 1, len(vals))
              if vals[i] > vals[j])
    w = list(word)
    for i, v in zip(pos, sorted(vals)):
        w[i] = v
    return tuple(w), (-1) ** inv


def key_counts(words):
    keys = set()
    for ti, t in enumerate(types):
        for w in words:
            c = canonicalize(substitute(t, w), OP_TETRAD, degree)
            assert c is not None
            sw, _ = sort_once(c[2])
            keys.add((c[1], sw))
    counts = [0] * 8
    for ti, _ in keys:
        counts[ti] += 1
    return counts


print("A) canonicalize then sort, all arrangements:   ", key_counts(plain_words(mult)))
print("B) canonicalize then sort, constrained inputs: ", key_counts(multideg_words(mult)))

own = set()
for ti, t in enumerate(types):
    for w in plain_words(mult):
        c = canonicalize(substitute(t, w), OP_TETRAD, degree)
        ones = [x for x in c[2] if x in once]
        if ones == sorted(ones):
            own.add((c[1], c[2]))
cc = [0] * 8
for ti, _ in own:
    cc[ti] += 1
print("C) canonical monomials whose word is increasing:", cc)
print("expected: [134, 134, 134, 134, 86, 86, 49, 52]")
