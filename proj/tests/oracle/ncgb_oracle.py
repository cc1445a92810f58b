"""Independent oracle for universal envelopes of (anti-)Jordan quadruple
systems: builds defining relations from explicit matrix representations,
runs a deglex noncommutative Buchberger to a canonical reduced Groebner
basis, and counts normal words.  Exact Fraction arithmetic."""
from fractions import Fraction
from itertools import product


# ---------- noncommutative polynomials: dict word(tuple) -> Fraction ----------

def deglex_key(w):
    return (len(w), w)


def lm(f):
    return max(f, key=deglex_key)


def poly_scale(f, c):
    return {w: x * c for w, x in f.items()}


def poly_add(f, g, c=Fraction(1)):
    out = dict(f)
    for w, x in g.items():
        v = out.get(w, Fraction(0)) + c * x
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def poly_mul_word(u, f, v):
    return {u + w + v: c for w, c in f.items()}


def find_subword(w, m):
    """first (u,v) with w = u+m+v, else None"""
    n, k = len(w), len(m)
    for i in range(n - k + 1):
        if w[i:i + k] == m:
            return w[:i], w[i + k:]
    return None


def normal_form(f, G):
    """Full reduction of f modulo list G of monic polys."""
    f = dict(f)
    changed = True
    while changed:
        changed = False
        for w in sorted(f, key=deglex_key, reverse=True):
            if w not in f:
                continue
            for g in G:
                hit = find_subword(w, g[0])
                if hit is not None:
                    u, v = hit
                    c = f[w]
                    f = poly_add(f, poly_mul_word(u, g[1], v), -c)
                    changed = True
                    break
            if changed:
                break
    return f


def monic(f):
    return poly_scale(f, 1 / f[lm(f)])


def pack(f):
    """(leading monomial, poly) with poly monic."""
    f = monic(f)
    return (lm(f), f)


def self_reduce(polys):
    """Canonical inter-reduction: returns monic set, no LM divides any
    monomial of another element."""
    G = [dict(f) for f in polys if f]
    changed = True
    while changed:
        changed = False
        G = [monic(f) for f in G if f]
        # remove duplicates by content
        seen = {}
        for f in G:
            seen[tuple(sorted(f.items()))] = f
        G = list(seen.values())
        packed = [pack(f) for f in G]
        for i, f in enumerate(G):
            others = [packed[j] for j in range(len(G)) if j != i]
            r = normal_form(f, others)
            if r != f:
                G[i] = r
                G = [g for g in G if g]
                changed = True
                break
    return sorted([monic(f) for f in G if f], key=lambda f: deglex_key(lm(f)))


def overlaps(x, y):
    """proper overlaps w = x... = ...y: suffix of x equals prefix of y,
    overlap length 1..min(len)-1 -> list of (v_right_for_x, u_left_for_y)
    such that x + y[k:] = y-with-prefix ... returns tuples (a1, b2) with
    x*a1 = b2*y as words."""
    out = []
    for k in range(1, min(len(x), len(y))):
        if x[len(x) - k:] == y[:k]:
            out.append((y[k:], x[:len(x) - k]))
    return out


def groebner(initial, verbose=False, max_level=None):
    G = self_reduce(initial)
    packed = [pack(f) for f in G]
    pairs = [(i, j) for i in range(len(G)) for j in range(len(G))]
    compositions = 0
    while pairs:
        i, j = pairs.pop(0)
        if i >= len(packed) or j >= len(packed):
            continue
        (xi, fi), (xj, fj) = packed[i], packed[j]
        sps = []
        for (a1, b2) in overlaps(xi, xj):
            s = poly_add(poly_mul_word((), fi, a1),
                         poly_mul_word(b2, fj, ()), Fraction(-1))
            sps.append(s)
        if i != j:
            # containment: xj = u xi v
            hit = find_subword(xj, xi)
            if hit is not None:
                u, v = hit
                sps.append(poly_add(poly_mul_word(u, fi, v), fj, Fraction(-1)))
        for s in sps:
            r = normal_form(s, packed)
            if r:
                compositions += 1
                r = monic(r)
                packed.append(pack(r))
                n = len(packed)
                for t in range(n):
                    pairs.append((t, n - 1))
                    if t != n - 1:
                        pairs.append((n - 1, t))
    G = self_reduce([f for (_, f) in packed])
    return G, compositions


def normal_words_by_degree(G, ngens, maxdeg):
    lms = [g_lm for g_lm in (lm(f) for f in G)]
    counts = []
    words = {(): True}
    all_words = [[()]]
    for deg in range(1, maxdeg + 1):
        cur = []
        for w in all_words[-1]:
            for x in range(ngens):
                nw = w + (x,)
                # nw normal iff no LM is a subword; since w is normal,
                # only suffixes ending at the new letter need checking
                ok = True
                for m in lms:
                    k = len(m)
                    if k <= len(nw) and nw[len(nw) - k:] == m:
                        ok = False
                        break
                if ok:
                    cur.append(nw)
        all_words.append(cur)
        counts.append(len(cur))
        if not cur:
            break
    flat = [w for lev in all_words for w in lev]
    return counts, flat


# ---------- build relations from matrix representations ----------

def mat_mul(A, B):
    n = len(A)
    m = len(B[0])
    k = len(B)
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def quad_product(mats, idx, sign):
    """(anti-)tetrad of basis elements by index tuple: m1 m2 m3 m4 +- m4 m3 m2 m1"""
    a, b, c, d = (mats[i] for i in idx)
    P = mat_mul(mat_mul(mat_mul(a, b), c), d)
    Q = mat_mul(mat_mul(mat_mul(d, c), b), a)
    n = len(P)
    return [[P[i][j] + sign * Q[i][j] for j in range(n)] for i in range(n)]


def in_span(mats, M):
    """Solve M = sum c_i mats[i]; mats assumed linearly independent with
    disjoint-ish supports (true for all our bases); returns coeffs or None."""
    n = len(M)
    import itertools
    # general exact solve
    rows = []
    rhs = []
    for i in range(n):
        for j in range(n):
            rows.append([Fraction(m[i][j]) for m in mats])
            rhs.append(Fraction(M[i][j]))
    ncol = len(mats)
    # gaussian elimination
    aug = [row + [b] for row, b in zip(rows, rhs)]
    piv = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        aug[r] = [x / aug[r][c] for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                aug[i] = [x - aug[i][c] * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    # consistency
    for i in range(r, len(aug)):
        if aug[i][ncol]:
            return None
    sol = [Fraction(0)] * ncol
    for i, c in enumerate(piv):
        sol[c] = aug[i][ncol]
    return sol


def envelope_relations(mats, sign):
    """All relations w1w2w3w4 + sign*w4w3w2w1 - expansion_in_basis."""
    n = len(mats)
    rels = []
    for idx in product(range(n), repeat=4):
        M = quad_product(mats, idx, sign)
        coeffs = in_span(mats, M)
        assert coeffs is not None, ("not closed", idx)
        f = {idx: Fraction(1)}
        rev = tuple(reversed(idx))
        f = poly_add(f, {rev: Fraction(sign)})
        for i, c in enumerate(coeffs):
            if c:
                f = poly_add(f, {(i,): c}, Fraction(-1))
        f = {w: c for w, c in f.items() if c}
        if f:
            rels.append(f)
    return rels


def word_str(w, names):
    if not w:
        return "1"
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(names[w[i]] + (f"^{j-i}" if j - i > 1 else ""))
        i = j
    return "".join(out)


def poly_str(f, names):
    terms = sorted(f.items(), key=lambda t: deglex_key(t[0]), reverse=True)
    out = ""
    for w, c in terms:
        s = word_str(w, names)
        if c == 1:
            out += (" + " if out else "") + s
        elif c == -1:
            out += (" - " if out else "-") + s
        else:
            cs = str(c)
            if cs.startswith("-"):
                out += (f" - {cs[1:]} " if out else f"-{cs[1:]} ") + s
            else:
                out += (f" + {cs} " if out else f"{cs} ") + s
    return out
