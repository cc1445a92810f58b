"""Oracle for the lambda = (6,1,1,1,1) special-identity pipeline (tetrad).

Verifies, all mod P = 101 via the Clifton representation:
  1. staging ranks 704 (type symmetries) -> 941 (+ lifted degree-7 generators),
     full identity-module dimension 942, so exactly one new generator;
  2. the mixed Young operator Ymix = (sum over S6 on the a-block) *
     (signed sum over S4 on the once-block) has rank 1 and 21 nonzero entries;
  3. the 809 x 5040 constrained matrix (rows = alternating-sum closures of
     canonical a^6bcde monomials) has rank 110, left kernel of dimension 699;
  4. stacking all 699 mixed-linearized kernel candidates onto the rank-941
     staging raises the rank to exactly 942 -- i.e. exactly one candidate
     survives confirmation, independent of kernel basis and ordering;
  5. the published 12-term a^6bcde tetrad identity lies in the kernel and its
     single linearized row alone raises 941 -> 942.
"""
import numpy as np

from clifton_oracle import RepCache, P
from expansion_ranks import reduced_matrix_a6bcde, rank_mod_p
from degree10_check import TET_GENS, type_symmetries, lift, blockrow
from part1_proto import Staging, lift_word
from figures_check import TETRAD_SPECIALS, type_index
from straighten import leaves

LAM = (6, 1, 1, 1, 1)
ID10 = tuple(range(10))


def young_block(rc, block, sign):
    """Iterative Young-subgroup (signed) symmetrizer over one position block."""
    d = rc.d
    S = np.eye(d, dtype=np.int64)
    for k in range(1, len(block)):
        T = np.eye(d, dtype=np.int64)
        for i in range(k):
            sig = list(ID10)
            sig[block[i]], sig[block[k]] = sig[block[k]], sig[block[i]]
            T = (T + sign * np.array(rc.R(tuple(sig)))) % P
        S = (T @ S) % P
    return S


def nullspace_mod_p(A, p=P):
    """Basis (rows) of {x : A @ x = 0 mod p} via vectorized RREF."""
    M = np.asarray(A, dtype=np.int64) % p
    m, n = M.shape
    piv = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = (M[r] * pow(int(M[r, c]), p - 2, p)) % p
        f = M[:, c].copy()
        f[r] = 0
        M = (M - np.outer(f, M[r])) % p
        piv.append(c)
        r += 1
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for c in free:
        v = np.zeros(n, dtype=np.int64)
        v[c] = 1
        for row, pc in zip(range(r), piv):
            v[pc] = (-M[row, c]) % p
        basis.append(v)
    return basis


def main():
    rc = RepCache(LAM)
    d = rc.d
    assert d == 126, d

    # --- staging seeded with type symmetries + lifted degree-7 generators ---
    syms = type_symmetries(+1)
    S = np.vstack([blockrow(i, rc, 8) for i in syms])
    lifts = []
    for g in TET_GENS:
        lifts += lift(g, +1)
    L = np.vstack([blockrow(i, rc, 8) for i in lifts])
    st = Staging(8 * d)
    st.add_matrix(S)
    symm = st.rank
    st.add_matrix(L)
    symmlift = st.rank
    print(f"staging: symm rank {symm} (expect 704), "
          f"symm+lift rank {symmlift} (expect 941)")
    assert (symm, symmlift) == (704, 941)

    # --- mixed Young operator: rank 1, 21 nonzero entries ---
    Ysym = young_block(rc, list(range(6)), +1)
    Yalt = young_block(rc, list(range(6, 10)), -1)
    Ymix = (Ysym @ Yalt) % P
    rk = rank_mod_p(Ymix)
    nnz = int(np.count_nonzero(Ymix))
    nzrows = int(np.count_nonzero(np.abs(Ymix).sum(axis=1)))
    print(f"Ymix: rank {rk} (expect 1), nonzeros {nnz} (expect 21), "
          f"nonzero rows {nzrows}")
    assert rk == 1 and nnz == 21
    u = Ymix[np.nonzero(np.abs(Ymix).sum(axis=1))[0][0]]

    # --- 809-row constrained matrix and its left kernel ---
    E, mons = reduced_matrix_a6bcde(alt_rows=True)
    assert E.shape == (809, 5040), E.shape
    rE = rank_mod_p(E)
    print(f"constrained matrix: {E.shape[0]}x{E.shape[1]} rank {rE} "
          f"(expect 110)")
    assert rE == 110
    ker = nullspace_mod_p(E.T % P)
    print(f"left kernel dimension: {len(ker)} (expect 699)")
    assert len(ker) == 699

    # --- per-monomial linearized rows:  u @ R(lift(word)) in the type block ---
    M809 = np.zeros((len(mons), 8 * d), dtype=np.int64)
    for i, (t, w) in enumerate(mons):
        row = (u @ np.array(rc.R(lift_word(w)))) % P
        M809[i, t * d:(t + 1) * d] = row

    # sanity: for one kernel vector the rank-1 shortcut row spans the same
    # space as the full Ymix @ blockrow matrix
    v0 = ker[0]
    terms = [(t, lift_word(w), int(c)) for (t, w), c in zip(mons, v0) if c]
    B = blockrow(terms, rc, 8)
    full = (Ymix @ B) % P
    short = (v0 @ M809) % P
    chk = Staging(8 * d)
    chk.add_row(short)
    assert rank_mod_p(full) <= 1
    assert chk.add_matrix(full) == 0, "shortcut row space mismatch"
    print("rank-1 shortcut row agrees with full mixed-symmetrized matrix")

    # --- stack all 699 candidates; count rank increments ---
    V = np.array(ker, dtype=np.int64)
    C = (V @ M809) % P
    new = 0
    for row in C:
        if st.add_row(row):
            new += 1
    print(f"after all candidates: rank {st.rank} (expect 942), "
          f"increments {new} (expect 1)")
    assert st.rank == 942 and new == 1

    # --- the published a^6bcde identity is the surviving generator ---
    name, permuted, figterms = TETRAD_SPECIALS[0]
    assert name == "t-a6bcde"
    midx = {mw: i for i, mw in enumerate(mons)}
    vfig = np.zeros(len(mons), dtype=np.int64)
    for c, tree in figterms:
        key = (type_index(tree), leaves(tree))
        assert key in midx, key
        vfig[midx[key]] += c
    assert not np.any((vfig @ E)), "published identity not in integer kernel"
    st2 = Staging(8 * d)
    st2.add_matrix(S)
    st2.add_matrix(L)
    assert st2.rank == 941
    grew = st2.add_row((vfig @ M809) % P)
    print(f"published identity row raises 941 -> {st2.rank} (expect 942)")
    assert grew and st2.rank == 942
    print("sixone4_check: ALL OK")


if __name__ == "__main__":
    main()
