# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: projective common-zero search and the mod-p^3
congruence sweep.  Semantics (enumeration order, primitivity handling)
must match delpezzo._scan_py exactly; the test suite compares them."""


def first_common_zero(int q, int r, int[:, ::1] add_tab, int[:, :, ::1] term_tabs):
    """Global enumeration index of the first projective point killing every
    form, or -1.  Points are enumerated stratum by stratum: last nonzero
    coordinate at position ell = 0..r-1 normalized to 1, earlier coordinates
    running lexicographically (v_0 most significant)."""
    cdef int nforms = term_tabs.shape[0]
    cdef long offset = 0, size, n
    cdef int ell, j, F, acc, ok
    cdef int v[32]
    if r > 32:
        raise ValueError("too many variables")
    for ell in range(r):
        size = 1
        for j in range(ell):
            size *= q
        for j in range(ell):
            v[j] = 0
        n = 0
        while n < size:
            ok = 1
            for F in range(nforms):
                acc = term_tabs[F, ell, 1]
                for j in range(ell):
                    acc = add_tab[acc, term_tabs[F, j, v[j]]]
                if acc != 0:
                    ok = 0
                    break
            if ok:
                return offset + n
            n += 1
            j = ell - 1
            while j >= 0:
                v[j] += 1
                if v[j] == q:
                    v[j] = 0
                    j -= 1
                else:
                    break
        offset += size
    return -1


def first_congruence_hit(int p, long long[::1] cube,
                         int[::1] first_all, int[::1] first_mixed):
    """First (t0, t1, t2) in lexicographic order mod p^3 such that some t3
    completes a primitive solution of

        t0^3 + p*t1^3 + p^2*t2^3 == a*t3^3   (mod p^3).

    The wrapper folds the (t2, t3) choices into first-hit tables indexed by
    the partial sum c01: first_all[v] is the least t2 completable by any t3,
    first_mixed[v] additionally requires a unit t2 or t3 (the case where t0
    and t1 are both divisible by p).  Returns (t0*P3 + t1)*P3 + t2, or -1
    when no primitive solution exists."""
    cdef long long P3 = cube.shape[0]
    cdef long long t0, t1, c0, c01
    cdef int t2
    for t0 in range(P3):
        c0 = cube[t0]
        for t1 in range(P3):
            c01 = (c0 + p * cube[t1]) % P3
            if (t0 % p != 0) or (t1 % p != 0):
                t2 = first_all[c01]
            else:
                t2 = first_mixed[c01]
            if t2 >= 0:
                return (t0 * P3 + t1) * P3 + t2
    return -1
