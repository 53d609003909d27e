# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: literal transliterations of ``_pyref``.

Every floating-point expression mirrors the pure-Python reference
operation-for-operation (and the build disables FP contraction), so the two
backends produce bit-identical results.
"""

from libc.math cimport pow
from libc.stdlib cimport free, malloc


def h_tail(double y, int n_max, seeds, double j1, double j2):
    """Values h_1..h_{n_max} at fixed y; see _pyref.h_tail."""
    cdef int n, m, k, i, nseed
    cdef double dn, p, q, c1, c2, c3, c4, c5, t, s, comp, rb, term, tk, sk
    cdef double *h = <double *> malloc((n_max + 1) * sizeof(double))
    if h == NULL:
        raise MemoryError()
    try:
        for n in range(n_max + 1):
            h[n] = 0.0
        nseed = 6 if n_max >= 6 else n_max
        for i in range(nseed):
            h[i + 1] = seeds[i]
        for n in range(7, n_max + 1):
            m = n - 2
            dn = <double> n
            p = 3.0 * dn + 2.0
            q = 9.0 * (dn * dn - 1.0)
            c1 = 2.0 * p * y / (3.0 * dn * (dn + 1.0))
            c2 = (9.0 * dn * dn - 4.0) / q + 4.0 * p * y * y / (q * dn)
            c3 = 2.0 * p / (q * dn * (dn - 2.0))
            c4 = 4.0 * p / (q * dn * (dn - 2.0) * (dn - 3.0))
            c5 = p / (q * dn)
            t = c1 * pow((dn - 1.0) / dn, y) * h[n - 1]
            t += c2 * pow((dn - 2.0) / dn, y) * h[n - 2]
            t += c3 * pow((dn - 3.0) / dn, y) * (j1 * h[n - 3])
            t += c4 * pow((dn - 4.0) / dn, y) * (j2 * h[n - 4])
            s = 0.0
            comp = 0.0
            rb = 1.0 / m
            rb = rb * 2.0 / (m - 1)
            rb = rb * 3.0 / (m - 2)
            k = 3
            while 2 * k <= m:
                if rb == 0.0:
                    break
                term = rb * pow((<double> (<long long> k * (m - k))) / dn, y) * (h[k] * h[m - k])
                if 2 * k != m:
                    term = 2.0 * term
                tk = term - comp
                sk = s + tk
                comp = (sk - s) - tk
                s = sk
                rb = rb * (k + 1) / (m - k)
                k += 1
            t += c5 * s
            h[n] = t
        return [h[n] for n in range(n_max + 1)]
    finally:
        free(h)


def jet_tail(int n_max, seeds):
    """Order-2 jets of J_n at y=1 for n = 1..n_max; see _pyref.jet_tail."""
    cdef int n, m, k, i, nseed
    cdef double dn, p, q, c1, fa, fb, c3, c4, c5
    cdef double tv, td, ts, av, ad, as_, bv, bd, bs, gv, cv, cd, cs, ev, ed, es
    cdef double sv, sd, ss, cv_, cd_, cs_, rb, w
    cdef double xv, xd, xs, yv, yd, ys, pv, pd, ps, tk, acc
    cdef double j1v, j1d, j1s, j2v, j2d, j2s
    cdef double *v = <double *> malloc(3 * (n_max + 1) * sizeof(double))
    if v == NULL:
        raise MemoryError()
    cdef double *d = v + (n_max + 1)
    cdef double *s = v + 2 * (n_max + 1)
    try:
        for n in range(n_max + 1):
            v[n] = 0.0
            d[n] = 0.0
            s[n] = 0.0
        nseed = 6 if n_max >= 6 else n_max
        for i in range(nseed):
            v[i + 1] = seeds[i][0]
            d[i + 1] = seeds[i][1]
            s[i + 1] = seeds[i][2]
        j1v = seeds[0][0]
        j1d = seeds[0][1]
        j1s = seeds[0][2]
        j2v = seeds[1][0]
        j2d = seeds[1][1]
        j2s = seeds[1][2]
        for n in range(7, n_max + 1):
            m = n - 2
            dn = <double> n
            p = 3.0 * dn + 2.0
            q = 9.0 * (dn * dn - 1.0)
            c1 = 2.0 * p / (3.0 * dn * (dn + 1.0))
            fa = (9.0 * dn * dn - 4.0) / q
            fb = 4.0 * p / (q * dn)
            c3 = 2.0 * p / (q * dn * (dn - 2.0))
            c4 = 4.0 * p / (q * dn * (dn - 2.0) * (dn - 3.0))
            c5 = p / (q * dn)
            av = v[n - 1]
            ad = d[n - 1]
            as_ = s[n - 1]
            tv = c1 * av
            td = c1 * (ad + av)
            ts = c1 * (as_ + 2.0 * ad)
            bv = v[n - 2]
            bd = d[n - 2]
            bs = s[n - 2]
            gv = fa + fb
            tv += gv * bv
            td += gv * bd + (2.0 * fb) * bv
            ts += gv * bs + 2.0 * (2.0 * fb) * bd + (2.0 * fb) * bv
            cv = v[n - 3]
            cd = d[n - 3]
            cs = s[n - 3]
            tv += c3 * (j1v * cv)
            td += c3 * (j1v * cd + j1d * cv)
            ts += c3 * (j1v * cs + 2.0 * j1d * cd + j1s * cv)
            ev = v[n - 4]
            ed = d[n - 4]
            es = s[n - 4]
            tv += c4 * (j2v * ev)
            td += c4 * (j2v * ed + j2d * ev)
            ts += c4 * (j2v * es + 2.0 * j2d * ed + j2s * ev)
            sv = 0.0
            sd = 0.0
            ss = 0.0
            cv_ = 0.0
            cd_ = 0.0
            cs_ = 0.0
            rb = 1.0 / m
            rb = rb * 2.0 / (m - 1)
            rb = rb * 3.0 / (m - 2)
            k = 3
            while 2 * k <= m:
                if rb == 0.0:
                    break
                if 2 * k == m:
                    w = rb
                else:
                    w = 2.0 * rb
                xv = v[k]
                xd = d[k]
                xs = s[k]
                yv = v[m - k]
                yd = d[m - k]
                ys = s[m - k]
                pv = w * (xv * yv)
                pd = w * (xv * yd + xd * yv)
                ps = w * (xv * ys + 2.0 * xd * yd + xs * yv)
                tk = pv - cv_
                acc = sv + tk
                cv_ = (acc - sv) - tk
                sv = acc
                tk = pd - cd_
                acc = sd + tk
                cd_ = (acc - sd) - tk
                sd = acc
                tk = ps - cs_
                acc = ss + tk
                cs_ = (acc - ss) - tk
                ss = acc
                rb = rb * (k + 1) / (m - k)
                k += 1
            v[n] = tv + c5 * sv
            d[n] = td + c5 * sd
            s[n] = ts + c5 * ss
        return [(v[n], d[n], s[n]) for n in range(n_max + 1)]
    finally:
        free(v)


cdef inline bint _transitive(int *perm, int n_darts) nogil:
    cdef unsigned int seen = 1
    cdef unsigned int full = (1u << n_darts) - 1
    cdef int stack[16]
    cdef int top = 0
    cdef int dart, e
    stack[0] = 0
    top = 1
    while top:
        top -= 1
        dart = stack[top]
        e = perm[dart]
        if not (seen >> e) & 1:
            seen |= 1u << e
            stack[top] = e
            top += 1
        e = dart ^ 1
        if not (seen >> e) & 1:
            seen |= 1u << e
            stack[top] = e
            top += 1
    return seen == full


cdef inline bint _cycles_all(int *perm, int n_darts, int r) nogil:
    cdef unsigned int seen = 0
    cdef int start, dart, length
    for start in range(n_darts):
        if (seen >> start) & 1:
            continue
        length = 0
        dart = start
        while not (seen >> dart) & 1:
            seen |= 1u << dart
            dart = perm[dart]
            length += 1
        if length != r:
            return False
    return True


def census(int n_darts, int cycle_len=0):
    """Count transitive rotation systems on n_darts darts (Heap's algorithm)."""
    if n_darts < 2 or n_darts % 2 or n_darts > 14:
        raise ValueError("n_darts must be a positive even number <= 14")
    cdef int a[16]
    cdef int c[16]
    cdef int i, j, tmp
    cdef long long count = 0
    cdef int r = cycle_len
    if r and n_darts % r:
        return 0
    with nogil:
        for i in range(n_darts):
            a[i] = i
            c[i] = 0
        if (r == 0 or _cycles_all(a, n_darts, r)) and _transitive(a, n_darts):
            count += 1
        i = 0
        while i < n_darts:
            if c[i] < i:
                if i % 2 == 0:
                    tmp = a[0]
                    a[0] = a[i]
                    a[i] = tmp
                else:
                    tmp = a[c[i]]
                    a[c[i]] = a[i]
                    a[i] = tmp
                if (r == 0 or _cycles_all(a, n_darts, r)) and _transitive(a, n_darts):
                    count += 1
                c[i] += 1
                i = 0
            else:
                c[i] = 0
                i += 1
    return count
