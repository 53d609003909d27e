"""Pure-Python reference kernels.

These are the hot inner loops of the package: the five-term floating
recursion for the normalized face polynomials h_n(y), the order-2 jet
propagation of the face-polynomial recursion at y=1, and the brute-force
rotation-system census.  `cubicmaps._kernels` transparently swaps in the
compiled Cython twins when they are available; both implementations perform
the same floating-point operations in the same order, so their results are
bit-identical.

Convolution weights 1/C(n-2, k) are maintained multiplicatively along k
(ratio (k+1)/(n-2-k)).  The weight sequence decreases monotonically toward
the middle of the range, and terms come in symmetric pairs (k, n-2-k), so
once the running weight underflows to exactly 0.0 every remaining pair
contributes exactly 0.0 and the loop stops early.  Sums are accumulated with
Kahan compensation.
"""

from __future__ import annotations

import itertools
import math

__all__ = ["h_tail", "jet_tail", "census"]


def h_tail(
    y: float, n_max: int, seeds: list[float], j1: float, j2: float
) -> list[float]:
    """Values h_1..h_{n_max} at a fixed y; index n of the result is h_n.

    seeds holds h_1..h_6 (exact-polynomial evaluations); j1, j2 are the
    unnormalized degree-1 and degree-2 face-polynomial values at y.  The
    recursion step is valid for n >= 7.
    """
    h = [0.0] * (n_max + 1)
    for i in range(min(6, n_max)):
        h[i + 1] = seeds[i]
    for n in range(7, n_max + 1):
        m = n - 2
        dn = float(n)
        p = 3.0 * dn + 2.0
        q = 9.0 * (dn * dn - 1.0)
        c1 = 2.0 * p * y / (3.0 * dn * (dn + 1.0))
        c2 = (9.0 * dn * dn - 4.0) / q + 4.0 * p * y * y / (q * dn)
        c3 = 2.0 * p / (q * dn * (dn - 2.0))
        c4 = 4.0 * p / (q * dn * (dn - 2.0) * (dn - 3.0))
        c5 = p / (q * dn)
        t = c1 * math.pow((dn - 1.0) / dn, y) * h[n - 1]
        t += c2 * math.pow((dn - 2.0) / dn, y) * h[n - 2]
        t += c3 * math.pow((dn - 3.0) / dn, y) * (j1 * h[n - 3])
        t += c4 * math.pow((dn - 4.0) / dn, y) * (j2 * h[n - 4])
        s = 0.0
        comp = 0.0
        rb = 1.0 / m
        rb = rb * 2.0 / (m - 1)
        rb = rb * 3.0 / (m - 2)
        k = 3
        while 2 * k <= m:
            if rb == 0.0:
                break
            term = rb * math.pow((k * (m - k)) / dn, y) * (h[k] * h[m - k])
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
    return h


def jet_tail(
    n_max: int, seeds: list[tuple[float, float, float]]
) -> list[tuple[float, float, float]]:
    """Order-2 jets (J_n(1), J_n'(1), J_n''(1)) for n = 1..n_max.

    seeds holds the six exact jets for n = 1..6; the recursion (valid for
    n >= 7) is propagated with truncated Taylor (jet) arithmetic at y = 1.
    Index n of the result holds the jet of J_n; index 0 is unused.
    """
    v = [0.0] * (n_max + 1)
    d = [0.0] * (n_max + 1)
    s = [0.0] * (n_max + 1)
    for i in range(min(6, n_max)):
        v[i + 1], d[i + 1], s[i + 1] = seeds[i]
    j1v, j1d, j1s = seeds[0]
    j2v, j2d, j2s = seeds[1]
    for n in range(7, n_max + 1):
        m = n - 2
        dn = float(n)
        p = 3.0 * dn + 2.0
        q = 9.0 * (dn * dn - 1.0)
        c1 = 2.0 * p / (3.0 * dn * (dn + 1.0))
        fa = (9.0 * dn * dn - 4.0) / q
        fb = 4.0 * p / (q * dn)
        c3 = 2.0 * p / (q * dn * (dn - 2.0))
        c4 = 4.0 * p / (q * dn * (dn - 2.0) * (dn - 3.0))
        c5 = p / (q * dn)
        # t1 = c1 * (y-jet (1,1,0)) * J[n-1]
        av, ad, as_ = v[n - 1], d[n - 1], s[n - 1]
        tv = c1 * av
        td = c1 * (ad + av)
        ts = c1 * (as_ + 2.0 * ad)
        # t2 = (fa + fb*y^2)-jet (fa+fb, 2fb, 2fb) * J[n-2]
        bv, bd, bs = v[n - 2], d[n - 2], s[n - 2]
        gv = fa + fb
        tv += gv * bv
        td += gv * bd + (2.0 * fb) * bv
        ts += gv * bs + 2.0 * (2.0 * fb) * bd + (2.0 * fb) * bv
        # t3 = c3 * J1 * J[n-3]
        cv, cd, cs = v[n - 3], d[n - 3], s[n - 3]
        tv += c3 * (j1v * cv)
        td += c3 * (j1v * cd + j1d * cv)
        ts += c3 * (j1v * cs + 2.0 * j1d * cd + j1s * cv)
        # t4 = c4 * J2 * J[n-4]
        ev, ed, es = v[n - 4], d[n - 4], s[n - 4]
        tv += c4 * (j2v * ev)
        td += c4 * (j2v * ed + j2d * ev)
        ts += c4 * (j2v * es + 2.0 * j2d * ed + j2s * ev)
        # t5 = c5 * sum_k 1/C(m,k) * J[k]*J[m-k]
        sv = sd = ss = 0.0
        cv_ = cd_ = cs_ = 0.0
        rb = 1.0 / m
        rb = rb * 2.0 / (m - 1)
        rb = rb * 3.0 / (m - 2)
        k = 3
        while 2 * k <= m:
            if rb == 0.0:
                break
            w = rb if 2 * k == m else 2.0 * rb
            xv, xd, xs = v[k], d[k], s[k]
            yv, yd, ys = v[m - k], d[m - k], s[m - k]
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
    return list(zip(v, d, s))


# ---------------------------------------------------------------------------
# Brute-force rotation-system census
# ---------------------------------------------------------------------------


def _transitive(perm, n_darts: int) -> bool:
    # Connectivity of the dart graph generated by the rotation permutation
    # and the edge involution d -> d^1 (darts 2e, 2e+1 form edge e).
    seen = 1
    stack = [0]
    full = (1 << n_darts) - 1
    while stack:
        dart = stack.pop()
        e = perm[dart]
        b = 1 << e
        if not seen & b:
            seen |= b
            stack.append(e)
        e = dart ^ 1
        b = 1 << e
        if not seen & b:
            seen |= b
            stack.append(e)
    return seen == full


def _cycle_lengths_all(perm, n_darts: int, r: int) -> bool:
    seen = 0
    for start in range(n_darts):
        if seen >> start & 1:
            continue
        length = 0
        dart = start
        while not seen >> dart & 1:
            seen |= 1 << dart
            dart = perm[dart]
            length += 1
        if length != r:
            return False
    return True


def _census_filtered(n_darts: int, r: int) -> int:
    # Enumerate only permutations whose cycles all have length r, by
    # assembling the cycles directly: the least unused dart leads each cycle.
    perm = [0] * n_darts
    unused = list(range(n_darts))

    def build(remaining: int) -> int:
        if remaining == 0:
            return 1 if _transitive(perm, n_darts) else 0
        lead = unused[0]
        rest = unused[1:]
        total = 0
        for others in itertools.permutations(rest, r - 1):
            prev = lead
            for dart in others:
                perm[prev] = dart
                prev = dart
            perm[prev] = lead
            taken = set(others)
            unused[:] = [dart for dart in rest if dart not in taken]
            total += build(remaining - r)
            unused[:] = [lead] + rest
        return total

    return build(n_darts)


def census(n_darts: int, cycle_len: int = 0) -> int:
    """Count transitive rotation systems on n_darts darts.

    A rotation system is any permutation of the darts (its cycles are the
    vertices); cycle_len > 0 restricts every vertex to that degree.
    """
    if n_darts < 2 or n_darts % 2:
        raise ValueError("n_darts must be a positive even number")
    if cycle_len:
        if n_darts % cycle_len:
            return 0
        return _census_filtered(n_darts, cycle_len)
    count = 0
    for perm in itertools.permutations(range(n_darts)):
        if _transitive(perm, n_darts):
            count += 1
    return count
