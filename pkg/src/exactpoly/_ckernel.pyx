# cython: language_level=3, boundscheck=False
"""Compiled twin of :mod:`exactpoly._pykernel`.

``fm_step`` and ``reduce_rows`` are the same algorithms with typed loops.
``lift_many`` runs on machine integers and redoes a point with Python
integers whenever an intermediate value would overflow 64 bits.
"""

from fractions import Fraction
from math import gcd

from libc.stdlib cimport malloc, free

from . import _pykernel

cdef extern from *:
    """
    static inline int ep_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int ep_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    static inline int ep_sub(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    """
    int ep_mul(long long a, long long b, long long *r) nogil
    int ep_add(long long a, long long b, long long *r) nogil
    int ep_sub(long long a, long long b, long long *r) nogil

_ONE = Fraction(1)

prepare_rows = _pykernel.prepare_rows


cdef object _new_fraction(object num, object den):
    # num/den already in lowest terms with den > 0; skips Fraction's own checks
    f = object.__new__(Fraction)
    f._numerator = num
    f._denominator = den
    return f


def compose_certs(list items, list certs):
    cdef list out = []
    cdef dict nums, dens
    cdef tuple combo
    for combo, factor in items:
        nums = {}
        dens = {}
        fn = factor.numerator
        fd = factor.denominator
        for i, c in combo:
            cn = c.numerator * fn
            cd = c.denominator * fd
            for j, d in certs[i]:
                tn = cn * d.numerator
                td = cd * d.denominator
                if j in nums:
                    an = nums[j]
                    ad = dens[j]
                    if ad == td:
                        nums[j] = an + tn
                    else:
                        nums[j] = an * td + tn * ad
                        dens[j] = ad * td
                else:
                    nums[j] = tn
                    dens[j] = td
        row = []
        for j in sorted(nums):
            n = nums[j]
            d = dens[j]
            g = gcd(n, d)
            if g != 1:
                n //= g
                d //= g
            row.append((j, _new_fraction(n, d)))
        out.append(tuple(row))
    return out


cdef inline object _ratio(object n, object d):
    # n/d in lowest terms, d > 0
    if d < 0:
        n = -n
        d = -d
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return _new_fraction(n, d)


cdef list _scaled(tuple r, object mn, object md, Py_ssize_t k):
    """``(mn/md) * r`` without entry ``k``, as unreduced (num, den) pairs."""
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(len(r)):
        if i == k:
            continue
        x = r[i]
        out.append((x.numerator * mn, x.denominator * md))
    return out


def fm_step(list rows, list strict, Py_ssize_t k):
    cdef list pos = [], neg = [], zero = []
    cdef Py_ssize_t i, j, p, q, width
    cdef tuple r, rp, rq
    for i in range(len(rows)):
        c = (<tuple>rows[i])[k]
        if c > 0:
            pos.append(i)
        elif c < 0:
            neg.append(i)
        else:
            zero.append(i)

    cdef list new_rows = [], new_strict = [], combos = [], scaled_neg = []
    cdef list sp, sq, row
    for q in neg:
        rq = <tuple>rows[q]
        a = rq[k]
        # multiplier -1/a_qk > 0
        mq = _new_fraction(a.denominator, -a.numerator)
        scaled_neg.append((q, mq, _scaled(rq, a.denominator, -a.numerator, k)))
    for p in pos:
        rp = <tuple>rows[p]
        a = rp[k]
        mp = _new_fraction(a.denominator, a.numerator)
        sp = _scaled(rp, a.denominator, a.numerator, k)
        width = len(sp)
        sp_strict = strict[p]
        for q, mq, sq in scaled_neg:
            row = [None] * width
            for j in range(width):
                n1, d1 = sp[j]
                n2, d2 = sq[j]
                if d1 == d2:
                    row[j] = _ratio(n1 + n2, d1)
                else:
                    row[j] = _ratio(n1 * d2 + n2 * d1, d1 * d2)
            new_rows.append(tuple(row))
            new_strict.append(sp_strict or strict[q])
            combos.append(((p, mp), (q, mq)))
    for i in zero:
        r = <tuple>rows[i]
        new_rows.append(r[:k] + r[k + 1:])
        new_strict.append(strict[i])
        combos.append(((i, _ONE),))
    return pos, neg, zero, new_rows, new_strict, combos


cdef object _normalize(tuple r, bint s):
    cdef Py_ssize_t n = len(r) - 1, j
    for j in range(n):
        x = r[j]
        if x != 0:
            f = _ONE / abs(x)
            return (r if f == 1 else tuple([f * y for y in r])), f
    b = r[n]
    if b > 0 or (b == 0 and not s):
        return None
    if b == 0:
        return r, _ONE
    return r[:n] + (Fraction(-1),), _ONE / -b


cdef inline bint _dominates(b1, bint s1, b2, bint s2):
    return b1 < b2 or (b1 == b2 and (s1 or not s2))


def reduce_rows(list rows, list strict, supports=None):
    cdef dict groups = {}
    cdef list out = [], slots, entry, cur, beaten
    cdef Py_ssize_t i, at
    cdef bint s
    for i in range(len(rows)):
        s = strict[i]
        norm = _normalize(<tuple>rows[i], s)
        if norm is None:
            continue
        row, f = norm
        b = row[-1]
        key = tuple([(x.numerator, x.denominator) for x in row[:-1]])
        entry = [row, s, i, f]
        slots = groups.get(key)
        if slots is None:
            groups[key] = [len(out)]
            out.append(entry)
            continue
        if supports is None:
            at = slots[0]
            cur = out[at]
            if _dominates(b, s, cur[0][-1], cur[1]) and not (b == cur[0][-1] and s == cur[1]):
                out[at] = entry
            continue
        sup = supports[i]
        if any(
            _dominates(out[at][0][-1], out[at][1], b, s) and supports[out[at][2]] <= sup
            for at in slots
        ):
            continue
        beaten = [
            at for at in slots
            if _dominates(b, s, out[at][0][-1], out[at][1]) and sup <= supports[out[at][2]]
        ]
        if beaten:
            out[beaten[0]] = entry
            for at in beaten[1:]:
                out[at] = None
            groups[key] = [at for at in slots if at not in beaten[1:]]
        else:
            slots.append(len(out))
            out.append(entry)
    out = [o for o in out if o is not None]
    return (
        [o[0] for o in out],
        [o[1] for o in out],
        [(o[2], o[3]) for o in out],
    )


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline bint _less(long long n1, long long d1, long long n2, long long d2, int *ovf) nogil:
    # n1/d1 < n2/d2 with positive denominators
    cdef long long u, v
    if ep_mul(n1, d2, &u) or ep_mul(n2, d1, &v):
        ovf[0] = 1
        return False
    return u < v


cdef inline bint _equal(long long n1, long long d1, long long n2, long long d2, int *ovf) nogil:
    cdef long long u, v
    if ep_mul(n1, d2, &u) or ep_mul(n2, d1, &v):
        ovf[0] = 1
        return False
    return u == v


cdef class _Plan:
    cdef int nsteps
    cdef int *k
    cdef int *nrows
    cdef int *width      # columns of the source system plus one
    cdef Py_ssize_t *offset
    cdef long long *data
    cdef char *strict
    cdef Py_ssize_t *soffset
    cdef bint ok         # every entry fits in 64 bits

    def __cinit__(self, list plan):
        cdef Py_ssize_t total = 0, stotal = 0, pos = 0, spos = 0, i, j
        self.nsteps = len(plan)
        self.ok = True
        self.k = <int *>malloc(max(1, self.nsteps) * sizeof(int))
        self.nrows = <int *>malloc(max(1, self.nsteps) * sizeof(int))
        self.width = <int *>malloc(max(1, self.nsteps) * sizeof(int))
        self.offset = <Py_ssize_t *>malloc(max(1, self.nsteps) * sizeof(Py_ssize_t))
        self.soffset = <Py_ssize_t *>malloc(max(1, self.nsteps) * sizeof(Py_ssize_t))
        for k, rows, strict in plan:
            stotal += len(rows)
            for r in rows:
                total += len(r)
        self.data = <long long *>malloc(max(1, total) * sizeof(long long))
        self.strict = <char *>malloc(max(1, stotal))
        if not (self.k and self.nrows and self.width and self.offset and self.soffset
                and self.data and self.strict):
            raise MemoryError()
        for i, (k, rows, strict) in enumerate(plan):
            self.k[i] = k
            self.nrows[i] = len(rows)
            self.width[i] = len(rows[0]) if rows else 0
            self.offset[i] = pos
            self.soffset[i] = spos
            for r, s in zip(rows, strict):
                for x in r:
                    if -(1 << 62) < x < (1 << 62):
                        self.data[pos] = x
                    else:
                        self.ok = False
                        self.data[pos] = 0
                    pos += 1
                self.strict[spos] = 1 if s else 0
                spos += 1

    def __dealloc__(self):
        free(self.k)
        free(self.nrows)
        free(self.width)
        free(self.offset)
        free(self.soffset)
        free(self.data)
        free(self.strict)


cdef int _lift_c(_Plan plan, long long *X, Py_ssize_t n0, long long *Dp) nogil:
    """Lift in place; returns 1 on overflow. ``X`` has room for the full point."""
    cdef int ovf = 0, st, k, w
    cdef Py_ssize_t n = n0, i, j, jj, r
    cdef long long D = Dp[0], c, acc, t, num, den
    cdef long long lo_n = 0, lo_d = 1, hi_n = 0, hi_d = 1, vn, vd, g, scale
    cdef bint has_lo, has_hi, lo_s, hi_s, s
    cdef const long long *row
    for st in range(plan.nsteps):
        k = plan.k[st]
        w = plan.width[st]
        has_lo = has_hi = lo_s = hi_s = False
        for r in range(plan.nrows[st]):
            row = plan.data + plan.offset[st] + r * w
            s = plan.strict[plan.soffset[st] + r]
            c = row[k]
            if c == 0:
                continue
            if ep_mul(row[w - 1], D, &acc):
                return 1
            jj = 0
            for i in range(w - 1):
                if i == k:
                    continue
                if ep_mul(row[i], X[jj], &t) or ep_sub(acc, t, &acc):
                    return 1
                jj += 1
            if ep_mul(c, D, &den):
                return 1
            num = acc
            if c < 0:
                if ep_sub(0, num, &num) or ep_sub(0, den, &den):
                    return 1
                if (not has_lo or _less(lo_n, lo_d, num, den, &ovf)
                        or (s and _equal(num, den, lo_n, lo_d, &ovf))):
                    lo_n, lo_d, lo_s, has_lo = num, den, s, True
            else:
                if (not has_hi or _less(num, den, hi_n, hi_d, &ovf)
                        or (s and _equal(num, den, hi_n, hi_d, &ovf))):
                    hi_n, hi_d, hi_s, has_hi = num, den, s, True
            if ovf:
                return 1
        if has_lo:
            if not lo_s:
                vn, vd = lo_n, lo_d
            elif has_hi:
                if ep_mul(lo_n, hi_d, &vn) or ep_mul(hi_n, lo_d, &t) or ep_add(vn, t, &vn):
                    return 1
                if ep_mul(lo_d, hi_d, &vd) or ep_mul(vd, 2, &vd):
                    return 1
            else:
                vd = lo_d
                if ep_add(lo_n, lo_d, &vn):
                    return 1
        elif has_hi:
            vd = hi_d
            if hi_s:
                if ep_sub(hi_n, hi_d, &vn):
                    return 1
            else:
                vn = hi_n
        else:
            vn, vd = 0, 1
        g = _gcd(vn, vd)
        vn //= g
        vd //= g
        g = _gcd(D, vd)
        scale = vd // g
        for j in range(n):
            if ep_mul(X[j], scale, &X[j]):
                return 1
        j = n
        while j > k:
            X[j] = X[j - 1]
            j -= 1
        if ep_mul(vn, D // g, &X[k]) or ep_mul(D, scale, &D):
            return 1
        n += 1
    Dp[0] = D
    return 0


def lift_many(list plan, points):
    cdef _Plan cplan = _Plan(plan)
    cdef Py_ssize_t cap = 0, n, j
    cdef long long D
    cdef long long *buf = NULL
    cdef list out = []
    if not cplan.ok:
        return _pykernel.lift_many(plan, points)
    try:
        for X, Dobj in points:
            n = len(X)
            if n + cplan.nsteps > cap:
                cap = n + cplan.nsteps
                free(buf)
                buf = <long long *>malloc(max(1, cap) * sizeof(long long))
                if not buf:
                    raise MemoryError()
            fast = -(1 << 62) < Dobj < (1 << 62)
            if fast:
                for j in range(n):
                    x = X[j]
                    if not -(1 << 62) < x < (1 << 62):
                        fast = False
                        break
                    buf[j] = x
            if fast:
                D = Dobj
                if _lift_c(cplan, buf, n, &D) == 0:
                    out.append(([buf[j] for j in range(n + cplan.nsteps)], D))
                    continue
            out.append(_pykernel._lift_one(plan, list(X), Dobj))
    finally:
        free(buf)
    return out
