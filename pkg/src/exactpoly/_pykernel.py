"""Hot loops of the elimination: pairing, reduction and back-substitution.

Rows are tuples ``(a_1, ..., a_n, b)`` of Fractions meaning ``a . x <= b``
(``<`` where the matching ``strict`` flag is set). This module is the
pure-Python implementation; ``_ckernel`` compiles the same functions and
:mod:`exactpoly.kernel` picks one at import time.
"""

from fractions import Fraction
from math import gcd

_ONE = Fraction(1)


def fm_step(rows, strict, k):
    """Eliminate column ``k``.

    Returns ``(pos, neg, zero, new_rows, new_strict, combos)``. Pair rows come
    first in ``(p, q)`` order with ``p`` over ``pos`` and ``q`` over ``neg``,
    then the ``zero`` rows. ``combos[i]`` gives the source rows and
    multipliers producing new row ``i``.
    """
    pos, neg, zero = [], [], []
    for i, r in enumerate(rows):
        c = r[k]
        if c > 0:
            pos.append(i)
        elif c < 0:
            neg.append(i)
        else:
            zero.append(i)

    new_rows, new_strict, combos = [], [], []
    scaled_neg = []
    for q in neg:
        rq = rows[q]
        mq = -_ONE / rq[k]
        scaled_neg.append((q, mq, [mq * x for x in rq]))
    for p in pos:
        rp = rows[p]
        mp = _ONE / rp[k]
        sp = [mp * x for x in rp]
        del sp[k]
        sp_strict = strict[p]
        for q, mq, sq in scaled_neg:
            row = list(sp)
            j = 0
            for i, x in enumerate(sq):
                if i == k:
                    continue
                row[j] += x
                j += 1
            new_rows.append(tuple(row))
            new_strict.append(sp_strict or strict[q])
            combos.append(((p, mp), (q, mq)))
    for r in zero:
        rr = rows[r]
        new_rows.append(rr[:k] + rr[k + 1:])
        new_strict.append(strict[r])
        combos.append(((r, _ONE),))
    return pos, neg, zero, new_rows, new_strict, combos


def _normalize(r, s):
    """Scaled copy of ``r`` and the factor, or None when the row always holds."""
    n = len(r) - 1
    for j in range(n):
        if r[j] != 0:
            f = _ONE / abs(r[j])
            return (r if f == 1 else tuple(f * x for x in r)), f
    b = r[n]
    if b > 0 or (b == 0 and not s):
        return None
    if b == 0:
        return r, _ONE
    return r[:n] + (Fraction(-1),), _ONE / -b


def _dominates(b1, s1, b2, s2):
    """Same normal: does ``<= b1`` (strict if s1) imply ``<= b2`` (strict if s2)?"""
    return b1 < b2 or (b1 == b2 and (s1 or not s2))


def reduce_rows(rows, strict, supports=None):
    """Normalize, deduplicate and drop rows that hold everywhere.

    Returns ``(rows, strict, kept)`` where ``kept[i] = (source_index, factor)``
    and output row ``i`` equals ``factor`` times source row ``source_index``.

    Without ``supports`` one row per normalized normal survives, the tightest,
    at the position of the first occurrence. With ``supports`` (one frozenset
    per row) a row is only dropped in favour of a row that dominates it and
    whose support is a subset of its own.
    """
    groups = {}
    out = []
    for i, r in enumerate(rows):
        s = strict[i]
        norm = _normalize(r, s)
        if norm is None:
            continue
        row, f = norm
        b = row[-1]
        # integer pairs hash much faster than Fractions
        key = tuple((x.numerator, x.denominator) for x in row[:-1])
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


def compose_certs(items, certs):
    """Certificates over the original rows for combinations of current rows.

    ``items`` holds ``(combo, factor)`` pairs; ``combo`` lists
    ``(row, multiplier)`` over rows whose certificates are ``certs``. Each
    result is sorted by original row and scaled by ``factor``.
    """
    out = []
    for combo, factor in items:
        acc = {}
        for i, c in combo:
            c = c * factor
            for j, d in certs[i]:
                acc[j] = acc.get(j, 0) + c * d
        out.append(tuple(sorted(acc.items())))
    return out


def prepare_rows(rows):
    """Integer copies of Fraction rows, each scaled by a positive factor."""
    out = []
    for r in rows:
        den = 1
        for x in r:
            d = x.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        out.append(tuple(int(x.numerator * (den // x.denominator)) for x in r))
    return out


def _lift_one(plan, X, D):
    # X holds integer numerators over the common positive denominator D
    for k, rows, strict in plan:
        lo_n = lo_d = hi_n = hi_d = None
        lo_s = hi_s = False
        for r, s in zip(rows, strict):
            c = r[k]
            if c == 0:
                continue
            acc = r[-1] * D
            j = 0
            for i in range(len(r) - 1):
                if i == k:
                    continue
                acc -= r[i] * X[j]
                j += 1
            # bound = acc / (c * D)
            num, den = (acc, c * D) if c > 0 else (-acc, -c * D)
            if c > 0:
                if hi_n is None or num * hi_d < hi_n * den or (num * hi_d == hi_n * den and s):
                    hi_n, hi_d, hi_s = num, den, s
            else:
                if lo_n is None or num * lo_d > lo_n * den or (num * lo_d == lo_n * den and s):
                    lo_n, lo_d, lo_s = num, den, s
        if lo_n is not None:
            if not lo_s:
                vn, vd = lo_n, lo_d
            elif hi_n is not None:
                vn, vd = lo_n * hi_d + hi_n * lo_d, 2 * lo_d * hi_d
            else:
                vn, vd = lo_n + lo_d, lo_d
        elif hi_n is not None:
            vn, vd = (hi_n - hi_d, hi_d) if hi_s else (hi_n, hi_d)
        else:
            vn, vd = 0, 1
        g = gcd(vn, vd)
        vn //= g
        vd //= g
        g = gcd(D, vd)
        scale_x = vd // g
        new_d = D * scale_x
        X = [x * scale_x for x in X]
        X.insert(k, vn * (D // g))
        D = new_d
    return X, D


def lift_many(plan, points):
    """Back-substitute integer points through ``plan``.

    ``plan`` lists ``(k, int_rows, strict)`` in application order; ``points``
    holds ``(X, D)`` pairs meaning ``X / D``. Returns ``(X, D)`` pairs.
    """
    return [_lift_one(plan, list(X), D) for X, D in points]
