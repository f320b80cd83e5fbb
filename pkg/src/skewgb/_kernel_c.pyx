# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled normalization kernel: same algorithm and interface as the
pure-Python twin in ``_kernel_py.py`` (work-stack word rewriting with
first-descent resolution), with typed loops for the hot paths.
Coefficients stay exact ``Fraction`` objects.
"""

from fractions import Fraction

cdef object _ZERO = Fraction(0)
cdef object _ONE = Fraction(1)


def _expand_tokens(int m, xexp, yexp):
    cdef list toks = []
    cdef int j, i
    cdef long e, r
    j = 0
    for e in xexp:
        for r in range(e):
            toks.append(j)
        j += 1
    i = 0
    for e in yexp:
        for r in range(e):
            toks.append(m + i)
        i += 1
    return tuple(toks)


cdef class MulKernel:
    """Multiplication engine for one ring presentation (compiled twin)."""

    cdef public int m
    cdef public int n
    cdef list _q1corr
    cdef dict _q2corr
    cdef bint _q2_trivial
    cdef dict _yx_cache
    cdef dict _yy_cache

    def __init__(self, int m, int n, q1, q2):
        self.m = m
        self.n = n
        cdef int i, j
        self._q1corr = []
        for i in range(n):
            row = []
            for j in range(m):
                entry = q1[i][j] if i < len(q1) and j < len(q1[i]) else ()
                row.append(tuple((coeff, _expand_tokens(m, xe, ())) for xe, coeff in entry))
            self._q1corr.append(row)
        self._q2corr = {}
        for (i, j), entry in q2.items():
            if i <= j:
                continue
            self._q2corr[(i, j)] = tuple(
                (coeff, _expand_tokens(m, xe, ye)) for (xe, ye), coeff in entry
            )
        self._q2_trivial = not self._q2corr
        self._yx_cache = {}
        self._yy_cache = {}

    def normalize_word(self, word, coeff=_ONE):
        """Standard expression of a generator word as {(a, b): coeff}."""
        cdef int m = self.m
        cdef int n = self.n
        cdef dict out = {}
        cdef list stack = [(coeff, word)]
        cdef int p, k, wlen, g1, g2, t
        cdef tuple w, pre, post, swapped, toks
        cdef object c, acc, kappa
        cdef list a, b
        while stack:
            c, w = stack.pop()
            wlen = len(w)
            p = -1
            for k in range(wlen - 1):
                if <int> w[k] > <int> w[k + 1]:
                    p = k
                    break
            if p < 0:
                a = [0] * m
                b = [0] * n
                for k in range(wlen):
                    t = <int> w[k]
                    if t < m:
                        a[t] += 1
                    else:
                        b[t - m] += 1
                key = (tuple(a), tuple(b))
                acc = out.get(key, _ZERO) + c
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
                continue
            g1 = <int> w[p]
            g2 = <int> w[p + 1]
            pre = w[:p]
            post = w[p + 2:]
            swapped = pre + (g2, g1) + post
            stack.append((c, swapped))
            if g1 < m:
                continue  # x generators commute
            if g2 < m:
                corr = self._q1corr[g1 - m][g2]
            else:
                corr = self._q2corr.get((g1 - m, g2 - m), ())
            for kappa, toks in corr:
                stack.append((c * kappa, pre + toks + post))
        return out

    cdef dict _yx(self, tuple b, tuple c):
        key = (b, c)
        res = self._yx_cache.get(key)
        if res is None:
            res = self.normalize_word(
                _expand_tokens(self.m, (), b) + _expand_tokens(self.m, c, ())
            )
            self._yx_cache[key] = res
        return res

    cdef dict _yy(self, tuple d, tuple b2):
        key = (d, b2)
        res = self._yy_cache.get(key)
        if res is None:
            word = _expand_tokens(self.m, (), d) + _expand_tokens(self.m, (), b2)
            res = self.normalize_word(word)
            self._yy_cache[key] = res
        return res

    def mono_mul(self, tuple a, tuple b, tuple c, tuple d):
        """Standard expression of (x^a y^b) * (x^c y^d)."""
        cdef dict out = {}
        cdef dict mid = self._yx(b, c)
        cdef object acc, k1, k2
        cdef tuple c1, d1, c2, d2, key
        if self._q2_trivial:
            for (c1, d1), k1 in mid.items():
                key = (
                    tuple(ai + ci for ai, ci in zip(a, c1)),
                    tuple(di + ei for di, ei in zip(d1, d)),
                )
                acc = out.get(key, _ZERO) + k1
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
            return out
        for (c1, d1), k1 in mid.items():
            for (c2, d2), k2 in self._yy(d1, d).items():
                key = (
                    tuple(ai + ci + cj for ai, ci, cj in zip(a, c1, c2)),
                    d2,
                )
                acc = out.get(key, _ZERO) + k1 * k2
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return out

    def lmul_mono(self, coeff, tuple a, tuple b, dict terms):
        """Standard expression of coeff * x^a y^b * (terms)."""
        cdef dict out = {}
        cdef object ck, acc, k, k2
        cdef tuple c, d, key
        for (c, d), k in terms.items():
            ck = coeff * k
            for key, k2 in self.mono_mul(a, b, c, d).items():
                acc = out.get(key, _ZERO) + ck * k2
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return out

    def multiply(self, dict fterms, dict gterms):
        """Standard expression of the product of two standard expressions."""
        cdef dict out = {}
        cdef object kf, acc, k2
        cdef tuple a, b, key
        for (a, b), kf in fterms.items():
            for key, k2 in self.lmul_mono(kf, a, b, gterms).items():
                acc = out.get(key, _ZERO) + k2
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return out
