"""Brute-force reference evaluator.

Works on plain nested lists of Fractions with explicit loops and shares no
code with the package.  Every function returns the first basis tuple (in
nested-loop order) at which the two sides differ, or None.
"""

from fractions import Fraction
from itertools import product


class Structure:
    def __init__(self, mul, unit, comul, counit, xi, antipode=None, convention="monoidal-hom"):
        self.n = len(unit)
        self.mul = [[[Fraction(v) for v in row] for row in plane] for plane in mul]
        self.unit = [Fraction(v) for v in unit]
        self.comul = [[[Fraction(v) for v in row] for row in plane] for plane in comul]
        self.counit = [Fraction(v) for v in counit]
        self.xi = [[Fraction(v) for v in row] for row in xi]
        self.S = None if antipode is None else [[Fraction(v) for v in row] for row in antipode]
        self.convention = convention
        self.xi_inv = inverse(self.xi)

    # vectors are lists of length n

    def e(self, i):
        return [Fraction(int(k == i)) for k in range(self.n)]

    def apply(self, m, v):
        return [sum((m[r][c] * v[c] for c in range(self.n)), Fraction(0)) for r in range(self.n)]

    def prod(self, u, v):
        out = [Fraction(0)] * self.n
        for i in range(self.n):
            if not u[i]:
                continue
            for j in range(self.n):
                if not v[j]:
                    continue
                c = u[i] * v[j]
                for k in range(self.n):
                    if self.mul[i][j][k]:
                        out[k] += c * self.mul[i][j][k]
        return out

    def eps(self, v):
        return sum((self.counit[i] * v[i] for i in range(self.n)), Fraction(0))

    def delta(self, v):
        """Coproduct as a dict {(j, k): coefficient}."""
        out = {}
        for i in range(self.n):
            if not v[i]:
                continue
            for j in range(self.n):
                for k in range(self.n):
                    if self.comul[i][j][k]:
                        out[j, k] = out.get((j, k), Fraction(0)) + v[i] * self.comul[i][j][k]
        return {key: c for key, c in out.items() if c}


def inverse(m):
    n = len(m)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _clean(d):
    return {k: v for k, v in d.items() if v}


def _add(d, key, c):
    d[key] = d.get(key, Fraction(0)) + c


def _first(tuples, lhs, rhs):
    for t in tuples:
        if lhs(*t) != rhs(*t):
            return t
    return None


def _to_dict(vec, prefix=()):
    return {prefix + (i,): c for i, c in enumerate(vec) if c}


# ---------------------------------------------------------------------------
# the identities

def hom_associativity(H):
    def lhs(a, b, c):
        return H.prod(H.apply(H.xi, H.e(a)), H.prod(H.e(b), H.e(c)))

    def rhs(a, b, c):
        return H.prod(H.prod(H.e(a), H.e(b)), H.apply(H.xi, H.e(c)))

    return _first(product(range(H.n), repeat=3), lhs, rhs)


def twist_multiplicative(H):
    return _first(product(range(H.n), repeat=2),
                  lambda a, b: H.apply(H.xi, H.prod(H.e(a), H.e(b))),
                  lambda a, b: H.prod(H.apply(H.xi, H.e(a)), H.apply(H.xi, H.e(b))))


def unit_right(H):
    return _first([(a,) for a in range(H.n)],
                  lambda a: H.prod(H.e(a), H.unit), lambda a: H.apply(H.xi, H.e(a)))


def unit_left(H):
    return _first([(a,) for a in range(H.n)],
                  lambda a: H.prod(H.unit, H.e(a)), lambda a: H.apply(H.xi, H.e(a)))


def hom_coassociativity(H):
    """``xi^k(c_1) (x) Delta(c_2) = Delta(c_1) (x) xi^k(c_2)``, k = -1 or +1 by convention."""
    X = H.xi_inv if H.convention == "monoidal-hom" else H.xi

    def lhs(c):
        out = {}
        for (i, j), v in H.delta(H.e(c)).items():
            left = H.apply(X, H.e(i))
            for (k, l), w in H.delta(H.e(j)).items():
                for p in range(H.n):
                    if left[p]:
                        _add(out, (p, k, l), v * w * left[p])
        return _clean(out)

    def rhs(c):
        out = {}
        for (i, j), v in H.delta(H.e(c)).items():
            right = H.apply(X, H.e(j))
            for (k, l), w in H.delta(H.e(i)).items():
                for p in range(H.n):
                    if right[p]:
                        _add(out, (k, l, p), v * w * right[p])
        return _clean(out)

    return _first([(c,) for c in range(H.n)], lhs, rhs)


def counit_left(H):
    X = H.xi_inv if H.convention == "monoidal-hom" else H.xi

    def lhs(c):
        out = [Fraction(0)] * H.n
        for (i, j), v in H.delta(H.e(c)).items():
            out[j] += v * H.counit[i]
        return out

    return _first([(c,) for c in range(H.n)], lhs, lambda c: H.apply(X, H.e(c)))


def comultiplication_multiplicative(H):
    def lhs(a, b):
        return H.delta(H.prod(H.e(a), H.e(b)))

    def rhs(a, b):
        out = {}
        for (i, j), v in H.delta(H.e(a)).items():
            for (k, l), w in H.delta(H.e(b)).items():
                x = H.prod(H.e(i), H.e(k))
                y = H.prod(H.e(j), H.e(l))
                for p in range(H.n):
                    for q in range(H.n):
                        if x[p] and y[q]:
                            _add(out, (p, q), v * w * x[p] * y[q])
        return _clean(out)

    return _first(product(range(H.n), repeat=2), lhs, rhs)


def weak_counit_left(H):
    """``eps((ab)c) = eps(a b_1) eps(b_2 c)``."""
    def lhs(a, b, c):
        return H.eps(H.prod(H.prod(H.e(a), H.e(b)), H.e(c)))

    def rhs(a, b, c):
        total = Fraction(0)
        for (i, j), v in H.delta(H.e(b)).items():
            total += v * H.eps(H.prod(H.e(a), H.e(i))) * H.eps(H.prod(H.e(j), H.e(c)))
        return total

    return _first(product(range(H.n), repeat=3), lhs, rhs)


def weak_unit_left(H):
    """``(Delta (x) id) Delta(1) = (Delta(1) (x) 1)(1 (x) Delta(1))`` as one tuple ``()``."""
    d1 = H.delta(H.unit)

    def lhs():
        out = {}
        for (i, j), v in d1.items():
            for (k, l), w in H.delta(H.e(i)).items():
                _add(out, (k, l, j), v * w)
        return _clean(out)

    def rhs():
        out = {}
        for (i, j), v in d1.items():
            for (k, l), w in d1.items():
                mid = H.prod(H.e(j), H.e(k))
                for p in range(H.n):
                    if mid[p]:
                        _add(out, (i, p, l), v * w * mid[p])
        return _clean(out)

    return _first([()], lhs, rhs)


def antipode_convolution_target(H):
    """``h_1 S(h_2) = eps(1_1 h) 1_2``."""
    d1 = H.delta(H.unit)

    def lhs(h):
        out = [Fraction(0)] * H.n
        for (i, j), v in H.delta(H.e(h)).items():
            x = H.prod(H.e(i), H.apply(H.S, H.e(j)))
            out = [o + v * t for o, t in zip(out, x)]
        return out

    def rhs(h):
        out = [Fraction(0)] * H.n
        for (i, j), v in d1.items():
            out[j] += v * H.eps(H.prod(H.e(i), H.e(h)))
        return out

    return _first([(h,) for h in range(H.n)], lhs, rhs)


# identity id in the package -> (oracle function, needs antipode)
IDENTITIES = {
    "hom-associativity": (hom_associativity, False),
    "twist-multiplicative": (twist_multiplicative, False),
    "unit-right": (unit_right, False),
    "unit-left": (unit_left, False),
    "hom-coassociativity": (hom_coassociativity, False),
    "counit-left": (counit_left, False),
    "comultiplication-multiplicative": (comultiplication_multiplicative, False),
    "weak-counit-left": (weak_counit_left, False),
    "weak-unit-left": (weak_unit_left, False),
    "antipode-convolution-target": (antipode_convolution_target, True),
}
