"""Built-in fixtures and derived presentations (dual, twists)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .bialgebra import HOM, MONOIDAL_HOM, PresentedBialgebra
from .linear import exact, frac, identity, mat_equal, zeros

__all__ = [
    "FIXTURES",
    "ConditionFailed",
    "NotAMorphism",
    "UnknownFixture",
    "build_fixture",
    "example_2_10",
    "h2_remark",
    "groupoid_pair",
    "trivial_1d",
    "object_permutation",
    "dualize",
    "xi_square_twist",
    "xi_square_untwist",
    "alpha_twist",
]


class UnknownFixture(KeyError):
    pass


class ConditionFailed(ValueError):
    """The twisting condition fails; ``lhs``/``rhs`` hold both sides."""

    def __init__(self, message, lhs=None, rhs=None):
        super().__init__(message)
        self.lhs = lhs
        self.rhs = rhs


class NotAMorphism(ValueError):
    pass


# ---------------------------------------------------------------------------
# ten-dimensional example with parameter lambda

# "Lk" is lambda * x_k, "-Lk" its negative, "k" is x_k, "0" is zero
_TABLE_10 = """
1   2   3   L4  L5  6   7   8   L9  L10
2   2   3   L4  L5  7   7   8   L9  L10
3   3   2   -L5 -L4 8   8   7   -L10 -L9
L4  L4  L5  0   0   L9  L9  L10 0   0
L5  L5  L4  0   0   L10 L10 L9  0   0
6   7   8   L9  L10 6   7   8   L9  L10
7   7   8   L9  L10 7   7   8   L9  L10
8   8   7   -L10 -L9 8  8   7   -L10 -L9
L9  L9  L10 0   0   L9  L9  L10 0   0
L10 L10 L9  0   0   L10 L10 L9  0   0
"""

# (coefficient, left index, right index); entries flagged True carry a 1/lambda factor
_COMUL_10 = {
    1: (False, [(1, 1, 1), (-1, 1, 6), (-1, 6, 1), (2, 6, 6), (-1, 1, 2), (1, 1, 7), (1, 6, 2),
                (-2, 6, 7), (-1, 2, 1), (1, 2, 6), (1, 7, 1), (-2, 7, 6), (2, 2, 2), (-2, 2, 7),
                (-2, 7, 2), (4, 7, 7)]),
    2: (False, [(1, 2, 2), (-1, 2, 7), (-1, 7, 2), (2, 7, 7)]),
    3: (False, [(1, 3, 3), (-1, 3, 8), (-1, 8, 3), (2, 8, 8)]),
    4: (True, [(1, 3, 4), (-1, 3, 9), (-1, 8, 4), (2, 8, 9), (1, 4, 2), (-1, 4, 7), (-1, 9, 2),
               (2, 9, 7)]),
    5: (True, [(1, 2, 5), (-1, 2, 10), (-1, 7, 5), (2, 7, 10), (1, 5, 3), (-1, 5, 8), (-1, 10, 3),
               (2, 10, 8)]),
    6: (False, [(1, 6, 6), (-1, 6, 7), (-1, 7, 6), (2, 7, 7)]),
    7: (False, [(1, 7, 7)]),
    8: (False, [(1, 8, 8)]),
    9: (True, [(1, 8, 9), (1, 9, 7)]),
    10: (True, [(1, 7, 10), (1, 10, 8)]),
}

# the x_5 line as typeset, which repeats x_10 (x) x_8 where x_10 (x) x_3 is expected
_COMUL_X5_AS_TYPESET = [(1, 2, 5), (-1, 2, 10), (-1, 7, 5), (2, 7, 10), (1, 5, 3), (-1, 5, 8),
                        (-1, 10, 8), (2, 10, 8)]

_COUNIT_10 = [4, 2, 2, 0, 0, 2, 1, 1, 0, 0]


def example_2_10(lam=2, xi="diagonal", x5_line="corrected") -> PresentedBialgebra:
    """The ten-dimensional weak monoidal Hom-bialgebra with parameter ``lam``.

    ``xi`` picks the twist: ``"diagonal"`` is diag(1,1,1,l,l,1,1,1,l,l);
    ``"printed"`` adds the stray off-diagonal entry read as
    ``xi(x_8) = x_3 + x_8``; ``"printed-columns"`` reads it as
    ``xi(x_3) = x_3 + x_8``.  Neither printed reading is unital.
    """
    lam = frac(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    n = 10
    mul = zeros(n, n, n)
    rows = [r.split() for r in _TABLE_10.strip().splitlines()]
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if cell == "0":
                continue
            sign = -1 if cell.startswith("-") else 1
            cell = cell.lstrip("-")
            coef = lam if cell.startswith("L") else Fraction(1)
            k = int(cell.lstrip("L")) - 1
            mul[i, j, k] = sign * coef
    comul = zeros(n, n, n)
    for i, (scaled, terms) in _COMUL_10.items():
        if i == 5 and x5_line == "typeset":
            terms = _COMUL_X5_AS_TYPESET
        elif i == 5 and x5_line != "corrected":
            raise ValueError(f"unknown x5_line {x5_line!r}")
        factor = 1 / lam if scaled else Fraction(1)
        for c, j, k in terms:
            comul[i - 1, j - 1, k - 1] += c * factor
    unit = zeros(n)
    unit[0] = Fraction(1)
    diag = [1, 1, 1, lam, lam, 1, 1, 1, lam, lam]
    X = zeros(n, n)
    for i, d in enumerate(diag):
        X[i, i] = frac(d)
    if xi == "printed":
        X[2, 7] = Fraction(1)  # column x_8 gains x_3
    elif xi == "printed-columns":
        X[7, 2] = Fraction(1)  # column x_3 gains x_8
    elif xi != "diagonal":
        raise ValueError(f"unknown xi variant {xi!r}")
    return PresentedBialgebra(mul, unit, comul, exact(_COUNIT_10), X,
                              name=f"example-2.10(lambda={lam})")


def h2_remark() -> PresentedBialgebra:
    """Two-dimensional weak bialgebra on ``{I, E}`` with identity twist."""
    mul = zeros(2, 2, 2)
    mul[0, 0, 0] = 1
    mul[0, 1, 1] = mul[1, 0, 1] = mul[1, 1, 1] = 1
    comul = zeros(2, 2, 2)
    # Delta(I) = (I-E)(x)(I-E) + E(x)E
    comul[0, 0, 0], comul[0, 0, 1], comul[0, 1, 0], comul[0, 1, 1] = 1, -1, -1, 2
    comul[1, 1, 1] = 1
    unit = exact([1, 0])
    return PresentedBialgebra(exact(mul), unit, exact(comul), exact([2, 1]), identity(2),
                              name="h2-remark")


def groupoid_pair(n: int) -> PresentedBialgebra:
    """Algebra of the pair groupoid on ``n`` objects; basis ``E_ij`` at index ``i*n + j``."""
    if n < 1:
        raise ValueError("need at least one object")
    d = n * n
    mul = zeros(d, d, d)
    comul = zeros(d, d, d)
    S = zeros(d, d)
    unit = zeros(d)
    for i in range(n):
        unit[i * n + i] = Fraction(1)
        for j in range(n):
            a = i * n + j
            comul[a, a, a] = Fraction(1)
            S[j * n + i, a] = Fraction(1)
            for l in range(n):
                mul[a, j * n + l, i * n + l] = Fraction(1)
    counit = exact([1] * d)
    return PresentedBialgebra(mul, unit, comul, counit, identity(d), antipode=S,
                              name=f"groupoid-pair-{n}")


def object_permutation(n: int, perm) -> np.ndarray:
    """Matrix of ``E_ij -> E_{perm(i) perm(j)}`` on the pair groupoid algebra."""
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of range({n})")
    F = zeros(n * n, n * n)
    for i in range(n):
        for j in range(n):
            F[perm[i] * n + perm[j], i * n + j] = Fraction(1)
    return F


def trivial_1d() -> PresentedBialgebra:
    one = exact([[[1]]])
    return PresentedBialgebra(one, exact([1]), one, exact([1]), identity(1),
                              antipode=identity(1), name="trivial-1d")


FIXTURES = ("example-2.10", "h2-remark", "groupoid-pair-n", "trivial-1d")


def build_fixture(name: str, lam=None, n=None, **kw) -> PresentedBialgebra:
    """Build a named fixture.

    ``groupoid-pair-n`` accepts the object count either as ``n`` or in the
    name itself (``groupoid-pair-3``).
    """
    if name == "example-2.10":
        return example_2_10(2 if lam is None else lam, **kw)
    if name == "h2-remark":
        return h2_remark()
    if name == "trivial-1d":
        return trivial_1d()
    if name.startswith("groupoid-pair"):
        suffix = name[len("groupoid-pair"):].lstrip("-")
        if suffix and suffix != "n":
            n = int(suffix)
        if n is None:
            raise ValueError("groupoid-pair needs n")
        return groupoid_pair(int(n))
    raise UnknownFixture(name)


# ---------------------------------------------------------------------------
# derived structures

def dualize(H: PresentedBialgebra) -> PresentedBialgebra:
    """Presentation of the linear dual in the dual basis.

    The twist of ``f`` is ``f o xi^{-1}``, whose matrix is the transpose of
    ``xi^{-1}``.
    """
    mul = np.transpose(H.comul, (1, 2, 0)).copy()
    comul = np.transpose(H.mul, (2, 0, 1)).copy()
    S = None if H.antipode is None else H.antipode.T.copy()
    name = f"dual({H.name})" if H.name else ""
    if H.name.startswith("dual(") and H.name.endswith(")"):
        name = H.name[5:-1]
    return PresentedBialgebra(mul, H.counit.copy(), comul, H.unit.copy(), H.xi_inv.T.copy(),
                              antipode=S, convention=H.convention, name=name)


def _precompose_comul(H: PresentedBialgebra, f: np.ndarray) -> np.ndarray:
    # (Delta o f)[i] = Delta(f(x_i))
    return np.einsum("ai,ajk->ijk", f, H.comul)


def xi_square_twist(H: PresentedBialgebra) -> PresentedBialgebra:
    """Replace the comultiplication by ``Delta o xi^2``; result uses the Hom convention."""
    comul = _precompose_comul(H, H.xi_pow(2))
    return H.replace(comul=comul, convention=HOM, name=f"twist({H.name})" if H.name else "")


def xi_square_untwist(B: PresentedBialgebra) -> PresentedBialgebra:
    """Replace the comultiplication by ``Delta o xi^-2``; result uses the monoidal-Hom convention."""
    comul = _precompose_comul(B, B.xi_pow(-2))
    name = B.name
    if name.startswith("twist(") and name.endswith(")"):
        name = name[6:-1]
    elif name:
        name = f"untwist({name})"
    return B.replace(comul=comul, convention=MONOIDAL_HOM, name=name)


def alpha_twist(B: PresentedBialgebra, a: np.ndarray) -> PresentedBialgebra:
    """Twist a weak bialgebra (identity twist) by an endomorphism ``a``.

    The result has multiplication ``a o m``, comultiplication ``Delta o a``
    and twist ``a``.  It exists exactly when ``a(1_1) (x) 1_2 = Delta(1)``;
    otherwise :class:`ConditionFailed` carries both sides.
    """
    from .checks import check_morphism_raw

    a = exact(a)
    n = B.dim
    if a.shape != (n, n):
        raise NotAMorphism(f"map has shape {a.shape}, expected {(n, n)}")
    if not mat_equal(B.xi, identity(n)):
        raise ValueError("alpha_twist needs an untwisted weak bialgebra (xi = id)")
    failures = [r for r in check_morphism_raw(B, B, a, with_twist=False) if not r.passed]
    if failures:
        raise NotAMorphism(f"map fails {failures[0].identity_id}")
    o = B.ops()
    lhs = o.delta_one().map(a, 0).data
    rhs = B.delta_one
    if not mat_equal(lhs, rhs):
        raise ConditionFailed("a(1_1) (x) 1_2 differs from Delta(1)", lhs=lhs, rhs=rhs)
    mul = np.einsum("ijk,lk->ijl", B.mul, a)
    comul = _precompose_comul(B, a)
    return PresentedBialgebra(mul, B.unit, comul, B.counit, a, antipode=None, convention=HOM,
                              name=f"alpha-twist({B.name})" if B.name else "")
