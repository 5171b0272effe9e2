"""Structure-constant presentations of weak monoidal Hom-bialgebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import multilinear as ml
from .linear import (
    ShapeError,
    Subspace,
    exact,
    identity,
    image_subspace,
    invert,
    mat_equal,
)

MONOIDAL_HOM = "monoidal-hom"
HOM = "hom"
CONVENTIONS = (MONOIDAL_HOM, HOM)


class DefinitionMismatch(ValueError):
    """The two printed forms of a counital map disagree on this input."""


class MissingAntipode(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PresentedBialgebra:
    """``(H, xi, m, 1, Delta, eps)`` with optional antipode, over the rationals.

    ``convention`` selects which coassociativity and counit laws apply:
    ``"monoidal-hom"`` (twist inverted in the coalgebra laws) or ``"hom"``
    (the untwisted-inverse variant produced by :func:`xi_square_twist`).
    """

    mul: np.ndarray
    unit: np.ndarray
    comul: np.ndarray
    counit: np.ndarray
    xi: np.ndarray
    antipode: np.ndarray | None = None
    convention: str = MONOIDAL_HOM
    name: str = ""

    def __post_init__(self):
        for attr in ("mul", "unit", "comul", "counit", "xi"):
            object.__setattr__(self, attr, exact(getattr(self, attr)))
        if self.antipode is not None:
            object.__setattr__(self, "antipode", exact(self.antipode))
        n = self.unit.shape[0] if self.unit.ndim == 1 else -1
        if n <= 0:
            raise ShapeError("dimension must be positive (the unit vector must exist)")
        if self.mul.shape != (n, n, n) or self.comul.shape != (n, n, n):
            raise ShapeError(f"structure tensors must be {n}x{n}x{n}")
        if self.counit.shape != (n,) or self.xi.shape != (n, n):
            raise ShapeError("counit/xi shapes do not match the dimension")
        if self.antipode is not None and self.antipode.shape != (n, n):
            raise ShapeError("antipode shape does not match the dimension")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        # raises SingularMap for a non-bijective twist or antipode
        self.xi_inv
        if self.antipode is not None:
            self.antipode_inv

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    @cached_property
    def xi_inv(self) -> np.ndarray:
        return invert(self.xi)

    @cached_property
    def antipode_inv(self) -> np.ndarray:
        if self.antipode is None:
            raise MissingAntipode("structure has no antipode")
        return invert(self.antipode)

    def xi_pow(self, k: int) -> np.ndarray:
        base = self.xi if k >= 0 else self.xi_inv
        out = identity(self.dim)
        for _ in range(abs(k)):
            out = base @ out
        return out

    @cached_property
    def delta_one(self) -> np.ndarray:
        """``Delta(1)`` as an ``n x n`` coefficient array."""
        return np.einsum("i,ijk->jk", self.unit, self.comul)

    def replace(self, **changes) -> "PresentedBialgebra":
        kw = dict(
            mul=self.mul,
            unit=self.unit,
            comul=self.comul,
            counit=self.counit,
            xi=self.xi,
            antipode=self.antipode,
            convention=self.convention,
            name=self.name,
        )
        kw.update(changes)
        return PresentedBialgebra(**kw)

    def same_as(self, other: "PresentedBialgebra") -> bool:
        """Entrywise equality of every structure constant."""
        if (self.antipode is None) != (other.antipode is None):
            return False
        pairs = [
            (self.mul, other.mul),
            (self.unit, other.unit),
            (self.comul, other.comul),
            (self.counit, other.counit),
            (self.xi, other.xi),
        ]
        if self.antipode is not None:
            pairs.append((self.antipode, other.antipode))
        return self.convention == other.convention and all(mat_equal(a, b) for a, b in pairs)

    def ops(self, vectors=None) -> "Ops":
        return Ops(self, vectors)


class Ops:
    """Expression builders over a fixed presentation.

    ``vectors`` optionally maps variable names to sample vectors (rows) used
    instead of the basis.
    """

    def __init__(self, H: PresentedBialgebra, vectors=None):
        self.H = H
        self.vectors = vectors or {}

    def var(self, name, dim=None):
        return ml.variable(name, dim or self.H.dim, self.vectors.get(name))

    def one(self):
        return ml.constant(self.H.unit)

    def delta_one(self):
        return ml.constant(self.H.delta_one)

    def mul(self, x, y, i=0, j=0):
        return ml.combine(x, y, [(i, j)], self.H.mul)

    def join(self, x, i, j):
        return x.join(self.H.mul, i, j)

    def delta(self, x, leg=0):
        return x.split(self.H.comul, leg)

    def eps(self, x, leg=0):
        return x.pair(self.H.counit, leg)

    def xi(self, x, k=1, leg=0):
        return x.map(self.H.xi_pow(k), leg)

    def S(self, x, leg=0):
        return x.map(self.H.antipode, leg)

    def Sinv(self, x, leg=0):
        return x.map(self.H.antipode_inv, leg)

    def f(self, matrix, x, leg=0):
        return x.map(matrix, leg)


def matrix_of(expr: ml.Multi) -> np.ndarray:
    """Matrix of a linear expression in one variable with one leg."""
    if expr.nvars != 1 or expr.nlegs != 1:
        raise ShapeError("expected one variable and one leg")
    return np.ascontiguousarray(expr.data.T)


@dataclass(frozen=True)
class CounitalMaps:
    eps_s: np.ndarray
    eps_t: np.ndarray
    eps_s_hat: np.ndarray
    eps_t_hat: np.ndarray
    Hs: Subspace = field(init=False)
    Ht: Subspace = field(init=False)
    Hs_hat: Subspace = field(init=False)
    Ht_hat: Subspace = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "Hs", image_subspace(self.eps_s))
        object.__setattr__(self, "Ht", image_subspace(self.eps_t))
        object.__setattr__(self, "Hs_hat", image_subspace(self.eps_s_hat))
        object.__setattr__(self, "Ht_hat", image_subspace(self.eps_t_hat))


def _counital_simplified(H: PresentedBialgebra):
    o = H.ops()
    h = o.var("h")
    # legs of Delta(1) are (1_1, 1_2)
    eps_s = o.eps(o.mul(h, o.delta_one(), 0, 1), 0)  # 1_1 eps(h 1_2)
    eps_t = o.eps(o.mul(o.delta_one(), h, 0, 0), 0)  # eps(1_1 h) 1_2
    eps_s_hat = o.eps(o.mul(o.delta_one(), h, 1, 0), 1)  # 1_1 eps(1_2 h)
    eps_t_hat = o.eps(o.mul(h, o.delta_one(), 0, 0), 0)  # eps(h 1_1) 1_2
    return [matrix_of(e) for e in (eps_s, eps_t, eps_s_hat, eps_t_hat)]


def _counital_twisted(H: PresentedBialgebra):
    o = H.ops()
    h = o.var("h")
    hm2 = o.xi(h, -2)
    one2 = o.delta_one()
    eps_s = o.xi(o.eps(o.mul(hm2, one2, 0, 1), 0), 2)  # xi^2(1_1) eps(xi^-2(h) 1_2)
    eps_t = o.xi(o.eps(o.mul(one2, hm2, 0, 0), 0), 2)  # eps(1_1 xi^-2(h)) xi^2(1_2)
    eps_s_hat = o.xi(o.eps(o.mul(one2, hm2, 1, 0), 1), 2)
    eps_t_hat = o.xi(o.eps(o.mul(hm2, one2, 0, 0), 0), 2)
    return [matrix_of(e) for e in (eps_s, eps_t, eps_s_hat, eps_t_hat)]


def counital_maps(H: PresentedBialgebra) -> CounitalMaps:
    """Source/target counital maps and their hatted variants.

    Both the plain formulas and the ``xi^2``-conjugated ones are evaluated;
    on a genuine weak monoidal Hom-bialgebra they coincide, so any
    difference raises :class:`DefinitionMismatch`.
    """
    plain = _counital_simplified(H)
    twisted = _counital_twisted(H)
    names = ("eps_s", "eps_t", "eps_s_hat", "eps_t_hat")
    for name, p, t in zip(names, plain, twisted):
        if not mat_equal(p, t):
            raise DefinitionMismatch(f"{name}: plain and xi^2-twisted formulas disagree")
    return CounitalMaps(*plain)
