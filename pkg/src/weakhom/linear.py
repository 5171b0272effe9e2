"""Exact rational vectors, matrices and order-3 tensors.

Everything is a numpy ``object`` array whose entries are
:class:`fractions.Fraction`.  Linear maps are stored column-wise: column ``j``
holds the image of the ``j``-th basis vector, so ``f(v) == F @ v``.

Multiplication tensors use ``m[i, j, k]`` = coefficient of ``x_k`` in
``x_i x_j``; comultiplication tensors use ``d[i, j, k]`` = coefficient of
``x_j (x) x_k`` in ``Delta(x_i)``.  Elements of a tensor square are flattened
row-major, index ``j*n + k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

__all__ = [
    "ShapeError",
    "SingularMap",
    "frac",
    "fmt",
    "exact",
    "zeros",
    "identity",
    "basis_vector",
    "kron",
    "contract_mul",
    "apply_delta",
    "rref",
    "Subspace",
    "image_subspace",
    "invert",
    "mat_equal",
]


class ShapeError(ValueError):
    pass


class SingularMap(ArithmeticError):
    pass


def frac(x) -> Fraction:
    """Parse ``x`` into a Fraction; accepts ints, Fractions and ``"p/q"`` strings."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (bool, np.bool_)):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        s = x.strip()
        num, sep, den = s.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"bad rational literal {x!r}") from None
        if q == 0:
            raise ValueError(f"bad rational literal {x!r} (zero denominator)")
        return Fraction(p, q)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    raise TypeError(f"cannot interpret {x!r} as a rational")


def fmt(x) -> str:
    """Canonical lowest-terms string ``"p/q"`` (or ``"p"``)."""
    x = frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def exact(a) -> np.ndarray:
    """Copy ``a`` into an object array of Fractions."""
    arr = np.asarray(a, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = frac(v)
    return out


def zeros(*shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def basis_vector(n: int, i: int) -> np.ndarray:
    v = zeros(n)
    v[i] = Fraction(1)
    return v


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices, matching the row-major flattening."""
    return np.kron(a, b)


def contract_mul(m: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Evaluate the bilinear product ``sum_ij a_i b_j m[i, j, :]``."""
    if m.ndim != 3 or a.shape != (m.shape[0],) or b.shape != (m.shape[1],):
        raise ShapeError(f"cannot contract {m.shape} with {a.shape}, {b.shape}")
    return np.einsum("i,j,ijk->k", a, b, m, optimize=True)


def apply_delta(d: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Coordinates of ``Delta(c)`` in the flattened tensor-square basis."""
    if d.ndim != 3 or c.shape != (d.shape[0],):
        raise ShapeError(f"cannot apply {d.shape} to {c.shape}")
    return np.einsum("i,ijk->jk", c, d, optimize=True).reshape(-1)


def rref(rows: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of ``rows`` with zero rows dropped.

    Returns the nonzero rows and their pivot columns.
    """
    a = exact(np.atleast_2d(rows)) if rows.size else zeros(0, rows.shape[-1])
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, c]
        for i in range(nrows):
            if i != r and a[i, c] != 0:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
    return a[:r], pivots


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``ambient_dim``-space held as an RREF basis (one vector per row)."""

    ambient_dim: int
    basis: np.ndarray
    pivots: tuple[int, ...] = field(default=())

    @classmethod
    def span(cls, vectors, ambient_dim: int | None = None) -> "Subspace":
        vecs = np.asarray(vectors, dtype=object)
        if ambient_dim is None:
            ambient_dim = vecs.shape[-1]
        if vecs.size == 0:
            return cls(ambient_dim, zeros(0, ambient_dim), ())
        basis, piv = rref(vecs.reshape(-1, ambient_dim))
        return cls(ambient_dim, basis, tuple(piv))

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def coordinates(self, v: np.ndarray):
        """Coordinates of ``v`` in this basis, or ``None`` if ``v`` is outside."""
        v = np.asarray(v, dtype=object)
        coords = np.array([v[p] for p in self.pivots], dtype=object)
        if self.rank:
            recon = coords @ self.basis
        else:
            recon = zeros(self.ambient_dim)
        if not all(x == y for x, y in zip(recon, v)):
            return None
        return exact(coords) if self.rank else zeros(0)

    def contains(self, v: np.ndarray) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def inclusion(self) -> np.ndarray:
        """Matrix ``ambient_dim x rank`` embedding carrier coordinates."""
        return self.basis.T.copy() if self.rank else zeros(self.ambient_dim, 0)

    def retraction(self) -> np.ndarray:
        """Matrix ``rank x ambient_dim`` reading pivot entries; a left inverse of inclusion."""
        r = zeros(self.rank, self.ambient_dim)
        for i, p in enumerate(self.pivots):
            r[i, p] = Fraction(1)
        return r

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.rank == other.rank
            and mat_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self.basis.reshape(-1))))


def image_subspace(f: np.ndarray) -> Subspace:
    """Column span of ``f``."""
    f = np.asarray(f, dtype=object)
    if f.ndim != 2:
        raise ShapeError(f"expected a matrix, got shape {f.shape}")
    return Subspace.span(f.T, ambient_dim=f.shape[0])


def invert(f: np.ndarray) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination; raises SingularMap."""
    f = np.asarray(f, dtype=object)
    if f.ndim != 2 or f.shape[0] != f.shape[1]:
        raise ShapeError(f"only square maps are invertible, got {f.shape}")
    n = f.shape[0]
    aug = np.concatenate([exact(f), identity(n)], axis=1)
    red, piv = rref(aug)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise SingularMap(f"map of rank {sum(p < n for p in piv)} < {n} is not invertible")
    return red[:, n:].copy()


def mat_equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.reshape(-1), b.reshape(-1)))
