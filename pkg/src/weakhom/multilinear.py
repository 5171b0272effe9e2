"""Batched evaluation of multilinear expressions.

A :class:`Multi` holds an expression evaluated on every tuple of its free
variables at once.  Leading axes are indexed by the variables (one axis per
variable, in ``vars`` order); the remaining axes are tensor legs.  Since every
identity checked by this package is linear in each variable, sweeping the
variables over a basis settles the identity for all inputs; feeding other
sample vectors through :func:`variable` gives randomized spot checks.

Values are stored as an integer array ``num`` over one common positive
denominator ``den``.  Contractions run in int64 whenever a crude a-priori
bound rules out overflow and fall back to Python integers otherwise, so the
result is exact either way.
"""

from __future__ import annotations

import math
import string
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce

import numpy as np

from .linear import exact

_LETTERS = string.ascii_letters
_LIMIT = 2**62


class _Namer:
    def __init__(self):
        self._it = iter(_LETTERS)

    def __call__(self):
        return next(self._it)


# -- scaled integer arrays ---------------------------------------------------

def _maxabs(num) -> int:
    if num.size == 0:
        return 0
    if num.dtype == object:
        return max(abs(int(v)) for v in num.reshape(-1))
    return int(np.abs(num).max())


def _shrink(num):
    """Prefer int64 storage when the entries fit."""
    if num.dtype == object and _maxabs(num) < _LIMIT:
        return num.astype(np.int64)
    return num


def _normalize(num, den):
    if num.size == 0:
        return num, 1
    if num.dtype == object:
        g = reduce(math.gcd, (int(v) for v in num.reshape(-1)), den)
    else:
        g = math.gcd(int(np.gcd.reduce(num.reshape(-1))), den)
    if g > 1:
        num = num // g
        den //= g
    return _shrink(num), den


def scaled(arr):
    """Split a rational array into ``(integer array, denominator)``."""
    arr = np.asarray(arr, dtype=object)
    flat = [Fraction(v) for v in arr.reshape(-1)]
    den = math.lcm(*(v.denominator for v in flat)) if flat else 1
    out = np.empty(len(flat), dtype=object)
    for i, v in enumerate(flat):
        out[i] = v.numerator * (den // v.denominator)
    return _normalize(out.reshape(arr.shape), den)


_CACHE: OrderedDict = OrderedDict()


def _scaled_cached(arr):
    # structure tensors are reused across many contractions; keep a small LRU
    key = id(arr)
    hit = _CACHE.get(key)
    if hit is not None and hit[0] is arr:
        _CACHE.move_to_end(key)
        return hit[1]
    val = scaled(arr)
    _CACHE[key] = (arr, val)
    if len(_CACHE) > 256:
        _CACHE.popitem(last=False)
    return val


def _contract(inputs, out_labels):
    """Exact einsum over ``(labels, num, den)`` operands."""
    dims = {}
    for labels, num, _ in inputs:
        for lab, d in zip(labels, num.shape):
            dims[lab] = d
    summed = set(dims) - set(out_labels)
    bound = math.prod(_maxabs(n) for _, n, _ in inputs) * math.prod(dims[s] for s in summed)
    subscripts = ",".join(lab for lab, _, _ in inputs) + "->" + out_labels
    if bound < _LIMIT:
        nums = [n.astype(np.int64) for _, n, _ in inputs]
    else:
        nums = [n.astype(object) for _, n, _ in inputs]
    out = np.einsum(subscripts, *nums, optimize="greedy")
    out = np.asarray(out)
    den = math.prod(d for _, _, d in inputs)
    return _normalize(out, den)


def _rescale(num, factor):
    if factor == 1:
        return num
    if num.dtype != object and _maxabs(num) * factor < _LIMIT:
        return num * factor
    return num.astype(object) * factor


# -- the expression value ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Multi:
    vars: tuple
    num: np.ndarray
    den: int = 1

    @classmethod
    def from_data(cls, vars, data) -> "Multi":
        num, den = scaled(data)
        return cls(tuple(vars), num, den)

    @cached_property
    def data(self) -> np.ndarray:
        """Values as a Fraction object array."""
        out = np.empty(self.num.shape, dtype=object)
        for idx, v in np.ndenumerate(self.num):
            out[idx] = Fraction(int(v), self.den)
        return out

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def nlegs(self) -> int:
        return self.num.ndim - self.nvars

    @property
    def leg_dims(self) -> tuple:
        return self.num.shape[self.nvars:]

    def var_dim(self, name) -> int:
        return self.num.shape[self.vars.index(name)]

    def _labels(self, names):
        return "".join(names() for _ in range(self.num.ndim))

    def _with(self, num, den) -> "Multi":
        return Multi(self.vars, num, den)

    # -- single-operand operations ------------------------------------

    def map(self, f: np.ndarray, leg: int = 0) -> "Multi":
        """Apply the matrix ``f`` on one leg."""
        names = _Namer()
        lab = self._labels(names)
        ax = self.nvars + leg
        new = names()
        fn, fd = _scaled_cached(f)
        out = lab[:ax] + new + lab[ax + 1:]
        return self._with(*_contract([(lab, self.num, self.den), (new + lab[ax], fn, fd)], out))

    def map2(self, t: np.ndarray, i: int, j: int) -> "Multi":
        """Apply a map on the tensor product of legs ``i`` and ``j``.

        ``t[p, q, a, b]`` is the coefficient of ``x_a (x) x_b`` in the image
        of ``x_p (x) x_q``; the outputs replace legs ``i`` and ``j`` in place.
        """
        if i == j:
            raise ValueError("map2 needs two distinct legs")
        names = _Namer()
        lab = self._labels(names)
        nv = self.nvars
        a, b = names(), names()
        tn, td = _scaled_cached(t)
        out = list(lab)
        out[nv + i] = a
        out[nv + j] = b
        spec_t = lab[nv + i] + lab[nv + j] + a + b
        return self._with(*_contract([(lab, self.num, self.den), (spec_t, tn, td)], "".join(out)))

    def pair(self, covector: np.ndarray, leg: int = 0) -> "Multi":
        """Contract one leg against a covector, removing the leg."""
        names = _Namer()
        lab = self._labels(names)
        ax = self.nvars + leg
        cn, cd = _scaled_cached(covector)
        out = lab[:ax] + lab[ax + 1:]
        return self._with(*_contract([(lab, self.num, self.den), (lab[ax], cn, cd)], out))

    def split(self, d: np.ndarray, leg: int = 0) -> "Multi":
        """Replace a leg ``c`` by the two legs of ``d(c)`` (``d[i, j, k]`` convention)."""
        names = _Namer()
        lab = self._labels(names)
        ax = self.nvars + leg
        j, k = names(), names()
        dn, dd = _scaled_cached(d)
        out = lab[:ax] + j + k + lab[ax + 1:]
        return self._with(*_contract([(lab, self.num, self.den), (lab[ax] + j + k, dn, dd)], out))

    def join(self, t: np.ndarray, left: int, right: int) -> "Multi":
        """Combine two legs of the same value through the bilinear map ``t``.

        The result occupies the position of ``left``; ``right`` disappears.
        """
        if left == right:
            raise ValueError("cannot join a leg with itself")
        names = _Namer()
        lab = list(self._labels(names))
        nv = self.nvars
        new = names()
        tn, td = _scaled_cached(t)
        spec_t = lab[nv + left] + lab[nv + right] + new
        out = list(lab)
        out[nv + left] = new
        del out[nv + right]
        return self._with(*_contract([("".join(lab), self.num, self.den), (spec_t, tn, td)],
                                     "".join(out)))

    def permute(self, order) -> "Multi":
        """Reorder legs: new leg ``k`` is old leg ``order[k]``."""
        nv = self.nvars
        axes = list(range(nv)) + [nv + i for i in order]
        return self._with(np.transpose(self.num, axes), self.den)

    def reshape_legs(self, *dims) -> "Multi":
        return self._with(self.num.reshape(self.num.shape[: self.nvars] + tuple(dims)), self.den)

    def flat(self) -> "Multi":
        """Merge all legs into one (row-major)."""
        return self.reshape_legs(int(np.prod(self.leg_dims, dtype=int)))

    def scale(self, other: "Multi") -> "Multi":
        """Multiply by a leg-free value (a scalar-valued expression)."""
        if other.nlegs != 0:
            raise ValueError("scale() needs a scalar-valued expression")
        return combine(self, other, [])

    def _linear(self, other: "Multi", sign) -> "Multi":
        a, b = _align(self, other)
        L = math.lcm(a.den, b.den)
        x = _rescale(a.num, L // a.den)
        y = _rescale(b.num, L // b.den)
        if x.dtype != object and y.dtype != object and _maxabs(x) + _maxabs(y) >= _LIMIT:
            x, y = x.astype(object), y.astype(object)
        elif x.dtype != y.dtype:
            x, y = x.astype(object), y.astype(object)
        return Multi(a.vars, *_normalize(x + sign * y, L))

    def __add__(self, other: "Multi") -> "Multi":
        return self._linear(other, 1)

    def __sub__(self, other: "Multi") -> "Multi":
        return self._linear(other, -1)

    def __neg__(self) -> "Multi":
        return self._with(-self.num, self.den)


def variable(name: str, dim: int, vectors=None) -> Multi:
    """A free variable ranging over the rows of ``vectors`` (default: the basis)."""
    if vectors is None:
        return Multi((name,), np.eye(dim, dtype=np.int64), 1)
    return Multi.from_data((name,), exact(vectors))


def constant(value) -> Multi:
    num, den = _scaled_cached(value) if isinstance(value, np.ndarray) else scaled(value)
    return Multi((), num, den)


def combine(x: Multi, y: Multi, pairs, tensors=None) -> Multi:
    """Product of two values along the leg pairs ``(i, j)``.

    Leg ``i`` of ``x`` is multiplied (on the left) with leg ``j`` of ``y``
    through the corresponding bilinear tensor.  Result legs are the legs of
    ``x`` (paired ones replaced by products) followed by the unpaired legs
    of ``y``.  ``tensors`` is one 3-tensor per pair or a single shared one.
    """
    shared = set(x.vars) & set(y.vars)
    if shared:
        raise ValueError(f"variables {sorted(shared)} occur twice; expression is not multilinear")
    pairs = list(pairs)
    if tensors is None:
        tensors = []
    elif isinstance(tensors, np.ndarray):
        tensors = [tensors] * len(pairs)
    names = _Namer()
    xl = x._labels(names)
    yl = y._labels(names)
    legs_x = list(xl[x.nvars:])
    paired_y = set()
    inputs = [(xl, x.num, x.den), (yl, y.num, y.den)]
    for (i, j), t in zip(pairs, tensors):
        new = names()
        tn, td = _scaled_cached(t)
        inputs.append((xl[x.nvars + i] + yl[y.nvars + j] + new, tn, td))
        legs_x[i] = new
        paired_y.add(j)
    legs_y = [yl[y.nvars + j] for j in range(y.nlegs) if j not in paired_y]
    out = xl[: x.nvars] + yl[: y.nvars] + "".join(legs_x) + "".join(legs_y)
    return Multi(x.vars + y.vars, *_contract(inputs, out))


def tensor(*xs: Multi) -> Multi:
    """Outer product; legs are concatenated in order."""
    out = xs[0]
    for y in xs[1:]:
        out = combine(out, y, [])
    return out


def _align(a: Multi, b: Multi):
    """Broadcast two values to a common variable set (``a``'s order first)."""
    dims = {}
    for m in (a, b):
        for v, d in zip(m.vars, m.num.shape):
            if dims.setdefault(v, d) != d:
                raise ValueError(f"variable {v!r} has inconsistent dimensions")
    order = tuple(a.vars) + tuple(v for v in b.vars if v not in a.vars)
    return _expand(a, order, dims), _expand(b, order, dims)


def _expand(m: Multi, order, dims) -> Multi:
    num = m.num
    present = list(m.vars)
    # move existing var axes into target order, inserting singleton axes for missing ones
    src = [present.index(v) for v in order if v in present]
    rest = list(range(m.nvars, num.ndim))
    num = np.transpose(num, src + rest)
    shape = []
    k = 0
    for v in order:
        if v in present:
            shape.append(num.shape[k])
            k += 1
        else:
            shape.append(1)
    num = num.reshape(tuple(shape) + num.shape[k:])
    full = tuple(dims[v] for v in order) + num.shape[len(order):]
    return Multi(tuple(order), np.broadcast_to(num, full), m.den)


def first_mismatch(lhs: Multi, rhs: Multi, order=None):
    """Compare two values on every variable tuple.

    Returns ``None`` when they agree everywhere, else
    ``(index_tuple, lhs_coords, rhs_coords)`` for the lexicographically first
    failing tuple (variables in ``order``, default the lhs order).
    """
    a, b = _align(lhs, rhs)
    if order is not None:
        order = tuple(order)
        if set(order) != set(a.vars):
            raise ValueError(f"order {order} does not match variables {a.vars}")
        dims = dict(zip(a.vars, a.num.shape))
        a = _expand(a, order, dims)
        b = _expand(b, order, dims)
    if a.leg_dims != b.leg_dims:
        raise ValueError(f"leg shapes differ: {a.leg_dims} vs {b.leg_dims}")
    nv = a.nvars
    var_shape = a.num.shape[:nv]
    la = _rescale(a.num, b.den).reshape(var_shape + (-1,))
    lb = _rescale(b.num, a.den).reshape(var_shape + (-1,))
    bad = np.asarray(la != lb, dtype=bool).any(axis=-1)
    if not bad.any():
        return None
    idx = tuple(int(i) for i in np.argwhere(bad)[0])
    arow = a.num.reshape(var_shape + (-1,))[idx]
    brow = b.num.reshape(var_shape + (-1,))[idx]
    return (idx, np.array([Fraction(int(v), a.den) for v in arow], dtype=object),
            np.array([Fraction(int(v), b.den) for v in brow], dtype=object))
