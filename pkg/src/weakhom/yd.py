"""Weak (alpha, beta)-Yetter-Drinfeld Hom-modules and entwining structures.

A module over a host ``H`` is given in its own basis ``v_1..v_d`` by

* ``action[i, j, k]``: coefficient of ``v_k`` in ``x_i . v_j``;
* ``coaction[i, j, k]``: coefficient of ``v_j (x) x_k`` in ``rho(v_i)``;
* ``mu``: the invertible module twist (columns are images).

Each module records the pair ``(alpha, beta)`` it is claimed to live over;
checks never guess it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import multilinear as ml
from .bialgebra import MissingAntipode, PresentedBialgebra, counital_maps
from .checks import CheckReport, _run, all_pass, check_automorphism, check_fivefold_coproduct, membership
from .constructions import NotAMorphism
from .linear import ShapeError, Subspace, exact, identity, image_subspace, invert, mat_equal

__all__ = [
    "AutomorphismPair",
    "identity_pair",
    "certify_pair",
    "YDModule",
    "NotClosed",
    "unit_object",
    "corrupt",
    "check_module_axioms",
    "check_comodule_axioms",
    "check_yd",
    "check_yd_equivalent_form",
    "range_subspace",
    "Entwining",
    "build_entwining",
    "flip_entwining",
    "check_entwining",
    "check_entwined_module",
    "yd_verdict",
    "equivalent_form_verdict",
    "entwined_verdict",
]


class NotClosed(ValueError):
    """A structure map leaves the subspace it should preserve."""


# ---------------------------------------------------------------------------
# automorphism pairs

@dataclass(frozen=True, eq=False)
class AutomorphismPair:
    """Two automorphisms of a host; also the elements of the group ``G``.

    Matrices are kept as normalized ``(integers, denominator)`` pairs so
    that group arithmetic over a pool stays fast; :attr:`alpha` and
    :attr:`beta` give Fraction matrices.
    """

    host: PresentedBialgebra
    a: tuple
    b: tuple
    a_inv: tuple
    b_inv: tuple

    @classmethod
    def from_matrices(cls, host, alpha, beta, alpha_inv=None, beta_inv=None):
        alpha, beta = exact(alpha), exact(beta)
        ai = invert(alpha) if alpha_inv is None else exact(alpha_inv)
        bi = invert(beta) if beta_inv is None else exact(beta_inv)
        return cls(host, ml.scaled(alpha), ml.scaled(beta), ml.scaled(ai), ml.scaled(bi))

    @staticmethod
    def _frac(s):
        return ml.Multi((), s[0], s[1]).data

    @cached_property
    def alpha(self):
        return self._frac(self.a)

    @cached_property
    def beta(self):
        return self._frac(self.b)

    @cached_property
    def alpha_inv(self):
        return self._frac(self.a_inv)

    @cached_property
    def beta_inv(self):
        return self._frac(self.b_inv)

    def __eq__(self, other):
        if not isinstance(other, AutomorphismPair):
            return NotImplemented
        return all(
            x[1] == y[1] and np.array_equal(x[0], y[0])
            for x, y in ((self.a, other.a), (self.b, other.b))
        )

    def __hash__(self):
        return hash((self.a[1], self.a[0].tobytes() if self.a[0].dtype != object else None,
                     self.b[1]))

    def __repr__(self):
        return f"AutomorphismPair(dim={self.host.dim})"


def identity_pair(H: PresentedBialgebra) -> AutomorphismPair:
    one = identity(H.dim)
    return AutomorphismPair.from_matrices(H, one, one, one, one)


def certify_pair(H: PresentedBialgebra, alpha, beta) -> AutomorphismPair:
    """Verify both maps as automorphisms of ``H`` (twist and antipode included)."""
    for name, f in (("alpha", alpha), ("beta", beta)):
        bad = [r for r in check_automorphism(H, exact(f)) if not r.passed]
        if bad:
            raise NotAMorphism(f"{name} fails {bad[0].identity_id}")
    return AutomorphismPair.from_matrices(H, alpha, beta)


# ---------------------------------------------------------------------------
# modules

@dataclass(frozen=True, eq=False)
class YDModule:
    host: PresentedBialgebra
    component: AutomorphismPair
    action: np.ndarray
    coaction: np.ndarray
    mu: np.ndarray
    name: str = ""
    # set for truncated tensor products: the carrier inside the flat product
    # of the factors' own coordinates, and the factors themselves
    carrier: Subspace | None = None
    factors: tuple = field(default=())

    def __post_init__(self):
        for attr in ("action", "coaction", "mu"):
            object.__setattr__(self, attr, exact(getattr(self, attr)))
        n, d = self.host.dim, self.mu.shape[0]
        if self.mu.shape != (d, d):
            raise ShapeError("module twist must be square")
        if self.action.shape != (n, d, d):
            raise ShapeError(f"action must have shape {(n, d, d)}, got {self.action.shape}")
        if self.coaction.shape != (d, d, n):
            raise ShapeError(f"coaction must have shape {(d, d, n)}, got {self.coaction.shape}")
        if self.component.host is not self.host and not self.component.host.same_as(self.host):
            raise ValueError("component belongs to a different host")
        self.mu_inv  # raises SingularMap

    @property
    def dim(self) -> int:
        return self.mu.shape[0]

    @cached_property
    def mu_inv(self):
        return invert(self.mu)

    def mu_pow(self, k: int):
        base = self.mu if k >= 0 else self.mu_inv
        out = identity(self.dim)
        for _ in range(abs(k)):
            out = base @ out
        return out

    def replace(self, **kw) -> "YDModule":
        args = dict(host=self.host, component=self.component, action=self.action,
                    coaction=self.coaction, mu=self.mu, name=self.name, carrier=self.carrier,
                    factors=self.factors)
        args.update(kw)
        return YDModule(**args)

    def same_structure(self, other: "YDModule") -> bool:
        """Entrywise equality of structure maps, component and carrier."""
        if self.carrier is not None or other.carrier is not None:
            if self.carrier is None or other.carrier is None or self.carrier != other.carrier:
                return False
        return (
            self.component == other.component
            and mat_equal(self.action, other.action)
            and mat_equal(self.coaction, other.coaction)
            and mat_equal(self.mu, other.mu)
        )


def corrupt(M: YDModule, which: str, index, delta=1) -> YDModule:
    """Copy of ``M`` with one entry of ``action``/``coaction``/``mu`` shifted by ``delta``."""
    arr = getattr(M, which).copy()
    arr[tuple(index)] += delta
    return M.replace(**{which: arr}, name=f"{M.name}[{which}{tuple(index)}{delta:+}]")


def _restrict_vector_map(images: np.ndarray, space: Subspace, what: str) -> np.ndarray:
    """Coordinates of carrier-valued vectors (last axis ambient)."""
    R = space.retraction()
    I = space.inclusion()
    flat = images.reshape(-1, images.shape[-1])
    coords = flat @ R.T if flat.size else flat[:, :0]
    back = coords @ I.T if coords.size else np.zeros_like(flat)
    if not mat_equal(back, flat):
        raise NotClosed(f"{what} leaves the subspace")
    return coords.reshape(images.shape[:-1] + (space.rank,))


def unit_object(H: PresentedBialgebra, cm=None) -> YDModule:
    """``H_t`` with ``h . x = eps_t(hx)``, ``rho(x) = 1_2 (x) S^-1(x 1_1)`` and the restricted twist."""
    if H.antipode is None:
        raise MissingAntipode("the unit object needs an antipode")
    cm = counital_maps(H) if cm is None else cm
    Ht = cm.Ht
    I = Ht.inclusion()
    o = H.ops()
    h = o.var("h")
    x = ml.variable("x", Ht.rank, I.T)
    act = o.mul(h, x).map(cm.eps_t)                       # vars h, x -> H leg
    action = _restrict_vector_map(act.data, Ht, "unit action")
    rho = ml.combine(x, o.delta_one(), [(0, 0)], H.mul)   # x 1_1, 1_2
    rho = o.Sinv(rho, 0).permute([1, 0])                  # 1_2, S^-1(x 1_1)
    coact = np.moveaxis(rho.data, 1, -1)                  # x, H(second), H(first)
    coaction = np.moveaxis(_restrict_vector_map(coact, Ht, "unit coaction"), -1, 1)
    twist = _restrict_vector_map((H.xi @ I).T, Ht, "twist").T
    return YDModule(H, identity_pair(H), action, coaction, twist, name="H_t")


# ---------------------------------------------------------------------------
# expression helpers

class _ModOps:
    def __init__(self, M: YDModule, vectors=None):
        self.M = M
        self.H = M.host
        self.o = M.host.ops(vectors)
        self.vectors = vectors or {}

    def mvar(self, name):
        return ml.variable(name, self.M.dim, self.vectors.get(name))

    def act(self, x, hleg, y, mleg):
        """``(x-leg) . (y-leg)``; result legs as in :func:`combine`."""
        return ml.combine(x, y, [(hleg, mleg)], self.M.action)

    def rho(self, x, leg=0):
        return x.split(self.M.coaction, leg)

    def mu(self, x, k=1, leg=0):
        return x.map(self.M.mu_pow(k), leg)


def _aSinv(p: AutomorphismPair, H):
    return p.alpha @ H.antipode_inv


# ---------------------------------------------------------------------------
# module, comodule and compatibility checks

def check_module_axioms(M: YDModule, vectors=None) -> list[CheckReport]:
    q = _ModOps(M, vectors)
    o = q.o
    a, b, m = o.var("a"), o.var("b"), q.mvar("m")
    return _run([
        ("module-hom-associativity",
         lambda: (q.act(o.xi(a), 0, q.act(b, 0, m, 0), 0),
                  q.act(o.mul(a, b), 0, q.mu(m), 0))),
        ("module-twist-compatible",
         lambda: (q.mu(q.act(a, 0, m, 0)), q.act(o.xi(a), 0, q.mu(m), 0))),
        ("module-unit", lambda: (q.act(o.one(), 0, m, 0), q.mu(m))),
    ])


def check_comodule_axioms(M: YDModule, vectors=None) -> list[CheckReport]:
    q = _ModOps(M, vectors)
    o = q.o
    m = q.mvar("m")
    r = q.rho(m)
    return _run([
        ("comodule-hom-coassociativity",
         lambda: (o.delta(q.mu(r, -1, 0), 1), o.xi(q.rho(r, 0), -1, 2))),
        ("comodule-twist-compatible", lambda: (q.rho(q.mu(m)), o.xi(q.mu(r, 1, 0), 1, 1))),
        ("comodule-counit", lambda: (o.eps(r, 1), q.mu(m, -1))),
    ])


def _yd_compat(M: YDModule, vectors=None):
    q = _ModOps(M, vectors)
    o, H, p = q.o, M.host, M.component
    h, m = o.var("h"), q.mvar("m")

    def lhs():
        return q.rho(q.act(h, 0, m, 0))

    def rhs():
        t = o.delta(o.delta(h), 1)                       # h1, h21, h22
        t = o.xi(t, 1, 1).map(p.beta, 2).map(_aSinv(p, H), 0)
        r = o.xi(q.rho(m), -1, 1)                        # m0, xi^-1(m1)
        t = ml.combine(t, r, [(1, 0)], M.action)         # h1, xi(h21).m0, b(h22), m1'
        t = o.join(t, 2, 3)                              # h1, M, b(h22) m1'
        t = o.join(t, 2, 0)                              # M, (..) aS^-1(h1)
        return t

    return ("yd-compatibility", lambda: (lhs(), rhs()))


def range_subspace(M: YDModule) -> Subspace:
    """Image of ``m (x) h -> 1_1 . m (x) beta(1_2) h`` inside ``M (x) H``."""
    q = _ModOps(M)
    o, p = q.o, M.component
    m, h = q.mvar("m"), o.var("h")
    d1 = o.delta_one().map(p.beta, 1)
    t = ml.combine(d1, m, [(0, 0)], M.action)            # 1_1.m, beta(1_2)
    t = ml.combine(t, h, [(1, 0)], M.host.mul)           # 1_1.m, beta(1_2) h
    E = t.data.reshape(M.dim * M.host.dim, M.dim * M.host.dim)
    return image_subspace(E.T)


def _range_reports(M: YDModule) -> list[CheckReport]:
    t0 = time.perf_counter()
    space = range_subspace(M)
    flat = M.coaction.reshape(M.dim, -1)
    for i in range(M.dim):
        if not space.contains(flat[i]):
            r = membership("coaction-in-truncated-range", flat[i], space,
                           note=f"rho of basis vector {i} lies outside the range")
            return [r]
    return [CheckReport("coaction-in-truncated-range", "pass", None, time.perf_counter() - t0)]


def _yd_equivalent(M: YDModule, vectors=None):
    q = _ModOps(M, vectors)
    o, p = q.o, M.component
    h, m = o.var("h"), q.mvar("m")

    def lhs():
        t = o.delta(h).map(p.beta, 1)                    # h1, beta(h2)
        return ml.combine(t, q.rho(m), [(0, 0), (1, 1)], [M.action, M.host.mul])

    def rhs():
        t = o.delta(h)                                   # h1, h2
        t = q.act(t, 1, q.mu(m, -1), 0)                  # h1, h2 . mu^-1(m)
        t = q.rho(t, 1)                                  # h1, X0, X1
        t = q.mu(t, 1, 1).map(p.alpha, 0)
        return o.join(t, 2, 0)                           # mu(X0), X1 alpha(h1)

    return ("yd-compatibility-equivalent-form", lambda: (lhs(), rhs()))


def check_yd(M: YDModule, vectors=None) -> list[CheckReport]:
    """Module axioms, comodule axioms, the compatibility law and the range condition."""
    if M.host.antipode is None:
        raise MissingAntipode("Yetter-Drinfeld checks need an antipode")
    reports = check_module_axioms(M, vectors) + check_comodule_axioms(M, vectors)
    reports += _run([_yd_compat(M, vectors)])
    reports += _range_reports(M)
    return reports


def yd_verdict(M: YDModule) -> bool:
    return all_pass(check_yd(M))


def equivalent_form_verdict(M: YDModule) -> bool:
    reports = check_module_axioms(M) + check_comodule_axioms(M)
    reports += _range_reports(M) + _run([_yd_equivalent(M)])
    return all_pass(reports)


def check_yd_equivalent_form(M: YDModule) -> list[CheckReport]:
    """Range condition and the equivalent compatibility form, plus a verdict-agreement report.

    The agreement report compares the conjunction of module, comodule,
    range and equivalent-form laws with the conjunction used by
    :func:`check_yd`.
    """
    base = check_module_axioms(M) + check_comodule_axioms(M)
    rng = _range_reports(M)
    eqv = _run([_yd_equivalent(M)])
    direct = _run([_yd_compat(M)])
    v_direct = all_pass(base + direct + rng)
    v_equiv = all_pass(base + rng + eqv)
    t0 = time.perf_counter()
    agree = CheckReport(
        "yd-forms-agree", "pass" if v_direct == v_equiv else "fail", None,
        time.perf_counter() - t0,
        note=f"direct form {'holds' if v_direct else 'fails'}, "
             f"equivalent form {'holds' if v_equiv else 'fails'}",
    )
    return rng + eqv + [agree]


# ---------------------------------------------------------------------------
# entwining structures

@dataclass(frozen=True, eq=False)
class Entwining:
    """``psi[a, c, p, q]``: coefficient of ``x_p (x) x_q`` in ``psi(x_a (x) x_c)``."""

    host: PresentedBialgebra
    psi: np.ndarray
    component: AutomorphismPair | None = None

    def matrix(self) -> np.ndarray:
        """``psi`` as a square matrix on the flattened tensor square."""
        n = self.host.dim
        return np.ascontiguousarray(self.psi.reshape(n * n, n * n).T)


def build_entwining(H: PresentedBialgebra, p: AutomorphismPair) -> Entwining:
    """``a (x) c -> xi^2(a_21) (x) (beta(a_22) xi^-2(c)) alpha(S^-1(a_1))``."""
    if H.antipode is None:
        raise MissingAntipode("the entwining map needs an antipode")
    o = H.ops()
    a, c = o.var("a"), o.var("c")
    t = o.delta(o.delta(a), 1)                           # a1, a21, a22
    t = o.xi(t, 2, 1).map(p.beta, 2).map(_aSinv(p, H), 0)
    t = ml.combine(t, o.xi(c, -2), [(2, 0)], H.mul)      # a1, xi^2(a21), beta(a22) xi^-2(c)
    t = o.join(t, 2, 0)
    return Entwining(H, exact(t.data), p)


def flip_entwining(H: PresentedBialgebra) -> Entwining:
    n = H.dim
    psi = np.zeros((n, n, n, n), dtype=object)
    psi.fill(0)
    for a in range(n):
        for c in range(n):
            psi[a, c, c, a] = 1
    return Entwining(H, exact(psi))


def check_entwining(E: Entwining) -> list[CheckReport]:
    H = E.host
    o = H.ops()
    P = E.psi
    h, g, c = o.var("h"), o.var("g"), o.var("c")
    one = o.one()

    def psi(x, i, j):
        return x.map2(P, i, j)

    checks = [
        ("entwining-multiplicative",
         lambda: (psi(ml.tensor(o.mul(h, g), c), 0, 1),
                  o.xi(o.join(psi(psi(ml.tensor(h, g, o.xi(c, -1)), 1, 2), 0, 2), 0, 1), 1, 1))),
        ("entwining-unit",
         lambda: (psi(ml.tensor(one, c), 0, 1),
                  o.xi(o.eps(psi(ml.tensor(one, o.delta(c)), 0, 1), 1), 1, 1))),
        ("entwining-comultiplicative",
         lambda: (o.delta(psi(ml.tensor(h, c), 0, 1), 1),
                  o.xi(psi(psi(ml.tensor(o.xi(h, -1), o.delta(c)), 0, 2), 0, 1), 1, 0))),
        ("entwining-counit",
         lambda: (o.eps(psi(ml.tensor(h, c), 0, 1), 1),
                  o.mul(h, o.eps(psi(ml.tensor(one, o.xi(c, -1)), 0, 1), 1)))),
    ]
    return _run(checks) + check_fivefold_coproduct(H)


def _entwined_law(M: YDModule, E: Entwining):
    q = _ModOps(M)
    o = q.o
    h, m = o.var("h"), q.mvar("m")

    def rhs():
        t = ml.tensor(o.xi(h, -1), o.xi(q.rho(m), 1, 1))   # h', m0, xi(m1)
        t = t.map2(E.psi, 0, 2)                            # _psi h', m0, xi(m1)^psi
        return t.join(M.action, 0, 1)

    return ("entwined-module-law", lambda: (q.rho(q.act(h, 0, m, 0)), rhs()))


def entwined_verdict(M: YDModule, E: Entwining) -> bool:
    return all_pass(check_module_axioms(M) + check_comodule_axioms(M) + _run([_entwined_law(M, E)]))


def check_entwined_module(M: YDModule, E: Entwining | None = None) -> list[CheckReport]:
    """The entwined-module law, plus a report that its verdict matches :func:`check_yd`."""
    E = build_entwining(M.host, M.component) if E is None else E
    law = _run([_entwined_law(M, E)])
    base = check_module_axioms(M) + check_comodule_axioms(M)
    v_ent = all_pass(base + law)
    v_yd = yd_verdict(M)
    agree = CheckReport(
        "entwined-agrees-with-yd", "pass" if v_ent == v_yd else "fail", None, 0.0,
        note=f"entwined law {'holds' if v_ent else 'fails'}, "
             f"Yetter-Drinfeld law {'holds' if v_yd else 'fails'}",
    )
    return law + [agree]
