"""Definition files, suite orchestration and verification reports.

A definition file is a JSON object with ``schema_version`` and ``kind``
(``bialgebra``, ``hopf``, ``automorphism`` or ``yd_module``).  Every scalar
is a canonical rational string such as ``"3"`` or ``"-1/2"``.  Automorphism
and module files name their host by a path relative to the file itself; a
module's component refers to automorphisms listed under ``automorphisms``
(name to path), to ``"id"``, or carries an inline matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import braided
from .bialgebra import CONVENTIONS, MONOIDAL_HOM, DefinitionMismatch, PresentedBialgebra, counital_maps
from .checks import (
    CheckReport,
    Witness,
    check_antipode,
    check_counital_identities,
    check_fivefold_coproduct,
    check_hom_algebra,
    check_hom_coalgebra,
    check_weak_compat,
    _structural_antipode,
)
from .linear import ShapeError, SingularMap, fmt, identity
from .yd import (
    AutomorphismPair,
    YDModule,
    build_entwining,
    check_entwined_module,
    check_entwining,
    check_yd,
    check_yd_equivalent_form,
    identity_pair,
    unit_object,
)

SCHEMA_VERSION = "1"
REPORT_SCHEMA = "weakhom-report/1"
KINDS = ("bialgebra", "hopf", "automorphism", "yd_module")
SUITES = ("algebra", "coalgebra", "weak", "counital", "antipode", "yd", "entwining", "braided")

__all__ = [
    "SCHEMA_VERSION",
    "REPORT_SCHEMA",
    "SUITES",
    "SchemaError",
    "BadLiteral",
    "UnresolvedReference",
    "NamedAutomorphism",
    "parse_rational",
    "load",
    "from_dict",
    "to_dict",
    "save",
    "VerificationReport",
    "run_suite",
    "report_from_structured",
]


class SchemaError(ValueError):
    """Malformed definition file; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class BadLiteral(SchemaError):
    pass


class UnresolvedReference(SchemaError):
    pass


@dataclass(frozen=True, eq=False)
class NamedAutomorphism:
    name: str
    host: PresentedBialgebra
    matrix: np.ndarray


# ---------------------------------------------------------------------------
# scalars and arrays

def parse_rational(value, field: str) -> Fraction:
    """Canonical ``"p"`` or ``"p/q"`` string (integers are tolerated) to a Fraction."""
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise BadLiteral(field, f"expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    num, sep, den = value.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise BadLiteral(field, f"bad rational literal {value!r}") from None
    if q == 0:
        raise BadLiteral(field, f"zero denominator in {value!r}")
    x = Fraction(p, q)
    if fmt(x) != value.strip():
        raise BadLiteral(field, f"{value!r} is not in canonical form {fmt(x)!r}")
    return x


def _array(value, field: str, shape) -> np.ndarray:
    arr = np.asarray(value, dtype=object)
    if arr.shape != tuple(shape):
        raise SchemaError(field, f"expected shape {tuple(shape)}, got {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = parse_rational(v, f"{field}{list(idx)}")
    return out


def _strings(arr) -> list:
    return np.vectorize(fmt, otypes=[object])(np.asarray(arr, dtype=object)).tolist() \
        if np.asarray(arr).size else np.asarray(arr).tolist()


def _get(d: dict, key: str, ctx=""):
    if key not in d:
        raise SchemaError(f"{ctx}{key}", "missing field")
    return d[key]


# ---------------------------------------------------------------------------
# loading

def load(path):
    """Parse a definition file into a bialgebra, automorphism or module."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UnresolvedReference(str(path), f"cannot read file ({exc.strerror})") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno}", exc.msg) from None
    return from_dict(data, path.parent)


def from_dict(data: dict, base: Path | str = "."):
    base = Path(base)
    if not isinstance(data, dict):
        raise SchemaError("<root>", "expected a JSON object")
    version = _get(data, "schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError("schema_version", f"unsupported version {version!r}")
    kind = _get(data, "kind")
    if kind not in KINDS:
        raise SchemaError("kind", f"unknown kind {kind!r}")
    if kind in ("bialgebra", "hopf"):
        return _load_bialgebra(data, kind)
    host = _load_ref(base, _get(data, "host"), "host")
    if not isinstance(host, PresentedBialgebra):
        raise UnresolvedReference("host", "host file does not define a bialgebra")
    if kind == "automorphism":
        M = _array(_get(data, "matrix"), "matrix", (host.dim, host.dim))
        return NamedAutomorphism(str(data.get("name", "")), host, M)
    return _load_module(data, base, host)


def _load_ref(base: Path, ref, field):
    if not isinstance(ref, str):
        raise SchemaError(field, "expected a relative path")
    target = base / ref
    if not target.exists():
        raise UnresolvedReference(field, f"file {ref!r} not found")
    return load(target)


def _load_bialgebra(data, kind) -> PresentedBialgebra:
    n = _get(data, "dim")
    if not isinstance(n, int) or n <= 0:
        raise SchemaError("dim", "must be a positive integer")
    convention = data.get("convention", MONOIDAL_HOM)
    if convention not in CONVENTIONS:
        raise SchemaError("convention", f"unknown convention {convention!r}")
    arrays = {
        "mul": (n, n, n), "unit": (n,), "comul": (n, n, n), "counit": (n,), "xi": (n, n),
    }
    kw = {k: _array(_get(data, k), k, s) for k, s in arrays.items()}
    if kind == "hopf":
        kw["antipode"] = _array(_get(data, "antipode"), "antipode", (n, n))
    elif "antipode" in data:
        raise SchemaError("antipode", "only hopf files carry an antipode")
    try:
        return PresentedBialgebra(convention=convention, name=str(data.get("name", "")), **kw)
    except (ShapeError, SingularMap) as exc:
        raise SchemaError("<structure>", str(exc)) from None


def _load_module(data, base: Path, host: PresentedBialgebra) -> YDModule:
    autos = {}
    for name, ref in dict(data.get("automorphisms", {})).items():
        a = _load_ref(base, ref, f"automorphisms.{name}")
        if not isinstance(a, NamedAutomorphism):
            raise UnresolvedReference(f"automorphisms.{name}", "not an automorphism file")
        if not a.host.same_as(host):
            raise UnresolvedReference(f"automorphisms.{name}", "automorphism has a different host")
        autos[name] = a.matrix
    comp = _get(data, "component")

    def resolve(key):
        ref = _get(comp, key, "component.")
        if ref == "id":
            return identity(host.dim)
        if isinstance(ref, str):
            if ref not in autos:
                raise UnresolvedReference(f"component.{key}", f"no automorphism named {ref!r}")
            return autos[ref]
        return _array(ref, f"component.{key}", (host.dim, host.dim))

    try:
        pair = AutomorphismPair.from_matrices(host, resolve("alpha"), resolve("beta"))
    except SingularMap as exc:
        raise SchemaError("component", str(exc)) from None
    d = _get(data, "dim")
    n = host.dim
    action = _array(_get(data, "action"), "action", (n, d, d))
    coaction = _array(_get(data, "coaction"), "coaction", (d, d, n))
    mu = _array(_get(data, "mu"), "mu", (d, d))
    try:
        return YDModule(host, pair, action, coaction, mu, name=str(data.get("name", "")))
    except (ShapeError, SingularMap) as exc:
        raise SchemaError("<structure>", str(exc)) from None


# ---------------------------------------------------------------------------
# export

def to_dict(obj, host_ref: str | None = None) -> dict:
    """Definition-file object for ``obj``; modules and automorphisms need ``host_ref``."""
    out = {"schema_version": SCHEMA_VERSION}
    if isinstance(obj, PresentedBialgebra):
        out.update(kind="hopf" if obj.antipode is not None else "bialgebra", name=obj.name,
                   dim=obj.dim, convention=obj.convention, mul=_strings(obj.mul),
                   unit=_strings(obj.unit), comul=_strings(obj.comul),
                   counit=_strings(obj.counit), xi=_strings(obj.xi))
        if obj.antipode is not None:
            out["antipode"] = _strings(obj.antipode)
        return out
    if host_ref is None:
        raise ValueError("a host reference is needed for this kind")
    if isinstance(obj, NamedAutomorphism):
        out.update(kind="automorphism", name=obj.name, host=host_ref, matrix=_strings(obj.matrix))
        return out
    if isinstance(obj, YDModule):
        out.update(kind="yd_module", name=obj.name, host=host_ref, dim=obj.dim,
                   component={"alpha": _strings(obj.component.alpha),
                              "beta": _strings(obj.component.beta)},
                   action=_strings(obj.action), coaction=_strings(obj.coaction),
                   mu=_strings(obj.mu))
        return out
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def save(obj, path, host_ref: str | None = None):
    Path(path).write_text(dumps(to_dict(obj, host_ref)))


# ---------------------------------------------------------------------------
# reports

@dataclass
class VerificationReport:
    target: str
    suite: str
    groups: list = field(default_factory=list)     # (group, [CheckReport])
    skipped: list = field(default_factory=list)    # (group, reason)

    @property
    def failed(self) -> list:
        return [(g, r) for g, rs in self.groups for r in rs if not r.passed]

    @property
    def verdict(self) -> str:
        if self.failed:
            return "fail"
        if self.skipped:
            return "skipped"
        return "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "skipped": 2}[self.verdict]

    def structured(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "target": self.target,
            "suite": self.suite,
            "verdict": self.verdict,
            "groups": [{"group": g, "checks": [r.as_dict() for r in rs]} for g, rs in self.groups],
            "skipped": [{"group": g, "reason": why} for g, why in self.skipped],
        }

    def render(self, form: str = "text") -> str:
        if form == "structured":
            return dumps(self.structured())
        if form != "text":
            raise ValueError(f"unknown format {form!r}")
        lines = [f"target: {self.target}", f"suite: {self.suite}"]
        for g, rs in self.groups:
            npass = sum(r.passed for r in rs)
            lines.append(f"[{g}] {npass}/{len(rs)} pass")
            for r in rs:
                if r.passed:
                    continue
                lines.append(f"  FAIL {r.identity_id}")
                if r.witness is not None and r.witness.variables:
                    w = r.witness
                    at = ", ".join(f"{v}={i}" for v, i in zip(w.variables, w.index))
                    lines.append(f"    at {at}")
                    lines.append(f"    lhs {' '.join(fmt(x) for x in w.lhs)}")
                    lines.append(f"    rhs {' '.join(fmt(x) for x in w.rhs)}")
                if r.note:
                    lines.append(f"    note: {r.note}")
        for g, why in self.skipped:
            lines.append(f"[{g}] skipped: {why}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def report_from_structured(data: dict) -> VerificationReport:
    if data.get("schema") != REPORT_SCHEMA:
        raise SchemaError("schema", f"unsupported report schema {data.get('schema')!r}")
    groups = []
    for g in data["groups"]:
        rs = []
        for c in g["checks"]:
            w = c.get("witness")
            wit = None
            if w is not None:
                wit = Witness(tuple(w["variables"]), tuple(w["index"]),
                              tuple(Fraction(x) for x in w["lhs"]),
                              tuple(Fraction(x) for x in w["rhs"]))
            rs.append(CheckReport(c["identity"], c["status"], wit, note=c.get("note", "")))
        groups.append((g["group"], rs))
    skipped = [(s["group"], s["reason"]) for s in data["skipped"]]
    return VerificationReport(data["target"], data["suite"], groups, skipped)


# ---------------------------------------------------------------------------
# orchestration

class _Skip(Exception):
    pass


def _need_antipode(H):
    if H.antipode is None:
        raise _Skip("the structure has no antipode")


def _need_monoidal(H, what):
    if H.convention != MONOIDAL_HOM:
        raise _Skip(f"{what} are stated for the monoidal-hom convention")


def _counital(H):
    _need_monoidal(H, "the counital identities")
    try:
        cm = counital_maps(H)
    except DefinitionMismatch as exc:
        return [CheckReport("counital-definitions-agree", "fail", None, note=str(exc))]
    return check_counital_identities(H, cm)


def _antipode(H):
    _need_antipode(H)
    if H.convention != MONOIDAL_HOM:
        keep = {"antipode-commutes-with-twist", "antipode-anti-multiplicative",
                "antipode-fixes-unit", "antipode-anti-comultiplicative",
                "antipode-preserves-counit"}
        return [r for r in _structural_antipode(H) if r.identity_id in keep]
    return check_antipode(H)


def _module_for(target):
    if isinstance(target, YDModule):
        return target
    _need_antipode(target)
    _need_monoidal(target, "Yetter-Drinfeld modules")
    return unit_object(target)


def _yd(target):
    M = _module_for(target)
    return check_yd(M) + [r for r in check_yd_equivalent_form(M)
                          if r.identity_id != "coaction-in-truncated-range"]


def _entwining(target):
    M = _module_for(target)
    E = build_entwining(M.host, M.component)
    return check_entwining(E) + check_entwined_module(M, E)


def _braided(target):
    M = _module_for(target)
    unit = identity_pair(M.host)
    return braided.check_group_laws([unit, M.component]) + braided.braided_suite(M, M, M, unit)


def _host(target):
    return target.host if isinstance(target, YDModule) else target


_RUNNERS = {
    "algebra": lambda t: check_hom_algebra(_host(t)),
    "coalgebra": lambda t: check_hom_coalgebra(_host(t)),
    "weak": lambda t: check_weak_compat(_host(t)) + check_fivefold_coproduct(_host(t)),
    "counital": lambda t: _counital(_host(t)),
    "antipode": lambda t: _antipode(_host(t)),
    "yd": _yd,
    "entwining": _entwining,
    "braided": _braided,
}


def run_suite(target, suite: str = "all", name: str = "") -> VerificationReport:
    """Run one suite (or ``all``) on a bialgebra or a Yetter-Drinfeld module."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    report = VerificationReport(name or getattr(target, "name", "") or "<anonymous>", suite)
    for s in SUITES if suite == "all" else (suite,):
        try:
            report.groups.append((s, _RUNNERS[s](target)))
        except _Skip as why:
            report.skipped.append((s, str(why)))
    return report
