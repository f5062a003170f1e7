"""Registry of checkable operator inequalities.

Each entry couples a hypothesis validator, an LHS evaluator, and an
ordered chain of RHS evaluators (each element of the chain must
dominate the previous one).  Entries are evaluated against generated
:class:`~opineq.generators.InstanceBundle` objects; vector-quantified
statements are probed with sampled unit vectors and a stochastic
ascent over the unit sphere (:func:`sup_search`).

Conventions used throughout:

* the function pair defaults to the power family f(t) = t**alpha,
  g(t) = t**(1-alpha); entries stated for a general pair also accept a
  ``pair`` parameter carrying a :class:`~opineq.linalg.FunctionPair`;
* spectral-radius-weighted entries whose hypotheses are the intertwining
  relations |A|B = B*|A|, |A*|C = C*|A*| pin alpha = 1/2: the similarity
  recipe used by the generators certifies exactly those relations, and
  for merely base-intertwined instances the bound is false for other
  exponents (a 2x2 counterexample is easy to write down);
* numerical-radius subterms are computed with a tenth of the
  satisfaction tolerance so chain comparisons stay meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import generators, linalg, radii
from .errors import BadRange, HypothesisViolated, ParamOutOfRange, UnknownSpec
from .generators import InstanceBundle
from .linalg import FunctionPair, power_split


def inner(x, y):
    """<x, y>, conjugate-linear in the second argument (fast path)."""
    return np.vdot(y, x)


def vec_norm(x) -> float:
    return math.sqrt(np.vdot(x, x).real)


CERT_RTOL = 1e-8
DEFAULT_TOL = 1e-8
_TINY = 1e-300


@dataclass(frozen=True)
class ParamSpec:
    sweep: tuple
    lo: float
    hi: float
    pinned: bool = False


@dataclass
class BoundForm:
    """Bound of one entry at fixed instance and parameters."""

    lhs: Callable
    rhs: Callable
    warms: list = field(default_factory=list)
    rhs0: Callable | None = None  # cheap first chain element, for ascent only

    def first_rhs(self, vs):
        if self.rhs0 is not None:
            return self.rhs0(vs)
        return self.rhs(vs)[0]


@dataclass(frozen=True)
class InequalitySpec:
    id: str
    statement: str
    recipe: str
    roles: tuple
    vector_names: tuple
    params: dict
    chain_len: int
    asserted: bool
    note: str
    validator: Callable
    prepare: Callable
    bind: Callable
    custom_grid: Callable | None = None


@dataclass
class InequalityResult:
    spec_id: str
    lhs: float
    rhs_values: list
    slack: float
    relative_slack: float
    sharpness: float | None
    chain_ratio: float | None
    satisfied: bool
    chain_monotone: bool
    tol: float
    params: dict
    note: str
    fingerprint: dict | None = None

    def to_dict(self) -> dict:
        return {
            "spec_id": self.spec_id,
            "lhs": self.lhs,
            "rhs_values": list(self.rhs_values),
            "slack": self.slack,
            "relative_slack": self.relative_slack,
            "sharpness": self.sharpness,
            "chain_ratio": self.chain_ratio,
            "satisfied": self.satisfied,
            "chain_monotone": self.chain_monotone,
            "tol": self.tol,
            "params": dict(self.params),
            "note": self.note,
            "fingerprint": self.fingerprint,
        }


_REGISTRY: dict[str, InequalitySpec] = {}
_ORDER: list[str] = []


def _register(**kw) -> None:
    spec = InequalitySpec(**kw)
    if spec.id in _REGISTRY:
        raise ValueError(f"duplicate spec id {spec.id}")
    _REGISTRY[spec.id] = spec
    _ORDER.append(spec.id)


def get_spec(spec_id: str) -> InequalitySpec:
    try:
        return _REGISTRY[spec_id]
    except KeyError:
        raise UnknownSpec(f"no inequality with id {spec_id!r}") from None


def list_specs() -> list:
    """Every registry entry once, in stable order: (id, statement, signature)."""
    out = []
    for sid in _ORDER:
        s = _REGISTRY[sid]
        out.append((sid, s.statement, {
            "recipe": s.recipe,
            "roles": list(s.roles),
            "vectors": list(s.vector_names),
            "params": {k: [list(v.sweep), v.lo, v.hi] for k, v in s.params.items()},
            "chain_len": s.chain_len,
            "asserted": s.asserted,
        }))
    return out


def spec_ids() -> list:
    return list(_ORDER)


# ---------------------------------------------------------------------------
# cached per-bundle spectral calculus


class _ModCalc:
    """Eigendata of a PSD modulus, for powers and composed functions."""

    def __init__(self, vals: np.ndarray, vecs: np.ndarray):
        self.vals = np.clip(vals, 0.0, None)
        self.vecs = vecs

    @classmethod
    def of_modulus(cls, A: np.ndarray) -> "_ModCalc":
        e = linalg.hermitian_eigen(A.conj().T @ A)
        return cls(np.sqrt(np.clip(e.values, 0.0, None)), e.vectors)

    @classmethod
    def of_hermitian_abs(cls, X: np.ndarray) -> "_ModCalc":
        e = linalg.hermitian_eigen(X)
        return cls(np.abs(e.values), e.vectors)

    def power(self, p: float) -> np.ndarray:
        return (self.vecs * self.vals ** p) @ self.vecs.conj().T

    def fpow(self, f: Callable, p: float) -> np.ndarray:
        fv = np.array([float(f(float(t))) ** p for t in self.vals])
        return (self.vecs * fv) @ self.vecs.conj().T

    def norm_fpow(self, f: Callable, p: float) -> float:
        return max(float(f(float(t))) ** p for t in self.vals)

    def norm_power(self, p: float) -> float:
        # vals are not necessarily sorted (abs of ascending eigenvalues)
        return float(np.max(self.vals ** p)) if self.vals.size else 0.0


def _cache(bundle: InstanceBundle) -> dict:
    c = getattr(bundle, "_calc_cache", None)
    if c is None:
        c = {}
        bundle._calc_cache = c
    return c


def _mod(bundle, role) -> _ModCalc:
    c = _cache(bundle)
    key = ("mod", role)
    if key not in c:
        c[key] = _ModCalc.of_modulus(bundle.operators[role])
    return c[key]


def _modstar(bundle, role) -> _ModCalc:
    c = _cache(bundle)
    key = ("modstar", role)
    if key not in c:
        c[key] = _ModCalc.of_modulus(bundle.operators[role].conj().T)
    return c[key]


def _srad(bundle, role) -> float:
    c = _cache(bundle)
    key = ("r", role)
    if key not in c:
        c[key] = radii.spectral_radius(bundle.operators[role])
    return c[key]


def _w(M: np.ndarray, tol: float) -> float:
    return radii.numerical_radius(M, max(tol * 0.1, 1e-12)).value


def _norm(M: np.ndarray) -> float:
    return radii.operator_norm(M)


def _re(z: complex) -> float:
    return float(z.real)


def _adj(M):
    return M.conj().T


def _sv_pair(T: np.ndarray):
    """Top right/left singular vectors of T (warm starts for |<Tx,y>|)."""
    e = linalg.hermitian_eigen(T.conj().T @ T)
    v = e.vectors[:, -1]
    u = T @ v
    nu = np.linalg.norm(u)
    if nu > 1e-14:
        u = u / nu
    else:
        u = v
    return v, u


_POWER_PAIRS: dict = {}


def _cached_power(alpha: float) -> FunctionPair:
    pair = _POWER_PAIRS.get(alpha)
    if pair is None:
        pair = power_split(alpha)
        _POWER_PAIRS[alpha] = pair
    return pair


def _pair_from(params: dict) -> FunctionPair:
    pair = params.get("pair")
    if pair is None:
        return _cached_power(float(params["alpha"]))
    if not isinstance(pair, FunctionPair):
        raise ParamOutOfRange("parameter 'pair' must be a FunctionPair")
    return pair


# ---------------------------------------------------------------------------
# validator building blocks


def _need(bundle, *roles):
    for r in roles:
        if r not in bundle.operators:
            raise BadRange(f"bundle lacks required role {r!r}")


def _res_intertwine(M, B):
    resid = generators.intertwine_residual(M, B)
    scale = linalg.frobenius_norm(M) * linalg.frobenius_norm(B)
    return resid, scale


def _res_selfadjoint(X):
    return generators.selfadjoint_residual(X), linalg.frobenius_norm(X)


def _res_psd(H):
    return generators.positivity_residual(H), linalg.frobenius_norm(H)


def _val_none(bundle):
    return {}


def _val_thm1(bundle):
    _need(bundle, "A", "B", "C")
    return {
        "intertwine_A_B": _res_intertwine(_mod(bundle, "A").power(1.0),
                                          bundle.operators["B"]),
        "intertwine_Astar_C": _res_intertwine(_modstar(bundle, "A").power(1.0),
                                              bundle.operators["C"]),
    }


def _val_kittaneh_mixed(bundle):
    _need(bundle, "A", "B")
    return {"intertwine_A_B": _res_intertwine(_mod(bundle, "A").power(1.0),
                                              bundle.operators["B"])}


def _val_multi(count):
    def val(bundle):
        out = {}
        for i in range(1, count + 1):
            _need(bundle, f"A_{i}", f"B_{i}", f"C_{i}")
            out[f"intertwine_A_{i}_B_{i}"] = _res_intertwine(
                _mod(bundle, f"A_{i}").power(1.0), bundle.operators[f"B_{i}"])
            out[f"intertwine_Astar_{i}_C_{i}"] = _res_intertwine(
                _modstar(bundle, f"A_{i}").power(1.0), bundle.operators[f"C_{i}"])
        return out
    return val


def _val_ld(*checks):
    def val(bundle):
        _need(bundle, "T")
        ops = bundle.operators
        out = {}
        if "t_positive" in checks:
            out["t_positive"] = _res_psd(ops["T"])
        if "ts" in checks:
            _need(bundle, "S")
            out["ts_selfadjoint"] = _res_selfadjoint(ops["T"] @ ops["S"])
        if "tc" in checks:
            _need(bundle, "C")
            out["tc_selfadjoint"] = _res_selfadjoint(ops["T"] @ ops["C"])
        return out
    return val


def _val_ld4(bundle):
    _need(bundle, "A", "B")
    return {"a_selfadjoint": _res_selfadjoint(bundle.operators["A"]),
            "b_selfadjoint": _res_selfadjoint(bundle.operators["B"])}


def _val_reid(bundle):
    _need(bundle, "A", "B")
    return {"a_positive": _res_psd(bundle.operators["A"]),
            "ab_selfadjoint": _res_selfadjoint(
                bundle.operators["A"] @ bundle.operators["B"])}


def _val_psd_roles(*roles):
    def val(bundle):
        _need(bundle, *roles)
        return {f"{r.lower()}_positive": _res_psd(bundle.operators[r])
                for r in roles}
    return val


def _val_selfadjoint_roles(*roles):
    def val(bundle):
        _need(bundle, *roles)
        return {f"{r.lower()}_selfadjoint": _res_selfadjoint(bundle.operators[r])
                for r in roles}
    return val


def _val_self_intertwined_C(bundle):
    """|C*| C = C* |C*| (C as its own weight, Hermitian instances satisfy it)."""
    _need(bundle, "A")
    C = bundle.operators["A"]
    mod_star = _modstar(bundle, "A").power(1.0)
    return {"intertwine_Cstar_C": _res_intertwine(mod_star, C)}


def _val_cor9(bundle):
    _need(bundle, "A", "C")
    C = bundle.operators["C"]
    return {"intertwine_A_C": _res_intertwine(_mod(bundle, "A").power(1.0), C),
            "intertwine_Astar_C": _res_intertwine(
                _modstar(bundle, "A").power(1.0), C)}


def validate_bundle(spec: InequalitySpec, bundle: InstanceBundle) -> dict:
    """Recompute the hypothesis residuals; raise on the first failure."""
    residuals = spec.validator(bundle)
    for name, (resid, scale) in residuals.items():
        bound = CERT_RTOL * max(1.0, scale)
        if resid > bound:
            raise HypothesisViolated(name, resid, bound)
    return {k: v[0] for k, v in residuals.items()}


# ---------------------------------------------------------------------------
# parameter handling


def _check_params(spec: InequalitySpec, params: dict) -> dict:
    merged = {}
    for name, ps in spec.params.items():
        if name in params:
            v = float(params[name])
            if not ps.lo <= v <= ps.hi:
                raise ParamOutOfRange(
                    f"{spec.id}: parameter {name}={v} outside [{ps.lo}, {ps.hi}]")
            merged[name] = v
        else:
            merged[name] = float(ps.sweep[0])
    for name in params:
        if name not in spec.params and name != "pair":
            raise ParamOutOfRange(f"{spec.id}: unknown parameter {name!r}")
    if "pair" in params:
        merged["pair"] = params["pair"]
    return merged


def param_grid(spec: InequalitySpec, overrides: dict | None = None) -> list:
    """Campaign parameter combinations for one entry."""
    overrides = overrides or {}
    if spec.custom_grid is not None:
        return spec.custom_grid(overrides)
    axes = []
    for name, ps in spec.params.items():
        vals = list(ps.sweep)
        if not ps.pinned and overrides.get(name):
            sel = [float(v) for v in overrides[name] if ps.lo <= float(v) <= ps.hi]
            if sel:
                vals = sel
        axes.append((name, vals))
    combos = [{}]
    for name, vals in axes:
        combos = [dict(c, **{name: v}) for c in combos for v in vals]
    return combos


def _young_grid(overrides: dict) -> list:
    pairs = overrides.get("young") or [(1.0, 2.0), (1.5, 2.0), (1.5, 3.0),
                                       (2.0, 2.0), (2.0, 3.0)]
    out = []
    for p, ya in pairs:
        p, ya = float(p), float(ya)
        if p < 1.0 or ya <= 1.0:
            continue
        yb = ya / (ya - 1.0)
        if ya >= yb and yb * p >= 2.0 - 1e-12:
            out.append({"p": p, "yalpha": ya})
    if not out:
        raise ParamOutOfRange("young grid admits no (p, alpha) combination")
    return out


# ---------------------------------------------------------------------------
# result assembly


def _assemble(spec, form, vectors, tol, params, fingerprint) -> InequalityResult:
    lhs = float(form.lhs(vectors))
    rhs = [float(v) for v in form.rhs(vectors)]
    slack = rhs[0] - lhs
    rel = slack / max(1.0, abs(rhs[0]))
    sharp = lhs / rhs[0] if rhs[0] > 0.0 else None
    chain_ratio = None
    if len(rhs) > 1 and rhs[-1] > 0.0:
        chain_ratio = rhs[0] / rhs[-1]
    satisfied = slack >= -tol * max(1.0, abs(rhs[0]))
    monotone = all(rhs[i + 1] >= rhs[i] - tol * max(1.0, abs(rhs[i + 1]))
                   for i in range(len(rhs) - 1))
    shown = {k: v for k, v in params.items() if k != "pair"}
    if "pair" in params:
        shown["pair"] = params["pair"].name
    return InequalityResult(
        spec_id=spec.id, lhs=lhs, rhs_values=rhs, slack=slack,
        relative_slack=rel, sharpness=sharp, chain_ratio=chain_ratio,
        satisfied=satisfied, chain_monotone=monotone, tol=tol,
        params=shown, note=spec.note, fingerprint=fingerprint,
    )


def prepare_bound(spec: InequalitySpec, bundle: InstanceBundle,
                  params: dict, tol: float) -> BoundForm:
    base = spec.prepare(bundle, tol)
    return spec.bind(base, params)


def evaluate(spec_id: str, bundle: InstanceBundle, vectors: dict | None = None,
             params: dict | None = None, tol: float = DEFAULT_TOL,
             validate: bool = True, fingerprint: dict | None = None
             ) -> InequalityResult:
    """Evaluate one registry entry on an instance.

    vectors maps the entry's vector names to unit vectors; entries
    without vector inputs ignore it.  params are merged with the entry
    defaults and range-checked.  validate=False skips the hypothesis
    validator (mutation studies only).
    """
    spec = get_spec(spec_id)
    merged = _check_params(spec, params or {})
    if validate:
        validate_bundle(spec, bundle)
    form = prepare_bound(spec, bundle, merged, tol)
    vs = tuple((vectors or {})[name] for name in spec.vector_names)
    return _assemble(spec, form, vs, tol, merged, fingerprint)


def sup_search(spec_id: str, bundle: InstanceBundle, params: dict | None = None,
               restarts: int = 4, rng: np.random.Generator | None = None,
               tol: float = DEFAULT_TOL, iters: int = 16,
               validate: bool = True, fingerprint: dict | None = None,
               form: BoundForm | None = None) -> InequalityResult:
    """Probe sharpness: maximize lhs/rhs over unit vectors.

    Stochastic ascent with adaptive step from warm starts (top singular
    pairs) and random restarts.  Returns the worst (smallest-slack)
    evaluation found; entries without vector inputs evaluate once.
    A prebuilt BoundForm skips the per-instance preparation.
    """
    spec = get_spec(spec_id)
    merged = _check_params(spec, params or {})
    if validate:
        validate_bundle(spec, bundle)
    if form is None:
        form = prepare_bound(spec, bundle, merged, tol)
    names = spec.vector_names
    if not names:
        return _assemble(spec, form, (), tol, merged, fingerprint)
    if rng is None:
        rng = generators.make_rng(0)
    n = bundle.n
    k = len(names)

    def ratio(vs):
        return form.lhs(vs) / max(form.first_rhs(vs), _TINY)

    best_val = -math.inf
    best_vs = None
    for s in range(max(1, restarts)):
        if s < len(form.warms):
            vs = tuple(form.warms[s])
        else:
            vs = tuple(generators.random_unit_vector(n, rng) for _ in range(k))
        cur = ratio(vs)
        sigma = 0.5
        picks = rng.integers(0, k, size=iters)
        noise = rng.standard_normal((iters, 2 * n))
        rejected = 0
        for it in range(iters):
            j = int(picks[it])
            cand = vs[j] + sigma * (noise[it, :n] + 1j * noise[it, n:])
            nc = vec_norm(cand)
            if nc < 1e-12:
                continue
            prop = vs[:j] + (cand / nc,) + vs[j + 1:]
            val = ratio(prop)
            if val > cur:
                cur = val
                vs = prop
                sigma = min(1.0, sigma * 1.4)
                rejected = 0
            else:
                sigma = max(1e-4, sigma * 0.6)
                rejected += 1
                if rejected >= 10 and sigma <= 2e-3:
                    break  # converged: ten rejections at a tiny step
        if cur > best_val:
            best_val = cur
            best_vs = vs
    return _assemble(spec, form, best_vs, tol, merged, fingerprint)


# ---------------------------------------------------------------------------
# the registry
#
# Helper: entries are defined bottom-up with (prepare, bind) pairs.
# prepare(bundle, tol) does the heavy per-instance work once; bind
# closes over the parameter combination.


def _rho(norm_M: float, norm_M2: float) -> float:
    """The recurring weight (||M|| + ||M^2||^(1/2)) / 2."""
    return 0.5 * (norm_M + math.sqrt(norm_M2))


def _kittaneh_sum_bound(na: float, nb: float, cross: float) -> float:
    """(na + nb + sqrt((na - nb)^2 + 4 cross^2)) / 2, the PSD sum estimate."""
    return 0.5 * (na + nb + math.sqrt((na - nb) ** 2 + 4.0 * cross * cross))


# --- SCHWARZ_POS ---

def _prep_schwarz(bundle, tol):
    A = bundle.operators["A"]
    e = linalg.hermitian_eigen(0.5 * (A + _adj(A)))
    top = e.vectors[:, -1]
    return {"A": A, "top": top}


def _bind_schwarz(base, params):
    A = base["A"]
    top = base["top"]

    def lhs(vs):
        x, y = vs
        return abs(inner(A @ x, y)) ** 2

    def rhs(vs):
        x, y = vs
        return [_re(inner(A @ x, x)) * _re(inner(A @ y, y))]

    return BoundForm(lhs, rhs, warms=[(top, top)])


_register(
    id="SCHWARZ_POS",
    statement="|<Ax,y>|^2 <= <Ax,x> <Ay,y> for positive A",
    recipe="psd", roles=("A",), vector_names=("x", "y"),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_psd_roles("A"),
    prepare=_prep_schwarz, bind=_bind_schwarz,
)


# --- REID / HALMOS_REID ---

def _prep_reid(bundle, tol):
    A, B = bundle.operators["A"], bundle.operators["B"]
    return {"A": A, "AB": A @ B, "normB": _norm(B), "rB": _srad(bundle, "B")}


def _bind_reid(coef_key):
    def bind(base, params):
        A, AB = base["A"], base["AB"]
        coef = base[coef_key]

        def lhs(vs):
            return abs(inner(AB @ vs[0], vs[0]))

        def rhs(vs):
            return [coef * _re(inner(A @ vs[0], vs[0]))]

        v, _ = _sv_pair(AB)
        return BoundForm(lhs, rhs, warms=[(v,)])
    return bind


_register(
    id="REID",
    statement="|<ABx,x>| <= ||B|| <Ax,x> for positive A with AB selfadjoint (Reid)",
    recipe="reid", roles=("A", "B"), vector_names=("x",),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_reid, prepare=_prep_reid, bind=_bind_reid("normB"),
)

_register(
    id="HALMOS_REID",
    statement="|<ABx,x>| <= r(B) <Ax,x> for positive A with AB selfadjoint (Halmos)",
    recipe="reid", roles=("A", "B"), vector_names=("x",),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_reid, prepare=_prep_reid, bind=_bind_reid("rB"),
)


# --- KATO ---

def _prep_kato(bundle, tol):
    return {"A": bundle.operators["A"], "mod": _mod(bundle, "A"),
            "modstar": _modstar(bundle, "A")}


def _bind_kato(base, params):
    a = float(params["alpha"])
    A = base["A"]
    M2a = base["mod"].power(2.0 * a)
    N2a = base["modstar"].power(2.0 * (1.0 - a))

    def lhs(vs):
        x, y = vs
        return abs(inner(A @ x, y)) ** 2

    def rhs(vs):
        x, y = vs
        return [_re(inner(M2a @ x, x)) * _re(inner(N2a @ y, y))]

    return BoundForm(lhs, rhs, warms=[_sv_pair(A)])


_register(
    id="KATO",
    statement="|<Ax,y>|^2 <= <|A|^(2a) x,x> <|A*|^(2-2a) y,y> (Kato)",
    recipe="ginibre", roles=("A",), vector_names=("x", "y"),
    params={"alpha": ParamSpec((0.25, 0.75), 0.0, 1.0)},
    chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_kato, bind=_bind_kato,
)


# --- KITTANEH_MIXED ---

def _prep_kmixed(bundle, tol):
    A, B = bundle.operators["A"], bundle.operators["B"]
    return {"AB": A @ B, "rB": _srad(bundle, "B"),
            "mod": _mod(bundle, "A"), "modstar": _modstar(bundle, "A")}


def _bind_kmixed(base, params):
    pair = _pair_from(params)
    fA = base["mod"].fpow(pair.f, 1.0)
    gAs = base["modstar"].fpow(pair.g, 1.0)
    AB, rB = base["AB"], base["rB"]

    def lhs(vs):
        x, y = vs
        return abs(inner(AB @ x, y))

    def rhs(vs):
        x, y = vs
        return [rB * vec_norm(fA @ x) * vec_norm(gAs @ y)]

    return BoundForm(lhs, rhs, warms=[_sv_pair(AB)])


_register(
    id="KITTANEH_MIXED",
    statement="|<ABx,y>| <= r(B) ||f(|A|)x|| ||g(|A*|)y|| for |A|B = B*|A| (Kittaneh)",
    recipe="thm1", roles=("A", "B"), vector_names=("x", "y"),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True)},
    chain_len=1, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_kittaneh_mixed, prepare=_prep_kmixed, bind=_bind_kmixed,
)


# --- LD1..LD4 ---

def _prep_ld(bundle, tol):
    ops = bundle.operators
    base = {"T": ops["T"]}
    if "S" in ops:
        base["TS"] = ops["T"] @ ops["S"]
        base["rS"] = _srad(bundle, "S")
    if "C" in ops:
        base["C"] = ops["C"]
        base["rC"] = _srad(bundle, "C")
    base["rT"] = _srad(bundle, "T")
    return base


def _bind_ld1(base, params):
    T, rT = base["T"], base["rT"]

    def lhs(vs):
        x, y = vs
        return abs(inner(T @ x, y)) ** 2

    def rhs(vs):
        x, y = vs
        return [rT * _re(inner(T @ x, x)) * vec_norm(y) ** 2]

    return BoundForm(lhs, rhs, warms=[_sv_pair(T)])


def _bind_ld2(base, params):
    T, TS, C = base["T"], base["TS"], base["C"]
    coef = base["rS"] * base["rC"]

    def lhs(vs):
        x, y = vs
        return abs(inner(TS @ x, C @ y))

    def rhs(vs):
        x, y = vs
        tx = max(_re(inner(T @ x, x)), 0.0)
        ty = max(_re(inner(T @ y, y)), 0.0)
        return [coef * math.sqrt(tx) * math.sqrt(ty)]

    return BoundForm(lhs, rhs, warms=[_sv_pair(_adj(C) @ TS)])


def _bind_ld3(base, params):
    T, TS, C = base["T"], base["TS"], base["C"]
    coef = base["rS"] * base["rC"]

    def lhs(vs):
        return abs(inner(TS @ vs[0], C @ vs[0]))

    def rhs(vs):
        return [coef * _re(inner(T @ vs[0], vs[0]))]

    v, _ = _sv_pair(_adj(C) @ TS)
    return BoundForm(lhs, rhs, warms=[(v,)])


def _prep_ld4(bundle, tol):
    ops = bundle.operators
    return {"A": ops["A"], "B": ops["B"],
            "rA": _srad(bundle, "A"), "rB": _srad(bundle, "B")}


def _bind_ld4(base, params):
    A, B = base["A"], base["B"]
    coef = base["rA"] * base["rB"]

    def lhs(vs):
        x, y = vs
        return abs(inner(A @ x, B @ y)) ** 2

    def rhs(vs):
        x, y = vs
        return [coef * vec_norm(A @ x) * vec_norm(B @ y)
                * vec_norm(x) * vec_norm(y)]

    return BoundForm(lhs, rhs, warms=[_sv_pair(_adj(B) @ A)])


_register(
    id="LD1",
    statement="|<Tx,y>|^2 <= r(T) <Tx,x> ||y||^2 for positive T (Lin-Dragomir)",
    recipe="ld", roles=("T",), vector_names=("x", "y"),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_ld("t_positive"), prepare=_prep_ld, bind=_bind_ld1,
)

_register(
    id="LD2",
    statement="|<TSx,Cy>| <= r(S) r(C) <Tx,x>^(1/2) <Ty,y>^(1/2) for positive T, "
              "TS and TC selfadjoint (Lin-Dragomir)",
    recipe="ld", roles=("T", "S", "C"), vector_names=("x", "y"),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_ld("t_positive", "ts", "tc"), prepare=_prep_ld, bind=_bind_ld2,
)

_register(
    id="LD3",
    statement="|<TSx,Cx>| <= r(S) r(C) <Tx,x> for positive T, TS and TC selfadjoint",
    recipe="ld", roles=("T", "S", "C"), vector_names=("x",),
    params={}, chain_len=1, asserted=True,
    note="printed source drops C from the left-hand side, which is false as "
         "stated; evaluated in the consistent reading with y = Cx",
    validator=_val_ld("t_positive", "ts", "tc"), prepare=_prep_ld, bind=_bind_ld3,
)

_register(
    id="LD4",
    statement="|<Ax,By>|^2 <= r(A) r(B) ||Ax|| ||By|| ||x|| ||y|| for selfadjoint "
              "A, B (Lin-Dragomir)",
    recipe="ld", roles=("A", "B"), vector_names=("x", "y"),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_ld4, prepare=_prep_ld4, bind=_bind_ld4,
)


# --- numerical radius entries on a single generic operator ---

def _prep_single(bundle, tol):
    A = bundle.operators["A"]
    return {"A": A, "tol": tol}


def _bind_sandwich(base, params):
    A, tol = base["A"], base["tol"]
    na = _norm(A)
    wa = _w(A, tol)
    return BoundForm(lambda vs: 0.5 * na, lambda vs: [wa, na])


_register(
    id="NORM_RADIUS_SANDWICH",
    statement="||T||/2 <= w(T) <= ||T||",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={}, chain_len=2, asserted=True, note="",
    validator=_val_none, prepare=_prep_single, bind=_bind_sandwich,
)


def _bind_k2003(base, params):
    A, tol = base["A"], base["tol"]
    wa = _w(A, tol)
    bound = 0.5 * (_norm(A) + math.sqrt(_norm(A @ A)))
    return BoundForm(lambda vs: wa, lambda vs: [bound])


_register(
    id="KITTANEH_2003",
    statement="w(T) <= (||T|| + ||T^2||^(1/2)) / 2 (Kittaneh 2003)",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_single, bind=_bind_k2003,
)


def _bind_k2005_lower(base, params):
    A, tol = base["A"], base["tol"]
    m = _norm(_adj(A) @ A + A @ _adj(A))
    w2 = _w(A, tol) ** 2
    return BoundForm(lambda vs: 0.25 * m, lambda vs: [w2])


def _bind_k2005_upper(base, params):
    A, tol = base["A"], base["tol"]
    m = _norm(_adj(A) @ A + A @ _adj(A))
    w2 = _w(A, tol) ** 2
    return BoundForm(lambda vs: w2, lambda vs: [0.5 * m])


_register(
    id="KITTANEH_2005_LOWER",
    statement="||A*A + AA*||/4 <= w(A)^2 (Kittaneh 2005)",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_single, bind=_bind_k2005_lower,
)

_register(
    id="KITTANEH_2005_UPPER",
    statement="w(A)^2 <= ||A*A + AA*||/2 (Kittaneh 2005)",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_single, bind=_bind_k2005_upper,
)


def _bind_yamazaki(base, params):
    A, tol = base["A"], base["tol"]
    wa = _w(A, tol)
    w_tilde = _w(radii.aluthge(A), tol)
    na = _norm(A)
    v1 = 0.5 * (na + w_tilde)
    v2 = 0.5 * (na + math.sqrt(_norm(A @ A)))
    return BoundForm(lambda vs: wa, lambda vs: [v1, v2])


_register(
    id="YAMAZAKI",
    statement="w(T) <= (||T|| + w(aluthge(T)))/2 <= (||T|| + ||T^2||^(1/2))/2 "
              "(Yamazaki 2007)",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={}, chain_len=2, asserted=True, note="",
    validator=_val_none, prepare=_prep_single, bind=_bind_yamazaki,
)


def _bind_db(corrected):
    def bind(base, params):
        A, tol = base["A"], base["tol"]
        w2 = _w(A, tol) ** 2
        wsq = _w(A @ A, tol)
        na = _norm(A)
        first = na * na if corrected else na
        return BoundForm(lambda vs: w2, lambda vs: [0.5 * (first + wsq)])
    return bind


_register(
    id="DRAGOMIR_BUZANO_PRINTED",
    statement="w(T)^2 <= (||T|| + w(T^2))/2, as printed (Dragomir 2008)",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={}, chain_len=1, asserted=False,
    note="not homogeneous under scaling; measured and reported, never asserted",
    validator=_val_none, prepare=_prep_single, bind=_bind_db(False),
)

_register(
    id="DRAGOMIR_BUZANO_CORRECTED",
    statement="w(T)^2 <= (||T||^2 + w(T^2))/2, homogeneity-corrected (Dragomir 2008)",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_single, bind=_bind_db(True),
)


# --- LEMMA_DCV ---

def _prep_dcv(bundle, tol):
    ops = bundle.operators
    return {"A": ops["A"], "D": ops["D"], "C": ops["C"],
            "mod": _mod(bundle, "A"), "modstar": _modstar(bundle, "A")}


def _bind_dcv(base, params):
    pair = _pair_from(params)
    A, D, C = base["A"], base["D"], base["C"]
    F2 = _adj(D) @ base["mod"].fpow(pair.f, 2.0) @ D
    G2 = _adj(C) @ base["modstar"].fpow(pair.g, 2.0) @ C
    AD = A @ D

    def lhs(vs):
        u, v = vs
        return abs(inner(AD @ u, C @ v)) ** 2

    def rhs(vs):
        u, v = vs
        return [_re(inner(F2 @ u, u)) * _re(inner(G2 @ v, v))]

    return BoundForm(lhs, rhs, warms=[_sv_pair(_adj(C) @ AD)])


_register(
    id="LEMMA_DCV",
    statement="|<ADu,Cv>|^2 <= <D* f^2(|A|) D u,u> <C* g^2(|A*|) C v,v>",
    recipe="ginibre_triple", roles=("A", "D", "C"), vector_names=("u", "v"),
    params={"alpha": ParamSpec((0.25, 0.75), 0.0, 1.0)},
    chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_dcv, bind=_bind_dcv,
)


# --- GEN_MIXED_SCHWARZ and its presets ---

def _prep_gen(bundle, tol):
    ops = bundle.operators
    A, B, C = ops["A"], ops["B"], ops["C"]
    return {"A": A, "B": B, "C": C, "AB": A @ B,
            "rB": _srad(bundle, "B"), "rC": _srad(bundle, "C"),
            "mod": _mod(bundle, "A"), "modstar": _modstar(bundle, "A")}


def _bind_gen(base, params):
    pair = _pair_from(params)
    fA = base["mod"].fpow(pair.f, 1.0)
    gAs = base["modstar"].fpow(pair.g, 1.0)
    AB, C = base["AB"], base["C"]
    coef = base["rB"] * base["rC"]

    def lhs(vs):
        x, u = vs
        return abs(inner(AB @ x, C @ u))

    def rhs(vs):
        x, u = vs
        return [coef * vec_norm(fA @ x) * vec_norm(gAs @ u)]

    return BoundForm(lhs, rhs, warms=[_sv_pair(_adj(C) @ AB)])


_register(
    id="GEN_MIXED_SCHWARZ",
    statement="|<ABx,Cu>| <= r(B) r(C) ||f(|A|)x|| ||g(|A*|)u|| for "
              "|A|B = B*|A|, |A*|C = C*|A*|",
    recipe="thm1", roles=("A", "B", "C"), vector_names=("x", "u"),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True)},
    chain_len=1, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_thm1, prepare=_prep_gen, bind=_bind_gen,
)


def _prep_cor1(bundle, tol):
    ops = bundle.operators
    return {"A": ops["A"], "C": ops["C"], "rC": _srad(bundle, "C"),
            "mod": _mod(bundle, "A"), "modstar": _modstar(bundle, "A")}


def _bind_cor1(base, params):
    pair = _pair_from(params)
    fA = base["mod"].fpow(pair.f, 1.0)
    gAs = base["modstar"].fpow(pair.g, 1.0)
    A, C, rC = base["A"], base["C"], base["rC"]

    def lhs(vs):
        x, u = vs
        return abs(inner(A @ x, C @ u))

    def rhs(vs):
        x, u = vs
        return [rC * vec_norm(fA @ x) * vec_norm(gAs @ u)]

    return BoundForm(lhs, rhs, warms=[_sv_pair(_adj(C) @ A)])


def _val_cor1(bundle):
    _need(bundle, "A", "C")
    return {"intertwine_Astar_C": _res_intertwine(
        _modstar(bundle, "A").power(1.0), bundle.operators["C"])}


_register(
    id="COR1",
    statement="|<Ax,Cu>| <= r(C) ||f(|A|)x|| ||g(|A*|)u|| for |A*|C = C*|A*| "
              "(B = identity preset)",
    recipe="thm1", roles=("A", "C"), vector_names=("x", "u"),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True)},
    chain_len=1, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_cor1, prepare=_prep_cor1, bind=_bind_cor1,
)


def _bind_cor2(base, params):
    a = float(params["alpha"])
    M2a = base["mod"].power(2.0 * a)
    N2a = base["modstar"].power(2.0 * (1.0 - a))
    AB, C = base["AB"], base["C"]
    coef = (base["rB"] * base["rC"]) ** 2

    def lhs(vs):
        x, u = vs
        return abs(inner(AB @ x, C @ u)) ** 2

    def rhs(vs):
        x, u = vs
        return [coef * _re(inner(M2a @ x, x)) * _re(inner(N2a @ u, u))]

    return BoundForm(lhs, rhs, warms=[_sv_pair(_adj(C) @ AB)])


_register(
    id="COR2",
    statement="|<ABx,Cu>|^2 <= r(B)^2 r(C)^2 <|A|^(2a)x,x> <|A*|^(2-2a)u,u> "
              "(power preset)",
    recipe="thm1", roles=("A", "B", "C"), vector_names=("x", "u"),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True)},
    chain_len=1, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_thm1, prepare=_prep_gen, bind=_bind_cor2,
)


def _prep_cor2p(bundle, tol):
    ops = bundle.operators
    return {"B": ops["B"], "C": ops["C"],
            "rB": _srad(bundle, "B"), "rC": _srad(bundle, "C")}


def _bind_cor2p(base, params):
    B, C = base["B"], base["C"]
    coef = base["rB"] * base["rC"]

    def lhs(vs):
        x, u = vs
        return abs(inner(B @ x, C @ u))

    def rhs(vs):
        return [coef]

    return BoundForm(lhs, rhs, warms=[_sv_pair(_adj(C) @ B)])


_register(
    id="COR2_PARTICULAR",
    statement="|<Bx,Cu>| <= r(B) r(C) for unit x, u (A = identity case)",
    recipe="hermitian_pair", roles=("B", "C"), vector_names=("x", "u"),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_selfadjoint_roles("B", "C"),
    prepare=_prep_cor2p, bind=_bind_cor2p,
)


# --- COR3 / COR4 (two certified triples from multi:2) ---

def _prep_cor3(bundle, tol):
    ops = bundle.operators
    base = {}
    T = None
    for i in (1, 2):
        term = _adj(ops[f"C_{i}"]) @ ops[f"A_{i}"] @ ops[f"B_{i}"]
        T = term if T is None else T + term
        base[f"coef{i}"] = _srad(bundle, f"B_{i}") * _srad(bundle, f"C_{i}")
        base[f"mod{i}"] = _mod(bundle, f"A_{i}")
        base[f"modstar{i}"] = _modstar(bundle, f"A_{i}")
    base["Tsum"] = T
    return base


def _cor3_terms(base, params):
    pair = _pair_from(params)
    fs = [base[f"mod{i}"].fpow(pair.f, 1.0) for i in (1, 2)]
    gs = [base[f"modstar{i}"].fpow(pair.g, 1.0) for i in (1, 2)]
    coefs = [base["coef1"], base["coef2"]]
    return fs, gs, coefs


def _bind_cor3(base, params):
    fs, gs, coefs = _cor3_terms(base, params)
    p = float(params["p"])
    q = p / (p - 1.0)
    T = base["Tsum"]

    def lhs(vs):
        x, u = vs
        return abs(inner(T @ x, u))

    def rhs(vs):
        x, u = vs
        fn = [vec_norm(F @ x) for F in fs]
        gn = [vec_norm(G @ u) for G in gs]
        v1 = coefs[0] * fn[0] * gn[0] + coefs[1] * fn[1] * gn[1]
        v2 = (max(coefs) * (fn[0] ** p + fn[1] ** p) ** (1.0 / p)
              * (gn[0] ** q + gn[1] ** q) ** (1.0 / q))
        return [v1, v2]

    def rhs0(vs):
        x, u = vs
        return (coefs[0] * vec_norm(fs[0] @ x) * vec_norm(gs[0] @ u)
                + coefs[1] * vec_norm(fs[1] @ x) * vec_norm(gs[1] @ u))

    return BoundForm(lhs, rhs, warms=[_sv_pair(T)], rhs0=rhs0)


_register(
    id="COR3",
    statement="|<(C1*AB1 + C2*DB2)x,u>| <= sum of two mixed Schwarz terms "
              "<= max coef * Hoelder combination",
    recipe="multi:2",
    roles=("A_1", "B_1", "C_1", "A_2", "B_2", "C_2"),
    vector_names=("x", "u"),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True),
            "p": ParamSpec((2.0, 3.0), 1.0 + 1e-9, 64.0)},
    chain_len=2, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_multi(2), prepare=_prep_cor3, bind=_bind_cor3,
)


def _bind_cor4(base, params):
    fs, gs, coefs = _cor3_terms(base, params)
    T = base["Tsum"]

    def lhs(vs):
        x, u = vs
        return abs(inner(T @ x, u)) ** 2

    def rhs(vs):
        x, u = vs
        v1 = (coefs[0] * vec_norm(fs[0] @ x) * vec_norm(gs[0] @ u)
              + coefs[1] * vec_norm(fs[1] @ x) * vec_norm(gs[1] @ u))
        return [v1 * v1]

    return BoundForm(lhs, rhs, warms=[_sv_pair(T)])


_register(
    id="COR4",
    statement="|<(C1*AB1 + C2*DB2)x,u>|^2 <= (sum of two mixed Schwarz terms)^2 "
              "(squared power preset)",
    recipe="multi:2",
    roles=("A_1", "B_1", "C_1", "A_2", "B_2", "C_2"),
    vector_names=("x", "u"),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True)},
    chain_len=1, asserted=True,
    note="printed source squares the terms individually, which fails the "
         "Cauchy-Schwarz expansion; evaluated as the square of the sum",
    validator=_val_multi(2), prepare=_prep_cor3, bind=_bind_cor4,
)


# --- MULTI_OP family (k = 3 triples) ---

_MULTI_K = 3


def _prep_multi(bundle, tol):
    ops = bundle.operators
    k = sum(1 for key in ops if key.startswith("A_"))
    base = {"k": k, "tol": tol}
    T = None
    for i in range(1, k + 1):
        term = _adj(ops[f"C_{i}"]) @ ops[f"A_{i}"] @ ops[f"B_{i}"]
        T = term if T is None else T + term
        base[f"coef{i}"] = _srad(bundle, f"B_{i}") * _srad(bundle, f"C_{i}")
        base[f"mod{i}"] = _mod(bundle, f"A_{i}")
        base[f"modstar{i}"] = _modstar(bundle, f"A_{i}")
    base["Tsum"] = T
    return base


def _multi_terms(base, params, identity_weights=False):
    pair = _pair_from(params)
    k = base["k"]
    fs = [base[f"mod{i}"].fpow(pair.f, 1.0) for i in range(1, k + 1)]
    gs = [base[f"modstar{i}"].fpow(pair.g, 1.0) for i in range(1, k + 1)]
    fnorms = [base[f"mod{i}"].norm_fpow(pair.f, 1.0) for i in range(1, k + 1)]
    gnorms = [base[f"modstar{i}"].norm_fpow(pair.g, 1.0) for i in range(1, k + 1)]
    coefs = ([1.0] * k if identity_weights
             else [base[f"coef{i}"] for i in range(1, k + 1)])
    return fs, gs, fnorms, gnorms, coefs


def _bind_multi_vec(base, params):
    fs, gs, _, _, coefs = _multi_terms(base, params)
    p = float(params["p"])
    q = p / (p - 1.0)
    T = base["Tsum"]

    def lhs(vs):
        x, u = vs
        return abs(inner(T @ x, u))

    def rhs(vs):
        x, u = vs
        fn = [vec_norm(F @ x) for F in fs]
        gn = [vec_norm(G @ u) for G in gs]
        v1 = sum(c * a * b for c, a, b in zip(coefs, fn, gn))
        v2 = (max(coefs) * sum(a ** p for a in fn) ** (1.0 / p)
              * sum(b ** q for b in gn) ** (1.0 / q))
        return [v1, v2]

    def rhs0(vs):
        x, u = vs
        return sum(c * vec_norm(F @ x) * vec_norm(G @ u)
                   for c, F, G in zip(coefs, fs, gs))

    return BoundForm(lhs, rhs, warms=[_sv_pair(T)], rhs0=rhs0)


_register(
    id="MULTI_OP",
    statement="|<sum_i Ci*AiBi x,u>| <= sum_i r(Bi) r(Ci) ||f(|Ai|)x|| ||g(|Ai*|)u|| "
              "<= max_i r(Bi)r(Ci) * Hoelder combination",
    recipe=f"multi:{_MULTI_K}",
    roles=tuple(f"{L}_{i}" for i in range(1, _MULTI_K + 1) for L in "ABC"),
    vector_names=("x", "u"),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True),
            "p": ParamSpec((2.0,), 1.0 + 1e-9, 64.0)},
    chain_len=2, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_multi(_MULTI_K), prepare=_prep_multi, bind=_bind_multi_vec,
)


def _bind_multi_norm(base, params):
    _, _, fnorms, gnorms, coefs = _multi_terms(base, params)
    p = float(params["p"])
    q = p / (p - 1.0)
    nT = _norm(base["Tsum"])
    bound = (max(coefs) * sum(a ** p for a in fnorms) ** (1.0 / p)
             * sum(b ** q for b in gnorms) ** (1.0 / q))
    return BoundForm(lambda vs: nT, lambda vs: [bound])


def _prep_multi_id(bundle, tol):
    """Identity-weight case: only the A_i and their moduli matter."""
    ops = bundle.operators
    k = sum(1 for key in ops if key.startswith("A_"))
    base = {"k": k}
    T = None
    for i in range(1, k + 1):
        T = ops[f"A_{i}"] if T is None else T + ops[f"A_{i}"]
        base[f"mod{i}"] = _mod(bundle, f"A_{i}")
        base[f"modstar{i}"] = _modstar(bundle, f"A_{i}")
    base["Tsum_id"] = T
    return base


def _bind_multi_id(base, params):
    a = float(params["alpha"])
    p = float(params["p"])
    q = p / (p - 1.0)
    k = base["k"]
    fnorms = [base[f"mod{i}"].norm_power(a) for i in range(1, k + 1)]
    gnorms = [base[f"modstar{i}"].norm_power(1.0 - a) for i in range(1, k + 1)]
    nT = _norm(base["Tsum_id"])
    bound = (sum(v ** p for v in fnorms) ** (1.0 / p)
             * sum(v ** q for v in gnorms) ** (1.0 / q))
    return BoundForm(lambda vs: nT, lambda vs: [bound])


_register(
    id="MULTI_OP_NORM",
    statement="||sum_i Ci*AiBi|| <= max_i r(Bi)r(Ci) * (sum_i ||f(|Ai|)||^p)^(1/p) "
              "(sum_i ||g(|Ai*|)||^q)^(1/q)",
    recipe=f"multi:{_MULTI_K}",
    roles=tuple(f"{L}_{i}" for i in range(1, _MULTI_K + 1) for L in "ABC"),
    vector_names=(),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True),
            "p": ParamSpec((2.0,), 1.0 + 1e-9, 64.0)},
    chain_len=1, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_multi(_MULTI_K), prepare=_prep_multi,
    bind=_bind_multi_norm,
)

_register(
    id="MULTI_OP_NORM_ID",
    statement="||sum_i Ai|| <= (sum_i |||Ai|^a||^p)^(1/p) "
              "(sum_i |||Ai*|^(1-a)||^q)^(1/q) (identity-weight power case)",
    recipe=f"multi:{_MULTI_K}",
    roles=tuple(f"A_{i}" for i in range(1, _MULTI_K + 1)),
    vector_names=(),
    params={"alpha": ParamSpec((0.25, 0.5, 0.75), 0.0, 1.0),
            "p": ParamSpec((2.0,), 1.0 + 1e-9, 64.0)},
    chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_multi_id, bind=_bind_multi_id,
)


# --- HYBRID family (Cartesian split) ---

def _prep_hybrid(bundle, tol):
    A = bundle.operators["A"]
    parts = linalg.cartesian(A)
    return {"A": A, "tol": tol,
            "modP": _ModCalc.of_hermitian_abs(parts.real_part),
            "modQ": _ModCalc.of_hermitian_abs(parts.imag_part)}


def _hybrid_sum(base, pair):
    fP = base["modP"].fpow(pair.f, 1.0)
    gP = base["modP"].fpow(pair.g, 1.0)
    fQ = base["modQ"].fpow(pair.f, 1.0)
    gQ = base["modQ"].fpow(pair.g, 1.0)

    def total(x, y):
        return (vec_norm(fP @ x) * vec_norm(gP @ y)
                + vec_norm(fQ @ x) * vec_norm(gQ @ y))
    return total


def _bind_hybrid(base, params):
    pair = _pair_from(params)
    A = base["A"]
    total = _hybrid_sum(base, pair)

    def lhs(vs):
        x, y = vs
        return abs(inner(A @ x, y))

    def rhs(vs):
        x, y = vs
        return [total(x, y)]

    return BoundForm(lhs, rhs, warms=[_sv_pair(A)])


def _bind_hybrid_kato(base, params):
    pair = _pair_from(params)
    A = base["A"]
    total = _hybrid_sum(base, pair)

    def lhs(vs):
        x, y = vs
        return abs(inner(A @ x, y)) ** 2

    def rhs(vs):
        x, y = vs
        return [total(x, y) ** 2]

    return BoundForm(lhs, rhs, warms=[_sv_pair(A)])


_register(
    id="HYBRID",
    statement="|<Ax,y>| <= ||f(|P|)x|| ||g(|P|)y|| + ||f(|Q|)x|| ||g(|Q|)y|| "
              "for the Cartesian split A = P + iQ",
    recipe="ginibre", roles=("A",), vector_names=("x", "y"),
    params={"alpha": ParamSpec((0.25, 0.75), 0.0, 1.0)},
    chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_hybrid, bind=_bind_hybrid,
)

_register(
    id="HYBRID_POWER",
    statement="|<Ax,y>| <= |||P|^a x|| |||P|^(1-a) y|| + |||Q|^a x|| |||Q|^(1-a) y||",
    recipe="ginibre", roles=("A",), vector_names=("x", "y"),
    params={"alpha": ParamSpec((0.25, 0.75), 0.0, 1.0)},
    chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_hybrid, bind=_bind_hybrid,
)

_register(
    id="HYBRID_KATO",
    statement="|<Ax,y>|^2 <= (|||P|^a x|| |||P|^(1-a) y|| + |||Q|^a x|| "
              "|||Q|^(1-a) y||)^2 (Cartesian companion of Kato)",
    recipe="ginibre", roles=("A",), vector_names=("x", "y"),
    params={"alpha": ParamSpec((0.25, 0.75), 0.0, 1.0)},
    chain_len=1, asserted=True,
    note="printed source keeps only the two squared products, which fails the "
         "Cauchy-Schwarz expansion; evaluated with the cross term kept",
    validator=_val_none, prepare=_prep_hybrid, bind=_bind_hybrid_kato,
)


# --- scalar lemmas ---

def _prep_scalars(bundle, tol):
    return {"a": bundle.scalars["a"], "b": bundle.scalars["b"]}


def _bind_power_young(base, params):
    a, b = base["a"], base["b"]
    ya = float(params["yalpha"])
    yb = ya / (ya - 1.0)
    p = float(params["p"])
    v1 = a ** ya / ya + b ** yb / yb
    v2 = (a ** (p * ya) / ya + b ** (p * yb) / yb) ** (1.0 / p)
    return BoundForm(lambda vs: a * b, lambda vs: [v1, v2])


_register(
    id="POWER_YOUNG",
    statement="ab <= a^alpha/alpha + b^beta/beta <= (a^(p alpha)/alpha + "
              "b^(p beta)/beta)^(1/p) for conjugate alpha, beta and p >= 1",
    recipe="scalar_pair", roles=(), vector_names=(),
    params={"yalpha": ParamSpec((2.0, 3.0), 1.0 + 1e-9, 64.0),
            "p": ParamSpec((1.0, 1.5, 2.0), 1.0, 64.0)},
    chain_len=2, asserted=True, note="",
    validator=_val_none, prepare=_prep_scalars, bind=_bind_power_young,
)


def _prep_mccarty(bundle, tol):
    A = bundle.operators["A"]
    calc = _ModCalc.of_hermitian_abs(A)  # A is PSD: |A| = A
    e_top = calc.vecs[:, -1]
    return {"A": A, "calc": calc, "top": e_top}


def _bind_mccarty(base, params):
    p = float(params["p"])
    A = base["A"]
    Ap = base["calc"].power(p)

    def lhs(vs):
        x = vs[0]
        return max(_re(inner(A @ x, x)), 0.0) ** p

    def rhs(vs):
        x = vs[0]
        return [_re(inner(Ap @ x, x))]

    return BoundForm(lhs, rhs, warms=[(base["top"],)])


_register(
    id="MCCARTY",
    statement="<Ax,x>^p <= <A^p x,x> for positive A, unit x, p >= 1 (McCarty)",
    recipe="psd", roles=("A",), vector_names=("x",),
    params={"p": ParamSpec((1.5, 2.0, 3.0), 1.0, 64.0)},
    chain_len=1, asserted=True, note="",
    validator=_val_psd_roles("A"), prepare=_prep_mccarty, bind=_bind_mccarty,
)


# --- norm lemmas ---

def _prep_pair(bundle, tol):
    return {"A": bundle.operators["A"], "B": bundle.operators["B"], "tol": tol}


def _bind_spectral_product(base, params):
    A, B = base["A"], base["B"]
    r_ab = radii.spectral_radius(A @ B)
    nab, nba = _norm(A @ B), _norm(B @ A)
    m = min(_norm(A) * _norm(B @ A @ B), _norm(B) * _norm(A @ B @ A))
    bound = 0.25 * (nab + nba + math.sqrt((nab - nba) ** 2 + 4.0 * m))
    return BoundForm(lambda vs: r_ab, lambda vs: [bound])


_register(
    id="SPECTRAL_PRODUCT",
    statement="r(AB) <= (||AB|| + ||BA|| + sqrt((||AB||-||BA||)^2 + 4 m(A,B)))/4, "
              "m(A,B) = min(||A|| ||BAB||, ||B|| ||ABA||)",
    recipe="ginibre_pair", roles=("A", "B"), vector_names=(),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_pair, bind=_bind_spectral_product,
)


def _prep_psd_pair(bundle, tol):
    A, B = bundle.operators["A"], bundle.operators["B"]
    return {"A": A, "B": B,
            "calcA": _ModCalc.of_hermitian_abs(A),
            "calcB": _ModCalc.of_hermitian_abs(B)}


def _bind_norm_sum(base, params):
    A, B = base["A"], base["B"]
    na, nb = _norm(A), _norm(B)
    cross = _norm(base["calcA"].power(0.5) @ base["calcB"].power(0.5))
    bound = _kittaneh_sum_bound(na, nb, cross)
    return BoundForm(lambda vs: _norm(A + B), lambda vs: [bound, na + nb])


_register(
    id="NORM_SUM",
    statement="||A+B|| <= (||A|| + ||B|| + sqrt((||A||-||B||)^2 + "
              "4||A^(1/2)B^(1/2)||^2))/2 <= ||A|| + ||B|| for positive A, B",
    recipe="psd_pair", roles=("A", "B"), vector_names=(),
    params={}, chain_len=2, asserted=True, note="",
    validator=_val_psd_roles("A", "B"), prepare=_prep_psd_pair,
    bind=_bind_norm_sum,
)


def _bind_sqrt_product(base, params):
    A, B = base["A"], base["B"]
    lhs_val = _norm(base["calcA"].power(0.5) @ base["calcB"].power(0.5))
    bound = math.sqrt(_norm(A @ B))
    return BoundForm(lambda vs: lhs_val, lambda vs: [bound])


_register(
    id="SQRT_PRODUCT",
    statement="||A^(1/2) B^(1/2)|| <= ||AB||^(1/2) for positive A, B",
    recipe="psd_pair", roles=("A", "B"), vector_names=(),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_psd_roles("A", "B"), prepare=_prep_psd_pair,
    bind=_bind_sqrt_product,
)


# --- THM3 family: w(C*AB) bounds ---

def _prep_thm3(bundle, tol):
    ops = bundle.operators
    A, B, C = ops["A"], ops["B"], ops["C"]
    return {
        "tol": tol,
        "w": _w(_adj(C) @ A @ B, tol),
        "rB": _srad(bundle, "B"), "rC": _srad(bundle, "C"),
        "rhoB": _rho(_norm(B), _norm(B @ B)),
        "rhoC": _rho(_norm(C), _norm(C @ C)),
        "mod": _mod(bundle, "A"), "modstar": _modstar(bundle, "A"),
    }


def _thm3_values(base, pair, r_coef, rho_coef):
    mod, modstar = base["mod"], base["modstar"]
    F = mod.fpow(pair.f, 2.0)
    G = modstar.fpow(pair.g, 2.0)
    v1 = 0.5 * r_coef * _norm(F + G)
    nf = mod.norm_fpow(pair.f, 2.0)
    ng = modstar.norm_fpow(pair.g, 2.0)
    cross = _norm(mod.fpow(pair.f, 1.0) @ modstar.fpow(pair.g, 1.0))
    v2 = 0.25 * rho_coef * (nf + ng + math.sqrt((nf - ng) ** 2
                                                + 4.0 * cross * cross))
    return v1, v2


def _bind_thm3(base, params):
    pair = _pair_from(params)
    v1, v2 = _thm3_values(base, pair, base["rB"] * base["rC"],
                          base["rhoB"] * base["rhoC"])
    wv = base["w"]
    return BoundForm(lambda vs: wv, lambda vs: [v1, v2])


_THM3_STATEMENT = ("w(C*AB) <= r(B) r(C) ||f^2(|A|) + g^2(|A*|)||/2 <= "
                   "(||B||+||B^2||^(1/2))(||C||+||C^2||^(1/2)) {...}/16")

_register(
    id="THM3",
    statement=_THM3_STATEMENT,
    recipe="thm1", roles=("A", "B", "C"), vector_names=(),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True)},
    chain_len=2, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_thm1, prepare=_prep_thm3, bind=_bind_thm3,
)

_register(
    id="COR8",
    statement=_THM3_STATEMENT + " with the power pair f = t^a, g = t^(1-a)",
    recipe="thm1", roles=("A", "B", "C"), vector_names=(),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True)},
    chain_len=2, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_thm1, prepare=_prep_thm3, bind=_bind_thm3,
)


def _bind_remark_half(base, params):
    ops = base["ops"]
    A = ops["A"]
    bound = (0.125 * (2.0 * base["rhoB"]) * (2.0 * base["rhoC"])
             * (_norm(A) + math.sqrt(_norm(A @ A))))
    wv = base["w"]
    return BoundForm(lambda vs: wv, lambda vs: [bound])


def _prep_remark_half(bundle, tol):
    base = _prep_thm3(bundle, tol)
    base["ops"] = bundle.operators
    return base


_register(
    id="REMARK_HALF",
    statement="w(C*AB) <= (||B||+||B^2||^(1/2))(||C||+||C^2||^(1/2))"
              "(||A||+||A^2||^(1/2))/8 (alpha = 1/2 case)",
    recipe="thm1", roles=("A", "B", "C"), vector_names=(),
    params={}, chain_len=1, asserted=True, note="",
    validator=_val_thm1, prepare=_prep_remark_half, bind=_bind_remark_half,
)


def _prep_self_c(bundle, tol):
    C = bundle.operators["A"]  # hermitian recipe emits role A
    return {
        "tol": tol, "C": C,
        "w": _w(_adj(C) @ C, tol),
        "rC": _srad(bundle, "A"),
        "rhoC": _rho(_norm(C), _norm(C @ C)),
        "mod": _mod(bundle, "A"), "modstar": _modstar(bundle, "A"),
    }


def _bind_thm3_particular(base, params):
    # B = identity contributes rho(I) = 1 to the second chain value
    pair = _pair_from(params)
    v1, v2 = _thm3_values(base, pair, base["rC"], base["rhoC"])
    wv = base["w"]
    return BoundForm(lambda vs: wv, lambda vs: [v1, v2])


def _val_self_c(bundle):
    out = dict(_val_selfadjoint_roles("A")(bundle))
    out["intertwine_Cstar_C"] = _val_self_intertwined_C(bundle)["intertwine_Cstar_C"]
    return out


_register(
    id="THM3_PARTICULAR",
    statement="w(C*C) <= r(C) ||f^2(|C|) + g^2(|C*|)||/2 <= "
              "(||C||+||C^2||^(1/2)) {...}/8 for |C*|C = C*|C*|",
    recipe="hermitian", roles=("A",), vector_names=(),
    params={"alpha": ParamSpec((0.25, 0.5, 0.75), 0.0, 1.0)},
    chain_len=2, asserted=True,
    note="instances are selfadjoint, the natural family certified to satisfy "
         "the self-referential intertwining hypothesis",
    validator=_val_self_c, prepare=_prep_self_c, bind=_bind_thm3_particular,
)


def _bind_remark_cc(base, params):
    wv = base["w"]
    bound = (base["rhoC"] * 2.0) ** 2 / 4.0
    return BoundForm(lambda vs: wv, lambda vs: [bound])


_register(
    id="REMARK_CC",
    statement="w(C*C) <= (||C|| + ||C^2||^(1/2))^2 / 4 for |C*|C = C*|C*|",
    recipe="hermitian", roles=("A",), vector_names=(),
    params={}, chain_len=1, asserted=True,
    note="equality holds on selfadjoint instances since then ||C^2|| = ||C||^2",
    validator=_val_self_c, prepare=_prep_self_c, bind=_bind_remark_cc,
)


def _prep_cor9(bundle, tol):
    ops = bundle.operators
    A, C = ops["A"], ops["C"]
    return {
        "tol": tol,
        "w": _w(_adj(C) @ A @ C, tol),
        "rC": _srad(bundle, "C"),
        "rhoC": _rho(_norm(C), _norm(C @ C)),
        "mod": _mod(bundle, "A"), "modstar": _modstar(bundle, "A"),
    }


def _bind_cor9(base, params):
    pair = _pair_from(params)
    v1, v2 = _thm3_values(base, pair, base["rC"] ** 2, base["rhoC"] ** 2)
    wv = base["w"]
    return BoundForm(lambda vs: wv, lambda vs: [v1, v2])


_register(
    id="COR9",
    statement="w(C*AC) <= r(C)^2 ||f^2(|A|) + g^2(|A*|)||/2 <= "
              "(||C||+||C^2||^(1/2))^2 {...}/16 for C intertwined with both moduli",
    recipe="normal_pair", roles=("A", "C"), vector_names=(),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True)},
    chain_len=2, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_cor9, prepare=_prep_cor9, bind=_bind_cor9,
)


# --- THM4 / THM4_REFINED ---

def _bind_thm4(refined):
    def bind(base, params):
        # function pair pinned at the square-root split (see entry note)
        pair = params.get("pair") or _cached_power(0.5)
        p = float(params["p"])
        ya = float(params["yalpha"])
        yb = ya / (ya - 1.0)
        if ya < yb or yb * p < 2.0 - 1e-12:
            raise ParamOutOfRange(
                f"need alpha >= beta and beta*p >= 2, got alpha={ya}, p={p}")
        mod, modstar = base["mod"], base["modstar"]
        F = mod.fpow(pair.f, ya * p)
        G = modstar.fpow(pair.g, yb * p)
        coef = (base["rB"] * base["rC"]) ** p
        v1 = coef * _norm(F / ya + G / yb)
        wp = base["w"] ** p
        if not refined:
            return BoundForm(lambda vs: wp, lambda vs: [v1])
        gam = max(1.0 / ya, 1.0 / yb)
        nf = mod.norm_fpow(pair.f, ya * p)
        ng = modstar.norm_fpow(pair.g, yb * p)
        cross = _norm(mod.fpow(pair.f, ya * p / 2.0)
                      @ modstar.fpow(pair.g, yb * p / 2.0))
        v2 = (gam / 2.0 ** (p + 2.0) * (2.0 * base["rhoB"]) ** p
              * (2.0 * base["rhoC"]) ** p
              * (nf + ng + math.sqrt((nf - ng) ** 2 + 4.0 * cross * cross)))
        return BoundForm(lambda vs: wp, lambda vs: [v1, v2])
    return bind


_register(
    id="THM4",
    statement="w(C*AB)^p <= r(B)^p r(C)^p ||f^(alpha p)(|A|)/alpha + "
              "g^(beta p)(|A*|)/beta|| for conjugate alpha >= beta > 1, beta p >= 2",
    recipe="thm1", roles=("A", "B", "C"), vector_names=(),
    params={"p": ParamSpec((1.0,), 1.0, 64.0),
            "yalpha": ParamSpec((2.0,), 1.0 + 1e-9, 64.0)},
    chain_len=1, asserted=True,
    note="function pair pinned at the square-root split for the base-intertwined instances",
    validator=_val_thm1, prepare=_prep_thm3, bind=_bind_thm4(False),
    custom_grid=_young_grid,
)

_register(
    id="THM4_REFINED",
    statement="w(C*AB)^p <= ... <= gamma/2^(p+2) (||B||+||B^2||^(1/2))^p "
              "(||C||+||C^2||^(1/2))^p {norm-sum estimate}",
    recipe="thm1", roles=("A", "B", "C"), vector_names=(),
    params={"p": ParamSpec((1.0,), 1.0, 64.0),
            "yalpha": ParamSpec((2.0,), 1.0 + 1e-9, 64.0)},
    chain_len=2, asserted=True,
    note="cross term uses the half-exponent powers produced by the norm-sum "
         "estimate; the printed full-exponent variant breaks the chain",
    validator=_val_thm1, prepare=_prep_thm3, bind=_bind_thm4(True),
    custom_grid=_young_grid,
)


# --- MULTI_OP_W ---

def _prep_multi_w(bundle, tol):
    base = _prep_multi(bundle, tol)
    base["w"] = _w(base["Tsum"], tol)
    return base


def _bind_multi_w(base, params):
    _, _, fnorms, gnorms, coefs = _multi_terms(base, params)
    p = float(params["p"])
    q = p / (p - 1.0)
    v1 = sum(c * a * b for c, a, b in zip(coefs, fnorms, gnorms))
    v2 = (max(coefs) * sum(a ** p for a in fnorms) ** (1.0 / p)
          * sum(b ** q for b in gnorms) ** (1.0 / q))
    wv = base["w"]
    return BoundForm(lambda vs: wv, lambda vs: [v1, v2])


_register(
    id="MULTI_OP_W",
    statement="w(sum_i Ci*AiBi) <= sum_i r(Bi)r(Ci) ||f(|Ai|)|| ||g(|Ai*|)|| "
              "<= max_i r(Bi)r(Ci) * Hoelder combination",
    recipe=f"multi:{_MULTI_K}",
    roles=tuple(f"{L}_{i}" for i in range(1, _MULTI_K + 1) for L in "ABC"),
    vector_names=(),
    params={"alpha": ParamSpec((0.5,), 0.0, 1.0, pinned=True),
            "p": ParamSpec((2.0,), 1.0 + 1e-9, 64.0)},
    chain_len=2, asserted=True,
    note="alpha pinned at 1/2: the generated instances certify only the base intertwining",
    validator=_val_multi(_MULTI_K), prepare=_prep_multi_w, bind=_bind_multi_w,
)


# --- THM5 family ---

def _prep_thm5(bundle, tol):
    base = _prep_hybrid(bundle, tol)
    base["w"] = _w(base["A"], tol)
    return base


def _bind_thm5(refined):
    def bind(base, params):
        pair = _pair_from(params)
        p = q = 2.0  # the conjugate-exponent constraint p, q >= 2 pins p = q = 2
        modP, modQ = base["modP"], base["modQ"]
        FP = modP.fpow(pair.f, p)
        FQ = modQ.fpow(pair.f, p)
        GP = modP.fpow(pair.g, q)
        GQ = modQ.fpow(pair.g, q)
        v1 = _norm(FP + FQ) ** (1.0 / p) * _norm(GP + GQ) ** (1.0 / q)
        wv = base["w"]
        if not refined:
            return BoundForm(lambda vs: wv, lambda vs: [v1])
        bF = _kittaneh_sum_bound(
            modP.norm_fpow(pair.f, p), modQ.norm_fpow(pair.f, p),
            _norm(modP.fpow(pair.f, p / 2.0) @ modQ.fpow(pair.f, p / 2.0)))
        bG = _kittaneh_sum_bound(
            modP.norm_fpow(pair.g, q), modQ.norm_fpow(pair.g, q),
            _norm(modP.fpow(pair.g, q / 2.0) @ modQ.fpow(pair.g, q / 2.0)))
        v2 = bF ** (1.0 / p) * bG ** (1.0 / q)
        return BoundForm(lambda vs: wv, lambda vs: [v1, v2])
    return bind


_register(
    id="THM5",
    statement="w(A) <= ||f^p(|P|) + f^p(|Q|)||^(1/p) ||g^q(|P|) + g^q(|Q|)||^(1/q) "
              "at p = q = 2 (the only conjugate pair with p, q >= 2)",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={"alpha": ParamSpec((0.25, 0.5, 0.75), 0.0, 1.0)},
    chain_len=1, asserted=True, note="",
    validator=_val_none, prepare=_prep_thm5, bind=_bind_thm5(False),
)

_register(
    id="THM5_REFINED",
    statement="w(A) <= ... <= product of the two norm-sum refinements",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={"alpha": ParamSpec((0.25, 0.5, 0.75), 0.0, 1.0)},
    chain_len=2, asserted=True, note="",
    validator=_val_none, prepare=_prep_thm5, bind=_bind_thm5(True),
)


def _bind_remark_pq(base, params):
    modP, modQ = base["modP"], base["modQ"]
    na = modP.norm_power(1.0)
    nb = modQ.norm_power(1.0)
    # the discriminant carries 4 |||P||Q||| itself, not its square
    cross = _norm(modP.power(1.0) @ modQ.power(1.0))
    bound = 0.5 * (na + nb + math.sqrt((na - nb) ** 2 + 4.0 * cross))
    wv = base["w"]
    return BoundForm(lambda vs: wv, lambda vs: [bound, na + nb])


_register(
    id="REMARK_PQ",
    statement="w(A) <= (|||P||| + |||Q||| + sqrt((|||P|||-|||Q|||)^2 + "
              "4|||P||Q|||))/2 <= |||P||| + |||Q|||",
    recipe="ginibre", roles=("A",), vector_names=(),
    params={}, chain_len=2, asserted=True, note="",
    validator=_val_none, prepare=_prep_thm5, bind=_bind_remark_pq,
)


REGISTRY_SIZE = len(_ORDER)


# ---------------------------------------------------------------------------
# building a bundle from a user matrix (CLI `check`)

_PRIMARY_ROLE = {
    "thm1": "A", "ld": "T", "reid": "A", "ginibre": "A", "hermitian": "A",
    "ginibre_pair": "A", "ginibre_triple": "A", "psd": "A", "psd_pair": "A",
    "hermitian_pair": "B", "normal_pair": "A",
}


def bundle_for_matrix(spec_id: str, A: np.ndarray) -> InstanceBundle:
    """Bundle for checking one entry on a user matrix.

    The matrix fills the entry's primary role; every other operator role
    is the identity (always admissible for the intertwining hypotheses).
    Scalar entries cannot be checked this way.
    """
    spec = get_spec(spec_id)
    recipe = spec.recipe
    key = "multi" if recipe.startswith("multi:") else recipe
    if key == "scalar_pair":
        raise BadRange(f"{spec_id} takes scalars, not a matrix")
    A = linalg.as_matrix(A)
    n = A.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    ops = {}
    if key == "multi":
        count = int(recipe.split(":", 1)[1])
        for i in range(1, count + 1):
            ops[f"A_{i}"] = A if i == 1 else eye.copy()
            ops[f"B_{i}"] = eye.copy()
            ops[f"C_{i}"] = eye.copy()
    else:
        primary = _PRIMARY_ROLE[key]
        for role in set(spec.roles) | {primary}:
            ops[role] = A if role == primary else eye.copy()
        # recipes whose entries may consume more roles than the entry lists
        for role in ("B", "C", "S", "T", "D"):
            if role in spec.roles and role not in ops:
                ops[role] = eye.copy()
    return InstanceBundle(recipe=recipe, n=n, operators=ops)
