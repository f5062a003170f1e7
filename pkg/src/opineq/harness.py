"""Campaign orchestration: seeded verification sweeps over the catalog.

A campaign runs `trials` independent instances of every selected
registry entry on every requested dimension.  Each trial draws its
random stream from (seed, spec id, dim, trial index), so adding or
removing entries never perturbs the draws of the others, and any row
can be replayed bit-for-bit from its fingerprint.

The JSON report contains only deterministic content: two runs of the
same configuration produce byte-identical files.  Wall time goes to a
sidecar (.meta) file and the console.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import _kernels, catalog, generators
from .errors import ConfigInvalid, OpineqError, VersionMismatch

FORMAT_VERSION = "1"


@dataclass
class CampaignConfig:
    dims: list = field(default_factory=lambda: [2, 3, 4])
    trials: int = 100
    seed: int = 0
    specs: object = "all"          # "all" or a list of registry ids
    tol: float = 1e-8
    vector_samples: int = 8
    sup_restarts: int = 4
    sup_iters: int = 16
    alphas: list | None = None     # overrides for sweepable alpha entries
    p_values: list | None = None
    young_grid: list | None = None  # (p, alpha) pairs for the power entries
    hermitian_only: bool = False
    json_path: str | None = None
    csv_path: str | None = None
    rows_path: str | None = None
    threads: int | None = None

    def validate(self) -> None:
        if not self.dims or any(not 1 <= int(d) <= 64 for d in self.dims):
            raise ConfigInvalid(f"dims must be within [1, 64], got {self.dims}")
        if self.trials < 1:
            raise ConfigInvalid("trials must be at least 1")
        if self.tol < 1e-12:
            raise ConfigInvalid("tol must be at least 1e-12")
        if self.vector_samples < 0 or self.sup_restarts < 0:
            raise ConfigInvalid("sampling counts must be nonnegative")
        for sid in self.spec_list():
            catalog.get_spec(sid)

    def spec_list(self) -> list:
        if self.specs == "all":
            return catalog.spec_ids()
        return list(self.specs)

    def overrides(self) -> dict:
        return {"alpha": self.alphas, "p": self.p_values, "young": self.young_grid}

    def resolve_threads(self) -> int:
        if self.threads is not None:
            return max(1, int(self.threads))
        env = os.environ.get("OPINEQ_THREADS")
        if env:
            return max(1, int(env))
        return max(1, os.cpu_count() or 1)


@dataclass
class CampaignReport:
    data: dict
    wall_time_s: float

    def to_json_bytes(self) -> bytes:
        return (json.dumps(self.data, sort_keys=True, indent=1) + "\n").encode()

    def csv_text(self) -> str:
        lines = ["id,trials,rows,errors,violations,worst_slack,"
                 "min_sharpness,mean_sharpness,max_sharpness,"
                 "chain_monotone_failures"]
        for sid in self.data["spec_order"]:
            blk = self.data["specs"][sid]
            sh = blk["sharpness"]
            vw = blk["violations"]["worst_slack"]
            lines.append(",".join([
                sid, str(blk["trials"]), str(blk["rows"]), str(blk["errors"]),
                str(blk["violations"]["count"]),
                repr(vw) if vw is not None else "",
                repr(sh["min"]) if sh else "", repr(sh["mean"]) if sh else "",
                repr(sh["max"]) if sh else "",
                str(blk["chain_monotone_failures"]),
            ]))
        return "\n".join(lines) + "\n"

    def write(self, json_path=None, csv_path=None) -> None:
        if json_path:
            with open(json_path, "wb") as fh:
                fh.write(self.to_json_bytes())
            with open(str(json_path) + ".meta", "w", encoding="utf-8") as fh:
                json.dump({"wall_time_s": self.wall_time_s}, fh)
                fh.write("\n")
        if csv_path:
            with open(csv_path, "w", encoding="utf-8") as fh:
                fh.write(self.csv_text())

    @property
    def asserted_violations(self) -> int:
        return self.data["totals"]["violations_asserted"]


def _effective_recipe(spec: catalog.InequalitySpec, cfg: CampaignConfig) -> str:
    if cfg.hermitian_only and spec.recipe == "ginibre":
        return "hermitian"
    return spec.recipe


def _sup_rng(cfg_seed, spec_id, dim, trial, params):
    key = json.dumps(params, sort_keys=True)
    return generators.make_rng(cfg_seed, spec_id, dim, trial, "sup", key)


def _fingerprint(cfg: CampaignConfig, spec, dim, trial, recipe, params, mode):
    return {
        "format_version": FORMAT_VERSION,
        "spec": spec.id,
        "n": int(dim),
        "seed": int(cfg.seed),
        "trial": int(trial),
        "recipe": recipe,
        "params": params,
        "tol": cfg.tol,
        "mode": mode,
        "sup_restarts": cfg.sup_restarts,
        "sup_iters": cfg.sup_iters,
    }


def _trial_rows(spec, dim, trial, cfg: CampaignConfig, combos):
    """All result rows of one trial: the worst evaluation per combo."""
    recipe = _effective_recipe(spec, cfg)
    rng = generators.make_rng(cfg.seed, spec.id, dim, trial)
    bundle = generators.build_instance(recipe, dim, rng)
    catalog.validate_bundle(spec, bundle)
    names = spec.vector_names
    samples = []
    if names:
        for _ in range(cfg.vector_samples):
            samples.append(tuple(generators.random_unit_vector(dim, rng)
                                 for _ in names))
    rows = []
    base = spec.prepare(bundle, cfg.tol)
    for params in combos:
        merged = catalog._check_params(spec, params)
        form = spec.bind(base, merged)
        worst = None
        mode = "direct"
        if names:
            for i, vs in enumerate(samples):
                res = catalog._assemble(spec, form, vs, cfg.tol, merged, None)
                if worst is None or res.relative_slack < worst.relative_slack:
                    worst = res
                    mode = f"sample:{i}"
            if cfg.sup_restarts > 0:
                res = catalog.sup_search(
                    spec.id, bundle, merged, restarts=cfg.sup_restarts,
                    rng=_sup_rng(cfg.seed, spec.id, dim, trial, merged),
                    tol=cfg.tol, iters=cfg.sup_iters, validate=False,
                    form=form)
                if worst is None or res.relative_slack < worst.relative_slack:
                    worst = res
                    mode = "sup"
        if worst is None:
            worst = catalog._assemble(spec, form, (), cfg.tol, merged, None)
        worst.fingerprint = _fingerprint(cfg, spec, dim, trial, recipe,
                                         merged, mode)
        rows.append(worst)
    return rows


def _new_partial() -> dict:
    return {
        "trials": 0, "rows": 0, "errors": 0,
        "viol_count": 0, "viol_worst_slack": None, "viol_worst_rel": None,
        "viol_fp": None,
        "sharp_min": None, "sharp_max": None, "sharp_sum": 0.0, "sharp_count": 0,
        "cr_min": None, "cr_max": None, "cr_sum": 0.0, "cr_count": 0,
        "cm_fail": 0, "min_rel_slack": None,
        "error_rows": [],
    }


def _fold_row(part: dict, row) -> None:
    part["rows"] += 1
    rel = row.relative_slack
    if part["min_rel_slack"] is None or rel < part["min_rel_slack"]:
        part["min_rel_slack"] = rel
    if not row.satisfied:
        part["viol_count"] += 1
        if part["viol_worst_slack"] is None or row.slack < part["viol_worst_slack"]:
            part["viol_worst_slack"] = row.slack
            part["viol_worst_rel"] = rel
            part["viol_fp"] = row.fingerprint
    if row.sharpness is not None:
        s = row.sharpness
        part["sharp_sum"] += s
        part["sharp_count"] += 1
        if part["sharp_min"] is None or s < part["sharp_min"]:
            part["sharp_min"] = s
        if part["sharp_max"] is None or s > part["sharp_max"]:
            part["sharp_max"] = s
    if row.chain_ratio is not None:
        c = row.chain_ratio
        part["cr_sum"] += c
        part["cr_count"] += 1
        if part["cr_min"] is None or c < part["cr_min"]:
            part["cr_min"] = c
        if part["cr_max"] is None or c > part["cr_max"]:
            part["cr_max"] = c
    if not row.chain_monotone:
        part["cm_fail"] += 1


def aggregate_rows(rows_by_task: list) -> dict:
    """Fold row streams (ordered list of (spec_id, dim, rows)) into
    per-(spec, dim) partials, exactly as the campaign runner does.

    Trial and error counts are not recoverable from a bare row stream
    and stay zero; every row-derived field matches the report.
    """
    partials = {}
    for spec_id, dim, rows in rows_by_task:
        part = _new_partial()
        for row in rows:
            _fold_row(part, row)
        partials[(spec_id, dim)] = part
    return partials


def _run_task(args) -> tuple:
    spec_id, dim, cfg_dict = args
    cfg = CampaignConfig(**cfg_dict)
    spec = catalog.get_spec(spec_id)
    combos = catalog.param_grid(spec, cfg.overrides())
    part = _new_partial()
    rows_out = [] if cfg.rows_path else None
    for trial in range(cfg.trials):
        part["trials"] += 1
        try:
            rows = _trial_rows(spec, dim, trial, cfg, combos)
        except OpineqError as exc:
            part["errors"] += 1
            part["error_rows"].append({
                "spec": spec_id, "n": dim, "trial": trial,
                "error": type(exc).__name__, "message": str(exc),
            })
            continue
        for row in rows:
            _fold_row(part, row)
            if rows_out is not None:
                rows_out.append(row.to_dict())
    return spec_id, dim, part, rows_out


def _merge(parts: list) -> dict:
    """Merge per-dim partials (in dim order) into one spec block."""
    out = _new_partial()
    for p in parts:
        out["trials"] += p["trials"]
        out["rows"] += p["rows"]
        out["errors"] += p["errors"]
        out["error_rows"].extend(p["error_rows"])
        if p["viol_count"]:
            out["viol_count"] += p["viol_count"]
            if (out["viol_worst_slack"] is None
                    or p["viol_worst_slack"] < out["viol_worst_slack"]):
                out["viol_worst_slack"] = p["viol_worst_slack"]
                out["viol_worst_rel"] = p["viol_worst_rel"]
                out["viol_fp"] = p["viol_fp"]
        out["sharp_sum"] += p["sharp_sum"]
        out["sharp_count"] += p["sharp_count"]
        for key, pick in (("sharp_min", min), ("sharp_max", max)):
            if p[key] is not None:
                out[key] = p[key] if out[key] is None else pick(out[key], p[key])
        out["cr_sum"] += p["cr_sum"]
        out["cr_count"] += p["cr_count"]
        for key, pick in (("cr_min", min), ("cr_max", max)):
            if p[key] is not None:
                out[key] = p[key] if out[key] is None else pick(out[key], p[key])
        out["cm_fail"] += p["cm_fail"]
        if p["min_rel_slack"] is not None:
            if (out["min_rel_slack"] is None
                    or p["min_rel_slack"] < out["min_rel_slack"]):
                out["min_rel_slack"] = p["min_rel_slack"]
    return out


def _spec_block(spec, merged: dict) -> dict:
    sharp = None
    if merged["sharp_count"]:
        sharp = {"min": merged["sharp_min"], "max": merged["sharp_max"],
                 "mean": merged["sharp_sum"] / merged["sharp_count"],
                 "count": merged["sharp_count"]}
    cr = None
    if merged["cr_count"]:
        cr = {"min": merged["cr_min"], "max": merged["cr_max"],
              "mean": merged["cr_sum"] / merged["cr_count"],
              "count": merged["cr_count"]}
    return {
        "asserted": spec.asserted,
        "trials": merged["trials"],
        "rows": merged["rows"],
        "errors": merged["errors"],
        "violations": {
            "count": merged["viol_count"],
            "worst_slack": merged["viol_worst_slack"],
            "worst_relative_slack": merged["viol_worst_rel"],
            "fingerprint": merged["viol_fp"],
        },
        "sharpness": sharp,
        "chain_ratio": cr,
        "chain_monotone_failures": merged["cm_fail"],
        "min_relative_slack": merged["min_rel_slack"],
        "note": spec.note,
    }


def run_campaign(config: CampaignConfig) -> CampaignReport:
    """Execute a campaign; deterministic for a fixed configuration."""
    config.validate()
    t0 = time.perf_counter()
    _kernels.warm_up()
    spec_ids = config.spec_list()
    dims = [int(d) for d in config.dims]
    tasks = [(sid, d, asdict(config)) for sid in spec_ids for d in dims]
    threads = config.resolve_threads()
    results = {}
    rows_streams = {}
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for spec_id, dim, part, rows_out in pool.map(
                    _run_task, tasks, chunksize=1):
                results[(spec_id, dim)] = part
                rows_streams[(spec_id, dim)] = rows_out
    else:
        for task in tasks:
            spec_id, dim, part, rows_out = _run_task(task)
            results[(spec_id, dim)] = part
            rows_streams[(spec_id, dim)] = rows_out
    specs = {}
    totals = {"trials": 0, "rows": 0, "errors": 0,
              "violations_asserted": 0, "violations_measured": 0,
              "chain_monotone_failures": 0}
    for sid in spec_ids:
        spec = catalog.get_spec(sid)
        merged = _merge([results[(sid, d)] for d in dims])
        blk = _spec_block(spec, merged)
        specs[sid] = blk
        totals["trials"] += blk["trials"]
        totals["rows"] += blk["rows"]
        totals["errors"] += blk["errors"]
        key = "violations_asserted" if spec.asserted else "violations_measured"
        totals[key] += blk["violations"]["count"]
        totals["chain_monotone_failures"] += blk["chain_monotone_failures"]
    cfg_echo = asdict(config)
    # worker count affects scheduling only, never results
    cfg_echo.pop("threads", None)
    cfg_echo["rng_algorithm"] = generators.RNG_ALGORITHM
    data = {
        "format_version": FORMAT_VERSION,
        "config": cfg_echo,
        "registry_size": catalog.REGISTRY_SIZE,
        "spec_order": spec_ids,
        "specs": specs,
        "totals": totals,
    }
    report = CampaignReport(data=data, wall_time_s=time.perf_counter() - t0)
    if config.rows_path:
        with open(config.rows_path, "w", encoding="utf-8") as fh:
            for sid in spec_ids:
                for d in dims:
                    for row in rows_streams[(sid, d)] or []:
                        fh.write(json.dumps(row, sort_keys=True) + "\n")
    if config.json_path or config.csv_path:
        report.write(config.json_path, config.csv_path)
    return report


def replay(fingerprint: dict) -> catalog.InequalityResult:
    """Reproduce the exact evaluation behind a report fingerprint."""
    if not isinstance(fingerprint, dict):
        raise VersionMismatch("fingerprint must be a mapping")
    if fingerprint.get("format_version") != FORMAT_VERSION:
        raise VersionMismatch(
            f"fingerprint format {fingerprint.get('format_version')!r} "
            f"!= {FORMAT_VERSION!r}")
    for key in ("spec", "n", "seed", "trial", "recipe", "params", "tol", "mode"):
        if key not in fingerprint:
            raise VersionMismatch(f"fingerprint lacks field {key!r}")
    spec = catalog.get_spec(fingerprint["spec"])
    n = int(fingerprint["n"])
    seed = int(fingerprint["seed"])
    trial = int(fingerprint["trial"])
    recipe = fingerprint["recipe"]
    params = dict(fingerprint["params"])
    tol = float(fingerprint["tol"])
    mode = fingerprint["mode"]
    rng = generators.make_rng(seed, spec.id, n, trial)
    bundle = generators.build_instance(recipe, n, rng)
    if mode == "direct" or not spec.vector_names:
        return catalog.evaluate(spec.id, bundle, None, params, tol,
                                fingerprint=fingerprint)
    if mode.startswith("sample:"):
        idx = int(mode.split(":", 1)[1])
        vs = None
        for _ in range(idx + 1):
            vs = tuple(generators.random_unit_vector(n, rng)
                       for _ in spec.vector_names)
        vectors = dict(zip(spec.vector_names, vs))
        return catalog.evaluate(spec.id, bundle, vectors, params, tol,
                                fingerprint=fingerprint)
    if mode == "sup":
        merged = catalog._check_params(spec, params)
        return catalog.sup_search(
            spec.id, bundle, merged,
            restarts=int(fingerprint["sup_restarts"]),
            rng=_sup_rng(seed, spec.id, n, trial, merged),
            tol=tol, iters=int(fingerprint["sup_iters"]),
            fingerprint=fingerprint)
    raise VersionMismatch(f"unknown fingerprint mode {mode!r}")
