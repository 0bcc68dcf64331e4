"""Command-line front end.

Subcommands: ``verify``, ``simulate``, ``geodesic``, ``curvature``,
``decompose``, ``tables``.  Every subcommand reads an optional JSON config
(schema-validated, unknown keys rejected), honors ``--format json`` with the
stable top-level schema ``{command, config_echo, results, pass}``, and
returns exit code 0 on success, 1 on a failed property/drift breach, 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from dataclasses import asdict, dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

from . import duals as dm
from .coalgebra import DeformedModel
from .dynamics import (IntegratorOptions, Trajectory, closed_form_residual,
                       drift_report, fit_closed_form, geodesic_flow,
                       hamilton_flow)
from .errors import CurvintError, VariantUnavailable
from .geometry import (CKSignature, CK_TAGS, DEFORMED_TAGS, NONCONSTANT,
                       CONSTANT, R_CHART, RHO_CHART, PolarState,
                       brioschi_oracle, cartesian_metric, gaussian_curvature,
                       polar_chart, signature)
from .hamiltonians import (HamiltonianSpec, build, b_to_beta, cz_polar,
                           iz_polar, polar_form, sw_decompose)
from .phase_space import CartesianState
from . import verify as verify_mod

# named (f, U) pairs selectable as hamiltonian.custom in configs
CUSTOM_REGISTRY = {
    "nonconstant-free": (lambda u: 1.0, lambda u: 0.0),
    "constant-free": (dm.exp, lambda u: 0.0),
    "exp-well": (dm.exp, lambda u: u * dm.exp(u)),
    "cosh-kinetic": (dm.cosh, lambda u: u * u),
}

DEFAULT_DRIFT_THRESHOLD = 1e-6


class ConfigError(Exception):
    pass


# ---------------------------------------------------------------------------
# Config schema
# ---------------------------------------------------------------------------

_SCHEMA = {
    "model": {"z", "b1", "b2"},
    "space": None,                     # tag string or {kappa1, kappa2}
    "hamiltonian": {"kind", "beta0", "gamma", "custom"},
    "integrator": {"method", "rtol", "atol", "t_end", "max_steps"},
    "sampling": {"seed", "n_points"},
    "output": {"format", "path"},
    "initial_state": None,             # [q1, q2, p1, p2]
    "geodesic": {"chart", "start", "s_end"},
    "decompose": {"r", "theta", "beta0", "beta1", "beta2"},
    "thresholds": {"drift"},
    "tables": {"which"},
}


@dataclass
class RunConfig:
    model: DeformedModel = field(default_factory=DeformedModel)
    space: Optional[CKSignature] = None
    hamiltonian: Optional[HamiltonianSpec] = None
    integrator: IntegratorOptions = field(default_factory=IntegratorOptions)
    t_end: float = 20.0
    seed: int = 0
    n_points: int = 100
    out_format: str = "json"
    out_path: Optional[str] = None
    initial_state: Optional[CartesianState] = None
    geodesic_chart: str = R_CHART
    geodesic_start: Optional[Tuple[float, float, float, float]] = None
    geodesic_s_end: float = 10.0
    decompose_args: Optional[dict] = None
    drift_threshold: float = DEFAULT_DRIFT_THRESHOLD
    tables_which: Optional[int] = None
    z_explicit: bool = False
    raw: dict = field(default_factory=dict)


def _require_keys(section: str, data: dict, allowed: set):
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(
            f"unknown key(s) in '{section}': {', '.join(sorted(unknown))}")


def _number(section, key, v):
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise ConfigError(f"'{section}.{key}' must be a number")
    return float(v)


def parse_config(data: dict) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object")
    _require_keys("config", data, set(_SCHEMA))
    cfg = RunConfig(raw=data)

    if "model" in data:
        _require_keys("model", data["model"], _SCHEMA["model"])
        cfg.model = DeformedModel(
            z=_number("model", "z", data["model"].get("z", 0.0)),
            b1=_number("model", "b1", data["model"].get("b1", 0.0)),
            b2=_number("model", "b2", data["model"].get("b2", 0.0)))
        cfg.z_explicit = "z" in data["model"]

    if "space" in data:
        cfg.space = _parse_space(data["space"])

    if "hamiltonian" in data:
        h = data["hamiltonian"]
        _require_keys("hamiltonian", h, _SCHEMA["hamiltonian"])
        kind = h.get("kind")
        if kind not in ("FreeI", "FreeS", "ISW", "IKC", "SSW", "Custom"):
            raise ConfigError(f"unknown hamiltonian kind {kind!r}")
        kwargs = {"beta0": _number("hamiltonian", "beta0", h.get("beta0", 0.0)),
                  "gamma": _number("hamiltonian", "gamma", h.get("gamma", 0.0))}
        if kind == "Custom":
            name = h.get("custom")
            if name not in CUSTOM_REGISTRY:
                raise ConfigError(
                    f"unknown custom registry entry {name!r}; available: "
                    f"{', '.join(sorted(CUSTOM_REGISTRY))}")
            f, u = CUSTOM_REGISTRY[name]
            kwargs.update(custom_f=f, custom_U=u)
        try:
            cfg.hamiltonian = HamiltonianSpec(kind, **kwargs)
        except CurvintError as e:
            raise ConfigError(str(e))

    if "integrator" in data:
        i = data["integrator"]
        _require_keys("integrator", i, _SCHEMA["integrator"])
        method = i.get("method", "rk45")
        if method not in ("rk45", "dop853", "midpoint"):
            raise ConfigError(f"unknown integrator method {method!r}")
        cfg.integrator = IntegratorOptions(
            method=method,
            rtol=_number("integrator", "rtol", i.get("rtol", 1e-10)),
            atol=_number("integrator", "atol", i.get("atol", 1e-12)))
        cfg.t_end = _number("integrator", "t_end", i.get("t_end", 20.0))
        if "max_steps" in i:
            _number("integrator", "max_steps", i["max_steps"])

    if "sampling" in data:
        s = data["sampling"]
        _require_keys("sampling", s, _SCHEMA["sampling"])
        cfg.seed = int(_number("sampling", "seed", s.get("seed", 0)))
        cfg.n_points = int(_number("sampling", "n_points",
                                   s.get("n_points", 100)))

    if "output" in data:
        o = data["output"]
        _require_keys("output", o, _SCHEMA["output"])
        fmt = o.get("format", "json")
        if fmt not in ("csv", "json"):
            raise ConfigError("output.format must be 'csv' or 'json'")
        cfg.out_format = fmt
        cfg.out_path = o.get("path")

    if "initial_state" in data:
        st = data["initial_state"]
        if (not isinstance(st, list) or len(st) != 4
                or not all(isinstance(v, (int, float)) for v in st)):
            raise ConfigError("initial_state must be [q1, q2, p1, p2]")
        cfg.initial_state = CartesianState(*map(float, st))

    if "geodesic" in data:
        g = data["geodesic"]
        _require_keys("geodesic", g, _SCHEMA["geodesic"])
        chart = g.get("chart", R_CHART)
        if chart not in (R_CHART, RHO_CHART):
            raise ConfigError("geodesic.chart must be 'r' or 'rho'")
        cfg.geodesic_chart = chart
        if "start" in g:
            st = g["start"]
            if not isinstance(st, list) or len(st) != 4:
                raise ConfigError(
                    "geodesic.start must be [radial, theta, d_radial, d_theta]")
            cfg.geodesic_start = tuple(map(float, st))
        cfg.geodesic_s_end = _number("geodesic", "s_end", g.get("s_end", 10.0))

    if "decompose" in data:
        d = data["decompose"]
        _require_keys("decompose", d, _SCHEMA["decompose"])
        cfg.decompose_args = {k: _number("decompose", k, d.get(k, dflt))
                              for k, dflt in (("r", 0.7), ("theta", 0.5),
                                              ("beta0", 1.0), ("beta1", 1.0),
                                              ("beta2", 1.0))}

    if "thresholds" in data:
        t = data["thresholds"]
        _require_keys("thresholds", t, _SCHEMA["thresholds"])
        cfg.drift_threshold = _number("thresholds", "drift",
                                      t.get("drift", DEFAULT_DRIFT_THRESHOLD))

    if "tables" in data:
        t = data["tables"]
        _require_keys("tables", t, _SCHEMA["tables"])
        cfg.tables_which = int(_number("tables", "which", t.get("which", 1)))

    return cfg


def _parse_space(v) -> CKSignature:
    if isinstance(v, str):
        if v not in CK_TAGS and v not in DEFORMED_TAGS:
            raise ConfigError(f"unknown space tag {v!r}")
        return signature(v)
    if isinstance(v, dict):
        _require_keys("space", v, {"kappa1", "kappa2"})
        return CKSignature(_number("space", "kappa1", v.get("kappa1", 0.0)),
                           _number("space", "kappa2", v.get("kappa2", 1.0)))
    raise ConfigError("space must be a tag string or {kappa1, kappa2}")


def load_config(args) -> RunConfig:
    data = {}
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except FileNotFoundError:
            raise ConfigError(f"config file not found: {args.config}")
        except json.JSONDecodeError as e:
            raise ConfigError(
                f"malformed JSON in {args.config} at line {e.lineno} "
                f"column {e.colno}: {e.msg}")
    cfg = parse_config(data)
    # flag overrides
    if args.space is not None:
        cfg.space = _parse_space(args.space)
    if args.z is not None:
        cfg.model = replace(cfg.model, z=args.z)
        cfg.z_explicit = True
    if args.seed is not None:
        cfg.seed = args.seed
    if args.format is not None:
        cfg.out_format = args.format
    if args.out is not None:
        cfg.out_path = args.out
    return cfg


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------

def fmt17(v) -> str:
    """17-significant-digit decimal rendering (round-trip safe)."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def rows_to_csv(rows: List[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = list(rows[0])
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt17(row.get(k, "")) for k in header])
    return buf.getvalue()


def emit(command: str, cfg: RunConfig, results, passed: bool,
         rows_for_csv: Optional[List[dict]] = None) -> None:
    if cfg.out_format == "json":
        payload = {"command": command, "config_echo": cfg.raw,
                   "results": results, "pass": passed}
        text = json.dumps(payload, indent=2, default=str) + "\n"
    else:
        text = rows_to_csv(rows_for_csv if rows_for_csv is not None
                           else results)
    if cfg.out_path:
        with open(cfg.out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def trajectory_rows(traj: Trajectory) -> List[dict]:
    names = traj.field_names
    rows = []
    for i, t in enumerate(traj.times):
        row = {"t": float(t)}
        for j, name in enumerate(names):
            row[name] = float(traj.states[i, j])
        for name, series in traj.invariants.items():
            row[name] = float(series[i])
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> int:
    z_grid = (cfg.model.z,) if cfg.z_explicit else verify_mod.DEFAULT_Z_GRID
    checks = verify_mod.run_verification(z_grid=z_grid,
                                         n_points=cfg.n_points,
                                         seed=cfg.seed)
    results = [c.as_dict() for c in checks]
    passed = verify_mod.all_passed(checks)
    emit("verify", cfg, results, passed)
    return 0 if passed else 1


def cmd_simulate(cfg: RunConfig) -> int:
    if cfg.hamiltonian is None:
        raise ConfigError("simulate requires a 'hamiltonian' section")
    if cfg.initial_state is None:
        raise ConfigError("simulate requires 'initial_state'")
    iset = build(cfg.model, cfg.hamiltonian)
    traj = hamilton_flow(iset, cfg.initial_state, cfg.t_end, cfg.integrator)
    report = drift_report(traj)
    drift_ok = all(rel < cfg.drift_threshold for _, rel in report.values())
    passed = drift_ok and traj.status == "ok"
    results = {
        "status": traj.status,
        "drift": {k: {"max_abs": a, "max_rel": r}
                  for k, (a, r) in report.items()},
        "drift_threshold": cfg.drift_threshold,
        "metadata": traj.metadata,
        "trajectory": trajectory_rows(traj),
    }
    emit("simulate", cfg, results, passed,
         rows_for_csv=trajectory_rows(traj))
    return 0 if passed else 1


def cmd_geodesic(cfg: RunConfig) -> int:
    if cfg.space is None:
        raise ConfigError("geodesic requires a 'space' (tag or labels)")
    if cfg.geodesic_start is None:
        raise ConfigError("geodesic requires 'geodesic.start'")
    traj = geodesic_flow(cfg.space, cfg.geodesic_chart, cfg.geodesic_start,
                         cfg.geodesic_s_end, cfg.integrator)
    cf = fit_closed_form(cfg.space, cfg.geodesic_chart, traj)
    curve_res = closed_form_residual(cfg.space, cfg.geodesic_chart, traj, cf)
    alpha = traj.invariants["alpha"]
    alpha_drift = float(max(abs(a - alpha[0]) for a in alpha))
    passed = alpha_drift < 1e-7
    results = {
        "alpha": cf.alpha, "theta0": cf.theta0,
        "closed_form_residual": curve_res,
        "first_integral_drift": alpha_drift,
        "metadata": traj.metadata,
        "trajectory": trajectory_rows(traj),
    }
    emit("geodesic", cfg, results, passed, rows_for_csv=trajectory_rows(traj))
    return 0 if passed else 1


def cmd_curvature(cfg: RunConfig) -> int:
    rng = random.Random(cfg.seed)
    rows = []
    worst = 0.0
    for _ in range(cfg.n_points):
        q1 = rng.choice((-1.0, 1.0)) * rng.uniform(0.2, 1.2)
        q2 = rng.choice((-1.0, 1.0)) * rng.uniform(0.2, 1.2)
        for family in (NONCONSTANT, CONSTANT):
            closed = gaussian_curvature(cfg.model, family, q1, q2)

            def metric_field(u, v, family=family):
                g11, g22 = cartesian_metric(cfg.model, family, u, v)
                return ((g11, 0.0), (0.0, g22))

            oracle = brioschi_oracle(metric_field, q1, q2)
            err = abs(oracle - closed)
            worst = max(worst, err)
            rows.append({"q1": q1, "q2": q2, "family": family,
                         "curvature_closed": closed,
                         "curvature_oracle": oracle, "abs_error": err})
    passed = worst < 1e-5
    results = {"max_abs_error": worst, "threshold": 1e-5, "points": rows}
    emit("curvature", cfg, results, passed, rows_for_csv=rows)
    return 0 if passed else 1


def cmd_decompose(cfg: RunConfig) -> int:
    if cfg.space is None:
        raise ConfigError("decompose requires a 'space' (tag or labels)")
    args = cfg.decompose_args or {"r": 0.7, "theta": 0.5, "beta0": 1.0,
                                  "beta1": 1.0, "beta2": 1.0}
    d = sw_decompose(cfg.space, args["r"], args["theta"], args["beta0"],
                     args["beta1"], args["beta2"])
    results = {
        "central_oscillator": d.central,
        "barrier_x": d.barrier_x, "barrier_y": d.barrier_y,
        "x": d.x, "y": d.y, "total": d.total,
        "r1": d.r1, "r2": d.r2,
    }
    passed = True
    try:
        center_total = d.center_total
        results["center_terms"] = d.center_terms
        results["center_total"] = center_total
        results["variant_residual"] = abs(d.total - center_total)
        passed = results["variant_residual"] < 1e-9
    except VariantUnavailable as e:
        results["center_terms"] = None
        results["center_note"] = str(e)
    rows = [{"term": k, "value": v} for k, v in results.items()
            if isinstance(v, float)]
    emit("decompose", cfg, results, passed, rows_for_csv=rows)
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

_TABLE1 = [
    # tag, z, kappa2, metric template, curvature template
    ("S2z", -1.0, 1.0, "1/cos(rho) (drho^2 + sin(rho)^2 dtheta^2)",
     "-sin(rho)^2/(2 cos(rho))"),
    ("AdSz", -1.0, -1.0, "1/cos(rho) (drho^2 - sin(rho)^2 dtheta^2)",
     "-sin(rho)^2/(2 cos(rho))"),
    ("E2", 0.0, 1.0, "drho^2 + rho^2 dtheta^2", "0"),
    ("M2", 0.0, -1.0, "drho^2 - rho^2 dtheta^2", "0"),
    ("H2z", 1.0, 1.0, "1/cosh(rho) (drho^2 + sinh(rho)^2 dtheta^2)",
     "-sinh(rho)^2/(2 cosh(rho))"),
    ("dSz", 1.0, -1.0, "1/cosh(rho) (drho^2 - sinh(rho)^2 dtheta^2)",
     "-sinh(rho)^2/(2 cosh(rho))"),
]

_TABLE3 = [
    # tag, kappa1, kappa2, metric template, geodesic template
    ("S2", 1.0, 1.0, "dr^2 + sin(r)^2 dtheta^2",
     "alpha/tan(r) = sin(theta+theta0)"),
    ("AdS", 1.0, -1.0, "dr^2 - sin(r)^2 dtheta^2",
     "alpha/tan(r) = sinh(theta+theta0)"),
    ("E2", 0.0, 1.0, "dr^2 + r^2 dtheta^2", "alpha/r = sin(theta+theta0)"),
    ("M2", 0.0, -1.0, "dr^2 - r^2 dtheta^2", "alpha/r = sinh(theta+theta0)"),
    ("H2", -1.0, 1.0, "dr^2 + sinh(r)^2 dtheta^2",
     "alpha/tanh(r) = sin(theta+theta0)"),
    ("dS", -1.0, -1.0, "dr^2 - sinh(r)^2 dtheta^2",
     "alpha/tanh(r) = sinh(theta+theta0)"),
]

_TABLE2_H = {
    "S2z": "1/2 cos(rho) (p_rho^2 + p_theta^2/sin(rho)^2) + g(rho) "
           "+ 2 cos(rho)/sin(rho)^2 (b1/sin(theta)^2 + b2/cos(theta)^2)",
    "AdSz": "1/2 cos(rho) (p_rho^2 - p_theta^2/sin(rho)^2) + g(rho) "
            "- 2 cos(rho)/sin(rho)^2 (b1/sinh(theta)^2 - b2/cosh(theta)^2)",
    "E2": "1/2 (p_rho^2 + p_theta^2/rho^2) + g(rho) "
          "+ 2/rho^2 (b1/sin(theta)^2 + b2/cos(theta)^2)",
    "M2": "1/2 (p_rho^2 - p_theta^2/rho^2) + g(rho) "
          "- 2/rho^2 (b1/sinh(theta)^2 - b2/cosh(theta)^2)",
    "H2z": "1/2 cosh(rho) (p_rho^2 + p_theta^2/sinh(rho)^2) + g(rho) "
           "+ 2 cosh(rho)/sinh(rho)^2 (b1/sin(theta)^2 + b2/cos(theta)^2)",
    "dSz": "1/2 cosh(rho) (p_rho^2 - p_theta^2/sinh(rho)^2) + g(rho) "
           "- 2 cosh(rho)/sinh(rho)^2 (b1/sinh(theta)^2 - b2/cosh(theta)^2)",
}

_TABLE2_C = {
    1.0: "p_theta^2 + 4 b1/sin(theta)^2 + 4 b2/cos(theta)^2",
    -1.0: "p_theta^2 + 4 b1/sinh(theta)^2 - 4 b2/cosh(theta)^2",
}

_TABLE4_RADIAL = {
    "S2": "1/2 p_r^2 + C_z/(2 sin^2 r) + beta0 tan^2 r",
    "AdS": "1/2 p_r^2 - C_z/(2 sin^2 r) + beta0 tan^2 r",
    "E2": "1/2 p_r^2 + C_z/(2 r^2) + beta0 r^2",
    "M2": "1/2 p_r^2 - C_z/(2 r^2) + beta0 r^2",
    "H2": "1/2 p_r^2 + C_z/(2 sinh^2 r) + beta0 tanh^2 r",
    "dS": "1/2 p_r^2 - C_z/(2 sinh^2 r) + beta0 tanh^2 r",
}

REFERENCE_POLAR = PolarState(1.0, 0.7, 0.5, 0.3)


def table_rows(which: int) -> List[dict]:
    ps = REFERENCE_POLAR
    rows = []
    if which == 1:
        for tag, z, k2, metric, ktem in _TABLE1:
            sig = CKSignature(z, k2)
            ch = polar_chart(sig, RHO_CHART, ps.radial, ps.theta)
            rows.append({"space": tag, "z": z, "kappa2": k2,
                         "metric": metric, "curvature_template": ktem,
                         "curvature_at_rho1": ch.sectional})
        return rows
    if which == 2:
        for tag, z, k2, _, _ in _TABLE1:
            sig = CKSignature(z, k2)
            model = DeformedModel(z, 1.0, 1.0)
            spec = HamiltonianSpec("FreeI")
            h = polar_form(model, sig, spec, ps)
            c = cz_polar(sig, ps.theta, ps.p_theta, 1.0, 1.0)
            rows.append({"space": tag, "z": z,
                         "hamiltonian": _TABLE2_H[tag],
                         "constant": _TABLE2_C[k2],
                         "h_at_reference": h, "c_at_reference": c})
        return rows
    if which == 3:
        for tag, k1, k2, metric, geod in _TABLE3:
            sig = CKSignature(k1, k2, tag)
            ch = polar_chart(sig, R_CHART, ps.radial, ps.theta)
            rows.append({"space": tag, "kappa1": k1, "kappa2": k2,
                         "metric": metric, "geodesic": geod,
                         "curvature": ch.sectional,
                         "gamma_r_thth": ch.gamma_rad_angang,
                         "gamma_th_thr": ch.gamma_ang_angrad})
        return rows
    if which == 4:
        for tag, k1, k2, _, _ in _TABLE3:
            sig = CKSignature(k1, k2, tag)
            model = DeformedModel(k1, 0.5, 0.5)   # beta1 = beta2 = 1
            spec = HamiltonianSpec("SSW", beta0=1.0)
            h = polar_form(model, sig, spec, ps)
            c = cz_polar(sig, ps.theta, ps.p_theta, 0.5, 0.5)
            i = iz_polar(sig, ps, 1.0, 1.0)
            rows.append({"space": tag, "kappa1": k1, "kappa2": k2,
                         "radial_form": _TABLE4_RADIAL[tag],
                         "h_at_reference": h, "c_at_reference": c,
                         "i_at_reference": i})
        return rows
    raise ConfigError("tables 'which' must be 1, 2, 3 or 4")


def cmd_tables(cfg: RunConfig, which: Optional[int]) -> int:
    which = which if which is not None else (cfg.tables_which or 1)
    rows = table_rows(which)
    emit("tables", cfg, rows, True, rows_for_csv=rows)
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvint",
        description="Integrable systems on curved 2D spaces: verification, "
                    "simulation and geometry reports.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("verify", "simulate", "geodesic", "curvature", "decompose",
                 "tables"):
        p = sub.add_parser(name)
        p.add_argument("--config", type=str, default=None)
        p.add_argument("--space", type=str, default=None)
        p.add_argument("--z", type=float, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--format", choices=("csv", "json"), default=None)
        p.add_argument("--out", type=str, default=None)
        if name == "tables":
            p.add_argument("--which", type=int, choices=(1, 2, 3, 4),
                           default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "simulate":
            return cmd_simulate(cfg)
        if args.command == "geodesic":
            return cmd_geodesic(cfg)
        if args.command == "curvature":
            return cmd_curvature(cfg)
        if args.command == "decompose":
            return cmd_decompose(cfg)
        if args.command == "tables":
            return cmd_tables(cfg, getattr(args, "which", None))
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except CurvintError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
