"""Command line front end: takiff-rep <suite> [options].

Suites
------
nf             normal forms of words in the (localized) enveloping algebra
verify-free    commutator axioms on Gamma/Theta/Omega modules
saturate       degree-capped submodule saturation from a seed polynomial
omega-quotient Omega b=0 layers against the closed-form Delta parameters
verify-weight  duality + bracket identities for the M/N/V families
singular       windowed singular vectors vs the closed-form criterion
verma-check    opposite Verma character of a generated submodule
scan           reducibility scan over the built-in parameter grid
twist-check    twisting substitution: automorphism + module isomorphism
iso-check      lambda rescaling and the V ~ M explicit isomorphism
intertwine     exact search for window-supported intertwiners

Options: --config FILE (KEY=VALUE lines), --seed N, --window KMIN:KMAX:SMAX,
--format json|csv, --out PATH.  Command-line flags override config values.
Reports are deterministic for fixed (config, seed); timing goes to stderr.
Exit status is 0 exactly when the aggregate verdict is "pass".
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction

from . import freemod, functors, weightmod
from .algebra import normal_form, check_theta_automorphism, parse_word_expr, theta
from .poly import PolyHH, parse_poly
from .report import (emit, load_config, make_report, parse_rational_list,
                     parse_window)
from .scan import SCAN_CSV_COLUMNS, builtin_scan_grid, run_scan
from .weightmod import (Window, dual_consistency, simplicity_criterion_weight,
                        singular_vectors, verma_check, weight_bracket_report,
                        wv_text)

SUITES = ("nf", "verify-free", "saturate", "omega-quotient", "verify-weight",
          "singular", "verma-check", "scan", "twist-check", "iso-check",
          "intertwine")


def _free_spec_from_cfg(cfg: dict) -> freemod.FreeModuleSpec:
    family = cfg.get("family", "gamma")
    lam = Fraction(cfg.get("lambda", "1"))
    if family == "gamma":
        return freemod.make_gamma(lam, Fraction(cfg.get("a", "0")),
                                  Fraction(cfg.get("b", "0")))
    if family == "theta":
        return freemod.make_theta_mod(lam, Fraction(cfg.get("a", "0")),
                                      Fraction(cfg.get("b", "0")))
    if family == "omega":
        return freemod.make_omega(lam, Fraction(cfg.get("b", "0")),
                                  parse_rational_list(cfg.get("beta1", "0")))
    raise ValueError(f"unknown free family {family!r}")


def _weight_spec_from_cfg(cfg: dict, prefix: str = "") -> weightmod.WeightModuleSpec:
    get = lambda key, default: cfg.get(prefix + key, default)
    family = get("family", "M")
    alpha = Fraction(get("alpha", "0"))
    beta = Fraction(get("beta", "1"))
    lam = Fraction(get("lambda", "1"))
    a = Fraction(get("a", "-1"))
    if family == "M":
        return weightmod.make_weight_m(alpha, beta, lam, a, Fraction(get("b", "-2")))
    if family == "N":
        return weightmod.make_weight_n(alpha, beta, lam, a, Fraction(get("b", "-2")))
    if family == "V":
        return weightmod.make_weight_v(alpha, beta, lam, a,
                                       parse_rational_list(get("beta1", "1,1")))
    raise ValueError(f"unknown weight family {family!r}")


# -- suite handlers: each returns (cases, aggregate_pass, csv_columns) ----------

def _suite_nf(cfg, args, rng, window):
    words = list(args.words)
    if not words and cfg.get("word"):
        words = [cfg["word"]]
    if not words:
        words = ["e*f - f*e", "f*e*h", "eb^-1*eb", "h*eb^-1"]
    cases = []
    ok = True
    for text in words:
        elem = parse_word_expr(text, localized=True)
        nf = normal_form(elem, localized=True)
        again = normal_form(nf, localized=True)
        idem = again == nf
        ok = ok and idem
        cases.append({"input": text, "normal_form": nf.to_text(),
                      "idempotent": idem})
    return cases, ok, None


def _free_grid_specs(cfg, family):
    """Cross product of the lambda/a/b grids for one free family.

    Grid values are comma-separated rationals; omega fixes beta1 (itself a
    coefficient list) and grids over lambda and b only.
    """
    lams = parse_rational_list(cfg.get("lambda", "1"))
    bs = parse_rational_list(cfg.get("b", "0"))
    specs = []
    if family == "omega":
        beta1 = parse_rational_list(cfg.get("beta1", "0"))
        for lam in lams:
            for b in bs:
                specs.append(freemod.make_omega(lam, b, beta1))
        return specs
    mk = freemod.make_gamma if family == "gamma" else freemod.make_theta_mod
    for lam in lams:
        for a in parse_rational_list(cfg.get("a", "0")):
            for b in bs:
                specs.append(mk(lam, a, b))
    return specs


def _suite_verify_free(cfg, args, rng, window):
    families = [f.strip() for f in cfg.get("families", "gamma,theta,omega").split(",")]
    trials = int(cfg.get("trials", "50"))
    n_specs = int(cfg.get("specs", "5"))
    explicit = any(key in cfg for key in ("lambda", "a", "b", "beta1"))
    cases = []
    ok = True
    for family in families:
        if explicit:
            specs = _free_grid_specs(cfg, family)
        else:
            specs = [freemod.random_free_spec(rng, family) for _ in range(n_specs)]
        for spec in specs:
            rep = freemod.verify_axioms(spec, trials=trials,
                                        seed=rng.randint(0, 10**6))
            ok = ok and rep["ok"]
            cases.append({"family": family, "params": rep["params"],
                          "pairs": rep["pairs"], "seed": rep["seed"],
                          "trials": rep["trials"], "pass": rep["ok"]})
    return cases, ok, None


def _suite_saturate(cfg, args, rng, window):
    spec = _free_spec_from_cfg(cfg)
    seed_text = args.words[0] if args.words else cfg.get("seed_poly", "h")
    seed_poly = parse_poly(seed_text)
    cap_vals = [int(x) for x in cfg.get("cap", "8,8").split(",")]
    result = freemod.submodule_saturate(spec, seed_poly, cap=(cap_vals[0], cap_vals[1]))
    case = {"family": spec.family, "params": spec.params(),
            "seed_poly": seed_poly.to_text(), "cap": cap_vals,
            "basis_size": len(result.basis),
            "contains_one": result.contains_one,
            "saturated": result.saturated,
            "basis": [p.to_text() for p in result.basis]}
    expected = cfg.get("expect_one")
    ok = True
    if expected is not None:
        ok = result.contains_one == (expected.lower() == "true")
        case["expected_contains_one"] = expected.lower() == "true"
    return [case], ok, None


def _suite_omega_quotient(cfg, args, rng, window):
    lam = Fraction(cfg.get("lambda", "1"))
    beta1 = parse_rational_list(cfg.get("beta1", "0"))
    spec = freemod.make_omega(lam, 0, beta1)
    layers = [int(x) for x in cfg.get("i", "0,1,2,3").split(",")]
    n_max = int(cfg.get("n_max", "8"))
    cases = []
    ok = True
    for i in layers:
        d_lam, d_a = freemod.omega_quotient_delta_params(spec, i)
        layer_ok = True
        for x in ("e", "f", "h"):
            for n in range(n_max + 1):
                g = PolyHH.term(n, 0)
                got = freemod.omega_layer_action(spec, i, x, g)
                want = weightmod.delta_action(1, d_lam, d_a, x, g)
                if got != want:
                    layer_ok = False
        ok = ok and layer_ok
        cases.append({"i": i, "delta_lambda": d_lam, "delta_a": d_a,
                      "max_n": n_max, "pass": layer_ok})
    return cases, ok, None


def _suite_verify_weight(cfg, args, rng, window):
    families = [f.strip() for f in cfg.get("families", "M,N,V").split(",")]
    trials = int(cfg.get("trials", "50"))
    n_specs = int(cfg.get("specs", "3"))
    cases = []
    ok = True
    for family in families:
        if "alpha" in cfg:
            specs = [_weight_spec_from_cfg({**cfg, "family": family})]
        else:
            specs = [weightmod.random_weight_spec(rng, family)
                     for _ in range(n_specs)]
        for spec in specs:
            dual = dual_consistency(spec, window=window, trials=trials,
                                    seed=rng.randint(0, 10**6))
            brk = weight_bracket_report(spec, window=window)
            good = dual["ok"] and brk["ok"]
            ok = ok and good
            cases.append({"family": family, "params": spec.params(),
                          "dual_ok": dual["ok"], "bracket_ok": brk["ok"],
                          "pass": good})
    return cases, ok, None


def _suite_singular(cfg, args, rng, window):
    spec = _weight_spec_from_cfg(cfg)
    crit = simplicity_criterion_weight(spec)
    report = singular_vectors(spec, window)
    hits = [{"k": h.k, "s": h.s, "vector": wv_text(h.vector),
             "killed_by": list(h.killed_by), "h_eigenvalue": h.h_eigenvalue}
            for h in report.hits]
    if crit.simple:
        agrees = not report.found
    else:
        agrees = any(h.k == crit.witness[0] and h.s == crit.witness[1]
                     and h.killed_by == crit.pair for h in report.hits)
    case = {"family": spec.family, "params": spec.params(),
            "criterion_simple": crit.simple,
            "witness": list(crit.witness) if crit.witness else None,
            "reason": crit.reason, "hits": hits, "pass": agrees}
    return [case], agrees, None


def _suite_verma_check(cfg, args, rng, window):
    spec = _weight_spec_from_cfg(cfg)
    if "hit" in cfg:
        parts = [int(x) for x in cfg["hit"].split(",")]
        hit = (parts[0], parts[1])
    else:
        crit = simplicity_criterion_weight(spec)
        if crit.simple:
            raise ValueError("module is simple; give hit=K,S explicitly")
        hit = crit.witness
    depth = int(cfg.get("depth", "4"))
    win = Window(hit[0] - depth, hit[0] + depth, max(window.s_max, hit[1] + 2))
    rep = verma_check(spec, hit, win)
    case = {"family": spec.family, "params": spec.params(),
            "hit": list(hit), "direction": rep.direction,
            "depth_dims": rep.depth_dims, "expected_dims": rep.expected_dims,
            "character_ok": rep.character_ok,
            "quotient_nilpotent_ok": rep.quotient_nilpotent_ok,
            "pass": rep.passed}
    return [case], rep.passed, None


def _suite_scan(cfg, args, rng, window):
    families = cfg.get("families")
    specs = builtin_scan_grid()
    if families:
        keep = {f.strip() for f in families.split(",")}
        specs = [s for s in specs if s.family in keep]
    rows = run_scan(specs)
    ok = all(r["agrees"] for r in rows)
    return rows, ok, SCAN_CSV_COLUMNS


def _suite_twist_check(cfg, args, rng, window):
    spec = _weight_spec_from_cfg(cfg)
    if spec.family != "M":
        raise ValueError("twist-check runs on the M family")
    z_values = parse_rational_list(cfg.get("z", "1,-2,1/2"))
    cases = []
    ok = True
    for z in z_values:
        auto = check_theta_automorphism(z)
        iso = functors.check_twist_iso(z, spec, window)
        inverse_ok = all(
            theta(-z, theta(z, x)) == normal_form(x, localized=True)
            for x in ("e", "f", "h", "eb", "fb", "hb", "ebinv"))
        good = auto["ok"] and iso.intertwines and inverse_ok
        ok = ok and good
        cases.append({"z": z, "automorphism_ok": auto["ok"],
                      "intertwines": iso.intertwines, "rank": iso.rank,
                      "failing_probe": iso.failing_probe,
                      "inverse_ok": inverse_ok, "window": iso.window,
                      "pass": good})
    return cases, ok, None


def _suite_iso_check(cfg, args, rng, window):
    cases = []
    ok = True
    kinds = [k.strip() for k in cfg.get("kinds", "lambda-rescale,vm").split(",")]
    if "lambda-rescale" in kinds:
        spec_a = _weight_spec_from_cfg(cfg)
        cfg_b = dict(cfg)
        cfg_b["lambda"] = cfg.get("lambda2", "3")
        spec_b = _weight_spec_from_cfg(cfg_b)
        res = functors.lambda_rescale_iso(spec_a, spec_b, window)
        ok = ok and res.intertwines
        cases.append({"kind": "lambda-rescale",
                      "params_a": spec_a.params(), "params_b": spec_b.params(),
                      "intertwines": res.intertwines, "rank": res.rank,
                      "failing_probe": res.failing_probe, "window": res.window,
                      "pass": res.intertwines})
    if "vm" in kinds:
        spec_v = _weight_spec_from_cfg({**cfg, "family": "V",
                                        "alpha": cfg.get("alpha", "0"),
                                        "beta": cfg.get("beta", "3"),
                                        "a": cfg.get("a", "1"),
                                        "beta1": cfg.get("beta1", "1,1")})
        if "b_m" in cfg:
            b_m = Fraction(cfg["b_m"])
        else:
            b_m = functors.vm_matching_b(spec_v)
        spec_m = weightmod.make_weight_m(spec_v.alpha, spec_v.beta, spec_v.lam,
                                         -spec_v.a * spec_v.a, b_m)
        res = functors.vm_iso_check(spec_v, spec_m, window)
        ok = ok and res.intertwines
        cases.append({"kind": "vm",
                      "params_v": spec_v.params(), "params_m": spec_m.params(),
                      "intertwines": res.intertwines, "rank": res.rank,
                      "failing_probe": res.failing_probe,
                      "details": res.details, "window": res.window,
                      "pass": res.intertwines})
    return cases, ok, None


def _suite_intertwine(cfg, args, rng, window):
    spec_a = _weight_spec_from_cfg(cfg, prefix="a_") if "a_family" in cfg \
        else weightmod.make_weight_n(0, 1, 1, 3, Fraction(1, 2))
    spec_b = _weight_spec_from_cfg(cfg, prefix="b_") if "b_family" in cfg \
        else weightmod.make_weight_m(0, 1, 1, 3, Fraction(1, 2))
    result = functors.intertwiner_search(spec_a, spec_b, window)
    rank = result["maps"][0].rank() if result["maps"] else 0
    intertwines = result["dimension"] > 0 and result["verified"]
    case = {"params_a": spec_a.params(), "params_b": spec_b.params(),
            "intertwines": intertwines, "rank": rank,
            "dimension": result["dimension"], "verified": result["verified"],
            "window": result["window"],
            "codomain_window": result["codomain_window"]}
    expect = cfg.get("expect_dimension")
    ok = result["verified"]
    if expect is not None:
        ok = ok and result["dimension"] == int(expect)
        case["expected_dimension"] = int(expect)
    return [case], ok, None


_HANDLERS = {
    "nf": _suite_nf,
    "verify-free": _suite_verify_free,
    "saturate": _suite_saturate,
    "omega-quotient": _suite_omega_quotient,
    "verify-weight": _suite_verify_weight,
    "singular": _suite_singular,
    "verma-check": _suite_verma_check,
    "scan": _suite_scan,
    "twist-check": _suite_twist_check,
    "iso-check": _suite_iso_check,
    "intertwine": _suite_intertwine,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="takiff-rep",
        description="Exact computations with Takiff sl2 module families.")
    parser.add_argument("suite", choices=SUITES)
    parser.add_argument("words", nargs="*",
                        help="suite-specific inline input (nf words, "
                             "saturate seed polynomial)")
    parser.add_argument("--config", help="KEY=VALUE config file")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--window", default=None, metavar="KMIN:KMAX:SMAX")
    parser.add_argument("--format", dest="fmt", choices=("json", "csv"),
                        default=None)
    parser.add_argument("--out", default=None)
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    for i, tok in enumerate(argv[:-1]):
        # fold the value into the flag so windows with negative KMIN parse
        if tok == "--window":
            argv[i:i + 2] = [f"--window={argv[i + 1]}"]
            break
    args = parser.parse_args(argv)

    started = time.monotonic()
    try:
        cfg = load_config(args.config) if args.config else {}
        seed = args.seed if args.seed is not None else int(cfg.get("seed", "0"))
        window = parse_window(args.window or cfg.get("window", "-5:5:5"))
        fmt = args.fmt or cfg.get("format", "json")
        out_path = args.out or cfg.get("out")
        rng = random.Random(seed)
        cases, ok, csv_columns = _HANDLERS[args.suite](cfg, args, rng, window)
    except (ValueError, OSError) as exc:
        print(f"takiff-rep: error: {exc}", file=sys.stderr)
        return 2

    config_echo = dict(sorted(cfg.items()))
    config_echo["seed"] = seed
    config_echo["window"] = window.as_text()
    if args.words:
        config_echo["args"] = list(args.words)
    report = make_report(args.suite, config_echo, cases, ok)
    text = emit(report, fmt, csv_columns)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    elapsed = time.monotonic() - started
    print(f"takiff-rep: suite={args.suite} aggregate="
          f"{'pass' if ok else 'fail'} elapsed={elapsed:.2f}s",
          file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
