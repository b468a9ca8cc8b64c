"""Command-line front end.

Every invocation emits exactly one JSON report object on standard output
with "status", "facts", and "witnesses" fields.  Exit codes: 0 on
success / property true, 1 on property failure / false, 2 on usage or
validation errors.  Randomness is seed-controlled; the seed is recorded
in the report.  The environment variable ORE_HOPF_SEED supplies the
default seed.
"""

import argparse
import json
import os
import sys

from .abgroup import AbelianGroup, Character, SubgroupCharacter, joint_kernel
from .catalog import catalog_entry, catalog_names
from .exprparse import ParseError, element_to_expr, parse_element, serialize_element
from .hopfcore import (AlgebraSpec, HopfElem, SpecError, antipode, antipode_order,
                       change_of_variables_check, comultiply, counit,
                       cyclotomic_to_literal, hopf_axiom_check,
                       literal_to_cyclotomic, validate_spec)
from .quotient import QuotientSpec, hopf_ideal_check, quotient_basis
from .report import Report
from .reps import (ClassifyError, ModuleRep, are_isomorphic, build_Vbar_diff,
                   build_Vx_diff, build_Vx_skew, build_Vxy_skew, build_Vy_diff,
                   build_Vy_skew, build_induced_skew, build_torsion_char,
                   classify_simple, is_simple_burnside, rep_check,
                   torsion_profile)


class ConfigError(ValueError):
    pass


_TOP_KEYS = {"conductor", "group", "chi", "eta", "b", "c", "beta",
             "quotient", "seed"}
_REQUIRED_KEYS = ("conductor", "group", "chi", "eta", "b", "c", "beta")


class Config:
    """Validated configuration: the algebra spec, optional quotient data,
    and an optional default seed."""

    __slots__ = ("spec", "quotient", "seed")

    def __init__(self, spec: AlgebraSpec, quotient, seed):
        self.spec = spec
        self.quotient = quotient
        self.seed = seed


def _exponent_vector(data, key, length):
    value = data[key]
    if (not isinstance(value, list) or len(value) != length
            or not all(isinstance(v, int) for v in value)):
        raise ConfigError(f"config key '{key}' must be a list of {length} "
                          f"integer(s), one per group generator")
    return value


def config_from_dict(data) -> Config:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    for key in _REQUIRED_KEYS:
        if key not in data:
            raise ConfigError(f"missing config key '{key}'")
    unknown = sorted(set(data) - _TOP_KEYS)
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")

    conductor = data["conductor"]
    if not isinstance(conductor, int) or conductor < 1:
        raise ConfigError("config key 'conductor' must be a positive integer")

    gdata = data["group"]
    if not isinstance(gdata, dict):
        raise ConfigError("config key 'group' must be an object with "
                          "'free_rank' and 'torsion'")
    for key in ("free_rank", "torsion"):
        if key not in gdata:
            raise ConfigError(f"group section missing key '{key}'")
    unknown = sorted(set(gdata) - {"free_rank", "torsion"})
    if unknown:
        raise ConfigError(f"unknown group key(s): {', '.join(unknown)}")
    free_rank = gdata["free_rank"]
    torsion = gdata["torsion"]
    if not isinstance(free_rank, int) or free_rank < 0:
        raise ConfigError("group key 'free_rank' must be a non-negative integer")
    if not isinstance(torsion, list) or not all(isinstance(t, int) for t in torsion):
        raise ConfigError("group key 'torsion' must be a list of integers")
    if any(t < 2 for t in torsion):
        raise ConfigError("torsion orders must be >= 2")
    group = AbelianGroup(free_rank, tuple(torsion))

    chi = Character(group, conductor, _exponent_vector(data, "chi", group.ngens))
    eta = Character(group, conductor, _exponent_vector(data, "eta", group.ngens))
    b = group.element(_exponent_vector(data, "b", group.ngens))
    c = group.element(_exponent_vector(data, "c", group.ngens))
    try:
        beta = literal_to_cyclotomic(data["beta"], conductor)
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError(f"config key 'beta': {exc}") from exc

    spec = validate_spec(group, chi, eta, b, c, beta)

    quotient = None
    if "quotient" in data:
        qdata = data["quotient"]
        if not isinstance(qdata, dict):
            raise ConfigError("config key 'quotient' must be an object with "
                              "'lambda1' and 'lambda2'")
        for key in ("lambda1", "lambda2"):
            if key not in qdata:
                raise ConfigError(f"quotient section missing key '{key}'")
        unknown = sorted(set(qdata) - {"lambda1", "lambda2"})
        if unknown:
            raise ConfigError(f"unknown quotient key(s): {', '.join(unknown)}")
        try:
            lam1 = literal_to_cyclotomic(qdata["lambda1"], conductor)
            lam2 = literal_to_cyclotomic(qdata["lambda2"], conductor)
        except (ValueError, TypeError, KeyError) as exc:
            raise ConfigError(f"quotient lambda literal: {exc}") from exc
        quotient = QuotientSpec(spec, lam1, lam2)

    seed = data.get("seed")
    if seed is not None and not isinstance(seed, int):
        raise ConfigError("config key 'seed' must be an integer")
    return Config(spec, quotient, seed)


def parse_config(text: str) -> Config:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON (line {exc.lineno}, "
                          f"column {exc.colno}): {exc.msg}") from exc
    return config_from_dict(data)


def _load_config(path: str) -> Config:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    return parse_config(text)


def _resolve_seed(flag_seed, config: Config):
    if flag_seed is not None:
        return flag_seed
    if config is not None and config.seed is not None:
        return config.seed
    env = os.environ.get("ORE_HOPF_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ConfigError("ORE_HOPF_SEED must be an integer") from exc
    return 0


def _emit(status: str, facts: dict, witnesses=None) -> None:
    print(json.dumps({"status": status, "facts": facts,
                      "witnesses": list(witnesses or [])}, indent=2))


def _emit_report(report: Report) -> int:
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.passed else 1


def serialize_tensor(t) -> list:
    """Sorted [(left monomial, right monomial, coeff)] over the raw basis,
    each monomial as [group exponents, i, j]."""
    spec = t.spec
    out = []
    for (k1, k2), coeff in t.terms.items():
        left = HopfElem(spec, {k1: coeff})
        rows = left.sorted_raw()
        assert len(rows) == 1
        exps1, i1, j1, c1 = rows[0]
        right = HopfElem(spec, {k2: spec.scalar(1)})
        rows = right.sorted_raw()
        assert len(rows) == 1
        exps2, i2, j2, c2 = rows[0]
        c = c1 * c2
        if c.is_zero():
            continue
        out.append([[list(exps1), i1, j1], [list(exps2), i2, j2],
                    cyclotomic_to_literal(c)])
    out.sort(key=lambda row: (row[0][0], row[0][1], row[0][2],
                              row[1][0], row[1][1], row[1][2]))
    return out


# families exposed by `module build`
def _need(params: dict, family: str, *keys):
    for key in keys:
        if key not in params:
            raise ConfigError(f"family '{family}' params missing key '{key}'")
    unknown = sorted(set(params) - set(keys))
    if unknown:
        raise ConfigError(f"family '{family}' got unknown param(s): "
                          f"{', '.join(unknown)}")


def _group_character(spec, params, key):
    exps = params[key]
    if not isinstance(exps, list):
        raise ConfigError(f"param '{key}' must be a list of integer exponents, "
                          f"one per group generator")
    return Character(spec.group, spec.conductor, exps)


def _kernel_character(spec, sub, params, key):
    exps = params[key]
    if not isinstance(exps, list):
        raise ConfigError(f"param '{key}' must be a list of integer exponents, "
                          f"one per Hermite generator of the kernel subgroup "
                          f"({len(sub.rows)} expected)")
    return SubgroupCharacter(sub, spec.conductor, exps)


def _literal(spec, params, key):
    try:
        return literal_to_cyclotomic(params[key], spec.conductor)
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError(f"param '{key}': {exc}") from exc


def build_family_module(family: str, params: dict, spec: AlgebraSpec) -> ModuleRep:
    if not isinstance(params, dict):
        raise ConfigError("--params must be a JSON object")
    if family == "torsion-char":
        _need(params, family, "lam")
        return build_torsion_char(_group_character(spec, params, "lam"), spec)
    if family == "skew-vx":
        _need(params, family, "alpha", "lam")
        lam = _kernel_character(spec, spec.chi.kernel(), params, "lam")
        return build_Vx_skew(_literal(spec, params, "alpha"), lam, spec)
    if family == "skew-vy":
        _need(params, family, "alpha", "lam")
        lam = _kernel_character(spec, spec.eta.kernel(), params, "lam")
        return build_Vy_skew(_literal(spec, params, "alpha"), lam, spec)
    if family == "skew-vxy":
        _need(params, family, "alpha_x", "alpha_y", "t", "lam")
        t = params["t"]
        if not isinstance(t, int):
            raise ConfigError("param 't' must be an integer")
        lam = _kernel_character(spec, spec.chi.kernel(), params, "lam")
        return build_Vxy_skew(_literal(spec, params, "alpha_x"),
                              _literal(spec, params, "alpha_y"), lam, t, spec)
    if family == "induced":
        _need(params, family, "kvals", "lam")
        kvals = params["kvals"]
        if not isinstance(kvals, list) or len(kvals) != 2:
            raise ConfigError("param 'kvals' must be a list of two scalars")
        kvals = [literal_to_cyclotomic(k, spec.conductor) for k in kvals]
        sub = joint_kernel([spec.chi, spec.eta])
        lam = _kernel_character(spec, sub, params, "lam")
        return build_induced_skew(2, [spec.chi, spec.eta], kvals, lam, spec)
    if family == "diff-vbar":
        _need(params, family, "rho")
        return build_Vbar_diff(_group_character(spec, params, "rho"), spec)
    if family == "diff-vx":
        _need(params, family, "rho", "lam", "mu")
        return build_Vx_diff(_group_character(spec, params, "rho"),
                             _literal(spec, params, "lam"),
                             _literal(spec, params, "mu"), spec)
    if family == "diff-vy":
        _need(params, family, "rho", "lam", "mu")
        return build_Vy_diff(_group_character(spec, params, "rho"),
                             _literal(spec, params, "lam"),
                             _literal(spec, params, "mu"), spec)
    raise ConfigError(
        f"unknown module family {family!r}; known: torsion-char, skew-vx, "
        f"skew-vy, skew-vxy, induced, diff-vbar, diff-vx, diff-vy")


def _load_module(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read module file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"module file {path!r} is not valid JSON "
                          f"(line {exc.lineno}, column {exc.colno}): "
                          f"{exc.msg}") from exc
    if not isinstance(data, dict) or "config" not in data or "module" not in data:
        raise ConfigError(f"module file {path!r} must be an object with "
                          f"'config' and 'module' keys")
    config = config_from_dict(data["config"])
    module = ModuleRep.from_dict(config.spec, data["module"])
    return config.spec, module


# ---------------------------------------------------------------- commands

def _cmd_validate(args) -> int:
    config = _load_config(args.config)
    spec = config.spec
    facts = {
        "config": spec.config_dict(),
        "mode": spec.mode.value,
        "q": cyclotomic_to_literal(spec.q),
        "antipode_order": antipode_order(spec),
    }
    if config.quotient is not None:
        facts["quotient"] = {"n": config.quotient.n, "m": config.quotient.m}
    _emit("pass", facts)
    return 0


def _element_command(args, transform) -> int:
    config = _load_config(args.config)
    elem = parse_element(args.expr, config.spec)
    facts = {"input": args.expr}
    facts.update(transform(elem, config))
    _emit("pass", facts)
    return 0


def _cmd_nf(args) -> int:
    def transform(elem, config):
        return {"normal_form": serialize_element(elem),
                "expression": element_to_expr(elem)}
    return _element_command(args, transform)


def _cmd_coproduct(args) -> int:
    def transform(elem, config):
        return {"coproduct": serialize_tensor(comultiply(elem)),
                "counit": cyclotomic_to_literal(counit(elem))}
    return _element_command(args, transform)


def _cmd_antipode(args) -> int:
    if args.power < 0:
        raise ConfigError("--power must be a non-negative integer")

    def transform(elem, config):
        out = elem
        for _ in range(args.power):
            out = antipode(out)
        return {"power": args.power,
                "result": serialize_element(out),
                "expression": element_to_expr(out)}
    return _element_command(args, transform)


def _cmd_hopf_check(args) -> int:
    config = _load_config(args.config)
    seed = _resolve_seed(args.seed, config)
    report = hopf_axiom_check(config.spec, sample_count=args.samples,
                              max_degree=args.max_degree, seed=seed)
    return _emit_report(report)


def _cmd_quotient_check(args) -> int:
    config = _load_config(args.config)
    if config.quotient is None:
        raise ConfigError("config has no quotient section; quotient-check "
                          "needs 'quotient': {lambda1, lambda2}")
    seed = _resolve_seed(args.seed, config)
    ideal = hopf_ideal_check(config.quotient)
    basis = quotient_basis(config.quotient, samples=args.samples, seed=seed)
    qs = config.quotient
    basis_ok = basis["rank"] == qs.n * qs.m
    facts = {
        "hopf_ideal": ideal.facts,
        "basis": basis,
        "rank_expected": qs.n * qs.m,
    }
    report = Report("quotient_check", ideal.passed and basis_ok, facts,
                    witnesses=ideal.witnesses, seed=seed)
    return _emit_report(report)


def _cmd_module_build(args) -> int:
    config = _load_config(args.config)
    try:
        params = json.loads(args.params)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"--params is not valid JSON: {exc.msg}") from exc
    module = build_family_module(args.family, params, config.spec)
    payload = {"config": config.spec.config_dict(),
               "family": args.family,
               "params": params,
               "module": module.to_dict()}
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_module_check(args) -> int:
    spec, module = _load_module(args.file)
    return _emit_report(rep_check(module, spec))


def _cmd_module_simple(args) -> int:
    spec, module = _load_module(args.file)
    return _emit_report(is_simple_burnside(module))


def _cmd_module_iso(args) -> int:
    spec_a, mod_a = _load_module(args.fileA)
    spec_b, mod_b = _load_module(args.fileB)
    if spec_a.fingerprint() != spec_b.fingerprint():
        raise ConfigError("modules belong to different algebras "
                          "(config mismatch)")
    result = are_isomorphic(mod_a, mod_b)
    facts = {"result": result.status.replace("_", " ")}
    if result.detail:
        facts["detail"] = result.detail
    status = "pass" if result.status == "isomorphic" else "fail"
    _emit(status, facts)
    return 0 if result.status == "isomorphic" else 1


def _cmd_module_classify(args) -> int:
    spec, module = _load_module(args.file)
    try:
        params = classify_simple(module, spec)
    except ClassifyError as exc:
        _emit("fail", {"error": str(exc)})
        return 1
    profile = torsion_profile(module)
    _emit("pass", {"family": params.family,
                   "parameters": params.describe(),
                   "dimension": module.dim,
                   "torsion_profile": profile})
    return 0


def _cmd_catalog(args) -> int:
    if args.name is None:
        _emit("pass", {"entries": catalog_names()})
        return 0
    entry = catalog_entry(args.name)
    out = entry.report.to_dict()
    out["facts"]["name"] = entry.name
    out["facts"]["spec"] = entry.spec.config_dict()
    print(json.dumps(out, indent=2))
    return 0 if entry.report.passed else 1


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orehopf",
        description="Exact Hopf algebra computations for iterated Ore "
                    "extensions of abelian group algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a config and report the "
                                        "derived algebra data")
    p.add_argument("config")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("nf", help="normalize an element expression")
    p.add_argument("config")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("coproduct", help="coproduct and counit of an element")
    p.add_argument("config")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_coproduct)

    p = sub.add_parser("antipode", help="iterated antipode of an element")
    p.add_argument("config")
    p.add_argument("expr")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=_cmd_antipode)

    p = sub.add_parser("hopf-check", help="randomized Hopf axiom verification")
    p.add_argument("config")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_hopf_check)

    p = sub.add_parser("quotient-check", help="Hopf ideal and basis checks "
                                              "for the quotient in the config")
    p.add_argument("config")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_quotient_check)

    p = sub.add_parser("module", help="finite-dimensional module operations")
    msub = p.add_subparsers(dest="module_command", required=True)

    m = msub.add_parser("build", help="build a module from family parameters; "
                                      "emits a self-contained module file")
    m.add_argument("family")
    m.add_argument("config")
    m.add_argument("--params", required=True,
                   help="family parameters as a JSON object")
    m.set_defaults(func=_cmd_module_build)

    m = msub.add_parser("check", help="verify the defining relations")
    m.add_argument("file")
    m.set_defaults(func=_cmd_module_check)

    m = msub.add_parser("simple", help="Burnside simplicity certificate")
    m.add_argument("file")
    m.set_defaults(func=_cmd_module_simple)

    m = msub.add_parser("iso", help="decide isomorphism of two modules")
    m.add_argument("fileA")
    m.add_argument("fileB")
    m.set_defaults(func=_cmd_module_iso)

    m = msub.add_parser("classify", help="identify the family and parameters "
                                         "of a simple module")
    m.add_argument("file")
    m.set_defaults(func=_cmd_module_classify)

    p = sub.add_parser("catalog", help="build a named catalog entry and run "
                                       "its fact checks")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ClassifyError as exc:
        _emit("fail", {"error": str(exc)})
        return 1
    except (ConfigError, ParseError, SpecError) as exc:
        _emit("error", {"error": str(exc)})
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        _emit("error", {"error": str(exc)})
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
