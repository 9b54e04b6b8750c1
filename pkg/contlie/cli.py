"""Command-line front end: parse specs, run derivations and checks, print reports."""

import argparse
import json
import sys
from dataclasses import dataclass

from .complexes import CECH_DE_RHAM, builtin_spec, read_spec, serialize_spec
from .convert import (
    to_check_dataframe,
    to_kernel_dataframe,
    to_presentation_dict,
    to_relation_dataframe,
    to_tree_dict,
)
from .core import GenSymbol, dga_law_suite
from .exception import ContlieError, NoIndependentPath, ValidationError
from .foliation import (
    cech_form,
    check_product_leibniz,
    godbillon_vey,
    verify_delta_squared_zero,
)
from .lie import (
    DiscreteE,
    admissible_triples,
    check_jacobi_numeric,
    check_jacobi_symbolic,
    distinct_triples,
    extract_presentation,
    grading_check,
    render_kernels,
    render_presentation,
    sl2_kernels,
)
from .readwrite import read_kernels
from .relations import derive_tree, independent_paths, mark_dependence, render_tree
from .utils import parse_degree, rng_from_seed

__all__ = ["COMMANDS", "RunConfig", "build_parser", "config_from_args", "run", "main"]

COMMANDS = ("check-dga", "derive", "lie", "jacobi", "demo-gv")
FORMATS = ("text", "machine")

LEIBNIZ_PAIRS = (((1, 0), (1, 0)), ((0, 1), (1, 0)), ((1, 1), (2, 0)))


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one CLI run."""

    command: str
    spec_path: str = None
    chi: tuple = None
    phi: tuple = None
    depth: int = 6
    output_format: str = "text"
    rng_seed: int = 0
    tolerance: float = 1e-12
    kernels_path: str = None

    def validate(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise ValidationError(f"--format must be one of {FORMATS}")
        if self.depth < 1:
            raise ValidationError(f"--depth must be >= 1, got {self.depth}")
        if not self.tolerance > 0:
            raise ValidationError(f"--tol must be positive, got {self.tolerance}")
        if self.rng_seed < -1:
            raise ValidationError(f"--seed must be >= 0 or -1, got {self.rng_seed}")
        if self.command in ("derive", "lie") and self.chi is None:
            raise ValidationError(f"{self.command} needs --chi")
        if self.command == "demo-gv" and self.chi is not None and len(self.chi) != 2:
            raise ValidationError(f"demo-gv needs a bidegree --chi p,q, got {self.chi}")
        if self.phi is not None and self.chi is None:
            raise ValidationError("--phi needs --chi")
        if self.chi is not None and self.phi is not None and len(self.chi) != len(self.phi):
            raise ValidationError("--chi and --phi have different arities")
        return self


def build_parser():
    parser = argparse.ArgumentParser(
        prog="contlie",
        description="Derive relation trees and continual Lie algebra presentations.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--spec", dest="spec_path", help="complex-spec TOML file")
    parser.add_argument("--chi", help="degree of chi, 'p' or 'p,q'")
    parser.add_argument("--phi", help="degree of phi, by default that of chi")
    parser.add_argument("--depth", type=int, default=6)
    parser.add_argument("--format", dest="output_format", choices=FORMATS, default="text")
    parser.add_argument("--seed", dest="rng_seed", type=int, default=0)
    parser.add_argument("--tol", dest="tolerance", type=float, default=1e-12)
    parser.add_argument("--kernels", dest="kernels_path", help="numeric kernel file")
    return parser


def config_from_args(args):
    """Build and validate a RunConfig from parsed arguments."""
    chi = None if args.chi is None else parse_degree(args.chi)
    phi = None if args.phi is None else parse_degree(args.phi)
    return RunConfig(
        command=args.command,
        spec_path=args.spec_path,
        chi=chi,
        phi=phi,
        depth=args.depth,
        output_format=args.output_format,
        rng_seed=args.rng_seed,
        tolerance=args.tolerance,
        kernels_path=args.kernels_path,
    ).validate()


def _spec(config):
    if config.spec_path is not None:
        spec = read_spec(config.spec_path)
    elif config.chi is not None:
        spec = builtin_spec(len(config.chi))
    elif config.command == "demo-gv":
        spec = CECH_DE_RHAM
    else:
        spec = builtin_spec(1)
    if config.chi is not None and len(config.chi) != spec.arity:
        raise ValidationError(
            f"--chi has {len(config.chi)} components but the spec has arity {spec.arity}"
        )
    return spec


def _seeds(config):
    chi = GenSymbol("chi", config.chi)
    phi = chi if config.phi is None else GenSymbol("phi", config.phi)
    return chi, phi


def _table(df):
    if df.empty:
        return ["(empty)"]
    return df.to_string(index=False).splitlines()


class _Report:
    """Text lines and a machine document built side by side."""

    def __init__(self, spec, config, seed):
        self.lines = serialize_spec(spec).splitlines()
        self.doc = {"spec": serialize_spec(spec), "command": config.command}
        self.seed = seed

    def section(self, title, lines):
        self.lines += ["", f"== {title}"] + list(lines)

    def emit(self, config):
        if config.output_format == "machine":
            print(json.dumps(self.doc, indent=2))
        else:
            print("\n".join(self.lines))


class _Rows:
    def __init__(self, rows):
        self.rows = rows


def _check_dga(config, spec, report):
    laws = dga_law_suite(spec, nsamples=1000, seed=report.seed)
    delta = verify_delta_squared_zero(3)
    leibniz = []
    for (a, b), (c, d) in LEIBNIZ_PAIRS:
        holds, _, _ = check_product_leibniz(
            cech_form("u", a, b), cech_form("v", c, d), sign="koszul"
        )
        leibniz.append({"left": f"({a},{b})", "right": f"({c},{d})", "holds": holds})
    report.section(f"dga laws (seed {report.seed})", _table(to_check_dataframe(laws)))
    report.section("total differential squared", _table(to_check_dataframe(delta)))
    report.section("product leibniz (koszul)", _table(to_check_dataframe(_Rows(leibniz))))
    report.doc.update(
        {"seed": report.seed, "laws": laws.rows(), "delta-squared": delta.rows, "leibniz": leibniz}
    )
    passed = laws.passed and delta.passed and all(r["holds"] for r in leibniz)
    report.doc["passed"] = passed
    return passed


def _derive(config, spec, report):
    chi, phi = _seeds(config)
    tree = mark_dependence(derive_tree(spec, chi, phi, depth_cap=config.depth))
    paths = independent_paths(tree)
    report.section("relation tree", render_tree(tree))
    report.section("nodes", _table(to_relation_dataframe(tree)))
    report.section("independent paths", [", ".join(p or "root" for p in paths) or "(none)"])
    report.doc.update({"tree": to_tree_dict(tree), "independent-paths": paths})
    return tree


def _present(p, report):
    grading = grading_check(p)
    report.section("presentation", render_presentation(p))
    report.section("kernels", render_kernels(p))
    report.section("kernel table", _table(to_kernel_dataframe(p)))
    report.section("grading", grading.lines())
    report.doc.update(
        {
            "presentation": to_presentation_dict(p),
            "grading": {"passed": grading.passed, "violations": grading.violations},
        }
    )


def _symbolic(p, report):
    triples = admissible_triples(p, count=50, seed=report.seed)
    result = check_jacobi_symbolic(p, triples)
    distinct = check_jacobi_symbolic(p, distinct_triples(p, count=50, seed=report.seed))
    nonzero = result.nonzero + [r for r in distinct.admissible if not r.zero]
    report.section(
        f"symbolic jacobi (seed {report.seed})",
        [
            f"{len(result.results)} admissible triples, {len(nonzero)} nonzero residuals",
            f"{len(distinct.results)} distinct-atom triples tried, "
            f"{len(distinct.unresolved)} unresolved against the bracket table",
        ]
        + [f"  {r.text()}: {r.residual}" for r in nonzero],
    )
    rows = result.rows() + [row for row in distinct.rows() if row["admissible"]]
    report.doc["symbolic-jacobi"] = {
        "seed": report.seed,
        "triples": len(result.results),
        "distinct-triples": len(distinct.results),
        "distinct-unresolved": len(distinct.unresolved),
        "nonzero": [row for row in rows if row["residual"] != "0"],
        "passed": not nonzero,
    }
    return not nonzero


def _numeric(config, report):
    if config.kernels_path is not None:
        E, kernels = read_kernels(config.kernels_path)
        source = config.kernels_path
    else:
        E = DiscreteE(8)
        kernels = sl2_kernels(E)
        source = "sl2 kernels"
    result = check_jacobi_numeric(
        E, kernels, nsamples=100, tol=config.tolerance, seed=report.seed
    )
    status = "pass" if result.passed else "FAIL"
    report.section(
        f"numeric jacobi ({source}, dimension {E.dimension}, seed {result.seed})",
        [
            f"max residual {result.max_residual:.3e} (tol {result.tol:g}) {status}"
        ]
        + _table(to_check_dataframe(result)),
    )
    report.doc["numeric-jacobi"] = {
        "seed": result.seed,
        "nsamples": result.nsamples,
        "tol": result.tol,
        "max-residual": result.max_residual,
        "residuals": result.residuals,
        "passed": result.passed,
    }
    return result.passed


def run(config):
    """Run one validated configuration and print its report.

    Returns
    -------
    int
        0 when every check passes, 1 when a check fails.

    """
    spec = _spec(config)
    _, seed = rng_from_seed(config.rng_seed)
    report = _Report(spec, config, seed)
    passed = True

    if config.command == "check-dga":
        passed = _check_dga(config, spec, report)
    elif config.command in ("derive", "lie"):
        tree = _derive(config, spec, report)
        if config.command == "lie":
            try:
                _present(extract_presentation(tree), report)
            except NoIndependentPath as e:
                print(f"error: {e}", file=sys.stderr)
                report.section("presentation", [f"no presentation: {e}"])
                report.doc["presentation"] = None
                passed = False
    elif config.command == "jacobi":
        passed = _numeric(config, report)
        if config.chi is not None:
            chi, phi = _seeds(config)
            tree = derive_tree(spec, chi, phi, depth_cap=config.depth)
            try:
                p = extract_presentation(tree)
            except NoIndependentPath as e:
                report.section("symbolic jacobi", [f"no presentation: {e}"])
                passed = False
            else:
                passed = _symbolic(p, report) and passed
    else:
        n, m = (1, 1) if config.chi is None else config.chi
        p = godbillon_vey(spec, n, m)
        _present(p, report)
        passed = _symbolic(p, report)

    report.doc["exit"] = 0 if passed else 1
    report.emit(config)
    return 0 if passed else 1


def main(argv=None):
    """Entry point of the ``contlie`` command; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        config = config_from_args(args)
        return run(config)
    except ContlieError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: cannot read {e.filename}: {e.strerror}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
