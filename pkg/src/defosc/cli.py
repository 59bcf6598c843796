"""Command-line front end: scriptable tables and verification reports.

Subcommands
-----------
dsf         structure-function table (n, phi(n)); --fig1 emits the three-way
            comparison dataset at q = 1.015 (columns n, SF1, SF2, SF3)
spectrum    energy table (n, E(n)) plus ground-state closed forms
verify      residuals of the defining algebra identities (JSON report)
degeneracy  solved parameter values q* with E(n) = E(m) in a q interval

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Output is deterministic: floats are printed with 17 significant digits, CSV
uses LF endings, JSON keys keep a fixed order.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .dsf import DeformationParams, FamilyId, phi_closed
from .errors import DomainError
from .families import coefficients, verify_ratio_recursions
from .fock import build_rep, verify_gh_relation, verify_heisenberg, verify_ladder
from .spectra import energy, find_degeneracy, ground_state_table
from .symmetry import hermiticity_defect

FIG1_Q = 1.015
FIG1_N_MAX = 100
FIG1_FAMILIES = ("A", "B", "C")


@dataclass
class RunConfig:
    subcommand: str
    family: str | None = None
    q: float | None = None
    p: float | None = None
    n_max: int = 100
    dim: int = 30
    tol: float = 1e-10
    output_format: str = "csv"
    output_path: str | None = None
    fig1: bool = False
    perturb: float = 0.0
    n: int | None = None
    m: int | None = None
    q_range: tuple[float, float] | None = None


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _params(config: RunConfig) -> DeformationParams:
    if config.q is None:
        raise DomainError("--q is required for this command")
    return DeformationParams(q=config.q, p=config.p)


def _family(config: RunConfig) -> FamilyId:
    if config.family is None:
        raise DomainError("--family is required for this command")
    return FamilyId.parse(config.family)


def _write(config: RunConfig, text: str) -> None:
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell if isinstance(cell, str) else _fmt(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _meta(family: FamilyId | None, config: RunConfig, **extra) -> dict:
    meta = {
        "family": family.tag.value if family else None,
        "q": config.q,
        "p": config.p,
    }
    meta.update(extra)
    return meta


def _table_output(config: RunConfig, family: FamilyId | None, header: list[str],
                  rows: list[list], **meta_extra) -> None:
    if config.output_format == "json":
        payload = {
            "meta": _meta(family, config, **meta_extra),
            "columns": header,
            "rows": [[row[0]] + [float(cell) for cell in row[1:]] for row in rows],
        }
        _write(config, _json_text(payload))
    else:
        _write(config, _csv(header, rows))


def cmd_dsf(config: RunConfig) -> int:
    if config.fig1:
        params = DeformationParams(q=FIG1_Q)
        rows = [
            [n] + [phi_closed(fam, params, n) for fam in FIG1_FAMILIES]
            for n in range(FIG1_N_MAX + 1)
        ]
        _table_output(config, None, ["n", "SF1", "SF2", "SF3"], rows,
                      q=FIG1_Q, n_max=FIG1_N_MAX)
        return 0
    family = _family(config)
    params = _params(config)
    rows = [[n, phi_closed(family, params, n)] for n in range(config.n_max + 1)]
    _table_output(config, family, ["n", "phi"], rows, n_max=config.n_max)
    return 0


def cmd_spectrum(config: RunConfig) -> int:
    family = _family(config)
    params = _params(config)
    rows = [[n, energy(family, params, n)] for n in range(config.n_max + 1)]
    ground = None
    if not params.two_parameter:
        e1, e2, e3, e4 = ground_state_table(params)
        ground = {"E1": e1, "E2": e2, "E3": e3, "E4": e4}
    if config.output_format == "json":
        payload = {
            "meta": _meta(family, config, n_max=config.n_max),
            "columns": ["n", "E"],
            "rows": [[n, float(e)] for n, e in rows],
        }
        if ground is not None:
            payload["ground_state"] = ground
        _write(config, _json_text(payload))
    else:
        _write(config, _csv(["n", "E"], rows))
        if ground is not None:
            note = ", ".join(f"{k}(0) = {_fmt(v)}" for k, v in ground.items())
            print(f"ground-state closed forms: {note}", file=sys.stderr)
    return 0


def cmd_verify(config: RunConfig) -> int:
    family = _family(config)
    params = _params(config)
    phi = None
    if config.perturb:
        eps = config.perturb

        def phi(n, _f=family, _p=params, _e=eps):  # noqa: E731
            return phi_closed(_f, _p, n) * (1.0 + _e) if n else 0.0

    rep = build_rep(family, params, config.dim, phi=phi)
    checks = [
        verify_heisenberg(rep, config.tol),
        verify_gh_relation(rep, tol=config.tol),
        verify_ladder(rep, config.tol),
    ]
    recursion = verify_ratio_recursions(coefficients(family, params), params, config.dim)
    residuals = {check.name: check.residual for check in checks}
    residuals["ratio_recursions"] = recursion
    passed = all(value <= config.tol for value in residuals.values())
    report = {
        "meta": {
            "family": family.tag.value,
            "q": config.q,
            "p": config.p,
            "dim": config.dim,
            "trusted": rep.trusted,
            "tol": config.tol,
        },
        "residuals": residuals,
        "boundary": {check.name: check.boundary for check in checks},
        "hermiticity_defect": {
            "X": hermiticity_defect(rep, "X"),
            "P": hermiticity_defect(rep, "P"),
        },
        "passed": passed,
    }
    _write(config, _json_text(report))
    if passed:
        return 0
    failing = sorted(name for name, value in residuals.items() if value > config.tol)
    print(f"verification failed: {', '.join(failing)}", file=sys.stderr)
    return 1


def cmd_degeneracy(config: RunConfig) -> int:
    family = _family(config)
    if config.n is None or config.m is None:
        raise DomainError("--n and --m are required for degeneracy searches")
    if config.q_range is None:
        raise DomainError("--q-range lo:hi is required for degeneracy searches")
    roots = find_degeneracy(family, config.n, config.m, config.q_range, config.tol)
    if config.output_format == "json":
        payload = {
            "meta": _meta(family, config, n=config.n, m=config.m,
                          q_range=list(config.q_range), tol=config.tol),
            "roots": [
                {
                    "n": root.n,
                    "m": root.m,
                    "q_star": root.q_star,
                    "residual": root.residual,
                    "bracket": list(root.bracket),
                }
                for root in roots
            ],
        }
        _write(config, _json_text(payload))
    else:
        rows = [[root.n, root.m, root.q_star, root.residual, root.bracket[0], root.bracket[1]]
                for root in roots]
        rows = [[str(r[0]), str(r[1])] + r[2:] for r in rows]
        _write(config, _csv(["n", "m", "q_star", "residual", "q_lo", "q_hi"], rows))
    return 0


def _parse_q_range(text: str) -> tuple[float, float]:
    try:
        lo, hi = text.split(":")
        return float(lo), float(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="defosc",
        description="Deformed-oscillator structure functions, spectra and algebra checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", help="family tag: A, B, C, D, At, Bt, Ct, Dt")
    common.add_argument("--q", type=float, help="deformation parameter q > 0")
    common.add_argument("--p", type=float, help="second deformation parameter (two-parameter families)")
    common.add_argument("--n-max", type=int, default=100, help="highest level in tables (default 100)")
    common.add_argument("--dim", type=int, default=30, help="Fock truncation dimension (default 30)")
    common.add_argument("--tol", type=float, default=1e-10, help="residual/root tolerance (default 1e-10)")
    common.add_argument("--format", choices=("csv", "json"), default="csv", dest="output_format")
    common.add_argument("--out", dest="output_path", help="write output to this file instead of stdout")

    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_dsf = sub.add_parser("dsf", parents=[common], help="structure-function table")
    p_dsf.add_argument("--fig1", action="store_true",
                       help="emit the three-family comparison dataset at q = 1.015")

    sub.add_parser("spectrum", parents=[common], help="energy table")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="verify the defining algebra identities (JSON report)")
    p_verify.add_argument("--perturb", type=float, default=0.0,
                          help="corrupt phi by a relative factor (sensitivity test hook)")

    p_deg = sub.add_parser("degeneracy", parents=[common], help="solve E(n) = E(m) for q")
    p_deg.add_argument("--n", type=int, help="first level")
    p_deg.add_argument("--m", type=int, help="second level")
    p_deg.add_argument("--q-range", type=_parse_q_range, dest="q_range",
                       help="search interval lo:hi")
    return parser


_DISPATCH = {
    "dsf": cmd_dsf,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "degeneracy": cmd_degeneracy,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        subcommand=args.subcommand,
        family=args.family,
        q=args.q,
        p=args.p,
        n_max=args.n_max,
        dim=args.dim,
        tol=args.tol,
        output_format=args.output_format,
        output_path=args.output_path,
        fig1=getattr(args, "fig1", False),
        perturb=getattr(args, "perturb", 0.0),
        n=getattr(args, "n", None),
        m=getattr(args, "m", None),
        q_range=getattr(args, "q_range", None),
    )
    try:
        return _DISPATCH[config.subcommand](config)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
