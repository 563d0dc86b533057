"""Command line interface of monopole-spectra.

Every subcommand writes CSV, JSON or SVG to stdout or to the file given by
`--output`, logs go to stderr. Exit codes: 0 on success, 1 on invalid input and 2
if a check suite fails.
"""

import argparse
import io
import logging
import re
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

import polars as pl
from matplotlib import rc_context
from matplotlib.figure import Figure

from monopole_spectra import config_context, get_config
from monopole_spectra.__about__ import __version__
from monopole_spectra._checks import (
    SUITE_ALIASES,
    SUITES,
    run_suites,
    two_state_summary,
)
from monopole_spectra._utils.exact import as_fraction, is_integer
from monopole_spectra._utils.formatting import dumps_json, frame_to_csv
from monopole_spectra.modes import (
    FluxConfig,
    plot_towers,
    spectrum_table,
    tower_lines,
)
from monopole_spectra.operators import flux_integral
from monopole_spectra.oracle import (
    Boundary,
    DiscretizationSpec,
    Method,
    s3_laplacian_check,
    sturm_liouville_eigen,
    witten_sqm_check,
)
from monopole_spectra.susy import (
    HilbertPolicy,
    assemble_spectrum,
    index_report,
    pairing_report,
    susy_breaking_witness,
)

logger = logging.getLogger(__name__)

FORMATS = {
    "spectrum": ("csv", "json"),
    "towers": ("csv", "json", "svg"),
    "hermiticity": ("json",),
    "susy": ("json", "csv"),
    "index": ("json",),
    "flux": ("json",),
    "oracle": ("json",),
    "check": ("json", "csv"),
}
DEFAULT_N_MAX = 4
SVG_HASHSALT = "monopole-spectra"

_M_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
_NEGATIVE_VALUE = re.compile(r"^-\d")
_NEGATIVE_VALUE_FLAGS = frozenset({"--q", "--m", "--q-min", "--q-max"})
_RUN_CONFIG_KEYS = frozenset(
    {
        "command",
        "q",
        "sector",
        "m_range",
        "n_max",
        "policy",
        "quad_points",
        "grid_size",
        "tolerance_scale",
        "format",
        "output",
        "dry_run",
        "verbose",
    }
)


def parse_m_range(text: str) -> tuple[int, int]:
    """Parse an inclusive range of angular momenta written as `a..b`.

    Examples
    --------
    >>> parse_m_range("-2..4")
    (-2, 4)
    """
    match = _M_RANGE.match(text)
    if match is None:
        msg = f"expected a range a..b of integers, got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    m_lo, m_hi = int(match.group(1)), int(match.group(2))
    if m_lo > m_hi:
        msg = f"the range {text!r} is empty"
        raise argparse.ArgumentTypeError(msg)
    return m_lo, m_hi


def _flux(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        msg = f"expected a real number or fraction, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from None


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved parameters of one invocation.

    Defaults of the global configuration are filled in, such that two runs with
    equal RunConfig produce identical output.
    """

    command: str
    q: Optional[Fraction] = None
    sector: Optional[int] = None
    m_range: Optional[tuple[int, int]] = None
    n_max: Optional[int] = None
    policy: Optional[HilbertPolicy] = None
    quad_points: int = 64
    grid_size: int = 2048
    tolerance_scale: float = 1.0
    output_format: str = "json"
    output: Optional[str] = None
    options: dict = field(default_factory=dict)

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """Resolve parsed arguments against the current global configuration."""
        formats = FORMATS[args.command]
        output_format = args.format if args.format is not None else formats[0]
        if output_format not in formats:
            msg = (
                f"The command {args.command} supports the formats {list(formats)}, "
                f"got {output_format}."
            )
            raise ValueError(msg)
        policy = getattr(args, "policy", None)
        config = get_config()
        return cls(
            command=args.command,
            q=getattr(args, "q", None),
            sector=getattr(args, "sector", None),
            m_range=getattr(args, "m_range", None),
            n_max=getattr(args, "n_max", None),
            policy=None if policy is None else HilbertPolicy(policy),
            quad_points=config["quad_points"],
            grid_size=config["grid_size"],
            tolerance_scale=config["tolerance_scale"],
            output_format=output_format,
            output=args.output,
            options={
                k: v for k, v in vars(args).items() if k not in _RUN_CONFIG_KEYS
            },
        )

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "q": None if self.q is None else float(self.q),
            "sector": self.sector,
            "m_range": None if self.m_range is None else list(self.m_range),
            "n_max": self.n_max,
            "policy": None if self.policy is None else self.policy.value,
            "quad_points": self.quad_points,
            "grid_size": self.grid_size,
            "tolerance_scale": self.tolerance_scale,
            "format": self.output_format,
            "output": self.output,
            "options": self.options,
        }


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("common options")
    group.add_argument(
        "--quad-points",
        type=int,
        default=None,
        help="Gauss-Jacobi points of inner products (default: 64).",
    )
    group.add_argument(
        "--grid-size",
        type=int,
        default=None,
        help="cells of the finite difference oracle (default: 2048).",
    )
    group.add_argument(
        "--tolerance-scale",
        type=float,
        default=None,
        help="factor on all check tolerances (default: 1 or "
        "$MONOPOLE_SPECTRA_TOLERANCE_SCALE).",
    )
    group.add_argument(
        "--format",
        choices=("csv", "json", "svg"),
        default=None,
        help="output format (default: the first one the command supports).",
    )
    group.add_argument("--output", default=None, help="output file (default: stdout).")
    group.add_argument(
        "--dry-run",
        action="store_true",
        help="print the resolved run configuration as JSON and exit.",
    )
    group.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log INFO (-v) or DEBUG (-vv) messages to stderr.",
    )
    return parser


def _add_flux(parser, *, required: bool = True) -> None:
    parser.add_argument(
        "--q",
        type=_flux,
        required=required,
        help="flux, e.g. 2, 0.5 or 1/2.",
    )


def _add_policy(parser, default: str) -> None:
    parser.add_argument(
        "--policy",
        choices=[p.value for p in HilbertPolicy],
        default=default,
        help=f"Hilbert space policy (default: {default}).",
    )


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="monopole-spectra",
        description="Spectra of a charged particle on the sphere at arbitrary flux.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()

    p = subparsers.add_parser(
        "spectrum", parents=[common], help="assembled spectrum as a table."
    )
    _add_flux(p)
    p.add_argument("--sector", type=int, choices=(0, 1), default=None)
    p.add_argument("--m", dest="m_range", type=parse_m_range, default=None)
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    _add_policy(p, HilbertPolicy.SQUARE_INTEGRABLE.value)

    p = subparsers.add_parser(
        "towers", parents=[common], help="exponent gamma of the towers against q."
    )
    p.add_argument("--q-min", type=float, default=0.0)
    p.add_argument("--q-max", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=61)
    p.add_argument("--sector", type=int, choices=(0, 1), default=0)
    p.add_argument("--m", dest="m_range", type=parse_m_range, default=None)

    p = subparsers.add_parser(
        "hermiticity",
        parents=[common],
        help="overlap and hermiticity defect of the two families.",
    )
    _add_flux(p)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=int, default=0)

    p = subparsers.add_parser(
        "susy", parents=[common], help="pairing of the sectors by the supercharges."
    )
    _add_flux(p)
    _add_policy(p, HilbertPolicy.SQUARE_INTEGRABLE.value)
    p.add_argument("--lambda-cutoff", type=float, default=30.0)
    p.add_argument("--m", dest="m_range", type=parse_m_range, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument(
        "--witness",
        action="store_true",
        help="add the modes without superpartner at non-integer flux.",
    )

    p = subparsers.add_parser(
        "index", parents=[common], help="zero modes and Witten index."
    )
    _add_flux(p)

    p = subparsers.add_parser("flux", parents=[common], help="integrated flux.")
    _add_flux(p)

    p = subparsers.add_parser(
        "oracle", parents=[common], help="numerical eigenvalue oracles."
    )
    p.add_argument(
        "--problem",
        choices=("radial", "s3", "witten"),
        default="radial",
        help="radial problem of one sector m, S^3 Laplacian or Witten's model.",
    )
    _add_flux(p, required=False)
    p.add_argument("--sector", type=int, choices=(0, 1), default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--count", type=int, default=4)
    p.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=Method.FINITE_DIFFERENCE_THETA.value,
    )
    p.add_argument(
        "--boundary",
        choices=[b.value for b in Boundary],
        default=Boundary.REGULAR_BOTH_ENDS.value,
    )
    p.add_argument("--basis-size", type=int, default=12)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--npoints", type=int, default=401)

    p = subparsers.add_parser("check", parents=[common], help="run check suites.")
    p.add_argument(
        "--suite",
        action="append",
        choices=["all", *SUITES, *SUITE_ALIASES],
        default=None,
        help="suite to run, may be repeated (default: all).",
    )
    return parser


def _run_spectrum(cfg: RunConfig) -> tuple[str, bool]:
    spectrum = assemble_spectrum(cfg.q, cfg.m_range, cfg.n_max, cfg.policy)
    sectors = (0, 1) if cfg.sector is None else (cfg.sector,)
    df = spectrum_table([e for s in sectors for e in spectrum[s]])
    if cfg.output_format == "csv":
        return frame_to_csv(df), True
    return dumps_json(df.to_dicts()) + "\n", True


def _towers_svg(cfg: RunConfig) -> str:
    options = cfg.options
    buffer = io.StringIO()
    with rc_context({"svg.hashsalt": SVG_HASHSALT}):
        fig = Figure(figsize=(6.4, 4.8))
        ax = fig.subplots()
        plot_towers(
            options["q_min"],
            options["q_max"],
            options["steps"],
            sector=cfg.sector,
            m_range=cfg.m_range,
            ax=ax,
        )
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def _run_towers(cfg: RunConfig) -> tuple[str, bool]:
    if cfg.output_format == "svg":
        return _towers_svg(cfg), True
    options = cfg.options
    df = tower_lines(
        options["q_min"],
        options["q_max"],
        options["steps"],
        sector=cfg.sector,
        m_range=cfg.m_range,
    )
    if cfg.output_format == "csv":
        return frame_to_csv(df), True
    return dumps_json(df.to_dicts()) + "\n", True


def _run_hermiticity(cfg: RunConfig) -> tuple[str, bool]:
    summary = two_state_summary(cfg.q, cfg.options["m"], cfg.options["n"])
    return dumps_json(summary) + "\n", True


def _run_susy(cfg: RunConfig) -> tuple[str, bool]:
    report = pairing_report(
        cfg.q,
        cfg.policy,
        lambda_cutoff=cfg.options["lambda_cutoff"],
        m_range=cfg.m_range,
        n_max=cfg.n_max,
    )
    if cfg.output_format == "csv":
        return frame_to_csv(report.pairs_table()), True
    result = report.to_dict()
    if cfg.options["witness"]:
        if is_integer(cfg.q):
            msg = f"There is no breaking witness at integer flux q={cfg.q}."
            raise ValueError(msg)
        result["witnesses"] = [w.to_dict() for w in susy_breaking_witness(cfg.q)]
    return dumps_json(result) + "\n", True


def _run_index(cfg: RunConfig) -> tuple[str, bool]:
    return dumps_json(index_report(cfg.q).to_dict()) + "\n", True


def _run_flux(cfg: RunConfig) -> tuple[str, bool]:
    result = {"q": float(cfg.q), "flux": flux_integral(float(cfg.q))}
    return dumps_json(result) + "\n", True


def _run_oracle(cfg: RunConfig) -> tuple[str, bool]:
    options = cfg.options
    problem = options["problem"]
    if problem == "s3":
        return dumps_json(s3_laplacian_check().to_dict()) + "\n", True
    if problem == "witten":
        report = witten_sqm_check(options["omega"], options["npoints"])
        return dumps_json(report.to_dict()) + "\n", True
    if cfg.q is None:
        msg = "The radial oracle requires the flux --q."
        raise ValueError(msg)
    spec = DiscretizationSpec(
        method=options["method"],
        basis_size=options["basis_size"],
        boundary=options["boundary"],
    )
    result = sturm_liouville_eigen(
        FluxConfig(cfg.q, cfg.sector), options["m"], options["count"], spec
    )
    return dumps_json(result.to_dict()) + "\n", True


def _run_check(cfg: RunConfig) -> tuple[str, bool]:
    suites = cfg.options["suite"] or ["all"]
    results = run_suites(suites)
    passed = all(r.passed for r in results)
    records = [r.to_dict() for r in results]
    if cfg.output_format == "csv":
        schema = {
            "suite": pl.String,
            "name": pl.String,
            "value": pl.Float64,
            "tolerance": pl.Float64,
            "passed": pl.Boolean,
        }
        return frame_to_csv(pl.DataFrame(records, schema=schema)), passed
    return dumps_json({"passed": passed, "results": records}) + "\n", passed


COMMANDS: dict[str, Callable[[RunConfig], tuple[str, bool]]] = {
    "spectrum": _run_spectrum,
    "towers": _run_towers,
    "hermiticity": _run_hermiticity,
    "susy": _run_susy,
    "index": _run_index,
    "flux": _run_flux,
    "oracle": _run_oracle,
    "check": _run_check,
}


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn `--m -2..4` into `--m=-2..4`, argparse reads -2..4 as an option."""
    result = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _NEGATIVE_VALUE_FLAGS
            and i + 1 < len(argv)
            and _NEGATIVE_VALUE.match(argv[i + 1])
        ):
            result.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            result.append(token)
            i += 1
    return result


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface.

    Parameters
    ----------
    argv : sequence of str or None
        Arguments without the program name, by default `sys.argv[1:]`.

    Returns
    -------
    exit_code : int
        0 on success, 1 for invalid arguments, 2 if a check suite failed.
    """
    parser = build_parser()
    argv = _join_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # usage errors exit with 2, --help and --version with 0
        return 0 if exc.code in (0, None) else 1
    _configure_logging(args.verbose)

    try:
        with config_context(
            quad_points=args.quad_points,
            grid_size=args.grid_size,
            tolerance_scale=args.tolerance_scale,
        ):
            cfg = RunConfig.from_namespace(args)
            if args.dry_run:
                _write(dumps_json(cfg.to_dict()) + "\n", None)
                return 0
            logger.info("Running %s.", cfg.command)
            text, passed = COMMANDS[cfg.command](cfg)
            _write(text, cfg.output)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"monopole-spectra {args.command}: error: {exc}\n")
        return 1
    return 0 if passed else 2
