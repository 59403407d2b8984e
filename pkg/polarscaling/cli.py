"""
PolarScaling - Command Line

Entry point ``polarscaling`` with one subcommand per experiment:

    exponent | bound | simulate | spectrum | construct | encode | decode | source-encode

Every output (JSON document or CSV table) carries the full experiment
configuration, so a result file can be passed back through ``--config`` to
reproduce it. Exit codes: 0 success, 2 invalid configuration, 3 resource cap,
4 target unattainable.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from .bounds import (
    REFERENCE_RHO_50,
    BlocklengthReport,
    reference_alpha1,
    required_blocklength_source,
    scaling_mu,
    sweep_channel_blocklength,
    tail_probability_bound,
)
from .channel import BmsChannel, ChannelKind, bhattacharyya, parse_channel
from .codec import (
    code_document,
    construct_code,
    distortion,
    encode,
    error_bound,
    load_code,
    sc_decode,
    sc_source_encode,
    simulate_channel,
    simulate_source,
)
from .errors import ResourceCapError, TargetUnattainableError
from .exponent import curve_frame, is_submultiplicative, rho_series, series_frame
from .polarization import (
    SpectrumMode,
    evolve_spectrum,
    explicit_spectrum,
    export_spectrum,
    fraction_unpolarized,
    spectrum_frame,
    split_fractions,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RESOURCE = 3
EXIT_UNATTAINABLE = 4

# Namespace entries that select how a run is executed, not what it computes
_RUN_OPTIONS = ("command", "config", "out", "format", "log_level")

CONFIG_PREFIX = "# config: "


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Fully resolved configuration of one command.

    Parameters
    ----------
    command : str
        Subcommand name.
    params : Dict[str, Any]
        Command-specific parameters (JSON-serializable).
    output : Optional[str]
        Output path; standard output when None. Not part of the
        serialized configuration.
    format : str
        ``json`` or ``csv``.
    """

    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    output: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        if self.format not in ("json", "csv"):
            raise ValueError(f"Unknown output format '{self.format}'.")

    def to_dict(self) -> Dict[str, Any]:
        """Serialized configuration, embedded in every output."""
        return {
            "command": self.command,
            "format": self.format,
            "params": dict(sorted(self.params.items())),
        }

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "ExperimentConfig":
        """Configuration from parsed command-line flags."""
        params = {
            key: value
            for key, value in vars(args).items()
            if key not in _RUN_OPTIONS
        }
        return cls(args.command, params, args.out, args.format)

    def merged(self, data: Mapping[str, Any]) -> "ExperimentConfig":
        """
        Override parameters with a configuration document.

        `data` is either a configuration ({command, format, params} or a flat
        parameter mapping) or a report embedding one under ``config``.

        Raises
        ------
        ValueError
            If the document belongs to another command or names unknown
            parameters.
        """
        document = data.get("config", data)
        command = document.get("command", self.command)
        if command != self.command:
            raise ValueError(
                f"Configuration is for '{command}', not '{self.command}'."
            )
        if "params" in document:
            params = dict(document["params"])
        else:
            params = {
                k: v for k, v in document.items() if k not in ("command", "format")
            }
        unknown = sorted(set(params) - set(self.params))
        if unknown:
            raise ValueError(f"Unknown parameters for '{command}': {', '.join(unknown)}")
        return replace(
            self,
            params={**self.params, **params},
            format=document.get("format", self.format),
        )


@dataclass
class CommandOutput:
    """Document, main table and extra tables (keyed by file suffix) of a run."""

    document: Dict[str, Any]
    frame: Optional[pd.DataFrame] = None
    extra_frames: Dict[str, pd.DataFrame] = field(default_factory=dict)


def _json_default(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def _dumps(document: Mapping[str, Any]) -> str:
    return json.dumps(document, indent=2, sort_keys=True, default=_json_default) + "\n"


def _csv_text(header: Mapping[str, Any], frame: pd.DataFrame) -> str:
    config_line = json.dumps(header, sort_keys=True, default=_json_default)
    body = frame.to_csv(index=False, float_format="%.17g", lineterminator="\n")
    return f"{CONFIG_PREFIX}{config_line}\n{body}"


def _write_text(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _emit(config: ExperimentConfig, result: CommandOutput) -> None:
    header = config.to_dict()
    if config.format == "json":
        _write_text(_dumps({"config": header, **result.document}), config.output)
        return
    if result.frame is None:
        raise ValueError(f"'{config.command}' has no tabular output; use --format json.")
    _write_text(_csv_text(header, result.frame), config.output)
    if not result.extra_frames:
        return
    if config.output is None:
        logger.warning("Extra tables need --out; skipped %s", sorted(result.extra_frames))
        return
    path = Path(config.output)
    for suffix, frame in result.extra_frames.items():
        extra = path.with_name(f"{path.stem}.{suffix}{path.suffix}")
        extra.write_text(_csv_text(header, frame), encoding="utf-8")


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Read a configuration from a JSON file, a JSON report, or the header line
    of a CSV report.
    """
    text = Path(path).read_text(encoding="utf-8")
    if text.startswith(CONFIG_PREFIX):
        text = text.splitlines()[0][len(CONFIG_PREFIX) :]
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"Cannot parse configuration file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("A configuration file must hold a JSON object.")
    return data


def _require(params: Mapping[str, Any], *keys: str) -> None:
    missing = [k for k in keys if params.get(k) is None]
    if missing:
        flags = ", ".join("--" + k.replace("_", "-") for k in missing)
        raise ValueError(f"Missing required option(s): {flags}")


def _parse_symbols(text: str) -> np.ndarray:
    """Symbols from '0110' or '0,2,1' / '0 2 1'."""
    text = str(text).strip()
    if not text:
        raise ValueError("Empty symbol string.")
    try:
        if "," in text or " " in text:
            return np.array([int(s) for s in text.replace(",", " ").split()])
        return np.array([int(c) for c in text])
    except ValueError as exc:
        raise ValueError(f"Invalid symbol string '{text}'.") from exc


def _bits_text(bits: np.ndarray) -> str:
    return "".join(str(int(b)) for b in np.asarray(bits).reshape(-1))


def _default_method(channel: BmsChannel, method: Optional[str]) -> SpectrumMode:
    if method is not None:
        mode = SpectrumMode(method)
        if mode is SpectrumMode.EXACT_ERASURE and channel.kind is not ChannelKind.ERASURE:
            raise ValueError("The exact-erasure mode needs an erasure channel.")
        return mode
    if channel.kind is ChannelKind.ERASURE:
        return SpectrumMode.EXACT_ERASURE
    return SpectrumMode.UPPER_BOUND


def cmd_exponent(config: ExperimentConfig) -> CommandOutput:
    """(z, (1/k) log2 L_k(z)) curves and the (k, ρ_k) series."""
    p = config.params
    grid = p.get("grid")
    results = rho_series(
        p["variant"],
        p["alpha"],
        p["beta"],
        p["k_max"],
        M=None if grid is None else 1 << int(grid),
        curve_ks=p.get("curve_k") or None,
    )
    series = series_frame(results)
    curves = {
        f"curve-k{r.k}": curve_frame(r).replace([np.inf, -np.inf], np.nan).dropna()
        for r in results
        if r.curve is not None
    }
    document = {
        "series": series.to_dict(orient="list"),
        "curves": {key: frame.to_dict(orient="list") for key, frame in curves.items()},
        "submultiplicative": is_submultiplicative(results, tol=1e-4),
        "mu": scaling_mu(results[-1].rho_k),
    }
    return CommandOutput(document, series, curves)


def _report_row(report: BlocklengthReport) -> Dict[str, Any]:
    row = dict(report.inputs)
    row.update(report.params.to_dict())
    row.update(
        {
            "term1": report.terms[0],
            "term2": report.terms[1],
            "log2_n": report.log2_n,
            "mu": report.mu,
            "effective_mu": report.effective_mu,
        }
    )
    return row


def _resolve_alpha1(p: Mapping[str, Any]) -> float:
    if p.get("alpha1") is not None:
        return float(p["alpha1"])
    z = 0.5 if p.get("channel") is None else bhattacharyya(parse_channel(p["channel"]))
    return reference_alpha1(z)


def cmd_bound(config: ExperimentConfig) -> CommandOutput:
    """Channel- or source-coding blocklength reports with the implied μ."""
    p = config.params
    alpha1 = _resolve_alpha1(p)
    if p.get("target_redundancy") is not None:
        reports = [
            required_blocklength_source(
                p["target_redundancy"],
                p["rate"],
                p["d_max"],
                rho=p["rho"],
                alpha1=alpha1,
                etas=p.get("eta"),
                kappas=p.get("kappa"),
            )
        ]
    else:
        reports = [
            sweep_channel_blocklength(
                gap, p["pe"], p["rho"], alpha1, p.get("eta"), p.get("kappa")
            )
            for gap in (p.get("gap") or [1e-2, 1e-3, 1e-4])
        ]
    document = {
        "reports": [r.to_dict() for r in reports],
        "mu": scaling_mu(p["rho"]),
    }
    return CommandOutput(document, pd.DataFrame([_report_row(r) for r in reports]))


def cmd_simulate(config: ExperimentConfig) -> CommandOutput:
    """Channel, source or unpolarized-fraction simulation report."""
    p = config.params
    kind = p["kind"]
    if kind == "source":
        result = simulate_source(
            p["rate"],
            p["n"],
            p["trials"],
            p["seed"],
            design_distortion=p.get("design_distortion"),
            method=p.get("method") or SpectrumMode.LOWER_BOUND,
        )
        document = result.to_dict()
    else:
        _require(p, "channel")
        channel = parse_channel(p["channel"])
        if kind == "channel":
            code = construct_code(
                channel, p["n"], p["rate"], _default_method(channel, p.get("method"))
            )
            result = simulate_channel(code, channel, p["trials"], p["seed"])
            document = result.to_dict()
        else:
            mode = _default_method(channel, p.get("mode"))
            spectrum = evolve_spectrum(bhattacharyya(channel), p["n"], mode)
            alpha1 = _resolve_alpha1(p)
            fraction = fraction_unpolarized(spectrum, p["delta"])
            bound = tail_probability_bound(alpha1, p["delta"], p["rho"], p["n"])
            document = {
                "params": {
                    "channel": channel.to_dict(),
                    "n": p["n"],
                    "delta": p["delta"],
                    "mode": mode.value,
                },
                "fraction": fraction,
                "bound": bound,
                "alpha1": alpha1,
                "rho": p["rho"],
                "within_bound": bool(fraction <= bound),
            }
    row = {k: v for k, v in document.items() if not isinstance(v, dict)}
    return CommandOutput(document, pd.DataFrame([row]))


def cmd_spectrum(config: ExperimentConfig) -> CommandOutput:
    """Bhattacharyya spectrum of a channel at level n."""
    p = config.params
    _require(p, "channel")
    channel = parse_channel(p["channel"])
    mode = _default_method(channel, p.get("mode"))
    if mode is SpectrumMode.EXPLICIT:
        spectrum = explicit_spectrum(channel, p["n"])
    else:
        spectrum = evolve_spectrum(bhattacharyya(channel), p["n"], mode)
    document: Dict[str, Any] = {
        "level": spectrum.level,
        "mode": spectrum.mode.value,
        "values": spectrum.values.tolist(),
    }
    if p.get("delta") is not None:
        good, bad = split_fractions(spectrum, p["delta"])
        document["fraction_unpolarized"] = fraction_unpolarized(spectrum, p["delta"])
        document["fraction_good"] = good
        document["fraction_bad"] = bad
    return CommandOutput(document, spectrum_frame(spectrum))


def cmd_construct(config: ExperimentConfig) -> CommandOutput:
    """
    Polar code for a channel. With ``--out`` and JSON output the document is
    a loadable code file whose spectrum sits in a CSV file next to it.
    """
    p = config.params
    _require(p, "channel")
    channel = parse_channel(p["channel"])
    code = construct_code(
        channel, p["n"], p["rate"], _default_method(channel, p.get("method"))
    )
    spectrum_ref = None
    if config.output is not None and config.format == "json":
        path = Path(config.output)
        spectrum_path = path.with_name(path.stem + ".spectrum.csv")
        export_spectrum(code.z_estimates, spectrum_path)
        spectrum_ref = spectrum_path.name
    document = code_document(code, spectrum_ref)
    document["error_bound"] = error_bound(code)
    frame = spectrum_frame(code.z_estimates)
    frame["frozen"] = code.frozen_mask
    return CommandOutput(document, frame)


def cmd_encode(config: ExperimentConfig) -> CommandOutput:
    """Codeword for a message of information bits."""
    p = config.params
    _require(p, "code", "message")
    code = load_code(p["code"])
    u = code.assemble(_parse_symbols(p["message"]))
    return CommandOutput({"u": _bits_text(u), "x": _bits_text(encode(u))})


def cmd_decode(config: ExperimentConfig) -> CommandOutput:
    """SC decoding of received output symbols."""
    p = config.params
    _require(p, "code", "channel", "received")
    code = load_code(p["code"])
    channel = parse_channel(p["channel"])
    u_hat = sc_decode(_parse_symbols(p["received"]), code, channel)
    return CommandOutput(
        {"u": _bits_text(u_hat), "message": _bits_text(u_hat[code.info_set])}
    )


def cmd_source_encode(config: ExperimentConfig) -> CommandOutput:
    """Randomized SC source encoding of one source word."""
    p = config.params
    _require(p, "code", "source", "design_distortion")
    code = load_code(p["code"])
    y = _parse_symbols(p["source"])
    test_channel = BmsChannel.crossover(p["design_distortion"])
    u, x = sc_source_encode(y, code, test_channel, seed=p["seed"])
    return CommandOutput(
        {
            "u": _bits_text(u),
            "description": _bits_text(u[code.info_set]),
            "x": _bits_text(x),
            "distortion": distortion(x, y),
        }
    )


COMMANDS: Dict[str, Callable[[ExperimentConfig], CommandOutput]] = {
    "exponent": cmd_exponent,
    "bound": cmd_bound,
    "simulate": cmd_simulate,
    "spectrum": cmd_spectrum,
    "construct": cmd_construct,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "source-encode": cmd_source_encode,
}


def _method_choices() -> List[str]:
    return [mode.value for mode in SpectrumMode]


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    # pylint: disable=too-many-statements
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON configuration or earlier report")
    common.add_argument("--out", help="Output path (default: standard output)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
    )

    parser = argparse.ArgumentParser(
        prog="polarscaling",
        description="Finite-length scaling experiments for polar codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    exponent = sub.add_parser("exponent", parents=[common], help="scaling exponents")
    exponent.add_argument(
        "--variant",
        choices=("bhattacharyya", "mutual-information"),
        default="bhattacharyya",
    )
    exponent.add_argument("--alpha", type=float, default=0.7)
    exponent.add_argument("--beta", type=float, default=0.6)
    exponent.add_argument("--grid", type=int, help="log2 of the grid size M")
    exponent.add_argument("--k-max", type=int, default=50)
    exponent.add_argument("--curve-k", type=int, nargs="*", help="curves to keep")

    bound = sub.add_parser("bound", parents=[common], help="blocklength bounds")
    bound.add_argument("--rho", type=float, default=REFERENCE_RHO_50)
    bound.add_argument("--alpha1", type=float)
    bound.add_argument("--channel", help="channel whose Z(W) sets the default alpha1")
    bound.add_argument("--gap", type=float, nargs="+")
    bound.add_argument("--pe", type=float, default=1e-3)
    bound.add_argument("--eta", type=float, nargs="+")
    bound.add_argument("--kappa", type=float, nargs="+")
    bound.add_argument("--target-redundancy", type=float)
    bound.add_argument("--rate", type=float, default=0.5)
    bound.add_argument("--d-max", type=float, default=1.0)

    simulate = sub.add_parser("simulate", parents=[common], help="Monte Carlo runs")
    simulate.add_argument(
        "--kind", choices=("channel", "source", "unpolarized"), default="channel"
    )
    simulate.add_argument("--channel", default="bec-0.3")
    simulate.add_argument("--n", type=int, default=10)
    simulate.add_argument("--rate", type=float, default=0.3)
    simulate.add_argument("--method", choices=_method_choices())
    simulate.add_argument("--mode", choices=_method_choices()[:3])
    simulate.add_argument("--trials", type=int, default=10_000)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--design-distortion", type=float)
    simulate.add_argument("--delta", type=float, default=0.01)
    simulate.add_argument("--rho", type=float, default=REFERENCE_RHO_50)
    simulate.add_argument("--alpha1", type=float)

    spectrum = sub.add_parser("spectrum", parents=[common], help="polar spectra")
    spectrum.add_argument("--channel", default="bec-0.5")
    spectrum.add_argument("--n", type=int, default=10)
    spectrum.add_argument("--mode", choices=_method_choices())
    spectrum.add_argument("--delta", type=float)

    construct = sub.add_parser("construct", parents=[common], help="code construction")
    construct.add_argument("--channel", default="bec-0.5")
    construct.add_argument("--n", type=int, default=10)
    construct.add_argument("--rate", type=float, default=0.5)
    construct.add_argument("--method", choices=_method_choices())

    enc = sub.add_parser("encode", parents=[common], help="encode a message")
    enc.add_argument("--code", help="code file written by 'construct'")
    enc.add_argument("--message", help="information bits, e.g. 0110")

    dec = sub.add_parser("decode", parents=[common], help="SC-decode a received word")
    dec.add_argument("--code")
    dec.add_argument("--channel")
    dec.add_argument("--received", help="output symbols, e.g. 0,1,2,1")

    src = sub.add_parser("source-encode", parents=[common], help="lossy compression")
    src.add_argument("--code")
    src.add_argument("--source", help="source bits")
    src.add_argument("--design-distortion", type=float)
    src.add_argument("--seed", type=int, default=0)
    return parser


def _emit_unattainable(
    config: ExperimentConfig, exc: TargetUnattainableError
) -> None:
    document = {
        "config": config.to_dict(),
        "error": str(exc),
        "best_bound": exc.best_bound,
        "best_params": exc.best_params,
    }
    _write_text(_dumps(document), config.output)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Returns
    -------
    int
        Process exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    config: Optional[ExperimentConfig] = None
    try:
        config = ExperimentConfig.from_namespace(args)
        if args.config:
            config = config.merged(load_config_file(args.config))
        logger.info("Running %s with %s", config.command, config.params)
        _emit(config, COMMANDS[config.command](config))
    except TargetUnattainableError as exc:
        if config is not None:
            _emit_unattainable(config, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNATTAINABLE
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
