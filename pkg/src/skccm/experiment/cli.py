"""
Command line entry point

skccm developers
"""
import argparse
import logging
import sys

from skccm.encoder import ConjugationError
from skccm.optimize import OptimizationError
from skccm.experiment.config import ConfigError, load_config
from skccm.experiment.processes import (
    BerSweep,
    BoundTable,
    ConjugationSearch,
    PdfHistogram,
)

__all__ = [
    "main",
    "build_parser",
    "EXIT_OK",
    "EXIT_CONFIG",
    "EXIT_NO_CONVERGENCE",
    "EXIT_FAILURE",
]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NO_CONVERGENCE = 3
EXIT_FAILURE = 4

_DEFAULT_OUT = {
    "optimize": "conjugation.txt",
    "bound": "bound.csv",
    "ber": "ber.csv",
    "pdf": "pdf.csv",
}

_PROCESSES = {
    "optimize": ConjugationSearch,
    "bound": BoundTable,
    "ber": BerSweep,
    "pdf": PdfHistogram,
}

logger = logging.getLogger(__name__)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", type=str, default=None, help="key=value configuration file"
    )
    common.add_argument(
        "--ebn0", type=float, nargs="+", default=None, help="Eb/N0 grid in dB"
    )
    common.add_argument("--ibo-db", type=float, default=None, help="Input back-off in dB")
    common.add_argument("--seed", type=int, default=None, help="Master seed")
    common.add_argument("--workers", type=int, default=None, help="Worker processes")
    common.add_argument("--out", type=str, default=None, help="Output file")
    common.add_argument("-v", "--verbose", action="count", default=0)

    ap = argparse.ArgumentParser(
        prog="skccm", description="Chaos-coded modulation experiments."
    )
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("optimize", parents=[common], help="Optimize the conjugation function")
    sub.add_parser("bound", parents=[common], help="Union bound over the Eb/N0 grid")
    sub.add_parser("ber", parents=[common], help="Simulated BER over the Eb/N0 grid")
    pdf = sub.add_parser("pdf", parents=[common], help="Histogram of the encoder samples")
    pdf.add_argument("--samples", type=int, default=None, help="Number of samples")
    return ap


def main(argv=None):
    """
    Run one experiment subcommand.

    Returns
    -------
    status : int
        0 on success, 2 for configuration errors, 3 if the optimizer did not converge,
        4 for any other failure.
    """
    args = build_parser().parse_args(argv)

    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(
        level=level, format="%(asctime)s %(name)s %(levelname)s: %(message)s"
    )

    overrides = {
        "channel.ebn0_db": args.ebn0,
        "hpa.ibo_db": args.ibo_db,
        "channel.seed": args.seed,
        "sim.workers": args.workers,
    }
    if args.command == "pdf":
        overrides["pdf.samples"] = args.samples
    out = args.out or _DEFAULT_OUT[args.command]

    try:
        cfg = load_config(args.config, overrides)
        _PROCESSES[args.command](cfg).predict(file=out)
    except (ConfigError, ConjugationError) as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG
    except OptimizationError as e:
        logger.error(f"{e} Best iterate written to {out}.")
        return EXIT_NO_CONVERGENCE
    except Exception as e:
        logger.exception(f"{args.command} failed: {e}")
        return EXIT_FAILURE

    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
