"""Command-line front end.

    fisheyeloc project X Y
    fisheyeloc localize U V
    fisheyeloc simulate [--trials N] [--out PATH] [--no-noise] [--workers N]

Global options (accepted before or after the subcommand): ``--config PATH``,
``--seed N`` and one ``--<section>.<key> VALUE`` flag per configuration key,
e.g. ``--pose.tilt_deg 0``.

Exit status: 0 success, 1 usage or configuration error, 2 geometric error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .camera import PixelPoint, in_frame, project
from .config import AppConfig, flat_keys, load_config
from .errors import ConfigError, GeometryError, NoSuccessfulTrialsError, PixelOutsideFrameError
from .geometry import GroundPoint
from .localization import localize
from .noise import NoiseSpec
from .simulation import SimConfig, format_table, run_simulation, write_csv

EXIT_OK, EXIT_USAGE, EXIT_GEOMETRY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_options() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear on either side of the subcommand
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", metavar="PATH", help="TOML configuration file")
    common.add_argument("--seed", type=int, help="master random seed")
    for key in flat_keys():
        if key in ("seed", "trials"):
            continue
        common.add_argument(f"--{key}", dest=f"set:{key}", metavar="VALUE")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = _Parser(prog="fisheyeloc", parents=[common], description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", parents=[common], help="ground point -> pixel")
    p.add_argument("x", type=float, help="ground x, metres")
    p.add_argument("y", type=float, help="ground y, metres")

    p = sub.add_parser("localize", parents=[common], help="pixel -> ground point")
    p.add_argument("u", type=float)
    p.add_argument("v", type=float)

    p = sub.add_parser("simulate", parents=[common], help="repeated noisy localization")
    p.add_argument("--trials", type=int, default=argparse.SUPPRESS)
    p.add_argument("--out", metavar="PATH", default="simulation.csv", help="CSV output path")
    p.add_argument("--no-noise", action="store_true", help="zero every noise level")
    p.add_argument("--workers", type=int, default=1, help="threads for the trial loop")
    return parser


def _load(args: argparse.Namespace) -> AppConfig:
    overrides = {
        name[4:]: value for name, value in vars(args).items() if name.startswith("set:")
    }
    for key in ("seed", "trials"):
        if key in vars(args):
            overrides[key] = getattr(args, key)
    return load_config(getattr(args, "config", None), overrides)


def _num(value: float, places: int) -> str:
    text = f"{value:.{places}f}"
    return text[1:] if text.startswith("-") and float(text) == 0.0 else text


def cmd_project(cfg: AppConfig, x: float, y: float) -> int:
    u, v = project(cfg.intrinsics, cfg.pose, GroundPoint(x, y))
    print(f"{_num(u, 3)} {_num(v, 3)}")
    return EXIT_OK


def cmd_localize(cfg: AppConfig, u: float, v: float) -> int:
    pixel = PixelPoint(u, v)
    if not in_frame(cfg.intrinsics, pixel):
        raise PixelOutsideFrameError(
            f"({u:g}, {v:g}) not in {cfg.intrinsics.width}x{cfg.intrinsics.height}"
        )
    x, y = localize(cfg.intrinsics, cfg.pose, pixel)
    print(f"{_num(x, 4)} {_num(y, 4)}")
    return EXIT_OK


def cmd_simulate(cfg: AppConfig, out: str, no_noise: bool = False, workers: int = 1) -> int:
    sim: SimConfig = cfg.sim_config()
    if no_noise:
        sim = SimConfig(
            intrinsics=sim.intrinsics,
            true_pose=sim.true_pose,
            target=sim.target,
            noise=NoiseSpec.noiseless(cfg.noise.tilt_mean),
            alpha=sim.alpha,
            trials=sim.trials,
            seed=sim.seed,
        )
    records, stats = run_simulation(sim, workers=workers)
    try:
        with open(out, "w", newline="") as fh:
            write_csv(records, fh)
    except OSError as exc:
        print(f"fisheyeloc: error: cannot write {out!r}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    print(format_table(stats))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _load(args)
        if args.command == "project":
            return cmd_project(cfg, args.x, args.y)
        if args.command == "localize":
            return cmd_localize(cfg, args.u, args.v)
        return cmd_simulate(cfg, args.out, args.no_noise, args.workers)
    except ConfigError as exc:
        print(f"fisheyeloc: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GeometryError, NoSuccessfulTrialsError) as exc:
        print(f"fisheyeloc: error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY


if __name__ == "__main__":
    sys.exit(main())
