"""Command line interface: run | converge | cflmax | burgers-demo."""

import argparse
import sys

from .app import RunConfig, burgers_demo, cfl_table, convergence_study, run
from .errors import SolverError
from .stability import cfl_max


def _add_common(p):
    p.add_argument("--degree", type=int, default=3, help="polynomial degree N (2..8)")
    p.add_argument("--cfl", type=float, default=None, help="CFL number")
    p.add_argument("--limiter", choices=["on", "off"], default="off")


def build_parser():
    parser = argparse.ArgumentParser(prog="activeflux",
                                     description="Hybrid FE/FV (generalized Active Flux) "
                                                 "solver for 1D scalar conservation laws")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="single simulation, CSV output")
    _add_common(p)
    p.add_argument("--method", choices=["a", "b"], default="b")
    p.add_argument("--flux", choices=["advection", "burgers"], default="advection")
    p.add_argument("--speed", type=float, default=1.0, help="advection speed")
    p.add_argument("--cells", type=int, default=100)
    p.add_argument("--t-end", type=float, default=0.1)
    p.add_argument("--out", default=None, help="CSV output path")

    p = sub.add_parser("converge", help="grid refinement study, EOC table")
    _add_common(p)
    p.add_argument("--method", choices=["a", "b"], default="b")
    p.add_argument("--grids", type=int, nargs="+", default=[20, 40, 80, 160, 320])
    p.add_argument("--t-end", type=float, default=0.1)

    p = sub.add_parser("cflmax", help="maximum stable CFL number")
    p.add_argument("--degree", type=int, default=None,
                   help="single degree; omit for the full table")
    p.add_argument("--method", choices=["a", "b"], default=None)

    p = sub.add_parser("burgers-demo", help="transonic Burgers shock demo with Roe reference")
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--grids", type=int, nargs="+", default=[15, 50])
    p.add_argument("--t-end", type=float, default=0.12)
    p.add_argument("--cfl", type=float, default=0.4)
    p.add_argument("--out-dir", default=".")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            config = RunConfig(degree=args.degree, method=args.method, flux=args.flux,
                               speed=args.speed, cells=args.cells,
                               cfl=args.cfl if args.cfl is not None else 0.5,
                               t_end=args.t_end, limiter=args.limiter == "on",
                               out=args.out)
            state = run(config)
            print(f"t={state.t:.6g} done" + (f", wrote {args.out}" if args.out else ""))
        elif args.command == "converge":
            rows = convergence_study(args.degree, args.method, args.grids,
                                     cfl=args.cfl, t_end=args.t_end)
            print("M,dx,l1_error,eoc")
            for r in rows:
                eoc = f"{r.eoc:.3f}" if r.eoc is not None else ""
                print(f"{r.M},{r.dx:.6g},{r.error:.6e},{eoc}")
        elif args.command == "cflmax":
            if args.degree is None:
                sys.stdout.write(cfl_table())
            else:
                methods = [args.method] if args.method else ["a", "b"]
                for m in methods:
                    print(f"{args.degree},{m},{cfl_max(args.degree, m):.3f}")
        elif args.command == "burgers-demo":
            burgers_demo(out_dir=args.out_dir, N=args.degree, grids=tuple(args.grids),
                         t_end=args.t_end, cfl=args.cfl)
            print(f"wrote demo CSVs to {args.out_dir}")
    except (SolverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
