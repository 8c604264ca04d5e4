"""Command-line front end.

Subcommands:
  kernel gram     Gram matrix of a kernel over a CSV point set
  kaczmarz solve  Kaczmarz iteration on a CSV linear system, JSON report
  pca compress    PCA image compression of a PGM image, JSON report
  frame bounds    frame bounds of CSV row vectors, JSON report
  gp sample       Gaussian process draws at CSV points

Exit codes: 0 success, 2 validation error, 1 numerical failure.
"""

import argparse
import json
import sys

import numpy as np

from rkhskit import fileio, frames, gaussian, kaczmarz, pca
from rkhskit.errors import RkhsKitError
from rkhskit.kernels import (
    BoxBandKernel,
    GaussianKernel,
    PointSet,
    SincKernel,
    gram_matrix,
)


class ValidationError(Exception):
    pass


def parse_kernel(spec):
    """Parse 'family' or 'family:key=value;key=value' kernel specs.

    Families: gaussian (sigma), sinc, pw-box (a, comma-separated per
    dimension; normalized=true|false).
    """
    family, _, rest = spec.partition(":")
    params = {}
    if rest:
        for item in rest.split(";"):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValidationError(f"malformed kernel parameter {item!r}")
            params[key.strip()] = value.strip()
    try:
        if family == "gaussian":
            return GaussianKernel(sigma=float(params.pop("sigma", 1.0)))
        if family == "sinc":
            return SincKernel()
        if family == "pw-box":
            half = [float(v) for v in params.pop("a", "3.141592653589793").split(",")]
            normalized = params.pop("normalized", "true").lower() != "false"
            return BoxBandKernel(half, normalized=normalized)
    except ValueError as exc:
        raise ValidationError(f"bad kernel parameters: {exc}") from exc
    raise ValidationError(f"unknown kernel family {family!r}")


def _points_from_csv(path):
    return PointSet(fileio.read_csv_matrix(path))


def cmd_kernel_gram(args):
    kernel = parse_kernel(args.kernel)
    gram = gram_matrix(kernel, _points_from_csv(args.points))
    fileio.write_csv_matrix(gram.matrix, args.out)
    return 0


def cmd_kaczmarz_solve(args):
    if args.mode == "randomized" and args.seed is None:
        raise ValidationError("--seed is required with --mode randomized")
    system = kaczmarz.LinearSystem(
        A=fileio.read_csv_matrix(args.matrix),
        b=fileio.read_csv_matrix(args.rhs).reshape(-1),
    )
    run = kaczmarz.solve_classical(
        system,
        tol=args.tol,
        max_sweeps=args.max_sweeps,
        mode=args.mode,
        seed=args.seed,
    )
    with open(args.report, "w") as fh:
        json.dump(run.to_dict(), fh, indent=2)
    if args.solution:
        fileio.write_csv_matrix(run.solution.reshape(1, -1), args.solution)
    return 0


def cmd_pca_compress(args):
    img = fileio.read_pgm(args.input)
    k = args.components
    if not (1 <= k <= min(img.width, img.height)):
        raise ValidationError(
            f"--components must lie in [1, {min(img.width, img.height)}]"
        )
    data = img.pixels.astype(float)
    model = pca.fit(data)
    rebuilt = pca.reconstruct(model, pca.transform(model, data), k)
    summary = pca.report(model, data, k)
    quantized = np.clip(np.rint(rebuilt), 0, img.maxval).astype(np.int64)
    fileio.write_pgm(
        fileio.PgmImage(img.width, img.height, img.maxval, quantized), args.out
    )
    with open(args.report, "w") as fh:
        json.dump(summary.to_dict(), fh, indent=2)
    return 0


def cmd_frame_bounds(args):
    frame = frames.normalize_frame(fileio.read_csv_matrix(args.vectors))
    bounds = frames.frame_bounds(frame)
    with open(args.report, "w") as fh:
        json.dump(
            {"A": bounds.A, "B": bounds.B, "is_frame": bounds.is_frame},
            fh,
            indent=2,
        )
    return 0


def cmd_gp_sample(args):
    kernel = parse_kernel(args.kernel)
    cfg = gaussian.SamplerConfig(seed=args.seed, n_samples=args.n)
    sample = gaussian.sample_gp(kernel, _points_from_csv(args.points), cfg)
    fileio.write_csv_matrix(sample.draws, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="rkhskit", description=__doc__)
    sub = parser.add_subparsers(dest="group", required=True)

    kernel = sub.add_parser("kernel").add_subparsers(dest="action", required=True)
    gram = kernel.add_parser("gram", help="Gram matrix over a point set")
    gram.add_argument("--kernel", required=True)
    gram.add_argument("--points", required=True)
    gram.add_argument("--out", required=True)
    gram.set_defaults(func=cmd_kernel_gram)

    kz = sub.add_parser("kaczmarz").add_subparsers(dest="action", required=True)
    solve = kz.add_parser("solve", help="row-action iteration on A x = b")
    solve.add_argument("--matrix", required=True)
    solve.add_argument("--rhs", required=True)
    solve.add_argument("--mode", choices=["cyclic", "randomized"], default="cyclic")
    solve.add_argument("--seed", type=int)
    solve.add_argument("--tol", type=float, default=1e-10)
    solve.add_argument("--max-sweeps", type=int, default=10_000)
    solve.add_argument("--report", required=True)
    solve.add_argument("--solution")
    solve.set_defaults(func=cmd_kaczmarz_solve)

    pca_sub = sub.add_parser("pca").add_subparsers(dest="action", required=True)
    comp = pca_sub.add_parser("compress", help="PCA-compress a PGM image")
    comp.add_argument("--input", required=True)
    comp.add_argument("--components", type=int, required=True)
    comp.add_argument("--out", required=True)
    comp.add_argument("--report", required=True)
    comp.set_defaults(func=cmd_pca_compress)

    fr = sub.add_parser("frame").add_subparsers(dest="action", required=True)
    bounds = fr.add_parser("bounds", help="frame bounds of CSV row vectors")
    bounds.add_argument("--vectors", required=True)
    bounds.add_argument("--report", required=True)
    bounds.set_defaults(func=cmd_frame_bounds)

    gp = sub.add_parser("gp").add_subparsers(dest="action", required=True)
    samp = gp.add_parser("sample", help="Gaussian process draws at points")
    samp.add_argument("--kernel", required=True)
    samp.add_argument("--points", required=True)
    samp.add_argument("--n", type=int, required=True)
    samp.add_argument("--seed", type=int, required=True)
    samp.add_argument("--out", required=True)
    samp.set_defaults(func=cmd_gp_sample)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RkhsKitError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
