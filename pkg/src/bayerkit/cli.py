"""Command-line interface tying the library into file-to-file pipelines.

Exit codes: 0 on success, 2 on usage errors (argparse), 1 on processing
errors. Processing errors are reported as a single line on stderr. Every
command is deterministic given its flags and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import baselines
from .augment import AugPlan, HFlip, Patch, Transpose, VFlip, apply_plan, sample_plan
from .denoise import DenoiserSpec, denoise_pipeline
from .errors import BayerKitError
from .metrics import metric_report
from .packing import pack, unpack
from .patterns import BayerPattern
from .rawfile import load_raw, save_raw, write_ppm
from .simulate import NoiseParams, add_noise, demosaic_bilinear, gen_scene, mosaic
from .unify import disunify_crop, unify_crop, unify_pad


class UsageError(Exception):
    """Command-line misuse that argparse's declarative checks cannot express."""


def _pattern(text: str) -> BayerPattern:
    try:
        return BayerPattern.from_name(text)
    except BayerKitError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not one of RGGB, BGGR, GRBG, GBRG"
        ) from None


def _size(text: str) -> tuple[int, int]:
    try:
        h, w = text.split("x")
        return int(h), int(w)
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must look like 128x128, got {text!r}") from None


def _patch_args(text: str) -> tuple[int, int, int, int]:
    try:
        t, l, h, w = (int(v) for v in text.split(","))
        return t, l, h, w
    except ValueError:
        raise argparse.ArgumentTypeError(f"patch must be T,L,H,W integers, got {text!r}") from None


def _noise(text: str) -> tuple[float, float]:
    try:
        read, shot = (float(v) for v in text.split(","))
        return read, shot
    except ValueError:
        raise argparse.ArgumentTypeError(f"noise must be READ,SHOT floats, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bayerkit", description="Bayer raw mosaic processing toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("unify", help="convert a mosaic to a target Bayer pattern")
    p.add_argument("--target", type=_pattern, required=True)
    p.add_argument("--mode", choices=["crop", "pad"], required=True)
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_unify)

    p = sub.add_parser("disunify", help="undo pad-unification recorded in the sidecar")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_disunify)

    p = sub.add_parser("augment", help="apply pattern-preserving augmentation")
    p.add_argument("--hflip", action="store_true")
    p.add_argument("--vflip", action="store_true")
    p.add_argument("--transpose", action="store_true")
    p.add_argument("--patch", type=_patch_args, metavar="T,L,H,W")
    p.add_argument("--seed", type=int)
    p.add_argument("--patch-size", type=int)
    p.add_argument("--plan", metavar="plan.json")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("pack-roundtrip", help="self-check: pack then unpack must be exact")
    p.add_argument("input")
    p.set_defaults(func=cmd_pack_roundtrip)

    p = sub.add_parser("simulate", help="generate a synthetic mosaic")
    p.add_argument("--pattern", type=_pattern, required=True)
    p.add_argument("--size", type=_size, required=True, metavar="HxW")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--noise", type=_noise, metavar="READ,SHOT")
    p.add_argument("--noise-seed", type=int, default=0)
    p.add_argument("--clean", metavar="clean.pgm")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("denoise", help="run the unify/pack/filter/unpack/disunify pipeline")
    p.add_argument("--filter", required=True, dest="filter_spec",
                   metavar="identity|gaussian:<s>|median:<r>")
    p.add_argument("--work-pattern", type=_pattern, required=True)
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_denoise)

    p = sub.add_parser("demosaic", help="bilinear demosaic to a 16-bit PPM")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_demosaic)

    p = sub.add_parser("metrics", help="print MSE/PSNR/SSIM of input vs reference as JSON")
    p.add_argument("--ref", required=True)
    p.add_argument("input")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("baseline-demo",
                       help="differential demo: correct transforms vs naive packed-plane ops")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_baseline_demo)

    return parser


def cmd_unify(args) -> int:
    img, _ = load_raw(args.input)
    if args.mode == "crop":
        save_raw(unify_crop(img, args.target), None, args.output)
    else:
        unified, pad = unify_pad(img, args.target)
        save_raw(unified, pad, args.output)
    return 0


def cmd_disunify(args) -> int:
    img, pad = load_raw(args.input)
    if pad is None:
        raise BayerKitError(f"{args.input}: sidecar has no 'pad' record to undo")
    save_raw(disunify_crop(img, pad), None, args.output)
    return 0


def cmd_augment(args) -> int:
    explicit = args.hflip or args.vflip or args.transpose or args.patch is not None
    modes = sum([args.plan is not None, args.seed is not None, explicit])
    if modes > 1:
        raise UsageError("choose one of --plan, --seed, or explicit step flags")
    if modes == 0:
        raise UsageError("no augmentation requested")
    img, _ = load_raw(args.input)
    if args.plan is not None:
        with open(args.plan) as fh:
            plan = AugPlan.from_json(fh.read())
    elif args.seed is not None:
        if args.patch_size is None:
            raise UsageError("--seed requires --patch-size")
        plan = sample_plan(args.seed, args.patch_size, img.height, img.width, img.pattern)
    else:
        steps = []
        if args.hflip:
            steps.append(HFlip())
        if args.vflip:
            steps.append(VFlip())
        if args.transpose:
            steps.append(Transpose())
        if args.patch is not None:
            steps.append(Patch(*args.patch))
        plan = AugPlan(tuple(steps))
    save_raw(apply_plan(img, plan), None, args.output)
    return 0


def cmd_pack_roundtrip(args) -> int:
    img, _ = load_raw(args.input)
    back = unpack(pack(img))
    ok = (
        (back.samples == img.samples).all()
        and back.pattern is img.pattern
        and back.black_level == img.black_level
        and back.white_level == img.white_level
    )
    if not ok:
        print(f"{args.input}: pack/unpack round trip FAILED", file=sys.stderr)
        return 1
    print(f"{args.input}: pack/unpack round trip OK ({img.height}x{img.width})")
    return 0


def cmd_simulate(args) -> int:
    height, width = args.size
    scene = gen_scene(args.seed, height, width)
    clean = mosaic(scene, args.pattern)
    if args.clean:
        save_raw(clean, None, args.clean)
    out = clean
    if args.noise is not None:
        read, shot = args.noise
        out = add_noise(clean, NoiseParams(read, shot), args.noise_seed)
    save_raw(out, None, args.output)
    return 0


def cmd_denoise(args) -> int:
    spec = DenoiserSpec.parse(args.filter_spec)
    img, _ = load_raw(args.input)
    save_raw(denoise_pipeline(img, args.work_pattern, spec), None, args.output)
    return 0


def cmd_demosaic(args) -> int:
    img, _ = load_raw(args.input)
    write_ppm(demosaic_bilinear(img), args.output)
    return 0


def cmd_metrics(args) -> int:
    ref, _ = load_raw(args.ref)
    img, _ = load_raw(args.input)
    print(metric_report(img, ref).to_json())
    return 0


def cmd_baseline_demo(args) -> int:
    scene = gen_scene(args.seed, 128, 128)
    patterns = list(BayerPattern)
    unify_rows = []
    for src in patterns:
        img = mosaic(scene, src)
        for target in patterns:
            correct, naive = baselines.compare_unify_paths(img, target)
            unify_rows.append(
                {
                    "src": src.value,
                    "target": target.value,
                    "correct_rmse": correct,
                    "naive_rmse": naive,
                }
            )
    flip_rows = []
    for src in patterns:
        img = mosaic(scene, src)
        for axis in ("horizontal", "vertical"):
            correct, naive = baselines.compare_flip_paths(img, axis)
            flip_rows.append(
                {
                    "pattern": src.value,
                    "axis": axis,
                    "correct_rmse": correct,
                    "naive_rmse": naive,
                }
            )

    def summary(rows):
        correct = sum(r["correct_rmse"] for r in rows) / len(rows)
        naive = sum(r["naive_rmse"] for r in rows) / len(rows)
        return {
            "mean_correct_rmse": correct,
            "mean_naive_rmse": naive,
            "ratio": (naive / correct) if correct > 0 else None,
        }

    table = {
        "seed": args.seed,
        "size": [128, 128],
        "quantization_step": 1.0 / 65535.0,
        "unify": {**summary(unify_rows), "pairs": unify_rows},
        "flip": {**summary(flip_rows), "pairs": flip_rows},
    }
    print(json.dumps(table, indent=2))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))  # exits 2
    except (BayerKitError, OSError) as e:
        print(f"bayerkit: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
