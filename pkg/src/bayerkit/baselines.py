"""Deliberately wrong baseline operations, kept for differential testing.

Both operations here reproduce well-documented mistakes in raw-image
pipelines. They type-check, they look plausible, and they quietly destroy
the half-pixel spatial relationship between the four planes:

* ``naive_unify`` permutes packed planes so the channel sequence matches the
  target pattern. The labels come out right, but each plane keeps the
  spatial phase of its old block position, so the mosaic it implies is not
  one a sensor could have produced.
* ``naive_flip`` flips each packed plane in place. Same story: after
  unpacking, pixel neighborhoods no longer interleave the way the pattern
  tag claims.

Neither function belongs in a processing pipeline; they exist so the test
suite and the ``baseline-demo`` command can show, numerically, how much
damage they do compared to the correct transforms.
"""

from __future__ import annotations

import numpy as np

from .image import PackedImage, RawImage
from .packing import pack, unpack
from .patterns import BayerPattern
from .unify import unify_crop, unify_offsets

__all__ = ["naive_unify", "naive_flip", "compare_unify_paths", "compare_flip_paths"]


def _plane_channel_letters(pattern: BayerPattern) -> list[str]:
    return list(pattern.value)


def naive_unify(p: PackedImage, target: BayerPattern) -> PackedImage:
    """Relabel planes to the target channel sequence WITHOUT moving any pixel.

    R goes to the target's R slot, B to the B slot, and the two greens fill
    the target's green slots in scan order. The plane multiset is preserved;
    the spatial phase of every plane is not compensated, which is exactly
    the error this baseline exists to demonstrate.
    """
    src_letters = _plane_channel_letters(p.pattern)
    dst_letters = _plane_channel_letters(target)
    src_greens = [i for i, ch in enumerate(src_letters) if ch == "G"]
    order = []
    for ch in dst_letters:
        if ch == "G":
            order.append(src_greens.pop(0))
        else:
            order.append(src_letters.index(ch))
    return PackedImage(p.planes[order], target, p.black_level, p.white_level)


def naive_flip(p: PackedImage, axis: str) -> PackedImage:
    """Flip each plane independently, keeping plane order and pattern tag.

    axis is "horizontal" or "vertical". Applying it twice restores the input
    exactly, but a single application yields planes whose implied mosaic is
    not a valid image of the tagged pattern.
    """
    if axis == "horizontal":
        planes = p.planes[:, :, ::-1]
    elif axis == "vertical":
        planes = p.planes[:, ::-1, :]
    else:
        raise ValueError(f"axis must be 'horizontal' or 'vertical', got {axis!r}")
    return PackedImage(planes, p.pattern, p.black_level, p.white_level)


def _interior_rmse(a: np.ndarray, b: np.ndarray, margin: int = 2) -> float:
    da = a[:, margin:-margin, margin:-margin]
    db = b[:, margin:-margin, margin:-margin]
    return float(np.sqrt(np.mean((da - db) ** 2)))


def compare_unify_paths(img: RawImage, target: BayerPattern) -> tuple[float, float]:
    """Interior demosaic RMSE of the correct crop path vs the plane permutation.

    The reference is the demosaic of the untouched input. The correct path
    must agree with the matching spatial crop of the reference; the naive
    path is compared against the uncropped reference (it does not move the
    frame). Returns (correct_rmse, naive_rmse) in normalized units.
    """
    from .simulate import demosaic_bilinear

    ref = demosaic_bilinear(img).planes
    dy, dx = unify_offsets(img.pattern, target)
    h, w = img.height, img.width

    cropped = unify_crop(img, target)
    d_crop = demosaic_bilinear(cropped).planes
    ref_crop = ref[:, dy : h - dy, dx : w - dx]
    correct = _interior_rmse(d_crop, ref_crop)

    relabeled = unpack(naive_unify(pack(img), target))
    d_naive = demosaic_bilinear(relabeled).planes
    naive = _interior_rmse(d_naive, ref)
    return correct, naive


def compare_flip_paths(img: RawImage, axis: str) -> tuple[float, float]:
    """Interior demosaic RMSE of flip-with-boundary-crop vs per-plane flipping.

    Each path is compared against its own exact geometric reference derived
    from the demosaic of the input: the correct path against the mirrored
    reference minus its first and last column/row, the naive path against
    the full mirrored reference. Returns (correct_rmse, naive_rmse).
    """
    from .augment import flip_bayer
    from .simulate import demosaic_bilinear

    ref = demosaic_bilinear(img).planes
    if axis == "horizontal":
        mirrored = ref[:, :, ::-1]
        ref_correct = mirrored[:, :, 1:-1]
    elif axis == "vertical":
        mirrored = ref[:, ::-1, :]
        ref_correct = mirrored[:, 1:-1, :]
    else:
        raise ValueError(f"axis must be 'horizontal' or 'vertical', got {axis!r}")

    d_correct = demosaic_bilinear(flip_bayer(img, axis)).planes
    correct = _interior_rmse(d_correct, ref_correct)

    d_naive = demosaic_bilinear(unpack(naive_flip(pack(img), axis))).planes
    naive = _interior_rmse(d_naive, mirrored)
    return correct, naive
