"""Pattern-preserving augmentation for Bayer mosaics.

A plain flip of a mosaic changes its Bayer pattern, so each flip here is
fused with a compensating crop of the first and last column (or row): the
output is two pixels narrower (or shorter) and has the SAME pattern as the
input. The intermediate wrong-pattern image is never exposed.

Transposition keeps the pattern only when the off-diagonal cells are both
green, i.e. for RGGB and BGGR; for GRBG/GBRG it is refused outright.
Patch extraction must start at even offsets with even sizes, otherwise the
patch's pattern would silently shift.

``sample_plan`` draws a random combination of these primitives from a seed;
the draw order is pinned (hflip, vflip, transpose, patch) and the generator
is numpy's PCG64, so a given seed yields the same plan on every run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    BayerKitError,
    IllegalTranspose,
    ImageTooSmall,
    OddOffset,
    OutOfBounds,
    ParseError,
    PatchTooLarge,
)
from .image import RawImage
from .patterns import transpose_is_legal, BayerPattern

__all__ = [
    "HFlip",
    "VFlip",
    "Transpose",
    "Patch",
    "AugPlan",
    "flip_bayer",
    "transpose_bayer",
    "crop_patch",
    "sample_plan",
    "apply_plan",
]


@dataclass(frozen=True)
class HFlip:
    op = "hflip"


@dataclass(frozen=True)
class VFlip:
    op = "vflip"


@dataclass(frozen=True)
class Transpose:
    op = "transpose"


@dataclass(frozen=True)
class Patch:
    top: int
    left: int
    height: int
    width: int
    op = "patch"


Step = HFlip | VFlip | Transpose | Patch


@dataclass(frozen=True)
class AugPlan:
    """An ordered, serializable sequence of augmentation steps.

    ``seed`` records how sampled plans were drawn; hand-built plans keep the
    default 0. Transpose steps are validated against the image pattern at
    apply time, not at construction.
    """

    steps: tuple[Step, ...]
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        for step in self.steps:
            if isinstance(step, Patch):
                if any(v % 2 for v in (step.top, step.left, step.height, step.width)):
                    raise OddOffset(f"patch offsets and sizes must be even: {step}")

    def to_json(self) -> str:
        payload = {"seed": self.seed, "steps": []}
        for step in self.steps:
            if isinstance(step, Patch):
                payload["steps"].append(
                    {
                        "op": "patch",
                        "top": step.top,
                        "left": step.left,
                        "height": step.height,
                        "width": step.width,
                    }
                )
            else:
                payload["steps"].append({"op": step.op})
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AugPlan":
        try:
            payload = json.loads(text)
            steps: list[Step] = []
            for entry in payload.get("steps", []):
                op = entry["op"]
                if op == "hflip":
                    steps.append(HFlip())
                elif op == "vflip":
                    steps.append(VFlip())
                elif op == "transpose":
                    steps.append(Transpose())
                elif op == "patch":
                    steps.append(
                        Patch(
                            int(entry["top"]),
                            int(entry["left"]),
                            int(entry["height"]),
                            int(entry["width"]),
                        )
                    )
                else:
                    raise ParseError(f"unknown plan step op: {op!r}")
            return cls(tuple(steps), seed=int(payload.get("seed", 0)))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise ParseError(f"bad augmentation plan: {e}") from e


def flip_bayer(img: RawImage, axis: str) -> RawImage:
    """Flip and crop the boundary pair so the pattern is preserved.

    axis is "horizontal" or "vertical". Horizontal: out(r, c) =
    img(r, width-2-c) and the output is 2 columns narrower; vertical is the
    transposed statement. The flip alone would turn C1C2C3C4 into C2C1C4C3
    (or C3C4C1C2); dropping the first and last column (row) of the flipped
    image shifts the origin back.
    """
    if axis == "horizontal":
        if img.width < 4:
            raise ImageTooSmall(f"width {img.width} < 4: nothing would remain after flip+crop")
        out = img.samples[:, ::-1][:, 1:-1]
    elif axis == "vertical":
        if img.height < 4:
            raise ImageTooSmall(f"height {img.height} < 4: nothing would remain after flip+crop")
        out = img.samples[::-1, :][1:-1, :]
    else:
        raise ValueError(f"axis must be 'horizontal' or 'vertical', got {axis!r}")
    return RawImage(out, img.pattern, img.black_level, img.white_level)


def transpose_bayer(img: RawImage) -> RawImage:
    """Transpose the mosaic; only legal when the greens sit on the off-diagonal."""
    if not transpose_is_legal(img.pattern):
        raise IllegalTranspose(
            f"transposing a {img.pattern.value} image would produce a different pattern",
            pattern=img.pattern,
        )
    return RawImage(img.samples.T, img.pattern, img.black_level, img.white_level)


def crop_patch(img: RawImage, top: int, left: int, height: int, width: int) -> RawImage:
    """Extract an even-aligned, even-sized patch; the pattern is unchanged.

    Odd arguments are refused: an odd offset is precisely the operation that
    unification uses to CHANGE a pattern, and must never happen here.
    """
    if any(v % 2 for v in (top, left, height, width)):
        raise OddOffset(
            f"patch arguments must all be even, got top={top} left={left} "
            f"height={height} width={width}"
        )
    if top < 0 or left < 0 or height < 2 or width < 2:
        raise OutOfBounds(f"degenerate patch: top={top} left={left} {height}x{width}")
    if top + height > img.height or left + width > img.width:
        raise OutOfBounds(
            f"patch {top}+{height} x {left}+{width} exceeds image {img.height}x{img.width}"
        )
    out = img.samples[top : top + height, left : left + width]
    return RawImage(out, img.pattern, img.black_level, img.white_level)


def sample_plan(
    seed: int,
    patch_size: int,
    img_height: int,
    img_width: int,
    pattern: BayerPattern,
) -> AugPlan:
    """Draw a random augmentation plan, deterministically from the seed.

    Independent fair coins decide hflip and vflip; a third coin decides
    transpose, drawn only for patterns where transposition is legal. The
    final step is always a patch_size x patch_size patch whose top/left are
    drawn uniformly from the even offsets that keep the patch inside the
    (shrunk, possibly transposed) frame. patch_size must leave room for the
    flip shrinkage: patch_size <= min(height, width) - 4.
    """
    if patch_size % 2:
        raise OddOffset(f"patch_size must be even, got {patch_size}")
    if patch_size < 2 or patch_size > min(img_height, img_width) - 4:
        raise PatchTooLarge(
            f"patch_size {patch_size} does not fit a {img_height}x{img_width} image "
            "with room for flip shrinkage"
        )
    rng = np.random.Generator(np.random.PCG64(seed))
    steps: list[Step] = []
    h, w = img_height, img_width
    if rng.integers(0, 2):
        steps.append(HFlip())
        w -= 2
    if rng.integers(0, 2):
        steps.append(VFlip())
        h -= 2
    if transpose_is_legal(pattern) and rng.integers(0, 2):
        steps.append(Transpose())
        h, w = w, h
    top = 2 * int(rng.integers(0, (h - patch_size) // 2 + 1))
    left = 2 * int(rng.integers(0, (w - patch_size) // 2 + 1))
    steps.append(Patch(top, left, patch_size, patch_size))
    return AugPlan(tuple(steps), seed=seed)


def apply_plan(img: RawImage, plan: AugPlan) -> RawImage:
    """Apply the plan's steps in order; the output pattern equals the input's.

    Step errors propagate with the failing step index prepended to the
    message.
    """
    out = img
    for i, step in enumerate(plan.steps):
        try:
            if isinstance(step, HFlip):
                out = flip_bayer(out, "horizontal")
            elif isinstance(step, VFlip):
                out = flip_bayer(out, "vertical")
            elif isinstance(step, Transpose):
                out = transpose_bayer(out)
            elif isinstance(step, Patch):
                out = crop_patch(out, step.top, step.left, step.height, step.width)
            else:
                raise ValueError(f"unknown plan step: {step!r}")
        except BayerKitError as e:
            e.args = (f"plan step {i} ({step.op}): {e}",)
            raise
    return out
