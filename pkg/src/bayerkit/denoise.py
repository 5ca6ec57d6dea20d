"""The unify -> pack -> filter -> unpack -> disunify pipeline.

The filter stage is pluggable and deliberately simple: classical per-plane
filters stand in for whatever learned model would sit there in production.
What this module actually guarantees is the plumbing around the filter:

* With the identity filter the whole pipeline is a bit-exact no-op for every
  (image pattern, working pattern) combination, which transitively validates
  padding, packing, unpacking, and disunification as exact inverses.
* With the Gaussian filter the output does not depend on the working pattern
  at all. This holds exactly, not approximately, and it pins two design
  choices: the kernel has radius 1 per plane, and plane borders are extended
  by edge duplication. Mosaic-level reflect-101 padding shows up in plane
  space as a duplicated edge row/column, so a radius-1 kernel with duplicated
  edges sees identical windows whether or not the mosaic was padded; a wider
  kernel, or mirror extension, sees different values near the border and the
  working pattern would leak into the result.

Filter arithmetic is float64; the single round-and-clip back to 16 bits
happens once per pipeline run.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadFilterParam
from .image import PackedImage, RawImage
from .packing import pack, unpack
from .patterns import BayerPattern
from .simulate import round_half_away
from .unify import disunify_crop, unify_pad

__all__ = ["DenoiserKind", "DenoiserSpec", "denoise_packed", "denoise_pipeline"]


class DenoiserKind(enum.Enum):
    IDENTITY = "identity"
    GAUSSIAN = "gaussian"
    MEDIAN = "median"


@dataclass(frozen=True)
class DenoiserSpec:
    """Which per-plane filter to run, plus its parameter.

    gaussian:<sigma> with sigma > 0; median:<radius> with radius 1 or 2.
    """

    kind: DenoiserKind
    sigma: float | None = None
    radius: int | None = None

    def __post_init__(self):
        if self.kind is DenoiserKind.GAUSSIAN:
            if self.sigma is None or not math.isfinite(self.sigma) or self.sigma <= 0:
                raise BadFilterParam(f"gaussian sigma must be finite and > 0, got {self.sigma}")
        elif self.kind is DenoiserKind.MEDIAN:
            if self.radius not in (1, 2):
                raise BadFilterParam(f"median radius must be 1 or 2, got {self.radius}")

    @classmethod
    def identity(cls) -> "DenoiserSpec":
        return cls(DenoiserKind.IDENTITY)

    @classmethod
    def gaussian(cls, sigma: float) -> "DenoiserSpec":
        return cls(DenoiserKind.GAUSSIAN, sigma=sigma)

    @classmethod
    def median(cls, radius: int) -> "DenoiserSpec":
        return cls(DenoiserKind.MEDIAN, radius=radius)

    @classmethod
    def parse(cls, text: str) -> "DenoiserSpec":
        """Parse the CLI syntax: identity | gaussian:<sigma> | median:<radius>."""
        name, _, arg = text.partition(":")
        if name == "identity" and not arg:
            return cls.identity()
        if name == "gaussian" and arg:
            try:
                return cls.gaussian(float(arg))
            except ValueError:
                raise BadFilterParam(f"bad gaussian sigma: {arg!r}") from None
        if name == "median" and arg:
            try:
                return cls.median(int(arg))
            except ValueError:
                raise BadFilterParam(f"bad median radius: {arg!r}") from None
        raise BadFilterParam(f"cannot parse denoiser spec: {text!r}")

    def cli_name(self) -> str:
        if self.kind is DenoiserKind.IDENTITY:
            return "identity"
        if self.kind is DenoiserKind.GAUSSIAN:
            return f"gaussian:{self.sigma}"
        return f"median:{self.radius}"


def _gaussian_3tap(sigma: float) -> tuple[float, float]:
    """Center and side weights of the radius-1 discrete Gaussian."""
    g1 = math.exp(-0.5 / (sigma * sigma))
    total = 1.0 + 2.0 * g1
    return 1.0 / total, g1 / total


def _smooth_plane(plane: np.ndarray, sigma: float) -> np.ndarray:
    # separable 3x3 kernel; edge-duplicated borders (see module docstring)
    w0, w1 = _gaussian_3tap(sigma)
    p = np.pad(plane, ((1, 1), (0, 0)), mode="edge")
    rows = w1 * p[:-2] + w0 * p[1:-1] + w1 * p[2:]
    p = np.pad(rows, ((0, 0), (1, 1)), mode="edge")
    return w1 * p[:, :-2] + w0 * p[:, 1:-1] + w1 * p[:, 2:]


def _median_plane(plane: np.ndarray, radius: int) -> np.ndarray:
    size = 2 * radius + 1
    p = np.pad(plane, radius, mode="reflect")
    windows = np.lib.stride_tricks.sliding_window_view(p, (size, size))
    return np.median(windows, axis=(2, 3))


def denoise_packed(p: PackedImage, spec: DenoiserSpec) -> PackedImage:
    """Filter each plane independently; shape, order, pattern, levels unchanged.

    IDENTITY returns the input object untouched. Median uses reflect-101
    borders; the Gaussian uses edge duplication (required for working-pattern
    invariance of the pipeline, see module docstring).
    """
    if spec.kind is DenoiserKind.IDENTITY:
        return p
    planes = p.planes.astype(np.float64)
    if spec.kind is DenoiserKind.GAUSSIAN:
        filtered = np.stack([_smooth_plane(pl, spec.sigma) for pl in planes])
    else:
        filtered = np.stack([_median_plane(pl, spec.radius) for pl in planes])
    out = np.clip(round_half_away(filtered), 0, 65535).astype(np.uint16)
    return PackedImage(out, p.pattern, p.black_level, p.white_level)


def denoise_pipeline(
    img: RawImage, work_pattern: BayerPattern, spec: DenoiserSpec
) -> RawImage:
    """Unify to the working pattern, filter packed planes, undo the geometry.

    Output dimensions and pattern always equal the input's. With the identity
    filter this is a bit-exact no-op; with the Gaussian the result is
    independent of work_pattern.
    """
    unified, pad_spec = unify_pad(img, work_pattern)
    filtered = denoise_packed(pack(unified), spec)
    return disunify_crop(unpack(filtered), pad_spec)
