"""bayerkit: Bayer pattern unification, pattern-preserving augmentation,
packing, a synthetic mosaic simulator, a pluggable denoising pipeline, and
image quality metrics, all checked against an exact channel-tracking oracle.
"""

from . import baselines
from .augment import (
    AugPlan,
    HFlip,
    Patch,
    Transpose,
    VFlip,
    apply_plan,
    crop_patch,
    flip_bayer,
    sample_plan,
    transpose_bayer,
)
from .denoise import DenoiserKind, DenoiserSpec, denoise_packed, denoise_pipeline
from .errors import (
    BadDimensions,
    BadFilterParam,
    BayerKitError,
    IllegalTranspose,
    ImageTooSmall,
    InconsistentSpec,
    MissingSidecar,
    OddOffset,
    OutOfBounds,
    ParseError,
    PatchTooLarge,
    ShapeMismatch,
    TooSmall,
    UnknownPattern,
)
from .image import PackedImage, RawImage
from .metrics import MetricReport, PSNR_CAP_DB, metric_report, mse, psnr, ssim
from .packing import pack, unpack
from .patterns import (
    BayerPattern,
    ColorChannel,
    TransformKind,
    channel_at,
    channel_index_grid,
    pattern_at_offset,
    pattern_transform,
    transpose_is_legal,
)
from .rawfile import RawFilePair, load_raw, save_raw, write_ppm
from .simulate import (
    NoiseParams,
    RgbImage,
    add_noise,
    demosaic_bilinear,
    gen_scene,
    mosaic,
)
from .unify import PadSpec, disunify_crop, unify_crop, unify_offsets, unify_pad

__version__ = "0.1.0"

__all__ = [
    "AugPlan",
    "BadDimensions",
    "BadFilterParam",
    "BayerKitError",
    "BayerPattern",
    "ColorChannel",
    "DenoiserKind",
    "DenoiserSpec",
    "HFlip",
    "IllegalTranspose",
    "ImageTooSmall",
    "InconsistentSpec",
    "MetricReport",
    "MissingSidecar",
    "NoiseParams",
    "OddOffset",
    "OutOfBounds",
    "PSNR_CAP_DB",
    "PackedImage",
    "PadSpec",
    "ParseError",
    "Patch",
    "PatchTooLarge",
    "RawFilePair",
    "RawImage",
    "RgbImage",
    "ShapeMismatch",
    "TooSmall",
    "TransformKind",
    "Transpose",
    "UnknownPattern",
    "VFlip",
    "add_noise",
    "apply_plan",
    "baselines",
    "channel_at",
    "channel_index_grid",
    "crop_patch",
    "demosaic_bilinear",
    "denoise_packed",
    "denoise_pipeline",
    "disunify_crop",
    "flip_bayer",
    "gen_scene",
    "load_raw",
    "metric_report",
    "mosaic",
    "mse",
    "pack",
    "pattern_at_offset",
    "pattern_transform",
    "psnr",
    "sample_plan",
    "save_raw",
    "ssim",
    "transpose_bayer",
    "transpose_is_legal",
    "unify_crop",
    "unify_offsets",
    "unify_pad",
    "unpack",
    "write_ppm",
]
