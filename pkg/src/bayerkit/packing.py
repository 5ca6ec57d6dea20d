"""Space-to-depth packing between the mosaic and the 4-plane layout.

Denoisers consume the mosaic as four half-resolution planes, one per 2x2
block position. ``pack`` and ``unpack`` are exact inverses; no value is
touched, so the pair is a lossless relabeling of the same data.
"""

from __future__ import annotations

import numpy as np

from .image import PackedImage, RawImage

__all__ = ["pack", "unpack"]


def pack(img: RawImage) -> PackedImage:
    """Split the mosaic into planes TL, TR, BL, BR.

    planes[2a + b][r, c] == img.samples[2r + a, 2c + b] for a, b in {0, 1}.
    """
    s = img.samples
    planes = np.stack([s[0::2, 0::2], s[0::2, 1::2], s[1::2, 0::2], s[1::2, 1::2]])
    return PackedImage(planes, img.pattern, img.black_level, img.white_level)


def unpack(p: PackedImage) -> RawImage:
    """Exact inverse of pack; metadata is carried through unchanged."""
    h, w = p.plane_height, p.plane_width
    mosaic = np.empty((2 * h, 2 * w), dtype=np.uint16)
    mosaic[0::2, 0::2] = p.planes[0]
    mosaic[0::2, 1::2] = p.planes[1]
    mosaic[1::2, 0::2] = p.planes[2]
    mosaic[1::2, 1::2] = p.planes[3]
    return RawImage(mosaic, p.pattern, p.black_level, p.white_level)
