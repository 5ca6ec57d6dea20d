import numpy as np
import pytest

from bayerkit import BayerPattern, RawImage

ALL_PATTERNS = list(BayerPattern)


def rand_raw(rng, height, width, pattern, black=0, white=65535):
    samples = rng.integers(0, 65536, size=(height, width), dtype=np.uint16)
    return RawImage(samples, pattern, black, white)


def assert_same_image(a: RawImage, b: RawImage):
    assert a.pattern is b.pattern
    assert a.black_level == b.black_level
    assert a.white_level == b.white_level
    assert a.samples.shape == b.samples.shape
    np.testing.assert_array_equal(a.samples, b.samples)


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
