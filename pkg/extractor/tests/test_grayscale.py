import numpy as np
import pytest

from framefeat.errors import FormatError
from framefeat.grayscale import to_grayscale


def pixel(r, g, b):
    return np.array([[[r, g, b]]], dtype=np.uint8)


def test_pure_red_rounds_to_76():
    # 0.299 * 255 = 76.245 -> 76
    out = to_grayscale(pixel(255, 0, 0))
    assert out.shape == (1, 1, 3)
    assert np.all(out == 76)


def test_white_stays_255():
    assert np.all(to_grayscale(pixel(255, 255, 255)) == 255)


def test_gray_fixed_point():
    assert np.all(to_grayscale(pixel(100, 100, 100)) == 100)


def test_half_up_rounding():
    # 0.299*1 + 0.587*0 + 0.114*1 = 0.413 -> 0;  0.587 -> 1
    assert np.all(to_grayscale(pixel(1, 0, 1)) == 0)
    assert np.all(to_grayscale(pixel(0, 1, 0)) == 1)


def test_matches_formula_on_random_triples():
    rng = np.random.default_rng(0)
    rgb = rng.integers(0, 256, size=(100, 100, 3), dtype=np.uint8)
    out = to_grayscale(rgb)
    exact = 0.299 * rgb[:, :, 0] + 0.587 * rgb[:, :, 1] + 0.114 * rgb[:, :, 2]
    assert np.all(np.abs(out[:, :, 0].astype(np.float64) - exact) <= 1.0)
    np.testing.assert_array_equal(out[:, :, 0], out[:, :, 1])
    np.testing.assert_array_equal(out[:, :, 0], out[:, :, 2])


def test_wrong_channel_count():
    with pytest.raises(FormatError):
        to_grayscale(np.zeros((4, 4), dtype=np.uint8))
    with pytest.raises(FormatError):
        to_grayscale(np.zeros((4, 4, 4), dtype=np.uint8))
