"""Grayscale image ingestion and amplitude encoding.

An M x L image unfolds column by column (f11, f21, ..., fM1, f12, ...),
is zero-padded to the next power of two, and normalized, so the pixel data
becomes the amplitudes of a ceil(log2(M*L))-qubit state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AllZeroImage,
    BadMagic,
    DomainError,
    MaxvalOutOfRange,
    PgmError,
    PixelExceedsMaxval,
    TruncatedData,
)
from .states import RealState, normalize

__all__ = ["GrayImage", "load_pgm", "unfold", "pad_pow2", "encode"]

_WHITESPACE = frozenset(b" \t\n\r\x0b\x0c")


@dataclass(frozen=True)
class GrayImage:
    """Row-major grayscale pixels with the bit depth declared by maxval."""

    rows: int
    cols: int
    pixels: tuple[int, ...]
    maxval: int = 255

    def __post_init__(self) -> None:
        object.__setattr__(self, "pixels", tuple(int(p) for p in self.pixels))
        if self.rows < 1 or self.cols < 1:
            raise DomainError(f"image dimensions must be positive, got {self.rows}x{self.cols}")
        if not 1 <= self.maxval <= 65535:
            raise MaxvalOutOfRange(f"maxval must lie in [1, 65535], got {self.maxval}")
        if len(self.pixels) != self.rows * self.cols:
            raise DomainError(
                f"{self.rows}x{self.cols} image needs {self.rows * self.cols} pixels, "
                f"got {len(self.pixels)}"
            )
        for p in self.pixels:
            if not 0 <= p <= self.maxval:
                raise PixelExceedsMaxval(f"pixel value {p} outside [0, {self.maxval}]")

    def pixel(self, i: int, j: int) -> int:
        """Value at row i, column j (0-based)."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DomainError(f"pixel ({i}, {j}) outside {self.rows}x{self.cols} image")
        return self.pixels[i * self.cols + j]


class _Scanner:
    """Token scanner over PGM header bytes; '#' starts a comment to end of line."""

    def __init__(self, data: bytes) -> None:
        self.data = data
        self.pos = 0

    def _skip_filler(self) -> None:
        data, n = self.data, len(self.data)
        while self.pos < n:
            byte = data[self.pos]
            if byte in _WHITESPACE:
                self.pos += 1
            elif byte == 0x23:  # '#'
                while self.pos < n and data[self.pos] not in (0x0A, 0x0D):
                    self.pos += 1
            else:
                return

    def next_token(self) -> bytes:
        self._skip_filler()
        if self.pos >= len(self.data):
            raise TruncatedData("header ended early")
        start = self.pos
        data, n = self.data, len(self.data)
        while self.pos < n and data[self.pos] not in _WHITESPACE and data[self.pos] != 0x23:
            self.pos += 1
        return data[start : self.pos]

    def next_int(self, what: str) -> int:
        token = self.next_token()
        if not token.isdigit():
            raise PgmError(f"malformed {what} token {token!r}")
        return int(token)


def load_pgm(data: bytes) -> GrayImage:
    """Parse PGM bytes, ASCII (P2) or binary (P5), 8- or 16-bit.

    Binary 16-bit samples are big-endian per the Netpbm convention.  Bytes
    past the declared raster are ignored.
    """
    scanner = _Scanner(data)
    try:
        magic = scanner.next_token()
    except TruncatedData:
        raise BadMagic("empty input") from None
    if magic not in (b"P2", b"P5"):
        raise BadMagic(f"expected P2 or P5, got {magic!r}")
    width = scanner.next_int("width")
    height = scanner.next_int("height")
    maxval = scanner.next_int("maxval")
    if not 1 <= maxval <= 65535:
        raise MaxvalOutOfRange(f"maxval must lie in [1, 65535], got {maxval}")
    if width < 1 or height < 1:
        raise PgmError(f"image dimensions must be positive, got {width}x{height}")
    count = width * height

    if magic == b"P2":
        pixels = [scanner.next_int("sample") for _ in range(count)]
    else:
        # exactly one whitespace byte separates the maxval token from the raster
        if scanner.pos >= len(data):
            raise TruncatedData("no raster after header")
        if data[scanner.pos] not in _WHITESPACE:
            raise PgmError("maxval must be followed by a single whitespace byte")
        start = scanner.pos + 1
        if maxval < 256:
            raster = data[start : start + count]
            if len(raster) < count:
                raise TruncatedData(f"raster holds {len(raster)} of {count} samples")
            pixels = list(raster)
        else:
            raster = data[start : start + 2 * count]
            if len(raster) < 2 * count:
                raise TruncatedData(f"raster holds {len(raster) // 2} of {count} samples")
            pixels = [raster[2 * k] << 8 | raster[2 * k + 1] for k in range(count)]

    for p in pixels:
        if p > maxval:
            raise PixelExceedsMaxval(f"sample {p} exceeds maxval {maxval}")
    return GrayImage(rows=height, cols=width, pixels=tuple(pixels), maxval=maxval)


def unfold(image: GrayImage) -> list[float]:
    """Flatten column-major: column 0 top to bottom, then column 1, and so on."""
    rows, cols, px = image.rows, image.cols, image.pixels
    return [float(px[i * cols + j]) for j in range(cols) for i in range(rows)]


def pad_pow2(values: Sequence[float] | Iterable[float]) -> list[float]:
    """Append zeros up to the next power of two, never below length 2."""
    vals = [float(v) for v in values]
    if not vals:
        raise DomainError("cannot pad an empty sequence")
    target = 1 << max(1, (len(vals) - 1).bit_length())
    return vals + [0.0] * (target - len(vals))


def encode(image: GrayImage) -> RealState:
    """Unfold, pad, and normalize an image into a statevector."""
    vec = unfold(image)
    if not any(vec):
        raise AllZeroImage("every pixel is zero; the image encodes no state")
    return normalize(pad_pow2(vec))
