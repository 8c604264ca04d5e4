"""File formats: 8-bit PGM images (P2/P5) and headerless CSV matrices."""

from dataclasses import dataclass

import numpy as np


class PgmFormatError(ValueError):
    pass


@dataclass(frozen=True)
class PgmImage:
    width: int
    height: int
    maxval: int
    pixels: np.ndarray  # height x width ints in [0, maxval]

    def __post_init__(self):
        px = np.asarray(self.pixels, dtype=np.int64)
        if px.shape != (self.height, self.width):
            raise ValueError("pixel array shape does not match dimensions")
        if not (0 < self.maxval <= 255):
            raise PgmFormatError(f"unsupported depth: maxval {self.maxval}")
        if px.min() < 0 or px.max() > self.maxval:
            raise ValueError("pixel values outside [0, maxval]")
        object.__setattr__(self, "pixels", px)


def _pgm_tokens(data):
    """Yield whitespace-separated header tokens, skipping # comments."""
    i = 0
    while i < len(data):
        ch = data[i:i + 1]
        if ch.isspace():
            i += 1
        elif ch == b"#":
            nl = data.find(b"\n", i)
            i = len(data) if nl < 0 else nl + 1
        else:
            j = i
            while j < len(data) and not data[j:j + 1].isspace():
                j += 1
            yield data[i:j], j
            i = j


def read_pgm(path):
    with open(path, "rb") as fh:
        data = fh.read()
    tokens = _pgm_tokens(data)
    header = []
    for tok in tokens:
        header.append(tok)
        if len(header) == 4:
            break
    if len(header) < 4:
        raise PgmFormatError("truncated PGM header")
    (magic, _), (w, _), (h, _), (maxval, end) = header
    magic = magic.decode("ascii", "replace")
    if magic not in ("P2", "P5"):
        raise PgmFormatError(f"unsupported magic {magic!r}")
    width, height, maxval = int(w), int(h), int(maxval)
    if maxval > 255:
        raise PgmFormatError(f"unsupported depth: maxval {maxval}")
    count = width * height
    if magic == "P2":
        values = []
        for tok, _ in _pgm_tokens(data[end:]):
            values.append(int(tok))
            if len(values) == count:
                break
        if len(values) < count:
            raise PgmFormatError("truncated P2 payload")
        pixels = np.array(values, dtype=np.int64)
    else:
        payload = data[end + 1:end + 1 + count]
        if len(payload) < count:
            raise PgmFormatError("truncated P5 payload")
        pixels = np.frombuffer(payload, dtype=np.uint8).astype(np.int64)
    return PgmImage(
        width=width,
        height=height,
        maxval=maxval,
        pixels=pixels.reshape(height, width),
    )


def write_pgm(img, path):
    """Write binary P5; round trip through read_pgm is pixel-exact."""
    header = f"P5\n{img.width} {img.height}\n{img.maxval}\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(img.pixels.astype(np.uint8).tobytes())


def read_csv_matrix(path, header=False):
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh):
            if header and lineno == 0:
                continue
            line = line.strip()
            if not line:
                continue
            rows.append([float(tok) for tok in line.split(",")])
    if not rows:
        raise ValueError(f"no data rows in {path}")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged CSV rows")
    m = np.array(rows, dtype=float)
    if not np.all(np.isfinite(m)):
        raise ValueError("non-finite values in CSV matrix")
    return m


def write_csv_matrix(m, path):
    m = np.atleast_2d(np.asarray(m, dtype=float))
    with open(path, "w") as fh:
        for row in m:
            fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
