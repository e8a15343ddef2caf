"""Spread-spectrum embedding simulator for the averaging attack.

Codeword bits modulate an orthonormal basis of noise-like signals that is
added to the host.  Averaging the marked copies and projecting back onto
the basis recovers the generated word up to float error.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .code import GeneratedWord

__all__ = [
    "EmbeddingParams",
    "SnapError",
    "make_basis",
    "embed",
    "collude_average",
    "extract",
    "rationalize",
    "add_noise",
    "write_signal",
    "read_signal",
]


class SnapError(ValueError):
    """A float entry matched no rational, or more than one, within tolerance."""


@dataclass(frozen=True)
class EmbeddingParams:
    dim: int
    alpha: float
    seed: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")


def make_basis(n: int, dim: int, seed: int) -> np.ndarray:
    """``n`` orthonormal rows of length ``dim`` from QR of seeded Gaussian noise."""
    if n > dim:
        raise ValueError(f"cannot fit {n} orthonormal vectors in dimension {dim}")
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.standard_normal((dim, n)))
    return q.T.copy()


def _check(vec: np.ndarray, basis: np.ndarray, name: str) -> None:
    if vec.ndim != 1 or vec.shape[0] != basis.shape[1]:
        raise ValueError(f"{name} has shape {vec.shape}, basis vectors have length {basis.shape[1]}")


def embed(host, basis: np.ndarray, codeword: Sequence[int], alpha: float) -> np.ndarray:
    """Marked copy ``h + alpha * sum_i c(i) u_i``."""
    host = np.asarray(host, dtype=float)
    _check(host, basis, "host")
    c = np.asarray(codeword, dtype=float)
    if c.shape != (basis.shape[0],):
        raise ValueError(f"codeword length {c.shape} != {basis.shape[0]} basis vectors")
    return host + alpha * (c @ basis)


def collude_average(signals) -> np.ndarray:
    sigs = [np.asarray(s, dtype=float) for s in signals]
    if not sigs:
        raise ValueError("need at least one signal to average")
    if len({s.shape for s in sigs}) != 1:
        raise ValueError("signals differ in length")
    return np.mean(np.stack(sigs), axis=0)


def extract(y, host, basis: np.ndarray, alpha: float) -> np.ndarray:
    """Correlate ``(y - h) / alpha`` with each basis vector."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    y = np.asarray(y, dtype=float)
    host = np.asarray(host, dtype=float)
    _check(y, basis, "signal")
    _check(host, basis, "host")
    return basis @ ((y - host) / alpha)


def _snap(v: float, t_max: int, tol: float) -> Fraction:
    hits = set()
    for t in range(1, t_max + 1):
        a = round(v * t)
        if abs(v - a / t) <= tol:
            hits.add(Fraction(a, t))
    if not hits:
        raise SnapError(f"{v!r} is not within {tol} of any a/t with t <= {t_max}")
    if len(hits) > 1:
        raise SnapError(f"{v!r} is within {tol} of several rationals {sorted(hits)}")
    return hits.pop()


def rationalize(xs, t_max: int, tol: float = 1e-6) -> GeneratedWord:
    """Snap each float to the unique ``a/t`` (``t <= t_max``) within ``tol``."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    return GeneratedWord(tuple(_snap(float(v), t_max, tol) for v in xs))


def add_noise(signal, sigma: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    signal = np.asarray(signal, dtype=float)
    return signal + rng.normal(0.0, sigma, size=signal.shape)


def write_signal(path: str | Path, signal) -> None:
    """Little-endian: uint64 length header, then float64 samples."""
    arr = np.asarray(signal, dtype="<f8").ravel()
    with open(path, "wb") as fh:
        fh.write(struct.pack("<Q", arr.size))
        fh.write(arr.tobytes())


def read_signal(path: str | Path) -> np.ndarray:
    data = Path(path).read_bytes()
    if len(data) < 8:
        raise ValueError("signal file shorter than its 8-byte header")
    (size,) = struct.unpack("<Q", data[:8])
    if len(data) - 8 != 8 * size:
        raise ValueError(f"header says {size} samples, file holds {(len(data) - 8) / 8}")
    return np.frombuffer(data[8:], dtype="<f8").astype(float)
