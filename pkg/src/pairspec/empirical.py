"""Empirical spectra of the matrix products and their verification.

Two kinds of statements are checked here and they have different
characters, reflected in the functions' contracts:

* exact finite-size identities -- the spectrum of X Y* equals the
  spectrum of Y* X padded with |N - P| zeros, and for N > P the product
  X Y† has at least N - P exactly-zero eigenvalues (the kernel of Y* is
  N - P dimensional).  These hold for every sample and are tested to
  numerical precision.
* asymptotic support statements -- eigenvalue clouds should fill the
  predicted ellipse/disc.  These hold in the large-N limit, so coverage
  is reported as fractions against a margin-dilated boundary and judged
  statistically by the caller.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .ensembles import Dims, EnsembleParams, MatrixPair
from .errors import DegenerateWindow, EmptyInput
from .matalg import eigenvalues, multiset_max_distance, pseudo_inverse
from .predict import (
    CONJ_TRANSPOSE,
    PRODUCT_KINDS,
    PSEUDO_INVERSE,
    DiscSupport,
    EllipseSupport,
    support_contains,
)

__all__ = [
    "SpectrumSample",
    "CoverageReport",
    "spectrum",
    "wa_identity_check",
    "default_zero_tol",
    "coverage",
    "density_grid",
    "mean_eigenvalue",
]


@dataclass(frozen=True)
class SpectrumSample:
    """Eigenvalues of one product sample, with full provenance."""

    eigs: np.ndarray  # N complex values, unordered
    product_kind: str
    dims: Dims
    params: EnsembleParams
    seed: int


@dataclass(frozen=True)
class CoverageReport:
    """How one spectrum sits relative to a predicted support."""

    inside_fraction: float
    outlier_count: int
    max_excess: float  # normalized overshoot past the dilated boundary
    zero_count: int


def spectrum(pair: MatrixPair, product_kind: str) -> SpectrumSample:
    """Eigenvalues of X Y* or X Y† for one sampled pair (N values)."""
    if product_kind == CONJ_TRANSPOSE:
        m = pair.x_mat @ pair.y_mat.conj().T
    elif product_kind == PSEUDO_INVERSE:
        m = pair.x_mat @ pseudo_inverse(pair.y_mat).pinv
    else:
        raise ValueError(
            f"unknown product_kind {product_kind!r}; expected one of {PRODUCT_KINDS}"
        )
    return SpectrumSample(
        eigs=eigenvalues(m),
        product_kind=product_kind,
        dims=pair.dims,
        params=pair.params,
        seed=pair.seed,
    )


def wa_identity_check(pair: MatrixPair, tol: float = 1e-8) -> tuple[bool, float]:
    """Exact spectral identity between the two product orderings.

    The nonzero spectrum of X Y* (N x N) coincides with that of
    Y* X (P x P); the larger product carries |N - P| extra zeros.  The
    two multisets are matched greedily and the largest pairing distance
    is returned alongside the verdict ``mismatch <= tol * scale``, where
    scale = max(1, largest |eigenvalue|).
    """
    big = eigenvalues(pair.x_mat @ pair.y_mat.conj().T)
    small = eigenvalues(pair.y_mat.conj().T @ pair.x_mat)
    if small.size > big.size:
        big, small = small, big
    padded = np.concatenate([small, np.zeros(big.size - small.size, np.complex128)])
    mismatch = multiset_max_distance(big, padded)
    scale = max(1.0, float(np.max(np.abs(big)))) if big.size else 1.0
    return mismatch <= tol * scale, mismatch


def default_zero_tol(eigs: np.ndarray) -> float:
    """Threshold separating exact-rank-deficiency zeros from the bulk.

    Zeros of X Y† arise from an exactly rank-deficient factor, so they
    land at numerical noise level many orders below the bulk; 1e-8 times
    the median bulk magnitude splits the two cleanly at all tested sizes.
    """
    a = np.abs(np.asarray(eigs, dtype=np.complex128).ravel())
    if a.size == 0 or not np.any(a > 0.0):
        return 1e-8
    bulk = a[a > 1e-10 * a.max()]
    return 1e-8 * float(np.median(bulk))


def coverage(
    sample: SpectrumSample,
    support: EllipseSupport | DiscSupport,
    margin: float = 0.0,
    zero_tol: float | None = None,
) -> CoverageReport:
    """Classify every eigenvalue against the margin-dilated support.

    Eigenvalues with |lambda| <= zero_tol count as the zero atom: they
    are inside exactly when the support predicts an atom at 0.  All
    others are classified by :func:`support_contains`.  ``max_excess``
    is the largest normalized overshoot among outliers -- the dilated
    ellipse quadratic form minus 1, or the radial ratio minus 1 for a
    disc -- and 0 when nothing lies outside.
    """
    if zero_tol is None:
        zero_tol = default_zero_tol(sample.eigs)
    if zero_tol <= 0.0:
        raise ValueError(f"zero_tol must be positive, got {zero_tol}")
    eigs = sample.eigs
    n = eigs.size
    is_zero = np.abs(eigs) <= zero_tol

    inside = np.empty(n, dtype=bool)
    inside[is_zero] = support.zero_atom
    inside[~is_zero] = support_contains(support, eigs[~is_zero], margin)

    if isinstance(support, DiscSupport):
        dilated = support.radius * (1.0 + margin)
        excess = np.abs(eigs - support.center) / max(dilated, 1e-300) - 1.0
    else:
        w = (eigs - support.center) * cmath.exp(-1j * support.rotation)
        a = support.semi_major * (1.0 + margin)
        b = max(support.semi_minor * (1.0 + margin), 1e-12)
        excess = (w.real / a) ** 2 + (w.imag / b) ** 2 - 1.0

    outliers = ~inside
    max_excess = float(np.max(excess[outliers], initial=0.0))
    outlier_count = int(outliers.sum())
    return CoverageReport(
        inside_fraction=1.0 - outlier_count / n,
        outlier_count=outlier_count,
        max_excess=max(max_excess, 0.0),
        zero_count=int(is_zero.sum()),
    )


def density_grid(
    samples: SpectrumSample | Iterable[SpectrumSample],
    window: tuple[float, float, float, float],
    bins: tuple[int, int],
) -> np.ndarray:
    """Eigenvalue counts on a regular grid over a complex rectangle.

    ``window`` is (re_min, re_max, im_min, im_max); the result has shape
    (nx, ny) with the real axis first.  Eigenvalues outside the window
    are dropped, so the grid total equals the number falling inside.
    """
    re_min, re_max, im_min, im_max = (float(v) for v in window)
    if not (re_min < re_max and im_min < im_max):
        raise DegenerateWindow(f"window {window} has no interior")
    nx, ny = bins
    if nx < 1 or ny < 1:
        raise ValueError(f"bins must be >= 1 each, got {bins}")
    if isinstance(samples, SpectrumSample):
        samples = [samples]
    eigs_list = [s.eigs for s in samples]
    eigs = np.concatenate(eigs_list) if eigs_list else np.empty(0, np.complex128)
    counts, _, _ = np.histogram2d(
        eigs.real,
        eigs.imag,
        bins=(nx, ny),
        range=[[re_min, re_max], [im_min, im_max]],
    )
    return counts.astype(np.int64)


def mean_eigenvalue(samples: Iterable[SpectrumSample]) -> tuple[complex, float]:
    """Grand mean eigenvalue across trials, with its standard error.

    The mean averages every eigenvalue with equal weight; the standard
    error comes from the scatter of per-trial means (total complex
    variance of the trial means over the trial count), which assumes the
    trials share dimensions.  With a single trial the error is reported
    as 0.
    """
    samples = list(samples)
    if not samples:
        raise EmptyInput("mean_eigenvalue needs at least one sample")
    trial_means = np.array([np.mean(s.eigs) for s in samples])
    total = sum(int(s.eigs.size) for s in samples)
    grand = complex(sum(complex(np.sum(s.eigs)) for s in samples) / total)
    t = trial_means.size
    if t < 2:
        return grand, 0.0
    scatter = float(np.mean(np.abs(trial_means - trial_means.mean()) ** 2))
    se = np.sqrt(scatter / (t - 1))
    return grand, float(se)
