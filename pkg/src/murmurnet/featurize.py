"""Murmuration binning: conductor-relative local averages of Dirichlet
coefficients, partial variants, class profiles and dataset splits.

The i-th bin of v_B collects primes with (i-1)/B < p/N <= i/B; membership
is decided by integer cross-multiplication so bin edges are exact.  Empty
bins (guaranteed for N < 2B) contribute 0, recorded in the vector
metadata so the policy is auditable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .arith import primes_upto
from .lfunc import LFunctionRecord, MissingCoefficients


class EmptyClass(ValueError):
    """A requested class average has no members."""


@dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray  # length B (full) or B-4 (partial)
    B: int
    variant: str  # full | partial
    conductor: int
    root_number: int | None = None
    rank: int | None = None
    label: str = ""
    empty_bins: int = 0

    def __post_init__(self):
        want = self.B if self.variant == "full" else self.B - 4
        if self.variant not in ("full", "partial"):
            raise ValueError("variant must be 'full' or 'partial'")
        if len(self.values) != want:
            raise ValueError(f"expected {want} entries, got {len(self.values)}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("feature entries must be finite")


@dataclass(frozen=True)
class SplitDataset:
    train: list
    test: list
    seed: int


def bin_primes(B: int, N: int) -> list[np.ndarray]:
    """The B prime bins P_i(B, N) partitioning the primes <= N."""
    if B < 1 or N < 2:
        raise ValueError("need B >= 1 and N >= 2")
    ps = primes_upto(N)
    # i = ceil(p B / N) satisfies (i-1)/B < p/N <= i/B
    idx = -(-ps * B // N)
    return [ps[idx == i] for i in range(1, B + 1)]


def _bin_means(record: LFunctionRecord, B: int) -> tuple[np.ndarray, int]:
    N = record.conductor
    ps = primes_upto(N)
    pos = np.searchsorted(record.primes, ps)
    if np.any(pos >= len(record.primes)) or np.any(record.primes[pos] != ps):
        missing = ps[(pos >= len(record.primes)) | (record.primes[np.minimum(pos, len(record.primes) - 1)] != ps)]
        raise MissingCoefficients(int(missing[0]))
    vals = record.values[pos]
    idx = -(-ps * B // N)
    sums = np.bincount(idx, weights=vals, minlength=B + 1)[1 : B + 1]
    counts = np.bincount(idx, minlength=B + 1)[1 : B + 1]
    out = np.zeros(B, dtype=np.float64)
    nonempty = counts > 0
    out[nonempty] = sums[nonempty] / counts[nonempty]
    return out, int(B - nonempty.sum())


def v_B(record: LFunctionRecord, B: int) -> FeatureVector:
    """The murmuration average vector v_B of one record."""
    means, empties = _bin_means(record, B)
    return FeatureVector(
        means,
        B,
        "full",
        record.conductor,
        record.root_number,
        record.rank,
        record.label,
        empties,
    )


def v_partial(record: LFunctionRecord, B: int) -> FeatureVector:
    """v_B with the first four bins discarded (drops a_p for p <= 4N/B)."""
    means, empties = _bin_means(record, B)
    return FeatureVector(
        means[4:].copy(),
        B,
        "partial",
        record.conductor,
        record.root_number,
        record.rank,
        record.label,
        empties,
    )


def murmuration_profile(
    records: list[LFunctionRecord], B: int, class_by: str = "root_number"
) -> dict:
    """Class-averaged v_B profiles, keyed by the label value.

    Returns {class value: (mean vector, class size)}.
    """
    sums: dict[int, np.ndarray] = {}
    counts: dict[int, int] = {}
    for rec in records:
        cls = getattr(rec, class_by)
        if cls is None:
            continue
        means, _ = _bin_means(rec, B)
        if cls in sums:
            sums[cls] += means
            counts[cls] += 1
        else:
            sums[cls] = means.copy()
            counts[cls] = 1
    if not sums:
        raise EmptyClass(f"no records carry a {class_by} label")
    return {cls: (sums[cls] / counts[cls], counts[cls]) for cls in sums}


def split_dataset(features: list, fraction: float = 0.8, seed: int = 0) -> SplitDataset:
    """Seeded shuffle, then an (fraction, 1-fraction) split."""
    if not features:
        raise ValueError("nothing to split")
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(features))
    cut = round(fraction * len(features))
    train = [features[i] for i in order[:cut]]
    test = [features[i] for i in order[cut:]]
    return SplitDataset(train, test, seed)


def feature_matrix(feats: list[FeatureVector]) -> tuple[np.ndarray, np.ndarray]:
    """(X, y) arrays for root-number classification: class 0 is w = +1."""
    X = np.stack([f.values for f in feats])
    y = np.array([0 if f.root_number == 1 else 1 for f in feats], dtype=np.int64)
    return X, y


def rank_matrix(feats: list[FeatureVector], classes: int = 4) -> tuple[np.ndarray, np.ndarray]:
    """(X, y) arrays for rank classification; rank r is class r."""
    keep = [f for f in feats if f.rank is not None and f.rank < classes]
    X = np.stack([f.values for f in keep])
    y = np.array([f.rank for f in keep], dtype=np.int64)
    return X, y
