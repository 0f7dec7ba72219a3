"""Monte Carlo sampling campaigns over the (C^2, R_+^2) plane.

Determinism contract: sample i is drawn from the seed derived from
(master_seed, i), work is split into fixed-size chunks merged in chunk order,
and floating-point aggregation happens per chunk first. Output bytes are
therefore identical for any worker count.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import measures, states
from .errors import QroughError

X_RANGE = (0.0, 1.0)  # C^2
Y_RANGE = (0.0, 55.0 / 108.0)  # R_+^2
RESIDUAL_TOL = 1e-10
CHUNK_SIZE = 4096  # fixed so aggregation order never depends on worker count
EXACT_MEDIAN_LIMIT = 1_000_000

ENSEMBLE_RANKS = {"pure": 1, "rank2": 2, "rank3": 3, "rank4": 4}


class CampaignAbort(QroughError):
    """The identity residual blew past tolerance for one sample."""

    def __init__(self, index: int, residual: float, state_json: str):
        super().__init__(
            f"identity residual {residual:.3e} > {RESIDUAL_TOL:g} at sample {index}; "
            f"offending state: {state_json}"
        )
        self.index = index
        self.residual = residual
        self.state_json = state_json


@dataclass(frozen=True)
class CampaignConfig:
    ensemble: str
    samples: int
    master_seed: int
    bins_x: int = 200
    bins_y: int = 200
    workers: int = 1
    keep_records: bool = False

    def __post_init__(self):
        if self.ensemble not in ENSEMBLE_RANKS:
            raise ValueError(f"ensemble must be one of {tuple(ENSEMBLE_RANKS)}")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.bins_x < 10 or self.bins_y < 10:
            raise ValueError("bins must be >= 10")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class SampleRecord:
    index: int
    measures: measures.MeasureTuple
    residual_mixed: float
    residual_pure: float | None


@dataclass
class Histogram2D:
    bins_x: int
    bins_y: int
    counts: np.ndarray  # shape (bins_x, bins_y), int64
    x_edges: np.ndarray
    y_edges: np.ndarray

    @classmethod
    def empty(cls, bins_x: int, bins_y: int) -> "Histogram2D":
        return cls(
            bins_x=bins_x,
            bins_y=bins_y,
            counts=np.zeros((bins_x, bins_y), dtype=np.int64),
            x_edges=np.linspace(X_RANGE[0], X_RANGE[1], bins_x + 1),
            y_edges=np.linspace(Y_RANGE[0], Y_RANGE[1], bins_y + 1),
        )

    def argmax_bin(self) -> tuple[int, int]:
        flat = int(np.argmax(self.counts))
        return flat // self.bins_y, flat % self.bins_y


@dataclass
class SummaryStats:
    samples: int
    min_c2: float
    max_c2: float
    median_c2: float
    min_rplus2: float
    max_rplus2: float
    median_rplus2: float
    mean_residual_mixed: float
    max_residual_mixed: float
    mean_residual_pure: float | None
    max_residual_pure: float | None
    fraction_c_zero: float
    mean_purity: float
    median_method: str = "exact"
    extra: dict = field(default_factory=dict)


def _bin_index(value: float, lo: float, hi: float, bins: int) -> int:
    i = int((value - lo) / (hi - lo) * bins)
    return min(max(i, 0), bins - 1)


def draw_state(ensemble: str, master_seed: int, index: int) -> states.TwoQubitState:
    seed = states.derive_seed(master_seed, index)
    if ensemble == "pure":
        return states.haar_random_pure(seed)
    return states.ginibre_random(ENSEMBLE_RANKS[ensemble], seed)


def evaluate_sample(ensemble: str, master_seed: int, index: int) -> SampleRecord:
    state = draw_state(ensemble, master_seed, index)
    mt = measures.measure_tuple(state)
    lhs = mt.Rplus2 + (39.0 / 216.0) * (mt.delta1 + mt.delta2)
    rhs = (37.0 / 108.0) * (mt.Ne + mt.fC) - measures.KAPPA
    residual_mixed = abs(lhs - rhs)
    if residual_mixed > RESIDUAL_TOL:
        raise CampaignAbort(index, residual_mixed, states.state_to_json(state))
    residual_pure = None
    if ensemble == "pure":
        residual_pure = abs(mt.Rplus2 + (39.0 / 216.0) * mt.C2 - rhs)
    return SampleRecord(
        index=index, measures=mt, residual_mixed=residual_mixed, residual_pure=residual_pure
    )


def _run_chunk(config: CampaignConfig, start: int, stop: int) -> dict:
    counts = np.zeros((config.bins_x, config.bins_y), dtype=np.int64)
    c2 = np.empty(stop - start)
    rplus2 = np.empty(stop - start)
    sum_rm = 0.0
    max_rm = 0.0
    sum_rp = 0.0
    max_rp = 0.0
    n_c_zero = 0
    sum_purity = 0.0
    records = [] if config.keep_records else None
    for i in range(start, stop):
        rec = evaluate_sample(config.ensemble, config.master_seed, i)
        mt = rec.measures
        counts[
            _bin_index(mt.C2, *X_RANGE, config.bins_x),
            _bin_index(mt.Rplus2, *Y_RANGE, config.bins_y),
        ] += 1
        c2[i - start] = mt.C2
        rplus2[i - start] = mt.Rplus2
        sum_rm += rec.residual_mixed
        max_rm = max(max_rm, rec.residual_mixed)
        if rec.residual_pure is not None:
            sum_rp += rec.residual_pure
            max_rp = max(max_rp, rec.residual_pure)
        if mt.C == 0.0:
            n_c_zero += 1
        sum_purity += mt.purity
        if records is not None:
            records.append(rec)
    keep_values = config.samples <= EXACT_MEDIAN_LIMIT
    return {
        "start": start,
        "counts": counts,
        "c2": c2 if keep_values else None,
        "rplus2": rplus2 if keep_values else None,
        "min_c2": float(c2.min()),
        "max_c2": float(c2.max()),
        "min_rplus2": float(rplus2.min()),
        "max_rplus2": float(rplus2.max()),
        "sum_rm": sum_rm,
        "max_rm": max_rm,
        "sum_rp": sum_rp,
        "max_rp": max_rp,
        "n_c_zero": n_c_zero,
        "sum_purity": sum_purity,
        "records": records,
    }


def _median_from_marginal(marginal: np.ndarray, edges: np.ndarray, n: int) -> float:
    """Median estimated by linear interpolation inside the covering bin."""
    cum = np.cumsum(marginal)
    half = n / 2.0
    i = int(np.searchsorted(cum, half))
    below = cum[i - 1] if i > 0 else 0
    inside = marginal[i]
    frac = (half - below) / inside if inside > 0 else 0.5
    return float(edges[i] + frac * (edges[i + 1] - edges[i]))


def run_campaign(config: CampaignConfig):
    """Execute a campaign; returns (Histogram2D, SummaryStats, records-or-None)."""
    chunks = [
        (start, min(start + CHUNK_SIZE, config.samples))
        for start in range(0, config.samples, CHUNK_SIZE)
    ]
    if config.workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_chunk, *zip(*[(config, a, b) for a, b in chunks])))
    else:
        results = [_run_chunk(config, a, b) for a, b in chunks]
    results.sort(key=lambda r: r["start"])

    hist = Histogram2D.empty(config.bins_x, config.bins_y)
    for r in results:
        hist.counts += r["counts"]

    n = config.samples
    is_pure = config.ensemble == "pure"
    if config.samples <= EXACT_MEDIAN_LIMIT:
        c2_all = np.concatenate([r["c2"] for r in results])
        rp_all = np.concatenate([r["rplus2"] for r in results])
        median_c2 = float(np.median(c2_all))
        median_rp = float(np.median(rp_all))
        median_method = "exact"
    else:
        median_c2 = _median_from_marginal(hist.counts.sum(axis=1), hist.x_edges, n)
        median_rp = _median_from_marginal(hist.counts.sum(axis=0), hist.y_edges, n)
        median_method = "histogram-interpolated"

    summary = SummaryStats(
        samples=n,
        min_c2=min(r["min_c2"] for r in results),
        max_c2=max(r["max_c2"] for r in results),
        median_c2=median_c2,
        min_rplus2=min(r["min_rplus2"] for r in results),
        max_rplus2=max(r["max_rplus2"] for r in results),
        median_rplus2=median_rp,
        mean_residual_mixed=sum(r["sum_rm"] for r in results) / n,
        max_residual_mixed=max(r["max_rm"] for r in results),
        mean_residual_pure=(sum(r["sum_rp"] for r in results) / n) if is_pure else None,
        max_residual_pure=max(r["max_rp"] for r in results) if is_pure else None,
        fraction_c_zero=sum(r["n_c_zero"] for r in results) / n,
        mean_purity=sum(r["sum_purity"] for r in results) / n,
        median_method=median_method,
    )
    records = None
    if config.keep_records:
        records = [rec for r in results for rec in r["records"]]
    return hist, summary, records


def summary_stats(records) -> SummaryStats:
    """Summary over an in-memory record list (exact buffered median)."""
    records = list(records)
    if not records:
        raise QroughError("summary_stats requires at least one record")
    c2 = np.array([r.measures.C2 for r in records])
    rp = np.array([r.measures.Rplus2 for r in records])
    rm = np.array([r.residual_mixed for r in records])
    pure_vals = [r.residual_pure for r in records if r.residual_pure is not None]
    return SummaryStats(
        samples=len(records),
        min_c2=float(c2.min()),
        max_c2=float(c2.max()),
        median_c2=float(np.median(c2)),
        min_rplus2=float(rp.min()),
        max_rplus2=float(rp.max()),
        median_rplus2=float(np.median(rp)),
        mean_residual_mixed=float(rm.mean()),
        max_residual_mixed=float(rm.max()),
        mean_residual_pure=float(np.mean(pure_vals)) if pure_vals else None,
        max_residual_pure=float(np.max(pure_vals)) if pure_vals else None,
        fraction_c_zero=float(np.mean([r.measures.C == 0.0 for r in records])),
        mean_purity=float(np.mean([r.measures.purity for r in records])),
    )


# --- output formats ----------------------------------------------------------


def _g17(x: float) -> str:
    return f"{x:.17g}"


def histogram_to_csv(hist: Histogram2D) -> str:
    """One row per nonzero bin: 'x_lo,x_hi,y_lo,y_hi,count', LF line endings."""
    lines = ["x_lo,x_hi,y_lo,y_hi,count"]
    xs, ys = np.nonzero(hist.counts)
    for i, j in zip(xs, ys):
        lines.append(
            f"{_g17(hist.x_edges[i])},{_g17(hist.x_edges[i + 1])},"
            f"{_g17(hist.y_edges[j])},{_g17(hist.y_edges[j + 1])},{hist.counts[i, j]}"
        )
    return "\n".join(lines) + "\n"


RECORDS_HEADER = (
    "index,C,C2,delta1,delta2,R2_1,R2_2,Rplus2,Ne,fC,z,w,purity,residual_mixed,residual_pure"
)


def records_to_csv(records) -> str:
    lines = [RECORDS_HEADER]
    for rec in records:
        m = rec.measures
        rp = _g17(rec.residual_pure) if rec.residual_pure is not None else ""
        lines.append(
            f"{rec.index},{_g17(m.C)},{_g17(m.C2)},{_g17(m.delta1)},{_g17(m.delta2)},"
            f"{_g17(m.R2_1)},{_g17(m.R2_2)},{_g17(m.Rplus2)},{_g17(m.Ne)},{_g17(m.fC)},"
            f"{_g17(m.z)},{_g17(m.w)},{_g17(m.purity)},{_g17(rec.residual_mixed)},{rp}"
        )
    return "\n".join(lines) + "\n"


def summary_to_json(summary: SummaryStats, config: CampaignConfig) -> str:
    # workers is execution detail, not provenance: results do not depend on it
    # and echoing it would break byte-identical outputs across worker counts.
    obj = {
        "samples": summary.samples,
        "min_c2": summary.min_c2,
        "max_c2": summary.max_c2,
        "median_c2": summary.median_c2,
        "min_rplus2": summary.min_rplus2,
        "max_rplus2": summary.max_rplus2,
        "median_rplus2": summary.median_rplus2,
        "mean_residual_mixed": summary.mean_residual_mixed,
        "max_residual_mixed": summary.max_residual_mixed,
        "mean_residual_pure": summary.mean_residual_pure,
        "max_residual_pure": summary.max_residual_pure,
        "fraction_c_zero": summary.fraction_c_zero,
        "mean_purity": summary.mean_purity,
        "median_method": summary.median_method,
        "config": {
            "ensemble": config.ensemble,
            "samples": config.samples,
            "master_seed": config.master_seed,
            "bins_x": config.bins_x,
            "bins_y": config.bins_y,
            "x_range": list(X_RANGE),
            "y_range": list(Y_RANGE),
        },
    }
    return json.dumps(obj, indent=2) + "\n"


def write_outputs(out_dir: str, config: CampaignConfig):
    """Run the campaign and write histogram.csv, summary.json and optionally
    records.csv into out_dir; returns (Histogram2D, SummaryStats)."""
    hist, summary, records = run_campaign(config)
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "histogram.csv"), "w", encoding="utf-8", newline="") as fh:
        fh.write(histogram_to_csv(hist))
    with open(os.path.join(out_dir, "summary.json"), "w", encoding="utf-8", newline="") as fh:
        fh.write(summary_to_json(summary, config))
    if records is not None:
        with open(os.path.join(out_dir, "records.csv"), "w", encoding="utf-8", newline="") as fh:
            fh.write(records_to_csv(records))
    return hist, summary
