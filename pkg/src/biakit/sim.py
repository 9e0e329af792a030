"""Monte Carlo estimation of achieved sum rate and its high-SNR slope.

Decoding is interference-nulling zero-forcing: project the received block
onto the orthogonal complement of the interference basis, then least-squares
the desired columns. With per-symbol power P and unit noise, the post-
projection SINR of dimension d is P / [(G^H G)^{-1}]_dd with G the projected
desired block, so per-user rate is (1/m) sum_d log2(1 + SINR_d) and the sum
rate's slope against log2(P) reads directly as sum DoF.

A receiver whose combined matrix is rank deficient cannot zero-force all its
symbols; such (trial, receiver) pairs contribute zero rate and are counted
in `excluded`. Certified schemes (K = 3, 4) never hit this path. The TDMA
baseline gives each user a 1/K share of every channel use at the same
per-symbol power, under the identical channel draws.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .channel import CHANNEL_STREAM, ChannelSet, draw_channels, effective_channel, stream_seed
from .dof import achieved
from .errors import UnverifiableDrawError
from .formats import render_csv, render_json
from .scheme import Scheme
from .verify import ReceiverDecomposition, decompose_receiver


def _projected_desired(decomp: ReceiverDecomposition) -> np.ndarray:
    q, _ = np.linalg.qr(decomp.interference_basis)
    return decomp.desired - q @ (q.conj().T @ decomp.desired)


def zf_decode(decomp: ReceiverDecomposition, y: np.ndarray) -> np.ndarray:
    """Recover the receiver's desired symbols from one received block.

    Raises the unverifiable-draw error when the combined matrix is rank
    deficient (desired and interference spaces overlap, so some desired
    dimension is unrecoverable by any linear nulling).
    """
    m = decomp.desired.shape[0]
    if decomp.rank_combined < m:
        raise UnverifiableDrawError(
            "receiver %d: combined rank %d < %d, cannot null interference"
            % (decomp.rx + 1, decomp.rank_combined, m))
    g = _projected_desired(decomp)
    q, _ = np.linalg.qr(decomp.interference_basis)
    y_clean = y - q @ (q.conj().T @ y)
    est, *_ = np.linalg.lstsq(g, y_clean, rcond=None)
    return est


def receiver_rate(decomp: ReceiverDecomposition, power: float) -> float:
    """Post-zero-forcing rate of one receiver, bits per channel use."""
    m = decomp.desired.shape[0]
    if decomp.rank_combined < m:
        raise UnverifiableDrawError(
            "receiver %d: combined rank %d < %d" % (decomp.rx + 1, decomp.rank_combined, m))
    g = _projected_desired(decomp)
    gram = g.conj().T @ g
    inv_diag = np.real(np.diag(np.linalg.inv(gram)))
    sinr = power / inv_diag
    return float(np.sum(np.log2(1.0 + sinr)) / m)


def tdma_sum_rate(scheme: Scheme, ch: ChannelSet, power: float) -> float:
    """Orthogonal-access baseline on the same draw: each user k transmits
    alone in a 1/K share of the block through its own switching pattern."""
    K = scheme.config.users
    total = 0.0
    for k in range(K):
        gains = np.abs(effective_channel(ch, scheme.pattern, k, k)) ** 2
        total += float(np.mean(np.log2(1.0 + power * gains)))
    return total / K


@dataclass(frozen=True)
class SimConfig:
    users: int
    snr_points_db: tuple[float, ...] = (30.0, 40.0, 50.0)
    trials: int = 500
    seed: int = 0
    slope_window: int | None = None  # fit over the last w points; None = all

    def __post_init__(self):
        pts = tuple(float(x) for x in self.snr_points_db)
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise ValueError("snr_points_db must be strictly increasing")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        object.__setattr__(self, "snr_points_db", pts)


@dataclass(eq=False)
class SimResult:
    users: int
    snr_points_db: tuple[float, ...]
    trials: int
    seed: int
    rates: np.ndarray          # (snr, trial, rx) per-user bits/use; 0 if excluded
    tdma_rates: np.ndarray     # (snr, trial) baseline sum rate
    excluded: int              # count of (snr, trial, rx) zero-forcing failures
    fitted_slope: float = field(default=0.0)
    tdma_slope: float = field(default=0.0)

    @property
    def mean_sum_rates(self) -> np.ndarray:
        return self.rates.sum(axis=2).mean(axis=1)

    @property
    def mean_tdma_rates(self) -> np.ndarray:
        return self.tdma_rates.mean(axis=1)

    @property
    def target_dof(self) -> float:
        return float(achieved(self.users))

    @property
    def slope_deviation(self) -> float:
        return abs(self.fitted_slope - self.target_dof) / self.target_dof


def sum_rate_point(scheme: Scheme, snr_db: float, trials: int, seed: int) -> float:
    """Mean sum rate at one SNR point (trial t uses channel stream (0, t))."""
    cfg = SimConfig(users=scheme.config.users, snr_points_db=(float(snr_db),),
                    trials=trials, seed=seed)
    return float(estimate_dof(scheme, cfg, fit_slope=False).mean_sum_rates[0])


def estimate_dof(scheme: Scheme, cfg: SimConfig, fit_slope: bool = True) -> SimResult:
    """Sweep SNR points over shared per-trial channel draws and fit the
    sum-rate slope against log2(linear SNR)."""
    if fit_slope and len(cfg.snr_points_db) < 2:
        raise ValueError("need at least 2 SNR points to fit a slope")
    K = scheme.config.users
    powers = [10.0 ** (db / 10.0) for db in cfg.snr_points_db]
    rates = np.zeros((len(powers), cfg.trials, K))
    tdma = np.zeros((len(powers), cfg.trials))
    excluded = 0
    for t in range(cfg.trials):
        ch = draw_channels(K, scheme.config.mode_count,
                           seed=stream_seed(cfg.seed, CHANNEL_STREAM, t))
        decomps = [decompose_receiver(ch, scheme.pattern, scheme.beams, j)
                   for j in range(K)]
        for p, power in enumerate(powers):
            for j, dec in enumerate(decomps):
                try:
                    rates[p, t, j] = receiver_rate(dec, power)
                except UnverifiableDrawError:
                    excluded += 1
            tdma[p, t] = tdma_sum_rate(scheme, ch, power)
    result = SimResult(
        users=K, snr_points_db=cfg.snr_points_db, trials=cfg.trials,
        seed=cfg.seed, rates=rates, tdma_rates=tdma, excluded=excluded)
    if fit_slope:
        w = len(powers) if cfg.slope_window is None else max(2, cfg.slope_window)
        x = np.log2(powers)[-w:]
        result.fitted_slope = float(np.polyfit(x, result.mean_sum_rates[-w:], 1)[0])
        result.tdma_slope = float(np.polyfit(x, result.mean_tdma_rates[-w:], 1)[0])
    return result


# ---------------------------------------------------------------------------
# emitters


def result_to_long_csv(result: SimResult) -> str:
    rows = []
    for p, db in enumerate(result.snr_points_db):
        for t in range(result.trials):
            for j in range(result.users):
                rows.append([result.users, db, t, j + 1, float(result.rates[p, t, j])])
    return render_csv(["K", "snr_db", "trial", "rx", "rate"], rows)


def result_to_summary_csv(result: SimResult) -> str:
    rows = [[result.users, db, float(result.mean_sum_rates[p])]
            for p, db in enumerate(result.snr_points_db)]
    return render_csv(["K", "snr_db", "mean_sum_rate"], rows)


def result_to_json(result: SimResult) -> str:
    return render_json({
        "K": result.users,
        "snr_points_db": list(result.snr_points_db),
        "trials": result.trials,
        "seed": result.seed,
        "mean_sum_rate": [float(x) for x in result.mean_sum_rates],
        "mean_tdma_rate": [float(x) for x in result.mean_tdma_rates],
        "fitted_slope": result.fitted_slope,
        "tdma_slope": result.tdma_slope,
        "target_dof": result.target_dof,
        "slope_deviation": result.slope_deviation,
        "excluded": result.excluded,
    })


def plot_script(summary_csv_name: str) -> str:
    """A self-contained matplotlib script that plots the summary CSV."""
    return f'''"""Plot mean sum rate against SNR from {summary_csv_name}."""
import csv

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

snr, rate = [], []
with open({summary_csv_name!r}) as fh:
    for row in csv.DictReader(fh):
        snr.append(float(row["snr_db"]))
        rate.append(float(row["mean_sum_rate"]))

fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(snr, rate, "o-")
ax.set_xlabel("SNR (dB)")
ax.set_ylabel("mean sum rate (bits/channel use)")
ax.grid(True, alpha=0.3)
fig.tight_layout()
fig.savefig("sum_rate.png", dpi=150)
print("wrote sum_rate.png")
'''
