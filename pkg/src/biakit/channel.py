"""Channel model: per-mode coefficients, effective diagonals, transmit/receive.

Coefficients h[k][i][mode] (receiver k, transmitter i) are i.i.d. unit-variance
circularly-symmetric complex Gaussians, constant over the m channel uses of a
block. Receiver k's antenna follows its pattern column, so the link from
transmitter i acts as the diagonal matrix diag(h[k][i][modes[r][k]], r=1..m).

Seeding: every entry point takes either a plain int seed or a
numpy.random.SeedSequence. Layers that need several independent streams from
one master seed derive them with spawn keys (stream id, trial): 0 = channel
draws, 1 = noise, 2 = symbols, 3 = exact-mode integer channels.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .formats import render_json
from .scheme import BeamSet, PatternMatrix

CHANNEL_STREAM = 0
NOISE_STREAM = 1
SYMBOL_STREAM = 2
EXACT_STREAM = 3


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.default_rng(seed)
    return np.random.default_rng(np.random.SeedSequence(seed))


def stream_seed(master: int, stream: int, trial: int) -> np.random.SeedSequence:
    """Named independent substream of a master seed."""
    return np.random.SeedSequence(entropy=master, spawn_key=(stream, trial))


@dataclass(eq=False)
class ChannelSet:
    """All K*K*M block-constant coefficients of one draw."""

    coeffs: np.ndarray  # complex, shape (K, K, M); [rx, tx, mode-1]
    seed: object = None

    @property
    def users(self) -> int:
        return int(self.coeffs.shape[0])

    @property
    def mode_count(self) -> int:
        return int(self.coeffs.shape[2])


def draw_channels(K: int, M: int = 2, seed=0) -> ChannelSet:
    """One i.i.d. CN(0,1) coefficient per (receiver, transmitter, mode)."""
    rng = _rng(seed)
    coeffs = (rng.standard_normal((K, K, M)) + 1j * rng.standard_normal((K, K, M)))
    coeffs /= np.sqrt(2.0)
    return ChannelSet(coeffs=coeffs, seed=seed)


def effective_channel(ch: ChannelSet, pattern: PatternMatrix, k: int, i: int) -> np.ndarray:
    """Diagonal of the link matrix from transmitter i to receiver k.

    Entry r is h[k][i][mode], with the mode chosen by receiver k's own
    switching pattern at channel use r.
    """
    return ch.coeffs[k, i, pattern.tilde[:, k]]


@dataclass(eq=False)
class SymbolBlock:
    """One block of transmit symbols: values[i][d], plus per-symbol power."""

    values: np.ndarray  # complex, shape (K, K-1)
    power: float = 1.0


def draw_symbols(K: int, power: float = 1.0, seed=0) -> SymbolBlock:
    """Random CN(0, power) symbols for all users and dimensions."""
    rng = _rng(seed)
    s = rng.standard_normal((K, K - 1)) + 1j * rng.standard_normal((K, K - 1))
    s *= np.sqrt(power / 2.0)
    return SymbolBlock(values=s, power=float(power))


def transmit(beams: BeamSet, sym: SymbolBlock, i: int) -> np.ndarray:
    """User i's block signal: symbols riding their binary beamforming vectors."""
    vecs = beams.vectors[i]
    x = np.zeros(vecs[0].shape[0], dtype=complex)
    for d, v in enumerate(vecs):
        x += sym.values[i, d] * v
    return x


def receive(
    ch: ChannelSet,
    pattern: PatternMatrix,
    beams: BeamSet,
    sym: SymbolBlock,
    k: int,
    noise_on: bool = False,
    seed=0,
) -> np.ndarray:
    """Received block at receiver k: all users' signals through their
    effective diagonals, plus optional unit-variance complex noise."""
    m = pattern.block_len
    y = np.zeros(m, dtype=complex)
    for i in range(pattern.users):
        y += effective_channel(ch, pattern, k, i) * transmit(beams, sym, i)
    if noise_on:
        rng = _rng(seed)
        y += (rng.standard_normal(m) + 1j * rng.standard_normal(m)) / np.sqrt(2.0)
    return y


# ---------------------------------------------------------------------------
# replay format


def channels_to_json(ch: ChannelSet) -> str:
    """Dump a draw for exact replay: one record per coefficient, 1-indexed."""
    K, _, M = ch.coeffs.shape
    records = []
    for k in range(K):
        for i in range(K):
            for mode in range(M):
                records.append({
                    "rx": k + 1,
                    "tx": i + 1,
                    "mode": mode + 1,
                    "re": float(ch.coeffs[k, i, mode].real),
                    "im": float(ch.coeffs[k, i, mode].imag),
                })
    seed = ch.seed
    if isinstance(seed, np.random.SeedSequence):
        seed = {"entropy": seed.entropy, "spawn_key": list(seed.spawn_key)}
    return render_json({"seed": seed, "coeffs": records})


def channels_from_json(text: str) -> ChannelSet:
    doc = json.loads(text)
    records = doc["coeffs"]
    K = max(int(r["rx"]) for r in records)
    M = max(int(r["mode"]) for r in records)
    coeffs = np.zeros((K, K, M), dtype=complex)
    for r in records:
        coeffs[int(r["rx"]) - 1, int(r["tx"]) - 1, int(r["mode"]) - 1] = (
            float(r["re"]) + 1j * float(r["im"]))
    return ChannelSet(coeffs=coeffs, seed=doc.get("seed"))
