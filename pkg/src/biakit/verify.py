"""Per-receiver decodability verification and dimension-counting checks.

At receiver j the desired block stacks the K-1 own-channel columns and the
interference stacks the (K-1)^2 cross-channel columns. Interference columns
come in exactly-colinear pairs: both owners of a shared vector reach any
third receiver through the same binary vector, scaled by their own mode-2
coefficients. Merging each colinear pair leaves a K(K-1)/2-column basis.
Decodability of the draw means rank_desired = K-1, rank_interference =
K(K-1)/2 and rank_combined = m (desired space disjoint from interference).

Two verification modes: floating SVD ranks over Gaussian draws (fast,
statistical), and exact ranks over Gaussian-integer draws (fraction-free
elimination, certification-grade). The channel-free certificate that powers
construction lives in scheme.certify_receivers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .channel import EXACT_STREAM, CHANNEL_STREAM, ChannelSet, draw_channels, effective_channel, stream_seed
from .exactrank import gaussian_rank
from .formats import render_csv, render_json
from .scheme import BeamSet, PatternMatrix, Scheme, SchemeConfig


def rank_of(matrix: np.ndarray, tol: float | None = None) -> int:
    """Numeric rank: singular values above max(rows, cols) * eps * largest,
    or above an explicit tolerance."""
    a = np.asarray(matrix)
    if not np.isfinite(a).all():
        raise ValueError("non-finite entries")
    if a.size == 0:
        return 0
    sv = np.linalg.svd(a, compute_uv=False)
    if sv[0] == 0.0:
        return 0
    cut = max(a.shape) * np.finfo(float).eps * sv[0] if tol is None else tol
    return int(np.count_nonzero(sv > cut))


@dataclass(eq=False)
class ReceiverDecomposition:
    """Desired and interference column blocks at one receiver, plus ranks."""

    rx: int
    desired: np.ndarray            # m x (K-1)
    interference_raw: np.ndarray   # m x (K-1)^2
    interference_basis: np.ndarray  # m x K(K-1)/2 after merging colinear pairs
    rank_desired: int
    rank_interference: int
    rank_combined: int

    @property
    def ranks(self) -> tuple[int, int, int]:
        return (self.rank_desired, self.rank_interference, self.rank_combined)


def decompose_receiver(
    ch: ChannelSet, pattern: PatternMatrix, beams: BeamSet, j: int
) -> ReceiverDecomposition:
    """Build receiver j's column blocks and their numeric ranks.

    Colinear interference pairs are merged structurally from the pair map
    (alignment is exact by construction, so no numeric colinearity
    detection is involved): the merged column for pair {a, b} keeps the
    lower-numbered owner's scaling.
    """
    K = pattern.users
    desired = np.column_stack(
        [effective_channel(ch, pattern, j, j) * v for v in beams.vectors[j]])
    raw_cols = []
    for i in range(K):
        if i == j:
            continue
        eff = effective_channel(ch, pattern, j, i)
        for v in beams.vectors[i]:
            raw_cols.append(eff * v)
    basis_cols = []
    for a, b in itertools.combinations(range(K), 2):
        v = beams.shared_vector(a, b)
        if j == a or j == b:
            other = b if j == a else a
            basis_cols.append(effective_channel(ch, pattern, j, other) * v)
        else:
            basis_cols.append(effective_channel(ch, pattern, j, a) * v)
    raw = np.column_stack(raw_cols)
    basis = np.column_stack(basis_cols)
    return ReceiverDecomposition(
        rx=j,
        desired=desired,
        interference_raw=raw,
        interference_basis=basis,
        rank_desired=rank_of(desired),
        rank_interference=rank_of(basis),
        rank_combined=rank_of(np.hstack([desired, basis])),
    )


def expected_ranks(config: SchemeConfig) -> tuple[int, int, int]:
    return (config.symbols_per_user, config.pair_count, config.block_len)


@dataclass(frozen=True)
class ReceiverCheck:
    """Rank outcome for one (draw, receiver) pair."""

    draw: int
    rx: int
    rank_desired: int
    rank_interference: int
    rank_combined: int
    passed: bool


def verify_decodability(
    ch: ChannelSet, pattern: PatternMatrix, beams: BeamSet, draw: int = 0
) -> list[ReceiverCheck]:
    """Check the three rank conditions at every receiver for one draw.

    Failures are reported, never raised; callers decide severity.
    """
    K = pattern.users
    config_ranks = (K - 1, K * (K - 1) // 2, pattern.block_len)
    out = []
    for j in range(K):
        dec = decompose_receiver(ch, pattern, beams, j)
        out.append(ReceiverCheck(
            draw=draw,
            rx=j + 1,
            rank_desired=dec.rank_desired,
            rank_interference=dec.rank_interference,
            rank_combined=dec.rank_combined,
            passed=dec.ranks == config_ranks,
        ))
    return out


def _exact_channel_ints(K: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian-integer channel draw for certification runs; entries are
    nonzero integers in [-999, 999] + i[-999, 999]."""
    coeffs = rng.integers(-999, 1000, size=(K, K, 2, 2))
    while True:
        dead = (coeffs[..., 0] == 0) & (coeffs[..., 1] == 0)
        if not dead.any():
            return coeffs
        coeffs[dead] = rng.integers(-999, 1000, size=(int(dead.sum()), 2))


def verify_decodability_exact(
    pattern: PatternMatrix, beams: BeamSet, seed=0, draw: int = 0
) -> list[ReceiverCheck]:
    """Same three conditions with exact arithmetic: channels are random
    Gaussian integers and ranks come from fraction-free elimination over
    Z[i], so there is no floating tolerance anywhere."""
    K = pattern.users
    m = pattern.block_len
    rng = np.random.default_rng(
        seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed))
    h = _exact_channel_ints(K, rng)
    config_ranks = (K - 1, K * (K - 1) // 2, m)

    def column(j: int, i: int, v: np.ndarray) -> list[tuple[int, int]]:
        mode = pattern.tilde[:, j]
        return [(int(h[j, i, mode[r], 0] * v[r]), int(h[j, i, mode[r], 1] * v[r]))
                for r in range(m)]

    out = []
    for j in range(K):
        desired = [column(j, j, v) for v in beams.vectors[j]]
        basis = []
        for a, b in itertools.combinations(range(K), 2):
            v = beams.shared_vector(a, b)
            src = (b if j == a else a) if j in (a, b) else a
            basis.append(column(j, src, v))
        rows = lambda cols: [[cols[c][r] for c in range(len(cols))] for r in range(m)]
        rd = gaussian_rank(rows(desired))
        ri = gaussian_rank(rows(basis))
        rc = gaussian_rank(rows(desired + basis))
        out.append(ReceiverCheck(
            draw=draw, rx=j + 1,
            rank_desired=rd, rank_interference=ri, rank_combined=rc,
            passed=(rd, ri, rc) == config_ranks,
        ))
    return out


@dataclass(eq=False)
class VerificationReport:
    """Aggregate of rank checks over many draws."""

    users: int
    draws: int
    seed: int
    exact: bool
    checks: list[ReceiverCheck]

    @property
    def failures(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    @property
    def all_passed(self) -> bool:
        return self.failures == 0

    def failing_receivers(self) -> tuple[int, ...]:
        return tuple(sorted({c.rx for c in self.checks if not c.passed}))


def run_verification(scheme: Scheme, draws: int, seed: int, exact: bool = False) -> VerificationReport:
    """Verify a scheme over independent channel draws (floating or exact)."""
    checks: list[ReceiverCheck] = []
    for t in range(draws):
        if exact:
            checks.extend(verify_decodability_exact(
                scheme.pattern, scheme.beams,
                seed=stream_seed(seed, EXACT_STREAM, t), draw=t))
        else:
            ch = draw_channels(scheme.config.users, scheme.config.mode_count,
                               seed=stream_seed(seed, CHANNEL_STREAM, t))
            checks.extend(verify_decodability(ch, scheme.pattern, scheme.beams, draw=t))
    return VerificationReport(
        users=scheme.config.users, draws=draws, seed=seed, exact=exact, checks=checks)


def report_to_json(report: VerificationReport) -> str:
    return render_json({
        "K": report.users,
        "draws": report.draws,
        "seed": report.seed,
        "exact": report.exact,
        "failures": report.failures,
        "checks": [
            {
                "draw": c.draw,
                "rx": c.rx,
                "rank_desired": c.rank_desired,
                "rank_interference": c.rank_interference,
                "rank_combined": c.rank_combined,
                "pass": c.passed,
            }
            for c in report.checks
        ],
    })


def report_to_csv(report: VerificationReport) -> str:
    rows = [[c.draw, c.rx, c.rank_desired, c.rank_interference, c.rank_combined,
             int(c.passed)] for c in report.checks]
    return render_csv(
        ["draw", "rx", "rank_desired", "rank_interference", "rank_combined", "pass"], rows)


# ---------------------------------------------------------------------------
# structural counting and colinearity diagnostics


@dataclass(frozen=True)
class CountingReport:
    users: int
    per_user_pairs_ok: bool      # every user belongs to exactly K-1 pairs
    symbol_identity_ok: bool     # K(K-1) - C(K-1,2) = m
    per_receiver_dims_ok: bool   # (K-1) desired + K(K-1)/2 interference = m

    @property
    def all_passed(self) -> bool:
        return self.per_user_pairs_ok and self.symbol_identity_ok and self.per_receiver_dims_ok


def check_counting(config: SchemeConfig, beams: BeamSet) -> CountingReport:
    """Exact integer identities tying symbol counts to channel uses."""
    K = config.users
    m = config.block_len
    membership = [0] * K
    for (i, j) in beams.pair_dims:
        membership[i] += 1
        membership[j] += 1
    per_user = all(c == config.symbols_per_user for c in membership)
    symbol_identity = K * (K - 1) - (K - 1) * (K - 2) // 2 == m
    per_receiver = (K - 1) + K * (K - 1) // 2 == m
    return CountingReport(
        users=K,
        per_user_pairs_ok=per_user,
        symbol_identity_ok=symbol_identity,
        per_receiver_dims_ok=per_receiver,
    )


def merged_colinearity_error(ch: ChannelSet, pattern: PatternMatrix, beams: BeamSet) -> float:
    """Numeric cross-check of the structural merge: for every pair and every
    outside receiver, the two raw interference columns must be exact scalar
    multiples (ratio of the owners' mode-2 coefficients). Returns the worst
    relative deviation; anything above machine-epsilon scale means the
    structural merging assumption was violated."""
    K = pattern.users
    worst = 0.0
    for a, b in itertools.combinations(range(K), 2):
        v = beams.shared_vector(a, b)
        for j in range(K):
            if j in (a, b):
                continue
            ca = effective_channel(ch, pattern, j, a) * v
            cb = effective_channel(ch, pattern, j, b) * v
            ratio = ch.coeffs[j, a, 1] / ch.coeffs[j, b, 1]
            dev = np.linalg.norm(ca - ratio * cb) / max(np.linalg.norm(ca), 1e-300)
            worst = max(worst, float(dev))
    return worst
