"""Construction of switching-pattern matrices and binary beamforming vectors.

A scheme for K users spends m = (K+2)(K-1)/2 channel uses per block. Every
receiver follows one column of an m x K binary pattern matrix (0 -> antenna
mode 1, 1 -> mode 2). Each unordered user pair {i, j} shares one binary
beamforming vector: the element-wise product of all pattern columns except
i and j. The vector serves as one of the K-1 transmit dimensions of user i
and one of user j, so the pair's symbols occupy a single shared direction
at every third receiver (whose own column is included in the product and
therefore constant-mode over the vector's support).

Receiver j can separate its K-1 desired dimensions from interference iff
the m binary generators {all pair products} + {exclude-one products w_i,
i != j} are linearly independent over the rationals, an exact channel-free
condition this module certifies during construction (see verify module for
the proof obligations). Certified matrices exist only for K = 3 and K = 4;
for K >= 5 the constructor returns the family with the maximum number of
certified receivers (four). README "Known limitations" walks through why.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import ConstructionFailedError, DegenerateSchemeError
from .exactrank import integer_rank
from .formats import render_json


@dataclass(frozen=True)
class SchemeConfig:
    """Integer skeleton of a scheme."""

    users: int
    mode_count: int = 2
    block_len: int = 0        # m: channel uses per block
    symbols_per_user: int = 0  # d: transmit dimensions per user
    pair_count: int = 0

    @property
    def total_symbols(self) -> int:
        return self.users * self.symbols_per_user


def make_config(users: int) -> SchemeConfig:
    """Closed-form sizes for a K-user scheme; rejects degenerate K < 3."""
    if not isinstance(users, int) or isinstance(users, bool):
        raise TypeError("users must be an int")
    if users < 3:
        # K=2 collapses: the shared vector is an empty product (all ones)
        # and there is no third receiver to align at
        raise DegenerateSchemeError(
            "degenerate-scheme: need at least 3 users, got %d" % users)
    K = users
    return SchemeConfig(
        users=K,
        mode_count=2,
        block_len=(K + 2) * (K - 1) // 2,
        symbols_per_user=K - 1,
        pair_count=K * (K - 1) // 2,
    )


# ---------------------------------------------------------------------------
# pattern matrices


@dataclass(eq=False)
class PatternMatrix:
    """Binary switching patterns: one column per receiver.

    tilde holds {0,1}; modes = tilde + 1 holds {1,2}. certified_receivers[j]
    records the exact decodability certificate for receiver j (computed once
    at construction, channel-free).
    """

    tilde: np.ndarray
    certified_receivers: tuple[bool, ...] = field(default=())

    @property
    def modes(self) -> np.ndarray:
        return self.tilde + 1

    @property
    def block_len(self) -> int:
        return int(self.tilde.shape[0])

    @property
    def users(self) -> int:
        return int(self.tilde.shape[1])


def row_vocabulary(K: int) -> list[tuple[int, ...]]:
    """All binary rows that can carry signal, heaviest first.

    Rows of weight < K-2 zero every beamformer product, so any useful
    pattern matrix draws its m rows from these m + 2: the all-ones row,
    the K weight-(K-1) rows, and the C(K,2) weight-(K-2) rows.
    """
    rows = [tuple([1] * K)]
    for k in range(K):
        r = [1] * K
        r[k] = 0
        rows.append(tuple(r))
    for a, b in itertools.combinations(range(K), 2):
        r = [1] * K
        r[a] = 0
        r[b] = 0
        rows.append(tuple(r))
    return rows


def pair_product(tilde: np.ndarray, i: int, j: int) -> np.ndarray:
    """Element-wise product of all pattern columns except i and j."""
    v = np.ones(tilde.shape[0], dtype=np.int64)
    for c in range(tilde.shape[1]):
        if c != i and c != j:
            v = v * tilde[:, c]
    return v


def exclude_one_product(tilde: np.ndarray, i: int) -> np.ndarray:
    """Element-wise product of all pattern columns except i."""
    v = np.ones(tilde.shape[0], dtype=np.int64)
    for c in range(tilde.shape[1]):
        if c != i:
            v = v * tilde[:, c]
    return v


def product_matrix(tilde: np.ndarray) -> np.ndarray:
    """U: one column per user pair (lexicographic), stacked pair products."""
    K = tilde.shape[1]
    cols = [pair_product(tilde, a, b) for a, b in itertools.combinations(range(K), 2)]
    return np.column_stack(cols)


def certify_product_rank(tilde: np.ndarray) -> bool:
    """Exact check that U has full column rank C(K,2) over the rationals."""
    u = product_matrix(tilde)
    return integer_rank(u.tolist()) == u.shape[1]


def certify_receivers(tilde: np.ndarray) -> tuple[bool, ...]:
    """Channel-free decodability certificate, one flag per receiver.

    Receiver j separates desired from interference for almost every channel
    draw iff [U | w_i for i != j] is nonsingular over the rationals: the
    received block factors as these binary generators times a generically
    invertible block mixing, so the combined rank equals this matrix's rank
    for almost all draws.
    """
    m, K = tilde.shape
    u_cols = [pair_product(tilde, a, b).tolist()
              for a, b in itertools.combinations(range(K), 2)]
    w_cols = [exclude_one_product(tilde, i).tolist() for i in range(K)]
    out = []
    for j in range(K):
        cols = u_cols + [w_cols[i] for i in range(K) if i != j]
        mat = [[cols[c][r] for c in range(len(cols))] for r in range(m)]
        out.append(integer_rank(mat) == m)
    return tuple(out)


def canonical_pattern_matrix(config: SchemeConfig) -> PatternMatrix:
    """The textbook family: ones-minus-identity on top, then the first
    C(K,2)-1 weight-(K-2) rows in lexicographic zero-pair order.

    Satisfies the product rank certificate for every K, but certifies only
    the two receivers of the zero-pair missing from the bottom block; kept
    for reference and for the characterization tests.
    """
    K = config.users
    top = [tuple(0 if c == k else 1 for c in range(K)) for k in range(K)]
    bottom = []
    for a, b in itertools.combinations(range(K), 2):
        if len(bottom) == config.block_len - K:
            break
        bottom.append(tuple(0 if c in (a, b) else 1 for c in range(K)))
    tilde = np.array(top + bottom, dtype=np.int64)
    return PatternMatrix(tilde, certify_receivers(tilde))


# first two disjoint weight-(K-2) rows; dropping them certifies 4 receivers,
# the maximum any pattern matrix reaches for K >= 5
_FALLBACK_OMIT_PAIRS = ((0, 1), (2, 3))


def make_pattern_matrix(config: SchemeConfig) -> PatternMatrix:
    """Deterministic construction of the best certifiable pattern matrix.

    Searches the viable row families (vocabulary minus two rows, in
    lexicographic omission order) for one whose every receiver passes the
    exact decodability certificate. Such matrices exist only for K <= 4;
    beyond that the search provably returns nothing (see README), so the
    constructor returns the known maximal family directly: all vocabulary
    rows except the weight-(K-2) rows with zeros at {0,1} and {2,3}, which
    certifies receivers 0..3 and still carries the full product rank
    certificate.
    """
    K = config.users
    vocab = row_vocabulary(K)
    if K <= 4:
        for omit in itertools.combinations(range(len(vocab)), 2):
            rows = [vocab[r] for r in range(len(vocab)) if r not in omit]
            tilde = np.array(rows, dtype=np.int64)
            cert = certify_receivers(tilde)
            if all(cert):
                return PatternMatrix(tilde, cert)
        raise ConstructionFailedError(
            "construction-failed: no fully certified pattern matrix for K=%d" % K)
    omitted = {tuple(0 if c in pair else 1 for c in range(K))
               for pair in _FALLBACK_OMIT_PAIRS}
    rows = [r for r in vocab if r not in omitted]
    tilde = np.array(rows, dtype=np.int64)
    if not certify_product_rank(tilde):
        raise ConstructionFailedError(
            "construction-failed: product rank certificate failed for K=%d" % K)
    return PatternMatrix(tilde, certify_receivers(tilde))


# ---------------------------------------------------------------------------
# beamformer assignment


@dataclass(eq=False)
class BeamSet:
    """Per-user beamforming vectors plus the pair-sharing map.

    vectors[i][d] is the binary length-m vector of user i's dimension d
    (0-indexed). pair_dims maps each unordered pair (i, j), i < j, to the
    dimension indices (d_i, d_j) under which the shared vector is filed.
    """

    vectors: list[list[np.ndarray]]
    pair_dims: dict[tuple[int, int], tuple[int, int]]

    def shared_vector(self, i: int, j: int) -> np.ndarray:
        a, b = (i, j) if i < j else (j, i)
        return self.vectors[a][self.pair_dims[(a, b)][0]]


def default_pair_dims(K: int) -> dict[tuple[int, int], tuple[int, int]]:
    """Lexicographic pair order, first-come dimension indices per user."""
    nxt = [0] * K
    dims = {}
    for i, j in itertools.combinations(range(K), 2):
        dims[(i, j)] = (nxt[i], nxt[j])
        nxt[i] += 1
        nxt[j] += 1
    return dims


def assign_beamformers(
    pattern: PatternMatrix,
    pair_dims: dict[tuple[int, int], tuple[int, int]] | None = None,
) -> BeamSet:
    """Attach each pair's shared product vector to both owners' dimension slots.

    pair_dims overrides the default labeling (it must cover every pair
    exactly once and give each user each dimension index exactly once);
    relabeling never changes spans, only which symbol rides which vector.
    """
    K = pattern.users
    dims = default_pair_dims(K) if pair_dims is None else dict(pair_dims)
    pairs = list(itertools.combinations(range(K), 2))
    if sorted(dims) != pairs:
        raise ValueError("pair map must cover every unordered pair exactly once")
    seen = [set() for _ in range(K)]
    for (i, j), (di, dj) in dims.items():
        for user, d in ((i, di), (j, dj)):
            if not 0 <= d < K - 1 or d in seen[user]:
                raise ValueError(
                    "pair map must give user %d each dimension exactly once" % (user + 1))
            seen[user].add(d)
    vectors: list[list[np.ndarray]] = [[None] * (K - 1) for _ in range(K)]  # type: ignore
    for (i, j), (di, dj) in dims.items():
        v = pair_product(pattern.tilde, i, j)
        vectors[i][di] = v
        vectors[j][dj] = v
    return BeamSet(vectors=vectors, pair_dims=dims)


# ---------------------------------------------------------------------------
# whole schemes


@dataclass(eq=False)
class Scheme:
    config: SchemeConfig
    pattern: PatternMatrix
    beams: BeamSet

    @property
    def certified_receivers(self) -> tuple[bool, ...]:
        return self.pattern.certified_receivers


def build_scheme(
    users: int,
    pair_dims: dict[tuple[int, int], tuple[int, int]] | None = None,
) -> Scheme:
    config = make_config(users)
    pattern = make_pattern_matrix(config)
    beams = assign_beamformers(pattern, pair_dims)
    return Scheme(config=config, pattern=pattern, beams=beams)


def scheme_to_json(scheme: Scheme) -> str:
    """External scheme document: 1-indexed users and dimensions."""
    doc = {
        "K": scheme.config.users,
        "m": scheme.config.block_len,
        "tilde": [[int(x) for x in row] for row in scheme.pattern.tilde],
        "pairs": [
            {"users": [i + 1, j + 1], "dims": [di + 1, dj + 1]}
            for (i, j), (di, dj) in sorted(scheme.beams.pair_dims.items())
        ],
    }
    return render_json(doc)


def scheme_from_json(text: str) -> Scheme:
    """Rebuild a scheme from its JSON document, revalidating structure."""
    doc = json.loads(text)
    K = int(doc["K"])
    config = make_config(K)
    tilde = np.array(doc["tilde"], dtype=np.int64)
    if tilde.shape != (config.block_len, K):
        raise ValueError("tilde must be %d x %d" % (config.block_len, K))
    if not np.isin(tilde, (0, 1)).all():
        raise ValueError("tilde entries must be 0 or 1")
    pattern = PatternMatrix(tilde, certify_receivers(tilde))
    dims = {}
    for entry in doc["pairs"]:
        i, j = (int(u) - 1 for u in entry["users"])
        di, dj = (int(d) - 1 for d in entry["dims"])
        if not 0 <= i < j < K:
            raise ValueError("bad pair %r" % (entry["users"],))
        dims[(i, j)] = (di, dj)
    beams = assign_beamformers(pattern, dims)
    return Scheme(config=config, pattern=pattern, beams=beams)


def pair_dims_from_json(text: str) -> dict[tuple[int, int], tuple[int, int]]:
    """Parse a pair->dimension override: [{"users":[i,j],"dims":[di,dj]}, ...]."""
    doc = json.loads(text)
    if isinstance(doc, dict) and "pairs" in doc:
        doc = doc["pairs"]
    dims = {}
    for entry in doc:
        i, j = (int(u) - 1 for u in entry["users"])
        di, dj = (int(d) - 1 for d in entry["dims"])
        if i > j:
            (i, j), (di, dj) = (j, i), (dj, di)
        dims[(i, j)] = (di, dj)
    return dims
