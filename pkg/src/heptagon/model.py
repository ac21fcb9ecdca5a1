"""
Heptagon Model

The spin-1/2 XXX ring in the arithmetic basis of magnetic configurations and
its Galois-Fourier block decomposition.

Main functional areas:
1. Configurations: occupation masks of r overturned spins on an n-node ring
2. Orbits: translation classes labelled by their canonical relative vector t
3. Operators: the integer Hamiltonian and the lowering operator S-
4. Galois wavelets: unnormalized Fourier combinations with coefficients w^(-kj)
5. Blocks: the Hamiltonian and S- restricted to a quasimomentum sector

Node labels are 0-based internally and rendered 1-based. The configuration
and operator layers accept any ring size n; wavelets and blocks need n = 7
because their coefficients live in Q(w7).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Tuple

from .fields import ORDER, CycNum
from .linalg import ExactMatrix, direct_sum

logger = logging.getLogger(__name__)

N_NODES = ORDER
BRILLOUIN_ZONE = (-3, -2, -1, 0, 1, 2, 3)


# ============================================================================
# CONFIGURATIONS AND ORBITS
# ============================================================================

@dataclass(frozen=True, order=True)
class Config:
    """
    Set of overturned spins, stored as a bit mask over nodes 0..n-1.

    Attributes:
        mask: Bit j set when node j carries a deviation
        n: Ring size
    """

    mask: int
    n: int = N_NODES

    @classmethod
    def from_nodes(cls, nodes, n: int = N_NODES) -> "Config":
        mask = 0
        for j in nodes:
            mask |= 1 << (j % n)
        return cls(mask, n)

    @property
    def nodes(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.mask >> j & 1)

    @property
    def r(self) -> int:
        return bin(self.mask).count("1")

    def occupied(self, j: int) -> bool:
        return bool(self.mask >> (j % self.n) & 1)

    def translate(self, shift: int) -> "Config":
        return Config.from_nodes((j + shift for j in self.nodes), self.n)

    def complement(self) -> "Config":
        """Particle-hole image: every node flipped."""
        return Config(((1 << self.n) - 1) ^ self.mask, self.n)

    def relative_vector(self) -> Tuple[int, ...]:
        """Gaps (t_1, ..., t_r) between consecutive deviations, wrapping around."""
        j = self.nodes
        if not j:
            return ()
        return tuple(j[a + 1] - j[a] for a in range(len(j) - 1)) + (j[0] + self.n - j[-1],)

    def label(self) -> str:
        return "{" + ",".join(str(j + 1) for j in self.nodes) + "}"

    def __str__(self) -> str:
        return self.label()


def canonical_rotation(t: Tuple[int, ...]) -> Tuple[int, ...]:
    """Lexicographically smallest cyclic rotation of t."""
    if not t:
        return ()
    return min(t[i:] + t[:i] for i in range(len(t)))


def configs_from_t(t: Tuple[int, ...], anchor: int, n: int = N_NODES) -> Config:
    """The configuration {j, j+t_1, j+t_1+t_2, ...} with j = anchor."""
    nodes = [anchor]
    for step in t[:-1]:
        nodes.append(nodes[-1] + step)
    return Config.from_nodes(nodes, n)


@dataclass(frozen=True)
class Orbit:
    """
    Translation orbit of configurations.

    Attributes:
        t: Canonical relative vector
        F: Number of islands (maximal runs of adjacent deviations)
        members: members[j] is the configuration anchored at node j; a single
            member for the empty and the full ring
    """

    t: Tuple[int, ...]
    F: int
    members: Tuple[Config, ...]

    @property
    def r(self) -> int:
        return len(self.t)

    @property
    def is_regular(self) -> bool:
        return len(self.members) == self.members[0].n

    def label(self) -> str:
        return "(" + ",".join(str(x) for x in self.t) + ")"


@lru_cache(maxsize=None)
def build_configs(r: int, n: int = N_NODES) -> Tuple[Config, ...]:
    """
    All configurations with r deviations, ordered lexicographically by nodes.

    Raises:
        ValueError: r outside 0..n
    """
    if not 0 <= r <= n:
        raise ValueError(f"r must lie in 0..{n}, got {r}")
    return tuple(Config.from_nodes(c, n) for c in combinations(range(n), r))


def _island_count(t: Tuple[int, ...], n: int) -> int:
    if not t:
        return 0
    if len(t) == n:
        return 1
    return sum(1 for x in t if x > 1)


@lru_cache(maxsize=None)
def build_orbits(r: int, n: int = N_NODES) -> Tuple[Orbit, ...]:
    """
    Translation orbits at level r, sorted by canonical t.

    Example:
        [o.t for o in build_orbits(2)] -> [(1, 6), (2, 5), (3, 4)]
    """
    seen = {}
    for cfg in build_configs(r, n):
        t = canonical_rotation(cfg.relative_vector())
        seen.setdefault(t, []).append(cfg)
    orbits = []
    for t in sorted(seen):
        if r in (0, n):
            members = (seen[t][0],)
        else:
            # duplicates collapse for periodic configurations of a composite n
            members = tuple(dict.fromkeys(configs_from_t(t, j, n) for j in range(n)))
        orbits.append(Orbit(t, _island_count(t, n), members))
    logger.debug("r=%d: %d configurations in %d orbits", r, comb(n, r), len(orbits))
    return tuple(orbits)


def config_index(r: int, n: int = N_NODES) -> Dict[Config, int]:
    return {c: i for i, c in enumerate(build_configs(r, n))}


# ============================================================================
# ARITHMETIC OPERATORS
# ============================================================================

def hop_neighbours(cfg: Config) -> List[Config]:
    """Configurations reached by moving one deviation to an empty adjacent node."""
    out = []
    for j in cfg.nodes:
        for step in (1, -1):
            target = (j + step) % cfg.n
            if not cfg.occupied(target):
                out.append(Config(cfg.mask ^ (1 << j) ^ (1 << target), cfg.n))
    return out


@lru_cache(maxsize=None)
def hamiltonian_arith(r: int, n: int = N_NODES) -> ExactMatrix:
    """
    Integer Hamiltonian on the configurations with r deviations.

    Off-diagonal entries are 1 between configurations related by one hop;
    the diagonal is minus the number of hops, so every row sums to zero.
    """
    configs = build_configs(r, n)
    index = config_index(r, n)
    size = len(configs)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i, cfg in enumerate(configs):
        moves = hop_neighbours(cfg)
        rows[i][i] = Fraction(-len(moves))
        for other in moves:
            rows[i][index[other]] += 1
    return ExactMatrix(tuple(tuple(r_) for r_ in rows), configs, configs)


@lru_cache(maxsize=None)
def s_minus(r: int, n: int = N_NODES) -> ExactMatrix:
    """Lowering operator from level r to level r + 1 (0/1 entries)."""
    if not 0 <= r < n:
        raise ValueError(f"S- is defined from levels 0..{n - 1}, got {r}")
    source = build_configs(r, n)
    target_index = config_index(r + 1, n)
    size = len(target_index)
    cols = []
    for cfg in source:
        col = [Fraction(0)] * size
        for j in range(n):
            if not cfg.occupied(j):
                col[target_index[Config(cfg.mask | 1 << j, n)]] = Fraction(1)
        cols.append(col)
    return ExactMatrix.from_columns(cols).with_labels(build_configs(r + 1, n), source)


def full_hamiltonian(n: int = N_NODES) -> ExactMatrix:
    """The 2^n x 2^n Hamiltonian as a direct sum over levels r = 0..n."""
    return direct_sum([hamiltonian_arith(r, n) for r in range(n + 1)])


# ============================================================================
# GALOIS WAVELETS
# ============================================================================

def wavelet(orbit: Orbit, k: int) -> Dict[Config, CycNum]:
    """
    Galois wavelet sum_j w^(-kj) |members[j]>.

    A single-member orbit gives a wavelet only at k = 0.
    """
    if not orbit.is_regular:
        return {orbit.members[0]: CycNum.one()} if k % ORDER == 0 else {}
    return {cfg: CycNum.omega(-k * j) for j, cfg in enumerate(orbit.members)}


def sector_orbits(r: int, k: int) -> Tuple[Orbit, ...]:
    """Orbits contributing a wavelet to the (r, k) sector."""
    return tuple(o for o in build_orbits(r) if o.is_regular or k % ORDER == 0)


def sector_dimension(r: int, k: int) -> int:
    return len(sector_orbits(r, k))


def wavelet_vector(orbit: Orbit, k: int) -> Tuple[CycNum, ...]:
    """The wavelet as a coordinate vector in the arithmetic basis of its level."""
    coeffs = wavelet(orbit, k)
    return tuple(coeffs.get(cfg, CycNum.zero()) for cfg in build_configs(orbit.r))


def _anchor_coefficient(vector: Tuple, orbit: Orbit, index: Dict[Config, int]):
    return vector[index[orbit.members[0]]]


def to_wavelet_coordinates(vector, r: int, k: int) -> Tuple:
    """
    Coordinates of an arithmetic-basis vector of the (r, k) sector in the
    wavelet basis; each coordinate is the value at the orbit's anchor.
    """
    index = config_index(r)
    return tuple(_anchor_coefficient(vector, o, index) for o in sector_orbits(r, k))


def from_wavelet_coordinates(coords, r: int, k: int) -> Tuple:
    """Arithmetic-basis vector of sum_t coords[t] W_t."""
    out = [CycNum.zero()] * comb(N_NODES, r)
    index = config_index(r)
    for c, orbit in zip(coords, sector_orbits(r, k)):
        if c == 0:
            continue
        for cfg, w in wavelet(orbit, k).items():
            out[index[cfg]] = out[index[cfg]] + c * w
    return tuple(out)


def fourier_transform(r: int) -> ExactMatrix:
    """
    Change of basis whose columns are the wavelets of level r, grouped by k
    over the Brillouin zone and by orbit within each k.
    """
    columns, labels = [], []
    for k in BRILLOUIN_ZONE:
        for orbit in sector_orbits(r, k):
            columns.append(wavelet_vector(orbit, k))
            labels.append((k, orbit.t))
    return ExactMatrix.from_columns(columns).with_labels(build_configs(r), tuple(labels))


def fourier_inverse(r: int) -> ExactMatrix:
    """Exact inverse D^-1 F^dagger, where D holds the squared wavelet norms."""
    f = fourier_transform(r)
    norms = [Fraction(len(build_orbits(r)[0].members))] * f.shape[1]
    inv_rows = [
        tuple(x / norms[i] for x in row) for i, row in enumerate(f.dagger().rows)
    ]
    return ExactMatrix(tuple(inv_rows), f.col_labels, f.row_labels)


def _apply(matrix: ExactMatrix, vector) -> Tuple:
    return (matrix @ ExactMatrix.column_vector(vector)).column(0)


def operator_block(matrix: ExactMatrix, r_from: int, r_to: int, k: int) -> ExactMatrix:
    """
    Matrix of an operator mapping level r_from to r_to in the wavelet bases:
    A W_s = sum_t M[t, s] W_t.
    """
    rows_orbits = sector_orbits(r_to, k)
    cols_orbits = sector_orbits(r_from, k)
    index = config_index(r_to)
    columns = []
    for orbit in cols_orbits:
        image = _apply(matrix, wavelet_vector(orbit, k))
        columns.append(tuple(_anchor_coefficient(image, t, index) for t in rows_orbits))
    labels = dict(
        row_labels=tuple(o.t for o in rows_orbits),
        col_labels=tuple(o.t for o in cols_orbits),
    )
    if not columns:
        return ExactMatrix(tuple(() for _ in rows_orbits), labels["row_labels"], None)
    return ExactMatrix.from_columns(columns, **labels)


@lru_cache(maxsize=None)
def fourier_block(r: int, k: int) -> ExactMatrix:
    """
    The Hamiltonian restricted to quasimomentum k at level r.

    Example:
        fourier_block(1, k) -> [[-2 + xi + conj(xi)]]
        fourier_block(2, k) first row -> (-2, 1 + xi, 0)
    """
    return operator_block(hamiltonian_arith(r), r, r, k)


@lru_cache(maxsize=None)
def s_block(r: int, dr: int, k: int) -> ExactMatrix:
    """(S-)^dr from sector (r, k) to sector (r + dr, k) in wavelet bases."""
    if dr < 1 or r + dr > N_NODES:
        raise ValueError(f"invalid lowering step r={r}, dr={dr}")
    op = s_minus(r)
    for level in range(r + 1, r + dr):
        op = s_minus(level) @ op
    return operator_block(op, r, r + dr, k)


def lowering_power(r_from: int, r_to: int) -> ExactMatrix:
    """(S-)^(r_to - r_from) in the arithmetic basis; identity when equal."""
    if r_to < r_from:
        raise ValueError("lowering only increases r")
    op = ExactMatrix.identity(comb(N_NODES, r_from))
    for level in range(r_from, r_to):
        op = s_minus(level) @ op
    return op


def block_diagonal_hamiltonian(r: int) -> ExactMatrix:
    """Direct sum of fourier_block(r, k) over the Brillouin zone, in F's column order."""
    return direct_sum([fourier_block(r, k) for k in BRILLOUIN_ZONE if sector_dimension(r, k)])


def particle_hole_matrix(r: int) -> ExactMatrix:
    """Permutation sending configuration c at level r to its complement at level n - r."""
    source = build_configs(r)
    index = config_index(N_NODES - r)
    cols = []
    for cfg in source:
        col = [Fraction(0)] * len(index)
        col[index[cfg.complement()]] = Fraction(1)
        cols.append(col)
    return ExactMatrix.from_columns(cols)


def sector_table(n: int = N_NODES) -> List[Dict[str, object]]:
    """Orbit structure per level: r, number of configs, t-vectors and island counts."""
    table = []
    for r in range(n + 1):
        orbits = build_orbits(r, n)
        table.append({
            "r": r,
            "configs": comb(n, r),
            "orbits": [o.t for o in orbits],
            "islands": [o.F for o in orbits],
        })
    return table

