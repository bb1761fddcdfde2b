"""Coupling trees over spin-1/2 registers and the hierarchic change of basis.

A register of 2^M qubits is coupled pairwise, blocks of two, then blocks of
four, up to the whole register.  The resulting orthogonal transform maps the
product basis onto total-spin multiplet states labelled by the intermediate
spin of every tree node plus a terminal (J, M).  On top of the transform this
module provides the multiresolution ladder: approximation spaces V_j spanned
by blocks of 2^j qubits held at maximal spin, their detail complements W_j,
per-level state profiles, level-conditioned block operators, and reduced
density matrices over coarse labels.

Conventions fixed here and relied on by the test fixtures:

- trees pair adjacent qubits (0-1, 2-3, ...), then adjacent pairs, and so on;
- a basis-state path lists internal-node spins in post-order (children before
  parents, left before right), so the last entry is the root spin;
- columns are sorted by descending terminal J, then ascending M, then
  lexicographic path ("canonical order");
- transform entry [i, k] is the overlap of product state i with multiplet
  state k, so hierarchic amplitudes of a state vector are U^dagger @ psi.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .angular_momentum import MultipletLabel, SpinLabel, cg

# Dense-matrix operations are capped at 2^12 amplitudes.
MAX_DENSE_QUBITS = 12
MAX_TREE_QUBITS = 4096

NORM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class TreeNode:
    """One block of the coupling tree covering qubits [offset, offset + size)."""

    offset: int
    num_qubits: int
    left: "TreeNode | None"
    right: "TreeNode | None"
    content: tuple[tuple[int, int], ...]  # (twice_j, multiplicity), descending J

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def level(self) -> int:
        """Block scale: the node covers 2^level qubits."""
        return self.num_qubits.bit_length() - 1


@dataclass(frozen=True)
class CouplingTree:
    """Balanced pairwise coupling plan over a power-of-two register."""

    num_qubits: int
    levels: int
    root: TreeNode

    def nodes_at_level(self, level: int) -> list[TreeNode]:
        """Blocks of 2^level qubits, left to right."""
        if not 0 <= level <= self.levels:
            raise ValueError(f"level must be in 0..{self.levels}, got {level}")
        out = []

        def walk(node):
            if node.level == level:
                out.append(node)
            elif not node.is_leaf:
                walk(node.left)
                walk(node.right)

        walk(self.root)
        return out

    def root_content(self) -> list[tuple[SpinLabel, int]]:
        """Total spins of the whole register with multiplicities, descending J."""
        return [(SpinLabel(tj), mult) for tj, mult in self.root.content]


@dataclass(frozen=True)
class MultipletBasisState:
    """One column label of the hierarchic transform.

    ``path`` holds the intermediate spin of every internal node in post-order;
    ``terminal`` is the (J, M) of the whole register, with J equal to the last
    path entry.
    """

    path: tuple[SpinLabel, ...]
    terminal: MultipletLabel


@dataclass(frozen=True)
class LevelLabel:
    """Coarse label of a basis state: node spins at levels >= some cutoff
    (post-order) together with the register magnetic number."""

    spins: tuple[SpinLabel, ...]
    twice_m: int


@dataclass(frozen=True)
class LadderDimensions:
    """Dimension bookkeeping of the ladder V_0 ⊃ V_1 ⊃ ... ⊃ V_M."""

    v: tuple[int, ...]  # dim V_0 ... dim V_M
    w: tuple[int, ...]  # dim W_1 ... dim W_M

    @property
    def levels(self) -> int:
        return len(self.w)


@dataclass(frozen=True)
class LadderProfile:
    """Squared projection norms of a state onto W_1 ... W_M and V_M."""

    detail_weights: tuple[float, ...]
    final_weight: float

    def total(self) -> float:
        return sum(self.detail_weights) + self.final_weight


def _couple_contents(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for tja, ma in a.items():
        for tjb, mb in b.items():
            for tj in range(abs(tja - tjb), tja + tjb + 1, 2):
                out[tj] = out.get(tj, 0) + ma * mb
    return out


def register_content(num_qubits: int) -> list[tuple[SpinLabel, int]]:
    """Total-spin content of ``num_qubits`` spin-1/2 particles, descending J.

    Coupling order does not affect the content, so any register size from 1
    to 4096 is accepted (the coupling tree itself requires a power of two).
    """
    if not 1 <= num_qubits <= MAX_TREE_QUBITS:
        raise ValueError(f"register size must be in 1..{MAX_TREE_QUBITS}")
    content = {1: 1}
    for _ in range(num_qubits - 1):
        content = _couple_contents(content, {1: 1})
    return [(SpinLabel(tj), content[tj]) for tj in sorted(content, reverse=True)]


def build_coupling_tree(num_qubits: int) -> CouplingTree:
    """Balanced adjacent-pair coupling tree over a power-of-two register."""
    if num_qubits < 1 or num_qubits & (num_qubits - 1) != 0:
        raise ValueError(f"register size must be a power of two, got {num_qubits}")
    if num_qubits > MAX_TREE_QUBITS:
        raise ValueError(f"register size {num_qubits} exceeds {MAX_TREE_QUBITS}")

    def build(offset, size):
        if size == 1:
            return TreeNode(offset, 1, None, None, ((1, 1),))
        left = build(offset, size // 2)
        right = build(offset + size // 2, size // 2)
        content = _couple_contents(dict(left.content), dict(right.content))
        packed = tuple((tj, content[tj]) for tj in sorted(content, reverse=True))
        return TreeNode(offset, size, left, right, packed)

    levels = num_qubits.bit_length() - 1
    return CouplingTree(num_qubits, levels, build(0, num_qubits))


def _postorder_levels(num_qubits: int) -> list[int]:
    """Levels of the internal nodes in path (post-order) order."""
    if num_qubits == 1:
        return []
    half = _postorder_levels(num_qubits // 2)
    return half + half + [num_qubits.bit_length() - 1]


# Cached per register size; all balanced trees of equal size are identical.
# Entries are (orthogonal matrix, [(path twice_j tuple, twice_J, twice_M)]).
_TRANSFORM_CACHE: dict[int, tuple[np.ndarray, list[tuple[tuple[int, ...], int, int]]]] = {}


def _transform_with_states(num_qubits: int):
    if num_qubits in _TRANSFORM_CACHE:
        return _TRANSFORM_CACHE[num_qubits]
    if num_qubits == 1:
        result = (np.eye(2), [((), 1, -1), ((), 1, 1)])
        _TRANSFORM_CACHE[1] = result
        return result

    u_half, s_half = _transform_with_states(num_qubits // 2)
    # Group child columns by (path, J); values map twice_M -> column index.
    groups: dict[tuple[tuple[int, ...], int], dict[int, int]] = {}
    for idx, (path, tj, tm) in enumerate(s_half):
        groups.setdefault((path, tj), {})[tm] = idx

    dim = 2 ** num_qubits
    columns = []
    states = []
    for (path_l, tj_l), m_l in groups.items():
        for (path_r, tj_r), m_r in groups.items():
            jl, jr = SpinLabel(tj_l), SpinLabel(tj_r)
            for tj in range(abs(tj_l - tj_r), tj_l + tj_r + 1, 2):
                for tm in range(-tj, tj + 1, 2):
                    col = np.zeros(dim)
                    target = MultipletLabel(tj, tm)
                    for tm_l, col_l in m_l.items():
                        tm_r = tm - tm_l
                        if tm_r not in m_r:
                            continue
                        coeff = cg(jl, tm_l, jr, tm_r, target)
                        if coeff != 0.0:
                            col += coeff * np.kron(u_half[:, col_l], u_half[:, m_r[tm_r]])
                    columns.append(col)
                    states.append((path_l + path_r + (tj,), tj, tm))

    order = sorted(range(len(states)),
                   key=lambda k: (-states[k][1], states[k][2], states[k][0]))
    matrix = np.column_stack([columns[k] for k in order])
    result = (matrix, [states[k] for k in order])
    _TRANSFORM_CACHE[num_qubits] = result
    return result


def _check_dense(num_qubits: int) -> None:
    if num_qubits > MAX_DENSE_QUBITS:
        raise ValueError(
            f"dense operations are capped at 2^{MAX_DENSE_QUBITS} amplitudes "
            f"({num_qubits} qubits requested)"
        )


def hierarchic_transform(tree: CouplingTree) -> np.ndarray:
    """Orthogonal matrix from the product basis to the multiplet basis.

    Entry [i, k] is the overlap of product state i (qubit 0 most significant,
    down before up) with multiplet state k in canonical order; hierarchic
    amplitudes of a register state are ``u.conj().T @ psi``.
    """
    _check_dense(tree.num_qubits)
    matrix, _ = _transform_with_states(tree.num_qubits)
    return matrix.copy()


def multiplet_basis_states(tree: CouplingTree) -> list[MultipletBasisState]:
    """Column labels of :func:`hierarchic_transform`, canonical order."""
    _check_dense(tree.num_qubits)
    _, states = _transform_with_states(tree.num_qubits)
    return [
        MultipletBasisState(tuple(SpinLabel(t) for t in path), MultipletLabel(tj, tm))
        for path, tj, tm in states
    ]


def ladder_dimensions(levels: int) -> LadderDimensions:
    """Exact dimensions of V_0 ... V_M and W_1 ... W_M for 2^levels qubits.

    dim V_j = (2^j + 1)^(2^(M-j)): blocks of 2^j qubits restricted to their
    maximal spin 2^(j-1).  Values are exact integers for levels up to 12.
    """
    if not 0 <= levels <= MAX_DENSE_QUBITS:
        raise ValueError(f"levels must be in 0..{MAX_DENSE_QUBITS}, got {levels}")
    v = tuple((2 ** j + 1) ** (2 ** (levels - j)) for j in range(levels + 1))
    w = tuple(v[j - 1] - v[j] for j in range(1, levels + 1))
    return LadderDimensions(v, w)


def approximation_projector(tree: CouplingTree, level: int) -> np.ndarray:
    """Orthogonal projector onto V_level in the product basis.

    Blockwise tensor product of maximal-spin projectors, each assembled from
    the block's own transform columns with terminal spin (block size) / 2.
    """
    _check_dense(tree.num_qubits)
    if not 0 <= level <= tree.levels:
        raise ValueError(f"level must be in 0..{tree.levels}, got {level}")
    if level == 0:
        return np.eye(2 ** tree.num_qubits)
    block_size = 2 ** level
    u_block, s_block = _transform_with_states(block_size)
    cols = [k for k, (_, tj, _) in enumerate(s_block) if tj == block_size]
    basis = u_block[:, cols]
    block_projector = basis @ basis.T
    num_blocks = tree.num_qubits // block_size
    return reduce(np.kron, [block_projector] * num_blocks)


def detail_projector(tree: CouplingTree, level: int) -> np.ndarray:
    """Orthogonal projector onto the detail space W_level = V_{level-1} minus V_level."""
    if not 1 <= level <= tree.levels:
        raise ValueError(f"level must be in 1..{tree.levels}, got {level}")
    return approximation_projector(tree, level - 1) - approximation_projector(tree, level)


def _check_state(state: np.ndarray, tree: CouplingTree) -> np.ndarray:
    state = np.asarray(state, dtype=complex).ravel()
    if state.size != 2 ** tree.num_qubits:
        raise ValueError(
            f"state has {state.size} amplitudes, tree expects {2 ** tree.num_qubits}"
        )
    norm = np.linalg.norm(state)
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise ValueError(f"state norm {norm} deviates from 1 by more than {NORM_TOLERANCE}")
    return state


def analyze_state(state: np.ndarray, tree: CouplingTree) -> LadderProfile:
    """Squared projection norms of a unit state onto W_1 ... W_M and V_M.

    The entries sum to 1 (completeness of the ladder decomposition).
    """
    state = _check_state(state, tree)
    projected_prev = state
    weights = []
    projected = state
    for level in range(1, tree.levels + 1):
        projected = approximation_projector(tree, level) @ state
        weights.append(float(np.linalg.norm(projected_prev - projected) ** 2))
        projected_prev = projected
    return LadderProfile(tuple(weights), float(np.linalg.norm(projected) ** 2))


def _coarse_fine_split(tree: CouplingTree, level: int):
    """Index masks splitting a path into coarse (level >= cutoff) and fine parts."""
    if not 0 <= level <= tree.levels:
        raise ValueError(f"level must be in 0..{tree.levels}, got {level}")
    node_levels = _postorder_levels(tree.num_qubits)
    coarse = [i for i, lv in enumerate(node_levels) if lv >= level]
    fine = [i for i, lv in enumerate(node_levels) if lv < level]
    return coarse, fine


def level_labels(tree: CouplingTree, level: int) -> list[LevelLabel]:
    """Distinct coarse labels at ``level``, in canonical basis order."""
    _check_dense(tree.num_qubits)
    coarse, _ = _coarse_fine_split(tree, level)
    _, states = _transform_with_states(tree.num_qubits)
    seen: dict[LevelLabel, None] = {}
    for path, _, tm in states:
        key = LevelLabel(tuple(SpinLabel(path[i]) for i in coarse), tm)
        seen.setdefault(key)
    return list(seen)


def _group_by_label(tree: CouplingTree, level: int):
    coarse, fine = _coarse_fine_split(tree, level)
    _, states = _transform_with_states(tree.num_qubits)
    group_indices: dict[LevelLabel, list[int]] = {}
    fine_parts = []
    for idx, (path, _, tm) in enumerate(states):
        key = LevelLabel(tuple(SpinLabel(path[i]) for i in coarse), tm)
        group_indices.setdefault(key, []).append(idx)
        fine_parts.append(tuple(path[i] for i in fine))
    return group_indices, fine_parts


def conditioned_operator(tree: CouplingTree, level: int, blocks) -> np.ndarray:
    """Block-diagonal operator in the hierarchic basis, conditioned on the
    coarse labels at ``level``.

    ``blocks`` maps a coarse label to the square matrix applied to the basis
    states carrying that label (ordered as in the canonical basis).  A key may
    be a :class:`LevelLabel` or, when it addresses a single node, a
    :class:`MultipletLabel`.  Unlisted labels receive the identity.  The
    result is unitary exactly when every block is unitary.
    """
    _check_dense(tree.num_qubits)
    group_indices, _ = _group_by_label(tree, level)

    def normalize(key):
        if isinstance(key, MultipletLabel):
            return LevelLabel((SpinLabel(key.twice_j),), key.twice_m)
        return key

    operator = np.eye(2 ** tree.num_qubits, dtype=complex)
    for key, block in blocks.items():
        key = normalize(key)
        if key not in group_indices:
            raise ValueError(f"no basis states carry label {key} at level {level}")
        indices = group_indices[key]
        block = np.asarray(block, dtype=complex)
        if block.shape != (len(indices), len(indices)):
            raise ValueError(
                f"block for {key} has shape {block.shape}, expected "
                f"({len(indices)}, {len(indices)})"
            )
        operator[np.ix_(indices, indices)] = block
    return operator


def reduce_to_level(state: np.ndarray, tree: CouplingTree, level: int):
    """Density matrix over the coarse labels at ``level``.

    The finer labels (node spins below ``level``) are traced out: two coarse
    labels stay coherent only through identical fine completions.  Diagonal
    entries are the total squared amplitude of the hierarchic basis states
    carrying each label.  Returns ``(rho, labels)`` with labels in canonical
    order.
    """
    state = _check_state(state, tree)
    matrix, _ = _transform_with_states(tree.num_qubits)
    amplitudes = matrix.conj().T @ state

    group_indices, fine_parts = _group_by_label(tree, level)
    labels = list(group_indices)
    label_pos = {key: n for n, key in enumerate(labels)}

    buckets: dict[tuple[int, ...], list[tuple[int, complex]]] = {}
    for key, indices in group_indices.items():
        for idx in indices:
            buckets.setdefault(fine_parts[idx], []).append((label_pos[key], amplitudes[idx]))

    rho = np.zeros((len(labels), len(labels)), dtype=complex)
    for entries in buckets.values():
        vec = np.zeros(len(labels), dtype=complex)
        for pos, amp in entries:
            vec[pos] = amp
        rho += np.outer(vec, vec.conj())
    return rho, labels
