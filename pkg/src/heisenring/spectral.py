"""Hermitian eigendecomposition, full or blocked by total-S_z sectors.

The sector path groups computational basis states by their number of down
spins k (Hamming weight of the basis index), diagonalizes each C(N, k)
block independently and merges.  It never needs the full 2^N x 2^N matrix,
which keeps N = 13, 14 tractable; dense eigenvectors are only assembled
for N <= 12 (above that they alone would exceed a 4 GB budget, so the
decomposition carries eigenvalues and sector labels only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ModelSpec, build_hamiltonian, is_hermitian

FULL_PATH_MAX_SITES = 12
DEGENERACY_RTOL = 1e-9
_SZ_COMM_TOL = 1e-10


@dataclass
class SpectralDecomposition:
    """Eigenvalues (ascending) and eigenvectors of one Hamiltonian.

    eigenvectors is a dense complex matrix with orthonormal columns, or None
    when the decomposition was computed values-only (large sector runs).
    sector_labels holds the total-S_z quantum number of each eigenvector for
    S_z-conserving models, else None.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None
    ground_energy: float
    ground_degeneracy: int
    sector_labels: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.eigenvalues.size


def ground_degeneracy_count(eigenvalues: np.ndarray) -> int:
    """Number of eigenvalues within the degeneracy tolerance of the lowest."""
    e0 = eigenvalues[0]
    return int(np.sum(np.abs(eigenvalues - e0) <= DEGENERACY_RTOL * max(1.0, abs(e0))))


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its first non-negligible amplitude is real positive."""
    lead = (np.abs(vectors) > 1e-12).argmax(axis=0)
    pivots = vectors[lead, np.arange(vectors.shape[1])]
    mags = np.abs(pivots)
    mags[mags == 0.0] = 1.0
    return vectors * (pivots.conj() / mags)


def diagonalize_full(h: np.ndarray) -> SpectralDecomposition:
    """Eigendecomposition of a dense Hermitian matrix.

    Raises on non-Hermitian input; eigensolver convergence failures
    propagate as numpy.linalg.LinAlgError.
    """
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    if h.shape[0] > (1 << FULL_PATH_MAX_SITES):
        raise ValueError(
            f"dense full-path limit is dim {1 << FULL_PATH_MAX_SITES}; "
            "use diagonalize_sectored for larger rings"
        )
    if not is_hermitian(h):
        raise ValueError("matrix is not Hermitian within tolerance")
    if np.iscomplexobj(h) and np.max(np.abs(h.imag)) == 0.0:
        evals, vecs = np.linalg.eigh(h.real)
        vecs = vecs.astype(complex)
    else:
        evals, vecs = np.linalg.eigh(h)
        vecs = np.ascontiguousarray(vecs).astype(complex, copy=False)
    vecs = _fix_phases(vecs)
    return SpectralDecomposition(
        eigenvalues=evals,
        eigenvectors=vecs,
        ground_energy=float(evals[0]),
        ground_degeneracy=ground_degeneracy_count(evals),
    )


def sector_basis(n: int) -> list[np.ndarray]:
    """Basis indices grouped by down-spin count k = 0..n, each ascending."""
    states = np.arange(1 << n, dtype=np.int64)
    weights = np.bitwise_count(states).astype(np.int64)
    return [states[weights == k] for k in range(n + 1)]


def _sector_block_from_spec(spec: ModelSpec, states: np.ndarray, k: int) -> np.ndarray:
    """One fixed-k block of H built directly from bit rules (no dense H).

    Diagonal collects the z-z couplings and the field; the x/y couplings
    connect states that differ by one antiparallel swap.  Requires an
    S_z-conserving spec (equal x and y couplings).
    """
    n = spec.n_sites
    m = states.size
    block = np.zeros((m, m))
    diag = np.full(m, spec.field_b * (n - 2 * k), dtype=float)

    if spec.is_uniform:
        j, delta = spec.coupling.j, spec.coupling.delta
        pair_terms = [(i, kk, 2.0 * j, j * delta) for i, kk in spec.bonds()]
    else:
        jx, jz = spec.coupling.jx, spec.coupling.jz
        pair_terms = []
        for i in range(1, n + 1):
            for kk in range(i + 1, n + 1):
                cx, cz = jx[i - 1, kk - 1], jz[i - 1, kk - 1]
                if cx != 0.0 or cz != 0.0:
                    # ordered double sum counts the pair twice
                    pair_terms.append((i, kk, 4.0 * cx, 2.0 * cz))

    for i, kk, hop, zz in pair_terms:
        bi, bk = n - i, n - kk
        zi = 1 - 2 * ((states >> bi) & 1)
        zk = 1 - 2 * ((states >> bk) & 1)
        diag += zz * zi * zk
        anti = np.nonzero(zi != zk)[0]
        if anti.size and hop != 0.0:
            flipped = states[anti] ^ ((1 << bi) | (1 << bk))
            rows = np.searchsorted(states, flipped)
            block[rows, anti] += hop
    block[np.arange(m), np.arange(m)] += diag
    return block


def diagonalize_sectored(h: np.ndarray | None, spec: ModelSpec,
                         vectors: bool | None = None) -> SpectralDecomposition:
    """Sector-blocked eigendecomposition of an S_z-conserving Hamiltonian.

    Parameters
    ----------
    h : ndarray or None
        Dense Hamiltonian to block, or None to build the blocks directly
        from `spec` (mandatory for n_sites >= 13).
    spec : ModelSpec
        Ring description; must conserve S_z.
    vectors : bool, optional
        Assemble dense eigenvectors.  Defaults to True for n_sites <= 12,
        False above (where the dense matrix would not fit in memory).
    """
    n = spec.n_sites
    dim = spec.dim
    if vectors is None:
        vectors = n <= FULL_PATH_MAX_SITES
    if vectors and n > FULL_PATH_MAX_SITES:
        raise ValueError(
            f"dense eigenvectors for n_sites={n} exceed the memory budget; "
            "pass vectors=False"
        )

    if h is not None:
        h = np.asarray(h)
        if h.shape != (dim, dim):
            raise ValueError(f"h has shape {h.shape}, expected {(dim, dim)}")
        d = np.array([n - 2 * int(b).bit_count() for b in range(dim)], dtype=float)
        comm = np.max(np.abs(h * d[None, :] - d[:, None] * h))
        scale = max(1.0, float(np.max(np.abs(h))))
        if comm > _SZ_COMM_TOL * scale:
            raise ValueError(
                f"[H, S_z] norm {comm / scale:.3e} exceeds {_SZ_COMM_TOL:.0e}; "
                "H does not conserve S_z"
            )
    elif not spec.conserves_sz:
        raise ValueError("spec does not conserve S_z (x and y couplings differ)")

    all_evals, all_labels = [], []
    vec_blocks = []  # (basis indices, block eigenvectors)
    for k, states in enumerate(sector_basis(n)):
        if h is not None:
            block = h[np.ix_(states, states)]
            if np.max(np.abs(block.imag)) == 0.0:
                block = block.real
        else:
            block = _sector_block_from_spec(spec, states, k)
        if vectors:
            evals, bvecs = np.linalg.eigh(block)
            vec_blocks.append((states, bvecs))
        else:
            evals = np.linalg.eigvalsh(block)
        all_evals.append(evals)
        all_labels.append(np.full(evals.size, (n - 2 * k) / 2.0))

    evals = np.concatenate(all_evals)
    labels = np.concatenate(all_labels)
    order = np.lexsort((labels, evals))
    evals = evals[order]
    labels = labels[order]

    dense = None
    if vectors:
        dense = np.zeros((dim, dim), dtype=complex)
        col = 0
        for states, bvecs in vec_blocks:
            dense[np.ix_(states, np.arange(col, col + states.size))] = bvecs
            col += states.size
        dense = _fix_phases(dense[:, order])

    return SpectralDecomposition(
        eigenvalues=evals,
        eigenvectors=dense,
        ground_energy=float(evals[0]),
        ground_degeneracy=ground_degeneracy_count(evals),
        sector_labels=labels,
    )


def decompose(spec: ModelSpec, vectors: bool | None = None) -> SpectralDecomposition:
    """Convenience front door: sector path when S_z is conserved, else full."""
    if spec.conserves_sz:
        return diagonalize_sectored(None, spec, vectors=vectors)
    return diagonalize_full(build_hamiltonian(spec))


def eigen_residuals(h: np.ndarray, sd: SpectralDecomposition) -> tuple[float, float]:
    """(worst eigenpair residual scaled by max(1,|E|), worst orthonormality defect)."""
    v = sd.eigenvectors
    if v is None:
        raise ValueError("decomposition carries no eigenvectors")
    r = h @ v - v * sd.eigenvalues[None, :]
    scale = np.maximum(1.0, np.abs(sd.eigenvalues))
    resid = float(np.max(np.linalg.norm(r, axis=0) / scale))
    ortho = float(np.max(np.abs(v.conj().T @ v - np.eye(sd.dim))))
    return resid, ortho


def expected_sector_sizes(n: int) -> list[int]:
    """Block dimensions C(n, k) for k = 0..n."""
    return [math.comb(n, k) for k in range(n + 1)]
