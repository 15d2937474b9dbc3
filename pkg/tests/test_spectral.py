import numpy as np
import pytest

from heisenring import (
    ModelSpec,
    build_hamiltonian,
    diagonalize_full,
    diagonalize_sectored,
)
from heisenring.spectral import (
    eigen_residuals,
    expected_sector_sizes,
    sector_basis,
)
from helpers import cached_decompose


def test_plain_diagonal():
    sd = diagonalize_full(np.diag([3.0, 1.0, 2.0]).astype(complex))
    assert np.allclose(sd.eigenvalues, [1.0, 2.0, 3.0])
    assert sd.ground_energy == 1.0
    assert sd.ground_degeneracy == 1


def test_identity_degeneracy():
    sd = diagonalize_full(np.eye(4, dtype=complex))
    assert np.allclose(sd.eigenvalues, 1.0)
    assert sd.ground_degeneracy == 4


def test_two_site_full():
    spec = ModelSpec.uniform(2, 1.0)
    sd = diagonalize_full(build_hamiltonian(spec))
    assert np.allclose(sd.eigenvalues, [-6.0, 2.0, 2.0, 2.0], atol=1e-12)
    assert sd.ground_degeneracy == 1


def test_two_site_sector_blocks():
    assert expected_sector_sizes(2) == [1, 2, 1]
    basis = sector_basis(2)
    assert [b.size for b in basis] == [1, 2, 1]
    spec = ModelSpec.uniform(2, 1.0)
    sd = diagonalize_sectored(None, spec)
    assert np.allclose(sd.eigenvalues, [-6.0, 2.0, 2.0, 2.0], atol=1e-12)
    assert sd.sector_labels is not None


def test_nonhermitian_rejected():
    bad = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    with pytest.raises(ValueError, match="Hermitian"):
        diagonalize_full(bad)


def test_sectored_rejects_sz_breaking_h():
    m = np.zeros((2, 2))
    m[0, 1] = m[1, 0] = 1.0
    spec = ModelSpec.general(m, 2 * m, m)  # jx != jy breaks S_z
    h = build_hamiltonian(spec)
    with pytest.raises(ValueError, match="S_z"):
        diagonalize_sectored(h, spec)
    with pytest.raises(ValueError, match="S_z"):
        diagonalize_sectored(None, spec)


@pytest.mark.parametrize("n,j,delta,b", [
    (2, 1.0, 1.0, 0.0),
    (3, -1.0, 1.0, 0.0),
    (4, 1.0, 0.5, 0.0),
    (5, 1.0, 2.0, 0.8),
    (6, -0.7, 0.0, 0.4),
    (8, 1.0, 1.0, 0.0),
])
def test_sector_matches_full(n, j, delta, b):
    spec = ModelSpec.uniform(n, j, delta, b)
    h = build_hamiltonian(spec)
    full = diagonalize_full(h)
    for sect in (diagonalize_sectored(h, spec), diagonalize_sectored(None, spec)):
        assert np.max(np.abs(sect.eigenvalues - full.eigenvalues)) <= 1e-9
        resid, ortho = eigen_residuals(h, sect)
        assert resid <= 1e-9
        assert ortho <= 1e-9
    assert abs(full.eigenvalues.sum() - np.trace(h).real) <= \
        1e-8 * max(1.0, abs(np.trace(h).real))


def test_sector_labels_match_hamming():
    spec = ModelSpec.uniform(4, 1.0, 0.5, 0.3)
    sd = diagonalize_sectored(None, spec)
    # each eigenvector must live entirely inside its labelled sector
    for k, label in enumerate(sd.sector_labels):
        col = sd.eigenvectors[:, k]
        support = np.nonzero(np.abs(col) > 1e-12)[0]
        weights = {int(b).bit_count() for b in support}
        assert len(weights) == 1
        assert (4 - 2 * weights.pop()) / 2.0 == label


def test_deterministic_repeat():
    spec = ModelSpec.uniform(5, 1.0, 0.5, 0.2)
    a = diagonalize_sectored(None, spec)
    b = diagonalize_sectored(None, spec)
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_full_path_phase_fix_deterministic():
    h = build_hamiltonian(ModelSpec.uniform(4, 1.0))
    a = diagonalize_full(h)
    b = diagonalize_full(h.copy())
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_degenerate_ground_space():
    spec, sd = cached_decompose(3, 1.0)
    assert sd.ground_degeneracy == 4
    spec, sd = cached_decompose(2, -1.0)
    assert sd.ground_degeneracy == 3  # ferromagnetic triplet


def test_delta_arithmetic_detour_same_spectrum():
    # delta arriving via arithmetic equal to 1.0 changes nothing
    a = diagonalize_sectored(None, ModelSpec.uniform(4, 1.0, 1.0))
    b = diagonalize_sectored(None, ModelSpec.uniform(4, 1.0, 0.5 * 2.0 * 1.0))
    assert np.max(np.abs(a.eigenvalues - b.eigenvalues)) <= 1e-9


def test_vectors_guard_for_large_rings():
    spec = ModelSpec.uniform(13, 1.0)
    with pytest.raises(ValueError, match="memory"):
        diagonalize_sectored(None, spec, vectors=True)
