import math

import numpy as np
import pytest

import robinwall as rw


def test_dirichlet_ground_energy():
    s = rw.energy(rw.Boundary.dirichlet, 0, 1.0)
    assert s.energy == pytest.approx(2.3381074105, rel=1e-10)
    assert rw.node_count(s) == 0


def test_zero_energy_field():
    assert rw.zero_energy_field() == pytest.approx(2.58106, abs=1e-4)


def test_vectorized_wavefunction_is_normalized():
    sf = rw.build_state(rw.energy(rw.Boundary.robin_plus, 1, 2.0))
    x = np.linspace(sf.x_cut, 0.0, 20001)
    rho = sf.rho(x)
    assert rho.shape == x.shape
    assert np.trapezoid(rho, x) == pytest.approx(1.0, abs=1e-6)
    assert sf.position_integrals().norm == pytest.approx(1.0, abs=1e-9)


def test_field_free_measures():
    r = rw.measures("robin-", 0, 0.0)
    assert r.S_x == pytest.approx(1.0 - math.log(2.0), abs=1e-9)
    assert r.fisher_product == pytest.approx(2.0, abs=1e-9)
    assert r.CGL_product == pytest.approx(math.e, abs=1e-9)


def test_dipole_matrix_symmetry():
    m = np.array(rw.dipole_matrix(rw.Boundary.neumann, 1.0, 3))
    assert np.allclose(m, m.T)


def test_oracle_matches_solver():
    fd = rw.fd_energies(rw.Boundary.robin_minus, 1.0, 3, 4000)
    for n, e in enumerate(fd):
        assert e == pytest.approx(rw.energy(rw.Boundary.robin_minus, n, 1.0).energy, rel=1e-4)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        rw.energy(rw.Boundary.dirichlet, 0, -1.0)
    with pytest.raises(ValueError):
        rw.parse_boundary("sideways")
