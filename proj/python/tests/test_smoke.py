import math

import numpy as np
import pytest

import exwit


def test_pswap_is_unitary():
    u = exwit.pswap_unitary(0.3)
    assert u.shape == (4, 4)
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-14)


def test_single_collision():
    (s, r) = exwit.bloch_pswap_update((0.0, 0.0, -1.0), (0.0, 0.0, 0.0), 0.1)
    assert s[2] == pytest.approx(-math.cos(0.1) ** 2, abs=1e-15)
    assert s[2] + r[2] == pytest.approx(-1.0, abs=1e-15)


def test_markov_homogenization():
    s, res = exwit.homogenize((0.0, 0.0, -1.0), 3, 0.1, exwit.Environment.MARKOV)
    assert s[2] == pytest.approx(-math.cos(0.1) ** 6, abs=1e-15)
    assert len(res) == 3


def test_partial_trace_of_bell_state():
    bell = np.zeros(4, dtype=complex)
    bell[[0, 3]] = 1 / math.sqrt(2)
    rho = np.outer(bell, bell.conj())
    assert np.allclose(exwit.partial_trace(rho, [2, 2], [0]), np.eye(2) / 2)


def test_xx_hamiltonian_conserves_excitations():
    h = exwit.xx_hamiltonian([1.0, 0.5], [0.2, -0.1, 0.3])
    z = np.diag([1.0, -1.0])
    zt = sum(np.kron(np.kron(*(z if k == i else np.eye(2) for k in range(2))), z if i == 2 else np.eye(2))
             for i in range(3))
    assert np.linalg.norm(h @ zt - zt @ h) < 1e-12


def test_table_values():
    stages = exwit.fg_stages(0.1)
    assert len(stages) == 6
    assert [round(st["F"].real, 3) for st in stages] == [0.961, 0.951, 0.942, 0.932, 0.923, 0.914]
    assert exwit.markov_damping(9, 0.1) == pytest.approx(0.914, abs=5e-4)
    fg = exwit.compute_fgs(0.1)
    assert fg["F"].real == pytest.approx(math.cos(0.1) ** 18, abs=1e-3)


def test_protocol_and_witness():
    out = exwit.run_protocol(n_monomers=3, n_reservoir=2, eta=0.2)
    assert out["iterations"] == 3
    assert sum(out["populations"]) + out["multi_excitation"] == pytest.approx(1.0, abs=1e-9)
    assert out["conservation_drift"] < 1e-9
    w = exwit.evaluate_witness(eta=0.1, environment=exwit.Environment.MARKOV)
    assert w["achieved"] and w["verdict"] == "achieved"
    w = exwit.evaluate_witness(eta=math.pi / 2, environment=exwit.Environment.MARKOV)
    assert not w["achieved"]


def test_closed_forms():
    terms = {t["label"]: t for t in exwit.markov_final_state(3, 3, 0.1, 1e-3, [1.0, 1.0], [0.0, 0.0, 0.0])}
    assert terms["A(1,2)"]["cos_exponent"] == 18
    res_z, _ = exwit.reservoir_trace(0.1)
    assert res_z[0][0][0] == pytest.approx(-math.sin(0.1) ** 2, abs=1e-15)
    assert exwit.classical_nogo_sharpness(1.0, 0.5, 0.3, 2.0, 0, 1) < 1e-12


def test_errors_map_to_python_exceptions():
    with pytest.raises(exwit.ResourceError):
        exwit.run_protocol(n_monomers=12)
    with pytest.raises(exwit.StructuralError):
        exwit.run_protocol(n_monomers=3, fields=[0.0, 0.0])
    with pytest.raises(ValueError):
        exwit.partial_trace(np.eye(4), [2, 3], [0])
