"""Shared generators and independent oracle routines for the test suite."""

import numpy as np

from chshlab import DensityMatrix, Observable, Scenario, observable_from_bloch


def random_hermitian(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (z + z.conj().T) / 2.0


def random_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_bloch(rng):
    z = rng.uniform(-1.0, 1.0)
    phi = rng.uniform(0.0, 2.0 * np.pi)
    r = np.sqrt(max(0.0, 1.0 - z * z))
    return (r * np.cos(phi), r * np.sin(phi), z)


def random_observable(rng, label=""):
    return observable_from_bloch(random_bloch(rng), label=label)


def random_scenario(rng, state=None):
    return Scenario(
        random_observable(rng, "a1"),
        random_observable(rng, "a2"),
        random_observable(rng, "b1"),
        random_observable(rng, "b2"),
        state=state,
    )


def random_pure_density(rng, dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_density(rng, dim=4, components=3):
    """Random mixed state: convex mix of a few random pure projectors."""
    w = rng.uniform(0.1, 1.0, size=components)
    w /= w.sum()
    m = sum(wi * random_pure_density(rng, dim) for wi in w)
    return DensityMatrix(m)


def random_qubit_density(rng):
    """Random single-qubit state (I + r . sigma)/2 with |r| <= 1."""
    from chshlab.quantum import IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z

    x, y, z = random_bloch(rng)
    r = rng.uniform(0.0, 1.0)
    return 0.5 * (IDENTITY_2 + r * (x * SIGMA_X + y * SIGMA_Y + z * SIGMA_Z))


def partial_trace(m, keep):
    """Reduce a 4x4 two-party matrix to one party ('A' left, 'B' right)."""
    t = np.asarray(m).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ikjk->ij", t)
    if keep == "B":
        return np.einsum("kikj->ij", t)
    raise ValueError(keep)


def triple_loop_matmul(a, b):
    """Naive O(n^3) product in Python complex arithmetic (matmul oracle)."""
    n = a.shape[0]
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            acc = 0j
            for k in range(n):
                acc += complex(a[i, k]) * complex(b[k, j])
            out[i, j] = acc
    return out
