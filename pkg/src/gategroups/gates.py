"""Exact gate catalog and the Pauli / Clifford / Bell group builders."""

from __future__ import annotations

from dataclasses import dataclass

from gategroups import cyclo
from gategroups.matrix import (
    UnitaryMatrix,
    closure,
    diagonal_matrix,
    identity_matrix,
    kron,
    matmul,
    matrix_from_rows,
)

__all__ = [
    "GateCatalog",
    "catalog",
    "pauli_group",
    "pauli2_pair_generators",
    "clifford_group",
    "bell_group",
    "clifford_order_formula",
    "yang_baxter_check",
]


@dataclass(frozen=True)
class GateCatalog:
    """The exact gate matrices everything else is generated from."""

    sigma0: UnitaryMatrix
    sigma_x: UnitaryMatrix
    sigma_y: UnitaryMatrix
    sigma_z: UnitaryMatrix
    hadamard: UnitaryMatrix
    phase: UnitaryMatrix
    cz: UnitaryMatrix
    bell: UnitaryMatrix


_CATALOG = None


def catalog():
    global _CATALOG
    if _CATALOG is None:
        i = cyclo.root_of_unity(4)
        s = cyclo.sqrt2().inverse()  # 1/sqrt(2)
        zero, one = cyclo.ZERO, cyclo.ONE
        sigma_x = matrix_from_rows([[zero, one], [one, zero]])
        sigma_z = diagonal_matrix([1, -1])
        sigma_y = matmul(sigma_x, sigma_z).scaled(i)
        hadamard = matrix_from_rows([[s, s], [s, -s]])
        phase = diagonal_matrix([one, i])
        cz = diagonal_matrix([1, 1, 1, -1])
        bell = matrix_from_rows(
            [
                [s, zero, zero, s],
                [zero, s, -s, zero],
                [zero, s, s, zero],
                [-s, zero, zero, s],
            ]
        )
        _CATALOG = GateCatalog(
            sigma0=identity_matrix(2),
            sigma_x=sigma_x,
            sigma_y=sigma_y,
            sigma_z=sigma_z,
            hadamard=hadamard,
            phase=phase,
            cz=cz,
            bell=bell,
        )
    return _CATALOG


def _wire(op, wire, n):
    """op acting on one wire of an n-qubit register (wire 0 most significant)."""
    m = None
    for w in range(n):
        factor = op if w == wire else identity_matrix(2)
        m = factor if m is None else kron(m, factor)
    return m


_GROUPS = {}


def pauli_group(n):
    """The n-qubit Pauli group, generated by the single-wire Pauli matrices.

    Order 4^(n+1): the 4^n sign-free tensor patterns times the scalar
    phases {1, -1, i, -i}.
    """
    if not 1 <= n <= 3:
        raise ValueError("pauli_group supports 1..3 qubits")
    key = ("pauli", n)
    if key not in _GROUPS:
        c = catalog()
        gens = []
        for wire in range(n):
            for op in (c.sigma_x, c.sigma_y, c.sigma_z):
                gens.append(_wire(op, wire, n))
        _GROUPS[key] = closure(gens)
    return _GROUPS[key]


def pauli2_pair_generators():
    """The five two-qubit tensor pairs XX, ZZ, XY, YZ, ZX.

    Their product relation (XY)(YZ)(ZX) = -1 keeps every phase real, so
    they generate an index-2 subgroup (order 32) of the two-qubit Pauli
    group rather than the full 64-element group.
    """
    c = catalog()
    return [
        kron(c.sigma_x, c.sigma_x),
        kron(c.sigma_z, c.sigma_z),
        kron(c.sigma_x, c.sigma_y),
        kron(c.sigma_y, c.sigma_z),
        kron(c.sigma_z, c.sigma_x),
    ]


def clifford_group(n):
    """The n-qubit Clifford group (n = 1 or 2), via its standard generators."""
    if n not in (1, 2):
        raise ValueError("clifford_group supports 1 or 2 qubits")
    key = ("clifford", n)
    if key not in _GROUPS:
        c = catalog()
        if n == 1:
            gens = [c.hadamard, c.phase]
        else:
            gens = [
                kron(c.hadamard, c.hadamard),
                kron(c.hadamard, c.phase),
                c.cz,
            ]
        _GROUPS[key] = closure(gens)
    return _GROUPS[key]


def bell_group():
    """Subgroup of the two-qubit Clifford group with the Bell matrix as third generator."""
    key = ("bell",)
    if key not in _GROUPS:
        c = catalog()
        gens = [kron(c.hadamard, c.hadamard), kron(c.hadamard, c.phase), c.bell]
        _GROUPS[key] = closure(gens)
    return _GROUPS[key]


def clifford_order_formula(n):
    """Order of the n-qubit Clifford group: 2^(n^2+2n+3) * prod_j (4^j - 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    value = 2 ** (n * n + 2 * n + 3)
    for j in range(1, n + 1):
        value *= 4**j - 1
    return value


def yang_baxter_check(r):
    """Exact check of (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R)."""
    if r.dim != 4:
        raise ValueError("the braid-relation check expects a 4x4 operator")
    i2 = identity_matrix(2)
    a = kron(r, i2)
    b = kron(i2, r)
    return matmul(matmul(a, b), a) == matmul(matmul(b, a), b)
