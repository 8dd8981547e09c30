"""Exact arithmetic for single-qudit Weyl-Heisenberg (generalized Pauli) operators.

Conventions
-----------
An element is stored in normal order as ``omega^p * X^m * Z^n`` over Z_d,
with ``omega = exp(2*pi*i/d)``.  X is the cyclic shift ``X|j> = |j+1 mod d>``
and Z the clock ``Z|j> = omega^j |j>``; they satisfy ``Z X = omega X Z``.
Because every normal-ordering step only produces integer powers of omega,
the whole group lives in integer arithmetic mod d and never touches floats.
The dense matrix map is a faithful homomorphism into U(d).

Two equality notions are used downstream: exact (m, n, p all equal) and
projective (global phase ignored).  Coset logic works projectively.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class QuditDim:
    """Dimension d >= 2 of a single qudit; all exponent arithmetic is mod d."""

    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 2:
            raise ValueError(f"qudit dimension must be an integer >= 2, got {self.d!r}")

    @property
    def omega(self) -> complex:
        return np.exp(2j * np.pi / self.d)


@dataclass(frozen=True)
class WeylOp:
    """The operator omega^p X^m Z^n, exponents taken mod the ambient dimension."""

    m: int
    n: int
    p: int = 0


IDENTITY = WeylOp(0, 0, 0)
X = WeylOp(1, 0, 0)
Z = WeylOp(0, 1, 0)


def weyl(m: int, n: int, p: int, dim: QuditDim) -> WeylOp:
    """Construct an operator with exponents reduced into [0, d)."""
    d = dim.d
    return WeylOp(m % d, n % d, p % d)


def validate(a: WeylOp, dim: QuditDim) -> None:
    """Raise if any exponent of ``a`` lies outside [0, d)."""
    d = dim.d
    for name, e in (("m", a.m), ("n", a.n), ("p", a.p)):
        if not 0 <= e < d:
            raise ValueError(f"exponent {name}={e} out of range for dimension {d}")


def compose(a: WeylOp, b: WeylOp, dim: QuditDim) -> WeylOp:
    """Normal-ordered product a*b.

    Moving b's shift factor through a's phase factor costs omega^(n_a * m_b):
    (m1,n1,p1)*(m2,n2,p2) = (m1+m2, n1+n2, p1+p2+n1*m2), all mod d.
    """
    validate(a, dim)
    validate(b, dim)
    d = dim.d
    return WeylOp((a.m + b.m) % d, (a.n + b.n) % d, (a.p + b.p + a.n * b.m) % d)


def inverse(a: WeylOp, dim: QuditDim) -> WeylOp:
    """Exact group inverse: compose(a, inverse(a)) == (0, 0, 0)."""
    validate(a, dim)
    d = dim.d
    return WeylOp(-a.m % d, -a.n % d, (a.n * a.m - a.p) % d)


def power(a: WeylOp, k: int, dim: QuditDim) -> WeylOp:
    """k-th power for k >= 0; the accumulated phase is n*m*k*(k-1)/2."""
    validate(a, dim)
    if k < 0:
        raise ValueError("power expects k >= 0; take inverse() first")
    d = dim.d
    return WeylOp((k * a.m) % d, (k * a.n) % d, (k * a.p + a.n * a.m * (k * (k - 1) // 2)) % d)


def proj_equal(a: WeylOp, b: WeylOp) -> bool:
    """Equality up to global phase (compares shift and phase exponents only)."""
    return a.m == b.m and a.n == b.n


def matrix(a: WeylOp, dim: QuditDim) -> np.ndarray:
    """Dense d x d unitary of ``a``: entry ((j+m) mod d, j) equals omega^(p + j*n)."""
    validate(a, dim)
    d = dim.d
    js = np.arange(d)
    out = np.zeros((d, d), dtype=complex)
    out[(js + a.m) % d, js] = np.exp(2j * np.pi * ((a.p + js * a.n) % d) / d)
    return out


def apply_to_basis(a: WeylOp, j: int, dim: QuditDim) -> tuple[int, int]:
    """Image of basis state |j>: returns (target index, phase exponent of omega)."""
    validate(a, dim)
    d = dim.d
    if not 0 <= j < d:
        raise ValueError(f"basis index {j} out of range for dimension {d}")
    return (j + a.m) % d, (a.p + j * a.n) % d
