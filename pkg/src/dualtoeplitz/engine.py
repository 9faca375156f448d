"""Dual Toeplitz operators on the complement of the harmonic functions.

The operator with symbol phi sends f to the complement projection of phi*f.
This module applies it exactly, builds the truncated monomial bases
e_{n,m} = (I - Q)(z^n conj(z)^m) for 1 <= n, m <= N, and assembles the exact
quadratic-form matrices used by the classifier: the self-commutator form and
the commutator pairing of two symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._backend import kernel
from .algebra import Element, GaussianRational, complement_project, inner_product
from .matrix import ExactMatrix


def apply(phi: Element, f: Element) -> Element:
    """S_phi f: complement projection of the pointwise product phi*f."""
    return Element._wrap(kernel.terms_apply(phi._terms, f._terms))


def adjoint_symbol(phi: Element) -> Element:
    """Symbol of the adjoint operator: the complex conjugate of phi."""
    return phi.conjugate()


def test_vector(k: int) -> Element:
    """The probe vector (I-Q)(z^k conj z) = z^k conj(z) - (k/(k+1)) z^(k-1), k >= 1."""
    if k < 1:
        raise ValueError("test vectors need k >= 1 (k=0 collapses to zero)")
    return Element._wrap(
        {(k, 1): kernel.GR_ONE, (k - 1, 0): GaussianRational(Fraction(-k, k + 1))}
    )


def q_value(phi: Element, f: Element) -> Fraction:
    """|S_phi f|^2 - |S_conj(phi) f|^2, the self-commutator form at f. Exact and real."""
    u = apply(phi, f)
    v = apply(adjoint_symbol(phi), f)
    value = inner_product(u, u) - inner_product(v, v)
    # both summands are squared norms, so the value is a plain rational
    return value.re


@dataclass(frozen=True)
class TruncatedBasis:
    """Complement basis e_{n,m}, 1 <= n, m <= N, in lexicographic (n, m) order."""

    order: int
    pairs: tuple[tuple[int, int], ...]
    vectors: tuple[Element, ...]
    swap: tuple[int, ...] = field(repr=False)

    def index(self, n: int, m: int) -> int:
        if not (1 <= n <= self.order and 1 <= m <= self.order):
            raise ValueError("exponents out of range for this basis")
        return (n - 1) * self.order + (m - 1)

    def vector(self, n: int, m: int) -> Element:
        return self.vectors[self.index(n, m)]

    def __len__(self) -> int:
        return len(self.vectors)


def build_basis(order: int) -> TruncatedBasis:
    """Basis of span{e_{n,m}}: conjugation acts by the swap permutation sigma."""
    if order < 1:
        raise ValueError("basis order must be >= 1")
    pairs = tuple((n, m) for n in range(1, order + 1) for m in range(1, order + 1))
    vectors = tuple(complement_project(Element.monomial(n, m)) for n, m in pairs)
    swap = tuple((m - 1) * order + (n - 1) for n, m in pairs)
    return TruncatedBasis(order=order, pairs=pairs, vectors=vectors, swap=swap)


def selfcomm_form_matrix(phi: Element, order: int) -> ExactMatrix:
    """Hermitian matrix A with A[i][j] = <S e_j, S e_i> - <S* e_j, S* e_i>.

    For f = sum c_j e_j the form value c* A c equals q_value(phi, f); the
    operator is hyponormal on the truncated span iff A is PSD.
    """
    basis = build_basis(order)
    psi = adjoint_symbol(phi)
    u = [apply(phi, e) for e in basis.vectors]
    v = [apply(psi, e) for e in basis.vectors]
    size = len(basis)
    a = ExactMatrix.zeros(size, size)
    for i in range(size):
        for j in range(i, size):
            entry = inner_product(u[j], u[i]) - inner_product(v[j], v[i])
            a.data[i][j] = entry
            if i != j:
                a.data[j][i] = entry.conjugate()
    return a


def commutator_matrix(phi: Element, psi: Element, order: int) -> ExactMatrix:
    """Pairing B[i][j] = <(S_phi S_psi - S_psi S_phi) e_j, e_i> on the basis."""
    basis = build_basis(order)
    w = [
        apply(phi, apply(psi, e)) - apply(psi, apply(phi, e))
        for e in basis.vectors
    ]
    size = len(basis)
    return ExactMatrix.build(
        size, size, lambda i, j: inner_product(w[j], basis.vectors[i])
    )


def commutator_range_gram(phi: Element, psi: Element, order: int) -> ExactMatrix:
    """Gram matrix of the commutator outputs g_j; its rank is dim span{g_j}."""
    basis = build_basis(order)
    w = [
        apply(phi, apply(psi, e)) - apply(psi, apply(phi, e))
        for e in basis.vectors
    ]
    size = len(basis)
    g = ExactMatrix.zeros(size, size)
    for i in range(size):
        for j in range(i, size):
            entry = inner_product(w[j], w[i])
            g.data[i][j] = entry
            if i != j:
                g.data[j][i] = entry.conjugate()
    return g
