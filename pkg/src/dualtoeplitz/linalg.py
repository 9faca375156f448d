"""Exact linear algebra over the Gaussian rationals.

PSD decisions run a symmetric-pivoted LDL^T elimination on the realified form
and, when the form is indefinite, reconstruct an exact rational witness vector
by back substitution; ranks come from fraction-free (Bareiss) elimination.
No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ._backend import kernel
from .matrix import ExactMatrix

GaussianRational = kernel.GaussianRational
_ZERO = kernel.GR_ZERO
_ONE = kernel.GR_ONE


class HermitianForm:
    """An ExactMatrix checked to be Hermitian at construction."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: ExactMatrix):
        if not matrix.is_hermitian():
            raise ValueError("matrix is not Hermitian")
        self.matrix = matrix

    @property
    def size(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class PsdResult:
    """Outcome of the PSD test: PSD with the complex rank, or a strict witness."""

    is_psd: bool
    rank: int | None = None
    witness: list[GaussianRational] | None = None
    value: Fraction | None = None


def realify(h: HermitianForm | ExactMatrix) -> ExactMatrix:
    """Real symmetric [[X, -Y], [Y, X]] for the Hermitian matrix X + iY.

    Positive semidefiniteness is preserved and the rank exactly doubles.
    """
    m = h.matrix if isinstance(h, HermitianForm) else h
    n = m.rows
    out = ExactMatrix.zeros(2 * n, 2 * n)
    for i in range(n):
        for j in range(n):
            c = m.data[i][j]
            x = GaussianRational(c.re)
            y = GaussianRational(c.im)
            out.data[i][j] = x
            out.data[n + i][n + j] = x
            out.data[i][n + j] = -y
            out.data[n + i][j] = y
    return out


def form_value(matrix: ExactMatrix, vec: list[GaussianRational]) -> GaussianRational:
    """c* A c with the conjugation on the row index."""
    total = _ZERO
    for i in range(matrix.rows):
        ci = vec[i]
        if ci.is_zero:
            continue
        row = matrix.data[i]
        acc = _ZERO
        for j in range(matrix.cols):
            cj = vec[j]
            if cj.is_zero:
                continue
            acc = acc + row[j] * cj
        total = total + ci.conjugate() * acc
    return total


def _abs_gt(a: GaussianRational, b: GaussianRational) -> bool:
    # |a| > |b| for real scalars; denominators are positive
    return abs(a.num_re) * b.den > abs(b.num_re) * a.den


def psd_test(form: HermitianForm | ExactMatrix) -> PsdResult:
    """Exact PSD decision for a Hermitian form.

    Runs pivoted LDL^T on the realified matrix: PSD iff every pivot is positive
    and the final residual is zero.  A negative diagonal, or a zero diagonal
    facing a nonzero off-diagonal entry, yields a witness c with c* h c < 0.
    """
    if isinstance(form, ExactMatrix):
        form = HermitianForm(form)
    n = form.size
    r = realify(form)
    m = r.copy_data()
    size = 2 * n
    active = list(range(size))
    # each step: (pivot index p, pivot value, multipliers {i: M[i][p]/pivot})
    steps: list[tuple[int, GaussianRational, dict[int, GaussianRational]]] = []

    while active:
        neg = None
        best = None
        for i in active:
            s = m[i][i].real_sign()
            if s < 0:
                neg = i
                break
            if s > 0 and (best is None or _abs_gt(m[i][i], m[best][best])):
                best = i
        if neg is not None:
            return _indefinite(form, steps, {neg: _ONE}, n)
        if best is None:
            # all remaining diagonals are zero: PSD iff the residual vanishes
            for a_pos, i in enumerate(active):
                for j in active[a_pos + 1 :]:
                    c = m[i][j]
                    if not c.is_zero:
                        # residual block [[0, c], [c, 0]] takes the value -2
                        return _indefinite(
                            form, steps, {i: -c.inverse(), j: _ONE}, n
                        )
            # the realified rank is exactly twice the complex rank
            return PsdResult(is_psd=True, rank=len(steps) // 2)
        p = best
        pivot = m[p][p]
        active.remove(p)
        col = {}
        for i in active:
            e = m[i][p]
            if not e.is_zero:
                col[i] = e / pivot
        steps.append((p, pivot, col))
        support = list(col)
        for i in support:
            ci_pivot = col[i] * pivot
            row_i = m[i]
            for j in support:
                row_i[j] = row_i[j] - ci_pivot * col[j]
    return PsdResult(is_psd=True, rank=len(steps) // 2)


def _indefinite(
    form: HermitianForm,
    steps: list[tuple[int, GaussianRational, dict[int, GaussianRational]]],
    residual_dir: dict[int, GaussianRational],
    n: int,
) -> PsdResult:
    # extend the residual direction to x with v_t . x = 0 for every earlier
    # pivot vector v_t (v_t[p]=1 plus the stored multipliers); then
    # x^T realify x = residual value.
    x: dict[int, GaussianRational] = dict(residual_dir)
    for p, _pivot, col in reversed(steps):
        acc = _ZERO
        for i, c in col.items():
            xi = x.get(i)
            if xi is not None:
                acc = acc + c * xi
        if not acc.is_zero:
            x[p] = -acc
    # fold the real coordinate pair (k, n+k) back into one complex coordinate
    witness = []
    for k in range(n):
        xr = x.get(k, _ZERO)
        xi = x.get(n + k, _ZERO)
        witness.append(GaussianRational(xr.re, xi.re))
    value = form_value(form.matrix, witness)
    if not value.is_real or value.real_sign() >= 0:
        raise RuntimeError("witness reconstruction failed; this is a bug")
    return PsdResult(is_psd=False, witness=witness, value=value.re)


def rank(m: ExactMatrix) -> int:
    """Exact rank by fraction-free Gaussian elimination.

    Rows are scaled to Gaussian-integer entries first, so every division in
    the Bareiss update is exact.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    data = []
    for row in m.data:
        scale = 1
        for c in row:
            scale = lcm(scale, c.den)
        data.append([c._mul_int_ratio(scale, 1) for c in row])
    rows, cols = m.rows, m.cols
    prev = _ONE
    r = 0
    for col in range(cols):
        if r == rows:
            break
        piv_row = None
        for i in range(r, rows):
            if not data[i][col].is_zero:
                piv_row = i
                break
        if piv_row is None:
            continue
        if piv_row != r:
            data[r], data[piv_row] = data[piv_row], data[r]
        pivot = data[r][col]
        for i in range(r + 1, rows):
            kernel.bareiss_row(data[i], data[r], pivot, data[i][col], prev, col + 1, cols)
            data[i][col] = _ZERO
        prev = pivot
        r += 1
    return r


def is_antisymmetric(m: ExactMatrix) -> bool:
    """Exact check of M^T == -M (implies even rank over any field)."""
    if m.rows != m.cols:
        return False
    for i in range(m.rows):
        for j in range(i, m.rows):
            if m.data[i][j] != -m.data[j][i]:
                return False
    return True
