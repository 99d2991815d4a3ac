"""Endomorphisms of V and their isotropic extensions to V + V*.

Linear maps are stored as exact matrices in the Witt basis (the dual map on
V* is the transpose, so isotropic extensions are block-diagonal); sigma-basis
views are computed on demand through the exact change-of-basis matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .hyperspace import Subspace, Vecfor, _scalars
from .multivector import AlgebraContext
from .scalar import INV_SQRT2, ONE, ZERO, Scalar

ScalarLike = Scalar | int | Fraction


@dataclass(frozen=True)
class LinMapV:
    """Endomorphism of V in the e-basis: column j is the image of e_{j+1}."""

    context: AlgebraContext
    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        n = self.context.dim_n
        rows = tuple(_scalars(row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected an {n}x{n} matrix")

    def rows(self) -> linalg.Matrix:
        return [list(r) for r in self.matrix]

    def __str__(self) -> str:
        return linalg.format_matrix(self.rows())

    def apply(self, v: Sequence[Scalar]) -> list[Scalar]:
        return linalg.mat_vec(self.rows(), list(v))

    def compose(self, other: LinMapV) -> LinMapV:
        return LinMapV(self.context, _rows_to_tuple(linalg.mat_mul(self.rows(), other.rows())))

    def det(self) -> Scalar:
        return linalg.determinant(self.rows())

    def trace(self) -> Scalar:
        return sum((self.matrix[i][i] for i in range(len(self.matrix))), ZERO)

    def rank(self) -> int:
        return linalg.rank(self.rows())

    def kernel(self) -> Subspace:
        return Subspace(self.context, "V", tuple(tuple(v) for v in linalg.kernel_basis(self.rows())))

    def image(self) -> Subspace:
        cols = linalg.transpose(self.rows())
        ech, pivots = linalg.row_echelon(cols)
        return Subspace(self.context, "V", tuple(tuple(ech[i]) for i in range(len(pivots))))


@dataclass(frozen=True)
class LinMapVDual:
    """Endomorphism of V* in the t-basis (covector coordinates)."""

    context: AlgebraContext
    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        n = self.context.dim_n
        rows = tuple(_scalars(row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected an {n}x{n} matrix")

    def rows(self) -> linalg.Matrix:
        return [list(r) for r in self.matrix]

    def apply(self, form: Sequence[Scalar]) -> list[Scalar]:
        return linalg.mat_vec(self.rows(), list(form))

    def det(self) -> Scalar:
        return linalg.determinant(self.rows())

    def trace(self) -> Scalar:
        return sum((self.matrix[i][i] for i in range(len(self.matrix))), ZERO)

    def kernel(self) -> Subspace:
        return Subspace(
            self.context, "V_dual", tuple(tuple(v) for v in linalg.kernel_basis(self.rows()))
        )

    def image(self) -> Subspace:
        cols = linalg.transpose(self.rows())
        ech, pivots = linalg.row_echelon(cols)
        return Subspace(self.context, "V_dual", tuple(tuple(ech[i]) for i in range(len(pivots))))

    def dual(self) -> LinMapV:
        return LinMapV(self.context, _rows_to_tuple(linalg.transpose(self.rows())))


@dataclass(frozen=True)
class HEndo:
    """Endomorphism of V + V* as an exact 2n x 2n matrix in the Witt basis."""

    context: AlgebraContext
    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        m = 2 * self.context.dim_n
        rows = tuple(_scalars(row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != m or any(len(r) != m for r in rows):
            raise ValueError(f"expected a {m}x{m} matrix")

    def rows(self) -> linalg.Matrix:
        return [list(r) for r in self.matrix]

    def apply(self, x: Vecfor) -> Vecfor:
        n = self.context.dim_n
        coords = list(x.vec) + list(x.form)
        out = linalg.mat_vec(self.rows(), coords)
        return Vecfor(self.context, tuple(out[:n]), tuple(out[n:]))

    def compose(self, other: HEndo) -> HEndo:
        return HEndo(self.context, _rows_to_tuple(linalg.mat_mul(self.rows(), other.rows())))

    def is_block_diagonal(self) -> bool:
        n = self.context.dim_n
        for i in range(2 * n):
            for j in range(2 * n):
                if (i < n) != (j < n) and self.matrix[i][j]:
                    return False
        return True

    def adjoint(self) -> HEndo:
        """Dual with respect to the neutral pairing: G^-1 F^T G with G the Witt Gram."""
        g = [[ONE if v else ZERO for v in row] for row in self.context._gram_int]
        ft = linalg.transpose(self.rows())
        return HEndo(self.context, _rows_to_tuple(linalg.mat_mul(linalg.mat_mul(g, ft), g)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HEndo):
            return NotImplemented
        return self.context is other.context and self.matrix == other.matrix

    def __str__(self) -> str:
        return linalg.format_matrix(self.rows())

    def to_json(self) -> list[list[dict]]:
        return linalg.matrix_to_json(self.rows())


def _rows_to_tuple(rows: Sequence[Sequence[Scalar]]) -> tuple[tuple[Scalar, ...], ...]:
    return tuple(tuple(r) for r in rows)


def identity_map(ctx: AlgebraContext) -> LinMapV:
    return LinMapV(ctx, _rows_to_tuple(linalg.identity(ctx.dim_n)))


def identity_hendo(ctx: AlgebraContext) -> HEndo:
    return HEndo(ctx, _rows_to_tuple(linalg.identity(2 * ctx.dim_n)))


def dual_map(phi: LinMapV) -> LinMapVDual:
    """(phi* alpha)(x) = alpha(phi x); the t-basis matrix is the transpose."""
    return LinMapVDual(phi.context, _rows_to_tuple(linalg.transpose(phi.rows())))


def isotropic_extension(phi: LinMapV) -> HEndo:
    """I(phi) = phi (+) phi*: block-diagonal on V + V*."""
    n = phi.context.dim_n
    dual = dual_map(phi)
    rows = []
    for i in range(n):
        rows.append(tuple(phi.matrix[i]) + tuple([ZERO] * n))
    for i in range(n):
        rows.append(tuple([ZERO] * n) + tuple(dual.matrix[i]))
    return HEndo(phi.context, tuple(rows))


def vecfor_endo(x: Vecfor) -> LinMapV:
    """Rank <= 1 map y -> x_form(y) * x_vec."""
    n = x.context.dim_n
    rows = tuple(tuple(x.vec[i] * x.form[j] for j in range(n)) for i in range(n))
    return LinMapV(x.context, rows)


class NullVecforError(ValueError):
    """Projection/reflection requested for a null vecfor (x_form(x_vec) = 0)."""


def projection(x: Vecfor) -> HEndo:
    """Hyperbolic projection P_x (+) P^x; requires a non-null x."""
    q = x.self_pairing()
    if not q:
        raise NullVecforError("projection is undefined for a null vecfor")
    n = x.context.dim_n
    inv = q.inverse()
    p = LinMapV(
        x.context, tuple(tuple(inv * x.vec[i] * x.form[j] for j in range(n)) for i in range(n))
    )
    return isotropic_extension(p)


def reflection(x: Vecfor) -> HEndo:
    """Hyperbolic reflection R_x (+) R^x; requires a non-null x."""
    q = x.self_pairing()
    if not q:
        raise NullVecforError("reflection is undefined for a null vecfor")
    n = x.context.dim_n
    inv = q.inverse()
    two = Scalar(2)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            val = -(two * inv * x.vec[i] * x.form[j])
            if i == j:
                val = val + ONE
            row.append(val)
        rows.append(tuple(row))
    return isotropic_extension(LinMapV(x.context, tuple(rows)))


def witt_to_sigma_matrix(ctx: AlgebraContext) -> linalg.Matrix:
    """Columns are the sigma basis vectors in Witt coordinates."""
    n = ctx.dim_n
    m = linalg.zeros(2 * n, 2 * n)
    for k in range(n):
        m[k][k] = INV_SQRT2
        m[n + k][k] = INV_SQRT2
        m[k][n + k] = -INV_SQRT2
        m[n + k][n + k] = INV_SQRT2
    return m


def endo_matrix_sigma(f: HEndo) -> linalg.Matrix:
    """Matrix of f in the sigma basis: C^-1 (matrix) C."""
    c = witt_to_sigma_matrix(f.context)
    c_inv = linalg.inverse(c)
    return linalg.mat_mul(linalg.mat_mul(c_inv, f.rows()), c)


def hyperplane_representation(
    ctx: AlgebraContext, alpha: Sequence[ScalarLike], a: ScalarLike = 1
) -> tuple[list[tuple[Scalar, ...]], tuple[Scalar, ...]]:
    """Hyperplane pair of a covector: a basis of {alpha = 0} plus one point with
    alpha(point) = a, solved deterministically with pivot order e1..en so the
    returned point scales exactly by 1/c when alpha is scaled by c."""
    form = _scalars(alpha)
    aval = a if isinstance(a, Scalar) else Scalar(a)
    n = ctx.dim_n
    if len(form) != n:
        raise ValueError(f"expected {n} covector components")
    pivot = next((j for j, c in enumerate(form) if c), None)
    if pivot is None:
        raise ValueError("zero covector has no hyperplane pair")
    inv = form[pivot].inverse()
    basis = []
    for j in range(n):
        if j == pivot:
            continue
        row = [ZERO] * n
        row[j] = ONE
        row[pivot] = -(form[j] * inv)
        basis.append(tuple(row))
    point = [ZERO] * n
    point[pivot] = aval * inv
    return basis, tuple(point)
