"""Representation of the algebra on its Fock space /\\V.

A vecfor acts on /\\V by sqrt2 * (x_form _| u + x_vec ^ u); squaring that
action reproduces the neutral quadratic form exactly, so it extends to an
algebra map onto End(/\\V).  Blades lift by rep(x ^ A) = rep(x) rep(A) -
rep(x _| A).  The module also realizes the graded tensor split onto
Cl(V,b) (x) Cl(V,-b) for an arbitrary exact nondegenerate symmetric b and the
doubled-space dimension count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .hyperspace import (
    SymmetricForm,
    Vecfor,
    rho_b_split,
    vec_pairing,
    witt_basis,
)
from .multivector import AlgebraContext, Multivector, lcontract, wedge
from .scalar import ONE, SQRT2, ZERO, Scalar

MAX_END_ISO_DIM = 3  # rank of a 4^n x 4^n exact matrix beyond this is refused


def fock_basis(n: int) -> list[int]:
    """Blade masks of /\\V (subsets of e-generators) in (grade, lex) order."""
    return sorted(range(1 << n), key=lambda m: (m.bit_count(), m))


@dataclass(frozen=True)
class FockMatrix:
    """Exact endomorphism of /\\V in the (grade, lex) subset basis."""

    context: AlgebraContext
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        side = 1 << self.context.dim_n
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) != side or any(len(r) != side for r in rows):
            raise ValueError(f"expected a {side}x{side} matrix")

    @property
    def side(self) -> int:
        return 1 << self.context.dim_n

    def rows(self) -> linalg.Matrix:
        return [list(r) for r in self.entries]

    def __mul__(self, other: FockMatrix) -> FockMatrix:
        return FockMatrix(self.context, _tup(linalg.mat_mul(self.rows(), other.rows())))

    def __add__(self, other: FockMatrix) -> FockMatrix:
        return FockMatrix(self.context, _tup(linalg.mat_add(self.rows(), other.rows())))

    def __sub__(self, other: FockMatrix) -> FockMatrix:
        return self + other.scale(Scalar(-1))

    def scale(self, c: Scalar) -> FockMatrix:
        return FockMatrix(self.context, _tup(linalg.mat_scale(self.rows(), c)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockMatrix):
            return NotImplemented
        return self.context is other.context and self.entries == other.entries

    def to_json(self) -> dict:
        ctx = self.context
        order = [ctx.blade_name(m) for m in fock_basis(ctx.dim_n)]
        return {
            "dim": ctx.dim_n,
            "basis": order,
            "entries": linalg.matrix_to_json(self.rows()),
        }

    def to_csv_rows(self) -> list[list[str]]:
        ctx = self.context
        order = [ctx.blade_name(m) for m in fock_basis(ctx.dim_n)]
        out = [[""] + order]
        for label, row in zip(order, self.entries):
            out.append([label] + [str(x) for x in row])
        return out

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.to_csv_rows())
        return buf.getvalue()

    def __str__(self) -> str:
        return linalg.format_matrix(self.rows())


def _tup(rows: Sequence[Sequence[Scalar]]) -> tuple[tuple[Scalar, ...], ...]:
    return tuple(tuple(r) for r in rows)


def fock_identity(ctx: AlgebraContext) -> FockMatrix:
    return FockMatrix(ctx, _tup(linalg.identity(1 << ctx.dim_n)))


def _fock_vector_action(ctx: AlgebraContext, x: Vecfor) -> FockMatrix:
    """Matrix of u -> sqrt2 (x_form _| u + x_vec ^ u) on the subset basis."""
    n = ctx.dim_n
    basis = fock_basis(n)
    index = {m: i for i, m in enumerate(basis)}
    x_vec = Multivector(ctx, {1 << k: c for k, c in enumerate(x.vec) if c})
    x_form = Multivector(ctx, {1 << (n + k): c for k, c in enumerate(x.form) if c})
    side = 1 << n
    cols: list[list[Scalar]] = [[ZERO] * side for _ in range(side)]
    for j, mask in enumerate(basis):
        u = ctx.blade(mask)
        image = (lcontract(x_form, u) + wedge(x_vec, u)).scale(SQRT2)
        for m, c in image.terms.items():
            cols[j][index[m]] = c
    rows = [[cols[j][i] for j in range(side)] for i in range(side)]
    return FockMatrix(ctx, _tup(rows))


def clifford_map_matrix(ctx: AlgebraContext, x: Vecfor) -> FockMatrix:
    """Clifford map of a vecfor; squares to <x,x> times the identity."""
    if x.context is not ctx:
        raise ValueError("vecfor belongs to a different context")
    return _fock_vector_action(ctx, x)


class _RepCache:
    def __init__(self, ctx: AlgebraContext) -> None:
        self.ctx = ctx
        self.generators = [
            clifford_map_matrix(ctx, v).rows() for v in witt_basis(ctx)
        ]
        self.blades: dict[int, linalg.Matrix] = {0: linalg.identity(1 << ctx.dim_n)}

    def blade(self, mask: int) -> linalg.Matrix:
        hit = self.blades.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        g = low.bit_length() - 1
        rest = mask ^ low
        # rep(x ^ A) = rep(x) rep(A) - rep(x _| A)
        out = linalg.mat_mul(self.generators[g], self.blade(rest))
        for m2, c2 in self.ctx._gen_lc(g, rest):
            term = self.blade(m2)
            out = linalg.mat_add(out, linalg.mat_scale(term, Scalar(-c2)))
        self.blades[mask] = out
        return out


_rep_caches: dict[int, _RepCache] = {}


def _rep_cache(ctx: AlgebraContext) -> _RepCache:
    cache = _rep_caches.get(id(ctx))
    if cache is None or cache.ctx is not ctx:
        cache = _RepCache(ctx)
        _rep_caches[id(ctx)] = cache
    return cache


def rep(u: Multivector) -> FockMatrix:
    """Algebra map into End(/\\V): rep(uv) = rep(u) rep(v), rep(1) = identity."""
    ctx = u.context
    cache = _rep_cache(ctx)
    side = 1 << ctx.dim_n
    acc = linalg.zeros(side, side)
    for mask, coeff in u.terms.items():
        acc = linalg.mat_add(acc, linalg.mat_scale(cache.blade(mask), coeff))
    return FockMatrix(ctx, _tup(acc))


def verify_end_iso(n: int) -> dict:
    """Exact rank of the flattened blade images; isomorphism iff rank == 4^n."""
    if not 1 <= n <= MAX_END_ISO_DIM:
        raise ValueError(f"verify_end_iso supports 1 <= n <= {MAX_END_ISO_DIM}, got {n}")
    ctx = AlgebraContext(n)
    cache = _rep_cache(ctx)
    rows = []
    for mask in range(1 << (2 * n)):
        m = cache.blade(mask)
        rows.append([x for row in m for x in row])
    r = linalg.rank(rows)
    return {"rank": r, "is_isomorphism": r == 1 << (2 * n)}


def even_odd_block_structure(n: int) -> bool:
    """Even blades act block-diagonally on the (even, odd) split of /\\V and
    odd blades act block-antidiagonally."""
    if not 1 <= n <= MAX_END_ISO_DIM:
        raise ValueError(f"supported for 1 <= n <= {MAX_END_ISO_DIM}, got {n}")
    ctx = AlgebraContext(n)
    cache = _rep_cache(ctx)
    basis = fock_basis(n)
    parity = [m.bit_count() & 1 for m in basis]
    for mask in range(1 << (2 * n)):
        m = cache.blade(mask)
        blade_parity = mask.bit_count() & 1
        for i in range(len(basis)):
            for j in range(len(basis)):
                crosses = parity[i] != parity[j]
                if blade_parity == 0 and crosses and m[i][j]:
                    return False
                if blade_parity == 1 and not crosses and m[i][j]:
                    return False
    return True


def grandmother_dimension_check(n: int = 1) -> bool:
    """Re-run the End iso on the doubled space: rank must be 16^n = (2^{2n})^2."""
    if not 1 <= n <= 2:
        raise ValueError(f"doubled-space check is too large for n = {n}; use n <= 2")
    report = verify_end_iso(2 * n)
    return report["rank"] == 1 << (4 * n) and report["is_isomorphism"]


# -- graded tensor split -------------------------------------------------------

GtElement = dict[tuple[int, int], Scalar]  # (left blade, right blade) -> coefficient


def _diag_blade_product(a: int, b: int, metric: Sequence[Scalar]) -> tuple[int, Scalar]:
    """Blade product in a diagonal-metric Clifford algebra: sign and metric factors."""
    sign = 1
    total = 0
    # count swaps: pairs (i in a, j in b) with i > j
    rest = b
    while rest:
        low = rest & -rest
        total += (a >> low.bit_length()).bit_count()
        rest ^= low
    if total & 1:
        sign = -1
    coeff = Scalar(sign)
    common = a & b
    while common:
        low = common & -common
        coeff = coeff * metric[low.bit_length() - 1]
        common ^= low
    return a ^ b, coeff


def gt_unit() -> GtElement:
    return {(0, 0): ONE}


def gt_scale(u: GtElement, c: Scalar) -> GtElement:
    return {k: c * v for k, v in u.items() if c * v}


def gt_add(u: GtElement, v: GtElement) -> GtElement:
    out = dict(u)
    for k, c in v.items():
        acc = out.get(k)
        s = c if acc is None else acc + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def gt_mul(u: GtElement, v: GtElement, metric: Sequence[Scalar]) -> GtElement:
    """Graded tensor product algebra: (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd,
    with both factors diagonal-metric Clifford algebras (right factor negated)."""
    neg_metric = [-m for m in metric]
    out: GtElement = {}
    for (la, ra), ca in u.items():
        for (lb, rb), cb in v.items():
            sign = -1 if (ra.bit_count() & 1) and (lb.bit_count() & 1) else 1
            lm, lc = _diag_blade_product(la, lb, metric)
            rm, rc = _diag_blade_product(ra, rb, neg_metric)
            c = ca * cb * lc * rc
            if sign < 0:
                c = -c
            if not c:
                continue
            key = (lm, rm)
            acc = out.get(key)
            s = c if acc is None else acc + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def gt_eq(u: GtElement, v: GtElement) -> bool:
    return {k: c for k, c in u.items() if c} == {k: c for k, c in v.items() if c}


def tensor_split_check(b: SymmetricForm, ctx: AlgebraContext) -> bool:
    """Verify the Clifford map x -> x_plus (x) 1 + 1 (x) x_minus into
    Cl(V,b) (x) Cl(V,-b) satisfies the anticommutation contract
    rho(x) rho(y) + rho(y) rho(x) = 2 <x,y> (1 (x) 1) on the Witt basis."""
    n = ctx.dim_n
    if b.dim != n:
        raise ValueError("form dimension does not match the context")
    q, d = linalg.congruence_diagonalize([list(r) for r in b.matrix])
    metric = [d[i][i] for i in range(n)]
    q_inv = linalg.inverse(q)

    def rho(x: Vecfor) -> GtElement:
        plus, minus = rho_b_split(b, x)
        plus_f = linalg.mat_vec(q_inv, list(plus))
        minus_f = linalg.mat_vec(q_inv, list(minus))
        out: GtElement = {}
        for k, c in enumerate(plus_f):
            if c:
                out = gt_add(out, {(1 << k, 0): c})
        for k, c in enumerate(minus_f):
            if c:
                out = gt_add(out, {(0, 1 << k): c})
        return out

    basis = witt_basis(ctx)
    for x in basis:
        for y in basis:
            lhs = gt_add(gt_mul(rho(x), rho(y), metric), gt_mul(rho(y), rho(x), metric))
            rhs = gt_scale(gt_unit(), Scalar(2) * vec_pairing(x, y))
            if not gt_eq(lhs, rhs):
                return False
    return True
