"""Seeded randomized identity suites over the whole library.

Each suite bundles the exact (zero-tolerance) laws of one slice of the
algebra; the runner draws seeded random operands per identity, so identical
(seed, n, trials) always produce identical report bytes.  A failing identity
reports a substituted counterexample in expression syntax where one exists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import linalg
from .endo import (
    LinMapV,
    NullVecforError,
    dual_map,
    endo_matrix_sigma,
    hyperplane_representation,
    identity_hendo,
    isotropic_extension,
    projection,
    reflection,
    vecfor_endo,
)
from .fock import (
    clifford_map_matrix,
    even_odd_block_structure,
    grandmother_dimension_check,
    rep,
    tensor_split_check,
    verify_end_iso,
)
from .hyperspace import (
    Subspace,
    SymmetricForm,
    Vecfor,
    bracket,
    classify,
    conjugate,
    hv_vecfor,
    identity_form,
    isotropic_extension_of,
    null_subspace,
    orientation_from_dual_pair,
    reciprocal_basis,
    rho_b_pairing,
    second_order_basis,
    second_order_pairing,
    sigma_basis,
    sigma_components,
    sigma_image_basis,
    sigma_reconstruct,
    subspace_intersection,
    subspace_sum,
    vec_pairing,
    wedge_all,
    witt_basis,
)
from .ideals import (
    conjugated_module_action,
    e_star,
    ideal_span,
    minimality_check,
    module_action,
    module_action_formula,
    theta_star,
)
from .multivector import (
    AlgebraContext,
    Multivector,
    bilinear,
    differential_apply,
    gp,
    hodge,
    hodge_inv,
    lcontract,
    poincare_iso,
    rcontract,
    wedge,
)
from .scalar import INV_SQRT2, ONE, ZERO, Scalar

SUITE_NAMES = ("contractions", "products", "hodge", "witt", "endo", "ideals")
RANK_SUITES = ("products", "ideals")  # these build exact 4^n-sized spans
MAX_SUITE_DIM = 4
MAX_RANK_SUITE_DIM = 3


# -- random generators -----------------------------------------------------------


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-8, 8), rng.randint(1, 8))


def random_scalar(rng: random.Random) -> Scalar:
    if rng.random() < 0.25:
        return Scalar(random_rational(rng), random_rational(rng))
    return Scalar(random_rational(rng))


def random_multivector(
    ctx: AlgebraContext,
    rng: random.Random,
    density: float | None = None,
    support_mask: int | None = None,
    no_scalar: bool = False,
) -> Multivector:
    """Blade density is capped at 50%, thinned further for larger n."""
    if density is None:
        density = min(0.5, 6 / (1 << ctx.num_generators))
    masks = range(1 << ctx.num_generators)
    terms = {}
    for m in masks:
        if support_mask is not None and m & ~support_mask:
            continue
        if no_scalar and m == 0:
            continue
        if rng.random() < density:
            terms[m] = random_scalar(rng)
    return Multivector(ctx, terms)


def random_blade_mv(ctx: AlgebraContext, rng: random.Random, grade: int, support_mask: int) -> Multivector:
    """Random homogeneous element of the given grade inside a generator mask."""
    gens = [g for g in range(ctx.num_generators) if support_mask >> g & 1]
    terms = {}
    for _ in range(max(1, rng.randint(1, 2))):
        if grade > len(gens):
            break
        chosen = rng.sample(gens, grade)
        mask = 0
        for g in chosen:
            mask |= 1 << g
        terms[mask] = random_scalar(rng)
    return Multivector(ctx, terms)


def random_vecfor(ctx: AlgebraContext, rng: random.Random) -> Vecfor:
    n = ctx.dim_n
    return Vecfor(
        ctx,
        tuple(random_scalar(rng) if rng.random() < 0.8 else ZERO for _ in range(n)),
        tuple(random_scalar(rng) if rng.random() < 0.8 else ZERO for _ in range(n)),
    )


def random_nonnull_vecfor(ctx: AlgebraContext, rng: random.Random) -> Vecfor:
    while True:
        x = random_vecfor(ctx, rng)
        if x.self_pairing():
            return x


def random_linmap(ctx: AlgebraContext, rng: random.Random) -> LinMapV:
    n = ctx.dim_n
    return LinMapV(
        ctx, tuple(tuple(Scalar(random_rational(rng)) for _ in range(n)) for _ in range(n))
    )


def random_invertible_matrix(n: int, rng: random.Random) -> list[list[Scalar]]:
    while True:
        m = [[Scalar(random_rational(rng)) for _ in range(n)] for _ in range(n)]
        if linalg.determinant(m):
            return m


def random_symmetric_form(n: int, rng: random.Random) -> SymmetricForm:
    while True:
        m = [[Scalar(random_rational(rng)) for _ in range(n)] for _ in range(n)]
        sym = [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]
        if linalg.determinant(sym):
            return SymmetricForm(tuple(tuple(row) for row in sym))


def random_subspace(ctx: AlgebraContext, rng: random.Random, ambient: str = "V") -> Subspace:
    n = ctx.dim_n
    dim = rng.randint(0, n)
    rows: list[list[Scalar]] = []
    while len(rows) < dim:
        cand = [Scalar(random_rational(rng)) for _ in range(n)]
        if linalg.rank(rows + [cand]) > len(rows):
            rows.append(cand)
    return Subspace(ctx, ambient, tuple(tuple(r) for r in rows))


# -- identity registry --------------------------------------------------------------


@dataclass
class Identity:
    suite: str
    name: str
    fn: Callable[[AlgebraContext, random.Random], Optional[str]]
    per_trial: bool = True
    min_n: int = 1
    max_n: int = MAX_SUITE_DIM


IDENTITIES: list[Identity] = []


def identity(suite: str, name: str, per_trial: bool = True, min_n: int = 1, max_n: int = MAX_SUITE_DIM):
    def wrap(fn):
        IDENTITIES.append(Identity(suite, name, fn, per_trial, min_n, max_n))
        return fn

    return wrap


def _p(u) -> str:
    return f"({u})"


def _fail(template: str, **vals) -> str:
    bind = "; ".join(f"{k}={_p(v)}" for k, v in vals.items())
    return f"{template} with {bind}"


def _expect_zero(diff: Multivector, template: str, **vals) -> Optional[str]:
    if diff.is_zero():
        return None
    return _fail(template, **vals)


def _expect_scalar_zero(diff: Scalar, template: str, **vals) -> Optional[str]:
    if not diff:
        return None
    return _fail(template, **vals)


# ---- contractions suite (interior products and the differential) ------------------


@identity("contractions", "grade-involution passes through _| and |_")
def _contr_grade_inv(ctx, rng):
    u = random_multivector(ctx, rng)
    v = random_multivector(ctx, rng)
    lhs = lcontract(u, v).grade_involution() - lcontract(u.grade_involution(), v.grade_involution())
    rhs = rcontract(u, v).grade_involution() - rcontract(u.grade_involution(), v.grade_involution())
    return _expect_zero(lhs + rhs, "'(u _| v) - ('u _| 'v) + '(u |_ v) - ('u |_ 'v)", u=u, v=v)


@identity("contractions", "reversion swaps the contractions")
def _contr_reversion(ctx, rng):
    # the defining adjoints force ~(u _| v) = ~v |_ ~u (and the mirror image)
    u = random_multivector(ctx, rng)
    v = random_multivector(ctx, rng)
    lhs = lcontract(u, v).reversion() - rcontract(v.reversion(), u.reversion())
    rhs = rcontract(u, v).reversion() - lcontract(v.reversion(), u.reversion())
    return _expect_zero(lhs + rhs, "~(u _| v) - (~v |_ ~u) + ~(u |_ v) - (~v _| ~u)", u=u, v=v)


@identity("contractions", "u _| (v _| w) = (u ^ v) _| w")
def _contr_lc_compose(ctx, rng):
    u, v, w = (random_multivector(ctx, rng) for _ in range(3))
    return _expect_zero(
        lcontract(u, lcontract(v, w)) - lcontract(wedge(u, v), w),
        "u _| (v _| w) - (u ^ v) _| w",
        u=u, v=v, w=w,
    )


@identity("contractions", "(u |_ v) |_ w = u |_ (v ^ w)")
def _contr_rc_compose(ctx, rng):
    u, v, w = (random_multivector(ctx, rng) for _ in range(3))
    return _expect_zero(
        rcontract(rcontract(u, v), w) - rcontract(u, wedge(v, w)),
        "(u |_ v) |_ w - u |_ (v ^ w)",
        u=u, v=v, w=w,
    )


@identity("contractions", "(u _| v) |_ w = u _| (v |_ w)")
def _contr_mixed_assoc(ctx, rng):
    u, v, w = (random_multivector(ctx, rng) for _ in range(3))
    return _expect_zero(
        rcontract(lcontract(u, v), w) - lcontract(u, rcontract(v, w)),
        "(u _| v) |_ w - u _| (v |_ w)",
        u=u, v=v, w=w,
    )


@identity("contractions", "x _| (u ^ v) = (x _| u) ^ v + 'u ^ (x _| v)")
def _contr_lc_leibniz(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    lhs = lcontract(x, wedge(u, v))
    rhs = wedge(lcontract(x, u), v) + wedge(u.grade_involution(), lcontract(x, v))
    return _expect_zero(lhs - rhs, "x _| (u ^ v) - (x _| u) ^ v - 'u ^ (x _| v)", x=x, u=u, v=v)


@identity("contractions", "(u ^ v) |_ x = u ^ (v |_ x) + (u |_ x) ^ 'v")
def _contr_rc_leibniz(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    lhs = rcontract(wedge(u, v), x)
    rhs = wedge(u, rcontract(v, x)) + wedge(rcontract(u, x), v.grade_involution())
    return _expect_zero(lhs - rhs, "(u ^ v) |_ x - u ^ (v |_ x) - (u |_ x) ^ 'v", x=x, u=u, v=v)


@identity("contractions", "x ^ (u _| v) = 'u _| (x ^ v) - ('u |_ x) _| v")
def _contr_wedge_lc_exchange(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    gu = u.grade_involution()
    lhs = wedge(x, lcontract(u, v))
    rhs = lcontract(gu, wedge(x, v)) - lcontract(rcontract(gu, x), v)
    return _expect_zero(lhs - rhs, "x ^ (u _| v) - 'u _| (x ^ v) + ('u |_ x) _| v", x=x, u=u, v=v)


@identity("contractions", "(u |_ v) ^ x = (u ^ x) |_ 'v - u |_ (x _| 'v)")
def _contr_rc_wedge_exchange(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    gv = v.grade_involution()
    lhs = wedge(rcontract(u, v), x)
    rhs = rcontract(wedge(u, x), gv) - rcontract(u, lcontract(x, gv))
    return _expect_zero(lhs - rhs, "(u |_ v) ^ x - (u ^ x) |_ 'v + u |_ (x _| 'v)", x=x, u=u, v=v)


@identity("contractions", "even part transposes: even(u) _| v = v |_ even(u)")
def _contr_even_transpose(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    up = u.even_part()
    return _expect_zero(
        lcontract(up, v) - rcontract(v, up), "even(u) _| v - v |_ even(u)", u=u, v=v
    )


@identity("contractions", "odd part transposes: odd(u) _| v = 'v |_ 'odd(u)")
def _contr_odd_transpose(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    um = u.odd_part()
    lhs = lcontract(um, v)
    rhs = rcontract(v.grade_involution(), um.grade_involution())
    return _expect_zero(lhs - rhs, "odd(u) _| v - 'v |_ 'odd(u)", u=u, v=v)


@identity("contractions", "u ^ (v _| sigma) = (u _| v) _| sigma")
def _contr_orientation_wedge(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    s = ctx.orientation()
    return _expect_zero(
        wedge(u, lcontract(v, s)) - lcontract(lcontract(u, v), s),
        "u ^ (v _| sigma) - (u _| v) _| sigma",
        u=u, v=v,
    )


@identity("contractions", "(sigma |_ u) ^ v = sigma |_ (u |_ v)")
def _contr_orientation_rc(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    s = ctx.orientation()
    return _expect_zero(
        wedge(rcontract(s, u), v) - rcontract(s, rcontract(u, v)),
        "(sigma |_ u) ^ v - sigma |_ (u |_ v)",
        u=u, v=v,
    )


@identity("contractions", "x _| y = x |_ y = ip(x, y) on vecfors")
def _contr_vector_pairing(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    y = random_vecfor(ctx, rng).to_multivector()
    pairing = ctx.scalar(bilinear(x, y))
    d1 = lcontract(x, y) - pairing
    d2 = rcontract(x, y) - pairing
    return _expect_zero(d1 + d2, "x _| y - ip(x,y), x |_ y - ip(x,y)", x=x, y=y)


@identity("contractions", "units: 1 _| u = u = u |_ 1 and x _| 1 = 0 = 1 |_ x")
def _contr_units(ctx, rng):
    u = random_multivector(ctx, rng)
    x = random_multivector(ctx, rng, no_scalar=True)
    one = ctx.scalar(1)
    d = (lcontract(one, u) - u) + (rcontract(u, one) - u) + lcontract(x, one) + rcontract(one, x)
    return _expect_zero(d, "1 _| u - u, u |_ 1 - u, x _| 1, 1 |_ x", u=u, x=x)


@identity("contractions", "adjoint law: ip(u _| v, w) = ip(v, ~u ^ w)")
def _contr_lc_adjoint(ctx, rng):
    u, v, w = (random_multivector(ctx, rng) for _ in range(3))
    d = bilinear(lcontract(u, v), w) - bilinear(v, wedge(u.reversion(), w))
    return _expect_scalar_zero(d, "ip(u _| v, w) - ip(v, ~u ^ w)", u=u, v=v, w=w)


@identity("contractions", "adjoint law: ip(v |_ u, w) = ip(v, w ^ ~u)")
def _contr_rc_adjoint(ctx, rng):
    u, v, w = (random_multivector(ctx, rng) for _ in range(3))
    d = bilinear(rcontract(v, u), w) - bilinear(v, wedge(w, u.reversion()))
    return _expect_scalar_zero(d, "ip(v |_ u, w) - ip(v, w ^ ~u)", u=u, v=v, w=w)


@identity("contractions", "isotropic halves contract to zero")
def _contr_isotropic_halves(ctx, rng):
    ue = random_multivector(ctx, rng, support_mask=ctx.e_star_mask, no_scalar=True)
    ve = random_multivector(ctx, rng, support_mask=ctx.e_star_mask)
    ut = random_multivector(ctx, rng, support_mask=ctx.theta_star_mask, no_scalar=True)
    vt = random_multivector(ctx, rng, support_mask=ctx.theta_star_mask)
    d = lcontract(ue, ve) + lcontract(ut, vt) + rcontract(ve, ue) + rcontract(vt, ut)
    return _expect_zero(d, "u_e _| v_e, u_t _| v_t (and right analogues)", u_e=ue, v_e=ve, u_t=ut, v_t=vt)


@identity("contractions", "split-degree pairing carries the sign (-1)^(rs)")
def _contr_mixed_grade_pairing(ctx, rng):
    n = ctx.dim_n
    r = rng.randint(0, n)
    s = rng.randint(0, n)
    u_vec = random_blade_mv(ctx, rng, r, ctx.e_star_mask)
    u_form = random_blade_mv(ctx, rng, s, ctx.theta_star_mask)
    v_vec = random_blade_mv(ctx, rng, s, ctx.e_star_mask)
    v_form = random_blade_mv(ctx, rng, r, ctx.theta_star_mask)
    u = wedge(u_vec, u_form)
    v = wedge(v_vec, v_form)
    sign = Scalar(-1 if (r * s) & 1 else 1)
    d = bilinear(u, v) - sign * bilinear(u_form, v_vec) * bilinear(v_form, u_vec)
    return _expect_scalar_zero(
        d, f"ip(u, v) - (-1)^({r}*{s}) u_form(v_vec) v_form(u_vec)", u=u, v=v
    )


@identity("contractions", "vector against a split element expands by halves")
def _contr_vector_mixed(ctx, rng):
    u_vec = random_multivector(ctx, rng, support_mask=ctx.e_star_mask)
    u_form = random_multivector(ctx, rng, support_mask=ctx.theta_star_mask)
    x = random_vecfor(ctx, rng)
    xm = x.to_multivector()
    n = ctx.dim_n
    x_vec = Multivector(ctx, {1 << k: c for k, c in enumerate(x.vec) if c})
    x_form = Multivector(ctx, {1 << (n + k): c for k, c in enumerate(x.form) if c})
    u = wedge(u_vec, u_form)
    lhs = lcontract(xm, u)
    rhs = wedge(lcontract(x_form, u_vec), u_form) + wedge(
        u_vec.grade_involution(), lcontract(x_vec, u_form)
    )
    return _expect_zero(lhs - rhs, "x _| (a ^ b) - (x_form _| a) ^ b - 'a ^ (x_vec _| b)", x=xm, a=u_vec, b=u_form)


@identity("contractions", "wedge is graded-anticommutative")
def _contr_wedge_anticommute(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    total = ctx.zero()
    for r in range(ctx.num_generators + 1):
        for s in range(ctx.num_generators + 1):
            ur, vs = u.grade_part(r), v.grade_part(s)
            if ur.is_zero() or vs.is_zero():
                continue
            sign = Scalar(-1 if (r * s) & 1 else 1)
            total = total + wedge(ur, vs) - wedge(vs, ur).scale(sign)
    return _expect_zero(total, "u ^ v - (-1)^(rs) v ^ u summed over grades", u=u, v=v)


@identity("contractions", "bilinear form is symmetric and grade-orthogonal")
def _contr_bilinear_symmetry(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    d = bilinear(u, v) - bilinear(v, u)
    for r in range(ctx.num_generators + 1):
        for s in range(ctx.num_generators + 1):
            if r != s:
                d = d + bilinear(u.grade_part(r), v.grade_part(s))
    return _expect_scalar_zero(d, "ip(u,v) - ip(v,u) and cross-grade pairings", u=u, v=v)


@identity("contractions", "grade parts resum to the element")
def _contr_grade_resum(ctx, rng):
    u = random_multivector(ctx, rng)
    total = ctx.zero()
    for r in range(ctx.num_generators + 1):
        total = total + u.grade_part(r)
    d = (total - u) + (u.even_part() + u.odd_part() - u)
    return _expect_zero(d, "sum_r grade(u,r) - u and even(u)+odd(u)-u", u=u)


@identity("contractions", "differential squares to zero")
def _contr_diff_square(ctx, rng):
    x = random_vecfor(ctx, rng)
    u = random_multivector(ctx, rng)
    return _expect_zero(
        differential_apply(x, differential_apply(x, u)),
        "x _| (x _| u)",
        x=x.to_multivector(), u=u,
    )


@identity("contractions", "differential anticommutes with grade involution")
def _contr_diff_anticommute(ctx, rng):
    x = random_vecfor(ctx, rng)
    u = random_multivector(ctx, rng)
    d = differential_apply(x, u.grade_involution()) + differential_apply(x, u).grade_involution()
    return _expect_zero(d, "x _| 'u + '(x _| u)", x=x.to_multivector(), u=u)


@identity("contractions", "differential graded Leibniz rule")
def _contr_diff_leibniz(ctx, rng):
    x = random_vecfor(ctx, rng)
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    lhs = differential_apply(x, wedge(u, v))
    rhs = wedge(differential_apply(x, u), v) + wedge(u.grade_involution(), differential_apply(x, v))
    return _expect_zero(lhs - rhs, "x _| (u ^ v) - (x _| u) ^ v - 'u ^ (x _| v)", x=x.to_multivector(), u=u, v=v)


# ---- products suite (geometric product and the End(/\V) model) ---------------------


@identity("products", "Witt generator anticommutation relations", per_trial=False)
def _prod_witt_relations(ctx, rng):
    n = ctx.dim_n
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            ek, el = ctx.e(k), ctx.e(l)
            tk, tl = ctx.t(k), ctx.t(l)
            if not (gp(ek, el) + gp(el, ek)).is_zero():
                return f"e{k}*e{l} + e{l}*e{k} != 0"
            if not (gp(tk, tl) + gp(tl, tk)).is_zero():
                return f"t{k}*t{l} + t{l}*t{k} != 0"
            expect = ctx.scalar(2 if k == l else 0)
            if gp(tk, el) + gp(el, tk) != expect:
                return f"t{k}*e{l} + e{l}*t{k} != 2 delta"
    return None


@identity("products", "orthonormal basis anticommutation with signs", per_trial=False)
def _prod_sigma_relations(ctx, rng):
    n = ctx.dim_n
    sb = [s.to_multivector() for s in sigma_basis(ctx)]
    for i, a in enumerate(sb):
        for j, b in enumerate(sb):
            anti = gp(a, b) + gp(b, a)
            if i < n and j < n:
                expect = ctx.scalar(2 if i == j else 0)
            elif i >= n and j >= n:
                expect = ctx.scalar(-2 if i == j else 0)
            else:
                expect = ctx.zero()
            if anti != expect:
                return f"s{i+1}*s{j+1} + s{j+1}*s{i+1} has the wrong value"
    return None


@identity("products", "u _| sigma = u * sigma and sigma |_ u = sigma * u")
def _prod_sigma_contract(ctx, rng):
    u = random_multivector(ctx, rng)
    s = ctx.orientation()
    d = (lcontract(u, s) - gp(u, s)) + (rcontract(s, u) - gp(s, u))
    return _expect_zero(d, "u _| sigma - u * sigma, sigma |_ u - sigma * u", u=u)


@identity("products", "ip(u, v*w) = ip(~v*u, w) = ip(u*~w, v)")
def _prod_bilinear_adjoint(ctx, rng):
    u, v, w = (random_multivector(ctx, rng) for _ in range(3))
    a = bilinear(u, gp(v, w))
    d1 = a - bilinear(gp(v.reversion(), u), w)
    d2 = a - bilinear(gp(u, w.reversion()), v)
    return _expect_scalar_zero(d1 + d2, "ip(u, v*w) - ip(~v*u, w) - ...", u=u, v=v, w=w)


@identity("products", "x ^ u = (x*u + 'u*x)/2 and x _| u = (x*u - 'u*x)/2")
def _prod_vector_halves(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    u = random_multivector(ctx, rng)
    gu = u.grade_involution()
    half = Fraction(1, 2)
    d1 = wedge(x, u) - (gp(x, u) + gp(gu, x)).scale(half)
    d2 = lcontract(x, u) - (gp(x, u) - gp(gu, x)).scale(half)
    return _expect_zero(d1 + d2, "x ^ u - (x*u + 'u*x)/2, x _| u - (x*u - 'u*x)/2", x=x, u=u)


@identity("products", "x _| (u*v) = (x _| u)*v + 'u*(x _| v)")
def _prod_lc_product(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    lhs = lcontract(x, gp(u, v))
    rhs = gp(lcontract(x, u), v) + gp(u.grade_involution(), lcontract(x, v))
    return _expect_zero(lhs - rhs, "x _| (u*v) - (x _| u)*v - 'u*(x _| v)", x=x, u=u, v=v)


@identity("products", "(u*v) |_ x = u*(v |_ x) + (u |_ x)*'v")
def _prod_rc_product(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    lhs = rcontract(gp(u, v), x)
    rhs = gp(u, rcontract(v, x)) + gp(rcontract(u, x), v.grade_involution())
    return _expect_zero(lhs - rhs, "(u*v) |_ x - u*(v |_ x) - (u |_ x)*'v", x=x, u=u, v=v)


@identity("products", "dual as a product: !u = ~u * sigma and !!u = ~sigma * ~u")
def _prod_hodge_product(ctx, rng):
    u = random_multivector(ctx, rng)
    s = ctx.orientation()
    d1 = hodge(u) - gp(u.reversion(), s)
    d2 = hodge_inv(u) - gp(s.reversion(), u.reversion())
    return _expect_zero(d1 + d2, "!u - ~u*sigma, !!u - ~sigma*~u", u=u)


@identity("products", "!(u*v) = ~v * !u and !!(u*v) = (!!v) * ~u")
def _prod_hodge_twist(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    d1 = hodge(gp(u, v)) - gp(v.reversion(), hodge(u))
    d2 = hodge_inv(gp(u, v)) - gp(hodge_inv(v), u.reversion())
    return _expect_zero(d1 + d2, "!(u*v) - ~v*!u, !!(u*v) - (!!v)*~u", u=u, v=v)


@identity("products", "geometric product is associative")
def _prod_assoc(ctx, rng):
    u, v, w = (random_multivector(ctx, rng) for _ in range(3))
    return _expect_zero(
        gp(gp(u, v), w) - gp(u, gp(v, w)), "(u*v)*w - u*(v*w)", u=u, v=v, w=w
    )


@identity("products", "x*y + y*x = 2 ip(x, y) on vecfors")
def _prod_anticommutator(ctx, rng):
    x = random_vecfor(ctx, rng).to_multivector()
    y = random_vecfor(ctx, rng).to_multivector()
    d = gp(x, y) + gp(y, x) - ctx.scalar(Scalar(2) * bilinear(x, y))
    return _expect_zero(d, "x*y + y*x - 2 ip(x,y)", x=x, y=y)


@identity("products", "involutions are (anti)automorphisms of the product")
def _prod_involution_hom(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    p = gp(u, v)
    d1 = p.grade_involution() - gp(u.grade_involution(), v.grade_involution())
    d2 = p.reversion() - gp(v.reversion(), u.reversion())
    d3 = p.conjugation() - gp(v.conjugation(), u.conjugation())
    return _expect_zero(d1 + d2 + d3, "'(uv)-'u'v, ~(uv)-~v~u, !c(uv)-!cv*!cu", u=u, v=v)


@identity("products", "vector times a split element expands by halves")
def _prod_mixed_element(ctx, rng):
    n = ctx.dim_n
    u_vec = random_multivector(ctx, rng, support_mask=ctx.e_star_mask)
    u_form = random_multivector(ctx, rng, support_mask=ctx.theta_star_mask)
    x = random_vecfor(ctx, rng)
    xm = x.to_multivector()
    x_vec = Multivector(ctx, {1 << k: c for k, c in enumerate(x.vec) if c})
    x_form = Multivector(ctx, {1 << (n + k): c for k, c in enumerate(x.form) if c})
    u = wedge(u_vec, u_form)
    lhs = gp(xm, u)
    rhs = wedge(gp(x_form, u_vec), u_form) + wedge(u_vec.grade_involution(), gp(x_vec, u_form))
    return _expect_zero(lhs - rhs, "x*(a ^ b) - (x_form*a) ^ b - 'a ^ (x_vec*b)", x=xm, a=u_vec, b=u_form)


@identity("products", "orientation element squares to one", per_trial=False)
def _prod_sigma_square(ctx, rng):
    s = ctx.orientation()
    if gp(s, s) != 1:
        return "sigma*sigma != 1"
    return None


@identity("products", "rep is multiplicative: rep(u*v) = rep(u) rep(v)", max_n=MAX_RANK_SUITE_DIM)
def _prod_rep_hom(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    if rep(gp(u, v)) != rep(u) * rep(v):
        return _fail("rep(u*v) != rep(u) rep(v)", u=u, v=v)
    return None


@identity("products", "blade images span all of End(/\\V)", per_trial=False, max_n=MAX_RANK_SUITE_DIM)
def _prod_end_iso(ctx, rng):
    report = verify_end_iso(ctx.dim_n)
    expect = 1 << (2 * ctx.dim_n)
    if report["rank"] != expect or not report["is_isomorphism"]:
        return f"rank {report['rank']} != {expect}"
    return None


@identity("products", "even/odd images are block (anti)diagonal", per_trial=False, max_n=MAX_RANK_SUITE_DIM)
def _prod_even_odd_blocks(ctx, rng):
    if not even_odd_block_structure(ctx.dim_n):
        return "block structure violated"
    return None


@identity("products", "graded tensor split holds for the identity form", per_trial=False, max_n=MAX_RANK_SUITE_DIM)
def _prod_tensor_split_identity(ctx, rng):
    if not tensor_split_check(identity_form(ctx.dim_n), ctx):
        return "anticommutation failed for the identity form"
    return None


@identity("products", "graded tensor split holds for random symmetric forms", max_n=2)
def _prod_tensor_split_random(ctx, rng):
    b = random_symmetric_form(ctx.dim_n, rng)
    if not tensor_split_check(b, ctx):
        return f"anticommutation failed for b = {[[str(x) for x in row] for row in b.matrix]}"
    return None


@identity("products", "doubled space realizes End of the whole algebra", per_trial=False, max_n=1)
def _prod_grandmother(ctx, rng):
    if not grandmother_dimension_check(ctx.dim_n):
        return "doubled-space rank mismatch"
    return None


@identity("products", "dimension identity 2^(4n) = (2^(2n))^2", per_trial=False)
def _prod_dimension_identity(ctx, rng):
    n = ctx.dim_n
    if (1 << (4 * n)) != (1 << (2 * n)) ** 2:
        return "dimension identity failed"
    return None


# ---- hodge suite ---------------------------------------------------------------------


@identity("hodge", "!sigma = (-1)^n and !!sigma = 1", per_trial=False)
def _hodge_orientation(ctx, rng):
    s = ctx.orientation()
    if hodge(s) != ctx.scalar((-1) ** ctx.dim_n):
        return "!sigma != (-1)^n"
    if hodge_inv(s) != 1:
        return "!!sigma != 1"
    if hodge(ctx.scalar(1)) != s:
        return "!1 != sigma"
    return None


@identity("hodge", "duality round-trips: !!(!u) = u = !(!!u)")
def _hodge_roundtrip(ctx, rng):
    u = random_multivector(ctx, rng)
    d = (hodge_inv(hodge(u)) - u) + (hodge(hodge_inv(u)) - u)
    return _expect_zero(d, "!!(!u) - u, !(!!u) - u", u=u)


@identity("hodge", "ip(!u, !v) = (-1)^n ip(u, v)")
def _hodge_isometry(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    sign = Scalar((-1) ** ctx.dim_n)
    d = bilinear(hodge(u), hodge(v)) - sign * bilinear(u, v)
    return _expect_scalar_zero(d, "ip(!u, !v) - (-1)^n ip(u, v)", u=u, v=v)


@identity("hodge", "!(u ^ v) = ~v _| !u")
def _hodge_wedge(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    return _expect_zero(
        hodge(wedge(u, v)) - lcontract(v.reversion(), hodge(u)),
        "!(u ^ v) - ~v _| !u",
        u=u, v=v,
    )


@identity("hodge", "!!(u ^ v) = (!!v) |_ ~u")
def _hodge_inv_wedge(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    return _expect_zero(
        hodge_inv(wedge(u, v)) - rcontract(hodge_inv(v), u.reversion()),
        "!!(u ^ v) - (!!v) |_ ~u",
        u=u, v=v,
    )


@identity("hodge", "!(u |_ v) = ~v ^ !u")
def _hodge_rc(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    return _expect_zero(
        hodge(rcontract(u, v)) - wedge(v.reversion(), hodge(u)),
        "!(u |_ v) - ~v ^ !u",
        u=u, v=v,
    )


@identity("hodge", "!!(u _| v) = (!!v) ^ ~u")
def _hodge_inv_lc(ctx, rng):
    u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
    return _expect_zero(
        hodge_inv(lcontract(u, v)) - wedge(hodge_inv(v), u.reversion()),
        "!!(u _| v) - (!!v) ^ ~u",
        u=u, v=v,
    )


@identity("hodge", "duality complements the grade")
def _hodge_grade(ctx, rng):
    u = random_multivector(ctx, rng)
    m = 2 * ctx.dim_n
    for r in range(m + 1):
        part = hodge(u.grade_part(r))
        if part.grades() - {m - r}:
            return _fail(f"grade(!grade(u,{r})) != {m - r}", u=u)
    return None


@identity("hodge", "vecfor dual: !x = (x_form _| e_*) ^ theta* - e_* ^ (theta* |_ x_vec)")
def _hodge_vecfor(ctx, rng):
    x = random_vecfor(ctx, rng)
    n = ctx.dim_n
    xm = x.to_multivector()
    x_vec = Multivector(ctx, {1 << k: c for k, c in enumerate(x.vec) if c})
    x_form = Multivector(ctx, {1 << (n + k): c for k, c in enumerate(x.form) if c})
    lhs = hodge(xm)
    rhs = wedge(lcontract(x_form, e_star(ctx)), theta_star(ctx)) - wedge(
        e_star(ctx), rcontract(theta_star(ctx), x_vec)
    )
    return _expect_zero(lhs - rhs, "!x - (x_form _| e_*) ^ t* + e_* ^ (t* |_ x_vec)", x=xm)


@identity("hodge", "half-space duals factor the full dual")
def _hodge_poincare(ctx, rng):
    u_form = random_multivector(ctx, rng, support_mask=ctx.theta_star_mask)
    u_vec = random_multivector(ctx, rng, support_mask=ctx.e_star_mask)
    d1 = hodge(u_form) - wedge(poincare_iso(u_form, "sharp_down"), theta_star(ctx))
    d2 = hodge(u_vec) - wedge(e_star(ctx), poincare_iso(u_vec, "sharp_up"))
    mixed = wedge(u_vec, u_form)
    d3 = hodge(mixed) - wedge(
        poincare_iso(u_form, "sharp_down"), poincare_iso(u_vec, "sharp_up")
    )
    return _expect_zero(d1 + d2 + d3, "!u against its half-space factorizations", a=u_vec, b=u_form)


@identity("hodge", "half-space duals complement the degree")
def _hodge_poincare_degree(ctx, rng):
    n = ctx.dim_n
    r = rng.randint(0, n)
    u_form = random_blade_mv(ctx, rng, r, ctx.theta_star_mask)
    u_vec = random_blade_mv(ctx, rng, r, ctx.e_star_mask)
    down = poincare_iso(u_form, "sharp_down")
    up = poincare_iso(u_vec, "sharp_up")
    if down.grades() - {n - r}:
        return _fail(f"degree of sharp_down image != {n - r}", u=u_form)
    if not down.supported_on(ctx.e_star_mask):
        return _fail("sharp_down image not inside /\\V", u=u_form)
    if up.grades() - {n - r}:
        return _fail(f"degree of sharp_up image != {n - r}", u=u_vec)
    if not up.supported_on(ctx.theta_star_mask):
        return _fail("sharp_up image not inside /\\V*", u=u_vec)
    return None


@identity("hodge", "half-space duals reject mixed support", per_trial=False)
def _hodge_poincare_reject(ctx, rng):
    mixed = ctx.e(1) + ctx.t(1)
    for direction in ("sharp_down", "sharp_up"):
        try:
            poincare_iso(mixed, direction)
            return f"{direction} accepted mixed support"
        except ValueError:
            pass
    return None


# ---- witt suite (space-level structure) -------------------------------------------


@identity("witt", "generator Gram matrix is the neutral pairing", per_trial=False)
def _witt_gram(ctx, rng):
    basis = witt_basis(ctx)
    n = ctx.dim_n
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            expect = ONE if abs(i - j) == n else ZERO
            if vec_pairing(a, b) != expect:
                return f"<g{i}, g{j}> != {expect}"
    return None


@identity("witt", "pairing formula <x,y> = x_form(y_vec) + y_form(x_vec)")
def _witt_pairing_formula(ctx, rng):
    x, y = random_vecfor(ctx, rng), random_vecfor(ctx, rng)
    direct = ZERO
    for a, b in zip(x.form, y.vec):
        direct = direct + a * b
    for a, b in zip(y.form, x.vec):
        direct = direct + a * b
    d = vec_pairing(x, y) - direct
    d = d + bilinear(x.to_multivector(), y.to_multivector()) - direct
    return _expect_scalar_zero(d, "<x,y> - x_form(y_vec) - y_form(x_vec)", x=x.to_multivector(), y=y.to_multivector())


@identity("witt", "V and V* are totally isotropic")
def _witt_isotropy(ctx, rng):
    n = ctx.dim_n
    x, y = random_vecfor(ctx, rng), random_vecfor(ctx, rng)
    xv = Vecfor(ctx, x.vec, tuple([ZERO] * n))
    yv = Vecfor(ctx, y.vec, tuple([ZERO] * n))
    xf = Vecfor(ctx, tuple([ZERO] * n), x.form)
    yf = Vecfor(ctx, tuple([ZERO] * n), y.form)
    d = vec_pairing(xv, yv) + vec_pairing(xf, yf)
    return _expect_scalar_zero(d, "<x_vec, y_vec> + <x_form, y_form>", x=x.to_multivector(), y=y.to_multivector())


@identity("witt", "classification matches the sign of the self-pairing")
def _witt_classify(ctx, rng):
    x = random_vecfor(ctx, rng)
    kind, unit = classify(x)
    p = x.self_pairing()
    expect = "positive" if p.sign() > 0 else ("negative" if p.sign() < 0 else "null")
    if kind != expect:
        return _fail("classify disagrees with sign", x=x.to_multivector())
    if (unit == "unit") != (p == 1 or p == -1):
        return _fail("unit flag disagrees", x=x.to_multivector())
    return None


@identity("witt", "conjugate is orthogonal and flips the square")
def _witt_conjugate(ctx, rng):
    x = random_vecfor(ctx, rng)
    xb = conjugate(x)
    d = vec_pairing(xb, x)
    d = d + vec_pairing(xb, xb) + vec_pairing(x, x)
    return _expect_scalar_zero(d, "<~x, x> and <~x,~x> + <x,x>", x=x.to_multivector())


@identity("witt", "conjugation swaps the paired orthonormal components")
def _witt_conjugate_components(ctx, rng):
    x = random_vecfor(ctx, rng)
    n = ctx.dim_n
    c = sigma_components(x)
    cb = sigma_components(conjugate(x))
    for k in range(n):
        if cb[k] != c[n + k] or cb[n + k] != c[k]:
            return _fail("component swap failed", x=x.to_multivector())
    return None


@identity("witt", "bracket is antisymmetric with the forced value")
def _witt_bracket(ctx, rng):
    x, y = random_vecfor(ctx, rng), random_vecfor(ctx, rng)
    direct = ZERO
    for a, b in zip(x.form, y.vec):
        direct = direct + a * b
    for a, b in zip(y.form, x.vec):
        direct = direct - a * b
    d = (bracket(x, y) - direct) + (bracket(x, y) + bracket(y, x)) + bracket(x, x)
    return _expect_scalar_zero(d, "[x,y] value/antisymmetry", x=x.to_multivector(), y=y.to_multivector())


@identity("witt", "orthonormal basis Gram is diag(+1^n, -1^n)", per_trial=False)
def _witt_sigma_gram(ctx, rng):
    n = ctx.dim_n
    sb = sigma_basis(ctx)
    for i, a in enumerate(sb):
        for j, b in enumerate(sb):
            expect = ZERO
            if i == j:
                expect = ONE if i < n else -ONE
            if vec_pairing(a, b) != expect:
                return f"<s{i+1}, s{j+1}> != {expect}"
    return None


@identity("witt", "orthonormal components reconstruct the vecfor")
def _witt_sigma_roundtrip(ctx, rng):
    x = random_vecfor(ctx, rng)
    back = sigma_reconstruct(ctx, sigma_components(x))
    if back.vec != x.vec or back.form != x.form:
        return _fail("reconstruction failed", x=x.to_multivector())
    return None


@identity("witt", "reciprocal orthonormal basis via the Gram inverse", per_trial=False)
def _witt_sigma_reciprocal(ctx, rng):
    n = ctx.dim_n
    sb = sigma_basis(ctx)
    rb = reciprocal_basis(ctx, sb)
    for k in range(n):
        expect = Vecfor(
            ctx,
            tuple(INV_SQRT2 if i == k else ZERO for i in range(n)),
            tuple(INV_SQRT2 if i == k else ZERO for i in range(n)),
        )
        if rb[k].vec != expect.vec or rb[k].form != expect.form:
            return f"reciprocal of s{k+1} is not (t{k+1} + e{k+1})/sqrt2"
        neg = sb[n + k].scale(-1)
        if rb[n + k].vec != neg.vec or rb[n + k].form != neg.form:
            return f"reciprocal of s{n+k+1} is not its negative"
    return None


@identity("witt", "orientation equals the wedge of the orthonormal basis", per_trial=False)
def _witt_orientation_blade(ctx, rng):
    built = wedge_all([s.to_multivector() for s in sigma_basis(ctx)])
    if built != ctx.orientation():
        return "sigma_1 ^ ... ^ sigma_2n != e_* ^ theta*"
    return None


@identity("witt", "orientation pairing is (-1)^n", per_trial=False)
def _witt_orientation_pairing(ctx, rng):
    s = ctx.orientation()
    if bilinear(s, s) != Scalar((-1) ** ctx.dim_n):
        return "ip(sigma, sigma) != (-1)^n"
    return None


@identity("witt", "orientation is invariant under basis change", max_n=3)
def _witt_orientation_invariance(ctx, rng):
    a = random_invertible_matrix(ctx.dim_n, rng)
    if orientation_from_dual_pair(ctx, a) != ctx.orientation():
        return f"rebuilt orientation differs for A = {[[str(x) for x in row] for row in a]}"
    return None


@identity("witt", "doubled-space basis Gram is diag(+1^2n, -1^2n)", per_trial=False)
def _witt_second_order(ctx, rng):
    basis = second_order_basis(ctx)
    m = 2 * ctx.dim_n
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            expect = ZERO
            if i == j:
                expect = ONE if i < m else -ONE
            if second_order_pairing(ctx, u, v) != expect:
                return f"<S{i+1}, S{j+1}> != {expect}"
    return None


@identity("witt", "null-subspace calculus laws")
def _witt_null_subspace(ctx, rng):
    s1 = random_subspace(ctx, rng)
    s2 = random_subspace(ctx, rng)
    n = ctx.dim_n
    if not null_subspace(null_subspace(s1)).same_span(s1):
        return "S'' != S"
    if s1.dim + null_subspace(s1).dim != n:
        return "dim S + dim S' != n"
    total = subspace_sum(s1, s2)
    if s1.basis and not null_subspace(total).same_span(
        subspace_intersection(null_subspace(s1), null_subspace(s2))
    ):
        return "(S1+S2)' != S1' cap S2'"
    inter = subspace_intersection(s1, s2)
    if not null_subspace(inter).same_span(subspace_sum(null_subspace(s1), null_subspace(s2))):
        return "(S1 cap S2)' != S1' + S2'"
    sub = subspace_intersection(s1, s2)  # sub <= s1 => s1' <= sub'
    for row in null_subspace(s1).basis:
        if not null_subspace(sub).contains(row):
            return "monotonicity S1 <= S2 => S2' <= S1' failed"
    return None


@identity("witt", "isotropic extension of a subspace is n-dimensional and null")
def _witt_isotropic_i(ctx, rng):
    s = random_subspace(ctx, rng)
    ext = isotropic_extension_of(s)
    if ext.dim != ctx.dim_n:
        return "dim I(S) != n"
    for u in ext.basis:
        for v in ext.basis:
            if vec_pairing(hv_vecfor(ctx, u), hv_vecfor(ctx, v)):
                return "I(S) is not totally isotropic"
    return None


# ---- endo suite (maps of V, projections, reflections, the b-split) -----------------


@identity("endo", "dual map: involutive, trace/det preserving, anti-multiplicative")
def _endo_dual_map(ctx, rng):
    phi, psi = random_linmap(ctx, rng), random_linmap(ctx, rng)
    d = dual_map(phi)
    if d.dual().matrix != phi.matrix:
        return "phi** != phi"
    if d.det() != phi.det() or d.trace() != phi.trace():
        return "det/trace not preserved"
    lhs = dual_map(phi.compose(psi)).rows()
    rhs = linalg.mat_mul(dual_map(psi).rows(), dual_map(phi).rows())
    if lhs != rhs:
        return "(phi psi)* != psi* phi*"
    if not d.kernel().same_span(null_subspace(phi.image())):
        return "ker phi* != (im phi)'"
    if not d.image().same_span(null_subspace(phi.kernel())):
        return "im phi* != (ker phi)'"
    return None


@identity("endo", "dual map stabilizes the annihilator of a stable subspace")
def _endo_dual_stability(ctx, rng):
    phi = random_linmap(ctx, rng)
    stable = phi.image()  # phi(im phi) <= im phi
    ann = null_subspace(stable)
    d = dual_map(phi)
    for row in ann.basis:
        if not ann.contains(d.apply(row)):
            return "phi*(S') not inside S'"
    return None


@identity("endo", "isotropic extension: identity, blocks, and stability")
def _endo_isotropic_extension(ctx, rng):
    phi = random_linmap(ctx, rng)
    ext = isotropic_extension(phi)
    if not ext.is_block_diagonal():
        return "extension has off-diagonal blocks"
    if isotropic_extension(phi.compose(phi)) != ext.compose(ext):
        return "I(phi^2) != I(phi)^2"
    stable = phi.image()
    iso = isotropic_extension_of(stable)
    for row in iso.basis:
        img = ext.apply(hv_vecfor(ctx, row))
        if not iso.contains(tuple(img.vec) + tuple(img.form)):
            return "I(S) not stable under I(phi)"
    return None


@identity("endo", "vecfor endomorphism: values, dual, and rank")
def _endo_vecfor(ctx, rng):
    x = random_vecfor(ctx, rng)
    phi = vecfor_endo(x)
    y = random_vecfor(ctx, rng)
    fy = ZERO
    for a, b in zip(x.form, y.vec):
        fy = fy + a * b
    expect = [fy * c for c in x.vec]
    if phi.apply(y.vec) != expect:
        return _fail("x(y) != x_form(y) x_vec", x=x.to_multivector(), y=y.to_multivector())
    gy = ZERO
    for a, b in zip(y.form, x.vec):
        gy = gy + a * b
    if dual_map(phi).apply(y.form) != [gy * c for c in x.form]:
        return _fail("x*(y*) != y*(x_vec) x_form", x=x.to_multivector(), y=y.to_multivector())
    if any(x.vec) and any(x.form) and phi.rank() != 1:
        return _fail("rank != 1", x=x.to_multivector())
    return None


@identity("endo", "projection: idempotent, self-dual, range")
def _endo_projection(ctx, rng):
    x = random_nonnull_vecfor(ctx, rng)
    p = projection(x)
    if p.compose(p) != p:
        return _fail("P^2 != P", x=x.to_multivector())
    if p.adjoint() != p:
        return _fail("P not self-dual", x=x.to_multivector())
    y, z = random_vecfor(ctx, rng), random_vecfor(ctx, rng)
    if vec_pairing(p.apply(y), z) != vec_pairing(y, p.apply(z)):
        return _fail("<Py,z> != <y,Pz>", x=x.to_multivector())
    img = p.apply(y)
    span = Subspace(ctx, "V", (x.vec,)) if any(x.vec) else None
    if span and any(img.vec) and not span.contains(img.vec):
        return _fail("P image not in span{x_vec}", x=x.to_multivector())
    return None


@identity("endo", "projection of a null vecfor is rejected", per_trial=False)
def _endo_projection_null(ctx, rng):
    null = Vecfor(ctx, tuple([ONE] + [ZERO] * (ctx.dim_n - 1)), tuple([ZERO] * ctx.dim_n))
    for op in (projection, reflection):
        try:
            op(null)
            return f"{op.__name__} accepted a null vecfor"
        except NullVecforError:
            pass
    return None


@identity("endo", "orthonormal projections are diagonal with 1 at k, n+k", per_trial=False, max_n=3)
def _endo_projection_pattern(ctx, rng):
    n = ctx.dim_n
    for k, s in enumerate(sigma_basis(ctx)):
        m = endo_matrix_sigma(projection(s))
        kk = k % n
        for i in range(2 * n):
            for j in range(2 * n):
                expect = ONE if (i == j and (i == kk or i == n + kk)) else ZERO
                if m[i][j] != expect:
                    return f"projection of s{k+1} breaks the diagonal pattern"
    return None


@identity("endo", "reflection: involutive and orthogonal")
def _endo_reflection(ctx, rng):
    x = random_nonnull_vecfor(ctx, rng)
    r = reflection(x)
    if r.compose(r) != identity_hendo(ctx):
        return _fail("R^2 != 1", x=x.to_multivector())
    y, z = random_vecfor(ctx, rng), random_vecfor(ctx, rng)
    if vec_pairing(r.apply(y), r.apply(z)) != vec_pairing(y, z):
        return _fail("<Ry,Rz> != <y,z>", x=x.to_multivector())
    if r.adjoint().compose(r) != identity_hendo(ctx):
        return _fail("R* R != 1", x=x.to_multivector())
    return None


@identity("endo", "orthonormal reflections are diagonal with -1 at k, n+k", per_trial=False, max_n=3)
def _endo_reflection_pattern(ctx, rng):
    n = ctx.dim_n
    for k, s in enumerate(sigma_basis(ctx)):
        m = endo_matrix_sigma(reflection(s))
        kk = k % n
        for i in range(2 * n):
            for j in range(2 * n):
                expect = (-ONE if (i == kk or i == n + kk) else ONE) if i == j else ZERO
                if m[i][j] != expect:
                    return f"reflection of s{k+1} breaks the diagonal pattern"
    return None


@identity("endo", "split onto (V,b) (+) (V,-b) is an isometry")
def _endo_rho_b(ctx, rng):
    b = random_symmetric_form(ctx.dim_n, rng)
    x, y = random_vecfor(ctx, rng), random_vecfor(ctx, rng)
    d = rho_b_pairing(b, x, y) - vec_pairing(x, y)
    return _expect_scalar_zero(d, "b(x+,y+) - b(x-,y-) - <x,y>", x=x.to_multivector(), y=y.to_multivector())


@identity("endo", "split image of the orthonormal basis matches the closed form")
def _endo_rho_b_image(ctx, rng):
    n = ctx.dim_n
    b = random_symmetric_form(n, rng)
    recip = b.reciprocal()
    images = sigma_image_basis(b, ctx)
    half = Scalar(Fraction(1, 2))
    for k in range(n):
        raised = [recip[i][k] for i in range(n)]  # e^k = b^{ki} e_i
        unit = [ONE if i == k else ZERO for i in range(n)]
        plus_expect = tuple(half * (u + r) for u, r in zip(unit, raised))
        minus_expect = tuple(half * (r - u) for u, r in zip(unit, raised))
        if images[k][0] != plus_expect or images[k][1] != minus_expect:
            return f"image of s{k+1} differs from (1/2)[(e_k+e^k) (+) (e^k-e_k)]"
        if images[n + k][0] != minus_expect or images[n + k][1] != plus_expect:
            return f"image of s{n+k+1} differs from (1/2)[(e^k-e_k) (+) (e^k+e_k)]"
    return None


@identity("endo", "hyperplane pair: exact kernel basis, point, and scaling laws")
def _endo_hyperplane(ctx, rng):
    n = ctx.dim_n
    alpha = [Scalar(random_rational(rng)) for _ in range(n)]
    if not any(alpha):
        alpha[rng.randrange(n)] = ONE
    a = Scalar(random_rational(rng))
    while not a:
        a = Scalar(random_rational(rng))
    basis, point = hyperplane_representation(ctx, alpha, a)
    if len(basis) != n - 1:
        return "S0 basis is not (n-1)-dimensional"
    for v in basis:
        if sum((c * w for c, w in zip(alpha, v)), ZERO):
            return "S0 vector not annihilated"
    if sum((c * w for c, w in zip(alpha, point)), ZERO) != a:
        return "alpha(point) != a"
    factor = Scalar(random_rational(rng))
    while not factor:
        factor = Scalar(random_rational(rng))
    scaled = [factor * c for c in alpha]
    _, point_scaled = hyperplane_representation(ctx, scaled, a)
    if point_scaled != tuple(factor.inverse() * c for c in point):
        return "point of (c alpha) != point(alpha)/c"
    _, point_neg = hyperplane_representation(ctx, alpha, -a)
    if point_neg != tuple(-c for c in point):
        return "point at -a != -point at a"
    return None


# ---- ideals suite ----------------------------------------------------------------------


@identity("ideals", "theta* ideal has dimension 2^n", per_trial=False, max_n=MAX_RANK_SUITE_DIM)
def _ideal_dim(ctx, rng):
    basis = ideal_span(theta_star(ctx))
    if basis.dim != 1 << ctx.dim_n:
        return f"dim = {basis.dim} != 2^n"
    return None


@identity("ideals", "theta* generates a minimal ideal; 1 does not", per_trial=False, max_n=MAX_RANK_SUITE_DIM)
def _ideal_minimality(ctx, rng):
    if not minimality_check(theta_star(ctx)):
        return "theta* ideal not minimal"
    if minimality_check(ctx.scalar(1)):
        return "the unit ideal reported minimal"
    return None


@identity("ideals", "left multiplication stays inside the ideal", max_n=MAX_RANK_SUITE_DIM)
def _ideal_left_closure(ctx, rng):
    basis = _ideal_basis_cached(ctx)
    u = random_multivector(ctx, rng)
    psi = basis.span[rng.randrange(len(basis.span))]
    if not basis.contains(gp(u, psi)):
        return _fail("u * psi left the ideal", u=u, psi=psi)
    return None


_IDEAL_CACHE: dict[int, object] = {}


def _ideal_basis_cached(ctx):
    hit = _IDEAL_CACHE.get(id(ctx))
    if hit is None or hit.generator.context is not ctx:
        hit = ideal_span(theta_star(ctx))
        _IDEAL_CACHE[id(ctx)] = hit
    return hit


@identity("ideals", "module action equals x_vec ^ u + 2 (x_form _| u)", max_n=MAX_RANK_SUITE_DIM)
def _ideal_module_action(ctx, rng):
    x = random_vecfor(ctx, rng)
    u = random_multivector(ctx, rng, support_mask=ctx.e_star_mask)
    lhs = module_action(x, u)
    rhs = module_action_formula(x, u)
    return _expect_zero(lhs - rhs, "m^-1(x m(u)) - x_vec ^ u - 2 (x_form _| u)", x=x.to_multivector(), u=u)


@identity("ideals", "grade-scaling conjugation recovers the Fock action", max_n=MAX_RANK_SUITE_DIM)
def _ideal_conjugation(ctx, rng):
    x = random_vecfor(ctx, rng)
    if conjugated_module_action(ctx, x) != clifford_map_matrix(ctx, x):
        return _fail("D (module action) D^-1 != Clifford map", x=x.to_multivector())
    return None


@identity("ideals", "covector multivectors multiply by wedge alone")
def _ideal_theta_wedge(ctx, rng):
    u = random_multivector(ctx, rng, support_mask=ctx.theta_star_mask)
    v = random_multivector(ctx, rng, support_mask=ctx.theta_star_mask)
    return _expect_zero(gp(u, v) - wedge(u, v), "u*v - u ^ v on /\\V*", u=u, v=v)


@identity("ideals", "top blades: t* squares to zero, e_* ^ t* is the orientation", per_trial=False)
def _ideal_top_blades(ctx, rng):
    ts = theta_star(ctx)
    if not gp(ts, ts).is_zero():
        return "theta* * theta* != 0"
    if wedge(e_star(ctx), ts) != ctx.orientation():
        return "e_* ^ theta* != sigma"
    return None


# -- the runner -------------------------------------------------------------------------


@dataclass
class SuiteReport:
    suite: str
    n: int
    trials: int
    seed: int
    lines: list[str] = field(default_factory=list)
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def render(self) -> str:
        head = f"suite {self.suite} (n={self.n}, trials={self.trials}, seed={self.seed})"
        tail = "all identities hold" if self.passed else f"{self.failures} identity(ies) FAILED"
        return "\n".join([head, *self.lines, tail])


def suite_identities(name: str) -> list[Identity]:
    if name == "all":
        return list(IDENTITIES)
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES + ('all',)}")
    return [ident for ident in IDENTITIES if ident.suite == name]


def run_suite(name: str, n: int, trials: int = 200, seed: int = 0) -> SuiteReport:
    """Run one suite (or `all`) at dimension n; deterministic in (seed, n, trials)."""
    idents = suite_identities(name)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rank_limited = name in RANK_SUITES or name == "all"
    limit = MAX_RANK_SUITE_DIM if rank_limited else MAX_SUITE_DIM
    if not 1 <= n <= limit:
        raise ValueError(f"suite {name!r} supports 1 <= n <= {limit}, got {n}")
    ctx = AlgebraContext(n)
    report = SuiteReport(suite=name, n=n, trials=trials, seed=seed)
    for ident in idents:
        if not ident.min_n <= n <= ident.max_n:
            report.lines.append(f"SKIP {ident.suite}: {ident.name} (n out of range)")
            continue
        rng = random.Random(f"{seed}/{n}/{ident.suite}/{ident.name}")
        rounds = trials if ident.per_trial else 1
        failure = None
        for _ in range(rounds):
            failure = ident.fn(ctx, rng)
            if failure is not None:
                break
        if failure is None:
            report.lines.append(f"PASS {ident.suite}: {ident.name}")
        else:
            report.failures += 1
            report.lines.append(f"FAIL {ident.suite}: {ident.name}: {failure}")
    return report
