"""Core multivector operations against independent definitional oracles.

The oracles below re-derive each operation straight from its defining
property using only permutation arithmetic and exact solves: the bilinear
form as a permutation-expansion Gram determinant, the wedge by counting
inversions on index lists, the contractions through their adjoint
characterizations against a dual blade basis, and the geometric product by
transporting to the orthonormal (diagonal-metric) basis.  Expected values
frozen in the example tests were computed with these oracles.
"""

from fractions import Fraction
from itertools import permutations

import pytest

from hyclif import linalg
from hyclif.multivector import (
    AlgebraContext,
    ContextMismatchError,
    Multivector,
    bilinear,
    differential_apply,
    gp,
    involution,
    lcontract,
    poincare_iso,
    rcontract,
    wedge,
)
from hyclif.scalar import ONE, SQRT2, ZERO, Scalar
from hyclif.suites import random_multivector, random_vecfor

# -- independent oracles ------------------------------------------------------------


def perm_det(matrix):
    n = len(matrix)
    total = ZERO
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Scalar(sign)
        for i in range(n):
            term = term * matrix[i][perm[i]]
        total = total + term
    return total


def gen_pairing(ctx, a, b):
    return ONE if abs(a - b) == ctx.dim_n else ZERO


def blade_gens(mask):
    return [g for g in range(mask.bit_length()) if mask >> g & 1]


def bilinear_oracle(u, v):
    ctx = u.context
    out = ZERO
    for ma, ca in u.terms.items():
        for mb, cb in v.terms.items():
            ga, gb = blade_gens(ma), blade_gens(mb)
            if len(ga) != len(gb):
                continue
            det = perm_det([[gen_pairing(ctx, a, b) for b in gb] for a in ga])
            out = out + ca * cb * det
    return out


def wedge_oracle(u, v):
    ctx = u.context
    acc = {}
    for ma, ca in u.terms.items():
        for mb, cb in v.terms.items():
            if ma & mb:
                continue
            gens = blade_gens(ma) + blade_gens(mb)
            sign = 1
            for i in range(len(gens)):
                for j in range(i + 1, len(gens)):
                    if gens[i] > gens[j]:
                        sign = -sign
            m = ma | mb
            acc[m] = acc.get(m, ZERO) + ca * cb * Scalar(sign)
    return Multivector(ctx, acc)


def partner_mask(ctx, mask):
    n = ctx.dim_n
    low = mask & ((1 << n) - 1)
    high = mask >> n
    return (low << n) | high


def dual_blade(ctx, mask):
    # D with <B', D> = delta_{B', B}
    p = partner_mask(ctx, mask)
    pairing = bilinear_oracle(ctx.blade(mask), ctx.blade(p))
    return ctx.blade(p).scale(pairing.inverse())


def lcontract_oracle(u, v):
    # defining adjoint: <u _| v, w> = <v, ~u ^ w>
    ctx = u.context
    acc = {}
    for mask in range(1 << ctx.num_generators):
        d = dual_blade(ctx, mask)
        c = bilinear_oracle(v, wedge_oracle(u.reversion(), d))
        if c:
            acc[mask] = c
    return Multivector(ctx, acc)


def rcontract_oracle(u, v):
    # defining adjoint: <u |_ v, w> = <u, w ^ ~v>
    ctx = u.context
    acc = {}
    for mask in range(1 << ctx.num_generators):
        d = dual_blade(ctx, mask)
        c = bilinear_oracle(u, wedge_oracle(d, v.reversion()))
        if c:
            acc[mask] = c
    return Multivector(ctx, acc)


class DiagonalProductOracle:
    """Geometric product computed in the orthonormal basis (metric +1^n, -1^n)
    with the classic bitmap blade product, transported back exactly."""

    def __init__(self, ctx):
        from hyclif.hyperspace import sigma_basis

        self.ctx = ctx
        m = 2 * ctx.dim_n
        vecs = [s.to_multivector() for s in sigma_basis(ctx)]
        cols = []
        for subset in range(1 << m):
            blade = ctx.scalar(1)
            for g in blade_gens(subset):
                blade = wedge_oracle(blade, vecs[g])
            cols.append([blade.coeff(mask) for mask in range(1 << m)])
        self.to_witt = linalg.transpose(cols)
        self.from_witt = linalg.inverse(self.to_witt)
        self.metric = [ONE] * ctx.dim_n + [-ONE] * ctx.dim_n

    def _blade_mul(self, a, b):
        sign = 1
        for i in blade_gens(a):
            for j in blade_gens(b):
                if i > j:
                    sign = -sign
        coeff = Scalar(sign)
        for g in blade_gens(a & b):
            coeff = coeff * self.metric[g]
        return a ^ b, coeff

    def gp(self, u, v):
        m = 2 * self.ctx.dim_n
        cu = linalg.mat_vec(self.from_witt, [u.coeff(k) for k in range(1 << m)])
        cv = linalg.mat_vec(self.from_witt, [v.coeff(k) for k in range(1 << m)])
        out = [ZERO] * (1 << m)
        for a, ca in enumerate(cu):
            if not ca:
                continue
            for b, cb in enumerate(cv):
                if not cb:
                    continue
                mask, c = self._blade_mul(a, b)
                out[mask] = out[mask] + ca * cb * c
        witt = linalg.mat_vec(self.to_witt, out)
        return Multivector(self.ctx, {k: c for k, c in enumerate(witt) if c})


# -- frozen example values (computed with the oracles above) -------------------------


def test_wedge_examples(ctx1):
    e1, t1 = ctx1.e(1), ctx1.t(1)
    assert wedge(e1, e1).is_zero()
    assert wedge(e1, t1) == -wedge(t1, e1)
    assert wedge(e1 + t1, e1 - t1) == wedge(e1, t1).scale(-2)


def test_bilinear_examples(ctx1):
    e1, t1 = ctx1.e(1), ctx1.t(1)
    assert bilinear(t1, e1) == ONE
    assert bilinear(wedge(e1, t1), wedge(e1, t1)) == Scalar(-1)
    assert bilinear(e1, wedge(e1, t1)) == ZERO
    # frozen from perm_det([[0, 1], [1, 0]])
    assert perm_det([[ZERO, ONE], [ONE, ZERO]]) == Scalar(-1)


def test_grade_parts(ctx1):
    u = ctx1.scalar(1) + wedge(ctx1.e(1), ctx1.t(1))
    assert u.grade_part(2) == wedge(ctx1.e(1), ctx1.t(1))
    assert (ctx1.e(1) + wedge(ctx1.e(1), ctx1.t(1))).even_part() == wedge(ctx1.e(1), ctx1.t(1))
    assert ctx1.scalar(5).odd_part().is_zero()
    with pytest.raises(ValueError):
        u.grade_part(3)
    with pytest.raises(ValueError):
        u.grade_part(-1)


def test_involutions(ctx1):
    e1, t1 = ctx1.e(1), ctx1.t(1)
    st = wedge(e1, t1)
    assert involution(st, "reversion") == -st
    assert involution(e1, "conjugation") == -e1
    assert involution(ctx1.scalar(3) + e1, "grade") == ctx1.scalar(3) - e1
    with pytest.raises(ValueError):
        involution(e1, "bogus")


def test_contraction_examples(ctx1):
    e1, t1 = ctx1.e(1), ctx1.t(1)
    u = ctx1.scalar(2) + e1 + wedge(e1, t1)
    assert lcontract(ctx1.scalar(1), u) == u
    assert lcontract(t1, wedge(e1, t1)) == t1
    assert rcontract(wedge(e1, t1), e1) == e1


def test_gp_examples(ctx1):
    e1, t1, s = ctx1.e(1), ctx1.t(1), ctx1.orientation()
    assert gp(t1, e1) + gp(e1, t1) == 2
    assert gp(e1, e1).is_zero()
    assert gp(s, s) == 1
    assert gp(s, e1) == e1
    assert gp(e1, s) == -e1
    assert gp(t1, e1) == ctx1.scalar(1) - wedge(e1, t1)


# -- oracle comparisons on random elements -----------------------------------------


@pytest.mark.parametrize("n", [1, 2])
def test_bilinear_matches_oracle(n, rng):
    ctx = AlgebraContext(n)
    for _ in range(40):
        u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
        assert bilinear(u, v) == bilinear_oracle(u, v)


@pytest.mark.parametrize("n", [1, 2])
def test_wedge_matches_oracle(n, rng):
    ctx = AlgebraContext(n)
    for _ in range(40):
        u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
        assert wedge(u, v) == wedge_oracle(u, v)


@pytest.mark.parametrize("n", [1, 2])
def test_contractions_match_adjoint_oracle(n, rng):
    ctx = AlgebraContext(n)
    for _ in range(15):
        u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
        assert lcontract(u, v) == lcontract_oracle(u, v)
        assert rcontract(u, v) == rcontract_oracle(u, v)


@pytest.mark.parametrize("n", [1, 2])
def test_gp_matches_diagonal_oracle(n, rng):
    ctx = AlgebraContext(n)
    oracle = DiagonalProductOracle(ctx)
    for _ in range(15):
        u, v = random_multivector(ctx, rng), random_multivector(ctx, rng)
        assert gp(u, v) == oracle.gp(u, v)


def test_hodge_examples(ctx1, ctx2):
    from hyclif.multivector import hodge, hodge_inv

    for ctx in (ctx1, ctx2):
        s = ctx.orientation()
        assert hodge(s) == ctx.scalar((-1) ** ctx.dim_n)
        assert hodge(ctx.scalar(1)) == s
        assert hodge_inv(s) == 1
    assert hodge(ctx1.e(1)) == -ctx1.e(1)


def test_poincare_examples(ctx1):
    assert poincare_iso(ctx1.t(1), "sharp_down") == 1
    assert poincare_iso(ctx1.scalar(1), "sharp_down") == ctx1.e_star()
    assert poincare_iso(ctx1.e(1), "sharp_up") == -1
    with pytest.raises(ValueError):
        poincare_iso(ctx1.e(1) + ctx1.t(1), "sharp_down")
    with pytest.raises(ValueError):
        poincare_iso(ctx1.e(1), "sideways")


def test_differential_examples(ctx1, rng):
    from hyclif.hyperspace import Vecfor

    x = Vecfor(ctx1, (ONE,), (ONE,))
    assert differential_apply(x, wedge(ctx1.e(1), ctx1.t(1))) == ctx1.t(1) - ctx1.e(1)
    assert differential_apply(x, ctx1.scalar(1)).is_zero()
    for _ in range(20):
        u = random_multivector(ctx1, rng)
        y = random_vecfor(ctx1, rng)
        assert differential_apply(y, differential_apply(y, u)).is_zero()
    with pytest.raises(ValueError):
        differential_apply(wedge(ctx1.e(1), ctx1.t(1)), ctx1.scalar(1))


# -- structure and hygiene ------------------------------------------------------------


def test_context_validation():
    with pytest.raises(ValueError):
        AlgebraContext(0)
    with pytest.raises(ValueError):
        AlgebraContext(15)
    ctx = AlgebraContext(14)  # the documented ceiling still works
    assert gp(ctx.e(14), ctx.t(14)) + gp(ctx.t(14), ctx.e(14)) == 2


def test_context_mismatch():
    a, b = AlgebraContext(2), AlgebraContext(2)
    with pytest.raises(ContextMismatchError):
        wedge(a.e(1), b.e(1))
    with pytest.raises(ContextMismatchError):
        gp(a.e(1), b.e(1))
    with pytest.raises(ContextMismatchError):
        bilinear(a.e(1), b.e(1))


def test_no_zero_coefficients_stored(ctx2, rng):
    for _ in range(30):
        u = random_multivector(ctx2, rng)
        v = random_multivector(ctx2, rng)
        for result in (u + v, u - v, gp(u, v), wedge(u, v), lcontract(u, v)):
            assert all(c for c in result.terms.values())
    assert (u - u).terms == {}


def test_gram_matrix_shape(ctx2):
    g = ctx2.gram
    assert len(g) == 4 and all(len(row) == 4 for row in g)
    for i in range(4):
        for j in range(4):
            assert g[i][j] == (ONE if abs(i - j) == 2 else ZERO)
            assert g[i][j] == g[j][i]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gram_nondegenerate(n):
    # neutral signature: the swap Gram has determinant (-1)^n
    ctx = AlgebraContext(n)
    assert linalg.determinant(ctx.gram) == Scalar((-1) ** n)


def test_canonical_print(ctx1, ctx2):
    assert str(ctx1.zero()) == "0"
    assert str(gp(ctx1.t(1), ctx1.e(1))) == "1 - e1^t1"
    u = ctx2.e(1) + ctx2.t(1).scale(2) - ctx2.e(2).scale(Fraction(1, 2))
    assert str(u) == "e1 - 1/2 e2 + 2t1"
    assert str(ctx1.e(1).scale(SQRT2)) == "r2 e1"
    assert str(ctx1.e(1).scale(Scalar(1, 1))) == "(1+r2)*e1"
    assert str(ctx1.scalar(Scalar(Fraction(1, 2), Fraction(3, 4)))) == "1/2+3/4 r2"


def test_json_form(ctx2):
    u = wedge(ctx2.e(1), ctx2.t(2)).scale(Fraction(3, 2)) + ctx2.scalar(1)
    payload = u.to_json()
    assert payload["dim"] == 2
    assert payload["terms"][0] == {"blade": [], "coeff": {"rat": "1", "rat_r2": "0"}}
    assert payload["terms"][1] == {"blade": ["e1", "t2"], "coeff": {"rat": "3/2", "rat_r2": "0"}}


def test_immutability(ctx1):
    u = ctx1.e(1)
    with pytest.raises(AttributeError):
        u.terms = {}


def test_shared_context_across_threads(rng):
    # the product memo is an idempotent cache, so concurrent use of one
    # context must agree with sequential evaluation
    from concurrent.futures import ThreadPoolExecutor

    ctx = AlgebraContext(2)
    pairs = [
        (random_multivector(ctx, rng, density=0.5), random_multivector(ctx, rng, density=0.5))
        for _ in range(60)
    ]
    expected = [gp(u, v) for u, v in pairs]
    fresh = AlgebraContext(2)
    remap = [
        (Multivector(fresh, dict(u.terms)), Multivector(fresh, dict(v.terms)))
        for u, v in pairs
    ]
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda uv: gp(*uv), remap))
    for got, want in zip(results, expected):
        assert got.terms == want.terms
