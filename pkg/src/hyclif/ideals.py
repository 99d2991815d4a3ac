"""The left ideal generated by the covector volume element and its spinors.

Left-multiplying the algebra onto theta* = t1^...^tn produces a 2^n-dimensional
minimal left ideal; the map m(u) = u * theta* identifies it with /\\V as a
module, with vecfors acting by u -> x_vec ^ u + 2 (x_form _| u).  Spinor
representatives are elements supported on t-generators only, stored by their
strictly-increasing index components.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .fock import FockMatrix, _tup, fock_basis
from .hyperspace import Vecfor
from .multivector import AlgebraContext, Multivector, gp, lcontract, wedge
from .scalar import SQRT2, ZERO, Scalar

MAX_IDEAL_DIM = 3  # span computations scale as 4^n x 4^n exact elimination


def theta_star(ctx: AlgebraContext) -> Multivector:
    return ctx.theta_star()


def e_star(ctx: AlgebraContext) -> Multivector:
    return ctx.e_star()


@dataclass(frozen=True)
class IdealBasis:
    """Exact basis of a left ideal Cl * generator."""

    generator: Multivector
    span: tuple[Multivector, ...]

    @property
    def dim(self) -> int:
        return len(self.span)

    def _matrix(self) -> linalg.Matrix:
        ctx = self.generator.context
        blades = list(range(1 << ctx.num_generators))
        return [[mv.coeff(m) for m in blades] for mv in self.span]

    def contains(self, u: Multivector) -> bool:
        if u.context is not self.generator.context:
            return False
        if u.is_zero():
            return True
        ctx = u.context
        vec = [u.coeff(m) for m in range(1 << ctx.num_generators)]
        cols = linalg.transpose(self._matrix())
        return linalg.solve(cols, vec) is not None


def ideal_span(g: Multivector) -> IdealBasis:
    """Row-reduced exact basis of Cl * g (left multiples of g by all blades)."""
    if g.is_zero():
        raise ValueError("zero generator spans the zero ideal")
    ctx = g.context
    total = 1 << ctx.num_generators
    rows = []
    for mask in range(total):
        prod = gp(ctx.blade(mask), g)
        rows.append([prod.coeff(m) for m in range(total)])
    ech, pivots = linalg.row_echelon(rows)
    span = []
    for i in range(len(pivots)):
        terms = {m: c for m, c in enumerate(ech[i]) if c}
        span.append(Multivector(ctx, terms))
    return IdealBasis(generator=g, span=tuple(span))


def minimality_check(g: Multivector, trials: int = 16, seed: int = 0) -> bool:
    """True iff no sampled nonzero element of Cl*g generates a smaller ideal.

    Every span basis element is tried, plus `trials` seeded random nonzero
    combinations; minimality fails as soon as some element regenerates a
    proper subideal.
    """
    ctx = g.context
    if ctx.dim_n > MAX_IDEAL_DIM:
        raise ValueError(f"minimality check supports n <= {MAX_IDEAL_DIM}")
    base = ideal_span(g)
    candidates = list(base.span)
    rng = random.Random(seed)
    for _ in range(trials):
        combo = ctx.zero()
        while combo.is_zero():
            combo = ctx.zero()
            for mv in base.span:
                if rng.random() < 0.75:
                    num = rng.randint(-4, 4)
                    if num:
                        combo = combo + mv.scale(Fraction(num, rng.randint(1, 4)))
        candidates.append(combo)
    return all(ideal_span(psi).dim == base.dim for psi in candidates)


# -- the Fock-module structure of the ideal -------------------------------------


def module_map(u: Multivector) -> Multivector:
    """m(u) = u * theta*, a linear bijection /\\V -> Cl * theta*."""
    ctx = u.context
    if not u.supported_on(ctx.e_star_mask):
        raise ValueError("module_map expects support on e-generators only")
    return gp(u, ctx.theta_star())


def module_map_inverse(v: Multivector) -> Multivector:
    """Inverse of m on its image; raises if v is not in Cl * theta*."""
    ctx = v.context
    n = ctx.dim_n
    total = 1 << ctx.num_generators
    cols = []
    for mask in fock_basis(n):
        image = gp(ctx.blade(mask), ctx.theta_star())
        cols.append([image.coeff(m) for m in range(total)])
    matrix = linalg.transpose(cols)
    target = [v.coeff(m) for m in range(total)]
    sol = linalg.solve(matrix, target)
    if sol is None:
        raise ValueError("element is not in the theta* ideal")
    terms = {mask: c for mask, c in zip(fock_basis(n), sol) if c}
    return Multivector(ctx, terms)


def module_action(x: Vecfor, u: Multivector) -> Multivector:
    """m^-1(x * m(u)); equals x_vec ^ u + 2 (x_form _| u) on /\\V."""
    return module_map_inverse(gp(x.to_multivector(), module_map(u)))


def module_action_formula(x: Vecfor, u: Multivector) -> Multivector:
    """The closed form x_vec ^ u + 2 (x_form _| u) of the ideal action."""
    ctx = u.context
    n = ctx.dim_n
    x_vec = Multivector(ctx, {1 << k: c for k, c in enumerate(x.vec) if c})
    x_form = Multivector(ctx, {1 << (n + k): c for k, c in enumerate(x.form) if c})
    return wedge(x_vec, u) + lcontract(x_form, u).scale(2)


def module_action_matrix(ctx: AlgebraContext, x: Vecfor) -> FockMatrix:
    """Matrix of u -> m^-1(x * m(u)) on the (grade, lex) subset basis of /\\V."""
    basis = fock_basis(ctx.dim_n)
    index = {m: i for i, m in enumerate(basis)}
    side = len(basis)
    rows = [[ZERO] * side for _ in range(side)]
    for j, mask in enumerate(basis):
        image = module_action(x, ctx.blade(mask))
        for m, c in image.terms.items():
            rows[index[m]][j] = c
    return FockMatrix(ctx, _tup(rows))


def grade_scaling_matrix(ctx: AlgebraContext) -> FockMatrix:
    """Diagonal operator scaling grade-r subsets by sqrt2^r."""
    basis = fock_basis(ctx.dim_n)
    side = len(basis)
    rows = [[ZERO] * side for _ in range(side)]
    for i, mask in enumerate(basis):
        rows[i][i] = SQRT2 ** mask.bit_count()
    return FockMatrix(ctx, _tup(rows))


def conjugated_module_action(ctx: AlgebraContext, x: Vecfor) -> FockMatrix:
    """Grade-scaling conjugate D (module action) D^-1; equals the Clifford map."""
    d = grade_scaling_matrix(ctx)
    d_inv = FockMatrix(ctx, _tup(linalg.inverse(d.rows())))
    return d * module_action_matrix(ctx, x) * d_inv


# -- spinor component storage -----------------------------------------------------


@dataclass(frozen=True)
class SpinorRep:
    """Components of a spinor: one Scalar per strictly increasing index tuple.

    Grade-2 components are the antisymmetric tensor entries f_{mu nu} with
    mu < nu; the paired 1/2 (and higher 1/k!) expansion factors cancel against
    the summed orderings, so each stored component is the blade coefficient.
    """

    context: AlgebraContext
    components: dict[tuple[int, ...], Scalar]

    def __post_init__(self):
        n = self.context.dim_n
        comps = {}
        for idx, val in self.components.items():
            tup = tuple(idx)
            if any(not 1 <= i <= n for i in tup) or list(tup) != sorted(set(tup)):
                raise ValueError(f"component index must be strictly increasing in 1..{n}: {tup}")
            s = val if isinstance(val, Scalar) else Scalar(val)
            if s:
                comps[tup] = s
        object.__setattr__(self, "components", comps)

    def component(self, *indices: int) -> Scalar:
        return self.components.get(tuple(indices), ZERO)


def spinor_compose(rep: SpinorRep) -> Multivector:
    """Multivector of /\\V* with blade coefficients given by the components."""
    ctx = rep.context
    n = ctx.dim_n
    terms = {}
    for idx, c in rep.components.items():
        mask = 0
        for i in idx:
            mask |= 1 << (n + i - 1)
        terms[mask] = c
    return Multivector(ctx, terms)


def spinor_decompose(u: Multivector) -> SpinorRep:
    ctx = u.context
    if not u.supported_on(ctx.theta_star_mask):
        raise ValueError("spinor support must lie on t-generators only")
    n = ctx.dim_n
    comps = {}
    for mask, c in u.terms.items():
        idx = tuple(k - n + 1 for k in range(n, 2 * n) if mask >> k & 1)
        comps[idx] = c
    return SpinorRep(ctx, comps)


def _grade_key(n: int, r: int) -> str:
    if r == 0:
        return "s"
    if r == 1:
        return "v"
    if r == 2:
        return "f"
    if r == n:
        return "p"
    return f"c{r}"


def spinor_to_json(rep: SpinorRep) -> dict:
    """JSON schema {"s": Scalar, "v": [...], "f": [...], ..., "p": Scalar}.

    Lists run over strictly increasing index tuples in lexicographic order;
    grades 0..2 are keyed "s", "v", "f", the top grade "p" (n >= 3), and the
    remaining grades "c3".."c{n-1}".
    """
    n = rep.context.dim_n
    out: dict = {}
    for r in range(n + 1):
        key = _grade_key(n, r)
        if key == "s":
            out[key] = rep.component().to_json()
        elif key == "p":
            out[key] = rep.component(*range(1, n + 1)).to_json()
        else:
            out[key] = [
                rep.component(*idx).to_json() for idx in combinations(range(1, n + 1), r)
            ]
    return out


def spinor_from_json(ctx: AlgebraContext, obj: dict) -> SpinorRep:
    n = ctx.dim_n
    comps: dict[tuple[int, ...], Scalar] = {}
    for r in range(n + 1):
        key = _grade_key(n, r)
        if key not in obj:
            continue
        if key == "s":
            comps[()] = Scalar.from_json(obj[key])
        elif key == "p":
            comps[tuple(range(1, n + 1))] = Scalar.from_json(obj[key])
        else:
            for idx, val in zip(combinations(range(1, n + 1), r), obj[key]):
                comps[idx] = Scalar.from_json(val)
    return SpinorRep(ctx, comps)
