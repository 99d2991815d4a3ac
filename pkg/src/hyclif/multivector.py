"""Exact multivector arithmetic over the neutral space V + V*.

The 2n generators are the Witt basis e1..en (a basis of V) and t1..tn (the
dual basis of V*), pairing <t_i, e_j> = delta_ij with both halves isotropic.
A basis blade is a canonically ordered wedge of generators encoded as a 2n-bit
mask (bit k-1 = e_k, bit n+k-1 = t_k); a multivector is a sparse map from
blade masks to Scalars.

The geometric product is built by recursive peeling: for a generator x and a
blade remainder A, (x ^ A) u = x (A u) - (x _| A) u, with the grade-1 base
case x u = x _| u + x ^ u.  Blade-by-blade results are memoized per context.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

from .scalar import ONE, ZERO, Scalar, format_scalar

MAX_DIM = 14  # masks fit in 28 bits and memo tables stay bounded

BladeTable = tuple[tuple[int, int], ...]  # (mask, integer coefficient) pairs

ScalarLike = Union[Scalar, int, Fraction]


class ContextMismatchError(ValueError):
    """Raised when operands belong to different algebra contexts."""


def grade_of(mask: int) -> int:
    return mask.bit_count()


def _merge_sign(a: int, b: int) -> int:
    """Sign of reordering the concatenation of blades a and b into mask order."""
    sign = 0
    while b:
        low = b & -b
        sign += (a >> low.bit_length()).bit_count()
        b ^= low
    return -1 if sign & 1 else 1


class AlgebraContext:
    """Dimension-n algebra context: Witt Gram matrix plus product memos.

    All values built from a context are immutable and all operations are
    pure; a context can be shared between threads (memo writes are idempotent
    inserts of values that depend only on their key).
    """

    def __init__(self, dim_n: int) -> None:
        if not isinstance(dim_n, int) or not 1 <= dim_n <= MAX_DIM:
            raise ValueError(f"dimension must be an integer in 1..{MAX_DIM}, got {dim_n!r}")
        self.dim_n = dim_n
        g = dim_n * 2
        self.num_generators = g
        self._gram_int = [[1 if abs(i - j) == dim_n else 0 for j in range(g)] for i in range(g)]
        self.gram: list[list[Scalar]] = [
            [ONE if v else ZERO for v in row] for row in self._gram_int
        ]
        self.full_mask = (1 << g) - 1
        self.e_star_mask = (1 << dim_n) - 1
        self.theta_star_mask = self.full_mask ^ self.e_star_mask
        self._gp_memo: dict[tuple[int, int], BladeTable] = {}
        self._lc_memo: dict[tuple[int, int], BladeTable] = {}
        self._rc_memo: dict[tuple[int, int], BladeTable] = {}
        self._pairing_memo: dict[tuple[int, int], int] = {}

    # -- naming ------------------------------------------------------------

    def generator_name(self, g: int) -> str:
        if g < self.dim_n:
            return f"e{g + 1}"
        return f"t{g - self.dim_n + 1}"

    def generator_index(self, name: str) -> int:
        kind, num = name[0], name[1:]
        if kind not in ("e", "t") or not num.isdigit():
            raise ValueError(f"unknown generator {name!r}")
        k = int(num)
        if not 1 <= k <= self.dim_n:
            raise ValueError(f"generator index out of range for dim {self.dim_n}: {name!r}")
        return k - 1 if kind == "e" else self.dim_n + k - 1

    def blade_name(self, mask: int) -> str:
        if mask == 0:
            return "1"
        names = [self.generator_name(g) for g in range(self.num_generators) if mask >> g & 1]
        return "^".join(names)

    def basis_blades(self) -> list[int]:
        """All 4^n blade masks in canonical (grade, mask) order."""
        return sorted(range(1 << self.num_generators), key=lambda m: (m.bit_count(), m))

    # -- element factories ---------------------------------------------------

    def zero(self) -> Multivector:
        return Multivector(self, {})

    def scalar(self, value: ScalarLike) -> Multivector:
        s = value if isinstance(value, Scalar) else Scalar(value)
        return Multivector(self, {0: s} if s else {})

    def blade(self, mask: int, coeff: ScalarLike = ONE) -> Multivector:
        if not 0 <= mask <= self.full_mask:
            raise ValueError(f"blade mask out of range: {mask:#x}")
        s = coeff if isinstance(coeff, Scalar) else Scalar(coeff)
        return Multivector(self, {mask: s} if s else {})

    def generator(self, g: int) -> Multivector:
        return self.blade(1 << g)

    def e(self, k: int) -> Multivector:
        """Basis vector e_k of V (1-based)."""
        if not 1 <= k <= self.dim_n:
            raise ValueError(f"e index out of range: {k}")
        return self.blade(1 << (k - 1))

    def t(self, k: int) -> Multivector:
        """Dual basis covector t_k of V* (1-based)."""
        if not 1 <= k <= self.dim_n:
            raise ValueError(f"t index out of range: {k}")
        return self.blade(1 << (self.dim_n + k - 1))

    def e_star(self) -> Multivector:
        """Top blade e1^...^en of /\\V."""
        return self.blade(self.e_star_mask)

    def theta_star(self) -> Multivector:
        """Top blade t1^...^tn of /\\V*."""
        return self.blade(self.theta_star_mask)

    def orientation(self) -> Multivector:
        """Canonical orientation 2n-blade: e1^...^en^t1^...^tn (= e_* ^ theta*)."""
        return self.blade(self.full_mask)

    def from_terms(self, terms: dict[int, ScalarLike]) -> Multivector:
        out: dict[int, Scalar] = {}
        for mask, coeff in terms.items():
            s = coeff if isinstance(coeff, Scalar) else Scalar(coeff)
            if s:
                out[mask] = out[mask] + s if mask in out else s
        return Multivector(self, {m: c for m, c in out.items() if c})

    # -- generator-level kernels (integer blade tables) ----------------------

    def _pairing(self, a: int, b: int) -> int:
        return self._gram_int[a][b]

    def _gen_lc(self, g: int, mask: int) -> list[tuple[int, int]]:
        # x _| (b1 ^ ... ^ bs) = sum_k (-1)^(k-1) <x, b_k> b1 ^ ... (omit k) ... ^ bs
        out = []
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            pair = self._gram_int[g][k]
            if pair:
                out.append((mask ^ low, sign * pair))
            sign = -sign
            rest ^= low
        return out

    def _gen_rc(self, mask: int, g: int) -> list[tuple[int, int]]:
        # (b1 ^ ... ^ bs) |_ x = sum_k (-1)^(s-k) <b_k, x> b1 ^ ... (omit k) ... ^ bs
        out = []
        rest = mask
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            pair = self._gram_int[k][g]
            if pair:
                above = (mask >> low.bit_length()).bit_count()
                out.append((mask ^ low, -pair if above & 1 else pair))
            rest ^= low
        return out

    def _blade_lc(self, a: int, b: int) -> BladeTable:
        # (a1 ^ rest) _| b = a1 _| (rest _| b); lowest generator applied last
        memo = self._lc_memo
        hit = memo.get((a, b))
        if hit is not None:
            return hit
        if a == 0:
            table: BladeTable = ((b, 1),)
        else:
            low = a & -a
            inner = self._blade_lc(a ^ low, b)
            g = low.bit_length() - 1
            acc: dict[int, int] = {}
            for mask, coeff in inner:
                for m2, c2 in self._gen_lc(g, mask):
                    acc[m2] = acc.get(m2, 0) + coeff * c2
            table = tuple((m, c) for m, c in acc.items() if c)
        memo[(a, b)] = table
        return table

    def _blade_rc(self, b: int, a: int) -> BladeTable:
        # b |_ (rest ^ ahigh) = (b |_ rest) |_ ahigh; highest generator applied last
        memo = self._rc_memo
        hit = memo.get((b, a))
        if hit is not None:
            return hit
        if a == 0:
            table: BladeTable = ((b, 1),)
        else:
            high = 1 << (a.bit_length() - 1)
            inner = self._blade_rc(b, a ^ high)
            g = high.bit_length() - 1
            acc: dict[int, int] = {}
            for mask, coeff in inner:
                for m2, c2 in self._gen_rc(mask, g):
                    acc[m2] = acc.get(m2, 0) + coeff * c2
            table = tuple((m, c) for m, c in acc.items() if c)
        memo[(b, a)] = table
        return table

    def _blade_gp(self, a: int, b: int) -> BladeTable:
        # (x ^ A) u = x (A u) - (x _| A) u, base case: generator times blade
        memo = self._gp_memo
        hit = memo.get((a, b))
        if hit is not None:
            return hit
        if a == 0:
            table: BladeTable = ((b, 1),)
        else:
            low = a & -a
            g = low.bit_length() - 1
            rest = a ^ low
            acc: dict[int, int] = {}
            for mask, coeff in self._blade_gp(rest, b):
                # x times blade = x _| blade + x ^ blade
                for m2, c2 in self._gen_lc(g, mask):
                    acc[m2] = acc.get(m2, 0) + coeff * c2
                if not mask & low:
                    s = -1 if (mask & (low - 1)).bit_count() & 1 else 1
                    m2 = mask | low
                    acc[m2] = acc.get(m2, 0) + coeff * s
            for mask, coeff in self._gen_lc(g, rest):
                for m2, c2 in self._blade_gp(mask, b):
                    acc[m2] = acc.get(m2, 0) - coeff * c2
            table = tuple((m, c) for m, c in acc.items() if c)
        memo[(a, b)] = table
        return table

    def _blade_pairing(self, a: int, b: int) -> int:
        """Gram-determinant pairing of two basis blades (an integer here)."""
        if a.bit_count() != b.bit_count():
            return 0
        key = (a, b)
        hit = self._pairing_memo.get(key)
        if hit is not None:
            return hit
        gens_a = [g for g in range(self.num_generators) if a >> g & 1]
        gens_b = [g for g in range(self.num_generators) if b >> g & 1]
        m = [[Fraction(self._gram_int[i][j]) for j in gens_b] for i in gens_a]
        det = _fraction_det(m)
        val = int(det)
        self._pairing_memo[key] = val
        return val

    def __repr__(self) -> str:
        return f"AlgebraContext(dim_n={self.dim_n})"


def _fraction_det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    if n == 0:
        return Fraction(1)
    det = Fraction(1)
    a = [row[:] for row in m]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def _require_same_context(u: Multivector, v: Multivector) -> None:
    if u.context is not v.context:
        raise ContextMismatchError("operands come from different algebra contexts")


class Multivector:
    """Immutable sparse multivector: blade mask -> nonzero Scalar."""

    __slots__ = ("context", "terms")

    def __init__(self, context: AlgebraContext, terms: dict[int, Scalar]) -> None:
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Multivector is immutable")

    # -- basic structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def grades(self) -> set[int]:
        return {grade_of(m) for m in self.terms}

    def max_grade(self) -> int:
        return max((grade_of(m) for m in self.terms), default=0)

    def coeff(self, mask: int) -> Scalar:
        return self.terms.get(mask, ZERO)

    def scalar_part(self) -> Scalar:
        return self.terms.get(0, ZERO)

    def sorted_terms(self) -> list[tuple[int, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))

    def supported_on(self, mask: int) -> bool:
        """True if every term's blade lies inside the given generator mask."""
        return all(m & ~mask == 0 for m in self.terms)

    def __iter__(self) -> Iterator[tuple[int, Scalar]]:
        return iter(self.sorted_terms())

    # -- ring operations -------------------------------------------------------

    def _coerce(self, other: object) -> "Multivector | None":
        if isinstance(other, Multivector):
            _require_same_context(self, other)
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return self.context.scalar(other)
        return None

    def __add__(self, other: object) -> Multivector:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            acc = out.get(m)
            out[m] = c if acc is None else acc + c
        return Multivector(self.context, out)

    __radd__ = __add__

    def __sub__(self, other: object) -> Multivector:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            acc = out.get(m)
            out[m] = -c if acc is None else acc - c
        return Multivector(self.context, out)

    def __rsub__(self, other: object) -> Multivector:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> Multivector:
        return Multivector(self.context, {m: -c for m, c in self.terms.items()})

    def scale(self, c: ScalarLike) -> Multivector:
        s = c if isinstance(c, Scalar) else Scalar(c)
        if not s:
            return self.context.zero()
        return Multivector(self.context, {m: s * x for m, x in self.terms.items()})

    def __mul__(self, other: object) -> Multivector:
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if isinstance(other, Multivector):
            return gp(self, other)
        return NotImplemented

    def __rmul__(self, other: object) -> Multivector:
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __xor__(self, other: object) -> Multivector:
        if isinstance(other, Multivector):
            return wedge(self, other)
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Multivector):
            return self.context is other.context and self.terms == other.terms
        if isinstance(other, (Scalar, int, Fraction)):
            return self.terms == self.context.scalar(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.context), frozenset(self.terms.items())))

    # -- grade machinery -----------------------------------------------------

    def grade_part(self, r: int) -> Multivector:
        if not 0 <= r <= self.context.num_generators:
            raise ValueError(f"grade out of range 0..{self.context.num_generators}: {r}")
        return Multivector(
            self.context, {m: c for m, c in self.terms.items() if grade_of(m) == r}
        )

    def even_part(self) -> Multivector:
        return Multivector(
            self.context, {m: c for m, c in self.terms.items() if not grade_of(m) & 1}
        )

    def odd_part(self) -> Multivector:
        return Multivector(
            self.context, {m: c for m, c in self.terms.items() if grade_of(m) & 1}
        )

    def _signed(self, sign_of_grade) -> Multivector:
        return Multivector(
            self.context,
            {m: (c if sign_of_grade(grade_of(m)) > 0 else -c) for m, c in self.terms.items()},
        )

    def grade_involution(self) -> Multivector:
        """Sign (-1)^r per grade-r part."""
        return self._signed(lambda r: -1 if r & 1 else 1)

    def reversion(self) -> Multivector:
        """Sign (-1)^(r(r-1)/2) per grade-r part."""
        return self._signed(lambda r: -1 if (r * (r - 1) // 2) & 1 else 1)

    def conjugation(self) -> Multivector:
        """Sign (-1)^(r(r+1)/2) per grade-r part."""
        return self._signed(lambda r: -1 if (r * (r + 1) // 2) & 1 else 1)

    # -- derived operators (thin wrappers over the module functions) ----------

    def wedge(self, other: Multivector) -> Multivector:
        return wedge(self, other)

    def gp(self, other: Multivector) -> Multivector:
        return gp(self, other)

    def lcontract(self, other: Multivector) -> Multivector:
        return lcontract(self, other)

    def rcontract(self, other: Multivector) -> Multivector:
        return rcontract(self, other)

    def bilinear(self, other: Multivector) -> Scalar:
        return bilinear(self, other)

    def hodge(self) -> Multivector:
        return hodge(self)

    def hodge_inv(self) -> Multivector:
        return hodge_inv(self)

    # -- printing --------------------------------------------------------------

    def __str__(self) -> str:
        return format_multivector(self)

    def __repr__(self) -> str:
        return f"<{self} @ n={self.context.dim_n}>"

    def to_json(self) -> dict:
        ctx = self.context
        terms = []
        for mask, coeff in self.sorted_terms():
            blade = [ctx.generator_name(g) for g in range(ctx.num_generators) if mask >> g & 1]
            terms.append({"blade": blade, "coeff": coeff.to_json()})
        return {"dim": ctx.dim_n, "terms": terms}


# -- the operations -------------------------------------------------------------


def wedge(u: Multivector, v: Multivector) -> Multivector:
    """Exterior product; overlapping blades annihilate, disjoint ones merge."""
    _require_same_context(u, v)
    acc: dict[int, Scalar] = {}
    for ma, ca in u.terms.items():
        for mb, cb in v.terms.items():
            if ma & mb:
                continue
            m = ma | mb
            c = ca * cb
            if _merge_sign(ma, mb) < 0:
                c = -c
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
    return Multivector(u.context, acc)


def bilinear(u: Multivector, v: Multivector) -> Scalar:
    """Canonical symmetric pairing: Gram determinant on blades, grades orthogonal."""
    _require_same_context(u, v)
    ctx = u.context
    out = ZERO
    for ma, ca in u.terms.items():
        for mb, cb in v.terms.items():
            d = ctx._blade_pairing(ma, mb)
            if d:
                out = out + ca * cb * d
    return out


def lcontract(u: Multivector, v: Multivector) -> Multivector:
    """Left contraction u _| v (adjoint of the wedge in the first slot)."""
    _require_same_context(u, v)
    ctx = u.context
    acc: dict[int, Scalar] = {}
    for ma, ca in u.terms.items():
        for mb, cb in v.terms.items():
            cab = ca * cb
            for m2, c2 in ctx._blade_lc(ma, mb):
                prev = acc.get(m2)
                add = cab * c2
                acc[m2] = add if prev is None else prev + add
    return Multivector(ctx, acc)


def rcontract(u: Multivector, v: Multivector) -> Multivector:
    """Right contraction u |_ v (adjoint of the wedge in the second slot)."""
    _require_same_context(u, v)
    ctx = u.context
    acc: dict[int, Scalar] = {}
    for ma, ca in u.terms.items():
        for mb, cb in v.terms.items():
            cab = ca * cb
            for m2, c2 in ctx._blade_rc(ma, mb):
                prev = acc.get(m2)
                add = cab * c2
                acc[m2] = add if prev is None else prev + add
    return Multivector(ctx, acc)


def gp(u: Multivector, v: Multivector) -> Multivector:
    """Geometric (Clifford) product, associative extension of x u = x _| u + x ^ u."""
    _require_same_context(u, v)
    ctx = u.context
    acc: dict[int, Scalar] = {}
    for ma, ca in u.terms.items():
        for mb, cb in v.terms.items():
            cab = ca * cb
            for m2, c2 in ctx._blade_gp(ma, mb):
                prev = acc.get(m2)
                add = cab * c2
                acc[m2] = add if prev is None else prev + add
    return Multivector(ctx, acc)


def grade_part(u: Multivector, r: int) -> Multivector:
    return u.grade_part(r)


def even_part(u: Multivector) -> Multivector:
    return u.even_part()


def odd_part(u: Multivector) -> Multivector:
    return u.odd_part()


_INVOLUTION_KINDS = ("grade", "reversion", "conjugation")


def involution(u: Multivector, kind: str) -> Multivector:
    if kind == "grade":
        return u.grade_involution()
    if kind == "reversion":
        return u.reversion()
    if kind == "conjugation":
        return u.conjugation()
    raise ValueError(f"unknown involution {kind!r}; expected one of {_INVOLUTION_KINDS}")


def hodge(u: Multivector) -> Multivector:
    """Poincare automorphism (Hodge dual): reversion of u contracted into the orientation."""
    return lcontract(u.reversion(), u.context.orientation())


def hodge_inv(u: Multivector) -> Multivector:
    """Inverse Hodge dual: reversed orientation right-contracted by the reversion of u."""
    return rcontract(u.context.orientation().reversion(), u.reversion())


def poincare_iso(u: Multivector, direction: str) -> Multivector:
    """Half-space duality: sharp_down maps /\\V* -> /\\V, sharp_up maps /\\V -> /\\V*."""
    ctx = u.context
    if direction == "sharp_down":
        if not u.supported_on(ctx.theta_star_mask):
            raise ValueError("sharp_down input must be supported on t-generators only")
        return lcontract(u.reversion(), ctx.e_star())
    if direction == "sharp_up":
        if not u.supported_on(ctx.e_star_mask):
            raise ValueError("sharp_up input must be supported on e-generators only")
        return rcontract(ctx.theta_star(), u.conjugation())
    raise ValueError(f"unknown direction {direction!r}; expected sharp_down or sharp_up")


def differential_apply(x, u: Multivector) -> Multivector:
    """Degree -1 differential attached to a grade-1 element: interior product by x.

    Accepts a grade-1 Multivector or anything exposing to_multivector()
    (e.g. a Vecfor).
    """
    xv = x.to_multivector() if hasattr(x, "to_multivector") else x
    if not isinstance(xv, Multivector):
        raise TypeError("differential_apply expects a vector operand")
    if xv.grades() - {1}:
        raise ValueError("differential operand must be homogeneous of grade 1")
    return lcontract(xv, u)


# -- canonical text form -----------------------------------------------------


def _coefficient_prefix(c: Scalar) -> str:
    """Printable multiplier for a blade: '' for 1, e.g. '2', '1/2 ', 'r2 '."""
    if c == ONE:
        return ""
    if c.sqrt2_part == 0:
        body = format_scalar(c)
        return body if c.rat_part.denominator == 1 else body + " "
    return format_scalar(c) + " "


def format_multivector(u: Multivector) -> str:
    """Canonical text: terms by (grade, mask); the empty blade prints bare.

    The output is valid expression-language input (a rational literal directly
    before a generator or before `r2` multiplies it).
    """
    if not u.terms:
        return "0"
    ctx = u.context
    pieces: list[str] = []
    for mask, coeff in u.sorted_terms():
        mixed = coeff.rat_part != 0 and coeff.sqrt2_part != 0
        if mask == 0:
            if mixed:
                # a join minus cannot distribute over "a+b r2"; print signed
                negative = False
                body = format_scalar(coeff)
            else:
                negative = coeff.sign() < 0
                body = format_scalar(-coeff if negative else coeff)
        elif mixed:
            negative = False
            body = f"({format_scalar(coeff)})*{ctx.blade_name(mask)}"
        else:
            negative = coeff.sign() < 0
            mag = -coeff if negative else coeff
            body = f"{_coefficient_prefix(mag)}{ctx.blade_name(mask)}"
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)
