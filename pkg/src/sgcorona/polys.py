"""Exact integer polynomial arithmetic.

All polynomial work stays over the integers (rationals only at
evaluation points), so characteristic-polynomial identities can be
checked coefficient by coefficient.  Floating point enters exactly
once, when an isolated root is converted for reporting.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = [
    "IntPolynomial",
    "RationalFn",
    "poly_gcd",
    "poly_divexact",
    "squarefree_factors",
    "poly_matrix_det",
    "taylor_shift",
    "real_root_pairs",
    "real_roots",
]


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored lowest degree first with no trailing zeros.
    The zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable; all operators return new polynomials.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == IntPolynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, float, complex,
        and even IntPolynomial (composition)."""
        res = 0
        for c in reversed(self.coeffs):
            res = res * x + c
        return res

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> "IntPolynomial":
        """Divide out the content and normalise to a positive leading
        coefficient.  Zero polynomial maps to itself."""
        if self.is_zero:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPolynomial([x // c for x in self.coeffs])

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


def poly_divexact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient a/b, requiring the division to be exact over Z.

    Raises ValueError when b does not divide a.  This doubles as a
    cheap internal consistency check wherever divisibility is a
    mathematical guarantee.
    """
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero:
        return IntPolynomial()
    da, db = a.degree, b.degree
    if da < db:
        raise ValueError("not divisible: degree too small")
    rem = [Fraction(c) for c in a.coeffs]
    quot = [Fraction(0)] * (da - db + 1)
    blc = Fraction(b.coeffs[-1])
    for k in range(da - db, -1, -1):
        q = rem[db + k] / blc
        quot[k] = q
        if q:
            for i, bc in enumerate(b.coeffs):
                rem[i + k] -= q * bc
    if any(rem):
        raise ValueError("not divisible: nonzero remainder")
    out = []
    for q in quot:
        if q.denominator != 1:
            raise ValueError("not divisible: fractional quotient")
        out.append(q.numerator)
    return IntPolynomial(out)


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    # lazy pseudo-remainder: scale by lc(b) before each elimination step
    da, db = a.degree, b.degree
    if da < db:
        return a
    rem = list(a.coeffs)
    blc = b.coeffs[-1]
    for k in range(da - db, -1, -1):
        coef = rem[db + k]
        for i in range(len(rem)):
            rem[i] *= blc
        if coef:
            for i, bc in enumerate(b.coeffs):
                rem[i + k] -= coef * bc
        assert rem[db + k] == 0
    return IntPolynomial(rem[:db] if db > 0 else ())


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd via a primitive pseudo-remainder sequence.

    The result is primitive with positive leading coefficient; the gcd
    of two constants is therefore 1 (integer content is handled by the
    callers that care about it)."""
    a = a.primitive_part()
    b = b.primitive_part()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    while not b.is_zero:
        r = _pseudo_rem(a, b).primitive_part()
        a, b = b, r
    return a


def squarefree_factors(p: IntPolynomial):
    """Yun decomposition.

    Returns (c, factors) where factors is a list of (g, m) pairs with
    p == c * prod(g**m), each g squarefree and primitive with positive
    leading coefficient, distinct g pairwise coprime, and c an integer.
    The reconstruction is verified by exact division, so a faulty run
    cannot return silently.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return p.coeffs[0], []
    work = p.primitive_part()
    a = poly_gcd(work, work.derivative())
    b = poly_divexact(work, a)
    c = poly_divexact(work.derivative(), a)
    d = c - b.derivative()
    factors = []
    m = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            factors.append((g, m))
        b = poly_divexact(b, g)
        c = poly_divexact(d, g) if not d.is_zero else IntPolynomial()
        d = c - b.derivative()
        m += 1
    prod = IntPolynomial((1,))
    for g, mult in factors:
        prod = prod * g**mult
    const = poly_divexact(p, prod)
    if const.degree != 0:
        raise ValueError("squarefree reconstruction failed")
    return const.coeffs[0], factors


def poly_matrix_det(mat) -> IntPolynomial:
    """Determinant of a square matrix of IntPolynomial entries.

    Fraction-free Bareiss elimination with row pivoting: every interior
    division is exact, which poly_divexact enforces.
    """
    n = len(mat)
    if n == 0:
        return IntPolynomial((1,))
    m = [list(row) for row in mat]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev = IntPolynomial((1,))
    for k in range(n - 1):
        if m[k][k].is_zero:
            for r in range(k + 1, n):
                if not m[r][k].is_zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return IntPolynomial()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = poly_divexact(num, prev) if num else IntPolynomial()
            m[i][k] = IntPolynomial()
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def taylor_shift(p: IntPolynomial, c: int) -> IntPolynomial:
    """Return p(x + c) by repeated synthetic division at c."""
    if p.is_zero:
        return p
    cs = list(p.coeffs)
    out = []
    while cs:
        d = len(cs) - 1
        if d == 0:
            out.append(cs[0])
            cs = []
            continue
        q = [0] * d
        q[d - 1] = cs[d]
        for k in range(d - 1, 0, -1):
            q[k - 1] = cs[k] + c * q[k]
        out.append(cs[0] + c * q[0])
        cs = q
    return IntPolynomial(out)


class RationalFn:
    """Ratio of integer polynomials kept fully reduced.

    Invariants: gcd(num, den) constant, the integer content of the pair
    is 1, and den has a positive leading coefficient.  Zero is stored
    as 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if not isinstance(num, IntPolynomial):
            num = IntPolynomial(num)
        if not isinstance(den, IntPolynomial):
            den = IntPolynomial(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = IntPolynomial(), IntPolynomial((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
            c = math.gcd(num.content(), den.content())
            if c > 1:
                num = IntPolynomial([x // c for x in num.coeffs])
                den = IntPolynomial([x // c for x in den.coeffs])
            if den.lc < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    def __eq__(self, other):
        if isinstance(other, RationalFn):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if isinstance(x, int):
            return Fraction(self.num(x), d)
        return self.num(x) / d

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFn({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# real root isolation


def _cauchy_bound(p: IntPolynomial) -> Fraction:
    """A rational B with every root of p strictly inside (-B, B)."""
    lc = abs(p.lc)
    if p.degree < 1:
        return Fraction(1)
    top = max(abs(c) for c in p.coeffs[:-1])
    return Fraction(2) + Fraction(top, lc)


def _sign_at(p: IntPolynomial, x: Fraction) -> int:
    """Exact sign of p at a rational point (all-integer Horner)."""
    cs = p.coeffs
    if not cs:
        return 0
    a, b = x.numerator, x.denominator
    val = cs[-1]
    bp = 1
    for c in reversed(cs[:-1]):
        bp *= b
        val = val * a + c * bp
    return (val > 0) - (val < 0)


def _bisect(p: IntPolynomial, lo: Fraction, hi: Fraction, slo: int,
            tol: Fraction) -> float:
    while hi - lo > tol:
        mid = (lo + hi) / 2
        sm = _sign_at(p, mid)
        if sm == 0:
            return float(mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def _approx_roots(f: IntPolynomial):
    # float approximations of the roots; None when the companion-matrix
    # route is unusable (coefficient spread too wide, or no convergence)
    scale = max(abs(c) for c in f.coeffs)
    cs = [float(Fraction(c, scale)) for c in reversed(f.coeffs)]
    if cs[0] == 0.0 or not all(math.isfinite(c) for c in cs):
        return None
    try:
        rts = np.roots(cs)
    except np.linalg.LinAlgError:
        return None
    return sorted(float(r.real) for r in rts)


def _deflate_at(f: IntPolynomial, root: Fraction) -> IntPolynomial:
    num, den = root.numerator, root.denominator
    return poly_divexact(f, IntPolynomial((-num, den)))


def _roots_squarefree(f: IntPolynomial, tol: Fraction):
    """All real roots of a squarefree polynomial, as floats.

    Fast path: approximate roots give candidate separators whose exact
    signs certify the isolation.  If the certificate does not account
    for every root, fall back to exact Sturm-chain isolation, which
    also detects genuinely non-real roots.
    """
    d = f.degree
    if d <= 0:
        return []
    if d == 1:
        return [float(Fraction(-f.coeffs[0], f.coeffs[1]))]
    approx = _approx_roots(f)
    if approx is None:
        return _roots_sturm(f, tol)
    bound = _cauchy_bound(f)
    seps = [-bound]
    prev = None
    for r in approx:
        if prev is not None and r - prev > 1e-12:
            mid = Fraction(prev) + Fraction(r - prev) / 2
            if -bound < mid < bound:
                seps.append(mid)
        prev = r
    seps.append(bound)
    signs = []
    for s in seps:
        sg = _sign_at(f, s)
        if sg == 0:
            # the separator itself is a (rational) root: peel and redo
            rest = _deflate_at(f, s)
            return sorted([float(s)] + _roots_squarefree(rest, tol))
        signs.append(sg)
    changes = sum(
        1 for i in range(len(seps) - 1) if signs[i] * signs[i + 1] < 0
    )
    if changes != d:
        return _roots_sturm(f, tol)
    roots = []
    for i in range(len(seps) - 1):
        if signs[i] * signs[i + 1] < 0:
            roots.append(_bisect(f, seps[i], seps[i + 1], signs[i], tol))
    return roots


def _fstrip(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _frem(a, b):
    # remainder of a mod b over Fraction lists (low degree first)
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db:
        k = len(r) - 1 - db
        q = r[-1] / b[-1]
        for i, bc in enumerate(b):
            r[i + k] -= q * bc
        r.pop()
        _fstrip(r)
    return r


def _sturm_chain(f: IntPolynomial):
    p0 = [Fraction(c) for c in f.coeffs]
    p1 = _fstrip([Fraction(i * c) for i, c in enumerate(f.coeffs)][1:])
    chain = [p0, p1]
    while len(chain[-1]) - 1 > 0:
        r = [-c for c in _frem(chain[-2], chain[-1])]
        if not r:
            raise ValueError("Sturm chain collapsed; input not squarefree")
        chain.append(r)
    return chain


def _feval_sign(cs, x: Fraction) -> int:
    val = Fraction(0)
    for c in reversed(cs):
        val = val * x + c
    return (val > 0) - (val < 0)


def _variations(chain, x: Fraction) -> int:
    signs = [s for s in (_feval_sign(cs, x) for cs in chain) if s != 0]
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def _roots_sturm(f: IntPolynomial, tol: Fraction):
    d = f.degree
    chain = _sturm_chain(f)
    bound = _cauchy_bound(f)
    va = _variations(chain, -bound)
    vb = _variations(chain, bound)
    if va - vb != d:
        raise ValueError(
            f"polynomial of degree {d} has only {va - vb} real roots; "
            "expected a real-rooted input"
        )
    roots = []
    stack = [(-bound, bound, va, vb)]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        cnt = vlo - vhi
        if cnt == 0:
            continue
        if cnt == 1:
            slo = _sign_at(f, lo)
            shi = _sign_at(f, hi)
            assert slo * shi < 0
            roots.append(_bisect(f, lo, hi, slo, tol))
            continue
        mid = (lo + hi) / 2
        if _sign_at(f, mid) == 0:
            # rational root on the cut: peel it off and restart clean
            rest = _deflate_at(f, mid)
            return sorted([float(mid)] + _roots_squarefree(rest, tol))
        vm = _variations(chain, mid)
        stack.append((lo, mid, vlo, vm))
        stack.append((mid, hi, vm, vhi))
    return sorted(roots)


def real_root_pairs(p: IntPolynomial, tol: float = 1e-13):
    """All real roots of p with multiplicities, sorted ascending.

    Returns a list of (root, multiplicity) pairs.  Raises ValueError if
    the root count falls short of the degree, which flags a polynomial
    that is not real-rooted (symmetric-matrix characteristic
    polynomials always are).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    ftol = Fraction(tol)
    _, factors = squarefree_factors(p)
    pairs = []
    for fac, mult in factors:
        for r in _roots_squarefree(fac, ftol):
            pairs.append((r, mult))
    pairs.sort(key=lambda t: t[0])
    if sum(m for _, m in pairs) != p.degree:
        raise ValueError("real root count does not match the degree")
    return pairs


def real_roots(p: IntPolynomial, tol: float = 1e-13):
    """Flattened real roots (each repeated per multiplicity)."""
    out = []
    for r, m in real_root_pairs(p, tol):
        out.extend([r] * m)
    return out
