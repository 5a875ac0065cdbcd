"""Characteristic polynomials and signed coronals.

The coronal of a symmetric integer matrix M with mark vector mu is the
rational function mu^T (xI - M)^{-1} mu.  It is computed exactly: the
Faddeev-LeVerrier recurrence yields both det(xI - M) and the adjugate
adj(xI - M) as integer polynomial data, and the coronal is their ratio
in lowest terms.

The six closed forms cover net-regular graphs with a constant marking
and stars with arbitrary leg signs; each is an exact RationalFn equal
to the generic computation on any valid instance (enforced by tests).
"""

from __future__ import annotations

import numpy as np

from .core import (SignedGraph, canonical_marking, co_regularity,
                   degree_profile, matrix)
from .polys import IntPolynomial, RationalFn, poly_divexact

__all__ = [
    "char_poly",
    "coronal_generic",
    "coronal_of_graph",
    "coronal_A_net_regular",
    "coronal_A_star",
    "coronal_Q_coregular",
    "coronal_Q_star",
    "coronal_L_coregular",
    "coronal_L_star",
    "closed_form_coronal",
    "star_shape",
    "has_eigenvector_marking",
]


def _to_object_int_matrix(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if np.issubdtype(a.dtype, np.floating):
        if not np.all(a == np.round(a)):
            raise ValueError("matrix entries must be integers")
        a = a.astype(np.int64)
    out = np.empty(a.shape, dtype=object)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            out[i, j] = int(a[i, j])
    return out


def _faddeev_leverrier(m, marks=None):
    """Exact char poly of m, plus (optionally) the numerator of the
    coronal for the given mark vector.

    The recurrence M_1 = I, c_{n-k} = -tr(m M_k)/k, M_{k+1} = m M_k +
    c_{n-k} I runs over python integers.  adj(xI - m) equals
    sum_k M_{k+1} x^{n-1-k}, so marks^T adj(xI - m) marks accumulates
    one integer per step.  The trace divisions are exact and the final
    matrix recurrence step must vanish; both are asserted.
    """
    a = _to_object_int_matrix(m)
    n = a.shape[0]
    ident = np.identity(n, dtype=object)
    mu = None
    if marks is not None:
        mu = np.asarray(marks, dtype=object).reshape(n)
    coeffs_hi = [1]
    num_hi = []
    mk = ident
    for k in range(1, n + 1):
        if mu is not None:
            num_hi.append(int(mu @ mk @ mu))
        am = a @ mk
        tr = int(np.trace(am))
        q, r = divmod(-tr, k)
        assert r == 0, "trace step must divide exactly"
        coeffs_hi.append(q)
        mk = am + q * ident
    assert not np.any(mk), "recurrence must terminate at the zero matrix"
    f = IntPolynomial(list(reversed(coeffs_hi)))
    num = IntPolynomial(list(reversed(num_hi))) if mu is not None else None
    return f, num


def char_poly(m) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - m), monic of degree n."""
    f, _ = _faddeev_leverrier(m)
    return f


def coronal_generic(m, marks) -> RationalFn:
    """Exact coronal marks^T (xI - m)^{-1} marks, fully reduced."""
    f, num = _faddeev_leverrier(m, marks)
    return RationalFn(num, f)


def coronal_with_char_poly(m, marks):
    """(coronal, char poly, cofactor) where char poly = cofactor *
    coronal denominator.  The cofactor collects the poles cancelled in
    the reduction; theorem assembly needs it."""
    f, num = _faddeev_leverrier(m, marks)
    cor = RationalFn(num, f)
    dfac = poly_divexact(f, cor.den)
    return cor, f, dfac


def coronal_of_graph(g: SignedGraph, kind: str) -> RationalFn:
    """Coronal of one of the graph's matrices under its canonical
    marking."""
    return coronal_generic(matrix(g, kind), canonical_marking(g))


# ---------------------------------------------------------------------------
# closed forms

def coronal_A_net_regular(n: int, k: int) -> RationalFn:
    """Adjacency coronal n/(x - k) of a net-regular graph whose
    canonical marking is an eigenvector (constant per component
    suffices): A mu = k mu makes mu a (k, mu)-eigenpair."""
    return RationalFn(IntPolynomial((n,)), IntPolynomial((-k, 1)))


def coronal_A_star(n: int, mark_center: int) -> RationalFn:
    """Adjacency coronal of a star with n legs:
    ((n+1)x + 2n*mark_center) / (x^2 - n)."""
    if n < 1:
        raise ValueError("a star needs at least one leg")
    _check_mark(mark_center)
    return RationalFn(IntPolynomial((2 * n * mark_center, n + 1)),
                      IntPolynomial((-n, 0, 1)))


def coronal_Q_coregular(n: int, r: int, k: int) -> RationalFn:
    """Signless-Laplacian coronal n/(x - r - k) for an r-regular,
    net-k-regular graph with eigenvector marking."""
    return RationalFn(IntPolynomial((n,)), IntPolynomial((-(r + k), 1)))


def coronal_Q_star(n: int, mark_center: int) -> RationalFn:
    """Signless-Laplacian coronal of a star with n legs:
    ((n+1)x - (n^2+1) + 2n*mark_center) / (x (x - (n+1)))."""
    if n < 1:
        raise ValueError("a star needs at least one leg")
    _check_mark(mark_center)
    num = IntPolynomial((2 * n * mark_center - (n * n + 1), n + 1))
    den = IntPolynomial((0, -(n + 1), 1))
    return RationalFn(num, den)


def coronal_L_coregular(n: int, r: int, k: int) -> RationalFn:
    """Laplacian coronal n/(x - r + k) for an r-regular, net-k-regular
    graph with eigenvector marking."""
    return RationalFn(IntPolynomial((n,)), IntPolynomial((-(r - k), 1)))


def coronal_L_star(n: int, mark_center: int) -> RationalFn:
    """Laplacian coronal of a star with n legs:
    ((n+1)x - (n^2+1) - 2n*mark_center) / (x (x - (n+1))).

    Note the minus sign on the mark term; it is the mirror of the
    signless form, as the generic oracle confirms on every instance.
    """
    if n < 1:
        raise ValueError("a star needs at least one leg")
    _check_mark(mark_center)
    num = IntPolynomial((-(n * n + 1) - 2 * n * mark_center, n + 1))
    den = IntPolynomial((0, -(n + 1), 1))
    return RationalFn(num, den)


def _check_mark(mark: int):
    if mark not in (1, -1):
        raise ValueError("mark must be +1 or -1")


# ---------------------------------------------------------------------------
# family detection

def has_eigenvector_marking(g: SignedGraph):
    """Net degree k when the canonical marking satisfies A mu = k mu,
    else None.  This is the exact condition under which the net-regular
    and co-regular closed forms hold."""
    reg = co_regularity(g)
    if reg.k is None:
        return None
    mu = canonical_marking(g)
    if np.array_equal(g.adj @ mu, reg.k * mu):
        return reg.k
    return None


def star_shape(g: SignedGraph):
    """(legs, center mark) when the graph is a star with at least one
    leg, else None."""
    if g.n < 2 or g.m != g.n - 1:
        return None
    deg = degree_profile(g).deg
    centers = np.nonzero(deg == g.n - 1)[0]
    if centers.size == 0:
        return None
    center = int(centers[0])
    others = [u for u in range(g.n) if u != center]
    if any(deg[u] != 1 for u in others):
        return None
    return g.n - 1, int(canonical_marking(g)[center])


def closed_form_coronal(g: SignedGraph, kind: str):
    """Dispatch to the matching closed form, or None when no family
    applies.  Returns (name, RationalFn)."""
    kind = kind.upper()
    k = has_eigenvector_marking(g)
    reg = co_regularity(g)
    if kind == "A":
        if k is not None:
            return "net_regular", coronal_A_net_regular(g.n, k)
        shape = star_shape(g)
        if shape is not None:
            return "star", coronal_A_star(*shape)
        return None
    if kind in ("Q", "L"):
        if k is not None and reg.r is not None:
            form = coronal_Q_coregular if kind == "Q" else coronal_L_coregular
            return "coregular", form(g.n, reg.r, k)
        shape = star_shape(g)
        if shape is not None:
            form = coronal_Q_star if kind == "Q" else coronal_L_star
            return "star", form(*shape)
        return None
    raise ValueError(f"unknown matrix kind {kind!r}")
