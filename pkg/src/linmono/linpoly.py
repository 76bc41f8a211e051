"""q-linearized polynomials: L(x) = a_0 x + a_1 x^q + ... + a_n x^(q^n).

A LinPoly keeps the compact coefficient vector (a_0, ..., a_n) together
with two field contexts: `base`, the F_q that fixes the meaning of q, and
`field`, where the coefficients live (equal to base, or an extension layer
above it; specialization moves coefficients up the tower).  Evaluation
walks iterated Frobenius powers and never materializes the dense degree
q^n polynomial, so the q-degree can be large even when to_poly would be
refused.

The additive structure is what the rest of the package leans on: the
roots of L form an F_q-vector space (root_space computes it as a kernel),
and the square class of the discriminant of L(x)/x is readable off the
constant coefficient (disc_square_class).
"""

from __future__ import annotations

import enum

from . import poly as poly_mod
from .ff import Field, FieldElement, FieldMismatchError, is_square


class SquareClass(enum.Enum):
    ZERO = "Zero"
    SQUARE = "Square"
    NONSQUARE = "NonSquare"

    def __mul__(self, other):
        if not isinstance(other, SquareClass):
            return NotImplemented
        if self is SquareClass.ZERO or other is SquareClass.ZERO:
            return SquareClass.ZERO
        if self is other:
            return SquareClass.SQUARE
        return SquareClass.NONSQUARE


def square_class(a):
    """SquareClass of a field element (odd characteristic only)."""
    if not isinstance(a, FieldElement):
        raise TypeError("square_class expects a FieldElement")
    if a.is_zero:
        return SquareClass.ZERO
    return SquareClass.SQUARE if is_square(a) else SquareClass.NONSQUARE


class LinPoly:
    """A q-linearized polynomial with an explicit base F_q.

    coeffs is (a_0, ..., a_n) with a_n nonzero; n is the q-degree.  The
    coefficient field must be base itself or an extension with base as a
    tower layer.
    """

    __slots__ = ("base", "field", "coeffs")

    def __init__(self, base, coeffs, field=None):
        if not isinstance(base, Field):
            raise TypeError("base must be a Field")
        if field is None:
            field = base
        if not field.has_layer(base):
            raise FieldMismatchError(
                "coefficient field %r does not contain base %r"
                % (field, base))
        reps = tuple(field.coerce_rep(c) for c in coeffs)
        if not reps:
            raise ValueError("need at least one coefficient")
        if reps[-1] == field.zero_rep:
            raise ValueError("leading coefficient a_n must be nonzero")
        self.base = base
        self.field = field
        self.coeffs = reps

    @property
    def q(self):
        return self.base.order

    @property
    def qdeg(self):
        return len(self.coeffs) - 1

    @property
    def is_monic(self):
        return self.coeffs[-1] == self.field.one_rep

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return FieldElement(self.field, self.coeffs[i])
        return self.field.zero()

    def coeff_objs(self):
        return [self.field.rep_to_obj(c) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, LinPoly):
            return NotImplemented
        if other.base != self.base or other.field != self.field:
            raise FieldMismatchError("linearized polynomials over "
                                     "different contexts")
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.base, self.field, self.coeffs))

    def __str__(self):
        from .ff import format_element_obj
        return ",".join(format_element_obj(o) for o in self.coeff_objs())

    def __repr__(self):
        return "LinPoly(q=%d over %s: %s)" % (
            self.q, self.field.spec_string(), self)


def parse_linpoly(base, s, field=None):
    """LinPoly from "a0,a1,...,an" with each a_i an int or a bracketed
    element vector over the coefficient field."""
    tokens = poly_mod.split_top_level(s)
    objs = [poly_mod._parse_element_obj(t) for t in tokens]
    return LinPoly(base, objs, field=field)


# -- dense forms -----------------------------------------------------------

def to_poly(L, target=None):
    """The dense polynomial of degree q^n over target (default: the
    coefficient field).  Refused when q^n would exceed the dense cap; use
    evaluate for large q-degrees."""
    K = _target_field(L, target)
    n = L.qdeg
    q = L.q
    deg = q ** n
    if deg > poly_mod.DENSE_CAP:
        raise _dense_cap_error(q, n)
    z = K.zero_rep
    out = [z] * (deg + 1)
    for i, c in enumerate(L.coeffs):
        out[q ** i] = _up(L, K, c)
    return poly_mod.Poly._mk(K, out)


def reduced(L, target=None):
    """L(x)/x as a dense polynomial of degree q^n - 1: coefficient a_i
    lands at exponent q^i - 1."""
    K = _target_field(L, target)
    n = L.qdeg
    q = L.q
    deg = q ** n - 1
    if deg + 1 > poly_mod.DENSE_CAP:
        raise _dense_cap_error(q, n)
    z = K.zero_rep
    out = [z] * (deg + 1)
    for i, c in enumerate(L.coeffs):
        out[q ** i - 1] = _up(L, K, c)
    return poly_mod.Poly._mk(K, out)


def _dense_cap_error(q, n):
    from .ff import CapExceededError
    return CapExceededError(
        "dense form of q-degree %d over F_%d has degree %d; "
        "use evaluate instead" % (n, q, q ** n))


def _target_field(L, target):
    if target is None:
        return L.field
    if not isinstance(target, Field):
        raise TypeError("target must be a Field")
    if not target.has_layer(L.field):
        raise FieldMismatchError(
            "target %r does not contain the coefficient field %r"
            % (target, L.field))
    return target


def _up(L, K, rep):
    from .ff import embed_rep
    if K == L.field:
        return rep
    return embed_rep(K, L.field, rep)


# -- evaluation and specialization -----------------------------------------

def evaluate(L, x):
    """L(x) for x in the coefficient field or any extension layer above
    it.  Computed as sum a_i * x^(q^i) with iterated Frobenius powers;
    cost is n field powerings, independent of q^n."""
    if not isinstance(x, FieldElement):
        raise TypeError("evaluate expects a FieldElement")
    E = x.field
    if not E.has_layer(L.field):
        raise FieldMismatchError(
            "point lies in %r which does not contain %r" % (E, L.field))
    from .ff import embed_rep
    q = L.q
    t = x.rep
    acc = E.zero_rep
    for i, c in enumerate(L.coeffs):
        if i > 0:
            t = E.pow(t, q)
        if c != L.field.zero_rep:
            cr = c if E == L.field else embed_rep(E, L.field, c)
            acc = E.add(acc, E.mul(cr, t))
    return FieldElement(E, acc)


def specialize(L, alpha):
    """L_alpha = L - (L(alpha)/alpha) x: the unique shift of the x
    coefficient that makes alpha a root.  Coefficients live in alpha's
    field afterwards; the q-degree and leading coefficient are unchanged."""
    if not isinstance(alpha, FieldElement):
        raise TypeError("specialize expects a FieldElement")
    if alpha.is_zero:
        raise ValueError("specialization point must be nonzero")
    if L.qdeg < 1:
        raise ValueError("q-degree must be >= 1 to specialize")
    E = alpha.field
    if not E.has_layer(L.field):
        raise FieldMismatchError(
            "point lies in %r which does not contain %r" % (E, L.field))
    from .ff import embed_rep
    ratio = (evaluate(L, alpha) / alpha).rep
    coeffs = [c if E == L.field else embed_rep(E, L.field, c)
              for c in L.coeffs]
    coeffs[0] = E.sub(coeffs[0], ratio)
    return LinPoly(L.base, coeffs, field=E)


# -- root space ------------------------------------------------------------

def _flatten(ctx, stop, rep, out):
    if ctx == stop:
        out.append(rep)
        return
    b = ctx.base
    if b is None:
        raise FieldMismatchError("%r is not a layer of %r" % (stop, ctx))
    for c in rep:
        _flatten(b, stop, c, out)


def _unflatten(ctx, stop, flat, pos):
    if ctx == stop:
        return flat[pos], pos + 1
    b = ctx.base
    coeffs = []
    for _ in range(ctx.degree):
        c, pos = _unflatten(b, stop, flat, pos)
        coeffs.append(c)
    return tuple(coeffs), pos


def root_space(L, E):
    """Basis (list of FieldElements of E) of the F_q-vector space
    {v in E : L(v) = 0}, where q is L's base order.

    E is flattened to an F_q-space of dimension [E : F_q]; v -> L(v) is
    F_q-linear there, and the kernel is read off by Gaussian elimination.
    """
    if not isinstance(E, Field):
        raise TypeError("E must be a Field")
    if not E.has_layer(L.base):
        raise FieldMismatchError(
            "%r does not contain the base field %r" % (E, L.base))
    if not E.has_layer(L.field):
        raise FieldMismatchError(
            "%r does not contain the coefficient field %r" % (E, L.field))
    K = L.base
    dim = 1
    for layer in E.layers():
        if layer == K:
            break
        dim *= layer.degree
    cols = []
    for j in range(dim):
        flat = [K.zero_rep] * dim
        flat[j] = K.one_rep
        e_rep, _ = _unflatten(E, K, flat, 0)
        w = evaluate(L, FieldElement(E, e_rep))
        out = []
        _flatten(E, K, w.rep, out)
        cols.append(out)
    # matrix rows: M[i][j] = coordinate i of L(basis_j)
    M = [[cols[j][i] for j in range(dim)] for i in range(dim)]
    kernel = _kernel_basis(K, M, dim)
    roots = []
    for vec in kernel:
        rep, _ = _unflatten(E, K, vec, 0)
        roots.append(FieldElement(E, rep))
    return roots


def _kernel_basis(K, M, n):
    """Kernel basis of an n x n matrix over K (rows of raw reps)."""
    rows = [list(r) for r in M]
    z = K.zero_rep
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, n):
            if rows[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = K.inv(rows[r][c])
        rows[r] = [K.mul(inv, v) for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != z:
                f = rows[i][c]
                rows[i] = [K.sub(vi, K.mul(f, vr))
                           for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    pivot_set = set(pivots)
    basis = []
    for fc in range(n):
        if fc in pivot_set:
            continue
        v = [z] * n
        v[fc] = K.one_rep
        for pi, pc in enumerate(pivots):
            v[pc] = K.neg(rows[pi][fc])
        basis.append(v)
    return basis


# -- discriminant square class ---------------------------------------------

def disc_square_class(L):
    """Square class of (-1)^((q^n - 1)/2) * a_0 in the coefficient field.

    For monic L with a_0 != 0 this is the square class of the
    discriminant of L(x)/x (whose constant term is a_0 and whose
    derivative is the constant a_0).  Odd characteristic only.
    """
    if L.base.p == 2:
        raise ValueError("square class is degenerate in characteristic 2")
    c = L.coefficient(0)
    if c.is_zero:
        raise ValueError("constant coefficient a_0 is zero; "
                         "the reduced polynomial is not squarefree")
    parity = ((L.q ** L.qdeg - 1) // 2) % 2
    val = -c if parity else c
    return square_class(val)
