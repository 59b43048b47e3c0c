"""Graded syzygies of the Jacobian ideal of a reduced plane curve.

Everything here reduces to exact linear algebra on one family of matrices:
the stacked multiplication matrix sending a triple (a, b, c) of degree-m
forms to a f_x + b f_y + c f_z.  Its column span is the degree m + d - 1
piece of the Jacobian ideal, its kernel is the degree-m piece of the
relation module.  Ranks and left kernels are cached per (curve, degree)
because the same matrix backs several invariants.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .exactlin import QMatrix, kernel_basis, rank
from .ring3 import (HPoly, Mono, dim_graded, mono_basis, _basis_index,
                    mult_matrix, partials)


class KoszulMismatch(ArithmeticError):
    """Closed-form and rank computations of the Koszul dimension disagree."""


class RelationViolated(ArithmeticError):
    """A cross-checked identity between invariants failed."""


class NotStabilized(ArithmeticError):
    """The Milnor sequence is not constant where it must be."""


class DegreeMismatch(ValueError):
    """Operands have incompatible degrees."""


class SyzygyTriple(NamedTuple):
    a: HPoly
    b: HPoly
    c: HPoly

    def is_relation(self, f: HPoly) -> bool:
        fx, fy, fz = partials(f)
        return (self.a * fx + self.b * fy + self.c * fz).is_zero()


class GradedProfile(NamedTuple):
    """Integer invariant tabulated over a contiguous degree range."""
    label: str
    start: int
    dims: tuple

    def as_dict(self) -> dict:
        return {self.start + i: v for i, v in enumerate(self.dims)}


_JDIM: dict = {}
_LKER: dict = {}
_KOSZUL: dict = {}
_SATDIM: dict = {}


def clear_caches() -> None:
    _JDIM.clear()
    _LKER.clear()
    _KOSZUL.clear()
    _SATDIM.clear()


def gradient_matrix(f: HPoly, m: int) -> QMatrix:
    """Matrix of (a,b,c) -> a f_x + b f_y + c f_z from degree m triples.

    Rows follow mono_basis(m + d - 1); the columns are the three mult_matrix
    blocks for f_x, f_y, f_z side by side.
    """
    fx, fy, fz = partials(f)
    blocks = [mult_matrix(g, m) for g in (fx, fy, fz)]
    nrows = dim_graded(m + f.degree - 1)
    ncols = sum(b.cols for b in blocks)
    flat = []
    for i in range(nrows):
        for b in blocks:
            flat.extend(b.row(i))
    return QMatrix(nrows, ncols, flat)


def jacobian_dim(f: HPoly, t: int) -> int:
    """Dimension of the degree-t piece of the Jacobian ideal (f_x, f_y, f_z)."""
    key = (f, t)
    if key in _JDIM:
        return _JDIM[key]
    m = t - (f.degree - 1)
    if m < 0:
        val = 0
    else:
        val = rank(gradient_matrix(f, m))
    _JDIM[key] = val
    return val


def _jac_left_kernel(f: HPoly, t: int) -> list:
    """Basis (integer rows) of the annihilator of the Jacobian ideal piece
    inside the dual of the degree-t graded piece."""
    key = (f, t)
    if key in _LKER:
        return _LKER[key]
    m = t - (f.degree - 1)
    if m < 0:
        rows = [[0] * dim_graded(t) for _ in range(dim_graded(t))]
        for i in range(dim_graded(t)):
            rows[i][i] = 1
    else:
        mat = gradient_matrix(f, m).transpose()
        rows = []
        for v in kernel_basis(mat):
            den = 1
            for q in v:
                d_ = q.denominator
                if d_ != 1:
                    den = den * d_ // _gcd(den, d_)
            rows.append([int(q * den) for q in v])
    _LKER[key] = rows
    _JDIM.setdefault((f, t), dim_graded(t) - len(rows))
    return rows


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def ar_dim(f: HPoly, m: int) -> int:
    """Dimension of the degree-m piece of the module of relations among the
    partial derivatives of f."""
    if m < 0:
        return 0
    return 3 * dim_graded(m) - jacobian_dim(f, m + f.degree - 1)


def ar_basis(f: HPoly, m: int) -> list:
    """Kernel basis of gradient_matrix(f, m) as SyzygyTriple objects."""
    if f.degree < 2:
        raise ValueError("curve degree must be at least 2")
    if m < 0:
        return []
    n = dim_graded(m)
    out = []
    for v in kernel_basis(gradient_matrix(f, m)):
        out.append(SyzygyTriple(
            HPoly.from_coeff_vector(m, v[:n]),
            HPoly.from_coeff_vector(m, v[n:2 * n]),
            HPoly.from_coeff_vector(m, v[2 * n:])))
    _JDIM.setdefault((f, m + f.degree - 1), 3 * n - len(out))
    return out


def koszul_dim(f: HPoly, m: int) -> int:
    """Dimension of the degree-m span of the three sign-alternating relations
    built from pairs of partials, cross-checked against the closed formula
    3 dim S_{m-d+1} - dim S_{m-2d+2}."""
    key = (f, m)
    if key in _KOSZUL:
        return _KOSZUL[key]
    d = f.degree
    formula = 3 * dim_graded(m - d + 1) - dim_graded(m - 2 * d + 2)
    if m - d + 1 < 0:
        computed = 0
    else:
        fx, fy, fz = partials(f)
        zero = HPoly.zero(d - 1)
        triples = [(zero, fz, -fy), (-fz, zero, fx), (fy, -fx, zero)]
        n = dim_graded(m)
        cols = []
        for u in mono_basis(m - d + 1):
            um = HPoly.monomial(u)
            for (a, b, c) in triples:
                vec = ((um * a).coeff_vector() + (um * b).coeff_vector()
                       + (um * c).coeff_vector())
                cols.append(vec)
        computed = rank(QMatrix.from_columns(cols)) if cols else 0
        assert len(cols) == 0 or len(cols[0]) == 3 * n
    if computed != formula:
        raise KoszulMismatch(
            "koszul dimension at m=%d: rank %d vs formula %d" % (m, computed, formula))
    _KOSZUL[key] = formula
    return formula


def er_dim(f: HPoly, m: int) -> int:
    """Dimension of the degree-m piece of the essential (non-trivial)
    relation module: ar_dim minus the span of the trivial relations."""
    a = ar_dim(f, m)
    k = koszul_dim(f, m)
    if a < k:
        raise RelationViolated("trivial relations exceed all relations at m=%d" % m)
    return a - k


def mdr(f: HPoly) -> int | None:
    """Minimal degree of a non-trivial relation; None when no such relation
    exists in degrees up to 3(d-1)."""
    for q in range(0, 3 * (f.degree - 1) + 1):
        if er_dim(f, q):
            return q
    return None


def milnor_dim(f: HPoly, k: int) -> int:
    """Dimension of the degree-k piece of S/(f_x, f_y, f_z)."""
    return dim_graded(k) - jacobian_dim(f, k)


def smooth_milnor_dim(d: int, k: int) -> int:
    """Degree-k coefficient of ((1 - t^(d-1)) / (1 - t))^3, the Milnor
    algebra Hilbert function shared by all smooth curves of degree d."""
    if d < 1:
        raise ValueError("degree must be positive")
    total = 0
    sign = 1
    binom3 = (1, 3, 3, 1)
    for i in range(4):
        total += sign * binom3[i] * dim_graded(k - i * (d - 1))
        sign = -sign
    return total


def tau(f: HPoly) -> int:
    """Global Tjurina number: the stable value of milnor_dim in degrees
    3(d-2), 3(d-2)+1, 3(d-2)+2."""
    t = 3 * (f.degree - 2)
    vals = [milnor_dim(f, t), milnor_dim(f, t + 1), milnor_dim(f, t + 2)]
    if vals[0] == vals[1] == vals[2]:
        return vals[0]
    # a smooth curve has the one-dimensional socle at 3(d-2) and nothing
    # beyond; its Tjurina number is zero
    if vals == [1, 0, 0] and milnor_dim(f, t + 3) == 0:
        return 0
    raise NotStabilized("milnor dimensions %s at degrees %d..%d" % (vals, t, t + 2))


def ct(f: HPoly) -> int:
    """Largest q such that the Milnor algebra agrees with the smooth one in
    every degree <= q.  Requires f singular; cross-checked against
    mdr(f) + d - 2."""
    d = f.degree
    top = 3 * (d - 2) + 1
    found = None
    for k in range(0, top + 1):
        if milnor_dim(f, k) != smooth_milnor_dim(d, k):
            found = k - 1
            break
    if found is None:
        raise ValueError("Milnor algebra looks smooth through degree %d" % top)
    r = mdr(f)
    if r is None or found != r + d - 2:
        raise RelationViolated(
            "coincidence threshold %d does not equal mdr + d - 2 = %s"
            % (found, "infinity" if r is None else r + d - 2))
    return found


def _monomial_shift_index(k: int, t: int, var: int) -> list:
    """Index map: position j in mono_basis(k) -> position of x_var^(t-k) * m_j
    in mono_basis(t)."""
    n = t - k
    idx = _basis_index(t)
    out = []
    for m in mono_basis(k):
        e = list(m)
        e[var] += n
        out.append(idx[Mono(*e)])
    return out


def sat_basis(f: HPoly, k: int) -> list:
    """Basis of the degree-k piece of the saturation of the Jacobian ideal.

    A form g lies in the saturation exactly when g times every sufficiently
    high power of each variable lands in the ideal.  Powers of the three
    variables with exponent N are enough once k + N exceeds 3(d-2), the top
    degree where ideal and saturation can differ, so a single colon
    computation at that cutoff is exact.
    """
    d = f.degree
    nstar = max(1, 3 * (d - 2) + 1 - k)
    t = k + nstar
    lker = _jac_left_kernel(f, t)
    nk = dim_graded(k)
    if not lker:
        out = [HPoly.monomial(m) for m in mono_basis(k)]
        _SATDIM[(f, k)] = len(out)
        return out
    rows = []
    for var in range(3):
        shift = _monomial_shift_index(k, t, var)
        for l in lker:
            rows.append([l[shift[j]] for j in range(nk)])
    basis = kernel_basis(QMatrix.from_rows(rows)) if rows else []
    out = [HPoly.from_coeff_vector(k, v) for v in basis]
    _SATDIM[(f, k)] = len(out)
    return out


def saturation_dim(f: HPoly, k: int) -> int:
    key = (f, k)
    if key not in _SATDIM:
        sat_basis(f, k)
    return _SATDIM[key]


def h0m_dim(f: HPoly, k: int) -> int:
    """Dimension of the degree-k piece of (saturation / Jacobian ideal),
    the torsion that obstructs freeness."""
    val = saturation_dim(f, k) - jacobian_dim(f, k)
    if val < 0:
        raise RelationViolated("saturation smaller than ideal at k=%d" % k)
    return val


def defect(f: HPoly, k: int) -> int:
    """tau(f) minus the number of conditions the singular subscheme imposes
    on forms of degree k."""
    return tau(f) - (dim_graded(k) - saturation_dim(f, k))


def jacobian_span_equal(f: HPoly, g: HPoly) -> bool:
    """Whether f and g have the same span of partial derivatives."""
    if f.degree != g.degree:
        raise DegreeMismatch("degrees %d and %d" % (f.degree, g.degree))
    cols_f = [p.coeff_vector() for p in partials(f)]
    cols_g = [p.coeff_vector() for p in partials(g)]
    rf = rank(QMatrix.from_columns(cols_f))
    rg = rank(QMatrix.from_columns(cols_g))
    rboth = rank(QMatrix.from_columns(cols_f + cols_g))
    return rf == rg == rboth


def h0m_mult_kernel(f: HPoly, g: HPoly, m: int) -> int:
    """Kernel dimension of multiplication by g from the degree-m piece of
    (saturation / ideal) to the degree m + deg g piece."""
    basis = sat_basis(f, m)
    if not basis:
        return 0
    t = m + g.degree
    lker = _jac_left_kernel(f, t)
    if not lker:
        return len(basis) - jacobian_dim(f, m)
    idx = _basis_index(t)
    cols = []
    for b in basis:
        prod = g * b
        vec = [Fraction(0)] * dim_graded(t)
        for mono, c in prod.terms.items():
            vec[idx[mono]] = c
        cols.append([sum(Fraction(li) * vi for li, vi in zip(l, vec) if li and vi)
                     for l in lker])
    mat = QMatrix.from_columns(cols)
    kdim = len(kernel_basis(mat))
    return kdim - jacobian_dim(f, m)


def sat_dim_iterative(f: HPoly, k: int, plateau: int = 2) -> int:
    """Saturation dimension via the increasing union over N of
    {g : g * (every degree-N monomial) lies in the ideal}.

    Stops when `plateau` + 1 consecutive N give equal dimension or when N
    reaches the provable cutoff.  Kept as a cross-check for the direct
    computation in sat_basis; the plateau rule alone can stop too early on
    curves whose saturation fills in only at high N.
    """
    d = f.degree
    cutoff = max(1, 3 * (d - 2) + 1 - k)
    nk = dim_graded(k)
    dims = []
    for n in range(1, cutoff + 1):
        t = k + n
        lker = _jac_left_kernel(f, t)
        if not lker:
            dims.append(nk)
        else:
            rows = []
            idx = _basis_index(t)
            for u in mono_basis(n):
                shift = []
                for mm in mono_basis(k):
                    shift.append(idx[Mono(mm.ex + u.ex, mm.ey + u.ey, mm.ez + u.ez)])
                for l in lker:
                    rows.append([l[s] for s in shift])
            dims.append(nk - rank(QMatrix.from_rows(rows)))
        if len(dims) > plateau and all(v == dims[-1] for v in dims[-plateau - 1:]):
            break
    return dims[-1]
