"""Greatest common divisors of homogeneous polynomials in Q[x, y, z].

Strategy: split off the common monomial factor, dehomogenize with respect to
z (valid because the remaining parts are divisible by no single variable),
and compute a bivariate gcd in Q[x, y] by primitive pseudo-remainder
sequences in (Q[y])[x].  Homogenizing the bivariate result and restoring the
monomial factor gives the gcd; it is returned with leading coefficient 1 in
the canonical monomial order.
"""
from __future__ import annotations

from fractions import Fraction

from .exactlin import in_span, solve
from .ring3 import HPoly, Mono, mult_matrix


class AllZero(ValueError):
    """gcd of an empty or all-zero family is undefined."""


# -- univariate polynomials over Q: dense coefficient lists, index = power --

def _u_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _u_is_zero(p: list) -> bool:
    return not p


def _u_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return _u_trim(out)


def _u_divmod(p: list, q: list) -> tuple:
    if _u_is_zero(q):
        raise ZeroDivisionError("univariate division by zero")
    r = list(p)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q):
        c = r[-1] / lead
        k = len(r) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            r[k + i] -= c * b
        _u_trim(r)
        if not r:
            break
    return quo, r


def _u_gcd(p: list, q: list) -> list:
    p, q = _u_trim(list(p)), _u_trim(list(q))
    while q:
        p, q = q, _u_divmod(p, q)[1]
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


# -- bivariate polynomials Q[x, y]: list over x-power of univariate-in-y --

def _b_trim(p: list) -> list:
    while p and _u_is_zero(p[-1]):
        p.pop()
    return p


def _b_content(p: list) -> list:
    g: list = []
    for c in p:
        if not _u_is_zero(c):
            g = _u_gcd(g, c)
            if len(g) == 1:
                return g
    return g


def _b_scale(p: list, u: list) -> list:
    return _b_trim([_u_mul(c, u) for c in p])


def _b_divide_content(p: list, cont: list) -> list:
    out = []
    for c in p:
        quo, rem = _u_divmod(c, cont)
        if not _u_is_zero(rem):
            raise ArithmeticError("content division not exact")
        out.append(quo)
    return _b_trim(out)


def _b_prem(p: list, q: list) -> list:
    """Pseudo-remainder of p by q in (Q[y])[x]."""
    r = _b_trim([list(c) for c in p])
    dq = len(q) - 1
    lead = q[-1]
    while r and len(r) - 1 >= dq:
        k = len(r) - 1 - dq
        top = r[-1]
        # r <- lead*r - top*x^k*q; the top x-coefficient cancels exactly
        r = [_u_mul(c, lead) for c in r]
        for i, qc in enumerate(q):
            delta = _u_mul(qc, top)
            tgt = r[k + i]
            tgt = tgt + [Fraction(0)] * (len(delta) - len(tgt))
            for j, v in enumerate(delta):
                tgt[j] -= v
            r[k + i] = _u_trim(tgt)
        r = _b_trim(r)
    return r


def _b_primitive(p: list) -> list:
    p = _b_trim(p)
    if not p:
        return p
    cont = _b_content(p)
    return _b_divide_content(p, cont)


def _b_gcd(p: list, q: list) -> list:
    """Gcd in Q[x, y]; result is primitive in (Q[y])[x]."""
    p, q = _b_trim([list(c) for c in p]), _b_trim([list(c) for c in q])
    if not p:
        return _b_primitive(q)
    if not q:
        return _b_primitive(p)
    cont = _u_gcd(_b_content(p), _b_content(q))
    a, b = _b_primitive(p), _b_primitive(q)
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            # degree 0 in x and primitive: unit in (Q[y])[x]
            g = [[Fraction(1)]]
            break
        r = _b_prem(a, b)
        if not r:
            g = b
            break
        a, b = b, _b_primitive(r)
    return _b_scale(g, cont)


# -- bridge between homogeneous 3-variable and bivariate representations --

def _mono_min(f: HPoly) -> Mono:
    ex = min(m.ex for m in f.terms)
    ey = min(m.ey for m in f.terms)
    ez = min(m.ez for m in f.terms)
    return Mono(ex, ey, ez)


def _dehomogenize(f: HPoly) -> list:
    """f(x, y, 1) as an element of Q[x, y]; assumes z does not divide f."""
    dx = max(m.ex for m in f.terms)
    p: list = [[] for _ in range(dx + 1)]
    for m, c in f.terms.items():
        col = p[m.ex]
        if len(col) <= m.ey:
            col += [Fraction(0)] * (m.ey + 1 - len(col))
        col[m.ey] += c
    return _b_trim([_u_trim(c) for c in p])


def _homogenize(p: list) -> HPoly:
    deg = 0
    for i, c in enumerate(p):
        for j, v in enumerate(c):
            if v:
                deg = max(deg, i + j)
    terms = {}
    for i, c in enumerate(p):
        for j, v in enumerate(c):
            if v:
                terms[Mono(i, j, deg - i - j)] = v
    return HPoly(deg, terms)


def _gcd_pair(f: HPoly, g: HPoly) -> HPoly:
    mf, mg = _mono_min(f), _mono_min(g)
    common = Mono(min(mf.ex, mg.ex), min(mf.ey, mg.ey), min(mf.ez, mg.ez))
    f1 = HPoly(f.degree - mf.degree,
               {Mono(m.ex - mf.ex, m.ey - mf.ey, m.ez - mf.ez): c
                for m, c in f.terms.items()})
    g1 = HPoly(g.degree - mg.degree,
               {Mono(m.ex - mg.ex, m.ey - mg.ey, m.ez - mg.ez): c
                for m, c in g.terms.items()})
    core = _homogenize(_b_gcd(_dehomogenize(f1), _dehomogenize(g1)))
    return HPoly.monomial(common) * core


def gcd_many(polys) -> HPoly:
    """Gcd of a family of homogeneous polynomials, monic in canonical order.

    Zero polynomials in the family are ignored; if every member is zero the
    family has no gcd and AllZero is raised.
    """
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        raise AllZero("gcd of an all-zero family")
    g = nonzero[0]
    for f in nonzero[1:]:
        if g.degree == 0:
            break
        g = _gcd_pair(g, f)
    return g.monic()


def divides(g: HPoly, f: HPoly) -> bool:
    """Whether g divides f exactly (both homogeneous, g nonzero)."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return True
    if f.degree < g.degree:
        return False
    return in_span(f.coeff_vector(), mult_matrix(g, f.degree - g.degree))


def exact_quotient(f: HPoly, g: HPoly) -> HPoly:
    """f / g when the division is exact; raises ArithmeticError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return HPoly.zero(max(f.degree - g.degree, 0))
    k = f.degree - g.degree
    if k < 0:
        raise ArithmeticError("quotient degree would be negative")
    sol = solve(mult_matrix(g, k), f.coeff_vector())
    if sol is None:
        raise ArithmeticError("division is not exact")
    return HPoly.from_coeff_vector(k, sol)
