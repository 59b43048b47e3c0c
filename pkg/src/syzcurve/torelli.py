"""Deciding whether a curve is recoverable from its logarithmic bundle.

The positive criteria work through linear systems of low-degree curves cut
out by the singular points: if such a system is nonzero and its base locus
is zero-dimensional (no common component), the curve is certified
recoverable.  Count-based shortcuts certify the same conclusion from the
number of singularities alone.  When no criterion applies the verdict is
"criterion fails" -- an explicit non-answer, not a disproof.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactlin import QMatrix, kernel_basis, in_span
from .polygcd import gcd_many
from .ring3 import HPoly, ProjPoint, eval_at, mono_basis, partials
from .syzygy import DegreeMismatch, ar_dim, gradient_matrix


class NotNodalCurve(ValueError):
    """Criterion needs all declared singularities to be ordinary nodes."""


class WrongSingularityTypes(ValueError):
    """Criterion needs all declared singularities to be nodes or cusps."""


class TangentNotThroughPoint(ValueError):
    """Declared tangent line does not pass through the declared point."""


@dataclass(frozen=True)
class LinearSystem:
    """Basis of the homogeneous forms of fixed degree satisfying the
    imposed point/tangency conditions."""
    degree: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def _eval_row(mono_list, point):
    return [eval_at(HPoly.monomial(m), point) for m in mono_list]


def _tangent_direction(point: ProjPoint, tangent: HPoly) -> tuple:
    """A second point spanning the tangent line, independent of `point`."""
    if eval_at(tangent, point) != 0:
        raise TangentNotThroughPoint(
            "tangent %s does not pass through %s" % (tangent, point))
    coeffs = [tangent.coeff_vector()[i] for i in range(3)]
    line = QMatrix.from_rows([coeffs])
    px, py, pz = point.coords
    for v in kernel_basis(line):
        vx, vy, vz = v
        cross = (py * vz - pz * vy, pz * vx - px * vz, px * vy - py * vx)
        if any(c != 0 for c in cross):
            return (vx, vy, vz)
    raise TangentNotThroughPoint(
        "tangent %s is degenerate at %s" % (tangent, point))


def _derivative_row(mono_list, point, direction):
    row = []
    for m in mono_list:
        g = HPoly.monomial(m)
        gx, gy, gz = partials(g)
        row.append(sum(Fraction(w) * eval_at(p, point)
                       for w, p in zip(direction, (gx, gy, gz))))
    return row


def _solve_system(m: int, rows) -> LinearSystem:
    monos = mono_basis(m)
    if not rows:
        basis = tuple(HPoly.monomial(mo) for mo in monos)
        return LinearSystem(m, basis)
    mat = QMatrix.from_rows(rows)
    basis = tuple(HPoly.from_coeff_vector(m, v) for v in kernel_basis(mat))
    return LinearSystem(m, basis)


def linear_system_points(points, m: int) -> LinearSystem:
    """Forms of degree m vanishing at every given point."""
    monos = mono_basis(m)
    rows = [_eval_row(monos, p) for p in points]
    return _solve_system(m, rows)


def linear_system_cusps(nodes, cusps, m: int) -> LinearSystem:
    """Forms of degree m vanishing at every node, and at each cusp point
    with tangent cone containing the declared cuspidal tangent (vanishing
    plus a directional-derivative condition: two linear conditions per
    cusp)."""
    monos = mono_basis(m)
    rows = [_eval_row(monos, p) for p in nodes]
    for point, tangent in cusps:
        direction = _tangent_direction(point, tangent)
        rows.append(_eval_row(monos, point))
        rows.append(_derivative_row(monos, point, direction))
    return _solve_system(m, rows)


def base_locus_zero_dim(system: LinearSystem) -> bool:
    """True when the members of the system share no curve component."""
    if not system.basis:
        return False
    return gcd_many(system.basis).degree == 0


@dataclass(frozen=True)
class TorelliVerdict:
    status: str        # "torelli" | "criterion_fails" | "dimension_obstruction"
    witness_degree: Optional[int]
    by_count: bool
    detail: str

    @property
    def decided(self) -> bool:
        return self.status == "torelli"


def _node_points(sings):
    points = []
    for s in sings:
        if not (s.stype.kind == "A" and s.stype.params == (1,)):
            raise NotNodalCurve("declared singularity %s is not a node" % s.stype)
        if s.point is None:
            raise NotNodalCurve("node without a declared point")
        points.append(s.point)
    return points


def torelli_nodal(curve) -> TorelliVerdict:
    """Witness search for a nodal curve record: find m (with 2m < d-1 for
    an irreducible curve, 2m < d-2 otherwise) such that the degree-m forms
    through the nodes are nonzero with zero-dimensional base locus.  The
    criterion is sufficient only: exhausting the search returns
    "criterion_fails", never a disproof."""
    points = _node_points(curve.sings)
    if not points:
        raise NotNodalCurve("curve declares no nodes; the nodal criterion "
                            "needs a singular curve")
    d = curve.f.degree
    limit = (d - 1) if curve.irreducible else (d - 2)
    m = 1
    while 2 * m < limit:
        system = linear_system_points(points, m)
        if system.dim > 0 and base_locus_zero_dim(system):
            return TorelliVerdict("torelli", m, False,
                                  "degree-%d system through the %d nodes has "
                                  "zero-dimensional base locus" % (m, len(points)))
        m += 1
    return TorelliVerdict("criterion_fails", None, False,
                          "no admissible witness degree below %s/2" % limit)


def torelli_nodal_count(d: int, n: int, irreducible: bool) -> bool:
    """Count shortcut for nodal curves: n nodes with 2n < d-1 (irreducible)
    or 2n < d-2 (otherwise) always certify recoverability."""
    bound = (d - 1) if irreducible else (d - 2)
    return 2 * n < bound


def torelli_cuspidal(curve) -> TorelliVerdict:
    """Criteria for a curve record whose singularities are nodes and
    ordinary cusps only.

    First the count criterion n + 2*kappa <= 5d/12 - 1; when it certifies,
    a witness is attached if the declared data allow the search.  Otherwise
    a direct witness search over 2m < 5d/6 - 2.  Cusps declared without a
    rational point (or without a tangent) make the witness search
    unavailable.
    """
    d = curve.f.degree
    if not curve.sings:
        raise WrongSingularityTypes("curve declares no singularities; the "
                                    "node-and-cusp criteria need a singular "
                                    "curve")
    nodes = []
    cusps = []
    searchable = True
    missing = 0
    for s in curve.sings:
        if s.stype.kind != "A" or s.stype.params[0] not in (1, 2):
            raise WrongSingularityTypes(
                "declared singularity %s is neither a node nor a cusp" % s.stype)
        if s.stype.params[0] == 1:
            if s.point is None:
                searchable = False
                missing += 1
            else:
                nodes.append(s.point)
        else:
            if s.point is None or s.tangent is None:
                searchable = False
                missing += 1
            else:
                cusps.append((s.point, s.tangent))
    n = sum(1 for s in curve.sings if s.stype.params[0] == 1)
    kappa = sum(1 for s in curve.sings if s.stype.params[0] == 2)

    def find_witness():
        m = 1
        while Fraction(2 * m) < Fraction(5 * d, 6) - 2:
            system = linear_system_cusps(nodes, cusps, m)
            if system.dim > 0 and base_locus_zero_dim(system):
                return m
            m += 1
        return None

    count_ok = Fraction(n + 2 * kappa) <= Fraction(5 * d, 12) - 1
    if count_ok:
        witness = find_witness() if searchable else None
        detail = "%d + 2*%d <= 5*%d/12 - 1" % (n, kappa, d)
        if witness is not None:
            detail += "; witness degree %d attached" % witness
        return TorelliVerdict("torelli", witness, True, detail)
    if not searchable:
        return TorelliVerdict(
            "criterion_fails", None, False,
            "count criterion fails and %d declared singularities lack the "
            "rational point/tangent data needed for a witness search" % missing)
    witness = find_witness()
    if witness is not None:
        return TorelliVerdict("torelli", witness, False,
                              "witness system of degree %d" % witness)
    return TorelliVerdict("criterion_fails", None, False,
                          "no witness degree m with 2m < 5*%d/6 - 2" % d)


def severi_dim(d: int, n: int, kappa: int) -> int:
    """Expected dimension of the family of degree-d curves with n nodes and
    kappa cusps."""
    return d * (d + 3) // 2 - n - 2 * kappa


def moduli_dim(d: int, n: int, kappa: int) -> int:
    """Dimension bound for the family of logarithmic bundles arising from
    such curves."""
    if d % 2 == 1:
        s = (d - 1) // 2
        return 12 * s * s - 3 - 4 * n - 8 * kappa
    s = d // 2
    return 12 * s * s - 12 * s - 4 * n - 8 * kappa


@dataclass(frozen=True)
class DimensionObstruction:
    family_dim: int
    bundle_family_dim: int
    detail: str


def dimension_obstruction(d: int, n: int, kappa: int) -> Optional[DimensionObstruction]:
    """Compare the two dimension counts: when the family of curves is
    strictly bigger than the family of bundles, a generic member of the
    family cannot be recovered from its bundle.  Returns None when the
    counts carry no obstruction."""
    sv = severi_dim(d, n, kappa)
    md = moduli_dim(d, n, kappa)
    if sv > md:
        return DimensionObstruction(
            sv, md,
            "curve family has dimension %d but the bundle family only %d; "
            "members of the family share bundles" % (sv, md))
    return None


def syzygy_growth_delta(f: HPoly, k: int) -> int:
    """Difference of syzygy dimensions one degree up versus d-2 degrees
    down; the quantity controlled by the recovery arguments."""
    return ar_dim(f, k + 1) - ar_dim(f, k - f.degree + 2)


def jacobian_membership(f: HPoly, g: HPoly) -> bool:
    """Is the degree-(d-1) form g a constant linear combination of the
    three partial derivatives of f?"""
    if not g.is_zero() and g.degree != f.degree - 1:
        raise DegreeMismatch("expected degree %d, got %d"
                             % (f.degree - 1, g.degree))
    if g.is_zero():
        return True
    return in_span(g.coeff_vector(), gradient_matrix(f, 0))
