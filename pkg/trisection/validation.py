"""
Trisection Validation

Purpose: Constraint checks, derived quantities and Euler characteristics.

Relative parameters follow the model-piece bookkeeping:
    g_base = k + m - p - b        (genus before splitting stabilizations)
    n      = g_base - p + (m - 1) (2-handles of the compression body)
    s      = G - g_base           (splitting stabilizations)
    k      = 2 g_base + b - 1 - n,  p = g_base - (n - (m - 1))
"""

from typing import List, Union
import logging

from core import InvalidTrisectionError, OracleMismatchError, Surface, surface_euler

from .model import ClosedTrisection, DerivedReport, RelativeTrisection

logger = logging.getLogger(__name__)

Trisection = Union[RelativeTrisection, ClosedTrisection]


def _closed_report(T: ClosedTrisection) -> DerivedReport:
    violations = []
    if T.g < 0 or T.k < 0:
        violations.append(f"negative parameters g={T.g}, k={T.k}")
    if T.g < T.k:
        violations.append(f"g={T.g} < k={T.k}: no genus-g splitting of #^k S^1 x S^2")
    chi = None if violations else 2 + T.g - 3 * T.k
    return DerivedReport(kind="closed", G=T.g, k=T.k, chi=chi, violations=tuple(violations))


def _relative_violations(T: RelativeTrisection) -> List[str]:
    violations = []
    if T.surface_genus < 0:
        violations.append(f"surface genus G={T.surface_genus} < 0")
    if T.k < 0:
        violations.append(f"k={T.k} < 0")
    if T.surface_boundary < 1:
        violations.append(f"surface boundary b={T.surface_boundary} < 1")
    if T.m < 1:
        violations.append("no boundary components (m = 0)")
    for index, ob in enumerate(T.boundary):
        if ob.component_count != 1:
            violations.append(f"boundary {index} has {ob.component_count} pages, expected 1")
        for problem in ob.violations():
            violations.append(f"boundary {index}: {problem}")
    total = sum(page.boundary for page in T.pages)
    if total != T.surface_boundary:
        violations.append(f"sum of page boundaries {total} != b={T.surface_boundary}")
    return violations


def validate(T: Trisection) -> DerivedReport:
    """
    Derived quantities of T with every violated invariant listed.

    Never raises for invariant violations; see require_valid.
    """
    if isinstance(T, ClosedTrisection):
        return _closed_report(T)

    violations = _relative_violations(T)
    m, p, b = T.m, T.p, T.surface_boundary
    g_base = T.k + m - p - b
    n = g_base - p + (m - 1)
    s = T.surface_genus - g_base
    l_i = tuple(2 * page.genus + page.boundary - 1 for page in T.pages)

    if g_base < 0:
        violations.append(f"g_base = k + m - p - b = {T.k} + {m} - {p} - {b} = {g_base} < 0")
    if g_base < p:
        violations.append(f"n = {n} < m - 1 = {m - 1} (g_base={g_base} < p={p})")
    if s < 0:
        violations.append(f"s = G - g_base = {T.surface_genus} - {g_base} = {s} < 0")

    if not violations:
        # the two defining identities, recomputed from the derived values
        if T.k != 2 * g_base + b - 1 - n or p != g_base - (n - (m - 1)):
            violations.append("reconstructed identities for k and p do not hold")

    chi = None if violations else 2 - 2 * g_base + s - b
    report = DerivedReport(
        kind="relative",
        G=T.surface_genus,
        k=T.k,
        b=b,
        m=m,
        p=p,
        g_base=g_base,
        n=n,
        s=s,
        l_i=l_i,
        l=sum(l_i),
        chi=chi,
        violations=tuple(violations),
    )
    logger.debug(f"validate {T}: {report.as_dict()}")
    return report


def require_valid(T: Trisection) -> DerivedReport:
    """validate, raising InvalidTrisectionError on any violation."""
    report = validate(T)
    if not report.is_valid:
        raise InvalidTrisectionError(report.violations, report)
    return report


def euler(T: Trisection) -> int:
    """
    chi(X): closed 2 + g - 3k; relative 2 - 2 g_base + s - b.
    """
    return require_valid(T).chi


def euler_oracle(T: Trisection) -> int:
    """
    Inclusion-exclusion over the pieces: 3 chi(X_i) - 3 chi(X_i cap X_j) + chi(F).

    Closed: the double intersections are genus-g handlebodies.
    Relative: the double intersections are compression bodies from F_{G,b}
    with n + s compressions.
    """
    report = require_valid(T)
    if isinstance(T, ClosedTrisection):
        chi_piece = 1 - T.k
        chi_double = 1 - T.g
        chi_surface = surface_euler(Surface(T.g, 0))
    else:
        surface = Surface(T.surface_genus, T.surface_boundary)
        chi_piece = 1 - T.k
        chi_double = surface_euler(surface) + report.n + report.s
        chi_surface = surface_euler(surface)
    return 3 * chi_piece - 3 * chi_double + chi_surface


def checked_euler(T: Trisection) -> int:
    """euler(T), asserting agreement with the inclusion-exclusion oracle."""
    closed_form = euler(T)
    oracle = euler_oracle(T)
    if closed_form != oracle:
        logger.error(f"Euler mismatch for {T}: formula {closed_form}, oracle {oracle}")
        raise OracleMismatchError(f"chi formula {closed_form} != oracle {oracle} for {T}")
    return closed_form
