"""Univariate Newton polygons over a field with valuation, and the
quasimorphism-distinguishing workflow for the one-point blow-up of the
projective plane.

Valuation convention: order of vanishing, val(s^lambda) = lambda, so smaller
valuation means larger norm. The non-Archimedean norm 10^(-val) appears only
in rendered reports.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidRegime


@dataclass(frozen=True)
class ValuedPoly:
    """Sparse polynomial known only through coefficient valuations:
    terms are (degree, valuation of that coefficient)."""

    terms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        degrees = [d for d, _ in self.terms]
        if len(degrees) < 2:
            raise ValueError("need at least two terms")
        if len(set(degrees)) != len(degrees):
            raise ValueError("degrees must be pairwise distinct")
        if any(d < 0 for d in degrees):
            raise ValueError("degrees must be nonnegative")


@dataclass(frozen=True)
class HullFace:
    slope: Fraction
    horizontal_length: int


@dataclass(frozen=True)
class ValuationMultiset:
    entries: tuple[tuple[Fraction, int], ...]  # (valuation, count)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def distinct(self) -> int:
        return len(self.entries)


def lower_hull(p: ValuedPoly) -> tuple[HullFace, ...]:
    """Faces of the lower convex hull of {(degree, valuation)}, by increasing
    slope; collinear points merge into a single face."""
    pts = sorted((Fraction(d), Fraction(v)) for d, v in p.terms)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless the chain turns strictly upward
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    faces = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        faces.append(HullFace((y2 - y1) / (x2 - x1), int(x2 - x1)))
    return tuple(faces)


def root_valuations(p: ValuedPoly) -> ValuationMultiset:
    """Root valuation multiset: a hull face of slope l and horizontal length
    k contributes k roots of valuation -l."""
    entries = tuple((-face.slope, face.horizontal_length) for face in lower_hull(p))
    return ValuationMultiset(entries)


def blowup_family(alpha, beta) -> ValuedPoly:
    """The eliminated critical-point equation of the one-point blow-up of the
    projective plane with class ratio parameters alpha > beta > 0.

    With support values F(1,0) = F(0,1) = 0, F(0,-1) = beta - alpha and
    F(-1,-1) = -alpha, writing x1 for the monomial of (-1, 0), the two
    log-derivative equations eliminate to
        x1^4 - s^alpha x1 - s^(alpha+beta) = 0,   x2 = s^-alpha x1^2,
    giving coefficient valuations (4, 0), (1, alpha), (0, alpha + beta).
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not alpha > beta > 0:
        raise InvalidRegime(f"need alpha > beta > 0, got alpha={alpha}, beta={beta}")
    return ValuedPoly(((4, Fraction(0)), (1, alpha), (0, alpha + beta)))


@dataclass(frozen=True)
class QuasimorphismReport:
    alpha: Fraction
    beta: Fraction
    valuations: ValuationMultiset

    @property
    def ratio(self) -> Fraction:
        return self.alpha / self.beta

    @property
    def distinct_classes(self) -> int:
        return self.valuations.distinct

    @property
    def conclusion(self) -> str:
        if self.distinct_classes >= 2:
            return f"two distinct Calabi quasimorphisms (α/β = {self.ratio} < 3)"
        return f"criterion inconclusive, single valuation (α/β = {self.ratio} >= 3)"

    def render(self) -> str:
        lines = [f"blow-up family with alpha = {self.alpha}, beta = {self.beta}"]
        lines.append("root valuations of x1^4 - s^α x1 - s^(α+β):")
        for v, count in self.valuations.entries:
            lines.append(
                f"  valuation {v} ({count} root{'s' if count > 1 else ''}): "
                f"spectral norm of x^n at the idempotent = 10^({-v})"
            )
        lines.append(self.conclusion)
        return "\n".join(lines) + "\n"


def quasimorphism_report(alpha, beta) -> QuasimorphismReport:
    """Root-valuation report for the blow-up family; two distinct valuation
    classes appear exactly when alpha < 3 beta, and each class yields an
    idempotent whose spectral norm against the loop class separates the
    induced quasimorphisms."""
    poly = blowup_family(alpha, beta)
    return QuasimorphismReport(Fraction(alpha), Fraction(beta), root_valuations(poly))
