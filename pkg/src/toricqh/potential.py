"""The Landau-Ginzburg superpotential of a fan with a support function:
a Laurent polynomial on the complex torus, with evaluation, log-gradient,
log-Hessian and affine Hessian.

Numeric evaluation uses complex floating point. A parallel exact path over
the rationals is provided for points with rational coordinates; it is what
turns "residual 0" claims at integer points into certificates.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._exact import IntVec
from .errors import NonpositiveCoefficient, NotComplete
from .fan import Fan
from .support import SupportFunction


@dataclass(frozen=True)
class Term:
    exponent: IntVec
    coefficient: float
    s_exponent: Fraction


@dataclass(frozen=True)
class Superpotential:
    dim: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        exps = [t.exponent for t in self.terms]
        if len(set(exps)) != len(exps):
            raise ValueError("superpotential exponents must be pairwise distinct")


def build_potential(f: Fan, F: SupportFunction, coeffs=None) -> Superpotential:
    """One term per ray: numeric coefficient b_rho (default 1, the s = 1
    specialization), exponent n_rho, with F(n_rho) kept for display."""
    if not f.complete:
        raise NotComplete("superpotentials are built on complete fans")
    if coeffs is None:
        coeffs = [1.0] * len(f.rays)
    if len(coeffs) != len(f.rays):
        raise ValueError("need one coefficient per ray")
    for b in coeffs:
        if not b > 0:
            raise NonpositiveCoefficient(f"coefficient {b} is not positive")
    terms = tuple(
        Term(ray, float(b), F.values[i]) for i, (ray, b) in enumerate(zip(f.rays, coeffs))
    )
    return Superpotential(f.dim, terms)


def _power(x, n: int):
    """x**n with integer n; inverts once for negative exponents."""
    if n >= 0:
        return x ** n
    return (1 / x) ** (-n)


def _monomial_at(exponent: IntVec, p) -> complex:
    value = p[0] - p[0] + 1  # one of the right type (complex or Fraction)
    for x, e in zip(p, exponent):
        if e:
            value = value * _power(x, e)
    return value


def _as_exact_point(p) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in p)


def _term_values(W: Superpotential, p, exact: bool):
    if exact:
        p = _as_exact_point(p)
        return [Fraction(t.coefficient) * _monomial_at(t.exponent, p) for t in W.terms]
    p = tuple(complex(x) for x in p)
    return [t.coefficient * _monomial_at(t.exponent, p) for t in W.terms]


def _check_torus(p):
    if any(x == 0 for x in p):
        raise ValueError("point has a zero coordinate; not on the torus")


def eval(W: Superpotential, p, exact: bool = False):
    """sum_rho b_rho p^{n_rho}."""
    _check_torus(p)
    return sum(_term_values(W, p, exact))


def log_gradient(W: Superpotential, p, exact: bool = False):
    """Component i is sum_rho (n_rho)_i b_rho p^{n_rho}: the derivative of
    W(exp(u)) along the i-th logarithmic coordinate."""
    _check_torus(p)
    values = _term_values(W, p, exact)
    return tuple(
        sum(t.exponent[i] * v for t, v in zip(W.terms, values) if t.exponent[i])
        for i in range(W.dim)
    )


def log_hessian(W: Superpotential, p, exact: bool = False):
    """Entry (i, j) is sum_rho (n_rho)_i (n_rho)_j b_rho p^{n_rho}; symmetric."""
    _check_torus(p)
    values = _term_values(W, p, exact)
    d = W.dim
    h = [[0 * values[0]] * d for _ in range(d)]
    for t, v in zip(W.terms, values):
        e = t.exponent
        for i in range(d):
            if not e[i]:
                continue
            for j in range(i, d):
                if e[j]:
                    h[i][j] += e[i] * e[j] * v
    for i in range(d):
        for j in range(i):
            h[i][j] = h[j][i]
    return tuple(tuple(row) for row in h)


def hessian_affine(W: Superpotential, p, exact: bool = False):
    """Ordinary second partials d^2 W / dx_i dx_j at p."""
    _check_torus(p)
    values = _term_values(W, p, exact)
    if exact:
        p = _as_exact_point(p)
    else:
        p = tuple(complex(x) for x in p)
    d = W.dim
    h = [[0 * values[0]] * d for _ in range(d)]
    for t, v in zip(W.terms, values):
        e = t.exponent
        for i in range(d):
            for j in range(i, d):
                factor = e[i] * (e[j] - (1 if i == j else 0))
                if factor:
                    h[i][j] += factor * v / (p[i] * p[j])
    for i in range(d):
        for j in range(i):
            h[i][j] = h[j][i]
    return tuple(tuple(row) for row in h)


def render(W: Superpotential, symbolic: bool = False) -> str:
    """Display W as a sum of monomials in x1..xd.

    With symbolic=True the recorded s-exponents are shown as s^{F(n_rho)}
    factors; otherwise only the numeric coefficients appear.
    """
    parts = []
    for t in W.terms:
        factors = []
        if symbolic and t.s_exponent != 0:
            factors.append(f"s^{t.s_exponent}")
        if not symbolic and t.coefficient != 1.0:
            factors.append(f"{t.coefficient:.12g}")
        for i, e in enumerate(t.exponent):
            if e == 0:
                continue
            factors.append(f"x{i+1}" if e == 1 else f"x{i+1}^{e}")
        parts.append(" ".join(factors) if factors else "1")
    return " + ".join(parts)
