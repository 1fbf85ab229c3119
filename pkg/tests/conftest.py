import cmath
from fractions import Fraction

import pytest


def frac(x) -> Fraction:
    return Fraction(x)


def fracs(seq):
    return tuple(Fraction(x) for x in seq)


def match_complex_sets(found, expected, tol=1e-8):
    """Greedy matching of two complex multisets within tol; order-free."""
    found = sorted(found, key=lambda z: (z.real, z.imag))
    expected = sorted(expected, key=lambda z: (z.real, z.imag))
    if len(found) != len(expected):
        return False
    remaining = list(expected)
    for z in found:
        best = min(range(len(remaining)), key=lambda i: abs(remaining[i] - z))
        if abs(remaining[best] - z) > tol:
            return False
        remaining.pop(best)
    return True


def match_point_sets(found, expected, tol=1e-8):
    """Match multisets of coordinate tuples within tol per coordinate."""
    if len(found) != len(expected):
        return False
    remaining = list(expected)
    for p in found:
        for i, q in enumerate(remaining):
            if all(abs(a - b) <= tol for a, b in zip(p, q)):
                remaining.pop(i)
                break
        else:
            return False
    return True


def roots_of_unity(n):
    return [cmath.exp(2j * cmath.pi * k / n) for k in range(n)]


@pytest.fixture(scope="session")
def u8():
    from toricqh import corpus

    return corpus.build("u8")
