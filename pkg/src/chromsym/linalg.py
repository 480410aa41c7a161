"""Exact rational linear algebra on top of python-flint.

Matrices cross the module boundary as ``flint.fmpq_mat``; polynomial results
come back as lists of ``Fraction`` (constant term first).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import flint


def fq(x) -> flint.fmpq:
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def to_fraction(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def matrix(rows: Sequence[Sequence]) -> flint.fmpq_mat:
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    return flint.fmpq_mat(nr, nc, [fq(v) for row in rows for v in row])


def identity(d: int) -> flint.fmpq_mat:
    m = flint.fmpq_mat(d, d)
    for i in range(d):
        m[i, i] = 1
    return m


def zeros(r: int, c: int | None = None) -> flint.fmpq_mat:
    return flint.fmpq_mat(r, r if c is None else c)


def to_rows(m: flint.fmpq_mat) -> list[list[Fraction]]:
    return [[to_fraction(m[i, j]) for j in range(m.ncols())] for i in range(m.nrows())]


def to_float_array(m: flint.fmpq_mat):
    import numpy as np

    d, c = m.nrows(), m.ncols()
    out = np.empty((d, c))
    for i in range(d):
        for j in range(c):
            v = m[i, j]
            out[i, j] = int(v.p) / int(v.q)
    return out


def trace(m: flint.fmpq_mat) -> Fraction:
    return sum((to_fraction(m[i, i]) for i in range(m.nrows())), Fraction(0))


def poly_coeffs(p) -> list[Fraction]:
    return [to_fraction(c) if isinstance(c, flint.fmpq) else Fraction(int(c)) for c in p.coeffs()]


def charpoly(m: flint.fmpq_mat) -> list[Fraction]:
    """det(xI - m), constant term first."""
    return poly_coeffs(m.charpoly())


def minpoly(m: flint.fmpq_mat) -> list[Fraction]:
    return poly_coeffs(m.minpoly())


def is_squarefree(coeffs: Sequence[Fraction]) -> bool:
    p = flint.fmpq_poly([fq(c) for c in coeffs])
    if p.degree() <= 0:
        return True
    return p.gcd(p.derivative()).degree() == 0


def rank(m: flint.fmpq_mat) -> int:
    return m.rank()


def solve(a: flint.fmpq_mat, b: flint.fmpq_mat) -> flint.fmpq_mat:
    return a.solve(b)


def inverse(a: flint.fmpq_mat) -> flint.fmpq_mat:
    return a.inv()


# ---------------------------------------------------------------------------
# Root location

def _integer_poly(coeffs: Sequence[Fraction]) -> flint.fmpz_poly:
    p = flint.fmpq_poly([fq(c) for c in coeffs])
    return p.numer()


def negative_real_part_roots(coeffs: Sequence[Fraction], max_prec: int = 4096) -> dict:
    """Certify which roots of a rational polynomial lie left of, on, or right of the imaginary axis.

    Returns ``{"negative": [...], "zero": [...], "positive": [...]}`` with complex
    approximations (repeated by multiplicity).  Each root is placed from a
    certified arb ball; a ball that keeps straddling the axis up to ``max_prec``
    bits is settled exactly: the root is on the axis iff it is a root of
    gcd(Re p(iy), Im p(iy)).
    """
    p = _integer_poly(coeffs)
    result: dict[str, list[complex]] = {"negative": [], "zero": [], "positive": []}
    if p.degree() <= 0:
        return result
    saved = flint.ctx.prec
    try:
        for factor, mult in p.factor_squarefree()[1]:
            if factor.degree() <= 0:
                continue
            flint.ctx.prec = saved
            while True:
                local: dict[str, list[complex]] = {"negative": [], "zero": [], "positive": []}
                pending = []
                for r, _ in factor.complex_roots():
                    re = r.real
                    if re < 0:
                        local["negative"].append(complex(r))
                    elif re > 0:
                        local["positive"].append(complex(r))
                    elif re.is_zero():
                        local["zero"].append(complex(r))
                    else:
                        pending.append(complex(r))
                if not pending or flint.ctx.prec >= max_prec:
                    break
                flint.ctx.prec *= 2
            if pending:
                axis = _imaginary_axis_roots(factor)
                for z in pending:
                    if not any(abs(z.imag - y) <= 1e-6 * max(1.0, abs(y)) for y in axis):
                        raise ArithmeticError(f"could not place root {z}")
                    local["zero"].append(z)
            for key, roots in local.items():
                result[key].extend(z for z in roots for _ in range(mult))
    finally:
        flint.ctx.prec = saved
    return result


def _imaginary_axis_roots(p: flint.fmpz_poly) -> list[float]:
    """Real y with p(iy) = 0."""
    coeffs = [int(c) for c in p.coeffs()]
    re_part = [0] * len(coeffs)
    im_part = [0] * len(coeffs)
    for k, c in enumerate(coeffs):
        unit = k % 4  # i^k
        if unit == 0:
            re_part[k] += c
        elif unit == 1:
            im_part[k] += c
        elif unit == 2:
            re_part[k] -= c
        else:
            im_part[k] -= c
    a = flint.fmpz_poly(re_part)
    b = flint.fmpz_poly(im_part)
    g = b if a.is_zero() else a if b.is_zero() else a.gcd(b)
    if g.degree() <= 0:
        return []
    return [complex(r).real for r, _ in g.complex_roots() if r.imag.is_zero()]
