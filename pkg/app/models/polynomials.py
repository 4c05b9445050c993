"""Exact rationals and polynomials / rational functions in the dimension symbol d.

Rationals are sympy ``QQ`` elements. Polynomials in d live in ``D_RING`` and
rational functions in ``D_FIELD``; the field reduces every element on
construction, so equality of reduced forms is equality of functions.
"""
from typing import Any, Optional

from sympy import QQ, factor
from sympy.polys.fields import FracElement, field
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from sympy.polys.rings import PolyElement, ring

from app.core.exceptions import InvalidInputError

D_FIELD, D = field("d", QQ)
D_RING = D_FIELD.ring
D_POLY = D_RING.gens[0]

_SERIES_RING, _X = ring("x", QQ)


def rational(numerator: int, denominator: int = 1):
    return QQ(numerator, denominator)


def is_symbolic(value: Any) -> bool:
    return isinstance(value, (FracElement, PolyElement))


def lift(value: Any, d: Optional[int]):
    """Embed a rational into the coefficient domain used for dimension d (None = symbolic)."""
    if d is None:
        return D_FIELD(QQ.convert(value))
    return QQ.convert(value)


def dimension_value(d: Optional[int]):
    """The dimension itself as a coefficient: the integer d or the symbol."""
    return D if d is None else d


def to_field(value: Any) -> FracElement:
    if isinstance(value, FracElement):
        return value
    if isinstance(value, PolyElement):
        return D_FIELD(value)
    return D_FIELD(QQ.convert(value))


def monic_parts(f: FracElement) -> tuple[PolyElement, PolyElement]:
    """(numerator, denominator) with the denominator made monic."""
    lc = f.denom.LC
    return f.numer.quo_ground(lc), f.denom.quo_ground(lc)


def evaluate(f: Any, value: int):
    """Value of a polynomial or rational function in d at an integer."""
    if isinstance(f, FracElement):
        den = f.denom(value)
        if den == 0:
            raise InvalidInputError(f"{format_exact(f)} has a pole at d={value}")
        return QQ.convert(f.numer(value)) / QQ.convert(den)
    if isinstance(f, PolyElement):
        return QQ.convert(f(value))
    return QQ.convert(f)


def laurent_expansion(f: Any, count: int) -> tuple[int, list]:
    """Expansion of f at d = ∞.

    Returns (v, [a_0, ..., a_{count-1}]) with f = Σ_n a_n d^{-(v+n)}. The zero
    function gives v = 0 and all coefficients zero.
    """
    f = to_field(f)
    if not f.numer:
        return 0, [QQ.zero] * count
    deg_num = f.numer.degree()
    deg_den = f.denom.degree()
    top = _SERIES_RING.from_dict({(deg_num - e,): c for (e,), c in f.numer.items()})
    bottom = _SERIES_RING.from_dict({(deg_den - e,): c for (e,), c in f.denom.items()})
    series = rs_mul(top, rs_series_inversion(bottom, _X, count), _X, count)
    return deg_den - deg_num, [series.get((n,), QQ.zero) for n in range(count)]


def laurent_coefficient(f: Any, power: int):
    """Coefficient of d^{power} in the expansion of f at d = ∞ (power ≤ degree of f)."""
    valuation, _ = laurent_expansion(f, 1)
    index = -power - valuation
    if index < 0:
        return QQ.zero
    _, coefficients = laurent_expansion(f, index + 1)
    return coefficients[index]


def pole_orders(f: Any, points) -> dict[int, int]:
    """Multiplicity of each integer point as a root of the reduced denominator."""
    den = to_field(f).denom
    orders = {}
    for point in points:
        order = 0
        linear = D_POLY - point
        while den.degree() > 0 and den(point) == 0:
            den = den.exquo(linear)
            order += 1
        orders[point] = order
    return orders


def format_exact(value: Any) -> str:
    """Canonical text form: "p/q" for rationals, factored form for functions of d."""
    if isinstance(value, (FracElement, PolyElement)):
        return str(factor(value.as_expr()))
    return str(QQ.convert(value))


def parse_rational(text: str):
    num, _, den = text.partition("/")
    try:
        return QQ(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError(f"Cannot parse rational from {text!r}")
