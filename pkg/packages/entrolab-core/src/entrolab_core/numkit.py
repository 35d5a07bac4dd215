"""
Aritmetica racional exacta e intervalos certificados.

Todos los encierros se redondean hacia afuera sobre racionales diadicos con un
parametro de precision por operacion, de modo que los resultados son
reproducibles en cualquier plataforma. Las raices de iterados de la familia
cuadratica se aislan por biseccion sobre la expresion iterada, sin expandir
el polinomio.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .constants import CRITICAL_POINT, DEFAULT_BITS, LN2_HI, LN2_LO
from .errors import DomainError, FormatError

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

DEFAULT_MAX_CELLS = 200_000


def parse_rational(value: Any) -> Fraction:
    """
    Convertir texto, enteros o fracciones a un racional exacto

    Args:
        value: "7/2", "3.5", "1e-3", un entero o un Fraction

    Returns:
        Fraction equivalente, nunca un flotante redondeado
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise FormatError(f"Racional invalido: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"Racional invalido: {value!r}") from exc
    raise FormatError(f"Tipo no admitido como racional: {type(value).__name__}")


def format_rational(value: Number) -> str:
    """Forma canonica "p/q" con q > 0."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def format_decimal(value: Number, digits: int = 10, direction: int = 0) -> str:
    """
    Representacion decimal con `digits` cifras.

    direction < 0 redondea hacia abajo, > 0 hacia arriba y 0 al mas cercano;
    los enteros se muestran sin parte decimal.
    """
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    scale = 10**digits
    scaled = q * scale
    if direction < 0:
        units = math.floor(scaled)
    elif direction > 0:
        units = math.ceil(scaled)
    else:
        units = round(scaled)
    sign = "-" if units < 0 else ""
    units = abs(units)
    text = f"{units // scale}.{units % scale:0{digits}d}".rstrip("0").rstrip(".")
    return sign + text


def floor_dyadic(value: Number, bits: int) -> Fraction:
    q = Fraction(value)
    scale = 1 << bits
    return Fraction((q.numerator * scale) // q.denominator, scale)


def ceil_dyadic(value: Number, bits: int) -> Fraction:
    q = Fraction(value)
    scale = 1 << bits
    return Fraction(-((-q.numerator * scale) // q.denominator), scale)


@dataclass(frozen=True)
class RatInterval:
    """Intervalo cerrado [lo, hi] de extremos racionales."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo = Fraction(self.lo)
        hi = Fraction(self.hi)
        if lo > hi:
            raise DomainError(f"Intervalo invalido: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: Any) -> "RatInterval":
        q = parse_rational(value)
        return cls(q, q)

    @classmethod
    def from_json(cls, data: Any) -> "RatInterval":
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise FormatError(f"Intervalo mal formado: {data!r}")
        try:
            return cls(parse_rational(data[0]), parse_rational(data[1]))
        except DomainError as exc:
            raise FormatError(str(exc)) from exc

    def to_json(self) -> List[str]:
        return [format_rational(self.lo), format_rational(self.hi)]

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, item: Any) -> bool:
        if isinstance(item, RatInterval):
            return self.lo <= item.lo and item.hi <= self.hi
        return self.lo <= item <= self.hi

    def interior_contains(self, item: Any) -> bool:
        """Contencion estricta: los extremos de `item` quedan en el interior."""
        if isinstance(item, RatInterval):
            return self.lo < item.lo and item.hi < self.hi
        return self.lo < item < self.hi

    def intersects(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersection(self, other: "RatInterval") -> Optional["RatInterval"]:
        if not self.intersects(other):
            return None
        return RatInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def hull(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def certified_sign(self) -> Optional[int]:
        """+1 o -1 si todo el intervalo tiene ese signo, 0 si es [0,0], None si no se decide."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def dyadic_hull(self, bits: int) -> "RatInterval":
        """Menor intervalo de extremos k/2^bits que contiene a este."""
        return RatInterval(floor_dyadic(self.lo, bits), ceil_dyadic(self.hi, bits))

    def logistic_factor(self) -> "RatInterval":
        """Rango exacto de t - t^2 sobre el intervalo (vertice en t = 1/2)."""
        values = [self.lo - self.lo * self.lo, self.hi - self.hi * self.hi]
        if self.lo <= CRITICAL_POINT <= self.hi:
            values.append(Fraction(1, 4))
        return RatInterval(min(values), max(values))

    def __add__(self, other: Any) -> "RatInterval":
        other = _as_interval(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other: Any) -> "RatInterval":
        other = _as_interval(other)
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other: Any) -> "RatInterval":
        return _as_interval(other) - self

    def __mul__(self, other: Any) -> "RatInterval":
        other = _as_interval(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RatInterval":
        other = _as_interval(other)
        if not other.excludes_zero():
            raise DomainError(f"Division por un intervalo que contiene 0: {other}")
        return self * RatInterval(1 / other.hi, 1 / other.lo)

    def __abs__(self) -> "RatInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RatInterval(Fraction(0), max(-self.lo, self.hi))

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


def _as_interval(value: Any) -> RatInterval:
    if isinstance(value, RatInterval):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        q = Fraction(value)
        return RatInterval(q, q)
    if isinstance(value, str):
        return RatInterval.point(value)
    raise DomainError(f"No es un racional ni un intervalo: {value!r}")


UNIT_INTERVAL = RatInterval(Fraction(0), Fraction(1))
PARAMETER_RANGE = RatInterval(Fraction(0), Fraction(4))


class Role(str, Enum):
    """Variable libre de una expresion iterada."""

    PARAMETER = "parameter"
    STATE = "state"


@dataclass(frozen=True)
class IterMapExpr:
    """
    Expresion iterada de la familia cuadratica f_r(x) = r x (1 - x).

    Con rol PARAMETER denota r -> f_r^n(anchor) - anchor; con rol STATE denota
    x -> f_d^n(x) - x para el parametro fijo `parameter`. Con shifted=False se
    omite la resta.
    """

    role: Role
    iterations: int
    anchor: Fraction = CRITICAL_POINT
    parameter: Optional[RatInterval] = None
    shifted: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "role", Role(self.role))
        object.__setattr__(self, "anchor", Fraction(self.anchor))
        if self.iterations < 1:
            raise DomainError("El numero de iteraciones debe ser >= 1")
        if self.anchor not in UNIT_INTERVAL:
            raise DomainError(f"Punto base fuera de [0,1]: {self.anchor}")
        if self.role is Role.STATE:
            if self.parameter is None:
                raise DomainError("El rol STATE requiere un parametro")
            parameter = _as_interval(self.parameter)
            if parameter not in PARAMETER_RANGE:
                raise DomainError(f"Parametro fuera de [0,4]: {parameter}")
            object.__setattr__(self, "parameter", parameter)
        elif self.parameter is not None:
            raise DomainError("El rol PARAMETER no admite parametro fijo")

    @classmethod
    def critical_return(cls, period: int) -> "IterMapExpr":
        """P_p(r) = f_r^p(1/2) - 1/2."""
        return cls(Role.PARAMETER, period)

    @classmethod
    def periodic_defect(cls, d: Any, period: int) -> "IterMapExpr":
        return cls(Role.STATE, period, parameter=_as_interval(d))

    @property
    def domain(self) -> RatInterval:
        return PARAMETER_RANGE if self.role is Role.PARAMETER else UNIT_INTERVAL

    @property
    def exactly_evaluable(self) -> bool:
        return self.role is Role.PARAMETER or self.parameter.is_point

    def unshifted(self) -> "IterMapExpr":
        return replace(self, shifted=False)

    def at(self, value: Number) -> Fraction:
        """Evaluacion exacta en un punto racional."""
        if not self.exactly_evaluable:
            raise DomainError("Evaluacion exacta con parametro no puntual")
        t = Fraction(value)
        if self.role is Role.PARAMETER:
            r, x = t, self.anchor
        else:
            r, x = self.parameter.lo, t
        start = x
        for _ in range(self.iterations):
            x = r * x * (1 - x)
        return x - start if self.shifted else x


def _precision_of(width: Fraction) -> int:
    if width <= 0:
        return 0
    return max(0, width.denominator.bit_length() - width.numerator.bit_length() + 1)


def working_bits(expr: IterMapExpr, box: RatInterval) -> int:
    """Precision suficiente para que el redondeo no domine el ancho del encierro."""
    widths = [box.width]
    if expr.parameter is not None:
        widths.append(expr.parameter.width)
    precision = max(_precision_of(w) for w in widths)
    return max(DEFAULT_BITS, precision + 2 * expr.iterations + 8)


def _initial(expr: IterMapExpr, box: RatInterval) -> Tuple[RatInterval, RatInterval]:
    if expr.role is Role.PARAMETER:
        return box, RatInterval(expr.anchor, expr.anchor)
    return expr.parameter, box


def interval_eval(expr: IterMapExpr, value: Any, bits: Optional[int] = None) -> RatInterval:
    """
    Encierro de {expr(t) : t en value}

    Args:
        expr: expresion iterada
        value: racional o RatInterval dentro del dominio de la expresion
        bits: precision del redondeo hacia afuera; por defecto se adapta al ancho

    Returns:
        RatInterval que contiene la imagen; exacto para entradas puntuales
    """
    box = _as_interval(value)
    if box not in expr.domain:
        raise DomainError(f"Entrada {box} fuera del dominio {expr.domain}")
    if box.is_point and expr.exactly_evaluable:
        q = expr.at(box.lo)
        return RatInterval(q, q)
    bits = bits or working_bits(expr, box)
    r, x = _initial(expr, box)
    for _ in range(expr.iterations):
        x = (r * x.logistic_factor()).dyadic_hull(bits)
    if expr.shifted:
        x = x - (box if expr.role is Role.STATE else expr.anchor)
    return x


def derivative_enclosure(expr: IterMapExpr, value: Any, bits: Optional[int] = None) -> RatInterval:
    """
    Derivada de la expresion respecto de su variable libre, por modo directo.

    Para el rol STATE sin desplazamiento es el multiplicador (f_d^n)'(x).
    """
    box = _as_interval(value)
    bits = bits or working_bits(expr, box)
    r, x = _initial(expr, box)
    if expr.role is Role.PARAMETER:
        dx = RatInterval(Fraction(0), Fraction(0))
    else:
        dx = RatInterval(Fraction(1), Fraction(1))
    for _ in range(expr.iterations):
        slope = r * (1 - 2 * x)
        if expr.role is Role.PARAMETER:
            dx = x.logistic_factor() + slope * dx
        else:
            dx = slope * dx
        dx = dx.dyadic_hull(bits)
        x = (r * x.logistic_factor()).dyadic_hull(bits)
    if expr.role is Role.STATE and expr.shifted:
        dx = dx - 1
    return dx


def orbit_enclosure(r: Any, x0: Any, iterations: int, bits: int = DEFAULT_BITS) -> List[RatInterval]:
    """Encierros de x0, f_r(x0), ..., f_r^iterations(x0) con r y x0 intervalos."""
    rr = _as_interval(r)
    x = _as_interval(x0)
    points = [x]
    for _ in range(iterations):
        x = (rr * x.logistic_factor()).dyadic_hull(bits)
        points.append(x)
    return points


@dataclass(frozen=True)
class RootIsolation:
    """Raices aisladas y celdas que no se pudieron resolver."""

    roots: Tuple[RatInterval, ...]
    unresolved: Tuple[RatInterval, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.unresolved


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


class _SignOracle:
    """Signos exactos memorizados de una expresion en puntos racionales."""

    def __init__(self, expr: IterMapExpr) -> None:
        self.expr = expr
        self.cache: Dict[Fraction, int] = {}
        self.exact_roots: set = set()

    def __call__(self, q: Fraction) -> int:
        if q not in self.cache:
            s = _sign(self.expr.at(q))
            self.cache[q] = s
            if s == 0:
                self.exact_roots.add(q)
        return self.cache[q]


def _halve(sign: _SignOracle, cell: RatInterval) -> RatInterval:
    a, b = cell.lo, cell.hi
    m = (a + b) / 2
    sm = sign(m)
    if sm == 0:
        return RatInterval(m, m)
    if sign(a) * sm < 0:
        return RatInterval(a, m)
    return RatInterval(m, b)


def _refine(sign: _SignOracle, cell: RatInterval, width: Fraction) -> RatInterval:
    while not cell.is_point and cell.width > width:
        cell = _halve(sign, cell)
    return cell


def _separate(sign: _SignOracle, roots: List[RatInterval], rounds: int = 256) -> List[RatInterval]:
    """Biseca raices vecinas hasta que no compartan extremos."""
    for _ in range(rounds):
        touching = False
        for i in range(len(roots) - 1):
            left, right = roots[i], roots[i + 1]
            if left.hi >= right.lo:
                touching = True
                if not left.is_point:
                    roots[i] = _halve(sign, left)
                if not right.is_point:
                    roots[i + 1] = _halve(sign, right)
        if not touching:
            return roots
        roots.sort(key=lambda iv: (iv.lo, iv.hi))
    logger.warning("No se pudieron separar %d raices contiguas", len(roots))
    return roots


def _merge_cells(cells: Sequence[RatInterval]) -> List[RatInterval]:
    merged: List[RatInterval] = []
    for cell in sorted(cells, key=lambda iv: (iv.lo, iv.hi)):
        if merged and merged[-1].hi >= cell.lo:
            merged[-1] = merged[-1].hull(cell)
        else:
            merged.append(cell)
    return merged


def root_isolate(
    expr: IterMapExpr,
    domain: Any,
    min_width: Number,
    bits: Optional[int] = None,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> RootIsolation:
    """
    Aislar las raices de una expresion iterada por biseccion certificada

    Cada celda se descarta si el encierro de la expresion excluye el 0, o si
    la derivada excluye el 0 (monotonia) y no hay cambio de signo. Las raices
    racionales exactas se devuelven como [q, q].

    Args:
        expr: expresion evaluable exactamente en racionales
        domain: intervalo de busqueda
        min_width: ancho maximo de cada intervalo devuelto
        bits: precision fija; por defecto se adapta a cada celda
        max_cells: tope de celdas procesadas

    Returns:
        RootIsolation con intervalos disjuntos ordenados y las celdas sin resolver
    """
    box = _as_interval(domain)
    width = Fraction(min_width)
    if width <= 0:
        raise DomainError("min_width debe ser positivo")
    if not expr.exactly_evaluable:
        raise DomainError("root_isolate requiere una expresion con parametro puntual")

    sign = _SignOracle(expr)
    if box.is_point:
        found = (box,) if sign(box.lo) == 0 else ()
        return RootIsolation(found, ())

    sign(box.lo)
    sign(box.hi)
    roots: List[RatInterval] = []
    unresolved: List[RatInterval] = []
    stack = [box]
    processed = 0
    while stack:
        cell = stack.pop()
        processed += 1
        if processed > max_cells:
            unresolved.append(cell)
            unresolved.extend(stack)
            logger.warning("Tope de %d celdas alcanzado en root_isolate", max_cells)
            break
        if interval_eval(expr, cell, bits).excludes_zero():
            continue
        sa, sb = sign(cell.lo), sign(cell.hi)
        if derivative_enclosure(expr, cell, bits).excludes_zero():
            # Monotona: solo puede haber una raiz y se detecta por signo
            if sa * sb < 0:
                roots.append(_refine(sign, cell, width))
            continue
        if cell.width <= width:
            if sa * sb < 0:
                roots.append(cell)
            else:
                unresolved.append(cell)
            continue
        m = cell.midpoint
        sign(m)
        stack.append(RatInterval(m, cell.hi))
        stack.append(RatInterval(cell.lo, m))

    exact = {q for q in sign.exact_roots if q in box}
    found = [iv for iv in roots if not iv.is_point]
    found.extend(RatInterval(q, q) for q in sorted(exact))
    found.sort(key=lambda iv: (iv.lo, iv.hi))
    found = _separate(sign, found)

    unresolved = _merge_cells(unresolved)
    if unresolved:
        logger.warning(
            "%d celdas sin resolver al ancho %s", len(unresolved), format_rational(width))
    return RootIsolation(tuple(found), tuple(unresolved))


def _exact_log2(q: Fraction) -> Optional[int]:
    n, d = q.numerator, q.denominator
    if d == 1 and n & (n - 1) == 0:
        return n.bit_length() - 1
    if n == 1 and d & (d - 1) == 0:
        return -(d.bit_length() - 1)
    return None


def _log2_bound(q: Fraction, digits: int, upper: bool) -> Fraction:
    exact = _exact_log2(q)
    if exact is not None:
        return Fraction(exact)

    k = q.numerator.bit_length() - q.denominator.bit_length()
    if q < Fraction(2) ** k:
        k -= 1
    elif q >= Fraction(2) ** (k + 1):
        k += 1
    y = q / Fraction(2) ** k

    # Mantisa en punto fijo: y = m / 2^guard con 1 <= y < 2
    guard = digits + 8 + digits.bit_length()
    one = 1 << guard
    two = one << 1
    scaled = y * one
    m = math.ceil(scaled) if upper else math.floor(scaled)
    if m >= two:
        return Fraction(k + 1)

    acc = 0
    for _ in range(digits):
        square = m * m
        m = -((-square) >> guard) if upper else square >> guard
        acc <<= 1
        if m >= two:
            m = (m + 1) >> 1 if upper else m >> 1
            acc |= 1
    return k + Fraction(acc + (1 if upper else 0), 1 << digits)


def log2_enclosure(value: Any, bits: int = DEFAULT_BITS) -> RatInterval:
    """
    Encierro diadico de log2 sobre un intervalo positivo

    Usa el algoritmo de cuadrados sucesivos con redondeo dirigido; las
    potencias de dos se devuelven exactas.

    Args:
        value: racional o RatInterval con extremo inferior > 0
        bits: exceso de ancho permitido 2^-bits

    Returns:
        RatInterval que contiene log2 de cada punto de value
    """
    box = _as_interval(value)
    if box.lo <= 0:
        raise DomainError(f"log2 requiere valores positivos, recibido {box}")
    digits = bits + 2
    return RatInterval(_log2_bound(box.lo, digits, False), _log2_bound(box.hi, digits, True))


def to_nats(value: RatInterval) -> RatInterval:
    """Convierte un encierro en bits (base 2) a nats, redondeando hacia afuera."""
    lo = value.lo * (LN2_LO if value.lo >= 0 else LN2_HI)
    hi = value.hi * (LN2_HI if value.hi >= 0 else LN2_LO)
    return RatInterval(lo, hi)
