"""
Certificados de herradura (p, n) y busqueda de cotas inferiores de entropia.

Un certificado son p intervalos cerrados disjuntos J_1 < ... < J_p cuyas
imagenes por f^n contienen en su interior la envolvente de su union; cada
certificado valido prueba h(f) >= log2(p)/n.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .constants import (
    DEFAULT_BITS,
    DEFAULT_GRID_DEPTH,
    DEFAULT_MAX_BITS,
    DEFAULT_NODE_CAP,
    DEFAULT_SEARCH_MAX_N,
    DEFAULT_SEARCH_MAX_P,
)
from .errors import DomainError, FormatError, ResourceLimitError
from .interval_maps import IntervalMap, Lap, PWLMap, QuadMap, compose_iterate
from .numkit import UNIT_INTERVAL, RatInterval, log2_enclosure

logger = logging.getLogger(__name__)

# Margen relativo de los objetivos: mu = ancho * 2^-MARGIN_SHIFT
MARGIN_SHIFT = 20
# Por encima de este numero de valores de imagen solo se usa la malla diadica
MAX_IMAGE_TARGETS = 24


@dataclass(frozen=True)
class HorseshoeCert:
    """Intervalos J_1 < ... < J_p con huecos estrictos y el iterado n."""

    intervals: Tuple[RatInterval, ...]
    n: int

    def __post_init__(self) -> None:
        intervals = tuple(self.intervals)
        if len(intervals) < 2:
            raise DomainError("Una herradura necesita al menos dos intervalos")
        if self.n < 1:
            raise DomainError("El iterado debe ser >= 1")
        for J in intervals:
            if J not in UNIT_INTERVAL:
                raise DomainError(f"Intervalo fuera de [0,1]: {J}")
        for left, right in zip(intervals, intervals[1:]):
            if not left.hi < right.lo:
                raise DomainError("Los intervalos deben ser disjuntos y ordenados")
        object.__setattr__(self, "intervals", intervals)

    @property
    def p(self) -> int:
        return len(self.intervals)

    @property
    def hull(self) -> RatInterval:
        return RatInterval(self.intervals[0].lo, self.intervals[-1].hi)

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "intervals": [J.to_json() for J in self.intervals]}

    @classmethod
    def from_json(cls, data: Any) -> "HorseshoeCert":
        try:
            intervals = tuple(RatInterval.from_json(item) for item in data["intervals"])
            n = int(data["n"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"Certificado mal formado: {exc}") from exc
        try:
            return cls(intervals, n)
        except DomainError as exc:
            raise FormatError(str(exc)) from exc


@dataclass(frozen=True)
class LowerBoundRecord:
    """Certificado y encierro de log2(p)/n."""

    cert: HorseshoeCert
    bound: RatInterval

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.cert.p,
            "n": self.cert.n,
            "bound": self.bound.to_json(),
            "cert": self.cert.to_json(),
        }


@dataclass(frozen=True)
class SearchBudget:
    """Limites de la busqueda: iterado maximo, tamano maximo y profundidad de malla."""

    max_n: int = DEFAULT_SEARCH_MAX_N
    max_p: int = DEFAULT_SEARCH_MAX_P
    grid_depth: int = DEFAULT_GRID_DEPTH
    node_cap: int = DEFAULT_NODE_CAP

    def __post_init__(self) -> None:
        if self.max_n < 1 or self.max_p < 2 or self.grid_depth < 0:
            raise DomainError("Presupuesto de busqueda invalido")


def horseshoe_bound(p: int, n: int, bits: int = DEFAULT_BITS) -> RatInterval:
    return (log2_enclosure(RatInterval(Fraction(p), Fraction(p)), bits) / n).dyadic_hull(bits)


def _image_pwl(f: PWLMap, J: RatInterval, n: int) -> RatInterval:
    image = J
    for _ in range(n):
        image = f.image(image)
    return image


def _point_orbit(f: QuadMap, x: Fraction, n: int, bits: int) -> RatInterval:
    value = RatInterval(x, x)
    for _ in range(n):
        value = f.image(value, bits)
    return value


def _inner_image_quad(f: QuadMap, J: RatInterval, n: int, bits: int) -> Optional[RatInterval]:
    """
    Cota interior de f^n(J) por el teorema del valor intermedio.

    La imagen contiene todos los valores entre f^n(J.lo) y f^n(J.hi); con los
    encierros de ambos se obtiene un intervalo que seguro esta contenido.
    """
    a = _point_orbit(f, J.lo, n, bits)
    b = _point_orbit(f, J.hi, n, bits)
    lo = min(a.hi, b.hi)
    hi = max(a.lo, b.lo)
    if lo > hi:
        return None
    return RatInterval(lo, hi)


def check_certificate(
    f: IntervalMap,
    cert: HorseshoeCert,
    bits: int = DEFAULT_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
) -> bool:
    """
    Verificar un certificado de herradura

    Args:
        f: PWLMap (imagenes exactas) o QuadMap (encierros con escalado de precision)
        cert: intervalos y iterado
        bits: precision inicial para QuadMap
        max_bits: tope del escalado de precision

    Returns:
        True si cada f^n(J_i) contiene la envolvente de la union en su interior.
        Para QuadMap un False puede deberse a la precision.
    """
    target = cert.hull
    if isinstance(f, PWLMap):
        return all(_image_pwl(f, J, cert.n).interior_contains(target) for J in cert.intervals)

    precision = bits
    while precision <= max_bits:
        images = [_inner_image_quad(f, J, cert.n, precision) for J in cert.intervals]
        if all(image is not None and image.interior_contains(target) for image in images):
            return True
        precision *= 2
    logger.debug("Certificado no verificado hasta %d bits", max_bits)
    return False


@dataclass(frozen=True)
class _Branch:
    """Rama monotona de f^n con extremos racionales y su imagen."""

    lo: Fraction
    hi: Fraction
    image: Tuple[float, float]
    lap: Optional[Lap] = None


class _QuadLaps:
    """Ramas de f_r^n propuestas en flotante; la verificacion posterior es exacta."""

    def __init__(self, f: QuadMap) -> None:
        self.r = float(f.r.midpoint)

    def step(self, x: float) -> float:
        return self.r * x * (1.0 - x)

    def iterate(self, x: float, n: int) -> float:
        for _ in range(n):
            x = self.step(x)
        return x

    def turning_points(self, n: int) -> List[float]:
        """Preimagenes del punto critico por f^k, k < n."""
        level = {0.5}
        points = set(level)
        for _ in range(n - 1):
            nxt = set()
            for y in level:
                disc = 0.25 - y / self.r if self.r > 0 else -1.0
                if disc < 0:
                    continue
                root = math.sqrt(disc)
                nxt.update({0.5 - root, 0.5 + root})
            level = {x for x in nxt if 0.0 < x < 1.0}
            points |= level
        return sorted(points)

    def branches(self, n: int) -> List[_Branch]:
        cuts = [0.0] + self.turning_points(n) + [1.0]
        result = []
        for a, b in zip(cuts, cuts[1:]):
            if b - a <= 1e-15:
                continue
            ya, yb = self.iterate(a, n), self.iterate(b, n)
            result.append(_Branch(Fraction(a), Fraction(b), (min(ya, yb), max(ya, yb))))
        return result

    def preimage(self, branch: _Branch, value: float, n: int) -> float:
        a, b = float(branch.lo), float(branch.hi)
        fa = self.iterate(a, n) - value
        for _ in range(80):
            m = 0.5 * (a + b)
            fm = self.iterate(m, n) - value
            if (fm < 0) == (fa < 0):
                a, fa = m, fm
            else:
                b = m
        return 0.5 * (a + b)


def _pwl_branches(g: PWLMap) -> List[_Branch]:
    return [
        _Branch(lap.lo, lap.hi, (lap.image.lo, lap.image.hi), lap)
        for lap in g.laps()
        if lap.direction != 0
    ]


def _targets(branches: Sequence[_Branch], grid_depth: int, max_n: int) -> List[RatInterval]:
    """Objetivos candidatos: pares de valores de imagen y de la malla, desplazados hacia adentro."""
    values = set()
    image_values = {Fraction(v) for branch in branches for v in branch.image}
    if len(image_values) <= MAX_IMAGE_TARGETS:
        values |= image_values
    steps = 1 << grid_depth
    values |= {Fraction(k, steps) for k in range(steps + 1)}
    points = sorted(v for v in values if 0 <= v <= 1)

    shifts = sorted({4, 8, max_n + 4})
    targets = []
    for i, a in enumerate(points):
        for b in points[i + 1:]:
            width = b - a
            for j in shifts:
                inset = width / (1 << j)
                targets.append(RatInterval(a + inset, b - inset))
    return targets


def _select(
    branches: Sequence[_Branch],
    target: RatInterval,
    max_p: int,
    preimage,
) -> List[RatInterval]:
    """Eleccion voraz de J_i = preimagen de la ampliacion del objetivo, con huecos estrictos."""
    mu = target.width / (1 << MARGIN_SHIFT)
    wide = RatInterval(target.lo - mu, target.hi + mu)
    inner = RatInterval(target.lo + mu, target.hi - mu)
    chosen: List[RatInterval] = []
    for branch in branches:
        if branch.hi <= inner.lo or branch.lo >= inner.hi:
            continue
        if not (branch.image[0] < wide.lo and wide.hi < branch.image[1]):
            continue
        ends = sorted((preimage(branch, wide.lo), preimage(branch, wide.hi)))
        J = RatInterval(ends[0], ends[1])
        if J not in inner:
            continue
        if chosen and not chosen[-1].hi < J.lo:
            continue
        chosen.append(J)
        if len(chosen) >= max_p:
            break
    return chosen


def search_lower_bounds(
    f: IntervalMap,
    budget: SearchBudget = SearchBudget(),
    bits: int = DEFAULT_BITS,
) -> Iterator[LowerBoundRecord]:
    """
    Busqueda de herraduras guiada por las ramas monotonas de f^n

    Para cada n se proponen objetivos T y se toma en cada rama la preimagen de
    una ampliacion de T; los candidatos se verifican con check_certificate.
    Solo se emiten mejoras estrictas de la cota inferior, en orden determinista.

    Args:
        f: PWLMap o QuadMap
        budget: limites de la busqueda
        bits: precision de los encierros

    Yields:
        LowerBoundRecord con cota estrictamente creciente
    """
    best = Fraction(0)
    quad = _QuadLaps(f) if isinstance(f, QuadMap) else None
    for n in range(1, budget.max_n + 1):
        if quad is not None:
            branches = quad.branches(n)

            def preimage(branch, value, n=n):
                return Fraction(quad.preimage(branch, float(value), n))
        else:
            try:
                g = compose_iterate(f, n, budget.node_cap)
            except ResourceLimitError:
                logger.warning("Busqueda detenida en n=%d por el tope de nodos", n)
                return
            branches = _pwl_branches(g)

            def preimage(branch, value, g=g):
                return g.preimage_in_lap(branch.lap, value)

        capacity = min(budget.max_p, len(branches))
        if capacity < 2 or horseshoe_bound(capacity, n, bits).hi <= best:
            continue

        found: Optional[List[RatInterval]] = None
        for target in _targets(branches, budget.grid_depth, budget.max_n):
            chosen = _select(branches, target, budget.max_p, preimage)
            if len(chosen) >= 2 and (found is None or len(chosen) > len(found)):
                found = chosen
                if len(found) == capacity:
                    break
        if found is None:
            continue

        bound = horseshoe_bound(len(found), n, bits)
        if bound.lo <= best:
            continue
        cert = HorseshoeCert(tuple(found), n)
        if not check_certificate(f, cert, bits):
            logger.debug("Candidato (%d, %d) rechazado en la verificacion", cert.p, n)
            continue
        best = bound.lo
        logger.info("Herradura (%d, %d): h >= %s", cert.p, n, float(bound.lo))
        yield LowerBoundRecord(cert, bound)
