"""
Mapas lineales a trozos de [0,1] con nodos racionales.

Composicion e iteracion exactas, variacion, deteccion de pendiente constante
y las construcciones que realizan una entropia prescrita.
"""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .constants import DEFAULT_BITS, DEFAULT_NODE_CAP
from .errors import DomainError, FormatError, PrecisionError, ResourceLimitError
from .numkit import (
    PARAMETER_RANGE,
    UNIT_INTERVAL,
    RatInterval,
    format_rational,
    log2_enclosure,
    parse_rational,
)
from .structures import EntropyBound, Provenance

logger = logging.getLogger(__name__)

Node = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Lap:
    """Rama monotona maxima: dominio [lo, hi] y direccion +1 / -1 (0 si es constante)."""

    lo: Fraction
    hi: Fraction
    direction: int
    image: RatInterval


@dataclass(frozen=True)
class PWLMap:
    """Interpolante lineal entre nodos (x, y) con x estrictamente creciente de 0 a 1."""

    nodes: Tuple[Node, ...]

    def __post_init__(self) -> None:
        nodes = tuple((Fraction(x), Fraction(y)) for x, y in self.nodes)
        if len(nodes) < 2:
            raise DomainError("Un mapa necesita al menos dos nodos")
        if nodes[0][0] != 0 or nodes[-1][0] != 1:
            raise DomainError("Los nodos deben empezar en x=0 y terminar en x=1")
        for (x0, _), (x1, _) in zip(nodes, nodes[1:]):
            if x1 <= x0:
                raise DomainError("Las abscisas deben ser estrictamente crecientes")
        for _, y in nodes:
            if not 0 <= y <= 1:
                raise DomainError(f"Valor fuera de [0,1]: {y}")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "_xs", tuple(x for x, _ in nodes))

    @classmethod
    def identity(cls) -> "PWLMap":
        return cls(((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))))

    @classmethod
    def tent(cls) -> "PWLMap":
        return cls(((Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1)), (Fraction(1), Fraction(0))))

    @classmethod
    def from_json(cls, data: Any) -> "PWLMap":
        try:
            raw = data["nodes"]
            nodes = tuple((parse_rational(x), parse_rational(y)) for x, y in raw)
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"Mapa lineal a trozos mal formado: {exc}") from exc
        try:
            return cls(nodes)
        except DomainError as exc:
            raise FormatError(str(exc)) from exc

    def to_json(self) -> Dict[str, Any]:
        return {"nodes": [[format_rational(x), format_rational(y)] for x, y in self.nodes]}

    def eval(self, x: Any) -> Fraction:
        q = Fraction(x)
        if not 0 <= q <= 1:
            raise DomainError(f"Punto fuera de [0,1]: {q}")
        i = bisect.bisect_right(self._xs, q) - 1
        if i >= len(self.nodes) - 1:
            return self.nodes[-1][1]
        (x0, y0), (x1, y1) = self.nodes[i], self.nodes[i + 1]
        return y0 + (y1 - y0) * (q - x0) / (x1 - x0)

    __call__ = eval

    def segments(self) -> List[Tuple[Node, Node]]:
        return list(zip(self.nodes, self.nodes[1:]))

    def slopes(self) -> List[Fraction]:
        return [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in self.segments()]

    def image(self, interval: RatInterval) -> RatInterval:
        """Imagen exacta de un intervalo (el mapa es continuo)."""
        if interval not in UNIT_INTERVAL:
            raise DomainError(f"Intervalo fuera de [0,1]: {interval}")
        values = [self.eval(interval.lo), self.eval(interval.hi)]
        lo = bisect.bisect_right(self._xs, interval.lo)
        hi = bisect.bisect_left(self._xs, interval.hi)
        values.extend(y for _, y in self.nodes[lo:hi])
        return RatInterval(min(values), max(values))

    def laps(self) -> List[Lap]:
        """Ramas monotonas maximas; los tramos constantes se unen a la rama en curso."""
        result: List[Lap] = []
        start = 0
        direction = 0
        for i, ((_, y0), (_, y1)) in enumerate(self.segments()):
            step = (y1 > y0) - (y1 < y0)
            if step == 0 or direction == 0 or step == direction:
                direction = direction or step
                continue
            result.append(self._lap(start, i, direction))
            start, direction = i, step
        result.append(self._lap(start, len(self.nodes) - 1, direction))
        return result

    def _lap(self, i: int, j: int, direction: int) -> Lap:
        ys = [y for _, y in self.nodes[i:j + 1]]
        return Lap(self.nodes[i][0], self.nodes[j][0], direction, RatInterval(min(ys), max(ys)))

    def lap_count(self) -> int:
        return len(self.laps())

    def preimage_in_lap(self, lap: Lap, value: Fraction) -> Fraction:
        """Unico x de la rama (estrictamente monotona) con f(x) = value."""
        if lap.direction == 0 or value not in lap.image:
            raise DomainError(f"{value} no esta en la imagen de la rama")
        lo = bisect.bisect_left(self._xs, lap.lo)
        hi = bisect.bisect_left(self._xs, lap.hi)
        for (x0, y0), (x1, y1) in zip(self.nodes[lo:hi], self.nodes[lo + 1:hi + 1]):
            if min(y0, y1) <= value <= max(y0, y1) and y0 != y1:
                return x0 + (value - y0) * (x1 - x0) / (y1 - y0)
        raise DomainError(f"{value} no tiene preimagen en la rama")

    def canonical(self) -> "PWLMap":
        """Elimina los nodos interiores alineados con sus vecinos."""
        kept = [self.nodes[0]]
        for node, nxt in zip(self.nodes[1:-1], self.nodes[2:]):
            (x0, y0), (x1, y1), (x2, y2) = kept[-1], node, nxt
            if (y1 - y0) * (x2 - x1) != (y2 - y1) * (x1 - x0):
                kept.append(node)
        kept.append(self.nodes[-1])
        return PWLMap(tuple(kept))


@dataclass(frozen=True)
class QuadMap:
    """Mapa logistico f_r(x) = r x (1 - x); r puede ser un encierro."""

    r: RatInterval

    def __post_init__(self) -> None:
        r = self.r if isinstance(self.r, RatInterval) else RatInterval.point(Fraction(self.r))
        if r not in PARAMETER_RANGE:
            raise DomainError(f"Parametro fuera de [0,4]: {r}")
        object.__setattr__(self, "r", r)

    @classmethod
    def from_json(cls, data: Any) -> "QuadMap":
        try:
            raw = data["r"]
        except (KeyError, TypeError) as exc:
            raise FormatError("Mapa cuadratico sin campo 'r'") from exc
        if isinstance(raw, list):
            return cls(RatInterval.from_json(raw))
        return cls(RatInterval.point(parse_rational(raw)))

    def to_json(self) -> Dict[str, Any]:
        if self.r.is_point:
            return {"r": format_rational(self.r.lo)}
        return {"r": self.r.to_json()}

    def eval(self, x: Any) -> Fraction:
        if not self.r.is_point:
            raise DomainError("Evaluacion exacta con parametro no puntual")
        q = Fraction(x)
        if not 0 <= q <= 1:
            raise DomainError(f"Punto fuera de [0,1]: {q}")
        return self.r.lo * q * (1 - q)

    __call__ = eval

    def image(self, interval: RatInterval, bits: int = DEFAULT_BITS) -> RatInterval:
        """Encierro exterior de f_r(interval) para todo r del encierro."""
        return (self.r * interval.logistic_factor()).dyadic_hull(bits)


IntervalMap = Union[PWLMap, QuadMap]


def map_from_json(data: Any) -> IntervalMap:
    """Lee un PWLMap ({"nodes": ...}) o un QuadMap ({"r": ...})."""
    if isinstance(data, dict) and "nodes" in data:
        return PWLMap.from_json(data)
    if isinstance(data, dict) and "r" in data:
        return QuadMap.from_json(data)
    raise FormatError("El documento no describe un mapa de intervalo")


def compose(outer: PWLMap, inner: PWLMap, node_cap: int = DEFAULT_NODE_CAP) -> PWLMap:
    """outer o inner, exacto: nodos de inner mas preimagenes de los nodos de outer."""
    levels = sorted({x for x, _ in outer.nodes})
    xs = set()
    for (x0, y0), (x1, y1) in inner.segments():
        xs.add(x0)
        if y0 == y1:
            continue
        lo, hi = min(y0, y1), max(y0, y1)
        start = bisect.bisect_right(levels, lo)
        stop = bisect.bisect_left(levels, hi)
        for v in levels[start:stop]:
            xs.add(x0 + (v - y0) * (x1 - x0) / (y1 - y0))
    xs.add(Fraction(1))
    if len(xs) > node_cap:
        raise ResourceLimitError(f"La composicion supera el tope de {node_cap} nodos")
    ordered = sorted(xs)
    return PWLMap(tuple((x, outer.eval(inner.eval(x))) for x in ordered)).canonical()


def compose_iterate(f: PWLMap, n: int, node_cap: int = DEFAULT_NODE_CAP) -> PWLMap:
    """
    Representacion exacta de f^n

    Args:
        f: mapa lineal a trozos
        n: iterado (>= 1)
        node_cap: tope de nodos del resultado

    Returns:
        f^n en forma canonica
    """
    if n < 1:
        raise DomainError("El iterado debe ser >= 1")
    result = f.canonical()
    base = result
    for _ in range(n - 1):
        result = compose(base, result, node_cap)
    return result


def variation(f: PWLMap) -> Fraction:
    return sum((abs(y1 - y0) for (_, y0), (_, y1) in f.segments()), Fraction(0))


def slope_detect(f: PWLMap) -> Optional[Fraction]:
    """Devuelve s si todos los tramos tienen pendiente +s o -s."""
    magnitudes = {abs(s) for s in f.slopes()}
    if len(magnitudes) == 1:
        return magnitudes.pop()
    return None


def entropy_via_variation(f: PWLMap, n_max: int, bits: int = DEFAULT_BITS, node_cap: int = DEFAULT_NODE_CAP) -> EntropyBound:
    """
    Entropia por el crecimiento de la variacion de los iterados

    Si la pendiente es constante +-s el limite es exactamente log2(s) y la
    cota queda certificada; si no, se devuelve la estimacion log2(V(f^n))/n.
    """
    if n_max < 1:
        raise DomainError("n_max debe ser >= 1")
    s = slope_detect(f)
    if s is not None:
        if s <= 1:
            return EntropyBound(Fraction(0), Fraction(0), Provenance.VARIATION, True)
        enc = log2_enclosure(RatInterval(s, s), bits)
        return EntropyBound(enc.lo, enc.hi, Provenance.VARIATION, True)

    total = variation(compose_iterate(f, n_max, node_cap))
    logger.debug("V(f^%d) = %s", n_max, total)
    if total <= 1:
        return EntropyBound(Fraction(0), Fraction(0), Provenance.VARIATION, False)
    enc = (log2_enclosure(RatInterval(total, total), bits) / n_max).dyadic_hull(bits)
    return EntropyBound(max(Fraction(0), enc.lo), enc.hi, Provenance.VARIATION, False)


def constant_slope_map(s: Any) -> PWLMap:
    """
    Mapa de tres ramas con pendiente +-s y extremos fijos.

    Nodos (0,0), ((1+s)/(4s), (1+s)/4), ((3s-1)/(4s), (3-s)/4), (1,1); con s = 1
    se degenera en la identidad.
    """
    s = Fraction(s)
    if s == 1:
        return PWLMap.identity()
    if not 1 < s <= 3:
        raise DomainError(f"La pendiente debe estar en (1, 3]: {s}")
    return PWLMap((
        (Fraction(0), Fraction(0)),
        ((1 + s) / (4 * s), (1 + s) / 4),
        ((3 * s - 1) / (4 * s), (3 - s) / 4),
        (Fraction(1), Fraction(1)),
    ))


def _as_entropy_target(h: Any) -> RatInterval:
    if isinstance(h, RatInterval):
        return h
    return RatInterval.point(parse_rational(h) if isinstance(h, str) else Fraction(h))


def realize_slope(h: Any, bits: int = 20, max_steps: int = 256) -> Fraction:
    """Pendiente racional s en [1,2] con log2(s) certificado dentro de h +- 2^-bits."""
    target = _as_entropy_target(h)
    if target not in UNIT_INTERVAL:
        raise DomainError(f"La entropia debe estar en [0,1]: {target}")
    tolerance = Fraction(1, 2**bits)
    if 2 * target.width > tolerance:
        raise PrecisionError(
            f"El ancho de {target} impide encerrar 2^h con ancho 2^-{bits}")
    window = RatInterval(target.lo - tolerance, target.hi + tolerance)
    if Fraction(0) in window:
        return Fraction(1)
    if Fraction(1) in window:
        return Fraction(2)

    lo, hi = Fraction(1), Fraction(2)
    center = target.midpoint
    for _ in range(max_steps):
        s = (lo + hi) / 2
        enc = log2_enclosure(RatInterval(s, s), bits + 4)
        if enc in window:
            return s
        if enc.hi < center:
            lo = s
        else:
            hi = s
    raise PrecisionError(f"No se encontro una pendiente para h = {target}")


def realize_computable(h: Any, bits: int = 20) -> PWLMap:
    """
    Mapa de pendiente constante con entropia log2(s') dentro de h +- 2^-bits

    Args:
        h: encierro de la entropia pedida, contenido en [0,1]
        bits: precision del encierro de la pendiente

    Returns:
        PWLMap de cuatro nodos, o la identidad cuando h = 0
    """
    return constant_slope_map(realize_slope(h, bits))


def staircase(blocks: Sequence[PWLMap]) -> PWLMap:
    """Copia escalada del bloque k sobre [1 - 2^-k, 1 - 2^-(k+1)] y la identidad en la cola."""
    if not blocks:
        return PWLMap.identity()
    nodes: List[Node] = [(Fraction(0), Fraction(0))]
    for k, block in enumerate(blocks):
        if block.nodes[0][1] != 0 or block.nodes[-1][1] != 1:
            raise DomainError("Cada bloque debe fijar 0 y 1")
        start = 1 - Fraction(1, 2**k)
        length = Fraction(1, 2 ** (k + 1))
        for x, y in block.nodes[1:]:
            nodes.append((start + length * x, start + length * y))
    nodes.append((Fraction(1), Fraction(1)))
    return PWLMap(tuple(nodes)).canonical()


def realize_sigma1(h_seq: Sequence[Any], depth: Optional[int] = None, bits: int = 20) -> PWLMap:
    """
    Escalera truncada a `depth` bloques para una sucesion creciente de entropias

    La entropia del resultado es el maximo de los h_k realizados.
    """
    targets = [_as_entropy_target(h) for h in h_seq]
    depth = len(targets) if depth is None else depth
    if not 1 <= depth <= len(targets):
        raise DomainError(f"Profundidad {depth} fuera de [1, {len(targets)}]")
    targets = targets[:depth]
    for previous, current in zip(targets, targets[1:]):
        if current.lo < previous.lo:
            raise DomainError("La sucesion de entropias debe ser creciente")
    return staircase([realize_computable(h, bits) for h in targets])
