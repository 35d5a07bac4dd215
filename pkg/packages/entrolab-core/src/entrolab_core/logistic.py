"""
Entropia de la familia cuadratica f_r(x) = r x (1 - x).

Flujo: se enumeran los centros superatractores (raices de P_p), cada centro
induce una particion de Markov y un SFT cuya entropia es la del centro, las
componentes hiperbolicas se ensanchan con el criterio de la derivada y h(r)
se encierra entre centros a ambos lados de r.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import repeat
from typing import Any, Dict, List, Optional, Sequence, Tuple

from entrolab_cache import CenterCache

from .constants import (
    CRITICAL_POINT,
    DEFAULT_BITS,
    DEFAULT_CENTER_WIDTH,
    DEFAULT_GROWTH_STEPS,
    DEFAULT_MAX_BITS,
    DEFAULT_MAX_PERIOD,
    INITIAL_GROWTH_STEP,
    MAX_PERIOD_CAP,
    MIN_GROWTH_STEP,
)
from .errors import DomainError, FormatError, PartitionError, UnresolvedError, BudgetExceededError
from .numkit import (
    PARAMETER_RANGE,
    UNIT_INTERVAL,
    IterMapExpr,
    RatInterval,
    RootIsolation,
    derivative_enclosure,
    format_rational,
    interval_eval,
    orbit_enclosure,
    parse_rational,
    root_isolate,
)
from .structures import EntropyBound, Provenance
from .symbolic import SFT, sft_entropy

logger = logging.getLogger(__name__)

DEFAULT_CENTER_EPS = Fraction(1, 2**30)
MAX_REFINEMENTS = 64


def proper_divisors(p: int) -> List[int]:
    return [q for q in range(1, p) if p % q == 0]


def fixed_points(r: Any) -> List[Tuple[Fraction, Fraction]]:
    """Puntos fijos de f_r en [0,1] con su multiplicador f_r'(x) = r (1 - 2x)."""
    r = Fraction(r)
    points = [(Fraction(0), r)]
    if r > 1:
        points.append(((r - 1) / r, 2 - r))
    return points


@dataclass(frozen=True)
class CenterRoot:
    """Raiz aislada de P_p: encierro del parametro y periodo."""

    r_enc: RatInterval
    period: int


@dataclass(frozen=True)
class MarkovPartition:
    """Puntos de la particion (0, orbita critica ordenada, 1) y el SFT inducido."""

    points: Tuple[RatInterval, ...]
    sft: SFT
    orbit_order: Tuple[int, ...]
    r_enc: RatInterval


@dataclass(frozen=True)
class Center:
    """Parametro superatractor con su particion de Markov y su entropia."""

    r_enc: RatInterval
    period: int
    orbit_order: Tuple[int, ...]
    sft: SFT
    entropy: EntropyBound

    def to_record(self) -> Dict[str, Any]:
        return {
            "period": self.period,
            "r_enc": self.r_enc.to_json(),
            "orbit_order": list(self.orbit_order),
            "sft": self.sft.to_json(),
            "entropy": self.entropy.to_dict(),
        }

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "Center":
        try:
            return cls(
                r_enc=RatInterval.from_json(record["r_enc"]),
                period=int(record["period"]),
                orbit_order=tuple(int(k) for k in record["orbit_order"]),
                sft=SFT.from_json(record["sft"]),
                entropy=EntropyBound.from_dict(record["entropy"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"Registro de centro mal formado: {exc}") from exc


@dataclass(frozen=True)
class CenterScan:
    centers: Tuple[Center, ...]
    unresolved: Tuple[Tuple[int, RatInterval], ...] = ()


def isolate_centers(period: int, width: Any = DEFAULT_CENTER_WIDTH, bits: Optional[int] = None) -> RootIsolation:
    """Raices de P_p en [0,4] (incluye las de periodos divisores)."""
    return root_isolate(IterMapExpr.critical_return(period), PARAMETER_RANGE, Fraction(width), bits)


def _isolate_period(period: int, width: Fraction, bits: Optional[int]) -> Tuple[int, RootIsolation]:
    return period, isolate_centers(period, width, bits)


def _orbit_points(r_enc: RatInterval, period: int, bits: int) -> List[RatInterval]:
    # Indice k-1 -> f^k(c); en el centro f^p(c) = c exactamente
    points = orbit_enclosure(r_enc, CRITICAL_POINT, period - 1, bits)[1:]
    points.append(RatInterval(CRITICAL_POINT, CRITICAL_POINT))
    return points


def _separated(points: Sequence[RatInterval]) -> bool:
    ordered = sorted(points, key=lambda iv: iv.lo)
    if ordered[0].lo <= 0 or ordered[-1].hi >= 1:
        return False
    return all(a.hi < b.lo for a, b in zip(ordered, ordered[1:]))


def _refine_center(r_enc: RatInterval, period: int) -> RatInterval:
    expr = IterMapExpr.critical_return(period)
    a, b = r_enc.lo, r_enc.hi
    sa = expr.at(a)
    m = (a + b) / 2
    sm = expr.at(m)
    if sm == 0:
        return RatInterval(m, m)
    if (sa > 0) != (sm > 0):
        return RatInterval(a, m)
    return RatInterval(m, b)


def markov_partition(center: Any, bits: Optional[int] = None, max_refinements: int = MAX_REFINEMENTS) -> MarkovPartition:
    """
    Particion de Markov de un centro y su SFT

    Los atomos A_0..A_p se etiquetan de izquierda a derecha entre 0, la orbita
    critica y 1. Cada atomo va a la corrida contigua de atomos cubierta por su
    imagen, que se calcula con indices: f(f^k(c)) = f^(k+1)(c), f(0) = f(1) = 0,
    invirtiendo el orden a la derecha de c. Un contacto en un solo punto no
    genera transicion.

    Args:
        center: CenterRoot o Center (r_enc y period)
        bits: precision de los encierros de la orbita
        max_refinements: biseciones maximas de r_enc para separar la orbita

    Returns:
        MarkovPartition con los puntos, el SFT, el orden de la orbita y el r_enc usado
    """
    r_enc, period = center.r_enc, center.period
    for attempt in range(max_refinements + 1):
        precision = bits or max(DEFAULT_BITS, 2 * period + 16 + attempt)
        orbit = _orbit_points(r_enc, period, precision)
        if _separated(orbit):
            break
        if r_enc.is_point:
            raise PartitionError(f"Orbita no separada con parametro exacto {r_enc}")
        r_enc = _refine_center(r_enc, period)
    else:
        raise PartitionError(
            f"No se separo la orbita critica de periodo {period} tras {max_refinements} refinamientos")

    # orden[i] = k tal que el i-esimo punto de la orbita es f^k(c)
    order = sorted(range(1, period + 1), key=lambda k: orbit[k - 1].lo)
    points = [RatInterval(Fraction(0), Fraction(0))]
    points.extend(orbit[k - 1] for k in order)
    points.append(RatInterval(Fraction(1), Fraction(1)))
    position = {k: i + 1 for i, k in enumerate(order)}
    last = period + 1

    def image_index(i: int) -> int:
        if i in (0, last):
            return 0
        k = order[i - 1]
        return position[k + 1 if k < period else 1]

    critical = position[period]
    rows = []
    for j in range(period + 1):
        if j < critical:
            a, b = image_index(j), image_index(j + 1)
        else:
            a, b = image_index(j + 1), image_index(j)
        if a >= b:
            raise PartitionError(f"Imagen incoherente del atomo {j}")
        rows.append(tuple(1 if a <= t < b else 0 for t in range(period + 1)))
    sft = SFT(period + 1, tuple(rows))
    return MarkovPartition(tuple(points), sft, tuple(order), r_enc)


def center_entropy(center: Any, eps: Any = DEFAULT_CENTER_EPS) -> EntropyBound:
    """Entropia del SFT inducido por la particion de Markov del centro."""
    sft = center.sft if isinstance(center, Center) else markov_partition(center).sft
    return sft_entropy(sft, eps)


def build_center(root: CenterRoot, eps: Any = DEFAULT_CENTER_EPS, bits: Optional[int] = None) -> Center:
    partition = markov_partition(root, bits)
    return Center(
        r_enc=partition.r_enc,
        period=root.period,
        orbit_order=partition.orbit_order,
        sft=partition.sft,
        entropy=sft_entropy(partition.sft, eps),
    )


def _isolate_all(periods: Sequence[int], width: Fraction, bits: Optional[int], workers: int) -> Dict[int, RootIsolation]:
    if workers > 1 and len(periods) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return dict(pool.map(_isolate_period, periods, repeat(width), repeat(bits)))
    return dict(_isolate_period(p, width, bits) for p in periods)


def enumerate_centers(
    p_max: int,
    width: Any = DEFAULT_CENTER_WIDTH,
    bits: Optional[int] = None,
    cache: Optional[CenterCache] = None,
    workers: int = 1,
    eps: Any = DEFAULT_CENTER_EPS,
) -> CenterScan:
    """
    Centros superatractores de periodo primitivo p <= p_max

    Se aislan las raices de P_p en (0,4) y se descartan las que intersecan un
    encierro de raiz de P_q para un divisor propio q de p.

    Args:
        p_max: periodo maximo (1 <= p_max <= MAX_PERIOD_CAP)
        width: ancho de aislamiento de las raices
        bits: precision fija; por defecto adaptativa
        cache: almacen persistente de centros (se reutiliza y se amplia)
        workers: procesos para aislar periodos en paralelo
        eps: ancho de los encierros de entropia

    Returns:
        CenterScan ordenado por parametro, con las celdas no resueltas
    """
    if not 1 <= p_max <= MAX_PERIOD_CAP:
        raise DomainError(f"p_max debe estar en [1, {MAX_PERIOD_CAP}]")
    width = Fraction(width)
    key = format_rational(width)
    centers: List[Center] = []
    pending: List[int] = []
    for p in range(1, p_max + 1):
        if cache is not None and cache.has_scan(p, key):
            centers.extend(Center.from_record(rec) for rec in cache.get_records_by_period(p))
        else:
            pending.append(p)

    unresolved: List[Tuple[int, RatInterval]] = []
    if pending:
        needed = sorted(set(pending) | {q for p in pending for q in proper_divisors(p)})
        isolations = _isolate_all(needed, width, bits, workers)
        for p in pending:
            iso = isolations[p]
            divisor_roots = [iv for q in proper_divisors(p) for iv in isolations[q].roots]
            found = []
            for enc in iso.roots:
                if not PARAMETER_RANGE.interior_contains(enc):
                    continue
                if any(enc.intersects(other) for other in divisor_roots):
                    continue
                found.append(build_center(CenterRoot(enc, p), eps, bits))
            for cell in iso.unresolved:
                logger.warning("Periodo %d: celda sin resolver %s", p, cell)
                unresolved.append((p, cell))
            if cache is not None:
                for center in found:
                    cache.append(center.to_record())
                if iso.complete:
                    cache.mark_scan(p, key)
            logger.info("Periodo %d: %d centros", p, len(found))
            centers.extend(found)

    centers.sort(key=lambda c: (c.r_enc.lo, c.period))
    return CenterScan(tuple(centers), tuple(unresolved))


def _is_primitive(d: Fraction, period: int, cell: RatInterval) -> Optional[bool]:
    """Decide si el unico punto p-periodico de la celda tiene periodo minimo p."""
    for q in proper_divisors(period):
        expr = IterMapExpr.periodic_defect(d, q)
        if cell.is_point:
            if expr.at(cell.lo) == 0:
                return False
            continue
        if interval_eval(expr, cell).excludes_zero():
            continue
        sa, sb = expr.at(cell.lo), expr.at(cell.hi)
        if sa == 0 or sb == 0 or (sa > 0) != (sb > 0):
            return False
        return None
    return True


def attracting_cycle_at(d: Any, p: int, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> bool:
    """
    Existe un ciclo atractor de periodo primitivo p para f_d

    Se aislan las raices de f_d^p(x) - x y se certifica |(f_d^p)'| < 1 sobre
    alguna de ellas.

    Raises:
        UnresolvedError: si ningun veredicto se certifica hasta max_bits
    """
    d = parse_rational(d) if isinstance(d, str) else Fraction(d)
    if not 0 < d < 4:
        raise DomainError(f"El parametro debe estar en (0,4): {d}")
    if p < 1:
        raise DomainError("El periodo debe ser >= 1")
    if p == 1:
        return any(-1 < multiplier < 1 for _, multiplier in fixed_points(d))

    expr = IterMapExpr.periodic_defect(d, p)
    precision = bits
    while precision <= max_bits:
        iso = root_isolate(expr, UNIT_INTERVAL, Fraction(1, 2 ** (precision // 2)))
        ambiguous = bool(iso.unresolved)
        for cell in iso.roots:
            multiplier = derivative_enclosure(expr.unshifted(), cell, precision)
            if -1 < multiplier.lo and multiplier.hi < 1:
                verdict = _is_primitive(d, p, cell)
                if verdict:
                    return True
                if verdict is None:
                    ambiguous = True
            elif not (multiplier.lo >= 1 or multiplier.hi <= -1):
                ambiguous = True
        if not ambiguous:
            return False
        precision *= 2
    raise UnresolvedError(f"Ciclo de periodo {p} en d={d} sin decidir hasta {max_bits} bits")


def _float_orbit(r: float, x: float, n: int) -> Tuple[float, float]:
    derivative = 1.0
    for _ in range(n):
        derivative *= r * (1.0 - 2.0 * x)
        x = r * x * (1.0 - x)
    return x, derivative


def _attracting_point(r: float, period: int, guess: float) -> Optional[float]:
    """Punto del ciclo atractor cercano a `guess`, por Newton en flotante (solo propuesta)."""
    x = guess
    for _ in range(60):
        y, derivative = _float_orbit(r, x, period)
        if derivative == 1.0:
            return None
        step = (y - x) / (derivative - 1.0)
        x -= step
        if not 0.0 < x < 1.0:
            return None
        if abs(step) < 1e-15:
            break
    y, derivative = _float_orbit(r, x, period)
    if abs(y - x) > 1e-12 or abs(derivative) >= 1.0:
        return None
    return x


@dataclass(frozen=True)
class CycleCell:
    """Celda de parametros donde cada r tiene un ciclo atractor de periodo p con un punto en `state`."""

    params: RatInterval
    state: RatInterval
    period: int


def certify_cycle_cell(params: RatInterval, period: int, guess: float, max_widenings: int = 40) -> Optional[CycleCell]:
    """
    Certificar un ciclo atractor de periodo p para todo r de la celda

    Para J alrededor del punto propuesto se exige, para todo r en la celda:
    cambio de signo de f_r^p(x) - x en los extremos de J, multiplicador
    encerrado en (-1,1) sobre J y ausencia de puntos de periodo divisor en J.
    """
    x0 = _attracting_point(float(params.midpoint), period, guess)
    if x0 is None:
        return None
    center = Fraction(x0)
    expr = IterMapExpr.periodic_defect(params, period)
    radius = max(params.width, Fraction(1, 2**50))
    for _ in range(max_widenings):
        state = RatInterval(center - radius, center + radius)
        if not UNIT_INTERVAL.interior_contains(state):
            return None
        left = interval_eval(expr, RatInterval(state.lo, state.lo))
        right = interval_eval(expr, RatInterval(state.hi, state.hi))
        if not (left.lo > 0 and right.hi < 0):
            radius *= 2
            continue
        multiplier = derivative_enclosure(expr.unshifted(), state)
        if not (-1 < multiplier.lo and multiplier.hi < 1):
            return None
        for q in proper_divisors(period):
            if not interval_eval(IterMapExpr.periodic_defect(params, q), state).excludes_zero():
                return None
        return CycleCell(params, state, period)
    return None


def grow_component(
    center: Center,
    toward: Any,
    max_steps: int = DEFAULT_GROWTH_STEPS,
) -> Optional[RatInterval]:
    """
    Intervalo de parametros conexo, que contiene el centro, con ciclo atractor de su periodo

    Se avanza desde r_enc hacia `toward` con celdas contiguas certificadas; el
    paso se reduce a la mitad tras cada fallo y se duplica tras dos exitos seguidos.
    """
    target = Fraction(toward)
    first = certify_cycle_cell(center.r_enc, center.period, 0.5)
    if first is None:
        logger.debug("No se certifico la celda inicial del centro %s", center.r_enc)
        return None
    hull = center.r_enc
    guess = float(first.state.midpoint)
    step = INITIAL_GROWTH_STEP
    upward = target > hull.hi
    streak = 0
    for _ in range(max_steps):
        edge = hull.hi if upward else hull.lo
        remaining = abs(target - edge)
        if target in hull or remaining == 0:
            break
        size = min(step, remaining)
        params = RatInterval(edge, edge + size) if upward else RatInterval(edge - size, edge)
        cell = certify_cycle_cell(params, center.period, guess)
        if cell is None:
            streak = 0
            step /= 2
            if step < MIN_GROWTH_STEP:
                break
            continue
        hull = hull.hull(params)
        guess = float(cell.state.midpoint)
        streak += 1
        if streak >= 2:
            step *= 2
    logger.debug("Componente de periodo %d crecida hasta %s", center.period, hull)
    return hull


class Side(str, Enum):
    BELOW = "BELOW"
    ABOVE = "ABOVE"
    CONTAINS = "CONTAINS"


@dataclass(frozen=True)
class BracketSample:
    """Parametro d con entropia conocida y su posicion respecto de la consulta."""

    d: Fraction
    entropy: EntropyBound
    side: Side
    witness_period: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": format_rational(self.d),
            "entropy": self.entropy.to_dict(),
            "side": self.side.value,
            "witness_period": self.witness_period,
        }


def _as_query(r: Any) -> RatInterval:
    if isinstance(r, RatInterval):
        return r
    return RatInterval.point(parse_rational(r) if isinstance(r, str) else Fraction(r))


def _seeds(query: RatInterval) -> List[BracketSample]:
    # h = 0 para r <= 3 (punto fijo atractor) y h(4) = 1 (conjugado a la tienda)
    below = BracketSample(min(Fraction(3), query.lo), EntropyBound.exact(Fraction(0)), Side.BELOW, 0)
    above = BracketSample(Fraction(4), EntropyBound.exact(Fraction(1)), Side.ABOVE, 0)
    return [below, above]


def collect_brackets(
    r: Any,
    p_max: int,
    cache: Optional[CenterCache] = None,
    bits: Optional[int] = None,
    workers: int = 1,
    growth_steps: int = DEFAULT_GROWTH_STEPS,
) -> List[BracketSample]:
    """
    Muestras de entropia conocida a ambos lados de la consulta

    Cada centro aporta una muestra del lado en que queda. Las componentes de
    los centros mas cercanos se ensanchan hacia la consulta; si la cubren se
    devuelve una muestra CONTAINS, cuya entropia es exactamente la de la consulta.
    """
    query = _as_query(r)
    if query not in PARAMETER_RANGE:
        raise DomainError(f"Consulta fuera de [0,4]: {query}")
    scan = enumerate_centers(p_max, cache=cache, bits=bits, workers=workers)
    samples = _seeds(query)
    below: Optional[Center] = None
    above: Optional[Center] = None
    for center in scan.centers:
        if center.r_enc.hi < query.lo:
            samples.append(BracketSample(center.r_enc.midpoint, center.entropy, Side.BELOW, center.period))
            if below is None or center.r_enc.hi > below.r_enc.hi:
                below = center
        elif center.r_enc.lo > query.hi:
            samples.append(BracketSample(center.r_enc.midpoint, center.entropy, Side.ABOVE, center.period))
            if above is None or center.r_enc.lo < above.r_enc.lo:
                above = center
        elif certify_cycle_cell(center.r_enc.hull(query), center.period, 0.5) is not None:
            samples.append(BracketSample(query.midpoint, center.entropy, Side.CONTAINS, center.period))

    jobs = [(c, query.hi if c is below else query.lo) for c in (below, above) if c is not None]
    with ThreadPoolExecutor(max_workers=2) as pool:
        hulls = list(pool.map(lambda job: grow_component(job[0], job[1], growth_steps), jobs))
    for (center, _), hull in zip(jobs, hulls):
        if hull is None:
            continue
        if query in hull:
            samples.append(BracketSample(query.midpoint, center.entropy, Side.CONTAINS, center.period))
        elif center is below and hull.hi < query.lo:
            samples.append(BracketSample(hull.hi, center.entropy, Side.BELOW, center.period))
        elif center is above and hull.lo > query.hi:
            samples.append(BracketSample(hull.lo, center.entropy, Side.ABOVE, center.period))

    samples.sort(key=lambda s: (s.d, s.side.value, s.witness_period))
    return samples


@dataclass(frozen=True)
class SandwichBudget:
    """Periodo maximo, tiempo maximo (segundos) y pasos de crecimiento."""

    max_period: int = DEFAULT_MAX_PERIOD
    seconds: Optional[float] = None
    bits: Optional[int] = None
    growth_steps: int = DEFAULT_GROWTH_STEPS
    workers: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.max_period <= MAX_PERIOD_CAP:
            raise DomainError(f"max_period debe estar en [1, {MAX_PERIOD_CAP}]")
        if self.seconds is not None and self.seconds <= 0:
            raise DomainError("El presupuesto de tiempo debe ser positivo")


@dataclass(frozen=True)
class SandwichResult:
    bound: EntropyBound
    lower: BracketSample
    upper: BracketSample
    periods: Tuple[int, ...] = field(default=())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bound": self.bound.to_dict(),
            "lower": self.lower.to_dict(),
            "upper": self.upper.to_dict(),
            "periods": list(self.periods),
        }


def sandwich(
    r: Any,
    eps: Any,
    budget: SandwichBudget = SandwichBudget(),
    cache: Optional[CenterCache] = None,
) -> SandwichResult:
    """
    Encierro de h(r) entre muestras d_l <= r <= d_u

    Se aumenta el periodo maximo hasta que hi(h(d_u)) - lo(h(d_l)) <= eps.

    Raises:
        BudgetExceededError: con el mejor encierro (sano pero ancho)
    """
    query = _as_query(r)
    eps = parse_rational(eps) if isinstance(eps, str) else Fraction(eps)
    if query not in PARAMETER_RANGE:
        raise DomainError(f"El parametro debe estar en [0,4]: {query}")
    if eps <= 0:
        raise DomainError("eps debe ser positivo")
    low_seed, high_seed = _seeds(query)
    if query.hi <= 3:
        return SandwichResult(EntropyBound.exact(Fraction(0)), low_seed, low_seed)
    if query.lo == 4:
        return SandwichResult(EntropyBound.exact(Fraction(1)), high_seed, high_seed)

    cache = cache if cache is not None else CenterCache(None)
    started = time.monotonic()
    best: Optional[SandwichResult] = None
    for p_max in range(1, budget.max_period + 1):
        samples = collect_brackets(
            query, p_max, cache, budget.bits, budget.workers, budget.growth_steps)
        contained = [s for s in samples if s.side is Side.CONTAINS]
        if contained:
            hit = contained[0]
            logger.info("Consulta dentro de la componente de periodo %d", hit.witness_period)
            return SandwichResult(hit.entropy.with_provenance(Provenance.SANDWICH), hit, hit, (hit.witness_period,))
        lower = max((s for s in samples if s.side is Side.BELOW), key=lambda s: (s.entropy.lo, s.d))
        upper = min((s for s in samples if s.side is Side.ABOVE), key=lambda s: (s.entropy.hi, -s.d))
        bound = EntropyBound(lower.entropy.lo, upper.entropy.hi, Provenance.SANDWICH, True)
        best = SandwichResult(bound, lower, upper, (lower.witness_period, upper.witness_period))
        logger.info("p_max=%d: h en [%s, %s]", p_max, float(bound.lo), float(bound.hi))
        if bound.width <= eps:
            return best
        if budget.seconds is not None and time.monotonic() - started > budget.seconds:
            raise BudgetExceededError(best.bound, best)
    raise BudgetExceededError(best.bound, best)


def entropy_at(
    r: Any,
    eps: Any,
    budget: SandwichBudget = SandwichBudget(),
    cache: Optional[CenterCache] = None,
) -> EntropyBound:
    """
    h(r) con ancho <= eps por el algoritmo de sandwich

    Para r <= 3 devuelve [0,0] EXACT y para r = 4 devuelve [1,1] EXACT.
    """
    return sandwich(r, eps, budget, cache).bound
