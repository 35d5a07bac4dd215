"""
Subshifts de tipo finito sobre alfabetos finitos.

Conteo de palabras, entropia certificada por cotas de Collatz-Wielandt,
verificacion de mezcla, la codificacion por prefijos kappa y el combinador
de pegado de mapas sobre sucesiones binarias.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Protocol, Sequence, Tuple

import networkx as nx
import numpy as np

from .errors import DomainError, FormatError, NotAdmissibleError, PrecisionError, PrefixTooShortError
from .numkit import RatInterval, log2_enclosure
from .structures import EntropyBound, Provenance

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

# Tope de cuadrados sucesivos de I + B en la iteracion de Collatz-Wielandt
MAX_SQUARINGS = 24
MAX_LOOKAHEAD = 12


class Mixing(str, Enum):
    MIXING = "MIXING"
    NOT_MIXING = "NOT_MIXING"


@dataclass(frozen=True)
class SFT:
    """Subshift dado por una matriz de transiciones 0/1 (palabras prohibidas de largo 2)."""

    alphabet_size: int
    allowed: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = self.alphabet_size
        if k < 1:
            raise DomainError("El alfabeto debe tener al menos un simbolo")
        rows = tuple(tuple(int(v) for v in row) for row in self.allowed)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise DomainError(f"La matriz de transiciones debe ser {k}x{k}")
        if any(v not in (0, 1) for row in rows for v in row):
            raise DomainError("La matriz de transiciones debe ser 0/1")
        object.__setattr__(self, "allowed", rows)

    @classmethod
    def full_shift(cls, k: int) -> "SFT":
        return cls(k, tuple(tuple(1 for _ in range(k)) for _ in range(k)))

    @classmethod
    def from_successors(cls, k: int, successors: Dict[int, Iterable[int]]) -> "SFT":
        rows = [[0] * k for _ in range(k)]
        for a, targets in successors.items():
            for b in targets:
                rows[a][b] = 1
        return cls(k, tuple(tuple(row) for row in rows))

    @classmethod
    def from_json(cls, data: Any) -> "SFT":
        try:
            k = int(data["alphabet"])
            rows = tuple(tuple(int(v) for v in row) for row in data["allowed"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"SFT mal formado: {exc}") from exc
        try:
            return cls(k, rows)
        except DomainError as exc:
            raise FormatError(str(exc)) from exc

    def to_json(self) -> Dict[str, Any]:
        return {"alphabet": self.alphabet_size, "allowed": [list(row) for row in self.allowed]}

    def matrix(self) -> np.ndarray:
        """Matriz entera exacta (dtype object)."""
        return np.array(self.allowed, dtype=object)

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.alphabet_size))
        g.add_edges_from(
            (a, b)
            for a, row in enumerate(self.allowed)
            for b, v in enumerate(row)
            if v
        )
        return g

    def successors(self, a: int) -> List[int]:
        return [b for b, v in enumerate(self.allowed[a]) if v]


def _cyclic_components(g: nx.DiGraph) -> List[FrozenSet[int]]:
    components = []
    for comp in nx.strongly_connected_components(g):
        if len(comp) > 1 or any(g.has_edge(v, v) for v in comp):
            components.append(frozenset(comp))
    return sorted(components, key=min)


def essential_states(Z: SFT) -> Tuple[int, ...]:
    """Estados sobre caminos biinfinitos: alcanzables desde un ciclo y que alcanzan un ciclo."""
    g = Z.graph()
    cyclic = set().union(*_cyclic_components(g))
    forward = set(cyclic)
    backward = set(cyclic)
    for v in cyclic:
        forward |= nx.descendants(g, v)
        backward |= nx.ancestors(g, v)
    return tuple(sorted(forward & backward))


def essential_graph(Z: SFT) -> nx.DiGraph:
    return Z.graph().subgraph(essential_states(Z)).copy()


def parse_word(text: str, alphabet_size: int) -> Word:
    """Digitos sin separador, o indices separados por '.' si el alfabeto supera 10."""
    text = text.strip()
    if not text:
        return ()
    try:
        if alphabet_size > 10:
            letters = tuple(int(part) for part in text.split("."))
        else:
            letters = tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise FormatError(f"Palabra mal formada: {text!r}") from exc
    if any(not 0 <= a < alphabet_size for a in letters):
        raise FormatError(f"Simbolo fuera del alfabeto en {text!r}")
    return letters


def format_word(word: Sequence[int], alphabet_size: int = 2) -> str:
    if alphabet_size > 10:
        return ".".join(str(a) for a in word)
    return "".join(str(a) for a in word)


def is_in_language(Z: SFT, word: Sequence[int]) -> bool:
    """La palabra es un camino del grafo esencial."""
    states = set(essential_states(Z))
    if any(a not in states for a in word):
        return False
    return all(Z.allowed[a][b] for a, b in zip(word, word[1:]))


def language_words(Z: SFT, n: int) -> List[Word]:
    """Todas las palabras de largo n del lenguaje, en orden lexicografico."""
    states = essential_states(Z)
    if n <= 0:
        return [()]
    words: List[Word] = [(a,) for a in states]
    allowed = set(states)
    for _ in range(n - 1):
        words = [w + (b,) for w in words for b in Z.successors(w[-1]) if b in allowed]
    return words


def _mat_power(a: np.ndarray, n: int) -> np.ndarray:
    result = np.identity(a.shape[0], dtype=object)
    base = a
    while n:
        if n & 1:
            result = result.dot(base)
        base = base.dot(base)
        n >>= 1
    return result


def _essential_matrix(Z: SFT) -> np.ndarray:
    states = list(essential_states(Z))
    return Z.matrix()[np.ix_(states, states)]


def count_words(Z: SFT, n: int) -> int:
    """
    Numero exacto de palabras de largo n

    Cuenta caminos de n simbolos del subgrafo esencial: 1^T A^(n-1) 1.
    """
    if n < 1:
        raise DomainError("n debe ser >= 1")
    a = _essential_matrix(Z)
    if a.shape[0] == 0:
        return 0
    return int(_mat_power(a, n - 1).sum())


def _component_matrices(Z: SFT) -> List[np.ndarray]:
    g = essential_graph(Z)
    matrices = []
    for comp in _cyclic_components(g):
        states = sorted(comp)
        matrices.append(Z.matrix()[np.ix_(states, states)])
    return matrices


def row_sum_bracket(Z: SFT, n: int) -> Tuple[int, int]:
    """
    Cotas enteras de lambda^n por sumas de filas de B^n en cada componente ciclica.

    Devuelve (max de minimos, max de maximos): lambda^n queda entre ambos.
    """
    if n < 1:
        raise DomainError("n debe ser >= 1")
    lows, highs = [], []
    for b in _component_matrices(Z):
        sums = _mat_power(b, n).sum(axis=1)
        lows.append(int(min(sums)))
        highs.append(int(max(sums)))
    if not lows:
        return 0, 0
    return max(lows), max(highs)


def _is_simple_cycle(b: np.ndarray) -> bool:
    return int(b.sum()) == b.shape[0]


def _rescale(power: np.ndarray, keep: int) -> np.ndarray:
    top = max(int(x) for x in power.flat).bit_length()
    if top <= keep:
        return power
    shift = top - keep
    return np.array([[int(x) >> shift for x in row] for row in power], dtype=object)


def _perron_bracket(b: np.ndarray, eps: Fraction, bits: int) -> Tuple[RatInterval, RatInterval]:
    """
    Encierro de log2(lambda) de una componente irreducible.

    M = I + B es primitiva; los cocientes (M v)_i / v_i con v ~ M^N 1 encierran
    1 + lambda y convergen al duplicar N. Cualquier v positivo da cotas
    validas, asi que M^N se reescala por potencias de dos.
    """
    size = b.shape[0]
    m = b + np.identity(size, dtype=object)
    power = m
    enc = RatInterval(Fraction(0), Fraction(1))
    for squaring in range(MAX_SQUARINGS):
        v = np.array([max(1, int(x)) for x in power.dot(np.ones(size, dtype=object))], dtype=object)
        w = m.dot(v)
        ratios = [Fraction(int(w[i]), int(v[i])) for i in range(size)]
        lam_lo, lam_hi = min(ratios) - 1, max(ratios) - 1
        lo = log2_enclosure(lam_lo, bits).lo if lam_lo > 1 else Fraction(0)
        hi = log2_enclosure(lam_hi, bits).hi
        enc = RatInterval(max(Fraction(0), lo), max(Fraction(0), hi))
        if enc.width <= eps:
            logger.debug("Collatz-Wielandt convergio tras %d cuadrados", squaring)
            return enc, RatInterval(lam_lo, lam_hi)
        power = _rescale(power.dot(power), 2 * bits + 64)
    raise PrecisionError(f"No se alcanzo el ancho {eps} en la entropia del SFT")


def sft_entropy(Z: SFT, eps: Any = Fraction(1, 2**30)) -> EntropyBound:
    """
    Entropia certificada log2 del radio de Perron del grafo esencial

    Args:
        Z: subshift de tipo finito
        eps: ancho maximo del encierro

    Returns:
        EntropyBound SFT con hi - lo <= eps
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps debe ser positivo")
    bits = max(8, eps.denominator.bit_length() - eps.numerator.bit_length() + 4)
    lo = hi = Fraction(0)
    for b in _component_matrices(Z):
        if _is_simple_cycle(b):
            continue
        enc, _ = _perron_bracket(b, eps, bits)
        lo = max(lo, enc.lo)
        hi = max(hi, enc.hi)
    return EntropyBound(lo, hi, Provenance.SFT, True)


def check_mixing(Z: SFT) -> Mixing:
    """MIXING si la matriz esencial es primitiva (irreducible y aperiodica)."""
    g = essential_graph(Z)
    if g.number_of_nodes() == 0:
        return Mixing.NOT_MIXING
    if nx.is_strongly_connected(g) and nx.is_aperiodic(g):
        return Mixing.MIXING
    return Mixing.NOT_MIXING


def mixing_gap(Z: SFT) -> int:
    """Menor m tal que A^m > 0 en el grafo esencial (indice de primitividad)."""
    if check_mixing(Z) is not Mixing.MIXING:
        raise NotAdmissibleError("El SFT no es mezclador")
    a = (_essential_matrix(Z).astype(np.int64) > 0).astype(np.int64)
    size = a.shape[0]
    power = a.copy()
    for m in range(1, (size - 1) ** 2 + 2):
        if power.all():
            return m
        power = ((power @ a) > 0).astype(np.int64)
    raise NotAdmissibleError("Matriz no primitiva")


def _has_positive_entropy(Z: SFT) -> bool:
    return any(not _is_simple_cycle(b) for b in _component_matrices(Z))


def _require_admissible(Z: SFT) -> None:
    if Z.alphabet_size != 2:
        raise NotAdmissibleError("La codificacion kappa requiere un alfabeto binario")
    if check_mixing(Z) is not Mixing.MIXING:
        raise NotAdmissibleError("La codificacion kappa requiere un SFT mezclador")
    if not _has_positive_entropy(Z):
        raise NotAdmissibleError("La codificacion kappa requiere entropia positiva")


def _writes(Z: SFT, previous: Optional[int], letter: int, states: FrozenSet[int]) -> bool:
    """Se escribe la letra si cambiarla por la otra deja una palabra del lenguaje."""
    flipped = 1 - letter
    if flipped not in states:
        return False
    return previous is None or bool(Z.allowed[previous][flipped])


@dataclass(frozen=True)
class PrefixMapTrace:
    """Palabra de entrada y su imagen binaria Psi(w)."""

    word: Word
    output: Word

    @property
    def output_length(self) -> int:
        return len(self.output)


def kappa_trace(Z: SFT, word: Sequence[int]) -> PrefixMapTrace:
    _require_admissible(Z)
    w = tuple(word)
    if not is_in_language(Z, w):
        raise NotAdmissibleError(f"La palabra {format_word(w)} no esta en el lenguaje")
    states = frozenset(essential_states(Z))
    output = []
    previous: Optional[int] = None
    for letter in w:
        if _writes(Z, previous, letter, states):
            output.append(letter)
        previous = letter
    return PrefixMapTrace(w, tuple(output))


def kappa_encode(Z: SFT, word: Sequence[int]) -> Word:
    """
    Psi(w): escribe w_k cuando cambiar la ultima letra de w[0..k] sigue en el lenguaje

    Args:
        Z: SFT binario, mezclador y de entropia positiva
        word: palabra del lenguaje

    Returns:
        Palabra binaria, prefijo de Psi de cualquier extension de word
    """
    return kappa_trace(Z, word).output


def kappa_decode(Z: SFT, bits: Sequence[int]) -> Word:
    """Palabra mas corta del lenguaje con Psi(w) = bits; no agrega letras forzadas al final."""
    _require_admissible(Z)
    states = frozenset(essential_states(Z))
    word: List[int] = []
    limit = 4 * (len(bits) + 2) * Z.alphabet_size**2
    for bit in bits:
        if bit not in (0, 1):
            raise FormatError(f"Simbolo no binario: {bit!r}")
        while True:
            previous = word[-1] if word else None
            options = [a for a in sorted(states) if previous is None or Z.allowed[previous][a]]
            if len(options) == 2:
                word.append(bit)
                break
            if not options:
                raise NotAdmissibleError("Camino sin extension en el grafo esencial")
            word.append(options[0])
            if len(word) > limit:
                raise NotAdmissibleError("Cadena de letras forzadas sin fin")
    return tuple(word)


def phi_modulus(Z: SFT, m: int) -> int:
    """Menor L tal que toda palabra de largo L tiene |Psi(w)| >= m."""
    _require_admissible(Z)
    if m <= 0:
        return 0
    states = frozenset(essential_states(Z))
    # gain[a]: minimo de simbolos escritos sobre palabras que terminan en a
    gain = {a: int(_writes(Z, None, a, states)) for a in states}
    length = 1
    cap = 64 * (m + 1)
    while min(gain.values()) < m:
        length += 1
        if length > cap:
            raise NotAdmissibleError("El modulo de continuidad no es finito")
        gain = {
            b: min(
                gain[a] + int(_writes(Z, a, b, states))
                for a in states
                if Z.allowed[a][b]
            )
            for b in states
            if any(Z.allowed[a][b] for a in states)
        }
    return length


class PrefixMap(Protocol):
    """Mapa computable sobre sucesiones binarias: prefijo de entrada -> prefijo determinado."""

    def __call__(self, word: Sequence[int]) -> Word:
        ...


class IdentityPrefixMap:
    """Identidad; entropia 0."""

    def __call__(self, word: Sequence[int]) -> Word:
        return tuple(word)


class ShiftConjugate:
    """kappa o sigma o kappa^-1 sobre prefijos binarios de un SFT admisible."""

    def __init__(self, Z: SFT) -> None:
        _require_admissible(Z)
        self.Z = Z

    def __call__(self, word: Sequence[int]) -> Word:
        w = kappa_decode(self.Z, word)
        if len(w) <= 1:
            return ()
        return kappa_encode(self.Z, w[1:])


def _glue_once(components: Sequence[PrefixMap], word: Word) -> Word:
    try:
        k = word.index(1)
    except ValueError:
        return word
    if k >= len(components):
        return word
    return word[:k + 1] + tuple(components[k](word[k + 1:]))


def glue_maps(components: Sequence[PrefixMap], word: Sequence[int], length: Optional[int] = None) -> Word:
    """
    Pegado f(0^k 1 x) = 0^k 1 f_k(x) sobre prefijos binarios

    Los prefijos sin unos se mapean en ceros; con k >= N se usa la identidad.

    Args:
        components: mapas f_0 .. f_{N-1}
        word: prefijo binario de entrada
        length: largo de salida pedido

    Returns:
        Prefijo determinado de f(word), recortado a `length` si se pidio

    Raises:
        PrefixTooShortError: con el numero de simbolos de entrada faltantes
    """
    w = tuple(word)
    if any(b not in (0, 1) for b in w):
        raise FormatError("La entrada debe ser binaria")
    out = _glue_once(components, w)
    if length is None:
        return out
    if len(out) >= length:
        return out[:length]
    for extra in range(1, MAX_LOOKAHEAD + 1):
        if all(
            len(_glue_once(components, w + tail)) >= length
            for tail in itertools.product((0, 1), repeat=extra)
        ):
            raise PrefixTooShortError(extra)
    raise PrefixTooShortError(MAX_LOOKAHEAD + 1)


def iterate_prefix_map(f: PrefixMap, word: Sequence[int], steps: int) -> List[Word]:
    """Prefijos determinados de x, f(x), ..., f^steps(x)."""
    orbit = [tuple(word)]
    for _ in range(steps):
        orbit.append(tuple(f(orbit[-1])))
    return orbit


def count_itineraries(f: PrefixMap, inputs: Iterable[Sequence[int]], n: int, window: int) -> int:
    """Itinerarios distintos de largo n vistos por una ventana de `window` simbolos."""
    seen = set()
    for word in inputs:
        orbit = iterate_prefix_map(f, word, n - 1)
        if any(len(w) < window for w in orbit):
            continue
        seen.add(tuple(w[:window] for w in orbit))
    return len(seen)
