"""Jerarquia de excepciones del nucleo entrolab."""

from typing import Optional


class EntroLabError(Exception):
    """Error base de todas las operaciones numericas."""


class DomainError(EntroLabError, ValueError):
    """Entrada fuera del dominio de la operacion."""


class FormatError(EntroLabError, ValueError):
    """Documento JSON o texto mal formado."""


class ResourceLimitError(EntroLabError):
    """Se supero un limite configurado (por ejemplo el tope de nodos)."""


class PrecisionError(EntroLabError):
    """No se alcanza la precision pedida con los recursos disponibles."""


class UnresolvedError(EntroLabError):
    """La certificacion no pudo decidirse al tope de precision."""


class PartitionError(EntroLabError):
    """No se pudo certificar la separacion de la orbita critica."""


class NotAdmissibleError(EntroLabError, ValueError):
    """Subshift o palabra fuera de las hipotesis de la codificacion."""


class PrefixTooShortError(EntroLabError):
    """El prefijo de entrada no determina la salida pedida."""

    def __init__(self, needed: int, message: Optional[str] = None) -> None:
        self.needed = needed
        super().__init__(
            message or f"Se necesitan {needed} simbolos de entrada adicionales")


class BudgetExceededError(EntroLabError):
    """Se agoto el presupuesto; `best` es la mejor cota sana obtenida."""

    def __init__(self, best, detail=None, message: Optional[str] = None) -> None:
        self.best = best
        self.detail = detail
        super().__init__(message or f"Presupuesto agotado; mejor cota {best}")
