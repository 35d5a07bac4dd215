"""Estructuras de datos compartidas por los modulos del nucleo."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict

from .errors import DomainError, FormatError


class Provenance(str, Enum):
    """Metodo que produjo una cota de entropia."""

    HORSESHOE = "HORSESHOE"
    VARIATION = "VARIATION"
    SFT = "SFT"
    SANDWICH = "SANDWICH"
    EXACT = "EXACT"


@dataclass(frozen=True)
class EntropyBound:
    """Encierro [lo, hi] de una entropia en base 2."""

    lo: Fraction
    hi: Fraction
    provenance: Provenance
    certified: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        object.__setattr__(self, "provenance", Provenance(self.provenance))
        if not 0 <= self.lo <= self.hi:
            raise DomainError(f"Cota de entropia invalida: [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: Fraction) -> "EntropyBound":
        return cls(Fraction(value), Fraction(value), Provenance.EXACT)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def with_provenance(self, provenance: Provenance) -> "EntropyBound":
        return EntropyBound(self.lo, self.hi, provenance, self.certified)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lo": f"{self.lo.numerator}/{self.lo.denominator}",
            "hi": f"{self.hi.numerator}/{self.hi.denominator}",
            "provenance": self.provenance.value,
            "certified": self.certified,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EntropyBound":
        try:
            return cls(
                Fraction(data["lo"]),
                Fraction(data["hi"]),
                Provenance(data["provenance"]),
                bool(data.get("certified", True)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"Cota de entropia mal formada: {data!r}") from exc
