"""Configuracion de una ejecucion: banderas de linea de comandos mas variables de entorno."""

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from entrolab_core.constants import (
    DEFAULT_BITS,
    DEFAULT_CACHE_PATH,
    DEFAULT_MAX_PERIOD,
    DEFAULT_NODE_CAP,
    MAX_PERIOD_CAP,
)
from entrolab_core.errors import FormatError
from entrolab_core.numkit import parse_rational

OUTPUT_FORMATS = ("tsv", "json")
UNITS = ("bits", "nats")


class ConfigError(ValueError):
    """Valor de configuracion invalido (error de uso)."""


def _from_env(name: str, convert: Callable[[str], Any]) -> Optional[Any]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return convert(raw.strip())
    except ValueError as exc:
        raise ConfigError(f"{name} invalido: {raw!r}") from exc


def _pick(flag: Any, env_name: str, convert: Callable[[str], Any], default: Any) -> Any:
    if flag is not None:
        return flag
    value = _from_env(env_name, convert)
    return default if value is None else value


@dataclass(frozen=True)
class RunConfig:
    """Parametros comunes a todos los comandos"""

    bits: Optional[int] = None
    eps: Optional[Fraction] = None
    max_period: int = DEFAULT_MAX_PERIOD
    node_cap: int = DEFAULT_NODE_CAP
    budget_seconds: Optional[float] = None
    cache_path: str = DEFAULT_CACHE_PATH
    output_format: str = "tsv"
    units: str = "bits"
    workers: int = 1

    def __post_init__(self) -> None:
        for name in ("max_period", "node_cap", "workers"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} debe ser positivo")
        if self.bits is not None and self.bits <= 0:
            raise ConfigError("bits debe ser positivo")
        if self.max_period > MAX_PERIOD_CAP:
            raise ConfigError(f"max_period no puede superar {MAX_PERIOD_CAP}")
        if self.eps is not None and self.eps <= 0:
            raise ConfigError("eps debe ser positivo")
        if self.budget_seconds is not None and self.budget_seconds <= 0:
            raise ConfigError("budget_seconds debe ser positivo")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Formato desconocido: {self.output_format}")
        if self.units not in UNITS:
            raise ConfigError(f"Unidad desconocida: {self.units}")

    @property
    def precision(self) -> int:
        """Bits fijos, o DEFAULT_BITS cuando la precision es adaptativa (bits = None)"""
        return self.bits if self.bits is not None else DEFAULT_BITS

    @classmethod
    def from_args(cls, args: Any) -> "RunConfig":
        """
        Combinar banderas y entorno

        Las banderas ganan sobre ENTROLAB_BITS, ENTROLAB_MAX_PERIOD,
        ENTROLAB_NODE_CAP y ENTROLAB_BUDGET_SECONDS; ENTROLAB_CACHE gana
        sobre --cache-path.

        Args:
            args: Namespace de argparse (los atributos ausentes toman su valor por defecto)

        Returns:
            RunConfig validada
        """
        eps = getattr(args, "eps", None)
        if eps is not None:
            try:
                eps = parse_rational(eps)
            except FormatError as exc:
                raise ConfigError(str(exc)) from exc

        cache_path = _from_env("ENTROLAB_CACHE", str) or getattr(args, "cache_path", None) or DEFAULT_CACHE_PATH

        return cls(
            bits=_pick(getattr(args, "bits", None), "ENTROLAB_BITS", int, None),
            eps=eps,
            max_period=_pick(getattr(args, "max_period", None), "ENTROLAB_MAX_PERIOD", int, DEFAULT_MAX_PERIOD),
            node_cap=_pick(getattr(args, "node_cap", None), "ENTROLAB_NODE_CAP", int, DEFAULT_NODE_CAP),
            budget_seconds=_pick(getattr(args, "budget_seconds", None), "ENTROLAB_BUDGET_SECONDS", float, None),
            cache_path=cache_path,
            output_format=getattr(args, "format", None) or "tsv",
            units=getattr(args, "units", None) or "bits",
            workers=getattr(args, "workers", None) or 1,
        )
