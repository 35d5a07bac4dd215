"""Almacen persistente de centros para entrolab."""

from .center_cache import CacheError, CenterCache

__all__ = ["CacheError", "CenterCache"]
