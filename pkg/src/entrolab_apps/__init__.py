"""Paquete raiz de entrolab: linea de comandos y configuracion."""

__all__ = ["config", "main"]
