"""
Almacen de centros superatractores.
Maneja la carga, busqueda y escritura de registros en un archivo JSON-lines.
"""

import json
import logging
import os
import threading
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

logger = logging.getLogger(__name__)

SCHEMA = "entrolab-centers"
VERSION = 1


class CacheError(Exception):
    """Archivo de cache ilegible o de otro esquema."""


def _record_key(record: Dict[str, Any]) -> Tuple[int, Tuple[str, ...]]:
    return int(record["period"]), tuple(record["r_enc"])


class CenterCache:
    """Gestiona los registros de centros desde un archivo JSON-lines"""

    def __init__(self, path: Optional[str] = None):
        """
        Inicializar el almacen

        Args:
            path: Ruta del archivo; con None el almacen vive solo en memoria
        """
        self.path = path
        self.records: List[Dict[str, Any]] = []
        self.scans: set = set()
        self._keys: set = set()
        self._lock = threading.Lock()
        self.load_data()

    def load_data(self) -> None:
        """Cargar registros desde el archivo (un archivo inexistente es un almacen vacio)"""
        if self.path is None or not os.path.exists(self.path):
            return

        with open(self.path, "r", encoding="utf-8") as handle:
            lines = [line for line in handle if line.strip()]
        if not lines:
            return
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise CacheError(f"Cabecera ilegible en {self.path}: {exc}") from exc
        if header.get("schema") != SCHEMA or header.get("version") != VERSION:
            raise CacheError(f"Esquema desconocido en {self.path}: {header}")

        for number, line in enumerate(lines[1:], start=2):
            try:
                entry = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CacheError(f"Linea {number} ilegible en {self.path}: {exc}") from exc
            kind = entry.pop("kind", None)
            if kind == "center":
                self._add(entry)
            elif kind == "scan":
                self.scans.add((int(entry["period"]), str(entry["width"])))
            else:
                raise CacheError(f"Linea {number}: tipo de registro desconocido {kind!r}")

        logger.info("Cargados %d centros desde %s", len(self.records), self.path)

    def _add(self, record: Dict[str, Any]) -> bool:
        key = _record_key(record)
        if key in self._keys:
            return False
        self._keys.add(key)
        self.records.append(record)
        return True

    def _write(self, entry: Dict[str, Any]) -> None:
        if self.path is None:
            return
        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        fresh = not os.path.exists(self.path) or os.path.getsize(self.path) == 0
        with open(self.path, "a", encoding="utf-8") as handle:
            if fresh:
                handle.write(json.dumps({"schema": SCHEMA, "version": VERSION}, sort_keys=True) + "\n")
            handle.write(json.dumps(entry, sort_keys=True) + "\n")

    def append(self, record: Dict[str, Any]) -> bool:
        """
        Agregar un centro si no estaba

        Args:
            record: Diccionario con al menos period y r_enc

        Returns:
            True si el registro era nuevo
        """
        with self._lock:
            if not self._add(dict(record)):
                return False
            self._write({"kind": "center", **record})
            return True

    def mark_scan(self, period: int, width: str) -> None:
        """Registrar que el periodo quedo completo al ancho dado"""
        with self._lock:
            key = (int(period), str(width))
            if key in self.scans:
                return
            self.scans.add(key)
            self._write({"kind": "scan", "period": key[0], "width": key[1]})

    def has_scan(self, period: int, width: str) -> bool:
        return (int(period), str(width)) in self.scans

    def search(self, period: int, r_enc: List[str]) -> Optional[Dict[str, Any]]:
        """Registro exacto por periodo y encierro, o None"""
        key = (int(period), tuple(r_enc))
        for record in self.records:
            if _record_key(record) == key:
                return record
        return None

    def get_all_records(self) -> List[Dict[str, Any]]:
        return list(self.records)

    def get_records_by_period(self, period: int) -> List[Dict[str, Any]]:
        return [record for record in self.records if int(record["period"]) == int(period)]

    def to_frame(self) -> pd.DataFrame:
        """Vista tabular: una fila por centro, con el encierro y la entropia aplanados"""
        rows = []
        for record in self.records:
            entropy = record.get("entropy", {})
            rows.append({
                "period": int(record["period"]),
                "r_lo": record["r_enc"][0],
                "r_hi": record["r_enc"][1],
                "orbit_order": " ".join(str(k) for k in record.get("orbit_order", [])),
                "h_lo": entropy.get("lo"),
                "h_hi": entropy.get("hi"),
            })
        columns = ["period", "r_lo", "r_hi", "orbit_order", "h_lo", "h_hi"]
        return pd.DataFrame(rows, columns=columns)
