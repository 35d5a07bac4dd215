"""
Script simple para exportar el cache de centros a CSV
Sirve para graficar externamente el diagrama de bifurcacion
"""

import argparse
import os
from fractions import Fraction

from dotenv import load_dotenv
from entrolab_cache import CenterCache
from entrolab_core.constants import DEFAULT_CACHE_PATH


def main():
    load_dotenv()

    parser = argparse.ArgumentParser(description="Exportar centros a CSV")
    parser.add_argument("--cache-path", default=os.getenv("ENTROLAB_CACHE", DEFAULT_CACHE_PATH))
    parser.add_argument("--out", default="centers.csv")
    args = parser.parse_args()

    cache = CenterCache(args.cache_path)
    df = cache.to_frame()

    # r_lo es un racional canonico en texto
    df["r"] = df["r_lo"].map(Fraction)
    df = df.sort_values(["period", "r"]).drop(columns="r")

    df.to_csv(args.out, index=False)
    print(f"Exportacion completada. CSV guardado en {args.out}")
    print(f"Total de centros: {len(df)}")


if __name__ == "__main__":
    main()
