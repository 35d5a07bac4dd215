"""
Ejemplo de uso de entrolab
Recorre las cotas de entropia para mapas lineales a trozos, SFT y la familia logistica
"""

from fractions import Fraction

from entrolab_core import (
    SFT,
    PWLMap,
    QuadMap,
    SandwichBudget,
    SearchBudget,
    ShiftConjugate,
    entropy_at,
    entropy_via_variation,
    enumerate_centers,
    format_decimal,
    kappa_decode,
    kappa_encode,
    realize_computable,
    search_lower_bounds,
    sft_entropy,
)


def example_tent():
    """Ejemplo 1: Herraduras para la tienda"""
    print("\n" + "=" * 60)
    print("EJEMPLO 1: Herraduras para la tienda")
    print("=" * 60 + "\n")

    tent = PWLMap.tent()
    for record in search_lower_bounds(tent, SearchBudget(max_n=6)):
        print(f"p={record.cert.p} n={record.cert.n} cota >= {format_decimal(record.bound.lo, 6, -1)}")
    print("-" * 60 + "\n")


def example_realize():
    """Ejemplo 2: Realizar h = log2(3/2) y recuperarla por variacion"""
    print("\n" + "=" * 60)
    print("EJEMPLO 2: Realizacion de una entropia")
    print("=" * 60 + "\n")

    f = realize_computable("0.5849625")
    bound = entropy_via_variation(f, 4)
    print(f"Nodos: {len(f.nodes)}")
    print(f"h en [{format_decimal(bound.lo, 8, -1)}, {format_decimal(bound.hi, 8, 1)}] certificada={bound.certified}")
    print("-" * 60 + "\n")


def example_golden_mean():
    """Ejemplo 3: SFT de la razon aurea y codificacion binaria"""
    print("\n" + "=" * 60)
    print("EJEMPLO 3: SFT de la razon aurea")
    print("=" * 60 + "\n")

    golden = SFT.from_successors(2, {0: [0, 1], 1: [0]})
    bound = sft_entropy(golden, Fraction(1, 10**9))
    print(f"h en [{format_decimal(bound.lo, 9, -1)}, {format_decimal(bound.hi, 9, 1)}]")

    word = (0, 1, 0, 0, 1, 0)
    code = kappa_encode(golden, word)
    print(f"kappa({word}) = {code} -> {kappa_decode(golden, code)}")
    print(f"desplazamiento conjugado: {ShiftConjugate(golden)(code)}")
    print("-" * 60 + "\n")


def example_logistic():
    """Ejemplo 4: Centros y sandwich para la familia logistica"""
    print("\n" + "=" * 60)
    print("EJEMPLO 4: Familia logistica")
    print("=" * 60 + "\n")

    scan = enumerate_centers(3)
    for center in scan.centers:
        print(
            f"periodo {center.period}: r ~ {format_decimal(center.r_enc.midpoint, 6)}"
            f" h en [{format_decimal(center.entropy.lo, 6, -1)}, {format_decimal(center.entropy.hi, 6, 1)}]"
        )

    bound = entropy_at("3.5", Fraction(1, 20), SandwichBudget(max_period=4))
    print(f"h(3.5) en [{format_decimal(bound.lo, 6, -1)}, {format_decimal(bound.hi, 6, 1)}] {bound.provenance.value}")

    quad = QuadMap(Fraction(4))
    best = None
    for record in search_lower_bounds(quad, SearchBudget(max_n=3)):
        best = record
    if best is not None:
        print(f"f_4: cota inferior {format_decimal(best.bound.lo, 6, -1)} con n={best.cert.n}")
    print("-" * 60 + "\n")


if __name__ == "__main__":
    example_tent()
    example_realize()
    example_golden_mean()
    example_logistic()
