"""Constantes compartidas del nucleo numerico."""

from fractions import Fraction

# Precision por defecto (bits) para redondeo diadico hacia afuera
DEFAULT_BITS = 64
DEFAULT_MAX_BITS = 1024

# Tope de nodos para composiciones de mapas lineales a trozos
DEFAULT_NODE_CAP = 10**6

# Periodos de centros superatractores
DEFAULT_MAX_PERIOD = 10
MAX_PERIOD_CAP = 10
DEFAULT_CENTER_WIDTH = Fraction(1, 2**26)

# Presupuesto de la busqueda de herraduras
DEFAULT_SEARCH_MAX_N = 8
DEFAULT_SEARCH_MAX_P = 1 << 16
DEFAULT_GRID_DEPTH = 2

# Pasos de crecimiento de componentes hiperbolicas
DEFAULT_GROWTH_STEPS = 128
MIN_GROWTH_STEP = Fraction(1, 2**40)
INITIAL_GROWTH_STEP = Fraction(1, 2**12)

CRITICAL_POINT = Fraction(1, 2)

# Solo documental: nunca se calcula, sirve para elegir puntos de prueba
R_INFINITY = Fraction("3.5699456")

# ln 2 encerrado entre dos racionales (conversion de unidades al mostrar)
LN2_LO = Fraction("0.6931471805599453094")
LN2_HI = Fraction("0.6931471805599453095")

DEFAULT_CACHE_PATH = "./.entrolab/centers.jsonl"
