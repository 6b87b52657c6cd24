"""
Application constants.
"""

# Códigos de salida del CLI
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_PARAMS = 2
EXIT_IO_ERROR = 3

# Tipos de documento de conjunto de códigos
KIND_GCP = "gcp"
KIND_IGC = "igc"
KIND_ZCAC = "zcac"
KIND_ZCACS = "zcacs"

# Formatos de salida
FORMAT_JSON = "json"
FORMAT_CSV = "csv"

# Columnas del CSV de la rejilla de correlación
GRID_COLUMNS = ["tau1", "tau2", "re", "im", "abs"]

# Estrategias para elegir Λ
LAMBDA_STRATEGIES = ("consecutive", "random")

# Nombres de archivo por defecto (relativos a settings.output_dir)
DEFAULT_CODESET_FILE = "{kind}.json"
DEFAULT_GRID_FILE = "grid.csv"
