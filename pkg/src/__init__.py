"""
ccseq - Códigos IGC y conjuntos ZCACS 2-D a partir de funciones multivariables
"""

__version__ = "1.0.0"
__author__ = "ccseq Team"
