"""ore-sra - exact computer algebra for Ore-extension deformations.

Arithmetic, central generators, simple modules and Ext computations for
H_lambda = (k<x,y> x E)/(xy - yx - lambda) with E = (Z/p)^r, presented as
the Ore extension R[y; delta] over R = kE[x].
"""

__version__ = "0.1.0"
__author__ = "Ore-SRA Team"
__email__ = "ore-sra@example.com"
