# thompsonf/models/__init__.py
from .dyadic import Dyadic
from .lattice import LatticeSubgroup, RectPair
from .phi import PhiImage
from .plmap import Orbital, PLMap
from .words import Commutator, Conjugate, GeneratorRef, Power, Product, WordExpr

__all__ = [
	"Dyadic",
	"LatticeSubgroup",
	"RectPair",
	"PhiImage",
	"Orbital",
	"PLMap",
	"Commutator",
	"Conjugate",
	"GeneratorRef",
	"Power",
	"Product",
	"WordExpr",
]
