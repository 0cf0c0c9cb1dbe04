"""Exact computations in the rational bordism ring of pairs (M, xi)."""

from .partitions import Partition, concat, enumerate_partitions, p_prime, refines
from .cohomology import CohClass, SphereProduct
from .kclass import VirtualClass, generator_bundle, inverse, power, tensor, exterior, reconstruct_unit
from .charnum import CharMatrix, char_matrix, characteristic_number, determinant
from .bordism_ring import BordismElement, CharVector, bordism_class_of, char_vector, from_char_vector, rank, t
from .grassmann import GrassmannPair, thom_facts

__version__ = "0.1.0"

__all__ = [
    "Partition", "concat", "enumerate_partitions", "p_prime", "refines",
    "CohClass", "SphereProduct",
    "VirtualClass", "generator_bundle", "inverse", "power", "tensor", "exterior", "reconstruct_unit",
    "CharMatrix", "char_matrix", "characteristic_number", "determinant",
    "BordismElement", "CharVector", "bordism_class_of", "char_vector", "from_char_vector", "rank", "t",
    "GrassmannPair", "thom_facts",
]
