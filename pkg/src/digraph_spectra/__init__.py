"""Spectra of digraph products, Kronecker constructions and DSRGs, with a
self-contained eigensolver used as the oracle for every closed form."""
from .digraph import INF, Digraph, complement, distance_data, from_arc_list, is_strongly_connected, metrics, reverse
from .eigen import JordanStructure, Spectrum, eigenvalues, geometric_multiplicity, spectrum_match
from .linalg import Construction, MatrixKind, construction, digraph_matrix, exact_rank, kronecker
from .products import ProductKind, product

__all__ = [
    "INF", "Digraph", "complement", "distance_data", "from_arc_list", "is_strongly_connected",
    "metrics", "reverse", "JordanStructure", "Spectrum", "eigenvalues", "geometric_multiplicity",
    "spectrum_match", "Construction", "MatrixKind", "construction", "digraph_matrix",
    "exact_rank", "kronecker", "ProductKind", "product",
]
