"""knotpair: exact invariants for knots given by labeled plane-tree pairs."""

__version__ = "0.1.0"
