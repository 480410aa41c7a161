"""Chromatic symmetric functions, their group-algebra operators and pointed refinements."""

from .graphs import Graph, Hypergraph, RootedGraph, csf, pointed_csf
from .symfun import PointedSymFun, SymFun, positivity

__all__ = ["Graph", "Hypergraph", "RootedGraph", "PointedSymFun", "SymFun", "csf", "pointed_csf", "positivity"]
__version__ = "0.1.0"
