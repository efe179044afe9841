"""Hilbert series, Poincare series and graded Betti numbers of hypergraph algebras."""
