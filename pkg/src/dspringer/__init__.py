"""Exact combinatorics of the components of the Delta-Springer fibers
Y_{n,(1^{n-1}),s}: tableaux, permutation flags, Poincare polynomials,
finite-field point counts and cohomology presentations."""

__version__ = "0.1.0"
