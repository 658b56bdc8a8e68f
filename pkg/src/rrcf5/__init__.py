"""Exact and high-precision tools for singular values of the
Rogers-Ramanujan continued fraction: class polynomials, eta-quotient class
invariants, the minimal-polynomial tower, the icosahedral symmetry group,
5-torsion on the Tate normal form, and quintic diophantine verification."""

__version__ = "1.0.0"
