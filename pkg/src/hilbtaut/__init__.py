"""Exact intersection calculus for tautological classes on relative Hilbert
schemes of families of nodal curves.

The package computes, with exact rational arithmetic, products and degrees of
diagonal classes, node scrolls and node sections on the degree-m Hilbert
scheme of a family X/B, the Chern classes and Chern numbers of tautological
bundles, and the enumerative counts they govern (multisecants, contact loci,
double points), all expressed in the numerical characters of the family.
"""

__version__ = "0.1.0"
