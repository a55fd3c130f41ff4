"""Exact computations for paramodular groups of polarization type (1, t):
symplectic and orthogonal models, Jacobi form eigenspaces, Humbert surfaces
and Hilbert modular embeddings."""

__version__ = "0.1.0"
