"""Finite workbench for sup-lattice algebra, lattice-valued relations,
localic groups, and their representation correspondences."""

__version__ = "0.1.0"
