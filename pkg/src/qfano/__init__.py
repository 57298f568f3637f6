"""Exact numerics for Q-Fano threefold hypersurface classification.

Submodules:

* ``series``       exact rationals, truncated power series, product expansion
* ``wps``          weighted projective spaces and quasi-smooth hypersurfaces
* ``riemann_roch`` orbifold Riemann-Roch with oracle-calibrated conventions
* ``sarkisov``     Sarkisov-link Diophantine case analysis and transcripts
* ``normal_form``  weighted polynomial algebra and the degree-12 normal form
* ``fixtures``     the embedded shape corpus with expected invariants
* ``cli``          the ``qfano`` command-line front end
"""

__version__ = "0.1.0"
