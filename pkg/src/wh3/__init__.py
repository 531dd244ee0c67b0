"""wh3: exact verifier for a three-parameter deformed Weyl-Heisenberg algebra.

Subpackages:
  scalars  - exact arithmetic in Q(q, u, s)
  ncalg    - free graded noncommutative algebra with quadratic rewriting
  catalog  - transcription of every matrix and relation family, with errata
  verify   - the verification suite (one check per claim)
  cli      - the wh3 command-line front end
"""

__version__ = "0.1.0"
