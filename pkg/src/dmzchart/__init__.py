"""dmzchart: conjugate charts, Sbrana-bundle holonomy and deformation moduli.

Library layout:

- ``exprlang``: expression parser and truncated-Taylor (jet) evaluation
- ``chart``: conjugate-chart data, DMZ residuals, Laplace invariants
- ``sbrana``: bundle connection, curvature stack, trivial holonomy, transport
- ``moduli``: admissible tuples, the d-matrix algebra, moduli sampling
- ``gauss``: Gauss parametrization, shape/splitting operators
- ``deform``: deformation packages, structural-equation checks, immersion
  integration
- ``curves``: shared dimension, orthogonal splitting, honest-deformation
  interval
- ``cli``: the ``dmzchart`` command-line front end
"""

__version__ = "0.1.0"
