"""Residuated extended-real arithmetic, piecewise-linear convex calculus,
and set-valued duality over polyhedral lattices.

The package is organized bottom-up: ``extreal`` carries the two scalar
image spaces, ``groupoid`` checks the residuation existence theorems on
finite ordered structures, ``functions``/``calculus`` do one-variable
piecewise-linear convex analysis with extended-real values, and
``poly2``/``setvalued`` lift the same calculus to lattices of polyhedral
sets in the plane.
"""

__version__ = "0.1.0"
