"""Exact classification of surfaces in the Moebius quadric that carry at
least two circles through a general point and a symmetry group of dimension
two or more.

The subpackages split along the objects involved:

    exact     rational and Gaussian-rational arithmetic, exact linear algebra
    lattice   lattice polygons, involutions, and the grid classification
    segre     the double Segre surface, its quadrics and real structures
    liealg    sl2+sl2, its real structures, and the invariant-form solver
    forms     the hyperquadric family and the classification records
    geometry  blowup combinatorics, cyclide models, the Veronese track
    sampling  floating-point point-cloud export
    verify    the end-to-end verification suite
"""

__version__ = "0.1.0"
