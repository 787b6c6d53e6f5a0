"""Discrete multiple orthogonal polynomials with an exact-rational oracle.

The package has four layers:

* ``mopoly.exact``     rational arithmetic, Pochhammer kernels, dense
                       polynomials, terminating hypergeometric sums, and the
                       classical summation identities;
* ``mopoly.families``  the five discrete weight systems (Hahn, Meixner first
                       and second kind, Kravchuk, Charlier) with closed-form
                       type I / type II polynomials and nearest-neighbor
                       recurrence coefficients;
* ``mopoly.oracle``    independent reconstruction of the same objects from
                       the orthogonality conditions via exact moments and
                       exact linear algebra;
* ``mopoly.analytic``  float-layer contour-integral representations,
                       Rodrigues-type parameter derivatives, and the limit
                       relations down the discrete scheme and onto the
                       continuous endpoint weights.
"""

from .exact import MultiIndex, Permutation, Poly
from .families import Charlier, Hahn, Kravchuk, MeixnerI, MeixnerII, nnrc, type1, type2

__all__ = [
    "MultiIndex", "Permutation", "Poly",
    "Charlier", "Hahn", "Kravchuk", "MeixnerI", "MeixnerII",
    "nnrc", "type1", "type2",
]

__version__ = "0.1.0"
