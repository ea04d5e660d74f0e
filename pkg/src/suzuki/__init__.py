"""Suzuki groups Sz(R, tau) over characteristic-2 rings with a Tits endomorphism.

Quick start::

    >>> from suzuki import make_ring, x_plus, is_member
    >>> F = make_ring("gf2m", 3)
    >>> bool(is_member(x_plus(F(2), F(3))))
    True
"""

from .bruhat import BruhatForm, canonical_key, decompose, recompose
from .enumeration import (
    GroupSet,
    bfs_closure,
    cell_count,
    count_elements,
    enumerate_all,
    enumerate_set,
    normal_closure,
    random_element,
    standard_generators,
)
from .group import (
    GroupElement,
    certify,
    commutator,
    conj,
    h,
    is_member,
    one,
    s_element,
    x_minus,
    x_plus,
)
from .linalg import (
    Matrix,
    Vector,
    idx,
    is_symplectic,
    rho,
    rho_hat,
    symplectic_inverse,
    tau_map,
    wedge_square,
)
from .ring import Element, Ring, add, all_elements, invert, make_ring, mul, tits
from .symbolic import IDENTITIES, check_identity
from .verify import SUITES, run_suite

__version__ = "0.1.0"
