"""Exact Kazhdan-Lusztig polynomials of uniform and q-niform matroids."""
from ._backend import BACKEND
from .ekl_engine import (
    EKLTable,
    ekl_closed_form,
    ekl_q_closed_form,
    ekl_recursive,
    ekl_scalar_closed_form,
    ekl_unipotent,
)
from .exact_poly import (
    QPoly,
    RingPoly,
    evaluate,
    gaussian_binomial,
    q_factorial,
    q_int,
    substitute_q,
    substitute_q_one,
)
from .kl_engine import KLResult, kl_explicit_lattice, kl_polynomial, palindromic_defect
from .os_matroid import (
    Explicit,
    ExplicitLattice,
    QNiform,
    Uniform,
    char_poly,
    flat_orbit_profile,
    full_os_rep,
    reduced_os_rep,
    uniform_lattice,
)
from .partitions import Partition, dim_symmetric, dim_unipotent, hook_lengths, partitions_of
from .rep_ring import V, VirtualRep, induce_product, lr_coefficient, rep_dim, rep_qdim

__version__ = "0.1.0"
