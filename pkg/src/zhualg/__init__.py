"""Dimensions of Zhu's algebra A(V) and the C2-algebra A_[2](V) for lattice
VOAs, affine Lie algebra VOAs and Virasoro minimal models."""
from ._accel import BACKEND
from .affine_voa import affine_zhu_dim, slN_c2_grade, slN_c2_total, sl2_c2_closed_form, sl2_c2_from_character, sl2_refined_character
from .catalog import get_lattice
from .lattice_core import Lattice, direct_sum, discriminant_cosets, enumerate_vectors, make_lattice, summary
from .lattice_voa import ResourceCaps, anomaly_verdict, c2_dim_lattice, c2_lower_bound, graded_quotient_dims, small_vectors, zhu_dim_lattice
from .lie_core import level_weights, root_system, weyl_dim
from .minimal_models import minimal_dims

__version__ = "0.1.0"
