"""Exact rational toolkit for affine holonomy groups of indefinite
scalar products: structural element checks, holonomy subspaces and
abelianness reports, Witt-adapted block forms, centralizer orbits,
translational-isotropy certificates, and randomized signature scans.
"""

from .affine import (
    AffineIso,
    GroupSpec,
    WolfReport,
    act,
    compose,
    fixed_point_check,
    inverse,
    power,
    wolf_check,
    words_up_to,
)
from .centralizer import (
    CentralizerAlgebra,
    centralizer_algebra,
    centralizer_translations,
    orbit_dimension,
    u0perp_centralizes,
)
from .certify import (
    IsotropyCertificate,
    translational_isotropy_certificate,
    verify_certificate,
)
from .forms import (
    BilinearForm,
    WittBasis,
    evaluate,
    is_totally_isotropic,
    max_isotropic_bound,
    orth_complement,
    standard_form,
    witt_extend,
)
from .holonomy import (
    BlockForm,
    HolonomyReport,
    IsotropicWitness,
    abelian_report,
    block_form,
    image_sum,
    index_witness,
    isotropic_radical,
)
from .linalg import (
    Matrix,
    Subspace,
    image,
    intersect_spaces,
    kernel,
    rref_basis,
    solve_linear,
    sum_spaces,
)
from .search import (
    SearchReport,
    sample_generators,
    sample_valid_specs,
    search_nonabelian,
    theorem_scan,
)

__version__ = "0.1.0"
