"""
symspec
=======

Exact Lie-theoretic computations for compact inner symmetric spaces.

Everything is rational: weights are tuples of :class:`fractions.Fraction`
in an orthogonal realization, and the inner product on weights is the one
induced by the sign-changed Killing form.

Submodules
----------
roots
    Root systems, Weyl group actions, Casimir eigenvalues.
weights
    Freudenthal multiplicities, Weyl dimensions, bounded weight scans.
branching
    Symmetric pairs from node removal; restriction to equal-rank ``K``.
catalog
    The sixteen families and their first eigenvalue on 1-forms.
spectrum
    First eigenvalue on functions through spherical representations.
cli
    Command line front end (``symspec`` or ``python -m symspec``).
"""

from .branching import (
    Decomposition,
    IsotropyCheck,
    KIrrepLabel,
    SymmetricPair,
    borel_de_siebenthal,
    contains_trivial,
    isotropy_highest_weights,
    matched_weyl_word,
    mult_in_restriction,
    node_marks,
    restrict_decompose,
    verify_isotropy_in_Vbeta,
)
from .catalog import (
    CATALOG,
    CatalogEntry,
    first_eigenvalue_one_forms,
    get_entry,
    instantiate,
    isotropy_length_class,
    list_spaces,
    matched_beta,
)
from .roots import (
    LONG,
    SHORT,
    RootSystem,
    apply_word,
    build_root_system,
    casimir,
    compute_killing_scale,
    dominant_representative,
    from_fundamental_weight_coords,
    fundamental_weight_coords,
    half_sum_positive,
    highest_root,
    inner,
    length_class,
    reflect,
    vec,
    weyl_orbit,
)
from .spectrum import (
    SearchExhausted,
    SpectrumReport,
    classify_lambda_mu,
    first_function_eigenvalue,
)
from .weights import (
    WeightSystem,
    dimension,
    dominant_weights_below,
    multiplicity,
    verify_gordon_brown,
    weight_system,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
