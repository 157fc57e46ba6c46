"""Exact degrees of irreducible representations of simply-connected groups,
and pairs of inequivalent representations that share a degree."""
from .dimension import digit_count, pairing_plus_rho, scaled_pair_family, scaled_weight, weyl_dim
from .families import (
    FamilyWitness,
    degree_C,
    family_A,
    family_B,
    family_C,
    family_D,
    ratio_C,
)
from .pell import (
    brute_force_star,
    cf_sqrt,
    convergent,
    fundamental_pell,
    pell_power,
    star_solutions,
)
from .rootdata import (
    LieType,
    RootDatum,
    build_datum,
    cartan_matrix,
    classical_coroot_table,
    diagram_automorphisms,
    generate_positive_roots,
    positive_coroots,
)
from .search import (
    CoincidenceGroup,
    SearchConfig,
    canonical_form,
    enumerate_dominant,
    find_coincidences,
    verify_prop2,
)

__version__ = "0.1.0"
