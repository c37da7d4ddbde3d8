"""Reduced words of finite Coxeter groups and everything they carry:
crystals on decreasing factorizations, Stanley symmetric functions,
Edelman-Greene insertion, and the exchange Markov chain."""

from .coxeter import CoxeterSystem, Dihedral, Hypercube, SymmetricGroup, Word
from .crystal import (
    CrystalGraph,
    DecreasingFactorization,
    decreasing_factorizations,
    factorization_crystal,
    highest_weight_factorizations,
    parse_factorization,
)
from .edelman_greene import (
    CKGraph,
    EGPair,
    ck_components,
    ck_graph,
    ck_neighbors,
    eg_insert,
    eg_insert_letter,
    eg_insert_word,
    p_transpose_reading_word,
)
from .markov import (
    NaturalPoset,
    ProbabilityMeasure,
    TransitionMatrix,
    build_chain,
    charpoly,
    promotion_chain,
    simulate,
    spectrum,
    stationary_distribution,
    tsetlin_chain,
)
from .partitions import Partition, conjugate, dominates, hook_length_count, staircase
from .stanley import (
    schur_expansion,
    schur_expansion_via_eg,
    schur_expansion_via_linear_algebra,
    stanley_monomial,
    support_interval,
)
from .symfunc import SymFuncExpansion, omega, s1_perp
from .tableaux import (
    Tableau,
    crystal_e,
    crystal_f,
    generate_ssyt,
    schur_polynomial,
    tableau_crystal,
    yamanouchi_tableau,
)

__all__ = [
    "CKGraph",
    "CoxeterSystem",
    "CrystalGraph",
    "DecreasingFactorization",
    "Dihedral",
    "EGPair",
    "Hypercube",
    "NaturalPoset",
    "Partition",
    "ProbabilityMeasure",
    "SymFuncExpansion",
    "SymmetricGroup",
    "Tableau",
    "TransitionMatrix",
    "Word",
    "build_chain",
    "charpoly",
    "ck_components",
    "ck_graph",
    "ck_neighbors",
    "conjugate",
    "crystal_e",
    "crystal_f",
    "decreasing_factorizations",
    "dominates",
    "eg_insert",
    "eg_insert_letter",
    "eg_insert_word",
    "factorization_crystal",
    "generate_ssyt",
    "highest_weight_factorizations",
    "hook_length_count",
    "omega",
    "p_transpose_reading_word",
    "parse_factorization",
    "promotion_chain",
    "s1_perp",
    "schur_expansion",
    "schur_expansion_via_eg",
    "schur_expansion_via_linear_algebra",
    "schur_polynomial",
    "simulate",
    "spectrum",
    "staircase",
    "stanley_monomial",
    "stationary_distribution",
    "support_interval",
    "tableau_crystal",
    "tsetlin_chain",
    "yamanouchi_tableau",
]
