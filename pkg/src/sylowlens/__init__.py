"""sylowlens: finite permutation-group engine and verification harness.

Computes Sylow numbers and the tau invariants, p-length, Fitting length,
derived length and Frattini quotients on concrete permutation groups;
verifies mutually permutable factorizations; and checks the associated
bound and criterion claims exactly, individually or across a generated
corpus of small groups.
"""

from .config import CapExceeded
from .perm import (DegreeMismatch, MalformedPermutation, Perm,
                   parse_cycle_string, perm_compose)
from .group import (Group, NotASubgroupError, NotNormalError, QuotientImage,
                    StabilizerChain, SubgroupHandle, contains, elements,
                    group_from_generators, group_order, quotient,
                    subgroup_from_elements)
from .lattice import (SubgroupLattice, all_subgroups, centralizer, core,
                      frattini, intersection, join, maximal_subgroups,
                      minimal_normal_subgroups, normal_closure, normalizer,
                      permutes)
from .series import (SeriesRecord, SeriesStep, commutator_subgroup,
                     derived_length, derived_series, derived_subgroup,
                     fitting_length, fitting_series, fitting_subgroup,
                     is_nilpotent, is_p_nilpotent, is_p_solvable, is_solvable,
                     lower_p_series, o_p, o_pi, o_upper_pi, p_length)
from .sylow import (FactorDecomposition, TauProfile, factorize,
                    hall_admissible, is_prime, sylow_conjugate_count,
                    sylow_number, sylow_subgroup, tau_group, tau_int,
                    tau_p_group, tau_p_int, tau_profile)
from .products import (MutPermWitness, bea_lemma_suite, find_factorizations,
                       is_mutually_permutable, lemma_2_6_check)
from .theorems import (ScanResult, conjecture_1_4_check, conjecture_1_4_scan,
                       hall_check, lemma_2_7_check, scan_corpus, thm_1_1_check,
                       thm_1_2a_check, thm_1_2b_check,
                       zhang_p_nilpotency_check)
from .verdicts import BoundVerdict
from .corpus import (FAMILIES, alternating_group, build_corpus, construct_named,
                     cyclic_group, dihedral_group, direct_product,
                     elementary_abelian_group, semidirect_from_generators,
                     regular_from_multiplication_table, symmetric_group)
from .groupfile import (GroupFileError, GroupSpec, Report, emit_group_file,
                        group_to_spec, load_group, parse_group_file)
from .cli import run_cli

__version__ = "0.1.0"
