"""Boolean Ramsey and rainbow Ramsey numbers of V-shaped posets, at desk scale."""
from .errors import (InvalidArguments, MalformedInput, NotFoundWithinBound, SearchInconclusive,
                     UnknownPattern, VRamseyError)
from .lattice import (Domain, ElementSet, GroundPermutation, complement, format_set, from_members,
                      interval_family, lattice_tables, level_order, members, parse_set)
from .poset import (STRONG, WEAK, EmbeddingMap, Poset, antichain, antichain_dim2, canonical_form,
                    chain, cube, dim2, dual, embed, extremal_count, find_isomorphism, induced,
                    is_embedding, is_isomorphic, make_v, parse_pattern, parse_pattern_list)
from .constructions import (Coloring, antichain_removal_embedding, chain_removal_embedding,
                            coloring_layered_identical, coloring_minimal_theorem3, coloring_mixed,
                            coloring_prop8_lower, coloring_rainbow_lower, constant_coloring,
                            iterated_removal_embedding, longest_chain_length,
                            mirsky_antichain_partition)
from .checker import (Target, Witness, as_targets, find_monochromatic, find_monochromatic_any,
                      find_monochromatic_v_fast, find_rainbow, is_good, is_good_rainbow,
                      verify_witness)
from .search import (EXHAUSTED, INCONCLUSIVE, WITNESS, SearchCertificate, SearchConfig,
                     UndecidedWithinBound, classify_pair_removals, compute_rainbow_ramsey,
                     compute_ramsey, enumerate_minimal_ramsey, explore_conjecture,
                     find_good_coloring, find_good_partition_coloring, is_minimal_ramsey,
                     is_ramsey_domain, rainbow_certificates, ramsey_certificates,
                     verify_certificate, verify_vmn_lemma, vmn_lemma_report)

__version__ = "0.1.0"
