"""Computing with finite MTL-chains."""
from .core import (TWO, ZERO, AxiomReport, Chain, are_isomorphic, check_axioms, isomorphism,
                   lukasiewicz_chain, make_chain, min_chain, residuum)
from .enumeration import classify, enumerate_chains
from .gcp import (Assembly, ConditionReport, GcpSpec, assemble, gcp_from_extension,
                  gcp_from_ordinal_sum, validate_gcp)
from .homs import (Hom, SplitSequence, canonical_sequence, check_hom, check_split_exact,
                   ordinal_extension_test)
from .structure import (ArchStatus, Filter, Quotient, all_filters, archimedean_status,
                        generated_filter, idempotents, is_locally_unital, is_prime,
                        local_units, make_filter, quotient, scale, up_set_chain)
from .sums import Decomposition, decompose, ordinal_sum

__version__ = "0.1.0"
