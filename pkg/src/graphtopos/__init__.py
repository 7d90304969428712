"""Constructions in the topos of finite directed multigraphs."""

__version__ = "0.1.0"

from .errors import GraphError, MorphismError, SizeCapExceeded, ToposError
from .graph import (Graph, Morphism, Subobject, are_isomorphic, arc_graph, canonical_subobject, compose,
                    count_subobjects, empty_graph, enumerate_subobjects, find_isomorphism, graph_from_arcs,
                    identity, is_epi, is_mono, loop_graph, make_graph, node_graph, validate_morphism)
from .homs import count_homs, enumerate_homs, generators_check
from .limits import coequalizer, coproduct, equalizer, initial, product, pullback, pushout, terminal
from .exponentials import curry, evaluation, exponential, twisted_product_with_A, uncurry
from .classifier import (TruthValue, characteristic, conjunction, false_arrow, negation, omega,
                         subobject_from_characteristic, true_arrow)
from .topology import (Topology, closed_topology, closure, definitional_separation_oracle, double_negation,
                       enumerate_topologies, is_dense, is_separated, is_sheaf, is_topology, minimum_dense,
                       sheaf_category_equivalence_check, topology)
from .slice import (Alphabet, Automaton, LabelledGraph, automaton_to_lts, is_separated_ts, is_strong_mono,
                    is_transition_system, lts_to_automaton, slice_classifier, slice_product,
                    validate_slice_morphism)

__all__ = [
    "GraphError", "MorphismError", "SizeCapExceeded", "ToposError", "Graph", "Morphism", "Subobject",
    "are_isomorphic", "arc_graph", "canonical_subobject", "compose", "count_subobjects", "empty_graph",
    "enumerate_subobjects", "find_isomorphism", "graph_from_arcs", "identity", "is_epi", "is_mono",
    "loop_graph", "make_graph", "node_graph", "validate_morphism", "count_homs", "enumerate_homs",
    "generators_check", "coequalizer", "coproduct", "equalizer", "initial", "product", "pullback",
    "pushout", "terminal", "curry", "evaluation", "exponential", "twisted_product_with_A", "uncurry",
    "TruthValue", "characteristic", "conjunction", "false_arrow", "negation", "omega",
    "subobject_from_characteristic", "true_arrow", "Topology", "closed_topology", "closure",
    "definitional_separation_oracle", "double_negation", "enumerate_topologies", "is_dense",
    "is_separated", "is_sheaf", "is_topology", "minimum_dense", "sheaf_category_equivalence_check",
    "topology",
    "Alphabet", "Automaton", "LabelledGraph", "automaton_to_lts", "is_separated_ts", "is_strong_mono",
    "is_transition_system", "lts_to_automaton", "slice_classifier", "slice_product",
    "validate_slice_morphism",
]
