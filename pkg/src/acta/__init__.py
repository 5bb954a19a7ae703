"""Finite monoid acts: congruences, socles, cogeneration and classification."""

from acta._backend import BACKEND
from acta.act import (
    Act,
    Hom,
    Subact,
    act_isomorphic,
    act_isomorphism,
    all_subacts,
    canonical_act,
    coproduct,
    cyclic_subact,
    decompose_indecomposable,
    factor_act,
    one_element_act,
    product,
    regular_act,
    validate_act,
)
from acta.classify import classification_report, cofaithful_witness, is_cofaithful, is_faithful, is_subgenerator
from acta.cogen import cogenerates, cotrace, enumerate_homs, is_generator, subdirect_decomposition
from acta.congruence import Congruence, all_congruences, monolith, principal_congruence, rees_congruence
from acta.monoid import Monoid, build_chain_semilattice, build_named_semilattice_1oef, validate_monoid
from acta.structure import radical, s_socle, socle, structure_report
from acta.universe import build_universe, enumerate_acts, enumerate_monoids

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Act",
    "Congruence",
    "Hom",
    "Monoid",
    "Subact",
    "act_isomorphic",
    "act_isomorphism",
    "all_congruences",
    "all_subacts",
    "build_chain_semilattice",
    "build_named_semilattice_1oef",
    "build_universe",
    "canonical_act",
    "classification_report",
    "cofaithful_witness",
    "cogenerates",
    "coproduct",
    "cotrace",
    "cyclic_subact",
    "decompose_indecomposable",
    "enumerate_acts",
    "enumerate_homs",
    "enumerate_monoids",
    "factor_act",
    "is_cofaithful",
    "is_faithful",
    "is_generator",
    "is_subgenerator",
    "monolith",
    "one_element_act",
    "principal_congruence",
    "product",
    "radical",
    "rees_congruence",
    "regular_act",
    "s_socle",
    "socle",
    "structure_report",
    "subdirect_decomposition",
    "validate_act",
    "validate_monoid",
]
