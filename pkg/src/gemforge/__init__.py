"""Lins-Mandel 4-coloured graphs G(n,p,q,m): construction, gem checks, isomorphism,
first homology and branched-covering classification."""
from gemforge.arithmetic_classifier import IsoVerdict, corollary_m_classes, rigidity, theorem1
from gemforge.colored_graph import ColouredGraph, GraphError, census, is_bipartite, is_gem, residues
from gemforge.coverings import (
    CoveringDesc,
    TwoBridge,
    covering_type,
    geometry,
    lm_to_covering,
    theorem2_equivalent,
    theorem3_equivalent,
)
from gemforge.homology import AbelianGroup, face_poset, h1, pi1_presentation, smith_normal_form
from gemforge.isomorphism import IsoWitness, are_isomorphic, named_map, propagate, verify
from gemforge.lins_mandel import LMParams, build, epsilon, graphs_equal, is_gem_parametric, mu, predicted_census

__version__ = "0.1.0"
