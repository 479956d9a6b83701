"""
Citation index
==============
Every case a suite reports certifies one stated identity.  ``INDEX`` maps the
citation key of each identity to a one-line statement of it; ``CASE_REFS``
keys the record ids the non-catalog suites emit.  Relations in the diagram
catalog carry their key on the ``Relation`` itself.

Usage
-----
    from heiscat.references import INDEX, ref_for

    key = ref_for("zigzag-left")          # "eq:left-unit-counit"
    print(key, "-", INDEX[key])
"""

from __future__ import annotations

from typing import Dict

INDEX: Dict[str, str] = {
    # Frobenius superalgebras
    "eq:dual-bases-decomp": "b = sum_c tr(b c^v) c = sum_c tr(c b) c^v for the right dual basis",
    "eq:double-dual-basis": "(f^v)^v = (-1)^{sigma|f| + |f|} psi(f)",
    "def:nakayama": "tr(ab) = (-1)^{|a||b|} tr(b psi(a)); psi = id iff the trace is supersymmetric",
    "lem:casimir-properties": "sum_b b (x) b^v is independent of the basis",
    "prop:Frob-ext": "A_n is free over B^{(x)n} and a Frobenius extension with dual sets of generators",
    # Adjunctions
    "eq:right-unit-counit": "(id (x) eps_R)(eta_R (x) id) = id",
    "eq:left-unit-counit": "(id (x) eps_L)(eta_L (x) id) = id, up to (-1)^sigma on Q",
    # Defining relations of the category
    "eq:collision-up": "dots on an upward strand compose in B^op with a Koszul sign",
    "eq:collision-down": "dots on a downward strand compose in B",
    "eq:dotsup-a": "a dot psi(b) on the left leg of a left cup equals b on the right leg",
    "eq:dotsup-b": "a dot moves freely across a right cap",
    "eq:dotsdown-a": "a dot moves freely across a right cup",
    "eq:dotsdown-b": "a dot b on the left leg of a left cap equals psi(b) on the right leg",
    "eq:supercomm": "dots on distinct strands supercommute",
    "eq:rel0a": "a dot slides through an upward crossing",
    "eq:rel1a": "upward crossings satisfy the braid relation",
    "eq:rel1b": "an upward double crossing is the identity",
    "eq:rel2a": "the QP double crossing is the identity minus sum_b cap-cup with b and b^v",
    "eq:rel2b": "the PQ double crossing is the identity",
    "eq:rel3a": "a counterclockwise circle with a dot b is tr(b)",
    "eq:rel3b": "a left curl is zero",
    "eq:relsnake": "right cups and caps satisfy the zigzag identities",
    "rel:left-down-zigzag": "left cups and caps satisfy the zigzag identities, (-1)^sigma on Q",
    # Consequences
    "eq:triple-point": "a strand of either orientation slides past a crossing",
    "eq:curl-Nakayama": "a dot passes through a curl picking up psi and (-1)^{sigma|b|}",
    "eq:circle-mult-leftup-slide": "d curls slide up through a crossing, leaving dotted correction terms",
    "eq:circle-mult-rightup-slide": "d curls slide down through a crossing, leaving dotted correction terms",
    "eq:circle-Nakayama": "c_{b,d} = c_{psi(b),d} and likewise for counterclockwise bubbles",
    "lem:circle-index-relations": "c_{b,d} = (-1)^{d sigma} c_{psi(b),d}; odd d vanish when psi = id and sigma = 1",
    "prop:circle-conversion": "counterclockwise bubbles are polynomials in clockwise ones",
    "prop:bubble-slide": "moving an upward strand across c_{b,d} leaves dotted-curl correction terms",
    # Isomorphisms and end spaces
    "eq:multi-strand-up-down-rel": "the boxed double crossing of Q^n and P^m expands into cap-cup terms",
    "theo:functor-isos": "alpha and beta are mutually inverse on Q_f^n P_g^m",
    "lem:end-spaces": "endomorphisms of P^n Q^m of negative degree vanish",
    # Heisenberg algebra
    "eq:bilinear-form": "<P_a^(n), Q_b^(m)> pairing computed from graded dimensions",
    "def:hB": "over B = F, Q^(n) P^(m) = sum_k P^(m-k) Q^(n-k)",
    "eq:Q-even-reduction": "Q^(2) is expressed through Q^(1) for type-Q indices",
    "prop:hB-presentation": "the normal-ordering rewrite system is confluent and associative",
    "cor:heis-alg-involution": "omega is an involutive algebra automorphism",
    # Degenerate affine algebras
    "def:Dm": "the defining relations of D_m between x_i, s_i and B^{(x)m}",
    "eq:chi-m": "F_n(chi_m(x)) agrees with chi'(x) on P^m",
    "prop:chim-properties": "chi' is an algebra homomorphism, injective on D_m for n large",
    "lem:tij-products": "leading terms of products of t_{i,j}",
}

CASE_REFS: Dict[str, str] = {
    "frobenius-dual-basis": "eq:dual-bases-decomp",
    "frobenius-double-dual": "eq:double-dual-basis",
    "frobenius-nakayama": "def:nakayama",
    "frobenius-symmetric-iff-psi-identity": "def:nakayama",
    "frobenius-casimir": "lem:casimir-properties",
    "wreath-free-basis": "prop:Frob-ext",
    "wreath-dual-sets": "prop:Frob-ext",
    "wreath-nakayama": "prop:Frob-ext",
    "zigzag-right": "eq:right-unit-counit",
    "zigzag-left": "eq:left-unit-counit",
    "heis-pairing-oracle": "eq:bilinear-form",
    "heis-ground-field-relation": "def:hB",
    "heis-even-reduction": "eq:Q-even-reduction",
    "heis-confluence": "prop:hB-presentation",
    "heis-associativity": "prop:hB-presentation",
    "heis-omega-involution": "cor:heis-alg-involution",
    "heis-omega-natural": "cor:heis-alg-involution",
    "dm-relations": "def:Dm",
    "dm-x-dot": "def:Dm",
    "dm-x-commute": "def:Dm",
    "dm-x-cross": "def:Dm",
    "dm-cross-x": "def:Dm",
    "dm-cross-far-x": "def:Dm",
    "dm-degenerate-affine": "def:Dm",
    "dm-homomorphism": "prop:chim-properties",
    "dm-injectivity": "prop:chim-properties",
    "dm-tij-leading": "lem:tij-products",
    "dm-diagram-triangle": "eq:chi-m",
}


def ref_for(rid: str) -> str:
    """The citation key of a suite record id; empty when none is registered."""
    return CASE_REFS.get(rid, "")
