"""The Heisenberg algebra h_B: presentations, normal ordering and the Fock space."""
