"""Symmetric h⁰ engine - exact γ_n = h⁰(M̄_{0,n}, ⊗ L_i^{x_i}) in the σ basis."""
