"""
γ_n = T^{n-3}(1), h⁰ evaluation, the value oracle and the verification harness.
"""
