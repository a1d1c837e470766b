"""
Closed-form discrete summation and the operator T on R.
"""
