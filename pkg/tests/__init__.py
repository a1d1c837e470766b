"""
Unit and acceptance tests for the symmetric h⁰ engine.
"""
