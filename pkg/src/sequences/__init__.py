"""
Constructions, correlation and verification of sequence sets.
"""
