"""Test fixtures package.

Transcribed dimension tables, decompositions and Massey witnesses of the
catalogue manifolds.
"""
