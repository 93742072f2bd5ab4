"""Integration tests package.

End-to-end checks of the builders, cohomology, decompositions and formality
verdicts against the transcribed tables of the catalogue manifolds.
"""
