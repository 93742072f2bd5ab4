"""Tests package for solvcohom.

Unit, integration and property tests for the complex builders, cohomology,
decompositions, formality verdicts and the command line.
"""
