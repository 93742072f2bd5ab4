"""Unit tests package.

One module per source module of solvcohom.
"""
