"""
Core plumbing for solvcohom: error registry, exceptions and configuration.
"""
