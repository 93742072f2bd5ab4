"""Randomised property suites (hypothesis)."""
