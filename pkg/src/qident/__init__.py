"""Exact verification of q-analogue generating-function identities."""
