"""Fock-state statistics at a single 50/50 beam splitter."""
