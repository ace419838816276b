"""Crosstalk computing workbench."""
