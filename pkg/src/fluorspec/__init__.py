"""Resonance-fluorescence spectra of driven few-level emitters."""

__version__ = "0.1.0"
