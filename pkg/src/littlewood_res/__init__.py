"""Minimal free resolutions of Littlewood-type modules over classical coordinate rings."""

__version__ = "0.1.0"
