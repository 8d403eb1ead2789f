"""Interpolation workbench package."""
