"""Test package for ore-sra."""
