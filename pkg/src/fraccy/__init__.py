"""Homological toolkit for deciding twisted fractional Calabi-Yau properties
of bound quiver algebras over prime fields."""

__version__ = "0.1.0"
