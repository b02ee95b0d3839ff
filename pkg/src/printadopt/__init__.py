"""printadopt — 3D-printing adoption equilibria for a manufacturer selling to a newsvendor retailer."""

__version__ = "0.1.0"
