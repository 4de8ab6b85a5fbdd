"""Bounds workbench for list-decodable codes in finite metric spaces."""

__version__ = "0.1.0"
