"""Exact enumeration of set partitions avoiding m-nestings."""

__version__ = "0.1.0"
