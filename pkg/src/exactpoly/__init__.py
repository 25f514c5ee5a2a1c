"""Exact polyhedral computation: elimination, Farkas certificates and
conversions between constraint and generator descriptions."""
