"""Exact friezes, Kauffman brackets and Jones polynomials of rational links."""
