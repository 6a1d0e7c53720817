"""Computational services: graphs, orders, colourings, oracles and verification."""
