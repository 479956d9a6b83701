"""Bimodules over wreath product algebras and the maps between them."""
