"""relsig: exact conversions between system signatures and reliability polynomials."""
