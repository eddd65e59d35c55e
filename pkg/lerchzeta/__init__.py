"""lerchzeta - the Lerch zeta function on its maximal domains of holomorphy."""

__version__ = "0.1.0"
