"""densecolor: chromatic-index engine for dense even-order simple graphs."""

__version__ = "0.1.0"
