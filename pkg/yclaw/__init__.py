"""Recognition, certificates and counting for graphs without the subdivided claw Y."""

__version__ = "0.1.0"
