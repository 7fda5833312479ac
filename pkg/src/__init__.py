"""oriadim - orient bridgeless graphs with small directed diameter."""

__version__ = "0.1.0"
