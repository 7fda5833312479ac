"""End-to-end tests for the oriadim command line and generated-graph sweeps."""
