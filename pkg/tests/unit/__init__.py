"""Unit tests for oriadim models and services."""
