"""Test suite for oriadim."""
