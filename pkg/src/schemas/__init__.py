"""Pandera schemas for edge-list file validation."""

from src.schemas.graph_file_schema import EDGE_COLUMNS, EdgeListSchema

__all__ = ["EdgeListSchema", "EDGE_COLUMNS"]
