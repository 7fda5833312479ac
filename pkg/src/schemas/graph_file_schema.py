"""Pandera schemas for edge-list file validation."""

import pandera.pandas as pa
from pandera.typing.pandas import Series


class EdgeListSchema(pa.DataFrameModel):
    """Schema for the body rows of a graph or orientation file.

    Each row is one "a b" line; ``line`` keeps the physical line number so
    failures can be reported against the file.
    """

    a: Series[int] = pa.Field(ge=0, coerce=True, description="First endpoint (arc tail)")
    b: Series[int] = pa.Field(ge=0, coerce=True, description="Second endpoint (arc head)")
    line: Series[int] = pa.Field(ge=1, description="1-based physical line number")

    class Config:
        """Pandera schema configuration."""

        strict = True
        coerce = True


EDGE_COLUMNS = ["a", "b", "line"]
