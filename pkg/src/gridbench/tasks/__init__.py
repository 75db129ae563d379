"""Bundled task implementations.

Importing this package registers every bundled task with the framework
registry.
"""

from ..framework import register
from . import borders_and_holes, column_gravity, crossing_marker, diagonal_stripes

ALL_GENERATORS = (
    borders_and_holes.GENERATOR,
    column_gravity.GENERATOR,
    crossing_marker.GENERATOR,
    diagonal_stripes.GENERATOR,
)

for _gen in ALL_GENERATORS:
    register(_gen)
