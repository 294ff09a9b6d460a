"""
Reading and writing category files.
"""

from .parser import CategoryFile, parse_category_file, read_category_file
from .serializer import format_sequence, serialize, serialize_structure, write_category_file

__all__ = [
    'CategoryFile',
    'format_sequence',
    'parse_category_file',
    'read_category_file',
    'serialize',
    'serialize_structure',
    'write_category_file',
]
