from .bookramsey import BookRamsey
from .entities import (
    BookPattern,
    DkQuery,
    Graph,
    MultipartitePattern,
    RamseyQuery,
    VertexSet,
    build_graph
)

__all__ = [
    'BookRamsey',
    'BookPattern',
    'DkQuery',
    'Graph',
    'MultipartitePattern',
    'RamseyQuery',
    'VertexSet',
    'build_graph'
]
