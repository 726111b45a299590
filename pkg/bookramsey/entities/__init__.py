from .graph import (
    CAPACITY,
    Graph,
    GraphBuilder,
    VertexSet,
    build_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
)
from .patterns import BookPattern, ChromaticInfo, Embedding, MultipartitePattern
from .records import (
    BlowupResult,
    BoundMethod,
    DkQuery,
    DkResult,
    GoodnessReport,
    Outcome,
    PartitionDiagnostics,
    PartitionState,
    PeelReport,
    RamseyBound,
    RamseyQuery,
    WitnessCertificate,
)
