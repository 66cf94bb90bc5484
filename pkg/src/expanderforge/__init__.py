"""Toolkit for building and certifying unique-neighbor expander graphs.

The package is organized around small, composable pieces:

- :mod:`expanderforge.graphs` -- graph containers and file I/O.
- :mod:`expanderforge.sampling` -- seeded random graph models and gadget search.
- :mod:`expanderforge.cayley` -- finite groups, Cayley graphs, group actions.
- :mod:`expanderforge.spectral` -- adjacency/non-backtracking spectra, Bethe
  Hessian scans and the subgraph spectral-radius bound.
- :mod:`expanderforge.expansion` -- unique-neighbor profiles and density checks.
- :mod:`expanderforge.cycles` -- girth, bicycles, walk counts, Moore bound.
- :mod:`expanderforge.products` -- line product and tripartite line product.
- :mod:`expanderforge.pipelines` -- end-to-end parameterized constructions.
- :mod:`expanderforge.cli` -- the ``forge`` command-line tool.
"""

from .graphs import (
    BipartiteGraph,
    Graph,
    GraphFormatError,
    GraphInputError,
    TripartiteBase,
    VertexSet,
    induced_subgraph,
    read_graph,
    validate_biregular,
    write_graph,
)
from .sampling import (
    RngStream,
    SamplingFailure,
    GadgetSearchFailure,
    gadget_search,
    sample_biregular,
    sample_er_m,
    sample_er_p,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "Graph",
    "GraphFormatError",
    "GraphInputError",
    "TripartiteBase",
    "VertexSet",
    "induced_subgraph",
    "read_graph",
    "validate_biregular",
    "write_graph",
    "RngStream",
    "SamplingFailure",
    "GadgetSearchFailure",
    "gadget_search",
    "sample_biregular",
    "sample_er_m",
    "sample_er_p",
    "__version__",
]
