"""Biclique- and star-colouring toolkit for powers of paths and cycles.

A colouring is a biclique colouring when no maximal complete bipartite
vertex set (with at least one edge) is monochromatic, and a star colouring
when no maximal induced star is.  This package computes both chromatic
numbers exactly for P_n^k and C_n^k via closed forms, emits optimal
colourings with certificates, verifies arbitrary colourings against a
brute-force oracle, and builds the 3SAT-to-biclique-containment gadget.
"""

from .colouring import (
    AbCertificate,
    ChromaticResult,
    Colouring,
    EvenDivision,
    ab_certificate,
    biclique_colour_cycle,
    biclique_colour_path,
    decide_two_vs_three,
    even_division,
    guaranteed_ab_certificate,
    read_colouring,
    star_colour_cycle,
    star_colour_path,
    three_colour_no_mono_p3,
    write_colouring,
)
from .graphs import (
    CapacityError,
    Graph,
    InputError,
    contains_induced_c4,
    contains_k4,
    induced_subgraph,
    is_complete_bipartite,
    read_graph,
    write_dot,
    write_graph,
)
from .oracle import (
    block_profile,
    exact_chromatic,
    find_mono_p3,
    maximal_bicliques,
    maximal_stars,
    verify_colouring,
)
from .powers import (
    Biclique,
    circulant,
    cycle_bicliques,
    cycle_induced_p3s,
    cycle_stars,
    path_bicliques,
    path_stars,
    power_cycle,
    power_path,
)
from .reduction import (
    CnfFormula,
    ReductionInstance,
    ReductionReport,
    biclique_containment,
    build_instance,
    certify_reduction,
    evaluate,
    find_satisfying_assignment,
    normalize,
    read_dimacs,
    write_dimacs,
)

__version__ = "0.1.0"
