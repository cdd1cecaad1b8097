"""Linear quotient orderings of monomial ideals, with a focus on edge ideals
of modified anticycle graphs."""

from ._accel import BACKEND
from .compose import CompositePlan, HypothesisViolation, binomial_decomposition, compose, paper_orderings
from .graphs import Graph, anticycle, complement, cycle, edge_ideal, find_gap, g_n, h_family, h_n, star_f
from .ideal import MonomialIdeal, colon_generators, minimalize, power, product
from .monomial import Monomial
from .quotients import OrderedGenerators, QuotientCertificate, lex_order, verify_colon, verify_works, works
from .search import SearchConfig, SearchResult, find_ordering

__version__ = "0.1.0"
