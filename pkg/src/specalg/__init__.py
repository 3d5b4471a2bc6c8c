"""Executable algebra of specification theories: finite automata, modal
transition systems and interface automata, with a law-auditing harness."""

from .algebra import LawId, Status, TheoryHandle, equiv, law_predicate
from .audit import AuditReport, audit, check_law
from .generate import GenConfig, enumerate_all, gen_random
from .kernels import BACKEND
from .specfile import parse_spec, render_spec
from .theories import get_theory

__version__ = "0.1.0"

__all__ = [
    "AuditReport", "BACKEND", "GenConfig", "LawId", "Status", "TheoryHandle",
    "audit", "check_law", "enumerate_all", "equiv", "gen_random", "get_theory",
    "law_predicate", "parse_spec", "render_spec",
]
