"""
Irreducible graded modules and Grothendieck groups.

v counts the irreducible graded modules up to isomorphism: 1 when M = sigma(M)
for the gr-simple M of the basic algebra, 2 otherwise. K is free abelian of
rank v. Only R_{p,q} (r = 0) and C_{p,0} are in scope.
"""

import logging
from dataclasses import dataclass
from typing import List

from algebra.errors import ScopeError, UnknownTable
from algebra.modules import modules_isomorphic, regular_module, suspension
from utils.formats import render_table

from .classify import (
    ComplexCore,
    complex_basic_class,
    printed_table_class,
    real_basic_class,
    realize,
    theorem_display_class,
)
from .morita import find_odd_involution

logger = logging.getLogger(__name__)

TABLE_KINDS = ("real-basic", "real-k", "complex-basic", "complex-k")

# columns shown by the text, csv and md renderers
TABLE_COLUMNS = {
    "real-basic": ("residue", "basic_class", "printed_class", "theorem_display_class", "paper_discrepancy_flag"),
    "real-k": ("residue", "irr", "v", "k_rank", "group"),
    "complex-basic": ("residue", "basic_class", "printed_class", "paper_discrepancy_flag"),
    "complex-k": ("residue", "irr", "v", "k_rank", "group", "lemma_v", "paper_discrepancy_flag"),
}


@dataclass(frozen=True)
class FreeAbelianGroup:
    rank: int

    def __str__(self):
        return "⊕".join(["ℤ"] * self.rank) if self.rank else "0"


@dataclass(frozen=True)
class GrothendieckData:
    v: int
    irr_labels: tuple
    group: FreeAbelianGroup
    basic_class: object

    def to_dict(self):
        return {
            "class": self.basic_class.name,
            "v": self.v,
            "irr": list(self.irr_labels),
            "k_rank": self.group.rank,
            "group": str(self.group),
        }


def v_real(p, q):
    return 2 if (p - q) % 4 == 0 else 1


def v_complex(p):
    return 2 if p % 2 == 0 else 1


def lemma_v_complex(p):
    """Count as stated in the prose lemma, opposite in parity to the table."""
    return 2 if p % 2 == 1 else 1


def _irr_labels(v):
    return ("M", "σ(M)") if v == 2 else ("M",)


def grothendieck_real(p, q, r=0):
    if r:
        raise ScopeError(f"Grothendieck groups are computed for R_(p,q) only, got r = {r}")
    v = v_real(p, q)
    return GrothendieckData(v, _irr_labels(v), FreeAbelianGroup(v), real_basic_class(p, q, 0))


def grothendieck_complex(p, q=0):
    if q:
        raise ScopeError(f"Grothendieck groups are computed for C_(p,0) only, got q = {q}")
    v = v_complex(p)
    cls = complex_basic_class(p, 0)
    return GrothendieckData(v, _irr_labels(v), FreeAbelianGroup(v), cls)


def count_irreducible_classes(cls, seed=1):
    """
    Module-level count of irreducible graded modules of realize(cls).

    The basic algebra is gr-divisional, so its regular module M is gr-simple
    and every irreducible is M or sigma(M); the count is 1 exactly when they
    are isomorphic.
    """
    if cls.grassmann_rank:
        raise ScopeError("irreducible modules are counted for rank-0 classes only")
    M = regular_module(realize(cls))
    same = modules_isomorphic(M, suspension(M), seed=seed)
    logger.debug("%s: M %s sigma(M)", cls, "=" if same else "!=")
    return 1 if same else 2


def has_odd_unit(cls, seed=1):
    return find_odd_involution(realize(cls), seed=seed) is not None


def _real_row(residue):
    cls = real_basic_class(residue, 0)
    printed = printed_table_class(residue)
    v = v_real(residue, 0)
    return {
        "residue": residue,
        "basic_class": cls.name,
        "printed_class": printed.text,
        "theorem_display_class": theorem_display_class(residue).text,
        "irr": ", ".join(_irr_labels(v)),
        "v": v,
        "k_rank": v,
        "group": str(FreeAbelianGroup(v)),
        "paper_discrepancy_flag": cls.core is not printed,
    }


def _complex_row(residue, kind):
    cls = complex_basic_class(residue, 0)
    printed = ComplexCore(residue)
    v = v_complex(residue)
    lemma = lemma_v_complex(residue)
    flag = v != lemma if kind == "complex-k" else cls.core is not printed
    return {
        "residue": residue,
        "basic_class": cls.name,
        "printed_class": printed.text,
        "irr": ", ".join(_irr_labels(v)),
        "v": v,
        "k_rank": v,
        "group": str(FreeAbelianGroup(v)),
        "lemma_v": lemma,
        "paper_discrepancy_flag": flag,
    }


def table_rows(kind) -> List[dict]:
    """One row per residue: 0..7 for real tables, 0..1 for complex ones."""
    if kind not in TABLE_KINDS:
        raise UnknownTable(f"unknown table '{kind}' (expected one of {', '.join(TABLE_KINDS)})")
    if kind.startswith("real"):
        return [_real_row(d) for d in range(8)]
    return [_complex_row(d, kind) for d in range(2)]


def table_document(kind):
    rows = table_rows(kind)
    return {"table": kind, "shown": list(TABLE_COLUMNS[kind]), "columns": rows}


def emit_table(kind, fmt="text"):
    """Render a table in one of text, json, csv or md."""
    return render_table(table_document(kind), fmt)
