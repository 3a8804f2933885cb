"""Stratified set theory workbench.

Thin re-export of the compiled kernel. All functions speak the same concrete
syntax as the `stratos` CLI; levels are written `name@level`.
"""

from ._core import (
    check,
    check_proof,
    cut_eliminate,
    infer,
    interp,
    laws,
    plus,
    prove,
    sat,
    subst,
    suites,
    theory_derives,
)

__all__ = [
    "check",
    "check_proof",
    "cut_eliminate",
    "infer",
    "interp",
    "laws",
    "plus",
    "prove",
    "sat",
    "subst",
    "suites",
    "theory_derives",
]
