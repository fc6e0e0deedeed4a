# Copyright (C) 2024 qBraid
#
# This file is part of cstate-lab
#
# cstate-lab is free software released under the GNU General Public License v3
# or later. You can redistribute and/or modify it under the terms of the GPL v3.
# See the LICENSE file in the project root or <https://www.gnu.org/licenses/gpl-3.0.html>.
#
# THERE IS NO WARRANTY for cstate-lab, as per Section 15 of the GPL v3.

"""
Module for the correspondence-principle study of the star product as ``hbar = 1/k``
goes to zero.

An operator family assigns to each bundle power ``k`` an operator on the CP^n model
at that power and carries the classical limit of its symbols. Intensive families are
built from ``(1/k)`` times prequantum operators, whose symbols are exactly the
moment maps.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import partial
from typing import Callable, Sequence

import numpy as np

from ..quantization.checks import ConvergenceTable
from ..quantization.hilbert import QuantModel, cpn_model
from ..repn.generators import LieGenerator, moment_map, moment_map_wirtinger, su_basis
from ..repn.prequantum import prequantum_op
from .poisson import SymbolFunction, poisson_fs, product_function
from .symbols import star_symbol

logger = logging.getLogger(__name__)

SUPPORTED_PAIRS = ["xy", "x2y"]


@dataclass(frozen=True)
class SymbolFamily:
    """Operators indexed by ``k`` together with their classical symbol.

    Attributes:
        name (str): Label.
        n (int): Chart dimension.
        operator (Callable): ``operator(model, k)`` returns the matrix at power ``k``.
        classical (SymbolFunction): The ``k``-independent limit of the symbols.
    """

    name: str
    n: int
    operator: Callable[[QuantModel, int], np.ndarray]
    classical: SymbolFunction


def _intensive_operator(model: QuantModel, k: int, gen: LieGenerator) -> np.ndarray:
    return prequantum_op(gen, gen.n, k, model) / k


def moment_family(gen: LieGenerator, name: str = "") -> SymbolFamily:
    """``(1/k) i rho(lambda)`` with classical limit ``tau_lambda``."""
    classical = SymbolFunction(partial(moment_map, gen), partial(moment_map_wirtinger, gen))
    return SymbolFamily(name or gen.name, gen.n, partial(_intensive_operator, gen=gen), classical)


def _product_operator(model: QuantModel, k: int, first, second) -> np.ndarray:
    return first.operator(model, k) @ second.operator(model, k)


def product_family(first: SymbolFamily, second: SymbolFamily) -> SymbolFamily:
    """Operator product with the pointwise product as classical limit."""
    if first.n != second.n:
        raise ValueError(f"Families act on CP^{first.n} and CP^{second.n}.")
    return SymbolFamily(
        f"{first.name}{second.name}",
        first.n,
        partial(_product_operator, first=first, second=second),
        product_function(first.classical, second.classical),
    )


def spin_pair(pair: str) -> tuple[SymbolFamily, SymbolFamily]:
    """Catalog pairs of su(2) families on CP^1: ``xy`` or ``x2y`` (x squared with y)."""
    x, y, _ = (moment_family(g) for g in su_basis(1))
    if pair == "xy":
        return x, y
    if pair == "x2y":
        return product_family(x, x), y
    raise ValueError(f"Pair {pair} is not supported. Supported pairs are: {SUPPORTED_PAIRS}")


def correspondence_row(first: SymbolFamily, second: SymbolFamily, p, k: int) -> tuple:
    """``(k, star error, commutator error)`` at one bundle power."""
    model = cpn_model(first.n, k)
    a1 = first.operator(model, k)
    a2 = second.operator(model, k)
    star12 = star_symbol(model, a1, a2, p)
    star21 = star_symbol(model, a2, a1, p)
    pointwise = first.classical(p) * second.classical(p)
    bracket = poisson_fs(first.classical, second.classical, p)
    star_error = abs(star12 - pointwise)
    commutator_error = abs(k * (star12 - star21) - 1j * bracket)
    return k, float(star_error), float(commutator_error)


def correspondence_table(
    first: SymbolFamily, second: SymbolFamily, p, k_list: Sequence[int]
) -> ConvergenceTable:
    """Star-product and commutator errors against their classical limits.

    Rows are ``(k, |a1 * a2 - A1 A2|, |k (a1 * a2 - a2 * a1) - i {A1, A2}|)`` at the
    chart point ``p``, with ``hbar = 1/k``.
    """
    table = ConvergenceTable(["k", "star_error", "commutator_error"])
    for k in sorted(int(k) for k in k_list):
        table.rows.append(correspondence_row(first, second, p, k))
        logger.debug("Correspondence row %s", table.rows[-1])
    return table


def halving_ratios(table: ConvergenceTable, column: str) -> np.ndarray:
    """Ratios ``error(k_{j+1}) / error(k_j)`` of consecutive rows."""
    values = table.column(column)
    return values[1:] / values[:-1]
