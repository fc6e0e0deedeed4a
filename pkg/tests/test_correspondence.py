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
Unit tests for the semiclassical correspondence tables of su(2) symbol families.

"""
import numpy as np
import pytest

from cstate_lab.berezin import (
    correspondence_table,
    diagonal_symbol,
    halving_ratios,
    moment_family,
    product_family,
    spin_pair,
)
from cstate_lab.berezin.correspondence import correspondence_row
from cstate_lab.quantization import cpn_model
from cstate_lab.repn import su_basis

K_LIST = [8, 16, 32, 64]
POINT = 0.3 + 0.1j


def test_spin_pair_catalog():
    """Test the names of the catalog pairs."""
    first, second = spin_pair("xy")
    assert (first.name, second.name) == ("x", "y")
    first, second = spin_pair("x2y")
    assert (first.name, second.name) == ("xx", "y")


def test_unknown_pair():
    """Test that pairs outside the catalog are rejected."""
    with pytest.raises(ValueError):
        spin_pair("zz")


def test_product_family_requires_same_dimension():
    """Test that families on different charts cannot be multiplied."""
    x = moment_family(su_basis(1)[0])
    l1 = moment_family(su_basis(2)[0])
    with pytest.raises(ValueError):
        product_family(x, l1)


def test_moment_family_symbol_is_exact():
    """Test that the symbol of (1/k) i rho(lambda) is tau at every k."""
    x = moment_family(su_basis(1)[0])
    k = 5
    model = cpn_model(1, k)
    operator = x.operator(model, k)
    assert np.allclose(operator, operator.conj().T)
    assert diagonal_symbol(model, operator, [[POINT]])[0] == pytest.approx(x.classical(POINT))


def test_row_layout():
    """Test the row format (k, star error, commutator error)."""
    k, star_error, commutator_error = correspondence_row(*spin_pair("xy"), POINT, 4)
    assert k == 4
    assert star_error > 0
    assert commutator_error >= 0


def test_linear_pair_table():
    """Test that the linear pair halves its star error and has an exact commutator."""
    table = correspondence_table(*spin_pair("xy"), POINT, K_LIST)
    assert table.columns == ["k", "star_error", "commutator_error"]
    assert table.column("k").tolist() == K_LIST
    assert np.allclose(halving_ratios(table, "star_error"), 0.5, atol=1e-8)
    assert np.all(table.column("commutator_error") < 1e-10)
    assert table.is_decreasing("star_error")


def test_quadratic_pair_table():
    """Test that both errors of the quadratic pair decay like 1/k."""
    table = correspondence_table(*spin_pair("x2y"), POINT, K_LIST)
    for column in ("star_error", "commutator_error"):
        ratios = halving_ratios(table, column)
        assert np.all((ratios >= 0.3) & (ratios <= 0.8)), (column, ratios)
        assert table.is_decreasing(column)


def test_table_rows_sorted_by_k():
    """Test that bundle powers are sorted before the table is built."""
    table = correspondence_table(*spin_pair("xy"), POINT, [4, 2])
    assert table.column("k").tolist() == [2, 4]
