#
# Copyright 2024 ABSA Group Limited
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#


from fractions import Fraction

import pytest

from gkm_workbench.exact_algebra import LaurentRing, RatFunc
from gkm_workbench.group_law import (
    ConstantTermError,
    GroupLaw,
    GroupLawKind,
    TruncationError,
    coordinate_ring,
    euler_class,
    f_add,
    formal_inverse,
    logarithm,
    n_series,
    n_series_at,
    series_ring,
)
from gkm_workbench.root_system import build_root_datum


@pytest.fixture
def t():
    return series_ring().gen("t")


# GroupLaw

@pytest.mark.parametrize("law", [
    GroupLaw.additive(),
    GroupLaw.multiplicative(),
    GroupLaw.formal({(1, 1): 1}),
    GroupLaw.random(7),
    GroupLaw.random(11, order=5),
])
def test_axioms_hold(law):
    assert {"unit": True, "commutativity": True, "associativity": True} == law.axioms_report()


@pytest.mark.parametrize("coefficients, order", [
    ({(1, 2): 1}, 8),
    ({(0, 1): 1}, 8),
    ({(1, 1): 1, (1, 2): 5, (2, 1): 5}, 8),
    ({}, 0),
])
def test_formal_rejects_non_laws(coefficients, order):
    with pytest.raises(ValueError):
        GroupLaw.formal(coefficients, order)


def test_from_label():
    assert GroupLaw.additive() == GroupLaw.from_label("Additive")
    assert GroupLaw.multiplicative() == GroupLaw.from_label("multiplicative")
    assert GroupLaw.random(5, 6) == GroupLaw.from_label("formal", seed=5, order=6)
    assert GroupLawKind.FORMAL == GroupLaw.from_label("formal").kind


def test_from_label_unknown():
    with pytest.raises(ValueError):
        GroupLaw.from_label("elliptic")


def test_series():
    ring = GroupLaw.multiplicative().series().ring
    z, w = ring.gens()

    assert z + w + z * w == GroupLaw.multiplicative().series()
    assert z + w == GroupLaw.additive().series()


# n-series

def test_n_series_additive(t):
    assert 3 * t == n_series(GroupLaw.additive(), 3)
    assert -2 * t == n_series(GroupLaw.additive(), -2)


def test_n_series_multiplicative(t):
    law = GroupLaw.multiplicative()

    assert t**2 + 2 * t == n_series(law, 2)
    assert RatFunc(-t, 1 + t) == n_series(law, -1)
    assert series_ring().zero() == n_series(law, 0)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_n_series_formal_is_additive_in_n(seed):
    law = GroupLaw.random(seed, order=6)

    for n in range(-3, 4):
        for m in range(-3, 4):
            assert n_series(law, n + m) == f_add(law, n_series(law, n), n_series(law, m))


def test_n_series_order_beyond_truncation():
    with pytest.raises(TruncationError):
        n_series(GroupLaw.random(1, order=8), 2, order=9)


def test_n_series_at_multiplicative_monomial():
    ring = LaurentRing(("x",))
    x = ring.gen("x")

    assert x**-1 - 1 == n_series_at(GroupLaw.multiplicative(), -1, x - 1)
    assert x**3 - 1 == n_series_at(GroupLaw.multiplicative(), 3, x - 1)


# formal inverse and logarithm

@pytest.mark.parametrize("law", [GroupLaw.additive(), GroupLaw.multiplicative(), GroupLaw.random(4)])
def test_formal_inverse(t, law):
    assert 0 == f_add(law, t, formal_inverse(law))


def test_formal_law_rejects_constant_terms(t):
    law = GroupLaw.random(3)

    with pytest.raises(ConstantTermError):
        f_add(law, t + 1, t)


def test_logarithm_multiplicative(t):
    expected = t - t**2 * Fraction(1, 2) + t**3 * Fraction(1, 3) - t**4 * Fraction(1, 4)

    assert expected == logarithm(GroupLaw.multiplicative()).truncate(4)


@pytest.mark.parametrize("law", [GroupLaw.formal({(1, 1): 1}), GroupLaw.random(9)])
def test_logarithm_linearizes_the_law(law):
    log = logarithm(law)
    series = law.series()
    ring = series.ring
    z, w = ring.gens()

    lhs = log.substitute({"t": series}, ring).truncate(law.order)
    rhs = log.substitute({"t": z}, ring) + log.substitute({"t": w}, ring)

    assert rhs == lhs


# Euler classes

def test_coordinate_ring():
    a2 = build_root_datum("A2")

    assert ("x1", "x2") == coordinate_ring(GroupLaw.additive(), a2).polynomial
    assert () == coordinate_ring(GroupLaw.multiplicative(), a2).polynomial
    assert ("x", "q") == coordinate_ring(GroupLaw.multiplicative(), build_root_datum("SL2"), True).variables


def test_euler_class(sl2):
    additive = euler_class(GroupLaw.additive(), sl2, (1,))
    x = additive.value.ring.gen("x")

    assert x == additive.value
    assert x * 3 == euler_class(GroupLaw.additive(), sl2, (3,)).value
    multiplicative = euler_class(GroupLaw.multiplicative(), sl2, (1,)).value
    assert multiplicative.ring.gen("x") - 1 == multiplicative


def test_euler_class_with_rotation(sl2):
    additive = euler_class(GroupLaw.additive(), sl2, (1,), rotation=2).value
    x, h = additive.ring.gens()
    multiplicative = euler_class(GroupLaw.multiplicative(), sl2, (1,), rotation=-1).value
    y, q = multiplicative.ring.gens()

    assert x + 2 * h == additive
    assert y * q**-1 - 1 == multiplicative


def test_euler_class_wrong_rank(sl2):
    with pytest.raises(ValueError):
        euler_class(GroupLaw.additive(), sl2, (1, 0))
