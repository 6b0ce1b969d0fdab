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

from gkm_workbench.root_system import (
    AffineWeylGroup,
    NotARootError,
    RootDatum,
    UnsupportedFamilyError,
    WeylGroup,
    affine_reflect,
    build_root_datum,
    coset_representatives,
)


# build_root_datum

@pytest.mark.parametrize("family, rank, roots, semisimple_rank", [
    ("SL2", 1, 2, 1),
    ("PGL2", 1, 2, 1),
    ("GL2", 2, 2, 1),
    ("A2", 2, 6, 2),
    ("A3", 3, 12, 3),
    ("T2", 2, 0, 0),
    ("A1xT1", 2, 2, 1),
])
def test_build_root_datum(family, rank, roots, semisimple_rank):
    datum = build_root_datum(family)

    assert rank == datum.rank
    assert roots == len(datum.roots)
    assert semisimple_rank == datum.semisimple_rank
    assert roots // 2 == len(datum.positive_roots)


def test_build_root_datum_with_rank():
    assert "A2" == build_root_datum("A", 2).family
    assert "A1xT1" == build_root_datum("a1xt1").family


@pytest.mark.parametrize("family", ["B2", "A0", "A", "E8x"])
def test_build_root_datum_unsupported(family):
    with pytest.raises(UnsupportedFamilyError):
        build_root_datum(family)


def test_root_datum_rejects_a_wrong_pairing():
    with pytest.raises(ValueError):
        RootDatum("bad", ((2,),), ((1,),), ((1,),), ((Fraction(1),),), ("a",))


def test_highest_root():
    a2 = build_root_datum("A2")

    assert (1, 1) == a2.highest_root.simple_coefficients
    assert 2 == a2.highest_root.height


def test_highest_root_needs_an_irreducible_datum():
    with pytest.raises(UnsupportedFamilyError):
        build_root_datum("A1xA1").highest_root


def test_not_a_root(sl2):
    with pytest.raises(NotARootError):
        sl2.root((2,))


def test_pgl2_pairing():
    pgl2 = build_root_datum("PGL2")

    assert Fraction(2) == pgl2.pair(pgl2.simple_roots[0], pgl2.simple_coroots[0])
    assert Fraction(1, 2) == pgl2.pair((1,), (1,))
    assert Fraction(1) == pgl2.pair(pgl2.simple_roots[0], (1,))
    assert Fraction(1) == pgl2.pair((1,), pgl2.simple_coroots[0])


def test_affine_reflect(sl2):
    assert (-1,) == affine_reflect(sl2, (1,), 1, (0,))
    assert (-3,) == affine_reflect(sl2, (1,), 0, (3,))


# WeylGroup

@pytest.mark.parametrize("family, order, longest", [
    ("SL2", 2, 1),
    ("A2", 6, 3),
    ("A3", 24, 6),
    ("GL2", 2, 1),
])
def test_weyl_group_order(family, order, longest):
    group = WeylGroup(build_root_datum(family))

    assert order == len(group.elements)
    assert longest == group.longest_element().length


def test_weyl_group_reduces_words():
    group = WeylGroup(build_root_datum("A2"))

    assert group.identity() == group.element((1, 1))
    assert group.element((1, 2, 1)) == group.element((2, 1, 2))
    assert 3 == group.element((1, 2, 1)).length


def test_weyl_group_inversions_count_length():
    group = WeylGroup(build_root_datum("A2"))

    for w in group.elements:
        assert w.length == len(group.inversion_set(w))


def test_weyl_group_unknown_generator(sl2):
    with pytest.raises(ValueError):
        WeylGroup(sl2).simple_reflection(2)


# AffineWeylGroup

def test_affine_weyl_group_enumeration(sl2):
    group = AffineWeylGroup(sl2)

    assert 7 == len(group.enumerate(3))
    assert 0 == group.element((0, 0)).length
    assert 3 == group.element((0, 1, 0)).length
    assert "s0s1s0" == str(group.element((0, 1, 0)))


def test_affine_bruhat_order(sl2):
    group = AffineWeylGroup(sl2)
    s0s1 = group.element((0, 1))

    assert 4 == len(group.interval(s0s1))
    assert group.bruhat_leq(group.simple_reflection(0), s0s1)
    assert not group.bruhat_leq(group.element((1, 0)), s0s1)


def test_affine_inversions_count_length(sl2):
    group = AffineWeylGroup(sl2)

    for w in group.enumerate(3):
        assert w.length == len(group.inversion_set(w))


def test_affine_grassmannian_representatives(sl2):
    representatives = coset_representatives(sl2, 3)

    assert [0, 1, 2, 3] == [r.length for r in representatives]
    assert [(-1,), (0,), (1,), (2,)] == sorted(r.coweight for r in representatives)


def test_coset_representatives_negative_bound(sl2):
    with pytest.raises(ValueError):
        coset_representatives(sl2, -1)
