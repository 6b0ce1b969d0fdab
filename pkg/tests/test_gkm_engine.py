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


import pytest

from gkm_workbench.exact_algebra import RatFunc
from gkm_workbench.gkm_engine import (
    Decomposition,
    DecompositionError,
    GraphTooSmallError,
    SupportOutsideBallError,
    UnsupportedLawError,
    build_moment_graph,
    check_gkm,
    decompose,
    is_integral_homology,
    blowup_generator,
    pair_homology,
    psi_basis,
    pull_back_rotation,
    recombine,
    restriction_function,
    specialize_rotation,
    structure_constants,
)
from gkm_workbench.group_law import GroupLaw
from gkm_workbench.root_system import build_root_datum


@pytest.fixture
def sl2_grassmannian(sl2):
    return build_moment_graph(sl2, None, GroupLaw.additive(), 3)


# build_moment_graph

def test_finite_sl2_graph(sl2_finite_graph):
    x = sl2_finite_graph.ring.gen("x")

    assert 2 == len(sl2_finite_graph.vertices)
    assert 1 == len(sl2_finite_graph.edges)
    assert x == sl2_finite_graph.edges[0].generator


def test_a2_flag_graph():
    graph = build_moment_graph(build_root_datum("A2"), (), GroupLaw.additive(), 3, affine=False)

    assert 6 == len(graph.vertices)
    # the Bruhat graph of S3: every pair w < s_β w
    assert 9 == len(graph.edges)


def test_grassmannian_vertices(sl2_grassmannian):
    assert 4 == len(sl2_grassmannian.vertices)
    assert sl2_grassmannian.is_grassmannian
    assert (1,) == sl2_grassmannian.vertex_at_coweight((1,)).coweight


def test_coweight_outside_the_ball(sl2_grassmannian):
    with pytest.raises(SupportOutsideBallError):
        sl2_grassmannian.vertex_at_coweight((5,))


def test_coweight_on_a_flag_graph(sl2_rotation_graph):
    with pytest.raises(ValueError):
        sl2_rotation_graph.vertex_at_coweight((0,))


def test_shell_of_a_truncated_affine_graph(sl2_rotation_graph):
    shell = sl2_rotation_graph.shell()

    assert 2 == len(shell)
    assert all(3 == v.length for v in shell)


def test_complete_finite_graph_has_no_shell(sl2_finite_graph):
    assert [] == sl2_finite_graph.shell()


def test_truncated_finite_graph_has_a_shell():
    graph = build_moment_graph(build_root_datum("A2"), (), GroupLaw.additive(), 2, affine=False)

    assert [2, 2] == [v.length for v in graph.shell()]


def test_vertex_outside_the_graph(sl2_finite_graph):
    with pytest.raises(GraphTooSmallError):
        sl2_finite_graph.vertex(5)


def test_negative_bound(sl2):
    with pytest.raises(ValueError):
        build_moment_graph(sl2, (), GroupLaw.additive(), -1)


def test_rotation_edge_generators(sl2_rotation_graph):
    x, h = sl2_rotation_graph.ring.gens()
    s0 = sl2_rotation_graph.vertex((0,))
    e = sl2_rotation_graph.vertex(())

    (edge,) = [edge for edge in sl2_rotation_graph.edges if (edge.source, edge.target) == (e.id, s0.id)]

    assert x - h == edge.generator


def test_graphs_compare_by_parameters(sl2):
    first = build_moment_graph(sl2, (), GroupLaw.additive(), 2)
    second = build_moment_graph(sl2, (), GroupLaw.additive(), 2)

    assert first == second
    assert first != build_moment_graph(sl2, (), GroupLaw.multiplicative(), 2)


# check_gkm

def test_check_gkm_constant(sl2_rotation_graph):
    assert check_gkm(sl2_rotation_graph.constant(3))


def test_check_gkm_reports_the_violated_edge(sl2_finite_graph):
    ring = sl2_finite_graph.ring
    f = sl2_finite_graph.function({0: ring.zero(), 1: ring.one()})

    check = check_gkm(f)

    assert not check
    assert sl2_finite_graph.edges[0] == check.edge


def test_check_gkm_needs_every_vertex(sl2_finite_graph):
    with pytest.raises(GraphTooSmallError):
        check_gkm(sl2_finite_graph.function({0: sl2_finite_graph.ring.one()}))


def test_restriction_function_is_gkm(sl2_rotation_graph):
    assert check_gkm(restriction_function(sl2_rotation_graph, (1,)))


# psi_basis

def test_psi_finite_sl2(sl2_finite_graph):
    ring = sl2_finite_graph.ring
    x = ring.gen("x")

    assert sl2_finite_graph.constant(1) == psi_basis(sl2_finite_graph, ())
    assert {0: ring.zero(), 1: x} == psi_basis(sl2_finite_graph, (1,)).values


def test_psi_on_rotation_graph(sl2_rotation_graph):
    x, h = sl2_rotation_graph.ring.gens()
    psi = psi_basis(sl2_rotation_graph, (1,))

    assert x == psi(sl2_rotation_graph.vertex((1,)))
    assert 0 == psi(sl2_rotation_graph.vertex((0,)))
    assert -x + 2 * h == psi(sl2_rotation_graph.vertex((0, 1)))


@pytest.mark.parametrize(
    "family, parabolic, law, bound, affine",
    [
        ("SL2", (), GroupLaw.additive(), 3, True),
        ("SL2", None, GroupLaw.additive(), 4, True),
        ("PGL2", None, GroupLaw.multiplicative(), 2, True),
        ("A2", (), GroupLaw.additive(), 3, False),
    ],
)
def test_psi_basis_properties_on_plain_graphs(family, parabolic, law, bound, affine):
    graph = build_moment_graph(build_root_datum(family), parabolic, law, bound, affine=affine)

    for w in graph.vertices:
        psi = psi_basis(graph, w)
        assert check_gkm(psi)
        assert all(psi(v).is_zero() for v in graph.vertices if not graph.bruhat_leq(w, v))
        expected = graph.ring.one()
        for label in graph.inversions(w):
            expected = expected * graph.generator(label)
        assert expected == psi(w)


def test_psi_basis_properties(sl2_rotation_graph):
    graph = sl2_rotation_graph

    for w in graph.vertices:
        psi = psi_basis(graph, w)
        assert check_gkm(psi)
        assert all(psi(v).is_zero() for v in graph.vertices if not graph.bruhat_leq(w, v))
        expected = graph.ring.one()
        for label in graph.inversions(w):
            expected = expected * graph.generator(label)
        assert expected == psi(w)


def test_psi_basis_needs_residues(sl2):
    graph = build_moment_graph(sl2, (), GroupLaw.random(1), 1, affine=False)

    with pytest.raises(UnsupportedLawError):
        psi_basis(graph, (1,))


# decompose

def test_decompose_constant(sl2_rotation_graph):
    assert {0: sl2_rotation_graph.ring.one()} == decompose(sl2_rotation_graph.constant(1))


def test_decompose_recombine(sl2_rotation_graph):
    x, h = sl2_rotation_graph.ring.gens()
    coefficients = {0: x, 2: h + 1, 4: x * h - 3}

    assert coefficients == decompose(recombine(sl2_rotation_graph, coefficients))


def test_decompose_rejects_non_gkm_functions(sl2_finite_graph):
    ring = sl2_finite_graph.ring

    with pytest.raises(DecompositionError):
        decompose(sl2_finite_graph.function({0: ring.zero(), 1: ring.one()}))


def test_decompose_refuses_shell_terms(sl2_rotation_graph):
    for vertex in sl2_rotation_graph.shell():
        with pytest.raises(DecompositionError, match="boundary shell"):
            decompose(psi_basis(sl2_rotation_graph, vertex))


def test_decompose_accepts_support_reaching_the_shell(sl2_rotation_graph):
    vertex = sl2_rotation_graph.vertex((1,))
    psi = psi_basis(sl2_rotation_graph, vertex)

    assert any(v in psi.support() for v in sl2_rotation_graph.shell())
    assert {vertex.id: sl2_rotation_graph.ring.one()} == decompose(psi)


def test_a2_decompose_recombine():
    graph = build_moment_graph(build_root_datum("A2"), (), GroupLaw.additive(), 3, affine=False)
    x1, x2 = graph.ring.gens()
    coefficients = {0: x1, 2: x1 * x2 - 1, 5: graph.ring.constant(3)}

    assert coefficients == decompose(recombine(graph, coefficients))


def test_grassmannian_decompose_recombine(sl2_grassmannian):
    x = sl2_grassmannian.ring.gen("x")
    coefficients = {0: x, 1: x - 2}

    assert coefficients == decompose(recombine(sl2_grassmannian, coefficients))


def test_structure_constants_on_the_shell(sl2):
    graph = build_moment_graph(sl2, (), GroupLaw.additive(), 1)

    with pytest.raises(DecompositionError):
        structure_constants(graph, [(1,), (1,)])


def test_structure_constants(sl2_finite_graph):
    x = sl2_finite_graph.ring.gen("x")

    decomposition = structure_constants(sl2_finite_graph, [(1,), (1,)])

    assert {1: x} == decomposition.coefficients
    assert decomposition.reconstructs()
    assert Decomposition.of(decomposition.function) == decomposition


# homology pairing

def test_blowup_generator_is_integral(sl2_grassmannian):
    assert is_integral_homology(blowup_generator(sl2_grassmannian, (1,)), sl2_grassmannian)


def test_single_fraction_is_not_integral(sl2_grassmannian):
    x = sl2_grassmannian.ring.gen("x")
    fractions = [((1,), RatFunc(sl2_grassmannian.ring.one()) / x)]

    assert not is_integral_homology(fractions, sl2_grassmannian)


def test_pair_homology(sl2_grassmannian):
    fractions = blowup_generator(sl2_grassmannian, (1,))

    assert 0 == pair_homology(fractions, sl2_grassmannian.constant(1))


# loop rotation

def test_specialize_and_pull_back(sl2, sl2_rotation_graph):
    plain = build_moment_graph(sl2, (), GroupLaw.additive(), 3)

    for w in sl2_rotation_graph.vertices:
        specialized = specialize_rotation(psi_basis(sl2_rotation_graph, w), plain)
        assert check_gkm(specialized)
        assert specialized == specialize_rotation(pull_back_rotation(specialized, sl2_rotation_graph), plain)


def test_specialize_needs_the_same_vertices(sl2, sl2_rotation_graph):
    plain = build_moment_graph(sl2, (), GroupLaw.additive(), 2)

    with pytest.raises(ValueError):
        specialize_rotation(sl2_rotation_graph.constant(1), plain)
