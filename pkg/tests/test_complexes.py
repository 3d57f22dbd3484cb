"""Test free modules, maps, Koszul complexes and free resolutions."""

import math

import pytest
from expects import be_false, be_none, be_true, equal, expect, raise_error

from extscope.complexes import FreeComplex, FreeModule, ModuleMap, koszul_complex
from extscope.errors import InhomogeneousError, IntegrityError, UsageError
from extscope.ext import PresentedModule
from extscope.groebner import Ideal
from extscope.poly import parse_ring


@pytest.fixture(name='ring')
def fixture_ring():
    return parse_ring('QQ[x,y,z]')


class TestModuleMaps:
    """Homogeneous maps between graded free modules."""

    def test_reads_source_twists_from_entries(self, ring):
        d = ModuleMap.from_rows(ring, [[ring('xy'), ring('xz')]])

        expect(d.source.twists).to(equal((2, 2)))
        expect(d.shape).to(equal((1, 2)))

    def test_transpose_negates_twists(self, ring):
        d = ModuleMap.from_rows(ring, [[ring('xy'), ring('xz')]])
        transposed = d.transpose()

        expect(transposed.source.twists).to(equal((0,)))
        expect(transposed.target.twists).to(equal((-2, -2)))
        expect(transposed.columns).to(equal([(ring('xy'), ring('xz'))]))

    def test_rejects_entries_of_the_wrong_degree(self, ring):
        source, target = FreeModule(ring, (2,)), FreeModule(ring, (0,))

        expect(lambda: ModuleMap(source, target, [(ring('x'),)])).to(raise_error(InhomogeneousError))

    def test_rejects_columns_of_the_wrong_length(self, ring):
        source, target = FreeModule(ring, (1,)), FreeModule(ring, (0, 0))

        expect(lambda: ModuleMap(source, target, [(ring('x'),)])).to(raise_error(UsageError))

    def test_composition(self, ring):
        first = ModuleMap.from_rows(ring, [[ring('xy'), ring('xz')]])
        second = ModuleMap.from_rows(ring, [[ring('z')], [ring('-y')]], target_twists=(2, 2))

        expect(first.compose(second).is_zero()).to(be_true)

    def test_identity_and_zero(self, ring):
        module = FreeModule(ring, (0, 1))

        expect(ModuleMap.identity(module).is_zero()).to(be_false)
        expect(ModuleMap.zero(module, module).is_zero()).to(be_true)
        expect(ModuleMap.identity(module)).to(equal(ModuleMap.identity(module)))


class TestComplexes:
    """Bounded complexes and the d∘d check."""

    def test_rejects_nonzero_composites(self, ring):
        d1 = ModuleMap.from_rows(ring, [[ring('x')]])
        d2 = ModuleMap.from_rows(ring, [[ring('x')]], target_twists=(1,))

        expect(lambda: FreeComplex([d1, d2])).to(raise_error(IntegrityError))

    def test_modules_outside_the_range_are_zero(self, ring):
        d1 = ModuleMap.from_rows(ring, [[ring('x')]])
        complex_ = FreeComplex([d1])

        expect(complex_.module(0).rank).to(equal(1))
        expect(complex_.module(5).rank).to(equal(0))
        expect(complex_.differential(2)).to(be_none)

    def test_koszul_complex_ranks(self, ring):
        complex_ = koszul_complex(ring.gens, ring)

        expect(complex_.ranks()).to(equal({0: 1, 1: 3, 2: 3, 3: 1}))
        expect(complex_.module(3).twists).to(equal((3,)))

    def test_koszul_differential_signs(self, ring):
        complex_ = koszul_complex([ring('x'), ring('y')], ring)

        expect(complex_.differential(2).columns).to(equal([(ring('-y'), ring('x'))]))

    def test_hom_transpose(self, ring):
        dual = koszul_complex(ring.gens, ring).hom_transpose()

        expect(dual.ranks()).to(equal({-3: 1, -2: 3, -1: 3, 0: 1}))
        expect(dual.module(-3).twists).to(equal((-3,)))
        expect(dual.module(0).twists).to(equal((0,)))

    def test_hom_transpose_of_a_single_module(self, ring):
        dual = FreeComplex([], 1, FreeModule(ring, (2,))).hom_transpose()

        expect(dual.ranks()).to(equal({0: 1}))
        expect(dual.module(0).twists).to(equal((-2,)))

    def test_koszul_complex_of_inhomogeneous_elements(self, ring):
        expect(lambda: koszul_complex([ring('x + y^2')], ring)).to(raise_error(InhomogeneousError))


class TestResolutions:
    """Minimal free resolutions and Betti numbers."""

    def test_resolution_of_xy_xz(self, ring):
        resolution = PresentedModule.cyclic(Ideal(ring, ['xy', 'xz'])).resolution(4)

        expect(resolution.betti()).to(equal([1, 2, 1]))
        expect(resolution.graded_betti()).to(equal([[0], [2, 2], [3]]))
        expect(resolution.is_complete).to(be_true)
        expect(resolution.projective_dimension).to(equal(2))

    def test_hilbert_burch_shape(self, ring):
        resolution = PresentedModule.cyclic(Ideal(ring, ['xy', 'xz', 'yz'])).resolution(4)

        expect(resolution.betti()).to(equal([1, 3, 2]))

    def test_koszul_resolution_of_the_residue_field(self, ring):
        resolution = PresentedModule.cyclic(Ideal.maximal(ring)).resolution(4)

        expect(resolution.betti()).to(equal([1, 3, 3, 1]))

    def test_truncated_resolution_over_a_quotient_ring(self):
        ring = parse_ring('QQ[x,y,z]/(x^2,xy,xz)')
        resolution = PresentedModule.cyclic(Ideal(ring, ['x'])).resolution(3)

        expect(resolution.betti()).to(equal([1, 1, 3, 6]))
        expect(resolution.is_complete).to(be_false)
        expect(resolution.projective_dimension).to(equal(math.inf))
        expect(resolution.computed_up_to).to(equal(3))

    def test_differentials_compose_to_zero(self, ring):
        resolution = PresentedModule.cyclic(Ideal(ring, ['x^2', 'xy', 'y^3'])).resolution(4)

        for k in range(2, resolution.length + 1):
            expect(resolution.differential(k - 1).compose(resolution.differential(k)).is_zero()).to(be_true)

    def test_periodic_resolution(self):
        ring = parse_ring('F5[X,Y,Z]/(X+Y+Z)^5')
        resolution = PresentedModule.cyclic(Ideal(ring, ['(x+y+z)^2'])).resolution(4)

        expect(resolution.betti()).to(equal([1, 1, 1, 1, 1]))
        expect(resolution.differential(1).transpose().columns[0][0].degree()).to(equal(2))
        expect(resolution.differential(2).columns[0][0].degree()).to(equal(3))

    def test_beyond_the_window(self):
        ring = parse_ring('QQ[x,y,z]/(x^2,xy,xz)')
        resolution = PresentedModule.cyclic(Ideal(ring, ['x'])).resolution(2)

        expect(lambda: resolution.free_module(3)).to(raise_error(UsageError))

    def test_negative_window(self, ring):
        expect(lambda: PresentedModule.cyclic(Ideal(ring, ['x'])).resolution(-1)).to(raise_error(UsageError))
