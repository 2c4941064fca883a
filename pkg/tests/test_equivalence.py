import random

import pytest

from scythe.cohomology import betti, class_coordinates
from scythe.complexes import (
    circle,
    circle_subdivided,
    filled_triangle,
    genus2_surface,
    interval,
    theta_graph,
    torus_grid,
)
from scythe.equivalence import (
    Equivalence,
    SteppedEquivalence,
    lift_cocycle,
    project_cocycle,
)
from scythe.errors import NotACocycle
from scythe.field import RATIONAL, fp
from scythe.matrix import Matrix, mat_mul, matvec
from scythe.morse import coscythe, iterate_scythe, scythe
from scythe.sheaf import compile_sheaf, constant_sheaf

from randgen import random_parametrization, random_simplicial

FIXTURES = [interval, circle, filled_triangle, theta_graph,
            lambda: circle_subdivided(6), lambda: torus_grid(3, 4),
            genus2_surface]


def check_laws(orig, red, eq):
    f = orig.field
    for n in range(orig.top + 1):
        psi = eq.psi_matrix(n)
        phi = eq.phi_matrix(n)
        assert psi.rows == red.rank_c(n) and psi.cols == orig.rank_c(n)
        assert phi.rows == orig.rank_c(n) and phi.cols == red.rank_c(n)
        # psi . phi = identity on the reduced complex
        assert mat_mul(psi, phi).data == Matrix.identity(f, red.rank_c(n)).data
        if n < orig.top:
            # cochain map laws in both directions
            assert mat_mul(eq.psi_matrix(n + 1), orig.d(n)).data == \
                mat_mul(red.d(n), psi).data
            assert mat_mul(orig.d(n), phi).data == \
                mat_mul(eq.phi_matrix(n + 1), red.d(n)).data
        # id - phi . psi = theta d + d theta
        want = Matrix.identity(f, orig.rank_c(n)).sub(mat_mul(phi, psi))
        got = Matrix.zeros(f, orig.rank_c(n), orig.rank_c(n))
        if n + 1 <= orig.top:
            got = got.add(mat_mul(eq.theta_matrix(n + 1), orig.d(n)))
        if n >= 1:
            got = got.add(mat_mul(orig.d(n - 1), eq.theta_matrix(n)))
        assert got.data == want.data


@pytest.mark.parametrize("runner", [scythe, coscythe, iterate_scythe])
def test_laws_on_fixtures(runner):
    for make in FIXTURES:
        param = compile_sheaf(constant_sheaf(make()))
        data = runner(param, track_equivalence=True)
        eq = data.equivalence
        check_laws(eq.src_complex, eq.dst_complex, eq)


def test_laws_on_random_instances():
    rng = random.Random(31)
    for trial in range(25):
        base = random_simplicial(rng)
        field = fp(5) if trial % 3 == 0 else RATIONAL
        param = random_parametrization(rng, base, field)
        data = scythe(param, track_equivalence=True)
        eq = data.equivalence
        check_laws(eq.src_complex, eq.dst_complex, eq)


def test_identity_equivalence():
    param = compile_sheaf(constant_sheaf(circle()))
    layouts = {n: param.layout(n) for n in range(param.max_dim() + 1)}
    eq = Equivalence.identity(param.field, layouts)
    cx = param.assemble()
    eq.src_complex = cx
    eq.dst_complex = cx
    check_laws(cx, cx, eq)
    assert eq.theta_matrix(1).is_zero()


def test_stepped_equivalence_matches_dense():
    for make in (circle, lambda: torus_grid(2, 3)):
        dense = compile_sheaf(constant_sheaf(make()))
        stepped = dense.copy()
        d1 = scythe(dense, track_equivalence=True).equivalence
        d2 = scythe(stepped, track_equivalence=True, keep_steps=True).equivalence
        assert isinstance(d2, SteppedEquivalence)
        m = d2.materialize()
        for n in range(d1.src_complex.top + 1):
            assert m.psi_matrix(n).data == d1.psi_matrix(n).data
            assert m.phi_matrix(n).data == d1.phi_matrix(n).data
            assert m.theta_matrix(n).data == d1.theta_matrix(n).data


def test_stepped_transport_matches_matrices():
    rng = random.Random(13)
    param = compile_sheaf(constant_sheaf(torus_grid(3, 3)))
    stepped = scythe(param.copy(), track_equivalence=True,
                     keep_steps=True).equivalence
    dense = stepped.materialize()
    f = param.field
    orig = stepped.src_complex
    red = stepped.dst_complex
    for n in range(orig.top + 1):
        # transport a genuine cocycle: any coboundary will do
        if n > 0:
            below = [f.from_int(rng.randint(-2, 2))
                     for _ in range(orig.rank_c(n - 1))]
            vec = matvec(orig.d(n - 1), below)
        else:
            basis = betti(orig, generators=True).generators[0]
            vec = basis.column(0) if basis.cols else [f.zero] * orig.rank_c(0)
        assert stepped.project_vector(vec, n) == matvec(dense.psi_matrix(n), vec)
        if n > 0:
            rbelow = [f.from_int(rng.randint(-2, 2))
                      for _ in range(red.rank_c(n - 1))]
            rvec = matvec(red.d(n - 1), rbelow)
        else:
            rvec = [f.one] * red.rank_c(0)
        assert stepped.lift_vector(rvec, n) == matvec(dense.phi_matrix(n), rvec)


def test_project_and_lift_preserve_classes():
    param = compile_sheaf(constant_sheaf(genus2_surface()))
    data = scythe(param, track_equivalence=True)
    eq = data.equivalence
    orig, red = eq.src_complex, eq.dst_complex
    prof = betti(orig, generators=True)
    for n, gens in prof.generators.items():
        for j in range(gens.cols):
            vec = gens.column(j)
            down = project_cocycle(eq, vec, n)
            back = lift_cocycle(eq, down, n)
            # round trip lands in the same cohomology class
            diff = [orig.field.sub(a, b) for a, b in zip(vec, back)]
            coords = class_coordinates(orig, diff, n)
            assert all(c == orig.field.zero for c in coords)


def test_cocycle_guard():
    param = compile_sheaf(constant_sheaf(filled_triangle()))
    data = scythe(param, track_equivalence=True)
    eq = data.equivalence
    f = eq.src_complex.field
    not_cocycle = [f.one] + [f.zero] * (eq.src_complex.rank_c(1) - 1)
    with pytest.raises(NotACocycle):
        project_cocycle(eq, not_cocycle, 1)


def test_iterate_composes_across_passes():
    param = compile_sheaf(constant_sheaf(genus2_surface()))
    data = iterate_scythe(param, track_equivalence=True)
    assert len(data.passes) >= 2
    eq = data.equivalence
    check_laws(eq.src_complex, eq.dst_complex, eq)
    assert eq.dst_complex.rank_c(1) == 4
