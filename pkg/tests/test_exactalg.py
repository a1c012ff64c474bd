import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jugglingsp.errors import MoveNotApplicable, NotSymplectic, OddAmbient, OddSize, SingularDiagonal
from jugglingsp.exactalg import (
    EndoTuple,
    RationalMatrix,
    aut_equation_residual,
    build_aut_from_tuple,
    check_aut_equations,
    coordinate_point,
    degeneration_path,
    first_columns,
    isotropic_tangent_dimension,
    isotropy_check,
    lie_basis,
    lie_dimension,
    maximal_cell_point_rank1,
    omega,
    orbit_dimension,
    orbit_rank,
    path_endpoints,
    path_point,
    random_group_element,
    random_orbit_point,
    sigma_G,
    sigma_g,
    sigma_point,
    tau1,
    tau1z,
    x_basis_element,
    y_basis_element,
)
from jugglingsp.mutations import SymplecticMove, cell_dimension, downward_mutations, symplectic_cell_dimension, symplectic_moves
from jugglingsp.patterns import JugglingPattern, enumerate_jp, is_symplectic, rmap_pattern

small_ints = st.integers(-4, 4)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    return RationalMatrix(rows)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert m.rank() == m.T.rank() == len(m.rref()[1])
    ker = m.nullspace()
    assert ker.ncols == m.ncols - m.rank()
    if ker.ncols:
        assert (m @ ker).is_zero()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse(rows):
    m = RationalMatrix(rows)
    if m.rank() < 3:
        with pytest.raises(ZeroDivisionError):
            m.inverse()
    else:
        assert m @ m.inverse() == RationalMatrix.identity(3)


def test_fractions_are_exact():
    m = RationalMatrix([[Fraction(1, 3), Fraction(2, 7)], [Fraction(2, 3), Fraction(4, 7)]])
    assert m.rank() == 1
    assert m.reduce_modulo([Fraction(1, 3), Fraction(2, 3)]) == (0, 0)


def test_omega_identities():
    for N in (2, 4, 6, 8):
        om = omega(N)
        assert -om == om.T == om.inverse()
        assert om[0, N - 1] == 1
        assert om @ tau1(N).T @ om == tau1(N)
        for z in (1, -2, Fraction(1, 3)):
            assert om @ tau1z(N, z).T @ om == tau1z(N, z)
    with pytest.raises(OddSize):
        omega(3)


def test_coordinate_points_and_isotropy():
    for p in enumerate_jp(2, 4):
        pt = coordinate_point(p).validate()
        assert isotropy_check(pt) == is_symplectic(p)
    for p in enumerate_jp(0, 4):
        assert isotropy_check(coordinate_point(p))
    with pytest.raises(OddAmbient):
        isotropy_check(coordinate_point(next(iter(enumerate_jp(1, 3)))))


def test_sigma_point():
    for p in enumerate_jp(2, 4):
        pt = coordinate_point(p)
        assert sigma_point(pt).validate().same_as(coordinate_point(rmap_pattern(p)))
        assert sigma_point(sigma_point(pt)).same_as(pt)
    for k, n in [(1, 6), (2, 6), (3, 6)]:
        for p in enumerate_jp(k, n):
            assert sigma_point(coordinate_point(p)).same_as(coordinate_point(rmap_pattern(p)))


def test_sigma_contains_isotropic_points():
    for p in enumerate_jp(2, 4):
        if not is_symplectic(p):
            continue
        for sm in symplectic_moves(p):
            v = degeneration_path(p, sm, Fraction(2, 3))
            s = sigma_point(v)
            assert all(b.span_contains(a) for a, b in zip(v.blocks, s.blocks))


def test_lie_basis_sizes_and_sigma():
    assert len(lie_basis(4)) == 16
    for N in (2, 4, 6, 8):
        assert len(lie_basis(N, True)) == lie_dimension(N, True) == N * N // 2 + N // 2
        for a in range(1, N + 1):
            for b in range(N):
                assert sigma_g(x_basis_element(a, b, N)) == x_basis_element(a, a - b, N).scale((-1) ** a)
                y = y_basis_element(a, b, N)
                assert sigma_g(y) == y
                assert y == y_basis_element(a, a - b, N).scale((-1) ** a)
    with pytest.raises(OddSize):
        lie_basis(3, True)


def test_x_basis_equivariant():
    for a in range(1, 5):
        for b in range(4):
            assert x_basis_element(a, b, 4).is_equivariant()


@pytest.mark.parametrize("k,n", [(1, 2), (1, 4), (2, 4), (3, 4), (1, 6), (2, 6)])
def test_full_orbit_rank_is_mutation_count(k, n):
    for p in enumerate_jp(k, n):
        assert orbit_dimension(p) == cell_dimension(p)


def test_maximal_24_orbit():
    top = JugglingPattern.from_sets([[1, 2], [2, 3], [3, 4], [1, 4]])
    assert orbit_dimension(top) == 4


def test_symplectic_orbit_rank_examples():
    # (2,4): the orbit ranks reproduce the tiers of the Hasse diagram
    for p in enumerate_jp(2, 4):
        if is_symplectic(p):
            assert orbit_dimension(p, True) == symplectic_cell_dimension(p)
    with pytest.raises(NotSymplectic):
        orbit_dimension(JugglingPattern.from_sets([[1, 4], [1, 2], [2, 3], [3, 4]]), True)


def test_symplectic_orbit_rank_gap_at_14():
    # every (1,4)-pattern is isotropic, yet G^sp acts with a smaller orbit here
    p = JugglingPattern.from_sets([[3], [4], [3], [4]])
    assert symplectic_cell_dimension(p) == 2
    assert orbit_dimension(p, True) == 1
    assert isotropic_tangent_dimension(p) == 2


@pytest.mark.parametrize("k,n", [(1, 4), (2, 4), (1, 6), (3, 6)])
def test_isotropic_tangent_matches_mutation_count(k, n):
    for p in enumerate_jp(k, n):
        if is_symplectic(p):
            assert isotropic_tangent_dimension(p) == symplectic_cell_dimension(p)


def test_orbit_rank_at_random_orbit_points():
    rng = random.Random(7)
    for p in enumerate_jp(2, 4):
        assert orbit_rank(random_orbit_point(p, rng).validate()) == orbit_dimension(p)
        if is_symplectic(p):
            q = random_orbit_point(p, rng, symplectic=True).validate()
            assert isotropy_check(q)
            assert orbit_rank(q, True) == orbit_dimension(p, True)


def test_identity_tuple():
    cols = [[1, 0, 0, 0] for _ in range(4)]
    assert check_aut_equations(cols)
    assert build_aut_from_tuple(cols) == EndoTuple.identity(4)
    with pytest.raises(SingularDiagonal):
        check_aut_equations([[0, 0, 0, 0]] + cols[1:])


def test_aut_equations_match_form_preservation():
    rng = random.Random(11)
    broken = 0
    for N in (2, 4, 6):
        for _ in range(6):
            A = random_group_element(N, rng, symplectic=True)
            assert A.is_equivariant() and A.preserves_form()
            cols = first_columns(A)
            assert check_aut_equations(cols)
            assert build_aut_from_tuple(cols) == A
            assert sigma_G(A) == A
            # perturb one entry below the diagonal
            i, j = rng.randrange(N), rng.randrange(1, N)
            cols[i][j] += 1
            B = build_aut_from_tuple(cols)
            assert B.is_equivariant()
            assert check_aut_equations(cols) == B.preserves_form()
            broken += not B.preserves_form()
    # for N = 2 every equation with r = 2 is trivial, so only N >= 4 can break
    assert broken >= 10


def test_trivial_instances():
    rng = random.Random(5)
    N = 6
    cols = [[Fraction(rng.randint(1, 5))] + [Fraction(rng.randint(-5, 5)) for _ in range(N - 1)] for _ in range(N)]
    for i in range(N):
        for r in range(2, N + 1):
            if (r - 2 * i) % N == 0:
                assert aut_equation_residual(cols, i, r) == 0


def test_sigma_G_intertwines_sigma():
    rng = random.Random(3)
    for p in list(enumerate_jp(2, 4))[::4]:
        V = coordinate_point(p)
        A = random_group_element(4, rng)
        lhs = sigma_G(A).act(V)
        rhs = sigma_point(A.act(sigma_point(V)))
        assert lhs.same_as(rhs)


def test_rank_one_maximal_cells_are_isotropic():
    rng = random.Random(2)
    for N in (2, 4, 6, 8):
        for start in range(N):
            for _ in range(3):
                g = [rng.randint(1, 9)] + [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(N - 1)]
                pt = maximal_cell_point_rank1(start, g, N).validate()
                assert isotropy_check(pt)
        for p in enumerate_jp(1, N):
            assert isotropy_check(coordinate_point(p))


def test_degeneration_paths_24():
    for p in enumerate_jp(2, 4):
        if not is_symplectic(p):
            continue
        for sm in symplectic_moves(p):
            assert path_endpoints(p, sm) == (True, True)
            assert degeneration_path(p, sm, 0).same_as(coordinate_point(p))
            for t in (1, -1, Fraction(7, 3)):
                assert isotropy_check(degeneration_path(p, sm, t))


def test_non_symplectic_single_breaks_isotropy():
    p = JugglingPattern.from_sets([[1, 2], [2, 3], [3, 4], [1, 4]])
    mv, target = next((m, t) for m, t in downward_mutations(p) if not is_symplectic(t))
    assert not isotropy_check(path_point(p, target, mv.shift, 1))
    with pytest.raises(MoveNotApplicable):
        degeneration_path(p, SymplecticMove(mv, None, target), 1)
