import random
from fractions import Fraction

import pytest

from leibnizalg.algebra import (
    Algebra,
    is_lie,
    is_nilpotent,
    is_solvable,
    leibniz_check,
    lower_central_series,
    nilradical_equals,
    series_dims,
)
from leibnizalg.extensions import (
    BasisChange,
    ConstraintSystem,
    apply_basis_change,
    build_extension_problem,
    chain_restore,
    conjecture_check,
    diagonal_branches,
    eliminate,
    generate_constraints,
    instantiate,
    replay,
    resolved_assignments,
    star_change,
)
from leibnizalg.families import (
    make_A_algebra,
    make_B_algebra,
    make_F1,
    make_F1s,
    make_F2,
    make_F3,
    make_SolvA,
    make_SolvB,
)
from leibnizalg.linalg import Matrix, mat_inverse
from leibnizalg.poly import PolyRing


def abelian(d):
    zero = tuple(tuple(tuple(Fraction(0) for _ in range(d)) for _ in range(d)) for _ in range(d))
    return Algebra(tuple(f"e{i}" for i in range(d)), zero)


def test_build_creates_expected_unknowns():
    prob = build_extension_problem(make_F1(5, {}, 1))
    assert {f"beta{j:02d}" for j in range(6)} <= set(prob.unknown_names)
    assert {f"gamma{j:02d}" for j in range(6)} <= set(prob.unknown_names)
    assert {f"delta{j:02d}" for j in range(6)} <= set(prob.unknown_names)
    assert "w02c00" in prob.unknown_names


def test_build_rejects_non_derivation_template():
    ring = PolyRing(("p",))
    one = ring.const(1)
    bad = Matrix(tuple(tuple(one if i == j else ring.zero for j in range(6)) for i in range(6)))
    with pytest.raises(ValueError):
        build_extension_problem(make_F1(5, {}, 1), template=bad)


def test_annihilator_span_f1():
    prob = build_extension_problem(make_F1(5, {}, 1))
    from leibnizalg.algebra import Subspace

    span = Subspace(6, prob.annihilator_span)
    assert span.dim == 4
    for i in (2, 3, 4, 5):
        assert span.contains(prob.nilradical.basis_vector(i))


def test_generate_constraints_derives_the_textbook_deductions():
    prob = build_extension_problem(make_F1(5, {}, 1))
    hyp = diagonal_branches(prob)[0]
    out = eliminate(generate_constraints(prob, hypotheses=hyp))
    assert out.kind == "contradiction"
    assert out.witness.as_rational() != 0
    assigned = {name: value for name, value, _ in out.assignments}
    assert "beta00" in assigned and assigned["beta00"].is_zero()


def test_abelian_zero_template_leaves_only_quadratics():
    N = abelian(3)
    ring = PolyRing(())
    zero_template = Matrix(tuple(tuple(ring.zero for _ in range(3)) for _ in range(3)))
    prob = build_extension_problem(N, template=zero_template)
    system = generate_constraints(prob)
    assert all(eq.degree() >= 2 for eq in system.equations)
    out = eliminate(system)
    assert out.kind == "family"
    assert not out.assignments  # nothing linear to solve
    assert all(eq.degree() >= 2 for eq in out.residual)


def test_contradiction_replay_reproduces_witness():
    prob = build_extension_problem(make_F1s(6, 3))
    hyp = diagonal_branches(prob)[0]
    system = generate_constraints(prob, hypotheses=hyp)
    out = eliminate(system)
    assert out.kind == "contradiction"
    reduced = replay(system, out)
    assert out.witness in reduced


def test_family_replay_matches_residual():
    prob = build_extension_problem(make_F2(5, {}, 1))
    hyp = diagonal_branches(prob)[0]
    system = generate_constraints(prob, hypotheses=hyp)
    out = eliminate(system)
    assert out.kind == "family" and out.residual == ()
    assert replay(system, out) == ()


def test_resolved_assignments_contain_only_free_names():
    prob = build_extension_problem(make_F2(5, {}, 1))
    out = eliminate(generate_constraints(prob, hypotheses=diagonal_branches(prob)[0]))
    free = set(out.free)
    for value in resolved_assignments(out).values():
        assert set(value.variables()) <= free


def test_instantiated_family_is_a_leibniz_algebra():
    prob = build_extension_problem(make_F2(5, {}, 1))
    out = eliminate(generate_constraints(prob, hypotheses=diagonal_branches(prob)[0]))
    rng = random.Random(1)
    vals = {name: Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for name in out.free}
    alg = instantiate(prob, out, vals)
    assert leibniz_check(alg).ok
    assert is_solvable(alg) and not is_nilpotent(alg)
    assert nilradical_equals(alg, 6)


def test_diagonal_branches_cover_non_nilpotency():
    # one branch for the rank-one families, none for a characteristically
    # nilpotent nilradical
    prob = build_extension_problem(make_F2(5, {}, 1))
    assert len(diagonal_branches(prob)) == 1
    prob2 = build_extension_problem(make_F1(5, {3: 1, 4: 1}, 0))
    assert diagonal_branches(prob2) == []


def test_f3_contradictions_all_branches():
    for theta in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        prob = build_extension_problem(make_F3(5, *theta, 0))
        for hyp in diagonal_branches(prob):
            out = eliminate(generate_constraints(prob, hypotheses=hyp))
            assert out.kind == "contradiction", theta


def test_identity_change_is_noop():
    a = make_F1(5, {}, 1)
    out = apply_basis_change(a, BasisChange(Matrix.identity(6)))
    assert out.tensor == a.tensor


def test_scaling_top_basis_vector():
    a = make_F1(5, {}, 1)
    rows = [[Fraction(1 if i == j else 0) for j in range(6)] for i in range(6)]
    rows[5][5] = Fraction(2)
    out = apply_basis_change(a, BasisChange(Matrix(tuple(tuple(r) for r in rows))))
    # coefficients into e_5 halve, products of e_5 double (none here)
    assert out.tensor[4][0][5] == Fraction(1, 2)
    assert out.tensor[0][1][5] == Fraction(1, 2)


def test_singular_change_rejected():
    rows = tuple(tuple(Fraction(0) for _ in range(6)) for _ in range(6))
    with pytest.raises(ValueError):
        BasisChange(Matrix(rows))


def test_change_preserves_isomorphism_invariants():
    rng = random.Random(5)
    a = make_SolvA(5, 2, {1: 1}, Fraction(1, 3), {2: 1, 5: Fraction(-2, 7)})
    rows = [[Fraction(1 if i == j else 0) for j in range(7)] for i in range(7)]
    for i in range(7):
        for j in range(i + 1, 7):
            rows[i][j] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    moved = apply_basis_change(a, BasisChange(Matrix(tuple(tuple(r) for r in rows))))
    assert leibniz_check(moved).ok
    assert is_lie(moved) == is_lie(a)
    assert series_dims(lower_central_series(moved)) == series_dims(lower_central_series(a))
    assert is_solvable(moved) and not is_nilpotent(moved)


def test_star_change_trivial_for_zero_b():
    ch = star_change(6, "A", {})
    assert ch.matrix.rows == Matrix.identity(8).rows


def test_star_change_recursion_values_variant_a():
    ch = star_change(5, "A", {2: Fraction(3)})
    # A_2 = -3, A_3 = (1/(1-3))(0 + A_2 b_2) = 9/2
    assert ch.matrix.rows[2][3] == Fraction(-3)
    assert ch.matrix.rows[2][4] == Fraction(9, 2)


def test_star_change_recursion_values_variant_b():
    ch = star_change(7, "B", {2: Fraction(1)})
    assert ch.matrix.rows[2][3] == Fraction(-1)   # A_2
    assert ch.matrix.rows[2][4] == Fraction(1, 2)  # A_3 = b_2^2/2


def test_star_change_unitriangular_invertible():
    ch = star_change(7, "B", {2: Fraction(2), 4: Fraction(-1, 3)})
    assert all(ch.matrix.rows[i][i] == 1 for i in range(9))
    mat_inverse(ch.matrix)


def test_conjecture_trivial_and_hand_case():
    assert conjecture_check(6, "A", 1, {1: 1}, 0, {}).eliminated
    assert conjecture_check(5, "A", 1, {1: 1}, 0, {2: Fraction(1)}).eliminated


def test_conjecture_random_samples():
    rng = random.Random(17)

    def rnd():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    res = conjecture_check(6, "A", 1, {1: 1}, 0, {k: rnd() for k in range(2, 7)})
    assert res.eliminated
    res = conjecture_check(7, "B", 1, {1: 1, 2: -2}, 0, {2: rnd(), 4: rnd(), 6: rnd()})
    assert res.eliminated


def test_conjecture_reports_residual_when_transformation_cannot_work():
    # with a nonzero a_1 the transformation does not account for the
    # correction terms: treated as data, not an error
    res = conjecture_check(6, "A", 3, {1: 1}, 1, {2: Fraction(1)})
    assert not res.eliminated


def test_chain_restore_fixes_adapted_basis():
    b = {2: Fraction(1, 2), 4: Fraction(-2, 3)}
    alg = make_SolvB(5, 1, {1: 1}, b)
    moved = apply_basis_change(alg, star_change(5, "B", b))
    target = make_SolvB(5, 1, {1: 1}, {})
    assert moved.tensor != target.tensor
    assert chain_restore(moved, 5, "B").tensor == target.tensor
