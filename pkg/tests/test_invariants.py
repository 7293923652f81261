"""Joint-invariant search: counts, catalog results, span properties."""

import pytest

from jointinv import catalog
from jointinv.context import VarContext
from jointinv.echelon import commuting_closure
from jointinv.fields import FieldSystem, VectorField
from jointinv.invariants import (
    annihilates,
    expected_invariant_count,
    functional_independence,
    poly_in_span,
    polynomial_invariants,
    spans_equal,
)
from jointinv.parsing import parse_scalar


def poly(text, ctx):
    return parse_scalar(text, ctx).num


def test_expected_count_so3(so3):
    assert expected_invariant_count(so3) == 1


def test_expected_count_sl3(sl3_coadjoint):
    assert expected_invariant_count(sl3_coadjoint) == 2


def test_expected_count_full_rank():
    ctx = VarContext(["x", "y"])
    system = FieldSystem(
        ctx,
        [
            VectorField(ctx, [parse_scalar("1", ctx), parse_scalar("0", ctx)]),
            VectorField(ctx, [parse_scalar("0", ctx), parse_scalar("1", ctx)]),
        ],
    )
    assert expected_invariant_count(system) == 0
    result = polynomial_invariants(system, 3)
    assert result.basis == ()


def test_so3_degree2_basis(so3):
    result = polynomial_invariants(so3, 2)
    assert [str(p) for p in result.basis] == ["x^2 + y^2 + z^2"]
    assert result.independent_count == 1


def test_sl2_degree2_basis(sl2_triple):
    result = polynomial_invariants(sl2_triple, 2)
    assert [str(p) for p in result.basis] == ["x*z - y^2"]


def test_olver_r4_closure_basis(olver_r4):
    closed, _ = commuting_closure(olver_r4)
    result = polynomial_invariants(closed.field_system(), 2)
    assert [str(p) for p in result.basis] == ["y^2 + z^2 - w^2"]


def test_so_pq_21_basis():
    system = catalog.get("so_pq(2,1)").fields
    result = polynomial_invariants(system, 2)
    assert [str(p) for p in result.basis] == ["x1^2 + x2^2 - x3^2"]


def test_sl3_coadjoint_degree3(sl3_coadjoint):
    entry = catalog.get("sl3")
    result = polynomial_invariants(sl3_coadjoint, 3)
    assert len(result.basis) == 2
    assert result.independent_count == 2
    for text in entry.expected["coadjoint"]:
        assert poly_in_span(result.basis, poly(text, sl3_coadjoint.ctx))


def test_soundness_of_search(so3, sl2_triple, sl3_coadjoint):
    for system, degree in ((so3, 3), (sl2_triple, 3), (sl3_coadjoint, 2)):
        result = polynomial_invariants(system, degree)
        for p in result.basis:
            assert annihilates(system, p)


def test_raising_bound_adds_no_new_independents(so3):
    # degree 3 over so(3): still only the quadric (its multiples exceed the
    # bound, and no independent cubic exists)
    deg2 = polynomial_invariants(so3, 2)
    deg3 = polynomial_invariants(so3, 3)
    assert spans_equal(deg2.basis, deg3.basis)
    assert deg3.independent_count == expected_invariant_count(so3)


def test_sl2_bound_raise(sl2_triple):
    deg3 = polynomial_invariants(sl2_triple, 3)
    assert deg3.independent_count == expected_invariant_count(sl2_triple) == 1


@pytest.mark.parametrize("name", ["so3", "sl2_triple", "olver_r4", "so_pq(2,1)"])
@pytest.mark.parametrize("degree", [1, 2, 3])
def test_closure_equivalence(name, degree):
    system = catalog.get(name).fields
    closed, _ = commuting_closure(system)
    before = polynomial_invariants(system, degree)
    after = polynomial_invariants(closed.field_system(), degree)
    assert spans_equal(before.basis, after.basis)


def test_closure_equivalence_sl3(sl3_coadjoint, sl3_coadjoint_echelon):
    for degree in (2, 3):
        before = polynomial_invariants(sl3_coadjoint, degree)
        after = polynomial_invariants(sl3_coadjoint_echelon.field_system(), degree)
        assert spans_equal(before.basis, after.basis)


def test_scaling_fields_preserves_invariants(so3):
    ctx = so3.ctx
    scale = parse_scalar("x^2+1", ctx)
    scaled = FieldSystem(
        ctx, [f.scaled(scale) if i == 0 else f for i, f in enumerate(so3.members)]
    )
    a = polynomial_invariants(so3, 2)
    b = polynomial_invariants(scaled, 2)
    assert spans_equal(a.basis, b.basis)


def test_functional_independence_single():
    ctx = VarContext(["x", "y", "z"])
    assert functional_independence([poly("x^2+y^2+z^2", ctx)]) == 1


def test_functional_independence_dependent_pair():
    ctx = VarContext(["x", "y", "z"])
    f = poly("x*z-y^2", ctx)
    assert functional_independence([f, f * f]) == 1


def test_functional_independence_sl3(sl3_coadjoint):
    entry = catalog.get("sl3")
    polys = [poly(t, sl3_coadjoint.ctx) for t in entry.expected["coadjoint"]]
    assert functional_independence(polys) == 2


def test_functional_independence_empty():
    assert functional_independence([]) == 0


def test_parameters_split_equations():
    # invariants must hold identically in the parameters: a*d/dx + b*d/dy
    # admits no linear invariant even though each slice (a, b fixed) does
    ctx = VarContext(["x", "y"], ["a", "b"])
    X = VectorField(ctx, [parse_scalar("a", ctx), parse_scalar("b", ctx)])
    result = polynomial_invariants(FieldSystem(ctx, [X]), 1)
    assert result.basis == ()


def _killing_matrix(sc):
    """B[m][l] = trace(ad_m ad_l), straight from the structure constants."""
    from fractions import Fraction

    d = sc.dim
    B = [[Fraction(0)] * d for _ in range(d)]
    for m in range(1, d + 1):
        for l in range(1, d + 1):
            total = Fraction(0)
            for k in range(1, d + 1):
                inner = sc.bracket_basis(l, k)
                for i, c in inner.items():
                    total += c * sc.bracket_basis(m, i).get(k, Fraction(0))
            B[m - 1][l - 1] = total
    return B


def _invert(matrix):
    from fractions import Fraction

    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _quadratic_from_matrix(ctx, M):
    from fractions import Fraction

    from jointinv.poly import Polynomial

    import math

    scale = 1
    for row in M:
        for v in row:
            scale = scale * v.denominator // math.gcd(scale, v.denominator)
    terms = {}
    width = len(ctx.names)
    for i in range(len(M)):
        for j in range(len(M)):
            c = int(M[i][j] * scale)
            if not c:
                continue
            mono = [0] * width
            mono[i] += 1
            mono[j] += 1
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + c
    return Polynomial(ctx, terms)


@pytest.mark.parametrize("name", ["so4", "so22"])
def test_killing_quadratics_lie_in_found_spaces(name):
    # independent oracle: the trace-form quadratic (and its inverse form on
    # the dual side) must land inside the searched invariant spaces
    from jointinv.liealg import adjoint_fields, coadjoint_fields

    sc = catalog.get(name).structure
    B = _killing_matrix(sc)
    adjoint = adjoint_fields(sc)
    ad_basis = polynomial_invariants(adjoint, 2).basis
    assert poly_in_span(ad_basis, _quadratic_from_matrix(adjoint.ctx, B))
    coadjoint = coadjoint_fields(sc)
    co_basis = polynomial_invariants(coadjoint, 2).basis
    assert poly_in_span(
        co_basis, _quadratic_from_matrix(coadjoint.ctx, _invert(B))
    )


def test_span_helpers():
    ctx = VarContext(["x", "y"])
    a = [poly("x+y", ctx), poly("x-y", ctx)]
    b = [poly("x", ctx), poly("y", ctx)]
    assert spans_equal(a, b)
    assert poly_in_span(a, poly("3*x", ctx))
    assert not poly_in_span([poly("x+y", ctx)], poly("x", ctx))
    assert poly_in_span(a, poly("0", ctx))
    assert not poly_in_span([], poly("x", ctx))
