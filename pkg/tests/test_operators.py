import random
from fractions import Fraction

import pytest

from dgseries import corpus, testing
from dgseries.exact import Poly
from dgseries.operators import (
    Operator,
    OperatorTerm,
    analytic_op_eval,
    op_apply,
    op_apply_counted,
    op_compose,
    shift_weight_apply,
    theta_apply,
)
from dgseries.series import Series, eval_series, make_series

t = Poly.var(1)
ONE = Poly.const(1, 1)
ELL = (1,)


def ones(N, ell=ELL):
    return make_series(1, ell, (N,), [(k, 1) for k in range(N + 1)])


def op1(*terms, ell=ELL):
    return Operator(ell, [OperatorTerm(c, (b,), q if isinstance(q, Poly) else Poly.const(1, q)) for c, b, q in terms])


def test_theta_apply():
    assert dict(theta_apply(ones(3)).coeffs) == {(1,): 1, (2,): 2, (3,): 3}
    F = make_series(2, (1, 1), (3, 3), [((1, 2), 5), ((0, 0), 7)])
    assert dict(theta_apply(F, 1).coeffs) == {(1, 2): 10}
    assert theta_apply(F, 0)[(0, 0)] == 0


def test_shift_weight_apply():
    F = make_series(1, ELL, (3,), [(0, 1), (1, 2)])
    res = shift_weight_apply(F, (1,))
    assert dict(res.series.coeffs) == {(1,): 1, (2,): 2}
    assert res.dropped == 0
    assert shift_weight_apply(F, (0,)).series == F
    G = make_series(2, (1, 1), (2, 2), [((0, 0), 1)])
    assert dict(shift_weight_apply(G, (1, 1)).series.coeffs) == {(1, 1): 1}
    assert shift_weight_apply(F, (3,)).dropped == 1


def test_op_apply_examples():
    F = ones(3)
    assert op_apply(Operator.identity(ELL), F) == F
    assert dict(op_apply(op1((1, 0, t)), F).coeffs) == {(1,): 1, (2,): 2, (3,): 3}
    N = 10
    out = op_apply(corpus.example3_operator(), ones(N))
    expected = {(y,): (y - 2) ** 3 + (y - 3) for y in range(3, N + 1)}
    assert dict(out.coeffs) == {k: v for k, v in expected.items() if v}
    assert out[2] == 0


def test_op_apply_rejects_mismatch():
    with pytest.raises(ValueError):
        op_apply(Operator.identity((2,)), ones(3))
    with pytest.raises(ValueError):
        op_apply(Operator.identity((1, 1)), ones(3))


def test_drop_count():
    res = op_apply_counted(op1((1, 2, 1)), ones(4))
    assert res.dropped == 2
    assert dict(res.series.coeffs) == {(k,): 1 for k in range(2, 5)}


def test_canonical_form_merges_and_hoists():
    op = op1((1, 1, 1), (2, 1, 1), (1, 0, t), (-1, 0, t), (3, 2, 2 * t))
    assert [(x.coeff, x.beta, x.q) for x in op.terms] == [(3, (1,), ONE), (1, (2,), 6 * t)]
    assert op1((-1, 1, 1)).terms[0].coeff == -1


def test_compose_examples():
    assert op1((1, 1, t)) @ op1((1, 1, 1)) == op1((1, 2, t + 1))
    op = corpus.schroeder_operator()
    assert Operator.identity(ELL) @ op == op
    left = op1((1, 0, t)) @ op1((1, 1, 1))
    right = op1((1, 1, 1)) @ op1((1, 0, t))
    assert left == op1((1, 1, t + 1))
    assert right == op1((1, 1, t))
    assert left != right


def test_compose_by_action_on_basis_terms():
    # (1,1,t) o (1,1,1) sends b_x to (x+1) b_{x+2}
    composed = op_compose(op1((1, 1, t)), op1((1, 1, 1)))
    for x in range(5):
        b = make_series(1, ELL, (10,), [(x, 1)])
        assert dict(op_apply(composed, b).coeffs) == ({(x + 2,): x + 1} if x + 1 else {})


def test_analytic_examples():
    F = make_series(1, ELL, (1,), [(0, 1), (1, 1)])
    theta = Operator.theta(ELL)
    assert analytic_op_eval(theta, F, [1], [4]) == 4
    assert eval_series(op_apply(theta, F), [1], [4]) == 4
    assert analytic_op_eval(Operator.identity(ELL), F, [3], [5]) == eval_series(F, [3], [5])
    G = make_series(1, ELL, (2,), [(0, 1)])
    assert analytic_op_eval(Operator.shift(ELL, (1,)), G, [2], [3]) == 6


def test_analytic_refuses_ell_zero_with_theta():
    F = make_series(1, (0,), (2,), [(1, 1)])
    with pytest.raises(ValueError):
        analytic_op_eval(Operator.theta((0,)), F, [1], [2])
    assert analytic_op_eval(Operator.shift((0,), (1,)), F, [2], [5]) == eval_series(
        op_apply(Operator.shift((0,), (1,)), F), [2], [5]
    )


def test_theta_with_ell_zero_is_coefficientwise():
    F = make_series(1, (0,), (3,), [(2, 5)])
    assert dict(theta_apply(F).coeffs) == {(2,): 10}


def _random_instance(rng):
    dim = rng.randint(1, 2)
    ell = tuple(rng.randint(1, 3) for _ in range(dim))
    window = tuple(rng.randint(2, 5) for _ in range(dim))
    return ell, window


def test_commutation_law():
    rng = random.Random(5)
    for _ in range(50):
        ell, window = _random_instance(rng)
        F = testing.series(rng, ell, window)
        beta = tuple(rng.randint(0, 2) for _ in ell)
        for j in range(len(ell)):
            lhs = theta_apply(shift_weight_apply(F, beta).series, j)
            scaled = Series(ell, window, {x: (x[j] + beta[j]) * v for x, v in F.items()})
            assert lhs == shift_weight_apply(scaled, beta).series
            n = len(ell)
            theta_j = Operator(ell, [OperatorTerm(1, (0,) * n, Poly.var(n, j))])
            s_beta = Operator(ell, [OperatorTerm(1, beta, Poly.const(n, 1))])
            rhs_op = Operator(ell, [OperatorTerm(1, beta, Poly.var(n, j) + beta[j])])
            assert theta_j @ s_beta == rhs_op


def test_composition_homomorphism():
    rng = random.Random(6)
    for _ in range(50):
        ell, window = _random_instance(rng)
        a, b = testing.operator(rng, ell), testing.operator(rng, ell)
        F = testing.series(rng, ell, window)
        assert op_apply(op_compose(a, b), F) == op_apply(a, op_apply(b, F))


def test_lemma3_at_operator_level():
    rng = random.Random(7)
    F = testing.series(rng, (2,), (8,), density=1.0)
    for (x,), v in F.items():
        single = make_series(1, (2,), (8,), [(x, v)])
        assert op_apply(Operator.from_poly((2,), t - x), single).is_zero()


def test_analytic_oracle_agrees():
    rng = random.Random(8)
    for _ in range(15):
        ell, window = _random_instance(rng)
        op = testing.operator(rng, ell)
        F = testing.series(rng, ell, window)
        # widen so nothing is dropped and the oracle sees the whole image
        wide = tuple(w + 2 for w in window)
        F = F.with_window(wide)
        G, dropped = op_apply_counted(op, F)
        assert dropped == 0
        xi = [testing.rational(rng) for _ in ell]
        for _ in range(3):
            z = [Fraction(rng.randint(-3, 12)) for _ in ell]
            assert analytic_op_eval(op, F, xi, z) == eval_series(G, xi, z)


def test_dfinite_form_embeds():
    from dgseries.dfinite import dfinite_operator

    op = dfinite_operator(ELL, {1: {0: 1, 1: -6, 2: 1}, 0: {1: 3, 2: -1}})
    assert op == corpus.schroeder_operator()
