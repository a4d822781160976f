import random
from fractions import Fraction

import pytest

from betti import (
    BettiDiagram,
    CodimMismatchError,
    Laurent,
    MissingColumnError,
    NegativeEntryError,
    NonDivisibleError,
    ShiftBounds,
    ZeroRowError,
    NotIncreasingError,
    pure_diagram,
)

from oracles import alternating_power_sum, dict_derivative, dict_eval

EXAMPLE_A = {(0, 0): 1, (1, 2): 2, (2, 3): 1, (1, 4): 1, (2, 5): 1}


def example_a():
    return BettiDiagram(2, EXAMPLE_A)


def test_canonical_form_drops_zeros_and_merges():
    d = BettiDiagram(2, [((0, 0), 1), ((0, 0), -1), ((1, 2), Fraction(1, 2))])
    assert d.support() == [(1, 2)]
    assert d[0, 0] == 0
    assert d[1, 2] == Fraction(1, 2)


def test_rejects_bad_entries():
    with pytest.raises(ValueError):
        BettiDiagram(1, {(2, 0): 1})
    with pytest.raises(ValueError):
        BettiDiagram(-1)
    with pytest.raises(TypeError):
        BettiDiagram(1, {(0, 0): 0.5})


def test_validate_example_diagram():
    assert example_a().is_valid()
    assert example_a().violations() == []


def test_validate_zero_diagram():
    for p in range(5):
        assert BettiDiagram.zero(p).is_valid()


def test_validate_single_entry_fails_first_equation():
    d = BettiDiagram(1, {(0, 0): 1})
    violated = d.violations()
    assert [m for m, _ in violated] == [0]
    assert violated[0][1] == 1


def test_validate_agrees_with_derivative_oracle():
    # the power-sum equations say exactly that the m-th derivative of the
    # alternating polynomial vanishes at 1 for m < codim
    rng = random.Random(37)
    for _ in range(120):
        p = rng.randint(0, 3)
        entries = {}
        for _ in range(rng.randint(0, 12)):
            key = (rng.randint(0, p), rng.randint(-3, 8))
            entries[key] = Fraction(rng.randint(-4, 4))
        if rng.random() < 0.5:
            # plant a valid diagram to exercise both verdicts
            entries = {}
            for kind, c in _random_pure_combo(rng, p):
                for (i, j), v in pure_diagram(kind).items():
                    entries[i, j] = entries.get((i, j), Fraction(0)) + c * v
        diagram = BettiDiagram(p, entries)
        s_dict = {}
        for (i, j), v in diagram.items():
            s_dict[j] = s_dict.get(j, Fraction(0)) + (-1) ** i * v
        ok = True
        work = dict(s_dict)
        for _ in range(p):
            if dict_eval(work, 1) != 0:
                ok = False
                break
            work = dict_derivative(work)
        assert diagram.is_valid() == ok
        for m, residual in diagram.violations():
            assert residual == alternating_power_sum(dict(diagram.items()), m)


def _random_pure_combo(rng, p):
    terms = []
    for _ in range(rng.randint(1, 3)):
        start = rng.randint(-2, 2)
        kind = [start]
        for _ in range(p):
            kind.append(kind[-1] + rng.randint(1, 3))
        terms.append((tuple(kind), Fraction(rng.randint(1, 5), rng.randint(1, 4))))
    return terms


def test_s_polynomial_examples():
    assert example_a().s_polynomial() == Laurent({0: 1, 2: -2, 3: 1, 4: -1, 5: 1})
    assert pure_diagram((0, 2, 3)).s_polynomial() == Laurent({0: 1, 2: -3, 3: 2})
    assert BettiDiagram.zero(2).s_polynomial() == Laurent()


def test_h_vector_examples():
    assert pure_diagram((0, 2, 3)).h_vector() == Laurent({0: 1, 1: 2})
    koszul_23 = BettiDiagram(2, {(0, 0): 1, (1, 2): 1, (1, 3): 1, (2, 5): 1})
    assert koszul_23.h_vector() == Laurent({0: 1, 1: 2, 2: 2, 3: 1})
    assert BettiDiagram.zero(3).h_vector() == Laurent()


def test_h_vector_rejects_invalid_diagram():
    with pytest.raises(NonDivisibleError):
        BettiDiagram(1, {(0, 0): 1}).h_vector()


def test_multiplicity_examples():
    assert pure_diagram((0, 2, 3)).multiplicity() == 3
    assert pure_diagram((1, 3, 5)).multiplicity() == 4
    # the example diagram: h-vector (1, 2, 1, 1) sums to 5
    assert example_a().h_vector() == Laurent({0: 1, 1: 2, 2: 1, 3: 1})
    assert example_a().multiplicity() == 5


def test_multiplicity_is_linear():
    rng = random.Random(41)
    for _ in range(20):
        p = rng.randint(1, 3)
        a = BettiDiagram(p, {(i, j): v for (i, j), v in _combo_entries(rng, p)})
        b = BettiDiagram(p, {(i, j): v for (i, j), v in _combo_entries(rng, p)})
        c = Fraction(rng.randint(1, 7), rng.randint(1, 5))
        assert (a + b).multiplicity() == a.multiplicity() + b.multiplicity()
        assert (c * a).multiplicity() == c * a.multiplicity()


def _combo_entries(rng, p):
    entries = {}
    for kind, c in _random_pure_combo(rng, p):
        for (i, j), v in pure_diagram(kind).items():
            entries[i, j] = entries.get((i, j), Fraction(0)) + c * v
    return entries.items()


def test_shifts_examples():
    assert example_a().min_shifts() == (0, 2, 3)
    assert example_a().max_shifts() == (0, 4, 5)
    pd = pure_diagram((1, 4, 6))
    assert pd.min_shifts() == pd.max_shifts() == (1, 4, 6)
    ragged = BettiDiagram(2, {(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 2): 2})
    assert ragged.min_shifts() == (0, 1, 2)
    assert ragged.max_shifts() == (0, 2, 2)


def test_shifts_missing_column():
    with pytest.raises(MissingColumnError) as info:
        BettiDiagram(2, {(0, 0): 1, (2, 3): 1}).min_shifts()
    assert info.value.column == 1
    with pytest.raises(MissingColumnError):
        BettiDiagram.zero(0).max_shifts()


def test_add_scale_and_codim_guard():
    a = example_a()
    assert a + BettiDiagram.zero(2) == a
    assert a - a == BettiDiagram.zero(2)
    assert 2 * a == a + a
    with pytest.raises(CodimMismatchError):
        a + BettiDiagram.zero(1)


def test_normalize():
    scaled = 3 * pure_diagram((0, 2, 5))
    assert scaled.normalize() == pure_diagram((0, 2, 5))
    with pytest.raises(ZeroRowError):
        BettiDiagram(1, {(1, 1): 1}).normalize()


def test_integer_rescale():
    rescaled, s = pure_diagram((0, 2, 5)).integer_rescale()
    assert s == 3
    assert rescaled == BettiDiagram(2, {(0, 0): 3, (1, 2): 5, (2, 5): 2})
    same, s = example_a().integer_rescale()
    assert s == 1 and same == example_a()


def test_apply_cancellation():
    d = BettiDiagram(2, {(0, 0): 1, (1, 4): 1, (2, 4): 1})
    cancelled = d.apply_cancellation(1, 4, 1)
    assert cancelled == BettiDiagram(2, {(0, 0): 1})
    assert cancelled.s_polynomial() == d.s_polynomial()
    assert d.apply_cancellation(1, 4, 0) == d
    with pytest.raises(NegativeEntryError):
        d.apply_cancellation(1, 4, 2)
    with pytest.raises(NegativeEntryError):
        d.apply_cancellation(1, 4, -1)


def test_cancellation_preserves_s_polynomial_randomly():
    rng = random.Random(53)
    for _ in range(30):
        p = rng.randint(1, 3)
        entries = dict(_combo_entries(rng, p))
        diagram = BettiDiagram(p, entries)
        spots = [
            (i, j)
            for (i, j) in diagram.support()
            if i < p and diagram[i + 1, j] > 0 and diagram[i, j] > 0
        ]
        if not spots:
            continue
        k, l = spots[rng.randrange(len(spots))]
        b = min(diagram[k, l], diagram[k + 1, l]) * Fraction(rng.randint(1, 3), 3)
        cancelled = diagram.apply_cancellation(k, l, b)
        assert cancelled.s_polynomial() == diagram.s_polynomial()
        assert cancelled.h_vector() == diagram.h_vector()


def test_valid_diagrams_divide_exactly():
    rng = random.Random(59)
    for _ in range(40):
        p = rng.randint(1, 4)
        diagram = BettiDiagram(p, dict(_combo_entries(rng, p)))
        s = diagram.s_polynomial()
        h = diagram.h_vector()
        power = Laurent({0: 1, 1: -1})
        product = h
        for _ in range(p):
            product = product * power
        assert product == s


def test_shift_bounds_validation():
    bounds = ShiftBounds((0, 1, 3), (0, 3, 4))
    assert bounds.codim == 2
    with pytest.raises(NotIncreasingError):
        ShiftBounds((0, 0), (1, 2))
    with pytest.raises(ValueError):
        ShiftBounds((0, 2), (0, 1))
