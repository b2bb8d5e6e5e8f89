from fractions import Fraction as F

import pytest

import ypa.heisenberg as hs
from ypa.plancherel import PLANCHEREL, boolean_cumulant, f_pl, moment
from ypa.surd import Surd, sqrt_fraction
from ypa.tangle import evaluate
from ypa.young import diagrams_up_to, enumerate_loops, parse_loop


def test_cross_values_spec_examples():
    lp = parse_loop("[2] v [1] v [] ^ [1] ^ [2]")
    assert hs.cross_id(lp) == sqrt_fraction(F(2))
    assert hs.cross(lp) == sqrt_fraction(F(2))
    assert hs.cross_ex(lp).is_zero()
    lp2 = parse_loop("[2,1] v [2] v [1] ^ [1,1] ^ [2,1]")
    assert hs.cross_ex(lp2) == Surd.from_rational(F(3, 2))
    assert hs.cross_id(lp2).is_zero()


def test_cross_signature_check():
    with pytest.raises(ValueError, match="signature"):
        hs.cross(parse_loop("[1] v [] ^ [1]"))


def test_cross_support_carrying_boxes():
    # t_id lives on loops with equal middles, t_ex on exchanged middles.
    for base in diagrams_up_to(5):
        for loop in enumerate_loops(base, hs.CROSS_SIGNATURE):
            l0, l1, l2, l3, _ = loop.diagrams
            if l1 == l3:
                assert hs.cross_ex(loop).is_zero()
                assert not hs.cross_id(loop).is_zero()
            else:
                assert hs.cross_id(loop).is_zero()
                assert not hs.cross_ex(loop).is_zero()
            assert hs.cross(loop) == hs.cross_id(loop) + hs.cross_ex(loop)


def test_cross_square_radicand_structure():
    # t_id^2 and t_ex^2 times f(l0)/f(l2) are rational.
    for base in diagrams_up_to(5):
        for loop in enumerate_loops(base, hs.CROSS_SIGNATURE):
            ratio = f_pl(loop.diagrams[0]) / f_pl(loop.diagrams[2])
            for fn in (hs.cross_id, hs.cross_ex):
                v = fn(loop)
                assert (v * v * ratio).is_rational()


def test_dot_examples():
    assert hs.dot_value(parse_loop("[2] v [1] ^ [2]")) == sqrt_fraction(F(2))
    assert hs.dot_value(parse_loop("[1,1] v [1] ^ [1,1]")) == -sqrt_fraction(F(2))
    assert hs.dot_value(parse_loop("[1] v [] ^ [1]")).is_zero()


def test_dot_equals_composed_tangle():
    for base in diagrams_up_to(6):
        for loop in enumerate_loops(base, (-1, 1)):
            assert hs.dot_value(loop) == evaluate(hs.RIGHT_TURN, loop, PLANCHEREL)


@pytest.mark.parametrize("name", hs.RELATION_IDS)
def test_relations_weight_4(name):
    report = hs.verify_relation(name, 4)
    assert report.verified, report.failures[:3]
    assert report.loops_checked > 0


def test_relation_spot_values():
    # ind_ind on an equal-middle loop equals sqrt(f(l2)/f(l0)).
    loop = parse_loop("[2,1] v [1,1] v [1] ^ [1,1] ^ [2,1]")
    lhs = evaluate(hs.IND_IND_LHS, loop, PLANCHEREL)
    assert lhs == sqrt_fraction(f_pl((1,)) / f_pl((2, 1)))
    # res_ind on loops with l0 = l2, l1 = l3 equals 1 - f(l1)/f(l0).
    for loop in enumerate_loops((2, 1), (1, -1, 1, -1)):
        l0, l1, l2, l3, _ = loop.diagrams
        if l0 == l2 and l1 == l3:
            lhs = evaluate(hs.RES_IND_LHS, loop, PLANCHEREL)
            assert lhs == Surd.from_rational(1) - Surd.from_rational(
                f_pl(l1) / f_pl(l0)
            )


def test_verify_relation_rejects_bad_input():
    with pytest.raises(ValueError):
        hs.verify_relation("nosuch", 4)
    with pytest.raises(ValueError):
        hs.verify_relation("ybe", 0)


def test_report_json_shape():
    report = hs.verify_relation("left_circle", 4)
    d = report.to_json_dict()
    assert set(d) == {"relation", "max_weight", "loops_checked", "failures", "elapsed_ms"}
    assert d["failures"] == []


def test_jobs_do_not_change_the_report():
    a = hs.verify_relation("ind_res", 4, jobs=1).to_json_dict()
    b = hs.verify_relation("ind_res", 4, jobs=3).to_json_dict()
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_cycle_elements():
    c1 = hs.cycle_element(1)
    assert c1.evaluate(parse_loop("[2] v [1] ^ [2]")) == Surd.from_rational(1)
    c2 = hs.cycle_element(2)
    lp = parse_loop("[2] v [1] v [] ^ [1] ^ [2]")
    assert c2.evaluate(lp) == hs.cross(lp)
    with pytest.raises(ValueError):
        hs.cycle_element(0)


def test_character_diagram_spot_values():
    assert hs.character_diagram((2,), (2,)) == 2
    assert hs.character_diagram((1, 1), (2,)) == -2
    assert hs.character_diagram((3,), (3,)) == 6
    assert hs.character_diagram((2, 1), (3,)) == -3
    assert hs.character_diagram((1,), (3,)) == 0  # |pi| > |lam| branch
    assert hs.character_diagram((2, 1), (1,)) == 3


def test_character_diagram_rejects_non_partition():
    with pytest.raises(ValueError):
        hs.character_diagram((2,), (1, 2))


def test_character_from_cycle_tangles():
    for lam in diagrams_up_to(6):
        for k in (1, 2, 3):
            v = hs.character_from_cycle_tangle(lam, k)
            assert v.is_rational()
            assert v.as_fraction() == hs.character_diagram(lam, (k,))


def test_moment_and_cumulant_diagrams():
    assert hs.moment_diagram((1,), 2) == 1
    assert hs.moment_diagram((), 3) == 0
    assert hs.cumulant_diagram((2, 1), 0) == 3
    for lam in diagrams_up_to(6):
        for k in range(1, 5):
            assert hs.moment_diagram(lam, k) == moment(lam, k)
            assert hs.cumulant_diagram(lam, k) == boolean_cumulant(lam, k + 2)


def test_kerov_expansion_examples():
    exp2 = hs.kerov_boolean_expansion((2,), 6)
    assert exp2 == {((3, 1),): F(1)}
    exp3 = hs.kerov_boolean_expansion((3,), 6)
    assert exp3 == {((4, 1),): F(1), ((2, 2),): F(-1), ((2, 1),): F(1)}
    exp1 = hs.kerov_boolean_expansion((1,), 4)
    assert exp1 == {((2, 1),): F(1)}


def test_kerov_p_polynomial_signs():
    exp3 = hs.kerov_boolean_expansion((3,), 6)
    p = hs.kerov_p_polynomial((3,), exp3)
    assert all(c == 1 for c in p.values())
    assert hs.render_expansion(p, var="x") == "x2 + x2^2 + x4"


def test_kerov_underdetermined():
    with pytest.raises(hs.KerovUnderdeterminedError):
        hs.kerov_boolean_expansion((3,), 1)


def test_relation_sides_zero_rhs():
    sides = hs.relation_sides("left_turn")
    loop = parse_loop("[2] v [1] ^ [2]")
    assert sides.rhs_value(loop).is_zero()
