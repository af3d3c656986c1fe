import itertools
import json
from fractions import Fraction

import pytest

import semiring_lab as sl


def test_boolean_tables_and_predicates():
    b = sl.boolean()
    assert b.order == 2
    assert [[b.add(x, y) for y in range(2)] for x in range(2)] == [[0, 1], [1, 1]]
    assert sl.is_commutative(b) and sl.is_add_idempotent(b)
    assert sl.is_congruence_simple(b)
    assert sl.special_elements(b)["zero"] == 0


def test_construct_and_reject():
    z2 = sl.FiniteSemiring([[0, 1], [1, 0]], [[0, 0], [0, 1]], "Z2")
    assert sl.is_ring(z2)
    assert sl.are_isomorphic(z2, sl.integers_mod(2))
    with pytest.raises(sl.AxiomViolation):
        sl.FiniteSemiring([[0, 1], [1, 1]], [[0, 0], [1, 0]])
    with pytest.raises(sl.SemiringError):
        sl.FiniteSemiring([[0, 1]], [[0, 0]])


def test_json_round_trip():
    z4 = sl.integers_mod(4)
    again = sl.FiniteSemiring.from_json(z4.to_json())
    assert again == z4


def test_enumeration_counts():
    assert [len(sl.enumerate_semirings(k)) for k in (1, 2, 3)] == [1, 10, 132]


def test_congruences_of_z4():
    z4 = sl.integers_mod(4)
    assert not sl.is_congruence_simple(z4)
    assert len(sl.all_congruences(z4)) == 3
    assert sl.is_congruence(z4, [[0, 2], [1, 3]])
    assert not sl.is_congruence(z4, [[0, 1], [2, 3]])


def test_matrix_semiring():
    t = sl.materialize(sl.boolean(), 2)
    assert t.order == 16
    assert sl.is_congruence_simple(t.product)
    for x in range(t.order):
        assert t.encode(t.decode(x)) == x
    assert t.decode(t.bar(1)) == [1, 1, 1, 1]
    q, p, r = (set(f(1)) for f in (t.q_a, t.p_a, t.r_a))
    assert q <= p and q <= r
    assert not sl.is_congruence_simple(sl.materialize(sl.zero_product_ring(2), 2).product)
    with pytest.raises(sl.SemiringError):
        sl.materialize(sl.integers_mod(4), 2, bound=10)


def test_bi_ideals():
    c3 = sl.max_chain(3)
    assert sl.is_bi_ideal(c3, [2])
    assert sorted(sl.bi_ideal_generated(c3, [1])) == [1, 2]
    assert not sl.is_bi_ideal_simple(c3)


def test_harness_report():
    report = sl.run_harness(sl.boolean(), bi_ideal_layer_n3=False)
    assert report["violations"] == 0
    verdicts = {e["statement"]: e["verdict"] for e in report["entries"]}
    assert verdicts["archimedean_transfer"] in {"holds", "precondition-unmet"}


def _valuation(p, x):
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _member(x, a=Fraction(1, 2), p=2):
    k = _valuation(p, x)
    return a**k < x


def test_qplus_against_fractions():
    for num, den in itertools.product(range(1, 25), range(1, 25)):
        x = Fraction(num, den)
        assert sl.qplus_member("1/2", 2, f"{num}/{den}") == _member(x)
    z = Fraction(sl.qplus_lower_bound_witness("1/2", 2, "3", "5"))
    assert _member(z)
    for bigger in (Fraction(3), Fraction(5)):
        assert bigger == z or _member(bigger - z)
    for m in range(2, 11):
        x = Fraction(sl.qplus_non_divisibility_witness("1/2", 2, m))
        assert _member(x) and not _member(x / m)


def test_cli_round_trip():
    code, out, err = sl.cli(["validate", sl.boolean().to_json()])
    assert code == 0 and err == ""
    assert json.loads(out) == {"valid": True, "order": 2}
    code, out, err = sl.cli(["validate", "--bogus"])
    assert code == 2 and out == ""
