import pytest

import lcomplex as lc


@pytest.fixture(scope="module")
def t2():
    return lc.build_table(2, 1 << 16)


@pytest.fixture(scope="module")
def t1():
    return lc.build_table(1, 20000)


def test_point_values(t2):
    assert t2.l == 2 and t2.max_n == 1 << 16 and len(t2) == 1 << 15
    assert t2.complexity(54) == 8
    assert t2[216] == 9
    assert t2.complexity(100000 // 4) == t2[25000]


def test_witness_round_trip(t2):
    w = t2.witness(216)
    assert lc.evaluate(w, 2) == 216
    assert lc.leaf_count(w, 2) == 9


def test_errors_carry_codes(t2):
    with pytest.raises(lc.LcxError) as e:
        t2.complexity(3)
    assert e.value.code == "NotMultipleOfL"
    with pytest.raises(lc.LcxError) as e:
        t2.complexity(1 << 20)
    assert e.value.code == "OutOfRange"
    with pytest.raises(ValueError):
        lc.build_table(100, 10**6)


def test_bounds_and_classification():
    assert lc.lower_bound(6, 2) == 3
    assert lc.upper_bound_digits(20, 2) == 5
    assert lc.leaf_count(lc.digit_expression(20, 2), 2) == 5
    c = lc.classify(1080)
    assert c["decomposition"] == [10, 5, 4, 3]
    assert c["m_plus_2"] == ["FormD{10}"]
    assert c["lower_bound"] == 12
    assert lc.classify(24)["m_plus_1"] == "TwoPowers{4,3}"
    assert lc.refined_lower_bound_2(62) == 8


def test_oracle_agrees_with_table(t2):
    oracle = lc.reachable_sets_oracle(2, 10)
    for v, c in oracle.items():
        assert t2[v] == c


def test_defect_histogram():
    assert lc.defect_histogram(lc.build_table(2, 16)) == {0: 4, 1: 3, 2: 1}


def test_serialization(t2, tmp_path):
    data = t2.to_bytes()
    assert data[:4] == b"LCXT"
    assert lc.ComplexityTable.from_bytes(data) == t2
    path = tmp_path / "t2.lcxt"
    t2.save(path)
    assert path.read_bytes() == data
    assert lc.ComplexityTable.load(path) == t2
    with pytest.raises(lc.LcxError) as e:
        lc.ComplexityTable.from_bytes(data[:-1])
    assert e.value.code == "Truncated"


def test_reports(t1, t2):
    assert lc.verify_six_ten(t2)["status"] == "pass"
    assert lc.check_a_set(2, 54, 2, t2) == ("NonMember", 1)
    r = lc.verify_a_set(t2, 54)
    assert r["findings"]["verdict"] == "NonMember"
    assert lc.verify_conjecture_l1(t1, 14, 9)["status"] == "bounded-pass"
    q5 = lc.verify_question5(11, 100, t1, t2)
    assert q5["status"] == "fail"
    assert q5["counterexamples"][0]["input"]["value"] == 40
    assert lc.verify_question2(4, 2, 0, 4000)["status"] == "fail"
    assert lc.verify_oracle_equivalence(3, 6)["status"] == "pass"
    assert lc.verify_witnesses(t2, 200, 7)["status"] == "pass"


def test_module_location():
    # Under ctest the build-tree package comes first on the path.
    assert lc.__file__.endswith("__init__.py")
