import json

import pytest

from romankit.coefficients import GAMMA
from romankit.errors import DomainError, UsageError
from romankit.factorials import KNUTH, ROMAN, TRIVIAL, q_scheme
from romankit.identities import (
    IDENTITIES,
    check_complementation,
    check_corollary_sum,
    check_iterative,
    check_knuth_factorial_product,
    check_pascal,
    check_pascal_gamma,
    check_romans_identity,
    check_rotation_reflection,
    verify_grid,
)
from romankit.numerics import parse_eps

SCHEMES = [ROMAN, KNUTH, TRIVIAL, q_scheme(2), q_scheme("3/2"), GAMMA]


@pytest.mark.parametrize("scheme", SCHEMES, ids=lambda s: s.name)
def test_complementation(scheme):
    for n, k in [(6, -2), (-3, -2), (4, 4), (-5, 7)]:
        v = check_complementation(n, k, scheme)
        assert v.applicable and v.holds, v


def test_complementation_sides():
    v = check_complementation(6, -2, ROMAN)
    assert v.lhs == v.rhs == "-1/56"


@pytest.mark.parametrize("args", [(5, 3, 1), (4, 4, 4), (-2, 3, -1), (-7, -3, 5)])
@pytest.mark.parametrize("scheme", [ROMAN, KNUTH, GAMMA], ids=lambda s: s.name)
def test_iterative(args, scheme):
    assert check_iterative(*args, scheme=scheme).holds


def test_pascal():
    v = check_pascal(5, 2)
    assert v.applicable and v.holds
    assert not check_pascal(0, 3).applicable
    assert not check_pascal(3, 3).applicable
    v = check_pascal(-2, -5)
    assert v.applicable and v.holds
    assert check_pascal(-2, -5, KNUTH).holds


def test_pascal_fails_for_trivial_scheme():
    # every trivial coefficient is 1, so 1 = 1 + 1 is false
    assert not check_pascal(5, 2, TRIVIAL).holds


def test_pascal_gamma():
    origin = check_pascal_gamma(0, 0)
    assert not origin.applicable and not origin.holds
    assert (origin.lhs, origin.rhs) == ("1", "2")
    assert check_pascal_gamma(5, 2).holds
    assert check_pascal_gamma(-1, -1).holds


def test_corollary():
    v = check_corollary_sum(2, 1, 3)
    assert v.applicable and v.holds
    # classical hockey stick: sum_{m=3}^{7} C(m, 2) = C(8, 3) - C(3, 3) = 55
    v = check_corollary_sum(3, 2, 4)
    assert v.applicable and v.lhs == "55" and v.holds
    assert not check_corollary_sum(2, 2, 4).applicable
    v = check_corollary_sum(-6, -3, 2)
    assert v.applicable == False or v.holds  # noqa: E712
    with pytest.raises(DomainError):
        check_corollary_sum(1, 1, -1)


@pytest.mark.parametrize("n, k", [(1, 2), (0, 0), (1, -1), (-4, 3)])
def test_rotation_reflection(n, k):
    v = check_rotation_reflection(n, k)
    assert v.holds and v.details["proof_holds"]


def test_rotation_proof_form_example():
    v = check_rotation_reflection(1, -1)
    assert v.details["proof_lhs"] == "1/2" == v.details["proof_rhs"]


@pytest.mark.parametrize("n, k, product", [(2, 0, "-1/2"), (1, 0, "1"), (-2, 1, "1/3")])
def test_romans_identity(n, k, product):
    v = check_romans_identity(n, k)
    assert v.lhs == product and v.holds
    assert "printed_rhs" in v.details


def test_romans_identity_printed_sign_fails_at_2_0():
    v = check_romans_identity(2, 0)
    assert v.details["printed_holds"] is False
    with pytest.raises(DomainError):
        check_romans_identity(3, 3)


@pytest.mark.parametrize("n, product", [(2, "-2"), (0, "1"), (5, "5")])
def test_factorial_product(n, product):
    v = check_knuth_factorial_product(n)
    assert v.lhs == product and v.holds
    assert v.details["form"] == "paper-sign-adjusted"


def test_verdict_renderings_roundtrip():
    for v in [check_iterative(-3, 2, 5, KNUTH), check_romans_identity(-4, 2), check_pascal(4, 9, KNUTH)]:
        assert parse_eps(v.lhs) == parse_eps(v.rhs) or not v.holds
        assert str(parse_eps(v.lhs)) == v.lhs


@pytest.mark.parametrize(
    "identity, bounds",
    [("complementation", (-40, 40)), ("pascal", (-30, 30)), ("pascal-gamma", (-30, 30))],
)
def test_verify_grid_examples(identity, bounds):
    r = verify_grid(identity, bounds, ROMAN)
    assert r.failed == 0 and r.applicable > 0


def test_verify_grid_report_shape():
    r = verify_grid("pascal", (-3, 3), TRIVIAL)
    d = json.loads(r.to_json())
    assert set(d) >= {"identity", "bounds", "scheme", "applicable", "held", "failed", "failures"}
    assert d["failed"] == len(d["failures"]) > 0
    assert [f["args"] for f in d["failures"]] == sorted(f["args"] for f in d["failures"])
    assert d["scheme"] == "trivial"


def test_verify_grid_deterministic():
    a = verify_grid("pascal", (-4, 4), TRIVIAL).to_json()
    b = verify_grid("pascal", (-4, 4), TRIVIAL).to_json()
    assert a == b


def test_verify_grid_per_argument_bounds():
    r = verify_grid("corollary-sum", [(-3, 3), (-3, 3), (-2, 2)])
    assert r.bounds[2] == (0, 2)
    with pytest.raises(DomainError):
        verify_grid("iterative", [(-1, 1), (-1, 1)])


def test_unknown_identity():
    with pytest.raises(UsageError):
        verify_grid("bogus", (-1, 1))


def test_registry_names():
    assert set(IDENTITIES) == {
        "complementation", "iterative", "pascal", "pascal-gamma", "corollary-sum",
        "rotation-reflection", "romans-identity", "knuth-factorial-product",
    }
