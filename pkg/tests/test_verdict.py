import pytest

from rlcm.verdict import Status, Verdict, conjunction


def test_bounded_holds_needs_bound():
    with pytest.raises(ValueError):
        Verdict.holds()
    assert Verdict.holds(bound=3).bound == 3
    assert Verdict.holds(exact=True).exact


def test_fails_is_exact():
    v = Verdict.fails("witness", bound=4)
    assert v.is_fails and v.exact and v.witness == "witness"


def test_not_usable_as_bool():
    with pytest.raises(TypeError):
        bool(Verdict.unknown(2))


@pytest.mark.parametrize("v, text", [
    (Verdict.holds(bound=6, reason="via MSF finiteness"), "HOLDS (bound=6, via MSF finiteness)"),
    (Verdict.holds(exact=True, reason="right cancellative"), "HOLDS (exact, right cancellative)"),
    (Verdict.unknown(5), "UNKNOWN at bound 5"),
    (Verdict.fails(1, bound=2), "FAILS (bound=2)"),
])
def test_describe(v, text):
    assert v.describe() == text


def test_conjunction_kleene():
    h, u, f = Verdict.holds(exact=True), Verdict.unknown(3), Verdict.fails("x")
    assert conjunction([h, u]).status is Status.UNKNOWN
    assert conjunction([u, f]).status is Status.FAILS
    assert conjunction([h, h]).exact
    mixed = conjunction([h, Verdict.holds(bound=4), Verdict.holds(bound=2)])
    assert mixed.is_holds and not mixed.exact and mixed.bound == 2
    assert conjunction([]).is_holds
