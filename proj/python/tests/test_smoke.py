import pytest

import dlknot


def test_parse_and_invariants():
    d = dlknot.Diagram("U1+ D+ D+ O1+ D+")
    assert d.crossing_count == 1
    assert d.double_line_count == 3
    assert dlknot.degree(d) == 3
    assert dlknot.winding_parity(d, 1) == (2, 3)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        dlknot.parse("U1+ O1+ U1+")


def test_crossing_change_gives_partner():
    d = dlknot.one_crossing(2, -2, 1)
    changed = dlknot.apply(d, dlknot.Move("CrossingChange 1"))
    assert dlknot.canonically_equal(changed, dlknot.one_crossing(-3, 3, -1))
    assert dlknot.partner(2, -2, 1) == (-3, 3, -1)


def test_invert_round_trip():
    d = dlknot.parse("U1+ D- O1+ D+")
    for m in dlknot.enumerate_moves(d, "CrossingChange,CrossingSliding,DlPairAdd5"):
        e = dlknot.apply(d, m)
        for step in dlknot.invert(m, d):
            e = dlknot.apply(e, step)
        assert dlknot.canonically_equal(e, d)


def test_projection_and_removal():
    d = dlknot.parse("U1+ D- O1+ D+")
    p = dlknot.project_winding_parity(d)
    assert all(v == 0 for v, _ in dlknot.parities(p))
    cert = dlknot.remove_double_lines(d)
    assert cert["result"].double_line_count == 0
    assert dlknot.canonically_equal(dlknot.replay(cert["trace"]), cert["result"])


def test_essential_counts():
    assert dlknot.essential_count(dlknot.one_crossing(2, 3, 1)) == 5
    assert dlknot.essential_count(dlknot.one_crossing(-3, 3, 1)) == 4
    assert dlknot.essential_count_closed_form(-3, 3) == 4
    reports = dlknot.important_subsets(dlknot.one_crossing(-3, 3, 1), 2)
    assert reports[0]["cardinality"] == 4 and reports[0]["essential"]


def test_catalog_and_links():
    assert len(dlknot.degree_k_family(5)) >= 2
    assert dlknot.make_L(1, -1, 1) == "U1+ C+ O1+ C-"
    assert dlknot.linking_number("C+ C+") == 2
    v = dlknot.separability_check(dlknot.make_L(-1, 1, 1))
    assert v["separable"] and v["certificate"].startswith("start")
    v = dlknot.separability_check(dlknot.make_L(2, -2, 1))
    assert not v["separable"] and v["obstruction"]["parity"] == 2


def test_search():
    r = dlknot.search(dlknot.one_crossing(1, -1, 1), dlknot.one_crossing(-2, 2, -1))
    assert r["found"]
    assert dlknot.canonically_equal(dlknot.replay(r["trace"]), dlknot.one_crossing(-2, 2, -1))
