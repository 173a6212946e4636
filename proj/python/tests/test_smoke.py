import scy


def test_group_orders():
    o = scy.group_orders()
    assert o["linear"] == 98304
    assert o["projective"] == 24576
    assert (o["G"], o["H"], o["H0"]) == (256, 128, 64)


def test_indices():
    r = scy.indices()
    assert r["Gamma20[2]n"] == 6144
    assert r["HatGamma20[2]n"] == 12288


def test_phi_of_lower_translation():
    m = [1, 0, 0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1]
    assert scy.phi(m) == "(Y0,-i*Y1,Y2,-i*Y3,X1,X0,X3,X2)"


def test_theta_relation_at_a_point():
    z0, z1, z2 = 1.1j, 0.2 + 0.3j, 0.1 + 1.4j
    y0 = scy.theta(0, 0, z0, z1, z2)
    xs = [scy.theta(a, 0, 2 * z0, 2 * z1, 2 * z2) for a in range(4)]
    assert abs(y0 ** 2 - sum(x * x for x in xs)) < 1e-10 * abs(y0) ** 2
    assert abs(scy.theta(1, 1, z0, z1, z2)) < 1e-13
    assert scy.verify_relations(20, 3) < 1e-9


def test_nodes():
    ns = scy.nodes()
    assert len(ns) == 96
    assert all(len(p) == 8 for p in ns)
    assert sum(1 for p in ns if p[1] == "0" and p[3] == "0") == 16


def test_fixed_census():
    assert scy.fixed_census(2) == "16 nodes"
    assert scy.fixed_census(3) == "4 elliptic"


def test_reports(tmp_path):
    cache = str(tmp_path / "picard.json")
    t = scy.report(0, cache)
    assert (t["pic_resolution"], t["euler"]) == (32, 64)
    r = scy.report(10, cache)
    assert (r["pic_resolution"], r["euler"]) == (22, 44)
    assert r["hodge"] == {"h11": 22, "h12": 0}


def test_verify_subset():
    rows = scy.verify([1, 2])
    assert [r["id"] for r in rows] == [1, 2]
    assert all(r["passed"] for r in rows)
