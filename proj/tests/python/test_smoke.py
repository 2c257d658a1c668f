import hopfpi


def test_smith_normal_form():
    u, d, v = hopfpi.smith_normal_form([[2, 0], [0, 3]])
    assert d == [["1", "0"], ["0", "6"]]


def test_solve_congruence():
    sol = hopfpi.solve_congruence([[2]], [0], [4])
    assert sol is not None
    particular, basis = sol
    assert int(particular[0]) % 2 == 0
    assert hopfpi.solve_congruence([[2]], [1], [4]) is None


def test_make_group():
    assert hopfpi.make_group([2, 3]) == "Z/6"
    assert hopfpi.make_group([1, 1]) == "0"
    assert hopfpi.make_group([4, 2]) == "Z/2+Z/4"


def test_homology():
    out = hopfpi.homology("klein", coeff="Z/2", q=1)
    assert out["group"] == "Z/2+Z/2"
    out = hopfpi.homology("torus", coeff="Z/3", q=2)
    assert out["group"] == "Z/3"


def test_dw_values():
    assert hopfpi.dw("torus", group="Z/2")["invariant"] == "2"
    assert hopfpi.dw("s3", group="Z/2")["invariant"] == "1/2"
    assert hopfpi.dw("rp2", group="Z/3")["invariant"] == "1/3"
    assert hopfpi.dw("torus", group="Z/2")["match"] is True


def test_omega_heegaard():
    out = hopfpi.omega("heegaard1", "heegaard2", coeff="Z/2", q=1)
    assert out["omega_hat"] == "1/2"
    assert out["omega_check"] == "1"


def test_theta():
    out = hopfpi.theta("closed:s1", coeff="Z/2", q=1)
    assert out["theta"] == "1/2"


def test_verify_suite():
    rep = hopfpi.verify("cocycle", seed=3, n=5)
    assert rep["ok"] is True
    rep = hopfpi.verify("char2", seed=3, n=5, group="Z/3", field="F2")
    assert rep["ok"] is True


def test_corpus():
    out = hopfpi.corpus()
    assert "heegaard1" in out["cospans"]


def test_group_homs():
    proj = {"src": "Z/4", "tgt": "Z/2", "matrix": [[1]]}
    k = hopfpi.kernel(proj)
    assert k["group"] == "Z/2"
    assert k["incl"]["matrix"] == [["2"]]
    incl = {"src": "Z/2", "tgt": "Z/4", "matrix": [[2]]}
    assert hopfpi.cokernel(incl)["group"] == "Z/2"
    doubling = {"src": "Z/4", "tgt": "Z/4", "matrix": [[2]]}
    assert hopfpi.image(doubling)["group"] == "Z/2"
