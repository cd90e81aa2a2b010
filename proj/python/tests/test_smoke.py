import dopk


def test_grid_sorts_and_caches_node_data():
    g = dopk.make_grid(["2", "0", "1"])
    assert len(g) == 3
    assert g.points() == ["0", "1", "2"]
    assert g.node_products() == ["2", "-1", "2"]
    assert g.epsilons() == [1, -1, 1]


def test_dual_weight_worked_example():
    assert dopk.dual_weight(["0", "1", "2"], ["1", "1", "1"]) == ["1/4", "1", "1/4"]


def test_orthogonalize_and_evaluate():
    s = dopk.orthogonalize(["0", "1", "2"], ["1", "1", "1"])
    assert s.norms() == ["3", "2", "2/3"]
    assert s.values()[2] == ["1/3", "-2/3", "1/3"]
    assert s.evaluate(1, "5") == "4"  # P_1 = x - 1


def test_verify_duality_report():
    report = dopk.verify_duality(["0", "1", "2"], ["1", "1", "1"])
    assert report["pass"] is True
    assert all(c["max_residual"] == "0" for c in report["clauses"])


def test_kernel_and_correlation():
    entries = dopk.kernel(["0", "1", "2"], ["1", "1", "1"], 1)
    assert all(e == "1/3" for row in entries for e in row)
    corr = dopk.correlation(["0", "1", "2"], ["1", "1", "1"], 2, [0])
    assert corr["bruteforce"] == "5/6"
    assert corr["determinantal"] == "5/6"


def test_measure_and_kernel_dualities():
    assert dopk.verify_measure_identity(["0", "1", "2"], ["1", "1", "1"], 1)["pass"] is True
    assert dopk.verify_kernel_duality(["0", "1", "2"], ["1", "1", "1"], 1)["pass"] is True


def test_classical_families():
    assert dopk.krawtchouk_value(1, 2, "1/2", 2) == "-1"
    assert dopk.verify_krawtchouk("1/2", 2)["pass"] is True
    report = dopk.verify_hahn("1/3", "2/5", 3)
    assert report["pass"] is True
    assert report["details"]["resolved_reading"] == "pochhammer"
    assert dopk.hahn_value(1, 1, "0", "0", 2) == "0"  # H_1 = 1 - x


def test_hypergeometric_surface():
    assert dopk.pochhammer("3", 4) == "360"
    assert dopk.hyp2f1("-1", "-1", "-2", "2") == "0"
    assert dopk.pfaff_transform_rhs("-1", "-1", "-2", "2") == "0"
    assert dopk.hyp3f2("-1", "2", "-1", "1", "-2") == "0"  # 1 + (-1)(2)(-1)/((1)(-2))
    assert dopk.thomae_transform_rhs("-1", "2", "-1", "3/2", "-2") == dopk.hyp3f2(
        "-1", "2", "-1", "3/2", "-2"
    )


def test_symmetric_and_interpolation_surface():
    assert dopk.elementary_symmetric(["0", "1", "2"]) == ["1", "3", "2", "0"]
    coeffs = dopk.interpolation_coefficients(["0", "1", "2"], ["2", "-1", "2"])
    assert coeffs == ["2", "-6", "3"]
    assert dopk.cd_kernel_offdiag(["0", "1", "2"], ["1", "1", "1"], 2, 0, 2) == "-1/6"


def test_complement_correlation():
    corr = dopk.correlation(["0", "1", "2"], ["1", "1", "1"], 2, [1], complement=True)
    assert corr["bruteforce"] == corr["determinantal"] == "2/3"


def test_limit_transition_slope():
    report = dopk.limit_check("1/2", 3, ["100", "1000", "10000"])
    assert report["pass"] is True
    assert abs(report["slope"] + 1.0) <= 0.1


def test_decimal_inputs_parse_exactly():
    assert dopk.dual_weight([0, 1, 2], [1, 1, 1]) == ["1/4", "1", "1/4"]
    assert dopk.krawtchouk_value(1, 1, 0.5, 2) == "0"
