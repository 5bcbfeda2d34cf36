import pytest

import premetric


def small(spec):
    spec = dict(spec)
    spec.setdefault("sample_plan", {"kind": "random", "count": 256, "seed": 2})
    return spec


def test_plane_wave_passes():
    report = premetric.check(small({"catalog": "plane_wave", "checks": ["linear_prerel", "linear_spacetime"]}))
    assert report["verdict"] == "pass"
    assert {c["check"] for c in report["checks"]} == {"linear_prerel", "linear_spacetime"}
    assert all(c["n_points"] == 256 for c in report["checks"])


def test_nonsolution_fails():
    report = premetric.check(small({"catalog": "random_nonsolution", "checks": ["nonlinear_spacetime"]}))
    assert report["verdict"] == "fail"
    assert max(c["max_abs_residual"] for c in report["checks"]) > 1.0


def test_inline_fields_and_json_text():
    spec = '{"E": ["1", "0", "0"], "B": ["0", "1", "0"], "checks": ["integrability"]}'
    assert premetric.check(spec)["verdict"] == "pass"


def test_reports_are_deterministic():
    spec = small({"catalog": "bump_photon"})
    assert premetric.check(spec) == premetric.check(spec)


@pytest.mark.parametrize(
    "spec",
    [
        {"catalog": "plane_wave", "bogus": 1},
        {"E": ["sin(t)", "0", "0"], "checks": ["linear_prerel"]},
        {"catalog": "no_such_entry"},
        "{not json",
    ],
)
def test_bad_specs_raise(spec):
    with pytest.raises(premetric.SpecError):
        premetric.check(spec)
    with pytest.raises(ValueError):
        premetric.check(spec)


def test_identities():
    report = premetric.identities(dims=[3, 4], trials=50, seed=42)
    assert report["verdict"] == "pass"
    assert report["dims"] == [3, 4]
    with pytest.raises(premetric.SpecError):
        premetric.identities(trials=0)


def test_catalog_listing():
    names = [e["name"] for e in premetric.catalog()]
    assert {"plane_wave", "bump_photon", "autoparallel_null"} <= set(names)
    assert "autoparallel" in premetric.registered_checks()
