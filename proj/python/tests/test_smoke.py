import json
import pathlib

import jsonschema
import pytest
from referencing import Registry, Resource

import endoscope as es

ROOT = pathlib.Path(__file__).resolve().parents[2]


def schema(name):
    return json.loads((ROOT / "schemas" / name).read_text())


def test_root_system():
    rs = es.RootSystem("G", 2)
    assert len(rs) == 6
    assert rs.heights == [1, 1, 2, 3, 4, 5]
    assert es.weyl_dimension(es.RootSystem("A", 2), [1, 1]) == 8
    jsonschema.validate(rs.to_json(), schema("root_system.schema.json"))


def test_unknown_type_raises():
    with pytest.raises(es.Error):
        es.RootSystem("Q", 2)


def test_hypothesis_and_nullcone():
    a = es.restricted_enveloping("A", 2, 2)
    assert a.n == 3 and a.dimension == 8
    assert a.check_hypothesis()["passed"]
    assert es.nullcone_equations(a) == ["ab"]
    assert es.components(a)["num_components"] == 2
    jsonschema.validate(a.to_json(), schema("algebra.schema.json"))


def test_syzygies_of_k():
    a = es.elementary_abelian(3, 2)
    k = es.trivial(a)
    for s in (1, 2):
        assert es.syzygy_power(k, 2 * s).dim == 1 + 9 * s
        assert es.syzygy_power(k, 2 * s - 1).dim == 9 * s - 1
    om = es.syzygy(k)
    assert es.is_endotrivial(om)["verdict"]
    assert es.identify_syzygy(es.dual(om)) == -1
    assert es.is_isomorphic(es.cosyzygy(om), k)


def test_module_round_trip():
    a = es.elementary_abelian(2, 2)
    m = es.syzygy(es.trivial(a))
    again = es.Module(a, m.matrices)
    assert es.is_isomorphic(m, again)
    free, residual = es.strip_projectives(es.regular(a))
    assert (free, residual.dim) == (1, 0)
    jsonschema.validate(m.to_json(), schema("module.schema.json"))


def test_weyl_scan():
    rows = es.weyl_scan(3, 1, 12)
    assert [r["lambda"] for r in rows if r["verdict"]] == [l for l in range(13) if l % 3 in (0, 1)]
    assert all(r["verdict"] == r["expected"] for r in rows)


def test_census():
    res = es.census(es.elementary_abelian(2, 2), 3)
    assert sorted(c["syzygy_degree"] for c in res["classes"]) == [-1, 1]


@pytest.mark.parametrize("command,config", [
    ("hypothesis", "hypothesis_a2_sweep.json"),
    ("nullcone", "nullcone_p2.json"),
    ("weyl", "weyl_sl2.json"),
    ("census", "census_e22.json"),
    ("jordan", "jordan_e22.json"),
])
def test_jobs_match_schemas(command, config, tmp_path, monkeypatch):
    monkeypatch.setenv("ENDOSCOPE_CACHE_DIR", str(tmp_path))
    text = (ROOT / "configs" / config).read_text()
    cfg = json.loads(text)
    jsonschema.validate(cfg, schema("config.schema.json"))
    report, mismatches = es.run_job(command, text)
    registry = Registry().with_resource("module.schema.json", Resource.from_contents(schema("module.schema.json")))
    jsonschema.Draft202012Validator(schema("report.schema.json"), registry=registry).validate(report)
    again, _ = es.run_job(command, text, threads=2)
    assert again["fingerprint"] == report["fingerprint"]
    assert mismatches == report["summary"]["mismatches"]
