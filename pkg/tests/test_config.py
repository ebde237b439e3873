import json

import pytest

from crossinv.config import SUITES, ConfigError, build_config, load_config, parse_text
from instances import CONFIGS


def base(**extra):
    d = {"ring": {"kind": "zmod", "n": 5}, "group": {"kind": "cyclic", "n": 2}}
    d.update(extra)
    return d


def issue(data):
    with pytest.raises(ConfigError) as exc:
        build_config(data)
    return exc.value


def test_minimal_config_gets_defaults():
    cfg = build_config({"ring": {"kind": "zmod", "n": 2}, "group": {"kind": "cyclic", "n": 2}})
    assert cfg.max_rank == 2 and cfg.seed == 0 and cfg.suites == SUITES
    t = cfg.twist
    assert all(t.v(g) == 1 for g in range(2))
    assert [list(row) for row in t.tau] == [[1, 1], [1, 1]]
    assert not t.has_involution


@pytest.mark.parametrize("path", sorted(CONFIGS.glob("*.json")), ids=lambda p: p.stem)
def test_shipped_configs_load(path):
    cfg = load_config(path)
    assert cfg.name == path.stem


def test_omitted_w_defaults_to_ones():
    cfg = build_config(base(involution="identity"))
    assert cfg.twist.w == (1, 1)


def test_tau_out_of_range_names_the_path():
    err = issue(base(tau=[[1, 1], [1, 7]]))
    assert err.kind == "semantic"
    assert [i.pointer for i in err.issues] == ["/tau/1/1"]


def test_wrong_lengths():
    err = issue(base(tau=[[1, 1]], w=[1], involution="identity"))
    assert {i.pointer for i in err.issues} == {"/tau", "/w"}


def test_not_an_automorphism():
    err = issue(base(c=[[0, 1, 2, 3, 4], [0, 2, 4, 1, 1]]))
    assert err.issues[0].pointer == "/c/1"


def test_w_without_involution():
    assert issue(base(w=[1, 1])).issues[0].pointer == "/w"


def test_involution_table_length():
    assert issue(base(involution=[0, 1, 2])).issues[0].pointer == "/involution"


def test_schema_errors():
    err = issue({"ring": {"kind": "zmod", "n": 5}})
    assert err.kind == "schema"
    err = issue(base(options={"max_rank": 9}))
    assert err.kind == "schema" and err.issues[0].pointer == "/options/max_rank"
    err = issue(base(colour="red"))
    assert err.kind == "schema"


def test_extension_excludes_plain_tables():
    ext = json.loads((CONFIGS / "extension-z4.json").read_text())
    ext["tau"] = [[1]]
    assert issue(ext).kind == "schema"
    ext = json.loads((CONFIGS / "extension-z4.json").read_text())
    ext["involution"] = "identity"
    assert issue(ext).issues[0].pointer == "/involution"


def test_extension_bad_section():
    ext = json.loads((CONFIGS / "extension-z4.json").read_text())
    ext["extension"]["proj"] = [0, 0, 0, 0]
    assert issue(ext).issues[0].pointer == "/extension"


def test_parse_error_has_position():
    with pytest.raises(ConfigError) as exc:
        parse_text('{\n  "ring": {"kind": "zmod",,}\n}')
    assert exc.value.kind == "parse"
    assert "line 2, column" in exc.value.issues[0].message


def test_error_to_dict():
    err = issue(base(tau=[[1, 1], [1, 7]]))
    d = err.to_dict()
    assert d["error"] == "semantic" and d["issues"][0]["pointer"] == "/tau/1/1"
