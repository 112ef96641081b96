"""Shorthands, config files, element parsing, kernel loading."""

import json

import pytest

import groupcurv as gc
from conftest import FBD_Z3_CONFIG, Z2_QUOTIENT, s3_table


def test_shorthands():
    assert gc.build_spec("zn:3").gens.size == 6
    assert gc.build_spec("free:2").gens.size == 4
    assert gc.build_spec("heis3").gens.size == 4
    assert gc.build_spec("dinf").gens.size == 2
    assert gc.build_spec("z2xdinf").gens.size == 5


def test_shorthand_errors():
    for bad in ("zn:0", "zn:x", "free:", "nosuch", "zn"):
        with pytest.raises(gc.ConfigError):
            gc.build_spec(bad)


def test_build_spec_passthrough(free2):
    assert gc.build_spec(free2) is free2
    with pytest.raises(gc.ConfigError):
        gc.build_spec(42)


def test_z2xdinf_spec_shape():
    spec = gc.z2xdinf_spec()
    assert spec.gens.elements == (
        (1, (0, 0)), (0, (0, 1)), (1, (0, 1)), (0, (-1, 1)), (1, (-1, 1)),
    )


def test_config_with_generators():
    spec = gc.build_spec(
        {"family": "free_abelian", "rank": 2, "generators": [[1, 0], [1, 1]]}
    )
    assert spec.gens.size == 4  # inverses appended
    with pytest.raises(gc.InvalidGeneratingSetError):
        gc.build_spec(
            {"family": "free_abelian", "rank": 2, "generators": [[1, 0]],
             "symmetrize": False}
        )


def test_config_file_roundtrip(tmp_path):
    path = tmp_path / "fbd.json"
    path.write_text(json.dumps(FBD_Z3_CONFIG))
    spec = gc.build_spec(str(path))
    assert spec.gens.size == 8


def test_config_file_errors(tmp_path):
    with pytest.raises(gc.ConfigError):
        gc.build_spec(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(gc.ConfigError):
        gc.build_spec(str(bad))


def test_config_unknown_family():
    with pytest.raises(gc.ConfigError):
        gc.group_from_config({"family": "quaternions"})
    with pytest.raises(gc.ConfigError):
        gc.group_from_config([1, 2, 3])


# --- element parsing ----------------------------------------------------------

def test_parse_element_identity(heis):
    assert gc.parse_element(heis, "1") == heis.group.identity()


def test_parse_element_json_literal(heis):
    assert gc.parse_element(heis, "[1, 0, -2]") == (1, 0, -2)
    assert gc.parse_element(heis, "[0,0,1]") == (0, 0, 1)


def test_parse_element_word(free2, heis):
    assert gc.parse_element(free2, "abA") == free2.word("abA")
    assert gc.parse_element(heis, "abAB") == (0, 0, 1)


def test_parse_element_table_name():
    table, _ = s3_table()
    names = ["idn", "cyc", "icy", "swp", "pws", "wsp"]
    spec = gc.build_spec({"family": "finite_table", "table": table, "names": names})
    assert spec.group.render(gc.parse_element(spec, "swp")) == "swp"


def test_parse_element_failures(free2):
    with pytest.raises(gc.ConfigError):
        gc.parse_element(free2, "")
    with pytest.raises(gc.ConfigError):
        gc.parse_element(free2, "xyz")
    with pytest.raises(gc.ConfigError):
        gc.parse_element(free2, "[1, 0")


# --- genset and kernel files ----------------------------------------------------

def test_load_genset(free2, tmp_path):
    gens = gc.load_genset({"generators": [[1], [2]]}, free2)
    assert gens.size == 4
    path = tmp_path / "gens.json"
    path.write_text(json.dumps({"generators": [[1]], "symmetrize": True}))
    assert gc.load_genset(str(path), free2).size == 2
    with pytest.raises(gc.ConfigError):
        gc.load_genset({"symmetrize": True}, free2)


def test_load_kernel(free2):
    ker = gc.load_kernel(
        {"quotient": Z2_QUOTIENT, "images": {"a": "g", "b": "g"}}, free2
    )
    assert ker.label == "kernel"
    assert len(ker.images) == free2.gens.size
    # inverse generators get inverse images
    q = ker.quotient
    by_payload = dict(zip(free2.gens.elements, ker.images))
    assert by_payload[free2.word("A")] == q.invert(by_payload[free2.word("a")])


def test_load_kernel_errors(free2):
    with pytest.raises(gc.ConfigError):
        gc.load_kernel({"images": {"a": "g", "b": "g"}}, free2)
    with pytest.raises(gc.ConfigError):
        gc.load_kernel({"quotient": Z2_QUOTIENT, "images": {"q": "g"}}, free2)
    with pytest.raises(gc.ConfigError):
        gc.load_kernel({"quotient": Z2_QUOTIENT, "images": {"a": "h", "b": "g"}},
                       free2)
    with pytest.raises(gc.ConfigError):
        gc.load_kernel({"quotient": Z2_QUOTIENT, "images": ["g"]}, free2)


def test_load_kernel_requires_all_letters(free2):
    with pytest.raises(gc.ConfigError):
        gc.load_kernel({"quotient": Z2_QUOTIENT, "images": {"a": "g"}}, free2)
