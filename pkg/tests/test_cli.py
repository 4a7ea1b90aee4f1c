"""The four subcommands, driven in process through main()."""

import json

import pytest

from sdlab import serialize
from sdlab.boolalg import make_power_algebra, SetSubalgebra
from sdlab.cli import BOUNDS_ENV, main
from sdlab.compactify import banaschewski_b0
from sdlab.finspace import discrete_space
from sdlab.symbolic import cyl_from_strings
from sdlab.zalgebra import full_instance, z_instance
from sdlab.zmaps import functor_K


def write_payload(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(serialize.json_dumps(serialize.dump_object(obj)))
    return str(p)


def test_verify_text_output(capsys):
    code = main(["verify", "--suite", "finite", "--max-atoms", "1", "--max-points", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("suite: finite")
    assert "result: PASS" in out


def test_verify_json_to_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(
        [
            "verify",
            "--suite",
            "symbolic",
            "--format",
            "json",
            "--out",
            str(target),
        ]
    )
    assert code == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(target.read_text())
    assert payload["summary"]["failures"] == 0
    assert len(payload["laws"]) == 9


def test_verify_is_byte_identical_across_runs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--max-atoms", "1", "--max-points", "2", "--format", "json"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_env_override_clamps_bounds(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(BOUNDS_ENV, "max_atoms=1,max-points=1")
    code = main(["verify", "--max-atoms", "3", "--max-points", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "max-atoms: 1" in out and "max-points: 1" in out


def test_env_override_rejects_unknown_keys(monkeypatch, capsys):
    monkeypatch.setenv(BOUNDS_ENV, "seed=9")
    assert main(["verify"]) == 2
    assert "error:" in capsys.readouterr().err
    monkeypatch.setenv(BOUNDS_ENV, "nonsense")
    assert main(["verify"]) == 2


def test_dualize_happy_path(tmp_path, capsys):
    src = write_payload(tmp_path, "alg.json", make_power_algebra(2))
    code = main(["dualize", src, "--functor", "S"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "space"
    assert payload["stamp"]["functor"] == "S"


def test_dualize_wrong_category_exits_2(tmp_path, capsys):
    src = write_payload(tmp_path, "spc.json", discrete_space(2))
    assert main(["dualize", src, "--functor", "S"]) == 2
    assert "does not apply" in capsys.readouterr().err


def test_dualize_unknown_functor_exits_2(tmp_path, capsys):
    src = write_payload(tmp_path, "alg.json", make_power_algebra(1))
    assert main(["dualize", src, "--functor", "Zeta"]) == 2
    assert "unknown functor" in capsys.readouterr().err


def test_dualize_unreadable_input_exits_2(tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert main(["dualize", missing, "--functor", "S"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["dualize", str(bad), "--functor", "S"]) == 2


def test_roundtrip_accepts_each_kind(tmp_path, capsys):
    samples = [
        make_power_algebra(2),
        discrete_space(2),
        full_instance(make_power_algebra(2)),
        functor_K(make_power_algebra(2)),
        banaschewski_b0(discrete_space(2)),
        cyl_from_strings(1, ["1"]),
    ]
    for i, obj in enumerate(samples):
        src = write_payload(tmp_path, f"obj{i}.json", obj)
        code = main(["roundtrip", src])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0, payload
        assert payload["kind"] == "roundtrip"
        assert all(payload["checks"].values())


def test_roundtrip_reports_honest_failure(tmp_path, capsys):
    # the embedding of 2 into P(2) is mono but no atom is a meet of images
    from sdlab.boolalg import hom_from_atom_images
    from sdlab.zmaps import ZMapInstance

    zm = ZMapInstance(hom_from_atom_images(make_power_algebra(1), make_power_algebra(2), [3]))
    src = write_payload(tmp_path, "zm.json", zm)
    code = main(["roundtrip", src])
    payload = json.loads(capsys.readouterr().out)
    assert code == 1
    assert payload["checks"]["mz"] is False


def test_roundtrip_refuses_non_z_instances(tmp_path, capsys):
    # dz is undefined off the z class, so this is a precondition error, not a red
    inst = z_instance(make_power_algebra(2), [0])
    src = write_payload(tmp_path, "inst.json", inst)
    assert main(["roundtrip", src]) == 2
    assert "requires a z-algebra" in capsys.readouterr().err


def test_dwinger_discrete(capsys):
    code = main(["dwinger", "--discrete", "3"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["kind"] == "dwinger_poset"
    assert len(payload["admissible"]) == 1
    entry = payload["admissible"][0]
    assert entry["round_trip"] and entry["target_points"] == 3


def test_dwinger_from_file(tmp_path, capsys):
    src = write_payload(tmp_path, "spc.json", discrete_space(2))
    assert main(["dwinger", src]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["space"]["points"] == 2


def test_dwinger_symbolic(capsys):
    code = main(["dwinger", "--symbolic"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["kind"] == "dwinger_symbolic"
    assert payload["inclusion_strict"] and payload["t_equal"]
    assert payload["both_admissible"] and payload["restriction_agrees"]
    assert payload["delta_prime_delta_identity"]


def test_dwinger_without_arguments_exits_2(capsys):
    assert main(["dwinger"]) == 2
    assert "needs an input space" in capsys.readouterr().err


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
