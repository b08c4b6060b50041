import json

import pytest

from angulate import (
    angulation_to_json,
    fan_angulation,
    from_arrows,
    linear_quiver,
    quiver_from_json,
    quiver_to_json,
)
from angulate.cli import main

EX_A = from_arrows(
    2,
    (1, 2, 3),
    [(1, 2, 1), (2, 1, 1), (2, 3, 0), (3, 2, 2), (1, 3, 2), (3, 1, 0)],
)
EX_A_MU2 = from_arrows(
    2,
    (1, 2, 3),
    [(1, 2, 2), (2, 1, 0), (2, 3, 2), (3, 2, 0)],
)


def write_quiver(path, q):
    path.write_text(json.dumps(quiver_to_json(q)))


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_mutate_order_two_restores_file(tmp_path):
    raw = tmp_path / "raw.json"
    norm = tmp_path / "norm.json"
    out = tmp_path / "out.json"
    write_quiver(raw, linear_quiver(4, 1))
    assert main(["mutate", str(raw), "2", "--times", "0", "--out", str(norm)]) == 0
    assert main(["mutate", str(norm), "2", "--times", "2", "--out", str(out)]) == 0
    assert out.read_bytes() == norm.read_bytes()


def test_mutate_times_zero_is_normalizing_passthrough(tmp_path):
    norm = tmp_path / "norm.json"
    again = tmp_path / "again.json"
    write_quiver(norm, EX_A)
    assert main(["mutate", str(norm), "1", "--times", "0", "--out", str(norm)]) == 0
    assert main(["mutate", str(norm), "1", "--times", "0", "--out", str(again)]) == 0
    assert again.read_bytes() == norm.read_bytes()


def test_mutate_worked_example_to_stdout(tmp_path, capsys):
    src = tmp_path / "q.json"
    write_quiver(src, EX_A)
    code, data = run_json(capsys, ["mutate", str(src), "2"])
    assert code == 0
    assert quiver_from_json(data) == EX_A_MU2


def test_mutate_rejects_missing_and_malformed_files(tmp_path, capsys):
    assert main(["mutate", str(tmp_path / "absent.json"), "1"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["mutate", str(bad), "1"]) == 2
    assert "cannot read quiver file" in capsys.readouterr().err


def test_mutate_reports_axiom_violations(tmp_path, capsys):
    loop = tmp_path / "loop.json"
    write_quiver(loop, from_arrows(1, (1, 2), [(1, 1, 0), (1, 1, 1)]))
    assert main(["mutate", str(loop), "1"]) == 2
    assert "axiom violation: loop" in capsys.readouterr().err


def test_mutate_rejects_unknown_vertex(tmp_path, capsys):
    src = tmp_path / "q.json"
    write_quiver(src, linear_quiver(3, 1))
    assert main(["mutate", str(src), "9"]) == 2
    assert "error" in capsys.readouterr().err


def test_verify_commutation_small(capsys):
    code, report = run_json(
        capsys, ["verify", "--suite", "commutation", "--n", "3", "--m", "1", "--seed", "3"]
    )
    assert code == 0
    assert report["status"] == "pass"
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["exhaustive"]["status"] == "pass"
    assert by_name["exhaustive"]["cases"] == 10
    assert by_name["random"]["cases"] == 100


def test_verify_commutation_needs_seed():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "commutation", "--n", "3", "--m", "1"])
    assert err.value.code == 2


def test_verify_commutation_skips_over_limits(capsys):
    code, report = run_json(
        capsys, ["verify", "--suite", "commutation", "--n", "30", "--m", "1", "--seed", "1"]
    )
    assert code == 0
    assert report["status"] == "pass"
    assert all(c["status"] == "skipped" for c in report["checks"])


def test_verify_colour_sums(capsys):
    code, report = run_json(capsys, ["verify", "--suite", "colour-sums", "--n", "3", "--m", "2"])
    assert code == 0
    assert report["checks"][0]["status"] == "pass"
    assert report["checks"][0]["cases"] > 0


def test_verify_bijection_counts(capsys):
    code, report = run_json(capsys, ["verify", "--suite", "bijection", "--n", "3", "--m", "2"])
    assert code == 0
    check = report["checks"][0]
    assert check["angulations"] == 12
    assert check["rotation_orbits"] == check["quiver_classes"]


def test_verify_bijection_skips_when_canonical_forms_blow_up(capsys):
    code, report = run_json(capsys, ["verify", "--suite", "bijection", "--n", "12", "--m", "1"])
    assert code == 0
    assert report["checks"][0]["status"] == "skipped"


def test_verify_order_reports_expected_negative(capsys):
    code, report = run_json(capsys, ["verify", "--suite", "order"])
    assert code == 0
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["order on the class"]["status"] == "pass"
    control = by_name["three-cycle negative control"]
    assert control["status"] == "pass"
    assert control["observed"] == "left it"


def test_verify_homomorphisms(capsys):
    code, report = run_json(
        capsys, ["verify", "--suite", "homomorphisms", "--n", "4", "--m", "1"]
    )
    assert code == 0
    assert report["checks"][0]["status"] == "pass"
    assert report["checks"][0]["cases"] > 0


def test_verify_homomorphisms_skips_large(capsys):
    code, report = run_json(
        capsys, ["verify", "--suite", "homomorphisms", "--n", "7", "--m", "1"]
    )
    assert code == 0
    assert report["checks"][0]["status"] == "skipped"


def test_render_fan_svg_and_dot(tmp_path):
    src = tmp_path / "fan.json"
    src.write_text(json.dumps(angulation_to_json(fan_angulation(5, 2))))
    svg = tmp_path / "fan.svg"
    dot = tmp_path / "fan.dot"
    assert main(["render", str(src), "--svg", str(svg), "--dot", str(dot)]) == 0
    drawing = svg.read_text()
    assert drawing.count("<line") == 4
    assert drawing.startswith("<svg")
    assert dot.read_text().startswith("digraph")


def test_render_is_deterministic(tmp_path):
    src = tmp_path / "fan.json"
    src.write_text(json.dumps(angulation_to_json(fan_angulation(4, 1))))
    first = tmp_path / "a.svg"
    second = tmp_path / "b.svg"
    assert main(["render", str(src), "--svg", str(first)]) == 0
    assert main(["render", str(src), "--svg", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_render_requires_an_output():
    with pytest.raises(SystemExit) as err:
        main(["render", "whatever.json"])
    assert err.value.code == 2


def test_render_rejects_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3}')
    assert main(["render", str(bad), "--svg", str(tmp_path / "x.svg")]) == 2
    assert "cannot read angulation file" in capsys.readouterr().err
