import io
import subprocess
import sys

import pytest

from commonprefix import parse_cp, parse_nn, parse_solution, serialize_nn, tight_family
from commonprefix.cli import main

PATH3_TEXT = "cp 3\nedge 0 1\nedge 1 2\nlabels 0 1 2\nlabels 1 1 2 3\nlabels 2 2 3\n"


def run(argv, stdin=""):
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


@pytest.fixture
def path3(tmp_path):
    p = tmp_path / "path3.cp"
    p.write_text(PATH3_TEXT)
    return str(p)


def test_gen_tight_family():
    code, text = run(["gen", "tight-family", "--n", "4"])
    assert code == 0
    assert text == serialize_nn(tight_family(4))


def test_gen_binary_tree_single_vertex():
    code, text = run(["gen", "binary-tree", "--n", "1", "--seed", "5"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "cp 1" and len(lines) == 2 and lines[1].startswith("labels 0")


@pytest.mark.parametrize("argv", [
    ["gen", "binary-tree", "--n", "12", "--seed", "9"],
    ["gen", "star", "--n", "6", "--universe", "5", "--seed", "9"],
    ["gen", "bipartite", "--n", "5", "--nv", "4", "--p", "0.4", "--seed", "9"],
])
def test_gen_deterministic_and_parseable(argv):
    a, b = run(argv), run(argv)
    assert a == b and a[0] == 0
    (parse_nn if "bipartite" in argv else parse_cp)(a[1])


def test_gen_seed_changes_output():
    assert run(["gen", "binary-tree", "--n", "12", "--seed", "1"]) != run(["gen", "binary-tree", "--n", "12", "--seed", "2"])


def test_gen_invalid_params():
    assert run(["gen", "binary-tree", "--n", "0"])[0] == 1
    assert run(["gen", "bipartite", "--n", "3", "--p", "1.5"])[0] == 1
    assert run(["gen", "nonsense", "--n", "3"])[0] == 1


def test_solve_exact_and_oracle(path3):
    code, text = run(["solve", path3, "--exact"])
    assert code == 0
    value, assignment = parse_solution(text)
    assert value == 3
    assert text.startswith("value 3\n")
    code, text = run(["solve", "--oracle"], stdin=PATH3_TEXT)
    assert (code, text) == (0, "value 3\n")


def test_solve_approx(path3):
    code, text = run(["solve", path3, "--approx", "--L", "2"])
    assert code == 0
    assert "# layer_value 2\n# L 2\n# class 0\n" in text
    code, text = run(["solve", path3, "--approx", "--epsilon", "0.25"])
    assert code == 0 and "# L 4" in text
    code, text = run(["solve", path3, "--approx"])
    assert code == 0 and "# L 2" in text


def test_solve_errors(path3, tmp_path, capsys):
    assert run(["solve", path3, "--approx", "--L", "1"])[0] == 1
    assert "L must be >= 2" in capsys.readouterr().err
    bad = tmp_path / "bad.cp"
    bad.write_text("cp 2\nedge 0 0\nlabels 0 a\nlabels 1 a\n")
    assert run(["solve", str(bad), "--exact"])[0] == 1
    assert run(["solve", str(tmp_path / "missing.cp"), "--exact"])[0] == 1
    assert run(["solve", path3])[0] == 1
    big = tmp_path / "big.cp"
    big.write_text("cp 2\nedge 0 1\nlabels 0 a b c d e f g h\nlabels 1 a b c d e f g h\n")
    assert run(["solve", str(big), "--oracle"])[0] == 2
    assert "oracle_assignments" in capsys.readouterr().err
    assert run(["solve", path3, "--exact", "--max-components", "2"])[0] == 2
    star = tmp_path / "star.cp"
    star.write_text("cp 4\nedge 0 1\nedge 0 2\nedge 0 3\nlabels 0 a\nlabels 1 a\nlabels 2 a\nlabels 3 a\n")
    assert run(["solve", str(star), "--approx", "--L", "2"])[0] == 1


def test_reduce_roundtrip_and_solve(tmp_path):
    nn = serialize_nn(tight_family(4))
    code, star = run(["reduce", "nn-to-star"], stdin=nn)
    assert code == 0
    assert run(["solve", "--exact"], stdin=star)[1].startswith("value 8\n")
    code, back = run(["reduce", "star-to-nn", "--center", "0"], stdin=star)
    assert (code, back) == (0, nn)


def test_reduce_non_star(path3):
    assert run(["reduce", "star-to-nn", path3, "--center", "0"])[0] == 1
    assert run(["reduce", "star-to-nn", path3, "--center", "1"])[0] == 0


def test_analyze_subtrees(tmp_path):
    edges = "".join(f"edge {(i - 1) // 2} {i}\n" for i in range(1, 7))
    labels = "".join(f"labels {v}\n" for v in range(7))
    code, text = run(["analyze", "subtrees", "--root", "0"], stdin=f"cp 7\n{edges}{labels}")
    assert code == 0
    assert "total=37\n" in text and "bound=256\n" in text


def test_analyze_ratio():
    code, text = run(["analyze", "ratio"], stdin=serialize_nn(tight_family(12)))
    assert code == 0
    assert "ebcs=12\nnn=35\nratio=35/12\nharmonic=86021/27720\nsandwich_ok=true\n" == text
    code, text = run(["analyze", "ratio"], stdin="nn 2 2\nedge 0 0\nedge 0 1\nedge 1 0\nedge 1 1\n")
    assert "ratio=1/1" in text


def test_bench_shape():
    code, text = run(["bench", "approx-sweep"])
    assert code == 0
    rows = [line.split("\t") for line in text.splitlines()]
    assert rows[0] == ["n", "L", "exact", "layer", "realized", "guarantee"]
    assert [(r[0], r[1]) for r in rows[1:]] == [(str(n), str(L)) for n in (64, 256, 1024) for L in (2, 3, 4)]


def test_bench_small_guarantee_ok():
    code, text = run(["bench", "small-sweep"])
    rows = [line.split("\t") for line in text.splitlines()[1:]]
    assert code == 0 and rows
    assert all(r[5] == "ok" for r in rows if r[2] != "-")


def test_bench_usage_errors():
    assert run(["bench", ""])[0] == 1
    assert run(["bench", "nope"])[0] == 1
    assert run(["bench"])[0] == 1


def test_module_entry_point(path3):
    proc = subprocess.run([sys.executable, "-m", "commonprefix", "solve", path3, "--exact"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("value 3")
    proc = subprocess.run([sys.executable, "-m", "commonprefix", "solve", path3, "--approx", "--L", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "L must be >= 2" in proc.stderr
