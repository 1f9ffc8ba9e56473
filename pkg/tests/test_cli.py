import json
import subprocess
import sys
from pathlib import Path

import pytest

from palprim.cli import dump_json, main
from palprim.render import point_angle, render_svg

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct(capsys):
    assert run(capsys, "construct", "2", "3", "--first-point", "5")[:2] == (0, "yxyxy\n")
    assert run(capsys, "construct", "1", "1", "--all")[:2] == (0, "xy\nyx\n")
    assert run(capsys, "construct", "2", "3")[1] == "xyyxy\n"
    assert run(capsys, "construct", "-2", "3")[1] == "XyyXy\n"


def test_construct_errors(capsys):
    code, _, err = run(capsys, "construct", "2", "2")
    assert code == 2 and "NotCoprime" in err
    code, _, err = run(capsys, "construct", "0", "0")
    assert code == 2 and "ZeroPair" in err
    assert run(capsys, "construct", "2", "3", "--first-point", "9")[0] == 2


def test_palindromic_commands(capsys):
    assert run(capsys, "palprim", "2", "3")[1] == "yxyxy\n"
    assert run(capsys, "nearpal", "1", "3")[1] == "x|yyy\ny|yxy\n"
    assert run(capsys, "palbasis", "1", "2", "0", "1")[1] == "yxy y\n"
    assert run(capsys, "palprim", "1", "1")[0] == 2
    assert run(capsys, "palbasis", "1", "2", "1", "2")[0] == 2


def test_nearpal_json_signs(capsys):
    code, out, _ = run(capsys, "nearpal", "-1", "3", "--json")
    obj = json.loads(out)
    assert (obj["epsilon"], obj["delta"]) == (-1, 1)
    assert obj["x_form"] == "Xyyy"


def test_primitive(capsys):
    assert run(capsys, "primitive", "xyyxy")[1] == "true\n"
    assert run(capsys, "primitive", "xxyy")[1] == "false\n"
    out = run(capsys, "primitive", "xyxyX", "--oracle")[1]
    assert out == "true\noracle: true (agree)\n"
    code, _, err = run(capsys, "primitive", "xq")
    assert code == 2 and "ParseError" in err


def test_decompose(capsys):
    assert run(capsys, "decompose", "xyX")[1] == "conj-palindrome a=x p=y; factors: xyx * XX\n"
    assert run(capsys, "decompose", "xxyxyy")[1] == "more-than-two\n"
    assert run(capsys, "decompose", "xy")[1] == "two-palindromes p=x q=y; factors: x * y\n"
    assert run(capsys, "decompose", "xyx")[1] == "palindrome p=xyx\n"
    assert run(capsys, "decompose", "1")[1] == "identity\n"
    out = run(capsys, "decompose", "Yxxyyy")[1]
    assert out == "conj-two-palindromes a=Y p=xx q=yy; factors: YxxY * yyyy\n"
    out = run(capsys, "decompose", "xxyxyy", "--oracle")[1]
    assert out == "more-than-two\noracle: more-than-two (agree)\n"
    out = run(capsys, "decompose", "abA", "--rank", "3")[1]
    assert out.startswith("conj-palindrome a=a p=b")


def test_decompose_json_schema(capsys):
    out = run(capsys, "decompose", "xyX", "--json", "--oracle")[1]
    obj = json.loads(out)
    assert {"word", "tag", "witnesses", "exponent_sums"} <= set(obj)
    assert obj["witnesses"] == {"a": "x", "p": "y"}
    assert obj["factors"] == ["xyx", "XX"]
    assert obj["exponent_sums"] == [0, 1]
    assert obj["oracle"]["agree"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "2", "3", "--json"],
        ["construct", "3", "5", "--all", "--json"],
        ["palprim", "4", "7", "--json"],
        ["nearpal", "3", "5", "--json"],
        ["palbasis", "2", "3", "1", "2", "--json"],
        ["primitive", "xyyxy", "--json", "--oracle"],
        ["decompose", "xyyxyX", "--json"],
        ["decompose", "xxyxyy", "--json", "--oracle"],
    ],
)
def test_json_byte_stable(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    text = out.rstrip("\n")
    assert dump_json(json.loads(text)) == text


def test_circle_writes_golden(tmp_path, capsys):
    out = tmp_path / "c.svg"
    code, text, _ = run(capsys, "circle", "2", "3", str(out))
    assert code == 0
    assert out.read_bytes() == (GOLDEN / "circle_2_3.svg").read_bytes()
    assert out.read_text().count('class="point"') == 5


def test_circle_errors(tmp_path, capsys):
    assert run(capsys, "circle", "2", "2", str(tmp_path / "x.svg"))[0] == 2
    assert not (tmp_path / "x.svg").exists()
    assert run(capsys, "circle", "2", "3", str(tmp_path / "missing" / "x.svg"))[0] == 3


def test_svg_layout():
    assert point_angle(1, 5) == 90.0
    assert point_angle(2, 4) == 0.0
    svg = render_svg(1, 1)
    assert svg.count('class="point"') == 2
    assert svg.count('class="symmetry"') == 1
    assert svg.count('class="symmetry-point"') == 2
    assert render_svg(3, 5, 2) == render_svg(3, 5, 2)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "palprim", "palprim", "2", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == "yxyxy\n"
