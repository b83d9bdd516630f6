import io
import json
from pathlib import Path

import pytest

from src.cli.commands import run
from src.cli.enums import ExitCode


def invoke(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


class TestInspection:
    @classmethod
    def test_roots(cls) -> None:
        code, text = invoke("roots", "--type", "A2")
        assert code == ExitCode.OK
        assert text.startswith("A2: rank 2, N = 3, degrees 2,3")

    @classmethod
    def test_roots_json(cls) -> None:
        code, text = invoke("roots", "--type", "B", "--rank", "2", "--m", "2", "--format", "json")
        payload = json.loads(text)
        assert code == ExitCode.OK
        assert payload["positive_roots"] == [["1", "0"], ["0", "1"], ["1", "1"], ["1", "2"]]
        assert payload["gram"] == [["2", "-1"], ["-1", "1"]]
        assert payload["uniform_m"] == "2"
        assert payload["theorem2_regime"] is True

    @classmethod
    def test_weyl(cls) -> None:
        code, text = invoke("weyl", "--type", "A2")
        assert code == ExitCode.OK
        assert "|W| = 6" in text
        assert "w0 = s1s2s1, l(w0) = 3, 2 reduced words" in text
        assert "length census: 1,2,2,1" in text

    @classmethod
    def test_weyl_json_lists_few_words(cls) -> None:
        _, text = invoke("weyl", "--type", "A2", "--format", "json")
        payload = json.loads(text)
        assert payload["longest_reduced_word_count"] == "2"
        assert payload["longest_reduced_words"] == ["s1s2s1", "s2s1s2"]

    @classmethod
    def test_weyl_counts_words_of_large_groups(cls) -> None:
        code, text = invoke("weyl", "--type", "A6", "--format", "json")
        payload = json.loads(text)
        assert code == ExitCode.OK
        assert payload["order"] == "5040"
        assert payload["longest_reduced_word_count"] == "1100742656"
        assert "longest_reduced_words" not in payload


class TestAlgebra:
    @classmethod
    def test_divdiff_apply(cls) -> None:
        code, text = invoke("divdiff", "apply", "--type", "A2", "--word", "1", "--poly", "g1*g2")
        assert code == ExitCode.OK
        assert text.strip() == "g1 + 2*g2"

        _, text = invoke("divdiff", "apply", "--type", "A2", "--word", "1,2,1", "--poly", "g1^2*g2 + g1*g2^2")
        assert text.strip() == "6"

    @classmethod
    def test_divdiff_check(cls) -> None:
        code, text = invoke("divdiff", "check", "--type", "B2", "--cap", "3")
        assert code == ExitCode.OK
        assert "leibniz: ok" in text

    @classmethod
    def test_series(cls) -> None:
        assert invoke("coinv", "series", "--type", "B2") == (ExitCode.OK, "1,2,2,2,1\n")

        _, text = invoke("coinv", "series", "--type", "A2", "--format", "json")
        payload = json.loads(text)
        assert payload["census"] == ["1", "2", "2", "1"]
        assert payload["passed"] is True

    @classmethod
    def test_basis(cls) -> None:
        code, text = invoke("coinv", "basis", "--type", "A2", "--degree", "1")
        assert code == ExitCode.OK
        assert text.splitlines() == ["dim S^1 = 2, dim I_W^1 = 0", "2*g1 + 4*g2", "4*g1 + 2*g2"]

    @classmethod
    def test_invariants(cls) -> None:
        code, text = invoke("coinv", "invariants", "--type", "B2", "--stabilizer", "1")
        assert code == ExitCode.OK
        assert text.splitlines() == ["H = <s1>, |H| = 2", "1,1,1,1,0"]

    @classmethod
    def test_hiller(cls) -> None:
        _, text = invoke("coinv", "hiller", "--type", "A2")
        assert text.splitlines()[-1] == "d in I: False -> I = I_W"

        _, text = invoke("coinv", "hiller", "--type", "A2", "--gens", "g1")
        assert text.splitlines()[-1] == "d in I: True -> I != I_W"


class TestMorse:
    @classmethod
    def test_betti(cls) -> None:
        code, text = invoke("morse", "betti", "--type", "A2", "--m", "2")
        assert code == ExitCode.OK
        assert "betti: 1,0,2,0,2,0,1" in text

    @classmethod
    def test_verify_on_a_wall(cls) -> None:
        code, text = invoke("morse", "verify", "--type", "B2", "--m", "2", "--x0", "0,1")
        assert code == ExitCode.OK
        assert "morse:       1,0,1,0,1,0,1" in text
        assert text.splitlines()[-1] == "pass"

    @classmethod
    def test_verify_json(cls) -> None:
        _, text = invoke("morse", "verify", "--type", "B2", "--m", "4", "--x0", "1/2,1", "--format", "json")
        payload = json.loads(text)
        assert payload["pass"] is True
        assert payload["x0"] == ["1/2", "1"]

    @classmethod
    def test_perfect(cls) -> None:
        code, text = invoke("morse", "perfect", "--type", "A2", "--m", "2")
        assert code == ExitCode.OK
        assert text.startswith("9 reflection pairs, hypothesis m >= 2: True")

    @classmethod
    def test_mult_table(cls, tmp_path: Path) -> None:
        path = tmp_path / "mult.json"
        path.write_text(json.dumps({"multiplicities": {"1,0": 1, "0,1": 2}}), encoding="utf-8")
        code, text = invoke("morse", "betti", "--type", "B2", "--mult-table", str(path))
        assert code == ExitCode.OK
        assert "orbit size 8" in text


class TestVerifyAll:
    @classmethod
    def test_b2(cls) -> None:
        code, text = invoke("verify", "all", "--type", "B2", "--m", "2", "--format", "json")
        payload = json.loads(text)
        assert code == ExitCode.OK
        assert payload["passed"] is True
        assert [check["name"] for check in payload["checks"]] == [
            "root_system_invariants",
            "weyl_relations",
            "longest_element",
            "reduced_word_independence",
            "composition_rule",
            "leibniz_and_ideal_stability",
            "poincare_agreement",
            "harmonic_complement",
            "hiller_criterion",
            "invariant_dimension",
            "morse_coinvariant_agreement",
            "representation_pairing",
        ]
        assert {check["status"] for check in payload["checks"]} == {"pass"}

    @classmethod
    def test_is_deterministic(cls) -> None:
        argv = ("verify", "all", "--type", "A2", "--m", "2", "--format", "json")
        assert invoke(*argv) == invoke(*argv)

    @classmethod
    def test_skips_morse_outside_regime(cls) -> None:
        code, text = invoke("verify", "all", "--type", "A2", "--m", "3")
        assert code == ExitCode.OK
        assert "[skip] morse_coinvariant_agreement: uniform m = 3 outside {2,4,8}" in text
        assert text.splitlines()[-1] == "PASS"


class TestSpaces:
    @classmethod
    def test_e6_f4_roots(cls) -> None:
        code, text = invoke("roots", "--space", "e6-f4", "--format", "json")
        payload = json.loads(text)
        assert code == ExitCode.OK
        assert payload["system"] == "A2"
        assert payload["uniform_m"] == "8"
        assert payload["theorem2_regime"] is True
        assert payload["space"] == "E6(-26)/F4"

    @classmethod
    def test_su_sp_betti(cls) -> None:
        code, text = invoke("morse", "betti", "--space", "su-sp", "--rank", "2")
        assert code == ExitCode.OK
        assert "betti: 1,0,0,0,2,0,0,0,2,0,0,0,1" in text

    @classmethod
    def test_compact_group_verify(cls) -> None:
        code, text = invoke("morse", "verify", "--space", "compact-group", "--type", "B2")
        assert code == ExitCode.OK
        assert "morse:       1,0,2,0,2,0,2,0,1" in text
        assert text.splitlines()[-1] == "pass"


class TestCustomSystems:
    @classmethod
    def test_non_reduced(cls, tmp_path: Path, bc2_data: dict[str, object]) -> None:
        path = tmp_path / "bc2.json"
        path.write_text(json.dumps(bc2_data), encoding="utf-8")

        code, text = invoke("roots", "--custom", str(path))
        assert code == ExitCode.OK
        assert "reflections: 4 (non-reduced)" in text

        assert invoke("coinv", "series", "--custom", str(path)) == (ExitCode.OK, "1,2,2,2,1\n")

    @classmethod
    def test_multiplicities_in_file(cls, tmp_path: Path, bc2_data: dict[str, object]) -> None:
        path = tmp_path / "bc2.json"
        path.write_text(
            json.dumps({**bc2_data, "multiplicities": {"1,0": 2, "0,1": 2, "0,2": 1}}), encoding="utf-8"
        )
        code, text = invoke("roots", "--custom", str(path), "--format", "json")
        assert code == ExitCode.OK
        assert json.loads(text)["multiplicities"][3] == {"root": ["0", "2"], "m": "1"}

    @classmethod
    def test_rejects_bad_data(
        cls, tmp_path: Path, bc2_data: dict[str, object], capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = tmp_path / "broken.json"
        path.write_text(json.dumps({**bc2_data, "positive_roots": [[1, 0], [0, 1]]}), encoding="utf-8")
        assert invoke("roots", "--custom", str(path))[0] == ExitCode.USAGE
        assert "positive_roots" in capsys.readouterr().err

        path.write_text(json.dumps({**bc2_data, "colour": "blue"}), encoding="utf-8")
        assert invoke("roots", "--custom", str(path))[0] == ExitCode.USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ("nonsense",),
        ("roots",),
        ("roots", "--type", "A2", "--custom", "x.json"),
        ("roots", "--type", "A2", "--rank", "3"),
        ("roots", "--type", "H3"),
        ("roots", "--type", "A2", "--x0", "1"),
        ("morse", "betti", "--type", "A2"),
        ("morse", "betti", "--type", "A2", "--m", "2", "--x0=-1,1"),
        ("morse", "verify", "--type", "A2", "--m", "1"),
        ("divdiff", "apply", "--type", "A2", "--word", "3", "--poly", "g1"),
        ("divdiff", "apply", "--type", "A2", "--word", "1", "--poly", "g1 +"),
        ("coinv", "basis", "--type", "A2", "--degree", "4"),
        ("coinv", "hiller", "--type", "A2", "--gens", "g1 + 1"),
        ("weyl", "--type", "E", "--rank", "8"),
        ("roots", "--space", "su-sp"),
        ("roots", "--space", "compact-group"),
        ("roots", "--space", "e6-f4", "--m", "2"),
        ("roots", "--space", "e6-f4", "--type", "B2"),
        ("roots", "--space", "sl-so", "--type", "A2"),
    ],
)
def test_usage_errors(argv: tuple[str, ...]) -> None:
    assert invoke(*argv)[0] == ExitCode.USAGE
