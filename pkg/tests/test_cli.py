import json

import pytest

from fockpoisson.cli import main

MOMENTS_CFREE_PLAIN = """\
m_1 = l
m_2 = l^2 + l
m_3 = l^3 + 3*l^2 + l
m_4 = l^4 + 6*l^3 + 6*l^2 + l
m_5 = l^5 + 10*l^4 + 20*l^3 + 9*l^2 + l
m_6 = l^6 + 15*l^5 + 50*l^4 + 44*l^3 + 12*l^2 + l
m_7 = l^7 + 21*l^6 + 105*l^5 + 154*l^4 + 77*l^3 + 15*l^2 + l
ENGINES AGREE
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_moments_all_engines_cfree_table(capsys):
    code, out, _ = run(capsys, "moments", "--nmax", "7", "--engine", "all",
                       "--s-one", "--t-zero", "--format", "plain")
    assert code == 0
    assert out == MOMENTS_CFREE_PLAIN


def test_moments_single_engine_with_eval(capsys):
    code, out, _ = run(capsys, "moments", "--nmax", "3", "--engine", "jacobi",
                       "--at", "1,1,1")
    assert code == 0
    assert out.splitlines() == [
        "m_1 = l = 1",
        "m_2 = l^2 + l = 2",
        "m_3 = l^3 + l^2*s + 2*l^2 + l = 5",
    ]


def test_moments_json_roundtrip(capsys):
    code, out, _ = run(capsys, "moments", "--nmax", "4", "--engine", "all",
                       "--s-one", "--t-zero", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["engines_agree"] is True
    row = payload["rows"][3]
    assert row["n"] == 4
    assert row["moment"] == "l^4 + 6*l^3 + 6*l^2 + l"
    assert row["terms"][0] == {"el": 4, "es": 0, "et": 0, "coeff": "1"}


def test_moments_csv(capsys):
    code, out, _ = run(capsys, "moments", "--nmax", "2", "--engine", "nc",
                       "--format", "csv", "--at", "2,1,1")
    assert code == 0
    assert out.splitlines() == ['n,moment,value', '1,"l",2', '2,"l^2 + l",6']


def test_sequence(capsys):
    code, out, _ = run(capsys, "sequence", "--nmax", "10")
    assert code == 0
    assert out == "1 2 5 14 41 123 374 1147 3538 10958\n"


def test_sequence_json(capsys):
    code, out, _ = run(capsys, "sequence", "--nmax", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"values": [1, 2, 5, 14, 41], "matches_reference": True}


def test_words_check_plain(capsys):
    code, out, _ = run(capsys, "words", "--check", "CMCKAA")
    assert code == 0
    assert out.splitlines() == [
        "word: CMCKAA",
        "levels: 0 1 1 2 2 1",
        "admissible: yes",
        "partition: [[1,2,6],[3,5],[4]]",
        "cards: C0 M1 C1 K2 A2 A1",
        "weight: l^3*s^3",
    ]


def test_words_inadmissible(capsys):
    code, out, _ = run(capsys, "words", "--check", "AC")
    assert code == 0
    lines = out.splitlines()
    assert "admissible: no" in lines
    assert not any(line.startswith("weight") for line in lines)


def test_words_degenerate_and_cards(capsys):
    code, out, _ = run(capsys, "words", "--check", "CCCAMAA", "--degenerate", "--cards")
    assert code == 0
    assert "weight: l^3*s^3" in out
    assert "N2" in out
    assert "\\___/" in out


def test_words_from_partition(capsys):
    code, out, _ = run(capsys, "words", "--from-partition", "[[1,7],[2,5,6],[3,4]]")
    assert code == 0
    assert "word: CCCAMAA" in out
    assert "weight: l^3*s^3*t" in out


def test_words_json(capsys):
    code, out, _ = run(capsys, "words", "--check", "CMCKAA", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["admissible"] is True
    assert payload["partition"] == [[1, 2, 6], [3, 5], [4]]
    assert payload["weight"] == "l^3*s^3"
    assert payload["weight_terms"] == [{"el": 3, "es": 3, "et": 0, "coeff": "1"}]


def test_words_bad_input(capsys):
    code, _, err = run(capsys, "words", "--check", "CXA")
    assert code == 2 and "invalid word letter" in err
    code, _, err = run(capsys, "words", "--from-partition", "[[1,3],[2,4]]")
    assert code == 2 and "crossing" in err


def test_partitions_count_and_list(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "4")
    assert code == 0 and out == "14\n"
    code, out, _ = run(capsys, "partitions", "--n", "4", "--family", "NC12_INNER",
                       "--count-by-blocks")
    assert code == 0
    assert out.splitlines() == ["1 1", "2 6", "3 6", "4 1", "total 14"]
    code, out, _ = run(capsys, "partitions", "--n", "3", "--list")
    assert code == 0
    assert out.splitlines()[0] == "[[1],[2],[3]]"
    assert len(out.splitlines()) == 5


def test_partitions_list_stats_and_json(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "3", "--list", "--stats",
                       "--format", "json")
    assert code == 0
    items = json.loads(out)
    assert len(items) == 5
    nested = next(i for i in items if i["blocks"] == [[1, 3], [2]])
    assert nested["depths"] == [0, 1]
    assert nested["td1"] == 1 and nested["td2"] == 0
    assert nested["weight"] == "l^2*s"


def test_partitions_csv_counts(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "3", "--count-by-blocks",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["blocks,count", "1,1", "2,3", "3,1"]


def test_partitions_cap_exit_code(capsys):
    code, _, err = run(capsys, "partitions", "--n", "19")
    assert code == 3
    assert "--force" in err


def test_fock_relations_and_dump(capsys):
    code, out, _ = run(capsys, "fock", "--n", "6", "--relations")
    assert code == 0
    assert out.splitlines()[-1] == "ALL RELATIONS HOLD"
    assert sum(1 for line in out.splitlines() if line.endswith(": ok")) == 7

    code, out, _ = run(capsys, "fock", "--n", "2", "--dump", "poisson")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 3
    assert payload["entries"][0][0] == "l"
    assert payload["entries"][1][0] == "l^(1/2)"
    assert payload["entries"][1][1] == "l*s + 1"

    code, _, err = run(capsys, "fock", "--n", "3")
    assert code == 2 and "nothing to do" in err


def test_cauchy_csv_grid(capsys):
    code, out, _ = run(capsys, "cauchy", "--lam", "1", "--s-one", "--t-zero",
                       "--closed", "--re", "3:3:1", "--im", "1:2:2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "re_z,im_z,re_g,im_g,re_g_closed,im_g_closed,abs_diff"
    assert len(lines) == 3
    first = lines[1].split(",")
    assert float(first[0]) == 3.0 and float(first[1]) == 1.0
    assert abs(float(first[6])) < 1e-12


def test_cauchy_json_and_validation(capsys):
    code, out, _ = run(capsys, "cauchy", "--lam", "2", "--s", "1/2", "--t", "1/4",
                       "--re", "0:1:2", "--im", "1:1:1", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 2
    assert rows[0]["im_g"] < 0  # Herglotz

    code, _, err = run(capsys, "cauchy", "--lam", "1", "--closed")
    assert code == 2 and "--closed requires" in err
    code, _, err = run(capsys, "cauchy", "--im", "0:1:2")
    assert code == 2 and "positive" in err
    code, _, err = run(capsys, "cauchy", "--re", "oops")
    assert code == 2


def test_engine_disagreement_exits_one(capsys, monkeypatch):
    import fockpoisson.cli as cli
    from fockpoisson.poly import MultiPoly

    broken = dict(cli._ENGINE_FUNCS)
    broken["jacobi"] = lambda n, force: MultiPoly.const(n)  # wrong on purpose
    monkeypatch.setattr(cli, "_ENGINE_FUNCS", broken)
    code, out, _ = run(capsys, "moments", "--nmax", "2", "--engine", "all")
    assert code == 1
    assert "ENGINE DISAGREEMENT" in out


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["moments", "--engine", "wat"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["moments", "--s", "1/2", "--s-one"])  # mutually exclusive
    assert exc.value.code == 2
    capsys.readouterr()


def test_determinism(capsys):
    first = run(capsys, "moments", "--nmax", "5", "--engine", "all")
    second = run(capsys, "moments", "--nmax", "5", "--engine", "all")
    assert first == second
    a = run(capsys, "cauchy", "--lam", "1", "--re=-1:1:3", "--im", "1:2:2")
    b = run(capsys, "cauchy", "--lam", "1", "--re=-1:1:3", "--im", "1:2:2")
    assert a == b
