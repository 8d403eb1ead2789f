import json

import pytest
from click.testing import CliRunner

from src.cli.main import cli
from src.lp.parser import parse_program
from src.lp.semantics import ht_equivalent
from src.reasoner.entailment import equivalent, equivalent_concepts
from src.syntax.concepts import EMPTY_ONTOLOGY
from src.syntax.parser import parse_concept, parse_ontology

LETHE = "A [= some r.(B and C). some r.(C and D) [= E.\n"
PROGRAM = "a :- not b. b :- not c. e :- d. d :- a.\n"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def files(tmp_path):
    (tmp_path / "empty.dl").write_text("")
    (tmp_path / "lethe.dl").write_text(LETHE)
    (tmp_path / "p.lp").write_text(PROGRAM)
    (tmp_path / "choice.lp").write_text("a :- not b. b :- not a.\n")
    (tmp_path / "double.lp").write_text("a :- not not a.\n")
    (tmp_path / "model.int").write_text("domain 2\nconcept A: 0\nconcept B: 0 1\nrole r: 0-1\n")
    return tmp_path


def test_uniform_interpolant(runner, files):
    result = runner.invoke(cli, ["uinterp", str(files / "lethe.dl"), "--keep", "A,B,D,E,r"])
    assert result.exit_code == 0
    expected = parse_ontology("A [= some r.B. A and all r.(not B or D) [= E.")
    assert equivalent(parse_ontology(result.output), expected)


def test_craig_interpolant_with_empty_ontologies(runner, files):
    empty = str(files / "empty.dl")
    result = runner.invoke(cli, ["cinterp", "--o1", empty, "--o2", empty,
                                 "--c1", "some child.top and all child.Doctor",
                                 "--c2", "some child.(Doctor or Rich)"])
    assert result.exit_code == 0
    interpolant = parse_concept(result.output.strip())
    assert equivalent_concepts(EMPTY_ONTOLOGY, interpolant, parse_concept("some child.Doctor"))


def test_subsumption_failure_exits_one(runner, files):
    result = runner.invoke(cli, ["subsume", str(files / "empty.dl"), "--lhs", "A", "--rhs", "B"])
    assert result.exit_code == 1
    assert result.output.strip() == "not entailed"


def test_structured_output_agrees_with_text(runner, files):
    args = ["subsume", str(files / "lethe.dl"), "--lhs", "A", "--rhs", "some r.C"]
    text = runner.invoke(cli, args)
    structured = runner.invoke(cli, ["--output", "structured"] + args)
    assert text.exit_code == structured.exit_code == 0
    assert json.loads(structured.output)["entailed"] is True


def test_output_is_deterministic(runner, files):
    args = ["--output", "structured", "uinterp", str(files / "lethe.dl"), "--keep", "A,B,D,E,r"]
    assert runner.invoke(cli, args).output == runner.invoke(cli, args).output


def test_syntax_errors_exit_two(runner, files):
    result = runner.invoke(cli, ["subsume", str(files / "empty.dl"), "--lhs", "A and", "--rhs", "B"])
    assert result.exit_code == 2
    assert "error" in result.output


def test_missing_option_exits_two(runner, files):
    assert runner.invoke(cli, ["subsume", str(files / "empty.dl"), "--lhs", "A"]).exit_code == 2


def test_resource_limit_exits_three(runner):
    assert runner.invoke(cli, ["bench", "gen", "counter", "99"]).exit_code == 3


def test_check_reports_each_kind(runner, files):
    assert "ontology with 2 items" in runner.invoke(cli, ["check", str(files / "lethe.dl")]).output
    assert "program with 4 items" in runner.invoke(cli, ["check", str(files / "p.lp")]).output
    assert "interpretation with 2 items" in runner.invoke(cli, ["check", str(files / "model.int")]).output


def test_equivalence_and_difference(runner, files):
    lethe, empty = str(files / "lethe.dl"), str(files / "empty.dl")
    assert runner.invoke(cli, ["equiv", lethe, lethe]).exit_code == 0
    assert runner.invoke(cli, ["equiv", lethe, empty]).exit_code == 1
    result = runner.invoke(cli, ["--output", "structured", "diff", lethe, empty, "--sigma", "A,B,r", "--depth", "1"])
    assert result.exit_code == 1
    assert json.loads(result.output)["witnesses"]


def test_definition(runner, files):
    family = "Parent = some hasChild.top. Parent = Father or Mother. Father [= Man. Mother [= Woman. Man [= not Woman.\n"
    (files / "family.dl").write_text(family)
    result = runner.invoke(cli, ["define", str(files / "family.dl"), "--target", "Mother", "--sigma", "Woman,hasChild"])
    assert result.exit_code == 0
    definition = parse_concept(result.output.strip())
    assert equivalent_concepts(parse_ontology(family), definition, parse_concept("Woman and some hasChild.top"))


def test_alco_existence(runner):
    args = ["cinterp-alco", "--c1", "{a} and some r.{a}", "--c2", "not A or some r.A", "--exists-only"]
    assert runner.invoke(cli, args + ["--sigma", "r"]).exit_code == 1
    assert runner.invoke(cli, args + ["--sigma", "r,a"]).exit_code == 0
    assert runner.invoke(cli, args[:-1] + ["--sigma", "r,a"]).exit_code == 2


def test_countermodel_and_model_check(runner, files):
    result = runner.invoke(cli, ["oracle", "countermodel", str(files / "empty.dl"), "--lhs", "A", "--rhs", "B"])
    assert result.exit_code == 0
    assert result.output.startswith("domain 1")
    (files / "ab.dl").write_text("A [= B.\n")
    assert runner.invoke(cli, ["check-model", str(files / "model.int"), str(files / "ab.dl")]).exit_code == 0
    (files / "ba.dl").write_text("B [= A.\n")
    result = runner.invoke(cli, ["check-model", str(files / "model.int"), str(files / "ba.dl")])
    assert result.exit_code == 1
    assert "B [= A." in result.output


def test_answer_sets_and_ht_models(runner, files):
    result = runner.invoke(cli, ["lp", "as", str(files / "p.lp")])
    assert result.exit_code == 0
    assert result.output.strip() == "{b}"
    (files / "odd.lp").write_text("a :- not a.\n")
    assert runner.invoke(cli, ["lp", "as", str(files / "odd.lp")]).exit_code == 1
    result = runner.invoke(cli, ["--output", "structured", "lp", "ht", str(files / "choice.lp")])
    assert [[], ["a"]] not in json.loads(result.output)["pairs"]
    assert [[], ["a", "b"]] in json.loads(result.output)["pairs"]


def test_forget_and_check(runner, files):
    result = runner.invoke(cli, ["--output", "structured", "lp", "forget", str(files / "p.lp"), "--forget", "d"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["properties"]["W"] and report["properties"]["PP"]
    assert ht_equivalent(parse_program(report["program"]), parse_program("a :- not b. b :- not c. e :- a."),
                         frozenset("abce"))
    args = ["lp", "check", str(files / "choice.lp"), "--candidate", str(files / "double.lp"), "--keep", "a"]
    assert runner.invoke(cli, args + ["--relation", "cautious"]).exit_code == 0
    assert runner.invoke(cli, args + ["--relation", "ht"]).exit_code == 1


def test_bench_commands(runner, tmp_path):
    listing = runner.invoke(cli, ["bench", "list"])
    assert listing.exit_code == 0
    assert "lethe" in listing.output
    assert "resolution with definers" in runner.invoke(cli, ["bench", "show", "lethe"]).output
    assert runner.invoke(cli, ["bench", "show", "nope"]).exit_code == 2
    result = runner.invoke(cli, ["bench", "gen", "counter", "2", "--out-dir", str(tmp_path / "out")])
    assert result.exit_code == 0
    manifest = json.loads((tmp_path / "out" / "counter_2.json").read_text())
    assert manifest["axioms"] == 9 and manifest["goal_depth"] == 3
    assert parse_ontology((tmp_path / "out" / "counter_2.dl").read_text())
    first = runner.invoke(cli, ["bench", "gen", "program", "--seed", "5"]).output
    assert first == runner.invoke(cli, ["bench", "gen", "program", "--seed", "5"]).output
    parse_program(first)


def test_registry_self_check_in_parallel(runner):
    result = runner.invoke(cli, ["--output", "structured", "bench", "check", "--jobs", "4"])
    assert result.exit_code == 0
    assert all(entry["passed"] for entry in json.loads(result.output)["results"])
