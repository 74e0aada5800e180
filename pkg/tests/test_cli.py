"""Command-line behavior: grammar, output formats, exit codes."""

import json

import pytest

from treehopf.cli import build_parser, main, parse_element
from treehopf.foundations import LinComb
from treehopf.trees import rooted_from_string as rt, Forest
from treehopf.hopf_rooted import KT


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_grafting_product_golden(capsys):
    code, out, _ = run(
        capsys, "product", "--algebra", "gl", "[[]]", "[[][]]"
    )
    assert code == 0
    assert out.strip() == "2*[[][[]]] + [[][][]]"
    # same element as the two-term display with the corolla first
    got = parse_element(out.strip(), "kt")
    want = parse_element("[[][][]] + 2*[[][[]]]", "kt")
    assert got == want


def test_level_count_map_golden(capsys):
    code, out, _ = run(capsys, "map", "--name", "Zstar", "[[][[]]]")
    assert code == 0
    got = parse_element(out.strip(), "qsym")
    want = parse_element("3*M(1,1,1,1) + M(2,1,1) + M(1,2,1)", "qsym")
    assert got == want


def test_enumerate_count_golden(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--kind", "rooted", "--vertices", "5",
        "--count-only",
    )
    assert code == 0
    assert out.strip() == "9"


def test_enumerate_planar_listing(capsys):
    code, out, _ = run(capsys, "enumerate", "--planar", "--vertices", "3")
    assert code == 0
    assert out.split() == ["p[[[]]]", "p[[][]]"]


def test_enumerate_guard(capsys):
    code, _, err = run(capsys, "enumerate", "--vertices", "50")
    assert code == 2
    assert "cap" in err


def test_coproduct_text(capsys):
    code, out, _ = run(capsys, "coproduct", "--algebra", "qsym", "M(2,1)")
    assert code == 0
    assert out.strip() == "1 ⊗ M(2,1) + M(2) ⊗ M(1) + M(2,1) ⊗ 1"


def test_antipode_and_counit(capsys):
    code, out, _ = run(capsys, "antipode", "--algebra", "sym", "e3")
    assert code == 0
    assert out.strip() == "-m(1,1,1) - m(2,1) - m(3)"
    code, out, _ = run(
        capsys, "counit", "--algebra", "nsym", "E(1,2) + 3*1"
    )
    assert code == 0
    assert out.strip() == "3"


def test_pair_kinds(capsys):
    code, out, _ = run(
        capsys, "pair", "--kind", "kt-ck",
        "--left", "[[][]]", "--right", "[] []",
    )
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(
        capsys, "pair", "--kind", "ns-qs",
        "--left", "E(2,1)", "--right", "M(2,1)",
    )
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(
        capsys, "pair", "--kind", "kp-hf",
        "--left", "p[[[]][]]", "--right", "([[]],[])",
    )
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(
        capsys, "pair", "--kind", "sym",
        "--left", "m(2)", "--right", "m(2)",
    )
    assert code == 0 and out.strip() == "-2"


def test_series_elements(capsys):
    code, out, _ = run(capsys, "epsilon", "2")
    assert code == 0
    assert out.strip() == "1/2*[[][]]"
    code, out, _ = run(capsys, "kappa", "2")
    assert code == 0
    assert out.strip() == "[[[]]] + 1/2*[[][]]"
    code, _, err = run(capsys, "kappa", "40")
    assert code == 2
    assert "cap" in err


def test_expand_golden(capsys):
    code, out, _ = run(capsys, "expand", "--vars", "2", "M(2,1)")
    assert code == 0
    assert out.strip() == "x1^2*x2"
    code, out, _ = run(capsys, "expand", "--vars", "2", "M(1,1,1)")
    assert code == 0
    assert out.strip() == "0"


def test_verify_text_and_exit(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "zstar-surjectivity", "--max-degree", "4"
    )
    assert code == 0
    assert "[PASS]" in out
    assert "[FAIL]" not in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "divided-powers",
        "--max-degree", "3", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "divided-powers"
    assert doc["max_degree"] == 3
    assert all(r["status"] == "pass" for r in doc["results"])


def test_verify_bound_refusal(capsys):
    code, _, err = run(
        capsys, "verify", "--suite", "hexagon", "--max-degree", "9"
    )
    assert code == 2
    assert "cap is 7" in err


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_parse_error_exit_codes(capsys):
    code, _, err = run(capsys, "product", "--algebra", "kt", "[[]", "[]")
    assert code == 2
    assert "position" in err
    code, _, err = run(capsys, "coproduct", "--algebra", "qsym", "M(2,")
    assert code == 2
    code, _, err = run(capsys, "antipode", "--algebra", "sym", "q(2)")
    assert code == 2
    code, _, err = run(capsys, "counit", "--algebra", "kt", "")
    assert code == 2
    code, _, err = run(capsys, "product", "--algebra", "kt", "2**[[]]", "[]")
    assert code == 2


def test_product_json_terms(capsys):
    code, out, _ = run(
        capsys, "product", "--algebra", "gl", "--format", "json",
        "[[]]", "[[][]]",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["algebra"] == "kt"
    assert doc["terms"] == [
        {"coefficient": "2", "basis": "[[][[]]]"},
        {"coefficient": "1", "basis": "[[][][]]"},
    ]


def test_map_json_names_domains(capsys):
    code, out, _ = run(
        capsys, "map", "--name", "phistar", "--format", "json", "[[][]]"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["domain"] == "kt"
    assert doc["codomain"] == "sym"
    assert doc["terms"] == [{"coefficient": "2", "basis": "m(1,1)"}]


def test_algebra_aliases_agree(capsys):
    for a, b in [("gl", "kt"), ("hk", "ck"), ("pgl", "kp"),
                 ("foissy", "hf"), ("ns", "nsym"), ("qs", "qsym")]:
        _, out1, _ = run(capsys, "antipode", "--algebra", a,
                         "[[]]" if a in ("gl", "pgl") else
                         ("([[]])" if a == "foissy" else
                          ("[[]]" if a == "hk" else
                           ("E(2)" if a == "ns" else "M(2)"))))
        _, out2, _ = run(capsys, "antipode", "--algebra", b,
                         "[[]]" if b in ("kt", "kp") else
                         ("([[]])" if b == "hf" else
                          ("[[]]" if b == "ck" else
                           ("E(2)" if b == "nsym" else "M(2)"))))
        assert out1 == out2, (a, b)


ROUNDTRIP_CASES = [
    ("kt", "1/2*[[][]] + [[[]]] - 3*[]"),
    ("ck", "[] [[]] + 2*[[[]]] - 1"),
    ("kp", "p[[][[]]] - p[[[]][]]"),
    ("hf", "([[]],[]) - ([],[[]]) + 1/3*([[][]])"),
    ("sym", "m(2,1) + 3*m(1,1,1) - 1/2*m(3)"),
    ("qsym", "M(2,1) - 1/3*M(1,1,1) + M(3)"),
    ("nsym", "E(2,1) + E(1,2) - 2*E(3) + 5*1"),
]


def test_print_parse_print_fixed_point():
    from treehopf.cli import ALGEBRAS

    for ctx, text in ROUNDTRIP_CASES:
        alg = ALGEBRAS[ctx]
        el = parse_element(text, ctx)
        printed = alg.format(el)
        again = parse_element(printed, ctx)
        assert again == el, ctx
        assert alg.format(again) == printed, ctx


def test_parser_canonicalizes_rooted_but_not_planar():
    assert parse_element("[[][[]]]", "kt") == parse_element("[[[]][]]", "kt")
    assert parse_element("[[][[]]]", "kp") != parse_element("[[[]][]]", "kp")
    # chain shorthand
    assert parse_element("l3", "kt") == LinComb.single(rt("[[[]]]"))
    assert parse_element("l2 l2", "ck") == LinComb.single(
        Forest((rt("[[]]"), rt("[[]]")))
    )


def test_parser_whitespace_and_signs():
    a = parse_element("  2*[[]]   -  [[]] ", "kt")
    assert a == LinComb.single(rt("[[]]"))
    b = parse_element("-[[]] + 2*[[]]", "kt")
    assert b == LinComb.single(rt("[[]]"))
    c = parse_element("-2", "kt")
    assert c == -2 * KT.one()


def test_build_parser_smoke():
    parser = build_parser()
    ns = parser.parse_args(
        ["product", "--algebra", "kt", "[[]]", "[[]]"]
    )
    assert ns.command == "product"
