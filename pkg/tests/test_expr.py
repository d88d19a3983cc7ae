from pathlib import Path

import pytest

from algebra.blades import Signature
from algebra.errors import GeneratorOutOfRange, ParseError
from utils.expr import GeneratorRef, Neg, Paren, Product, ScalarLit, Sum, eval_expr, evaluate, format_expr, parse_expr

GOLDEN = Path(__file__).parent / "golden" / "expressions.txt"


def load_corpus():
    cases = []
    for line in GOLDEN.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        head, expression, value = (part.strip() for part in line.split("|"))
        field, p, q, r = head.split()
        sig = Signature.real(int(p), int(q), int(r)) if field == "real" else Signature.complex(int(p), int(q))
        cases.append(pytest.param(sig, expression, value, id=f"{sig.label()} {expression}"))
    return cases


CORPUS = load_corpus()


def test_corpus_size():
    assert len(CORPUS) == 50


@pytest.mark.parametrize("sig, expression, value", CORPUS)
def test_golden_value(sig, expression, value):
    assert str(evaluate(expression, sig)) == value


@pytest.mark.parametrize("sig, expression, value", CORPUS)
def test_golden_round_trip(sig, expression, value):
    ast = parse_expr(expression, sig)
    printed = format_expr(ast)
    assert parse_expr(printed, sig) == ast
    assert eval_expr(parse_expr(printed, sig), sig) == eval_expr(ast, sig)


def test_tree_shapes():
    sig = Signature.real(2)
    assert parse_expr("e1", sig) == GeneratorRef(1)
    assert parse_expr("-e1*e2", sig) == Product((Neg(GeneratorRef(1)), GeneratorRef(2)))
    assert parse_expr("1/2 - (e2)", sig) == Sum((("+", ScalarLit(1, 2)), ("-", Paren(GeneratorRef(2)))))


def test_unreduced_fraction_is_kept():
    sig = Signature.real(1)
    assert format_expr(parse_expr("2/4", sig)) == "2/4"


def test_imaginary_unit_squares_to_minus_one():
    sig = Signature.complex(1)
    assert str(evaluate("i*i", sig)) == "-1"
    assert evaluate("i*e1", sig).parity() == 1


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("   ", 0),
        ("e1 e2", 3),
        ("e1e2", 2),
        ("(e1 + e2", 8),
        ("e1 + ", 5),
        ("e1 $ e2", 3),
        ("1/", 2),
    ],
)
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ParseError) as error:
        parse_expr(text, Signature.real(2))
    assert error.value.position == position
    assert f"at position {position}" in str(error.value)


def test_zero_denominator():
    with pytest.raises(ParseError, match="zero denominator"):
        parse_expr("1/0", Signature.real(1))


def test_imaginary_unit_needs_complex_signature():
    with pytest.raises(ParseError, match="complex"):
        parse_expr("i*e1", Signature.real(2))


@pytest.mark.parametrize("text", ["e3", "e0", "e1*e12"])
def test_generator_out_of_range(text):
    with pytest.raises(GeneratorOutOfRange):
        parse_expr(text, Signature.real(2))
