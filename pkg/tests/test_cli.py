import pytest

from invcat.cli import EXIT_BUG, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    return _run


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_generate_check_construct_pipeline(run, write):
    code, text, _ = run("generate", "symmetric-inverse", "2")
    assert code == EXIT_OK and text.startswith("kind inverse")
    x = write("i2.txt", text)
    code, out, _ = run("check", x)
    assert code == EXIT_OK
    code, gtext, _ = run("construct", "g", x)
    assert code == EXIT_OK and gtext.startswith("kind ordered-groupoid")
    g = write("g.txt", gtext)
    code, out, _ = run("check", g)
    assert code == EXIT_OK
    assert "locally_inductive=True" in out and "top_heavy=True" in out
    code, itext, _ = run("construct", "i", g)
    assert code == EXIT_OK
    i = write("ig.txt", itext)
    assert run("roundtrip", i, "--against", x)[0] == EXIT_OK
    assert run("roundtrip", g)[0] == EXIT_OK
    assert run("roundtrip", x)[0] == EXIT_OK


def test_roundtrip_against_mismatch(run, write):
    x = write("i2.txt", run("generate", "symmetric-inverse", "2")[1])
    y = write("i1.txt", run("generate", "symmetric-inverse", "1")[1])
    code, out, _ = run("roundtrip", y, "--against", x)
    assert code == EXIT_BUG
    assert "input equals round-trip image of --against: False" in out


def test_semigroup_commands(run, write):
    s = write("s.txt", run("generate", "closure", "2", "[1:2]")[1])
    code, out, _ = run("info", s)
    assert code == EXIT_OK and "elements: 5" in out and "identity: None" in out
    code, gtext, _ = run("construct", "cg", s)
    assert code == EXIT_OK
    g = write("g.txt", gtext)
    code, stext, _ = run("construct", "s", g)
    assert code == EXIT_OK and stext == open(s).read()
    assert run("roundtrip", s)[0] == EXIT_OK


def test_semicategory_construct(run, write):
    x = write("x.txt", run("generate", "symmetric-inverse", "2")[1])
    code, gtext, _ = run("construct", "g", x, "--semicategory")
    assert code == EXIT_OK
    assert "top " not in gtext
    g = write("g.txt", gtext)
    code, itext, _ = run("construct", "i", g, "--semicategory")
    assert code == EXIT_OK and "semicategory" in itext


def test_info_counts(run, write):
    x = write("x.txt", run("generate", "symmetric-inverse", "2")[1])
    g = write("g.txt", run("construct", "g", x)[1])
    code, out, _ = run("info", g)
    assert "order pairs: 17" in out
    code, out, _ = run("info", x)
    assert "arrows: 7" in out and "total maps: 2" in out and "inverse category: True" in out


def test_partial_functions_fail_check(run, write):
    text = run("generate", "partial-function", "2")[1]
    p = write("pf.txt", text)
    assert run("check", p)[0] == EXIT_OK  # a fine restriction category
    assert run("construct", "g", p)[0] == EXIT_INVALID
    q = write("pf-inv.txt", text.replace("kind restriction", "kind inverse"))
    code, out, _ = run("check", q)
    assert code == EXIT_INVALID
    assert "[1:1,2:1]" in out and "[1:2,2:2]" in out


def test_corrupted_order_is_invalid(run, write):
    x = write("x.txt", run("generate", "symmetric-inverse", "2")[1])
    gtext = run("construct", "g", x)[1]
    g = write("bad.txt", gtext.replace("order [1:2] [1:2,2:1]\n", ""))
    code, out, _ = run("check", g)
    assert code == EXIT_INVALID and "axiom (iii)" in out


def test_construct_i_on_inverse_file(run, write):
    x = write("x.txt", run("generate", "symmetric-inverse", "2")[1])
    code, _, err = run("construct", "i", x)
    assert code == EXIT_INVALID and "ordered-groupoid" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("generate", "symmetric-inverse"),
        ("generate", "symmetric-inverse", "9"),
        ("generate", "symmetric-inverse", "two"),
        ("generate", "closure", "2", "[1:3]"),
        ("frobnicate",),
        ("check", "/nonexistent/file"),
    ],
)
def test_usage_errors(run, argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_parse_error_reports_line(run, write):
    p = write("bad.txt", "kind category\nobject A\narrow f A B\n")
    code, _, err = run("check", p)
    assert code == EXIT_USAGE and "line 3" in err


def test_other_families(run):
    for argv in (
        ("generate", "partial-bijection", "1", "2"),
        ("generate", "cyclic-group", "3"),
        ("generate", "cyclic-group", "3", "--semigroup"),
        ("generate", "semilattice", "2"),
        ("generate", "symmetric-inverse", "2", "--semigroup"),
    ):
        code, text, _ = run(*argv)
        assert code == EXIT_OK and text.startswith("kind ")


def test_oplax_functor_files(run, write, I2):
    from invcat.esn import map_functor
    from invcat.fileformat import serialize_functor
    from invcat.generators import ident_on

    rank = map_functor(I2, I2, lambda f: ident_on(*range(1, f.count(":") + 1)))
    code, out, _ = run("check", write("rank.txt", serialize_functor(rank, I2, I2, oplax=True)))
    assert code == EXIT_OK and "8 strict inequalities" in out
    # the same data checked as a strict functor fails
    assert run("check", write("rank-strict.txt", serialize_functor(rank, I2, I2)))[0] == EXIT_INVALID
    pre = map_functor(I2, I2, lambda f: I2.category.compose(f, "[1:1]"))
    assert run("check", write("pre.txt", serialize_functor(pre, I2, I2, oplax=True)))[0] == EXIT_INVALID
    code, out, _ = run("info", write("rank2.txt", serialize_functor(rank, I2, I2, oplax=True)))
    assert "source: inverse, 1 objects, 7 arrows" in out
