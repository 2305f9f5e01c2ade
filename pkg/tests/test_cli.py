import json
import subprocess
import sys

import pytest

from galtan.cli import (EXIT_BUDGET, EXIT_FAIL, EXIT_MALFORMED, EXIT_OK,
                        EXIT_UNKNOWN, InstanceError, dump_text, load, loads,
                        main)
from galtan.elevator import data_path
from galtan.locgroup import FiniteGroup
from galtan.suplat import PowerLattice, TableLattice
from galtan.tannaka import FinSite


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


# --------------------------------------------------------------------------
# the instance format

def test_one_line_forms():
    inst = loads("set s : a b *\n"
                 "lattice P : power of s\n"
                 "lattice Q : power 0 1\n"
                 "group g : cyclic 3\n")
    assert inst.objects[("set", "s")] == ("a", "b", "*")
    P = inst.objects[("lattice", "P")]
    assert isinstance(P, PowerLattice) and P.base == ("a", "b", "*")
    assert inst.objects[("lattice", "Q")].base == (0, 1)
    assert inst.objects[("group", "g")].order == 3


def test_block_lattice_closure():
    inst = loads("lattice L\n"
                 "  elems bot a top\n"
                 "  below bot a\n"
                 "  below a top\n"
                 "end\n")
    L = inst.objects[("lattice", "L")]
    assert isinstance(L, TableLattice)
    # bot <= top only through the declared cover; closure is taken
    assert L.leq(L.index("bot"), L.index("top"))


def test_reference_before_declaration():
    with pytest.raises(InstanceError) as err:
        loads("lattice P : power of s\nset s : a b\n")
    assert err.value.line == 1
    assert "before it is declared" in str(err.value)


def test_duplicate_and_unknown_declarations():
    with pytest.raises(InstanceError) as err:
        loads("set s : a\nset s : b\n")
    assert "duplicate set" in str(err.value) and err.value.line == 2
    with pytest.raises(InstanceError) as err:
        loads("widget w : 1 2\n")
    assert err.value.line == 1 and "unknown declaration" in str(err.value)


def test_missing_end_line():
    with pytest.raises(InstanceError) as err:
        loads("group g\n  elems e\n  table e : e\n")
    assert "no end line" in str(err.value)


def test_action_table_must_be_total():
    text = ("group g : cyclic 2\n"
            "action a\n"
            "  group g\n"
            "  points p q\n"
            "  move 0 p -> p\n"
            "  move 0 q -> q\n"
            "  move 1 p -> q\n"
            "end\n")
    with pytest.raises(InstanceError) as err:
        loads(text)
    assert "no move line for 1 on 'q'" in str(err.value)


def test_site_identity_arrow_required():
    text = ("group g : cyclic 1\n"
            "site s\n"
            "  group g\n"
            "  object x : 0\n"
            "  move x 0 0 -> 0\n"
            "end\n")
    with pytest.raises(InstanceError) as err:
        loads(text)
    assert "exactly one identity arrow" in str(err.value)


def test_bundled_z2_site_loads_with_group_ambient():
    inst = load(data_path("z2.site"))
    site = inst.objects[("site", "z2")]
    assert isinstance(site, FinSite)
    assert site.name == "z2"
    assert site.fiber["reg"] == (0, 1)        # integer tokens stay integers
    assert isinstance(site.monoid, FiniteGroup)
    assert site.hopf is not None


@pytest.mark.parametrize("name", ["z2.site", "z3.site", "nonatomic.site",
                                  "sample.inst", "klein.group"])
def test_load_dump_round_trip(name):
    inst = load(data_path(name))
    text = dump_text(inst.items())
    again = loads(text)
    assert again.content == inst.content
    assert again.decls == inst.decls
    # a second round trip is byte stable
    assert dump_text(again.items()) == text


@pytest.mark.parametrize("name", ["z2.site", "z3.site", "nonatomic.site",
                                  "klein.group"])
def test_bundled_files_are_dump_output_plus_header(name):
    raw = open(data_path(name)).read()
    body = [l for l in raw.splitlines() if not l.startswith("--")]
    while body and not body[0]:
        body.pop(0)
    inst = load(data_path(name))
    assert "\n".join(body) + "\n" == dump_text(inst.items())


def test_dump_refuses_unserializable_points():
    with pytest.raises(ValueError):
        dump_text([("set", "s", ("a", "0"))])     # would reload as int
    with pytest.raises(ValueError):
        dump_text([("set", "s", ("a b",))])


def test_dump_needs_ambient_first():
    inst = load(data_path("z2.site"))
    site = inst.objects[("site", "z2")]
    with pytest.raises(ValueError) as err:
        dump_text([("site", "z2", site)])
    assert "dumped first" in str(err.value)


@pytest.mark.parametrize("name,fragment", [
    ("missing_join.lat", "pair has no join: 'x', 'y'"),
    ("broken_site.site", "composite of 'rot' and 'rot' is not an arrow"),
    ("unbalanced.group", "has no two sided inverse"),
])
def test_bad_corpus_refused_with_witness(name, fragment):
    with pytest.raises(InstanceError) as err:
        load(data_path("bad/" + name))
    assert fragment in str(err.value)


# --------------------------------------------------------------------------
# subcommands and exit codes

def test_tannaka_iso_bundled_z2(capsys):
    code, out, _ = run(capsys, "tannaka", "iso", "--site", "z2.site")
    assert code == EXIT_OK
    assert "iso: yes, carrier size 4" in out


def test_tannaka_iso_lazy_z3(capsys):
    code, out, _ = run(capsys, "tannaka", "iso", "--site", "z3")
    assert code == EXIT_OK
    assert "order agreement" in out


def test_tannaka_build_rows(capsys):
    code, out, _ = run(capsys, "tannaka", "build", "--site", "z2")
    assert code == EXIT_OK
    assert "glued pair lattice: pass" in out
    assert "canonical cone: pass" in out


def test_tannaka_key_nonatomic_fails_with_witness(capsys):
    code, out, _ = run(capsys, "tannaka", "key", "--site", "nonatomic.site")
    assert code == EXIT_FAIL
    assert "no pair generator vanishes: fail" in out
    assert "point side" in out


def test_tannaka_lift_nonatomic_names_witnesses(capsys):
    code, out, _ = run(capsys, "tannaka", "lift", "--site", "nonatomic")
    assert code == EXIT_FAIL
    assert "map full: fail" in out and "rel full: fail" in out


def test_galois_build_trivial(capsys):
    code, out, _ = run(capsys, "galois", "build", "--group", "trivial")
    assert code == EXIT_OK
    assert "symmetry frame: pass  2 elements" in out
    assert "isomorphism of group frames" in out


def test_galois_build_z2(capsys):
    code, out, _ = run(capsys, "galois", "build", "--group", "z2")
    assert code == EXIT_OK
    assert "symmetry frame: pass  4 elements" in out
    assert "a group of order 2" in out


def test_galois_build_z3_is_lazy(capsys):
    code, out, _ = run(capsys, "galois", "build", "--group", "z3")
    assert code == EXIT_OK
    assert "lazy, 10 generators" in out


def test_galois_unknown_group(capsys):
    code, _, err = run(capsys, "galois", "build", "--group", "z9")
    assert code == EXIT_UNKNOWN
    assert "unknown group" in err


def test_galois_klein_is_over_budget(capsys):
    code, _, err = run(capsys, "galois", "build", "--group", "klein.group")
    assert code == EXIT_BUDGET


def test_verify_suite_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "s2-props",
                       "--bound", "1")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[-1] == "16 checks, 0 failed"
    assert all(": pass" in l for l in lines[:-1])


def test_verify_sampled_needs_seed(capsys):
    code, _, err = run(capsys, "verify", "--suite", "s2-props-sampled")
    assert code == EXIT_UNKNOWN
    assert "--seed" in err
    code, out, _ = run(capsys, "verify", "--suite", "s2-props-sampled",
                       "--seed", "7", "--bound", "1")
    assert code == EXIT_OK


def test_verify_unknown_suite_and_selector_misuse(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == EXIT_UNKNOWN and "unknown suite" in err
    code, _, err = run(capsys, "verify")
    assert code == EXIT_UNKNOWN
    code, _, err = run(capsys, "verify", "--suite", "s2-props",
                       "--file", "sample.inst")
    assert code == EXIT_UNKNOWN


def test_verify_file_sample(capsys):
    code, out, _ = run(capsys, "verify", "--file", "sample.inst")
    assert code == EXIT_OK
    assert "action swap2: pass" in out
    assert "present wedge: pass" in out


def test_lattice_check_sample(capsys):
    code, out, _ = run(capsys, "lattice", "check", "sample.inst")
    assert code == EXIT_OK
    assert "lattice diamond: pass" in out


def test_frame_check_flags_nondistributive(capsys):
    code, out, _ = run(capsys, "frame", "check", "sample.inst")
    assert code == EXIT_FAIL
    assert "frame diamond: fail" in out and "bilinear" in out
    assert "frame chain3: pass" in out


def test_frame_free_counts(capsys):
    for n, size in [(0, 2), (2, 6), (3, 20)]:
        code, out, _ = run(capsys, "frame", "free", "--bound", str(n))
        assert code == EXIT_OK
        assert "%d elements" % size in out


def test_lattice_check_missing_join_is_malformed(capsys):
    code, _, err = run(capsys, "lattice", "check",
                       data_path("bad/missing_join.lat"))
    assert code == EXIT_MALFORMED
    assert "pair has no join: 'x', 'y'" in err


def test_elevator_check_bundled(capsys):
    code, out, _ = run(capsys, "elevator", "check", "pasting.elev",
                       "pairing_from_square.elev", "square_from_pairing.elev")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "3 checks, 0 failed"


def test_elevator_check_corrupt_fails(capsys):
    code, out, _ = run(capsys, "elevator", "check",
                       data_path("bad/corrupt_position.elev"))
    assert code == EXIT_FAIL
    assert "step 2" in out


def test_elevator_bad_syntax_is_malformed(tmp_path, capsys):
    p = tmp_path / "junk.elev"
    p.write_text("objects A\nnonsense here\n")
    code, _, err = run(capsys, "elevator", "check", str(p))
    assert code == EXIT_MALFORMED
    assert "line 2" in err


def test_elevator_unknown_file(capsys):
    code, _, err = run(capsys, "elevator", "check", "no_such.elev")
    assert code == EXIT_UNKNOWN


def test_budget_cap_stops_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "s2-props",
                       "--bound", "1", "--budget", "100")
    assert code == EXIT_BUDGET
    assert "over the cap" in err


def test_reports_are_byte_identical(capsys):
    argv = ("verify", "--suite", "s2-props-sampled", "--seed", "3",
            "--bound", "1", "--format", "json-lines")
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    rows = [json.loads(l) for l in out1.strip().splitlines()]
    assert rows[-1] == {"checks": 8, "failed": 0}
    assert all(r["verdict"] == "pass" for r in rows[:-1])


def test_text_report_shape(capsys):
    code, out, _ = run(capsys, "tannaka", "key", "--site", "z2")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].startswith("no pair generator vanishes: pass")
    assert lines[-1] == "2 checks, 0 failed"


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == EXIT_UNKNOWN


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "galtan", "tannaka", "iso",
         "--site", "z2.site"],
        capture_output=True, text=True)
    assert out.returncode == EXIT_OK
    assert "iso: yes, carrier size 4" in out.stdout
