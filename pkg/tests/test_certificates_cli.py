import json
import subprocess
import sys
from fractions import Fraction

import pytest

from pairapprox import certificates, generators, oracles
from pairapprox.certificates import certificate, outcome_certificate, verify_certificate
from pairapprox.cli import main
from pairapprox.graph import Digraph, SetSystem
from pairapprox.io import parse_any, serialize
from pairapprox.solutions import IndependentSet, InvalidCertificate
from pairapprox.tsp_mis import dispatch_tsp_mis


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(serialize(obj))
    return str(path)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# -- certificates ------------------------------------------------------------------------


def test_certificate_fields():
    g = generators.disjoint_cliques([3, 3])
    cert = outcome_certificate(dispatch_tsp_mis(g, Fraction(1, 4)), g)
    assert cert["format"] == certificates.FORMAT
    assert cert["problem"] == "tsp-mis" and cert["side"] == "independent-set" and cert["value"] == 2
    assert cert["eps"] == "1/4" and cert["threshold"] == "15/2" and cert["ratio_bound"] == "4"
    assert verify_certificate(json.loads(certificates.dumps(cert)), g) == 2


def test_verifier_rejects_tampering():
    g = generators.path_graph(4)
    cert = certificate("x", "independent-set", IndependentSet([0, 2]), g)
    bad = dict(cert, value=3)
    with pytest.raises(InvalidCertificate, match="claims"):
        verify_certificate(bad, g)
    bad = dict(cert, witness={"vertices": [0, 1]})
    with pytest.raises(InvalidCertificate):
        verify_certificate(bad, g)
    with pytest.raises(InvalidCertificate, match="different input"):
        verify_certificate(cert, generators.path_graph(5))
    with pytest.raises(InvalidCertificate):
        verify_certificate(dict(cert, format="other"), g)
    with pytest.raises(InvalidCertificate, match="malformed"):
        verify_certificate(dict(cert, witness={}), g)
    opt = dict(cert, optimal=True)
    assert verify_certificate(opt, g) == 2


def test_false_optimality_claim_is_rejected():
    g = generators.path_graph(5)
    cert = certificate("x", "independent-set", IndependentSet([0, 2]), g, optimal=False)
    with pytest.raises(InvalidCertificate, match="exact optimum is 3"):
        verify_certificate(dict(cert, optimal=True), g)


def test_certificate_refuses_invalid_solution():
    g = generators.path_graph(3)
    with pytest.raises(InvalidCertificate):
        certificate("x", "independent-set", IndependentSet([0, 1]), g)
    with pytest.raises(TypeError):
        certificate("x", "acyclic-set", [0], g)
    with pytest.raises(ValueError):
        certificate("x", "nonsense", [0], g)


def test_tour_witness_out_of_range_is_rejected():
    g = generators.complete_graph(3)
    cert = certificate("oracle", "tsp12", [0, 1, 2], g)
    for order in ([0, 1, 5], [0, 1], [0, 0, 1], [-1, 0, 1]):
        with pytest.raises(InvalidCertificate):
            verify_certificate(dict(cert, witness={"order": order}), g)


@pytest.mark.parametrize(
    "side, obj, solution",
    [
        ("clique", generators.complete_graph(4), [0, 1, 2, 3]),
        ("biclique", generators.complete_bipartite(2, 2), ([0, 1], [2, 3])),
        ("set-cover", SetSystem(2, 2, [[0, 1], [1]]), [0]),
        ("hitting-set", SetSystem(2, 2, [[0, 1], [1]]), [1]),
        ("ramsey", generators.cycle_graph(5), 3),
    ],
)
def test_extra_kinds_round_trip(side, obj, solution):
    cert = certificate("x", side, solution, obj)
    assert verify_certificate(json.loads(json.dumps(cert)), obj) == cert["value"]


def test_ramsey_certificate_rejects_weak_bound():
    with pytest.raises(InvalidCertificate):
        certificate("ramsey", "ramsey", 2, generators.cycle_graph(5))


# -- CLI ---------------------------------------------------------------------------------


def test_cli_examples(tmp_path, capsys):
    empty4 = write(tmp_path, "empty4.g", generators.empty_graph(4))
    code, out, _ = run(capsys, "paired", "tsp-mis", empty4, "--eps", "0.5")
    cert = json.loads(out)
    assert code == 0 and cert["side"] == "independent-set" and cert["value"] == 4
    tri = write(tmp_path, "two.g", generators.disjoint_cliques([3, 3]))
    code, out, _ = run(capsys, "oracle", "tsp12-min", tri, "--value-only")
    assert code == 0 and out.strip() == "8"
    cert_path = tmp_path / "cert.json"
    assert run(capsys, "paired", "tsp-mis", tri, "--eps", "1/4", "-o", cert_path, "--certify")[0] == 0
    code, out, _ = run(capsys, "verify", cert_path, tri)
    assert code == 0 and out.startswith("ok independent-set")


def test_cli_closed_loop_every_emitter(tmp_path, capsys):
    g = write(tmp_path, "g.g", generators.random_graph(8, 0.4, seed=3))
    d = write(tmp_path, "d.g", generators.random_digraph(8, 0.3, seed=3))
    s = write(tmp_path, "s.g", SetSystem(3, 4, [[0, 1], [1, 2], [2, 3]]))
    jobs = [
        (["paired", "tsp-mis", g, "--eps", "1/3"], g),
        (["paired", "tsp-mis", g, "--eps", "1/3", "--cover", "path-cover"], g),
        (["paired", "tsp-mis", g, "--eps", "1/3", "--cover", "spanning-forest"], g),
        (["paired", "color-path", g, "--eps", "1/2", "--strategy", "degeneracy"], g),
        (["paired", "directed", d, "--eps", "1/2"], d),
        (["paired", "directed", d, "--eps", "1/2", "--objective", "asym-tsp"], d),
        (["paired", "hadwiger", g, "--eps", "1/4"], g),
    ]
    for problem in sorted(["tsp12-min", "tsp12-max", "mis", "clique", "chromatic", "longest-path", "hadwiger",
                           "biclique"]):
        jobs.append((["oracle", problem, g], g))
    jobs += [(["oracle", "longest-path", d], d), (["oracle", "max-acyclic", d], d), (["oracle", "tsp12-min", d], d)]
    jobs += [(["oracle", "cover", s], s), (["oracle", "hit", s], s)]
    for i, (argv, inp) in enumerate(jobs):
        out = tmp_path / f"c{i}.json"
        assert run(capsys, *argv, "-o", out, "--certify")[0] == 0, argv
        code, text, err = run(capsys, "verify", out, inp)
        assert code == 0, (argv, err)


def test_cli_exit_codes(tmp_path, capsys):
    g = write(tmp_path, "g.g", generators.path_graph(4))
    other = write(tmp_path, "h.g", generators.path_graph(5))
    bad = tmp_path / "bad.g"
    bad.write_text("2\n0 0\n")
    assert run(capsys, "paired", "tsp-mis", bad, "--eps", "1/2")[0] == 1
    assert run(capsys, "paired", "tsp-mis", g, "--eps", "0")[0] == 1
    assert run(capsys, "paired", "tsp-mis", g)[0] == 1  # missing --eps
    assert run(capsys, "paired", "directed", g, "--eps", "1/2")[0] == 1  # graph where digraph expected
    cert = tmp_path / "c.json"
    run(capsys, "paired", "tsp-mis", g, "--eps", "1/2", "-o", cert)
    assert run(capsys, "verify", cert, other)[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "verify", junk, g)[0] == 2
    big = write(tmp_path, "big.g", generators.empty_graph(20))
    assert run(capsys, "oracle", "tsp12-min", big)[0] == 3
    assert run(capsys, "oracle", "mis", tmp_path / "missing.g")[0] == 1


def test_cli_reductions(tmp_path, capsys):
    s = write(tmp_path, "s.txt", SetSystem(2, 3, [[0, 1], [0, 2]]))
    out = tmp_path / "k.txt"
    assert run(capsys, "reduce", "k-amplify", s, "--k", "3", "--kind", "kstar", "-o", out)[0] == 0
    amp = parse_any(out.read_text())
    side = json.loads((tmp_path / "k.txt.map.json").read_text())
    assert side["kind"] == "k*G" and len(side["sets"]) == amp.num_sets
    assert oracles.exact_cover(amp).value == 3 * 2 + 1
    g = write(tmp_path, "p.g", generators.path_graph(3))
    out = tmp_path / "h.g"
    assert run(capsys, "reduce", "tsp-maxtsp", g, "-o", out, "--sidecar", tmp_path / "b.json")[0] == 0
    assert parse_any(out.read_text()).n == 8
    assert json.loads((tmp_path / "b.json").read_text())["blocks"]["clique"] == [6, 8]


def test_cli_ramsey(tmp_path, capsys):
    out = tmp_path / "r.g"
    cert = tmp_path / "r.json"
    assert run(capsys, "ramsey", "build", "--n", 8, "--seed", 1, "-o", out, "--certify", cert)[0] == 0
    assert run(capsys, "verify", cert, out)[0] == 0
    code, text, _ = run(capsys, "ramsey", "verify", out, "--f", 8)
    assert code == 0 and json.loads(text)["ok"]
    assert run(capsys, "ramsey", "verify", out, "--f", 1)[0] == 2
    assert run(capsys, "ramsey", "build", "--n", 64, "--mode", "brute")[0] == 3


def test_cli_corpus_is_deterministic(tmp_path, capsys):
    for family in ("cliques", "random", "paths"):
        a, b = tmp_path / f"{family}a", tmp_path / f"{family}b"
        assert run(capsys, "corpus", "generate", "--family", family, "--n", 12, "--seed", 5, "--count", 3,
                   "--outdir", a)[0] == 0
        run(capsys, "corpus", "generate", "--family", family, "--n", 12, "--seed", 5, "--count", 3, "--outdir", b)
        names = sorted(p.name for p in a.iterdir())
        assert len(names) == 3
        for name in names:
            assert (a / name).read_text() == (b / name).read_text()
            assert parse_any((a / name).read_text()).n == 12
    code, out, _ = run(capsys, "corpus", "generate", "--family", "cliques", "--n", 5)
    assert code == 0 and parse_any(out).n == 5


def test_console_script(tmp_path):
    g = write(tmp_path, "g.g", generators.complete_graph(5))
    proc = subprocess.run(
        [sys.executable, "-m", "pairapprox.cli", "oracle", "mis", g, "--value-only"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"


def test_digraph_certificate_needs_digraph():
    d = Digraph.from_arcs(3, [(0, 1), (1, 2)])
    cert = certificate("oracle", "directed-path", [0, 1, 2], d)
    with pytest.raises(InvalidCertificate):
        verify_certificate(cert, generators.path_graph(3))
