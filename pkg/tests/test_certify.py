import json
import random

from p5cert.catalog import ObstructionId, get
from p5cert.certify import (
    NotP5Free,
    NotThreeColorable,
    ThreeColorable,
    UncolorableNoCertificate,
    certificate_from_json,
    certificate_to_json,
    certificate_to_line,
    certify,
    certify_forced,
    verify,
)
from p5cert.coloring import Coloring
from p5cert.detect import P5Witness
from p5cert.enumeration import generate_p5free_corpus
from p5cert.graphs import complete_graph, cycle_graph, from_edge_list, path_graph
from p5cert.subiso import Embedding

from oracles import brute_three_colorable, random_graph
from conftest import grotzsch


def test_k4_yields_obstruction_certificate():
    cert = certify(complete_graph(4))
    assert isinstance(cert, NotThreeColorable)
    assert cert.obstruction is ObstructionId.K4
    assert cert.embedding.mapping == (0, 1, 2, 3)
    assert verify(complete_graph(4), cert)


def test_c5_yields_coloring():
    cert = certify(cycle_graph(5))
    assert isinstance(cert, ThreeColorable)
    assert cert.coloring.colors == (1, 2, 1, 2, 3)
    assert verify(cycle_graph(5), cert)


def test_path5_yields_p5_witness():
    cert = certify(path_graph(5))
    assert isinstance(cert, NotP5Free)
    assert cert.witness.vertices == (0, 1, 2, 3, 4)
    assert verify(path_graph(5), cert)


def test_verify_rejects_wrong_certificates():
    assert not verify(cycle_graph(5), NotThreeColorable(
        ObstructionId.K4, Embedding(complete_graph(4), (0, 1, 2, 3))
    ))
    w5 = get(ObstructionId.W5).graph
    assert not verify(w5, ThreeColorable(Coloring(3, (1, 2, 3, 1, 2, 3))))
    assert not verify(cycle_graph(5), NotP5Free(P5Witness((0, 1, 2, 3, 4))))
    assert not verify(cycle_graph(5), UncolorableNoCertificate())


def test_forced_mode_on_path():
    cert = certify_forced(path_graph(5))
    assert isinstance(cert, ThreeColorable)
    assert set(cert.coloring.colors) <= {1, 2}


def test_forced_mode_on_k5():
    cert = certify_forced(complete_graph(5))
    assert isinstance(cert, NotThreeColorable)
    assert cert.obstruction is ObstructionId.K4


def test_forced_mode_on_grotzsch_has_no_certificate():
    cert = certify_forced(grotzsch())
    assert isinstance(cert, UncolorableNoCertificate)
    assert not verify(grotzsch(), cert)


def test_disconnected_obstruction_is_mapped_back():
    # 3-colorable component first, K4 second.
    edges = [(0, 1)] + [(u + 2, v + 2) for u in range(4) for v in range(u + 1, 4)]
    g = from_edge_list(6, edges)
    cert = certify(g)
    assert isinstance(cert, NotThreeColorable)
    assert cert.obstruction is ObstructionId.K4
    assert cert.embedding.mapping == (2, 3, 4, 5)
    assert verify(g, cert)


def test_disconnected_all_components_colorable():
    g = from_edge_list(6, [(0, 1), (2, 3), (4, 5)])
    cert = certify(g)
    assert isinstance(cert, ThreeColorable)
    assert verify(g, cert)


def test_totality_on_random_graphs(connected_upto_7):
    rng = random.Random(43)
    pool = []
    for _ in range(400):
        pool.append(random_graph(rng.randint(0, 13), rng.random(), rng))
    pool.extend(generate_p5free_corpus(9, 50, seed=7))
    for graphs in connected_upto_7.values():
        pool.extend(graphs)
    for g in pool:
        cert = certify(g)  # must never raise TheoremViolationError
        assert verify(g, cert)


def test_verdict_matches_brute_force_on_p5free():
    for g in generate_p5free_corpus(8, 40, seed=11):
        cert = certify(g)
        assert isinstance(cert, (ThreeColorable, NotThreeColorable))
        assert isinstance(cert, ThreeColorable) == brute_three_colorable(g)


def test_certificates_are_byte_stable():
    rng = random.Random(47)
    for _ in range(100):
        g = random_graph(rng.randint(0, 10), rng.random(), rng)
        assert certificate_to_line(g, certify(g)) == certificate_to_line(g, certify(g))


def test_json_roundtrip():
    for g in (complete_graph(4), cycle_graph(5), path_graph(5)):
        cert = certify(g)
        obj = json.loads(certificate_to_line(g, cert))
        assert obj["schema"] == "p5cert/1"
        g2, cert2 = certificate_from_json(obj)
        assert g2 == g and cert2 == cert
        assert verify(g2, cert2)


def test_embedding_json_uses_labels():
    obj = certificate_to_json(complete_graph(5), certify(complete_graph(5)))
    assert set(obj["embedding"]) == {"w", "x", "y", "z"}


def test_tampered_certificate_fails():
    g = cycle_graph(5)
    obj = certificate_to_json(g, certify(g))
    obj["coloring"][0] = obj["coloring"][1]  # make an edge monochromatic
    g2, cert2 = certificate_from_json(obj)
    assert not verify(g2, cert2)
