"""The certifying decision procedure and its independent verifier.

``certify`` answers 3-colorability for P5-free inputs and always hands back
a witness that a checker with no access to the search code can validate:
a proper 3-colouring, an embedding of one of the six catalog obstructions,
or (when the input is not actually P5-free) an induced P5 showing the class
precondition failed.  ``verify`` is that checker.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from . import catalog
from .coloring import Coloring, three_color, verify_coloring
from .detect import P5Witness, find_induced_p5, is_induced_p5
from .graphs import Graph, bits, from_graph6, is_connected, components, to_graph6
from .subiso import Embedding, find_obstruction, verify_embedding

SCHEMA = "p5cert/1"


@dataclass(frozen=True)
class ThreeColorable:
    coloring: Coloring


@dataclass(frozen=True)
class NotThreeColorable:
    obstruction: catalog.ObstructionId
    embedding: Embedding


@dataclass(frozen=True)
class NotP5Free:
    witness: P5Witness


@dataclass(frozen=True)
class UncolorableNoCertificate:
    """Forced-mode outcome for non-P5-free graphs that are not 3-colorable
    and contain no catalog obstruction.  Certifies nothing; ``verify``
    rejects it."""


Certificate = Union[ThreeColorable, NotThreeColorable, NotP5Free, UncolorableNoCertificate]


class TheoremViolationError(RuntimeError):
    """A P5-free graph was neither 3-colorable nor contained any catalog
    obstruction.  The characterisation this toolkit implements rules that
    out, so reaching here means a defect (most likely in the catalog data);
    it is a build-stopping event, never an expected outcome."""

    def __init__(self, graph: Graph):
        super().__init__(
            "P5-free, not 3-colorable, yet no catalog obstruction embeds: "
            + to_graph6(graph)
        )
        self.graph = graph


def certify(g: Graph) -> Certificate:
    """Decide 3-colorability of a P5-free graph with a verifiable witness.

    The class precondition is checked first: inputs with an induced P5 get a
    NotP5Free certificate instead of a theorem-backed claim.  Disconnected
    graphs are 3-colorable iff every component is; the obstruction for a
    no-answer is searched inside the first non-3-colorable component.
    """
    witness = find_induced_p5(g)
    if witness is not None:
        return NotP5Free(witness)
    return _certify_colorability(g, forced=False)


def certify_forced(g: Graph) -> Certificate:
    """Decide 3-colorability of an arbitrary graph, skipping the P5 gate.

    Obstruction no-certificates are only guaranteed to exist for P5-free
    inputs; other uncolorable graphs may yield UncolorableNoCertificate.
    """
    return _certify_colorability(g, forced=True)


def _certify_colorability(g: Graph, forced: bool) -> Certificate:
    coloring = three_color(g)
    if coloring is not None:
        return ThreeColorable(coloring)
    if is_connected(g):
        target, back = g, None
    else:
        target, back = None, None
        for comp in components(g):
            sub = g.induced(comp)
            if three_color(sub) is None:
                target, back = sub, sorted(bits(comp))
                break
        assert target is not None, "some component must be uncolorable"
    hit = find_obstruction(target)
    if hit is None:
        if forced:
            return UncolorableNoCertificate()
        raise TheoremViolationError(g)
    obstruction_id, embedding = hit
    if back is not None:
        embedding = Embedding(
            embedding.pattern, tuple(back[hv] for hv in embedding.mapping)
        )
    return NotThreeColorable(obstruction_id, embedding)


def verify(g: Graph, certificate: Certificate) -> bool:
    """Independent certificate check; False on any malformed content.

    Shares no search code with ``certify``: colourings are re-scanned edge
    by edge, embeddings re-checked against the named catalog entry (and
    nothing else), and P5 witnesses re-checked pair by pair.
    """
    if isinstance(certificate, ThreeColorable):
        return certificate.coloring.k == 3 and verify_coloring(g, certificate.coloring)
    if isinstance(certificate, NotThreeColorable):
        try:
            entry = catalog.get(certificate.obstruction)
        except KeyError:
            return False
        embedding = Embedding(entry.graph, certificate.embedding.mapping)
        return verify_embedding(g, embedding)
    if isinstance(certificate, NotP5Free):
        return is_induced_p5(g, certificate.witness.vertices)
    return False


# --- JSON wire format ------------------------------------------------------
#
# One object per graph: {"schema": "p5cert/1", "graph": "<graph6>",
# "status": ..., payload}.  Embedding keys use the catalog's conventional
# vertex labels so a certificate can be checked by hand against the
# published drawings.


def certificate_to_json(g: Graph, certificate: Certificate) -> dict:
    out: dict = {"schema": SCHEMA, "graph": to_graph6(g)}
    if isinstance(certificate, ThreeColorable):
        out["status"] = "three_colorable"
        out["coloring"] = list(certificate.coloring.colors)
    elif isinstance(certificate, NotThreeColorable):
        entry = catalog.get(certificate.obstruction)
        out["status"] = "not_three_colorable"
        out["obstruction"] = certificate.obstruction.value
        out["embedding"] = {
            entry.labels[pv]: hv for pv, hv in enumerate(certificate.embedding.mapping)
        }
    elif isinstance(certificate, NotP5Free):
        out["status"] = "not_p5_free"
        out["path"] = list(certificate.witness.vertices)
    elif isinstance(certificate, UncolorableNoCertificate):
        out["status"] = "uncolorable_no_certificate"
    else:
        raise TypeError(f"not a certificate: {certificate!r}")
    return out


class CertificateDecodeError(ValueError):
    """The JSON object does not encode a certificate."""


def certificate_from_json(obj: dict) -> tuple[Graph, Certificate]:
    """Parse a (graph, certificate) pair as produced by certificate_to_json."""
    if not isinstance(obj, dict):
        raise CertificateDecodeError("certificate must be a JSON object")
    try:
        g = from_graph6(obj["graph"])
        status = obj["status"]
    except (KeyError, ValueError) as exc:
        raise CertificateDecodeError(f"bad certificate envelope: {exc}") from exc
    if status == "three_colorable":
        colors = obj.get("coloring")
        if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
            raise CertificateDecodeError("bad coloring payload")
        return g, ThreeColorable(Coloring(3, tuple(colors)))
    if status == "not_three_colorable":
        try:
            obstruction = catalog.ObstructionId(obj.get("obstruction"))
        except ValueError as exc:
            raise CertificateDecodeError(f"unknown obstruction: {exc}") from exc
        entry = catalog.get(obstruction)
        raw = obj.get("embedding")
        if not isinstance(raw, dict):
            raise CertificateDecodeError("bad embedding payload")
        index = entry.label_index()
        mapping = [-1] * entry.order
        for label, hv in raw.items():
            if label not in index or not isinstance(hv, int):
                raise CertificateDecodeError(f"bad embedding entry: {label!r}")
            mapping[index[label]] = hv
        if any(hv < 0 for hv in mapping):
            raise CertificateDecodeError("embedding misses pattern vertices")
        return g, NotThreeColorable(obstruction, Embedding(entry.graph, tuple(mapping)))
    if status == "not_p5_free":
        path = obj.get("path")
        if (
            not isinstance(path, list)
            or len(path) != 5
            or not all(isinstance(v, int) for v in path)
        ):
            raise CertificateDecodeError("bad path payload")
        return g, NotP5Free(P5Witness(tuple(path)))
    if status == "uncolorable_no_certificate":
        return g, UncolorableNoCertificate()
    raise CertificateDecodeError(f"unknown status: {status!r}")


def certificate_to_line(g: Graph, certificate: Certificate) -> str:
    """Stable one-line JSON encoding (byte-identical for identical inputs)."""
    return json.dumps(certificate_to_json(g, certificate), separators=(",", ":"))
